use cosr::oracle::{brute_minimum_deletions, random_instance};
use cosr::solver::{BranchEvent, Rule, SolveObserver};
use cosr::*;

/// Records branching events whose row set misses some minimum solution
/// that fits the remaining budget.
#[derive(Default)]
struct SafetyAudit {
    branches: usize,
    unsafe_branches: Vec<String>,
    rules: [usize; 3],
}

impl SolveObserver for SafetyAudit {
    fn on_branch(&mut self, e: &BranchEvent<'_>) {
        self.branches += 1;
        self.rules[match e.rule {
            Rule::Helly(_) => 0,
            Rule::InducedC4 { .. } => 1,
            Rule::UncoveredClique => 2,
        }] += 1;
        let m = &e.instance.matrix;
        for sol in brute_minimum_deletions(m, e.instance.budget).unwrap() {
            if !e.rows.iter().any(|&r| sol.contains(r)) {
                self.unsafe_branches.push(format!(
                    "{:?} on {:?} misses {{{sol}}} in\n{m}",
                    e.rule, e.rows
                ));
            }
        }
    }
}

#[test]
fn every_branch_hits_every_minimum_solution() {
    let mut audit = SafetyAudit::default();
    let solver = CosrSolver::default();
    for seed in 0..400u64 {
        let m = random_instance(seed, 4 + seed as usize % 5, 3 + seed as usize % 6, 0.5).unwrap();
        for d in 1..=3 {
            solver.solve_observed(&m, d, &mut audit).unwrap();
        }
    }
    assert!(
        audit.unsafe_branches.is_empty(),
        "{}",
        audit.unsafe_branches[0]
    );
    assert!(
        audit.rules.iter().all(|&k| k > 0),
        "rule counts {:?}",
        audit.rules
    );
}

#[test]
fn solutions_are_within_budget_and_certified() {
    for seed in 0..200u64 {
        let m = random_instance(seed, 8, 6, 0.6).unwrap();
        for d in 0..=3 {
            let report = cos_r(&m, d).unwrap();
            let Some(rows) = report.solution else {
                continue;
            };
            assert!(rows.len() as i64 <= d);
            let rest = delete_rows(&m, &rows).unwrap();
            assert!(verify_cop(&rest, report.certificate.as_ref().unwrap()).unwrap());
        }
    }
}
