//! Named property suites. Each one enumerates every case up to a size
//! budget and reports counterexamples.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::characters::{
    char_table, char_table_with, pieri_multiplicity, restriction_mismatches, sign_of_height, skew_char_ncycle,
    trace_with, young_multiplicity, Method, MnEvaluator,
};
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::shape::{normalized_skew_shapes, Cell, SkewShape};
use crate::specht::{expand, garnir_relation, polytabloid, representing_matrix, Straightener};
use crate::tableau::{canonical_strip_tableau, column_standard_tableaux, SkewTableau};

/// Registered suites with their default budgets.
pub const SUITES: &[(&str, usize)] = &[
    ("straighten-oracle", 6),
    ("garnir-zero", 6),
    ("dominance-lemma", 6),
    ("unique-trace-tableau", 7),
    ("skew-ncycle", 6),
    ("restriction", 7),
    ("pieri-young", 7),
    ("hook-orthogonality", 10),
    ("mn-vs-trace", 6),
];

pub fn registered_suites() -> Vec<&'static str> {
    SUITES.iter().map(|(name, _)| *name).collect()
}

pub fn default_budget(name: &str) -> Result<usize> {
    SUITES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, b)| *b)
        .ok_or_else(|| unknown(name))
}

fn unknown(name: &str) -> Error {
    Error::UnknownSuite {
        name: name.to_string(),
        registered: registered_suites(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Failure {
    fn new(input: impl ToString, expected: impl ToString, actual: impl ToString) -> Self {
        Failure {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub budget: usize,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {} (budget {}): {} cases, {} failures",
            self.suite,
            self.budget,
            self.cases_run,
            self.failures.len()
        )?;
        for fail in &self.failures {
            writeln!(f, "  input:    {}", fail.input)?;
            writeln!(f, "  expected: {}", fail.expected)?;
            writeln!(f, "  actual:   {}", fail.actual)?;
        }
        Ok(())
    }
}

/// Cases and failures from one unit of work.
type Tally = (usize, Vec<Failure>);

fn merge(parts: impl IntoIterator<Item = Tally>) -> Tally {
    parts.into_iter().fold((0, Vec::new()), |(n, mut f), (m, g)| {
        f.extend(g);
        (n + m, f)
    })
}

fn shapes_up_to(budget: usize) -> Vec<SkewShape> {
    (1..=budget).flat_map(normalized_skew_shapes).collect()
}

/// Runs every column-standard tableau of every shape through `check`,
/// one straightening engine per worker.
fn per_column_standard(
    budget: usize,
    check: impl Fn(&mut Straightener, &SkewTableau) -> Option<Failure> + Sync,
) -> Tally {
    merge(
        shapes_up_to(budget)
            .par_iter()
            .map_init(Straightener::new, |engine, s| {
                let tableaux = column_standard_tableaux(s);
                let failures = tableaux.iter().filter_map(|t| check(engine, t)).collect();
                (tableaux.len(), failures)
            })
            .collect::<Vec<_>>(),
    )
}

pub fn run_suite(name: &str, budget: usize) -> Result<SuiteReport> {
    let (cases_run, mut failures) = match name {
        "straighten-oracle" => straighten_oracle(budget),
        "garnir-zero" => garnir_zero(budget),
        "dominance-lemma" => dominance_lemma(budget),
        "unique-trace-tableau" => unique_trace_tableau(budget),
        "skew-ncycle" => skew_ncycle(budget),
        "restriction" => restriction(budget),
        "pieri-young" => pieri_young(budget),
        "hook-orthogonality" => hook_orthogonality(budget),
        "mn-vs-trace" => mn_vs_trace(budget),
        _ => return Err(unknown(name)),
    };
    failures.sort();
    Ok(SuiteReport {
        suite: name.to_string(),
        budget,
        cases_run,
        failures,
    })
}

fn straighten_oracle(budget: usize) -> Tally {
    per_column_standard(budget, |engine, t| {
        let v = engine.straighten(t);
        let standard = v.terms().iter().all(|(s, _)| s.is_standard());
        let lhs = expand(&v);
        let rhs = polytabloid(t);
        (!standard || lhs != rhs).then(|| {
            Failure::new(
                t,
                format!("e(t) with {} tabloids", rhs.len()),
                format!("{} tabloids, standard support: {standard}", lhs.len()),
            )
        })
    })
}

fn garnir_zero(budget: usize) -> Tally {
    merge(
        shapes_up_to(budget)
            .par_iter()
            .map(|s| {
                let cells: Vec<Cell> = s
                    .boxes()
                    .into_iter()
                    .filter(|c| s.contains(Cell::new(c.row, c.col + 1)))
                    .collect();
                let tableaux = column_standard_tableaux(s);
                let mut failures = Vec::new();
                for t in &tableaux {
                    for &cell in &cells {
                        let rel = garnir_relation(t, cell).expect("admissible box");
                        if !rel.is_zero() {
                            failures.push(Failure::new(
                                format!("{t} at ({},{})", cell.row, cell.col),
                                "0",
                                format!("{} nonzero tabloids", rel.len()),
                            ));
                        }
                    }
                }
                (tableaux.len() * cells.len(), failures)
            })
            .collect::<Vec<_>>(),
    )
}

fn dominance_lemma(budget: usize) -> Tally {
    per_column_standard(budget, |engine, t| {
        let top = t.row_straighten();
        let v = engine.straighten(t);
        let lead = v.coefficient(&top);
        let stray: Vec<String> = v
            .terms()
            .into_iter()
            .filter(|(s, _)| **s != top && !top.dominates(s).unwrap_or(false))
            .map(|(s, _)| s.to_string())
            .collect();
        (!lead.is_one() || !stray.is_empty()).then(|| {
            Failure::new(
                t,
                format!("coefficient 1 at {top}, rest dominated"),
                format!("coefficient {lead} at {top}, undominated [{}]", stray.join(" ")),
            )
        })
    })
}

fn unique_trace_tableau(budget: usize) -> Tally {
    let strips: Vec<SkewShape> = shapes_up_to(budget)
        .into_iter()
        .filter(|s| s.is_border_strip())
        .collect();
    let failures = strips
        .iter()
        .filter_map(|s| {
            let n = s.size();
            let m = representing_matrix(s, &Permutation::long_cycle(n)).expect("degree matches");
            let canon = canonical_strip_tableau(s).expect("border strip");
            let value = sign_of_height(s.height().expect("non-empty"));
            let nonzero: Vec<(usize, BigInt)> = m
                .diagonal()
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            let ok = matches!(nonzero.as_slice(), [(i, v)] if m.basis[*i] == canon && *v == value);
            (!ok).then(|| {
                let actual: Vec<String> = nonzero.iter().map(|(i, v)| format!("{}:{v}", m.basis[*i])).collect();
                Failure::new(s, format!("{canon}:{value}"), format!("[{}]", actual.join(" ")))
            })
        })
        .collect();
    (strips.len(), failures)
}

fn skew_ncycle(budget: usize) -> Tally {
    let shapes = shapes_up_to(budget);
    let failures = shapes
        .par_iter()
        .map_init(Straightener::new, |engine, s| {
            let expected = skew_char_ncycle(s).expect("non-empty");
            let actual = trace_with(engine, s, &Permutation::long_cycle(s.size()));
            (expected != actual).then(|| Failure::new(s, expected, actual))
        })
        .flatten()
        .collect();
    (shapes.len(), failures)
}

fn restriction(budget: usize) -> Tally {
    let cases: Vec<(Partition, usize)> = (1..=budget)
        .flat_map(|k| partitions_of(k).flat_map(move |la| (0..=k).map(move |m| (la.clone(), m))))
        .collect();
    let failures = cases
        .par_iter()
        .flat_map_iter(|(la, m)| {
            let n = la.size() - m;
            restriction_mismatches(la, *m, n)
                .expect("sizes add up")
                .into_iter()
                .map(move |bad| {
                    Failure::new(
                        format!("{la} m={m} n={n} alpha={} beta={}", bad.alpha, bad.beta),
                        bad.restricted,
                        bad.summed,
                    )
                })
        })
        .collect();
    (cases.len(), failures)
}

fn pieri_young(budget: usize) -> Tally {
    let cases: Vec<SkewShape> = (1..=budget)
        .flat_map(partitions_of)
        .flat_map(|la| {
            la.subpartitions()
                .into_iter()
                .map(move |mu| SkewShape::new(la.clone(), mu).expect("subpartition"))
        })
        .collect();
    let failures = cases
        .par_iter()
        .flat_map_iter(|s| {
            let (la, mu) = (s.outer(), s.inner());
            let mut out = Vec::new();
            let pieri = pieri_multiplicity(la, mu).map_or_else(|e| e.to_string(), |v| v.to_string());
            let vertical = u64::from(s.is_vertical_strip()).to_string();
            if pieri != vertical {
                out.push(Failure::new(format!("sgn in {s}"), vertical, pieri));
            }
            let young = young_multiplicity(la, mu).map_or_else(|e| e.to_string(), |v| v.to_string());
            let horizontal = u64::from(s.is_horizontal_strip()).to_string();
            if young != horizontal {
                out.push(Failure::new(format!("1 in {s}"), horizontal, young));
            }
            out
        })
        .collect();
    (cases.len(), failures)
}

fn hook_orthogonality(budget: usize) -> Tally {
    let eval = MnEvaluator::new();
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 2..=budget {
        let cycle = Partition::hook(n, 0);
        let mut total = BigInt::zero();
        for la in partitions_of(n) {
            cases += 1;
            let v = eval.value(&la, &cycle).expect("sizes match");
            let expected = if la.is_hook() {
                sign_of_height(la.len() - 1)
            } else {
                BigInt::zero()
            };
            if v != expected {
                failures.push(Failure::new(format!("chi^{la}(({n}))"), &expected, &v));
            }
            total += &v * &v;
        }
        cases += 1;
        if total != BigInt::from(n) {
            failures.push(Failure::new(format!("sum of squares n={n}"), n, total));
        }
    }
    (cases, failures)
}

fn mn_vs_trace(budget: usize) -> Tally {
    let mut cases = 0;
    let mut failures = Vec::new();
    for n in 1..=budget {
        let mn = char_table(n);
        let tr = char_table_with(n, Method::Trace);
        for (i, la) in mn.labels.iter().enumerate() {
            for (j, c) in mn.classes.iter().enumerate() {
                cases += 1;
                if mn.values[i][j] != tr.values[i][j] {
                    failures.push(Failure::new(
                        format!("chi^{la}({c})"),
                        &mn.values[i][j],
                        &tr.values[i][j],
                    ));
                }
            }
        }
        for (label, table) in [("border-strip", &mn), ("trace", &tr)] {
            cases += 2;
            if !table.rows_orthonormal() {
                failures.push(Failure::new(
                    format!("{label} table n={n}"),
                    "orthonormal rows",
                    "not orthonormal",
                ));
            }
            if !table.columns_orthogonal() {
                failures.push(Failure::new(
                    format!("{label} table n={n}"),
                    "orthogonal columns",
                    "not orthogonal",
                ));
            }
        }
    }
    (cases, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_lists_registered() {
        let err = run_suite("nope", 3).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("nope") && msg.contains("mn-vs-trace"), "{msg}");
        assert!(default_budget("nope").is_err());
    }

    #[test]
    fn all_suites_pass_small() {
        for name in registered_suites() {
            let r = run_suite(name, 4).unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.cases_run > 0, "{name}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("garnir-zero", 4).unwrap().to_json();
        let b = run_suite("garnir-zero", 4).unwrap().to_json();
        assert_eq!(a, b);
        assert!(a.starts_with(r#"{"suite":"garnir-zero","budget":4,"cases_run":"#));
    }
}
