//! Decision of the weight-certificate condition: non-negative weights
//! `c_0..c_n` with `sum(c) = 1` such that every value-distinguishing pair's
//! differing set carries total weight exactly 1/2.
//!
//! All arithmetic in this module is exact; infeasibility is a normal outcome
//! and comes with a contradiction trace.

mod simplex;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::boolfn::{BitString, IndexSet, PartialBooleanFunction};
use crate::error::{Error, Result};
use crate::rational::{format_frac, parse_frac, ratio, Rational};

pub use simplex::{EliminationStep, PivotStep};

/// Non-negative weights `c_0..c_n` summing to exactly 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightCertificate {
    weights: Vec<Rational>,
}

impl WeightCertificate {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.len() < 2 {
            return Err(Error::InvalidCertificate(
                "a certificate needs weights c_0..c_n with n >= 1".into(),
            ));
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::InvalidCertificate(format!(
                "negative weight {}",
                format_frac(w)
            )));
        }
        let total: Rational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::InvalidCertificate(format!(
                "weights sum to {}, expected 1",
                format_frac(&total)
            )));
        }
        Ok(Self { weights })
    }

    pub fn n(&self) -> usize {
        self.weights.len() - 1
    }

    /// Weight `c_i` for `i` in `0..=n`.
    pub fn weight(&self, i: usize) -> &Rational {
        &self.weights[i]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    /// Certificate file format: `n=<int>`, then `c<i>=<p>/<q>` per line.
    pub fn serialize(&self) -> String {
        let mut out = format!("n={}\n", self.n());
        for (i, w) in self.weights.iter().enumerate() {
            out.push_str(&format!("c{i}={}\n", format_frac(w)));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut weights: Vec<Rational> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim_end_matches('\r');
            let lineno = idx + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("n=") {
                if n.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        message: "duplicate header".into(),
                    });
                }
                n = Some(rest.trim().parse().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("invalid header {line:?}"),
                })?);
                continue;
            }
            let Some((name, value)) = line.split_once('=') else {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("malformed line {line:?}"),
                });
            };
            let Some(index) = name.strip_prefix('c').and_then(|s| s.parse::<usize>().ok()) else {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected c<i>=<p>/<q>, got {line:?}"),
                });
            };
            if index != weights.len() {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected c{}, got c{index}", weights.len()),
                });
            }
            let Some(w) = parse_frac(value) else {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("invalid rational {value:?}"),
                });
            };
            weights.push(w);
        }
        let Some(n) = n else {
            return Err(Error::InvalidCertificate("missing n= header".into()));
        };
        if weights.len() != n + 1 {
            return Err(Error::InvalidCertificate(format!(
                "expected {} weights for n={n}, found {}",
                n + 1,
                weights.len()
            )));
        }
        Self::new(weights)
    }
}

/// One deduplicated equality `sum_{i in S} c_i = 1/2` with a witnessing
/// distinguishing pair.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub set: IndexSet,
    pub witness_pair: (BitString, BitString),
}

/// The deduplicated system of differing-set equalities for a function.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    n: usize,
    constraints: Vec<Constraint>,
}

impl ConstraintSystem {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.constraints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.constraints.is_empty()
    }

    pub fn sets(&self) -> impl Iterator<Item = &IndexSet> {
        self.constraints.iter().map(|c| &c.set)
    }
}

/// Collects one equality per distinct differing set over all pairs
/// `(x, y)` with `f(x) != f(y)`; equal-valued pairs contribute nothing.
pub fn build_constraints(f: &PartialBooleanFunction) -> ConstraintSystem {
    let mut by_set: BTreeMap<IndexSet, (BitString, BitString)> = BTreeMap::new();
    for (x, y) in f.distinguishing_pairs() {
        let set = x
            .differing_set(y)
            .expect("domain points share the function arity");
        debug_assert!(!set.is_empty(), "distinct keys cannot have an empty differing set");
        by_set.entry(set).or_insert((*x, *y));
    }
    ConstraintSystem {
        n: f.n(),
        constraints: by_set
            .into_iter()
            .map(|(set, witness_pair)| Constraint { set, witness_pair })
            .collect(),
    }
}

/// Checks a certificate directly against the function: all weights
/// non-negative, total exactly 1, and every distinguishing pair's differing
/// set summing to exactly 1/2. Recomputed pair by pair, independently of the
/// deduplication in [`build_constraints`].
pub fn verify_certificate(f: &PartialBooleanFunction, c: &WeightCertificate) -> Result<bool> {
    if f.n() != c.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            got: c.n(),
        });
    }
    if c.weights().iter().any(Rational::is_negative) {
        return Ok(false);
    }
    let total: Rational = c.weights().iter().sum();
    if !total.is_one() {
        return Ok(false);
    }
    let half = ratio(1, 2);
    for (x, y) in f.distinguishing_pairs() {
        let mut sum = Rational::zero();
        for i in 1..=f.n() {
            if x.bit(i) != y.bit(i) {
                sum += c.weight(i);
            }
        }
        if sum != half {
            return Ok(false);
        }
    }
    Ok(true)
}

/// How a constraint system was refuted.
#[derive(Clone, Debug)]
pub enum ContradictionKind {
    /// The equalities alone are inconsistent; `farkas` holds multipliers with
    /// `y^T A = 0` and `y^T b = residual != 0`.
    Equality {
        row: usize,
        residual: Rational,
        farkas: Vec<Rational>,
    },
    /// Equalities are consistent but admit no non-negative solution; the
    /// phase-one optimum stays positive.
    Inequality { phase_one_cost: Rational },
}

/// The evidence trail for an infeasible system: labelled rows and the
/// sequence of eliminations/pivots that ended in the contradiction.
#[derive(Clone, Debug)]
pub struct ContradictionTrace {
    pub row_labels: Vec<String>,
    pub steps: Vec<String>,
    pub kind: ContradictionKind,
}

impl fmt::Display for ContradictionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "constraint rows:")?;
        for (i, label) in self.row_labels.iter().enumerate() {
            writeln!(f, "  [{i}] {label}")?;
        }
        writeln!(f, "trace:")?;
        for step in &self.steps {
            writeln!(f, "  {step}")?;
        }
        match &self.kind {
            ContradictionKind::Equality {
                row,
                residual,
                farkas,
            } => {
                writeln!(
                    f,
                    "  row [{row}] reduces to 0 = {}, so the equalities are inconsistent",
                    format_frac(residual)
                )?;
                let multipliers: Vec<String> = farkas.iter().map(format_frac).collect();
                writeln!(f, "farkas multipliers: [{}]", multipliers.join(", "))
            }
            ContradictionKind::Inequality { phase_one_cost } => writeln!(
                f,
                "phase-one optimum {} > 0: the equalities force some weight negative",
                format_frac(phase_one_cost)
            ),
        }
    }
}

/// Outcome of the exact feasibility decision.
#[derive(Clone, Debug)]
pub enum FeasibilityOutcome {
    Feasible(WeightCertificate),
    Infeasible(Box<ContradictionTrace>),
}

impl FeasibilityOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, FeasibilityOutcome::Feasible(_))
    }

    pub fn certificate(&self) -> Option<&WeightCertificate> {
        match self {
            FeasibilityOutcome::Feasible(c) => Some(c),
            FeasibilityOutcome::Infeasible(_) => None,
        }
    }
}

/// Equality rows of the system: the total-weight row first, then one row per
/// constraint set in sorted order.
fn equality_rows(cs: &ConstraintSystem) -> (Vec<Vec<Rational>>, Vec<Rational>, Vec<String>) {
    let width = cs.n() + 1;
    let mut rows = vec![vec![Rational::one(); width]];
    let mut rhs = vec![Rational::one()];
    let mut labels = vec!["total: c0 + ... + cn = 1".to_string()];
    for c in cs.constraints() {
        let mut row = vec![Rational::zero(); width];
        for &i in c.set.members() {
            row[i] = Rational::one();
        }
        rows.push(row);
        rhs.push(ratio(1, 2));
        labels.push(format!(
            "S={}: weight sum = 1/2 (pair {}/{})",
            c.set, c.witness_pair.0, c.witness_pair.1
        ));
    }
    (rows, rhs, labels)
}

/// Decides the system `{ sum_{i in S} c_i = 1/2 for all S; sum c_i = 1;
/// c_i >= 0 }` exactly. Equality-only contradictions are caught by Gaussian
/// elimination (with a Farkas certificate); the sign-constrained cases fall
/// to phase-one simplex with Bland's rule. Deterministic: fixed constraint
/// order, fixed pivot rule.
pub fn solve_feasibility(cs: &ConstraintSystem) -> FeasibilityOutcome {
    let (rows, rhs, labels) = equality_rows(cs);
    match simplex::eliminate_equalities(&rows, &rhs) {
        simplex::GaussOutcome::Contradiction {
            steps,
            row,
            residual,
            farkas,
        } => {
            let steps = steps
                .iter()
                .map(|s| {
                    format!(
                        "row[{}] -= {} * row[{}]",
                        s.target,
                        format_frac(&s.factor),
                        s.pivot
                    )
                })
                .collect();
            FeasibilityOutcome::Infeasible(Box::new(ContradictionTrace {
                row_labels: labels,
                steps,
                kind: ContradictionKind::Equality {
                    row,
                    residual,
                    farkas,
                },
            }))
        }
        simplex::GaussOutcome::Consistent => {
            let mut tableau = simplex::Tableau::new(rows, rhs);
            let cost = tableau.phase_one();
            if cost.is_positive() {
                let steps = tableau
                    .pivots
                    .iter()
                    .map(|p| {
                        format!(
                            "pivot: {} enters, {} leaves",
                            tableau.var_name(p.entering),
                            tableau.var_name(p.leaving)
                        )
                    })
                    .collect();
                return FeasibilityOutcome::Infeasible(Box::new(ContradictionTrace {
                    row_labels: labels,
                    steps,
                    kind: ContradictionKind::Inequality {
                        phase_one_cost: cost,
                    },
                }));
            }
            tableau.drop_artificials();
            let certificate = WeightCertificate::new(tableau.solution())
                .expect("a zero phase-one optimum yields a valid certificate");
            FeasibilityOutcome::Feasible(certificate)
        }
    }
}

/// For each index `i`, whether some certificate of the system puts positive
/// weight on `c_i` (decided by maximizing each coordinate). `None` when the
/// system is infeasible.
pub fn positive_support(cs: &ConstraintSystem) -> Option<Vec<bool>> {
    let (rows, rhs, _) = equality_rows(cs);
    let mut tableau = simplex::Tableau::new(rows, rhs);
    if tableau.phase_one().is_positive() {
        return None;
    }
    tableau.drop_artificials();
    let width = cs.n() + 1;
    let mut support = Vec::with_capacity(width);
    for i in 0..width {
        let mut costs = vec![Rational::zero(); width];
        costs[i] = -Rational::one();
        let max = -tableau.optimize(&costs);
        support.push(max.is_positive());
    }
    Some(support)
}

/// The minimum value `c_index` can take over all certificates of the system;
/// a positive result means every certificate genuinely uses that index.
/// `None` when the system is infeasible.
pub fn minimum_weight(cs: &ConstraintSystem, index: usize) -> Option<Rational> {
    let (rows, rhs, _) = equality_rows(cs);
    let mut tableau = simplex::Tableau::new(rows, rhs);
    if tableau.phase_one().is_positive() {
        return None;
    }
    tableau.drop_artificials();
    let mut costs = vec![Rational::zero(); cs.n() + 1];
    costs[index] = Rational::one();
    Some(tableau.optimize(&costs))
}
