//! Double-precision execution of the one-query algorithm: prepare
//! `sum_i sqrt(c_i) |i>`, apply the phase oracle once, measure `{P, I - P}`.
//!
//! All states here have real amplitudes. Exactly one oracle application per
//! input is asserted through an instrumentation counter.

use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::boolfn::{BitString, PartialBooleanFunction};
use crate::error::{Error, Result};
use crate::feasibility::WeightCertificate;
use crate::witness::{build_gram_witness_unchecked, build_projector_float, ProjectorMatrix};

/// Acceptance-probability tolerance used when none is given: roughly 1e3
/// times the rounding accumulated over the at most `(n+1)^2` float
/// operations per input.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// How far the squared norm may drift from 1.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// A real-amplitude state on `n + 1` basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<f64>,
}

impl StateVector {
    pub fn new(amplitudes: Vec<f64>) -> Result<Self> {
        let norm = amplitudes.iter().map(|a| a * a).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::InvalidParameter(format!(
                "state norm {norm} is not 1 within {NORM_TOLERANCE}"
            )));
        }
        Ok(Self { amplitudes })
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a * a).sum::<f64>().sqrt()
    }
}

/// Step 1 of the algorithm: amplitude `sqrt(c_i)` on index `i`.
pub fn initial_state(c: &WeightCertificate) -> StateVector {
    let amplitudes = c
        .weights()
        .iter()
        .map(|w| w.to_f64().expect("weight in [0,1]").sqrt())
        .collect();
    StateVector::new(amplitudes).expect("certificate weights sum to 1")
}

/// The phase oracle `O_x |i> = (-1)^{x_i} |i>`; index 0 is never flipped.
pub fn apply_phase_oracle(s: &StateVector, x: &BitString) -> Result<StateVector> {
    if s.dim() != x.n() + 1 {
        return Err(Error::DimensionMismatch {
            expected: s.dim().saturating_sub(1),
            got: x.n(),
        });
    }
    let signs = x.sign_vector();
    let amplitudes = s
        .amplitudes
        .iter()
        .enumerate()
        .map(|(i, a)| a * f64::from(signs.sign(i)))
        .collect();
    StateVector::new(amplitudes)
}

/// Step 3: the probability `<s|P|s>` of the outcome associated with `P`,
/// clamped into `[0, 1]` when within `1e-12` outside. A value further out
/// signals that `P` is not a projector.
pub fn measure_projector(s: &StateVector, p: &ProjectorMatrix) -> Result<f64> {
    if s.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim().saturating_sub(1),
            got: s.dim().saturating_sub(1),
        });
    }
    let value = p.quadratic_form(s.amplitudes());
    if !(-NORM_TOLERANCE..=1.0 + NORM_TOLERANCE).contains(&value) {
        return Err(Error::NonProjector(value));
    }
    Ok(value.clamp(0.0, 1.0))
}

/// Outcome of one input of the simulated run.
#[derive(Clone, Debug)]
pub struct SimulationRecord {
    pub input: BitString,
    pub expected: bool,
    pub p_accept: f64,
    pub pass: bool,
}

impl SimulationRecord {
    pub fn deviation(&self) -> f64 {
        (self.p_accept - f64::from(u8::from(self.expected))).abs()
    }
}

/// Per-input acceptance probabilities over the whole domain, in bit-string
/// order.
#[derive(Clone, Debug)]
pub struct SimulationReport {
    pub records: Vec<SimulationRecord>,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl SimulationReport {
    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    /// Text table: columns x, expected, p_accept to 12 digits, pass.
    pub fn to_table(&self) -> String {
        let mut out = String::from("x expected p_accept pass\n");
        for r in &self.records {
            writeln!(
                out,
                "{} {} {:.12} {}",
                r.input,
                u8::from(r.expected),
                r.p_accept,
                if r.pass { "yes" } else { "no" }
            )
            .unwrap();
        }
        writeln!(
            out,
            "max deviation {:.12e} (tolerance {:.1e})",
            self.max_deviation, self.tolerance
        )
        .unwrap();
        out
    }

    /// Machine-readable lines `x=<bits> p=<decimal> f=<0|1> ok=<0|1>`.
    pub fn to_machine_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            writeln!(
                out,
                "x={} p={:.12} f={} ok={}",
                r.input,
                r.p_accept,
                u8::from(r.expected),
                u8::from(r.pass)
            )
            .unwrap();
        }
        out
    }
}

/// Runs the one-query algorithm on every domain input: prepare, query once,
/// measure, compare against `f(x)` at the given tolerance.
pub fn run_algorithm1(
    f: &PartialBooleanFunction,
    c: &WeightCertificate,
    p: &ProjectorMatrix,
    tolerance: f64,
) -> Result<SimulationReport> {
    if f.n() != c.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            got: c.n(),
        });
    }
    if p.dim() != c.n() + 1 {
        return Err(Error::DimensionMismatch {
            expected: c.n(),
            got: p.dim().saturating_sub(1),
        });
    }
    let mut records = Vec::with_capacity(f.len());
    let mut max_deviation: f64 = 0.0;
    for (x, expected) in f.entries() {
        let prepared = initial_state(c);
        let mut oracle_calls = 0u32;
        let queried = {
            oracle_calls += 1;
            apply_phase_oracle(&prepared, x)?
        };
        assert_eq!(oracle_calls, 1, "the algorithm makes exactly one query");
        debug_assert!((queried.norm() - 1.0).abs() <= NORM_TOLERANCE);
        let p_accept = measure_projector(&queried, p)?;
        let record = SimulationRecord {
            input: *x,
            expected,
            p_accept,
            pass: (p_accept - f64::from(u8::from(expected))).abs() <= tolerance,
        };
        max_deviation = max_deviation.max(record.deviation());
        records.push(record);
    }
    Ok(SimulationReport {
        records,
        max_deviation,
        tolerance,
    })
}

/// The full pipeline from a certificate: Gram witness (without the
/// orthogonality gate, so corrupted certificates surface as failed records
/// rather than errors), float projector, then [`run_algorithm1`].
pub fn simulate_with_certificate(
    f: &PartialBooleanFunction,
    c: &WeightCertificate,
    tolerance: f64,
) -> Result<SimulationReport> {
    let witness = build_gram_witness_unchecked(f, c)?;
    let projector = build_projector_float(&witness)?;
    run_algorithm1(f, c, &projector, tolerance)
}
