//! Weighted inner products, the exact Gram witness, and the measurement
//! projector.
//!
//! The value `g(x) = <x_D|P|x_D>` is evaluated without square roots: with a
//! basis `b_1..b_m` of the 1-input vectors and `G[a][b] = <b_a|b_b>`, the
//! projection formula `g(x) = k(x)^T G^{-1} k(x)` with
//! `k(x)[a] = <x_D|b_a>` only involves the rational inner products
//! `sum_i c_i x'_i y'_i`. Square roots of the weights appear exclusively in
//! the floating-point projector handed to the simulator.

use std::fmt::Write as _;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::boolfn::{BitString, PartialBooleanFunction};
use crate::error::{Error, Result};
use crate::feasibility::WeightCertificate;
use crate::linalg::RatMatrix;
use crate::rational::{format_frac, Rational};

/// The weighted inner product `<x_D|y_D> = sum_{i=0}^n c_i x'_i y'_i`,
/// computed exactly.
pub fn weighted_inner(
    c: &WeightCertificate,
    x: &BitString,
    y: &BitString,
) -> Result<Rational> {
    if x.n() != c.n() || y.n() != c.n() {
        return Err(Error::DimensionMismatch {
            expected: c.n(),
            got: if x.n() != c.n() { x.n() } else { y.n() },
        });
    }
    let sx = x.sign_vector();
    let sy = y.sign_vector();
    let mut sum = Rational::zero();
    for i in 0..=c.n() {
        let sign = i32::from(sx.sign(i)) * i32::from(sy.sign(i));
        if sign > 0 {
            sum += c.weight(i);
        } else {
            sum -= c.weight(i);
        }
    }
    Ok(sum)
}

/// Whether every value-distinguishing pair has a weighted inner product of
/// exactly zero under `c`.
pub fn check_orthogonality(f: &PartialBooleanFunction, c: &WeightCertificate) -> Result<bool> {
    for (x, y) in f.distinguishing_pairs() {
        if !weighted_inner(c, x, y)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact-rational machinery for evaluating `g(x) = <x_D|P|x_D>`: the kept
/// basis of 1-inputs, the Gram matrix of their vectors, and its exact
/// inverse.
#[derive(Clone, Debug)]
pub struct GramWitness {
    certificate: WeightCertificate,
    basis: Vec<BitString>,
    gram: RatMatrix,
    gram_inverse: RatMatrix,
}

impl GramWitness {
    pub fn certificate(&self) -> &WeightCertificate {
        &self.certificate
    }

    pub fn basis(&self) -> &[BitString] {
        &self.basis
    }

    /// Rank of the 1-input vector family.
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn gram_inverse(&self) -> &RatMatrix {
        &self.gram_inverse
    }
}

/// Builds the Gram witness after checking orthogonality of the certificate
/// on every distinguishing pair; this is what makes `g` agree with `f`.
pub fn build_gram_witness(
    f: &PartialBooleanFunction,
    c: &WeightCertificate,
) -> Result<GramWitness> {
    for (x, y) in f.distinguishing_pairs() {
        let inner = weighted_inner(c, x, y)?;
        if !inner.is_zero() {
            return Err(Error::OrthogonalityViolation {
                x: x.to_string(),
                y: y.to_string(),
                value: format_frac(&inner),
            });
        }
    }
    build_gram_witness_scan(f, c, false)
}

/// Builds the Gram witness without the orthogonality gate. The projector it
/// yields is still the orthogonal projection onto the span of the 1-input
/// vectors, but `g` is only guaranteed to equal `f` when the certificate is
/// orthogonal; the simulator uses this to demonstrate failures of corrupted
/// certificates.
pub fn build_gram_witness_unchecked(
    f: &PartialBooleanFunction,
    c: &WeightCertificate,
) -> Result<GramWitness> {
    build_gram_witness_scan(f, c, false)
}

/// Scan `f^{-1}(1)` in bit-string order (or reversed), keeping inputs whose
/// vector is independent of the kept set. Independence is decided exactly by
/// the bordered-Gram (Schur complement) test, and the inverse is maintained
/// incrementally by the same block formula.
pub fn build_gram_witness_scan(
    f: &PartialBooleanFunction,
    c: &WeightCertificate,
    reverse_scan: bool,
) -> Result<GramWitness> {
    if f.n() != c.n() {
        return Err(Error::DimensionMismatch {
            expected: f.n(),
            got: c.n(),
        });
    }
    let mut ones: Vec<&BitString> = f.ones().collect();
    if reverse_scan {
        ones.reverse();
    }
    let mut basis: Vec<BitString> = Vec::new();
    let mut gram: Vec<Vec<Rational>> = Vec::new();
    let mut inv: Vec<Vec<Rational>> = Vec::new();
    for &x in &ones {
        let k: Vec<Rational> = basis
            .iter()
            .map(|b| weighted_inner(c, x, b))
            .collect::<Result<_>>()?;
        if basis.is_empty() {
            basis.push(*x);
            gram.push(vec![Rational::one()]);
            inv.push(vec![Rational::one()]);
            continue;
        }
        let m = basis.len();
        let t: Vec<Rational> = (0..m)
            .map(|i| (0..m).map(|j| &inv[i][j] * &k[j]).sum())
            .collect();
        let ktk: Rational = (0..m).map(|i| &k[i] * &t[i]).sum();
        // det(G') = det(G) * s; every |x_D| has unit norm so the corner is 1
        let s = Rational::one() - ktk;
        debug_assert!(!s.is_negative(), "Gram matrices are positive semidefinite");
        if s.is_zero() {
            continue; // dependent on the kept set
        }
        for (i, row) in gram.iter_mut().enumerate() {
            row.push(k[i].clone());
        }
        let mut last = k.clone();
        last.push(Rational::one());
        gram.push(last);
        // block inverse: A' = G^{-1} + t t^T / s, border -t/s, corner 1/s
        for i in 0..m {
            for j in 0..m {
                let v = &inv[i][j] + &t[i] * &t[j] / &s;
                inv[i][j] = v;
            }
            inv[i].push(-(&t[i] / &s));
        }
        let mut border: Vec<Rational> = (0..m).map(|j| -(&t[j] / &s)).collect();
        border.push(s.recip());
        inv.push(border);
        basis.push(*x);
    }
    let gram = if gram.is_empty() {
        RatMatrix::zero(0, 0)
    } else {
        RatMatrix::from_rows(gram)
    };
    let gram_inverse = if inv.is_empty() {
        RatMatrix::zero(0, 0)
    } else {
        RatMatrix::from_rows(inv)
    };
    debug_assert!(basis.is_empty() || gram_inverse.mul(&gram).is_identity());
    Ok(GramWitness {
        certificate: c.clone(),
        basis,
        gram,
        gram_inverse,
    })
}

/// The exact value of `<x_D|P|x_D>` with `P` the orthogonal projector onto
/// the span of the 1-input vectors: `k(x)^T G^{-1} k(x)`.
///
/// `x` must match the witness arity (an empty witness accepts anything and
/// yields 0).
pub fn evaluate_g(w: &GramWitness, x: &BitString) -> Rational {
    if w.basis.is_empty() {
        return Rational::zero();
    }
    let k: Vec<Rational> = w
        .basis
        .iter()
        .map(|b| weighted_inner(&w.certificate, x, b).expect("matching arity"))
        .collect();
    let gk = w.gram_inverse.mul_vec(&k);
    k.iter().zip(&gk).map(|(a, b)| a * b).sum()
}

/// Dense real projector onto the witness span, for the simulator.
#[derive(Clone, Debug)]
pub struct ProjectorMatrix {
    entries: Vec<Vec<f64>>,
}

impl ProjectorMatrix {
    pub fn zero(dim: usize) -> Self {
        Self {
            entries: vec![vec![0.0; dim]; dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![vec![0.0; dim]; dim];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { entries }
    }

    pub fn from_rows(entries: Vec<Vec<f64>>) -> Result<Self> {
        let dim = entries.len();
        if entries.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidParameter(
                "projector matrix must be square".into(),
            ));
        }
        Ok(Self { entries })
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn at(&self, i: usize, j: usize) -> f64 {
        self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.entries
    }

    pub fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `v^T P v`.
    pub fn quadratic_form(&self, v: &[f64]) -> f64 {
        self.apply(v).iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.entries[i][i]).sum()
    }

    /// `max |P - P^T|`; zero by construction for witness projectors.
    pub fn symmetry_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                worst = worst.max((self.entries[i][j] - self.entries[j][i]).abs());
            }
        }
        worst
    }

    /// `max |P^2 - P|`.
    pub fn idempotence_defect(&self) -> f64 {
        let dim = self.dim();
        let mut worst: f64 = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                let pp: f64 = (0..dim).map(|k| self.entries[i][k] * self.entries[k][j]).sum();
                worst = worst.max((pp - self.entries[i][j]).abs());
            }
        }
        worst
    }
}

/// The real vector `|x_D> = (sqrt(c_i) * x'_i)_{i=0..n}`.
pub(crate) fn weighted_sign_vector_f64(c: &WeightCertificate, x: &BitString) -> Vec<f64> {
    let signs = x.sign_vector();
    (0..=c.n())
        .map(|i| {
            let w = c.weight(i).to_f64().expect("weight in [0,1]");
            w.sqrt() * f64::from(signs.sign(i))
        })
        .collect()
}

/// Forms the basis vectors in double precision, orthonormalizes them by
/// modified Gram-Schmidt, and sums the outer products. The exact rank test
/// already guaranteed independence, so a vanishing residual signals an
/// internal inconsistency.
pub fn build_projector_float(w: &GramWitness) -> Result<ProjectorMatrix> {
    let dim = w.certificate.n() + 1;
    let mut ortho: Vec<Vec<f64>> = Vec::with_capacity(w.basis.len());
    for b in &w.basis {
        let mut v = weighted_sign_vector_f64(&w.certificate, b);
        for prev in &ortho {
            let proj: f64 = prev.iter().zip(&v).map(|(a, b)| a * b).sum();
            for (vi, pi) in v.iter_mut().zip(prev) {
                *vi -= proj * pi;
            }
        }
        let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm < 1e-9 {
            return Err(Error::Internal(format!(
                "numerically dependent basis vector {b} despite exact independence"
            )));
        }
        for vi in &mut v {
            *vi /= norm;
        }
        ortho.push(v);
    }
    let mut p = ProjectorMatrix::zero(dim);
    for i in 0..dim {
        for j in i..dim {
            let v: f64 = ortho.iter().map(|u| u[i] * u[j]).sum();
            p.entries[i][j] = v;
            p.entries[j][i] = v;
        }
    }
    Ok(p)
}

/// Diagnostic text dump: basis strings, the Gram matrix and its inverse as
/// rational grids, and the float projector to 12 significant digits.
pub fn witness_dump(w: &GramWitness) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "n={}", w.certificate.n()).unwrap();
    writeln!(out, "basis ({} vectors):", w.basis.len()).unwrap();
    for b in &w.basis {
        writeln!(out, "{b}").unwrap();
    }
    let grid = |m: &RatMatrix| -> String {
        (0..m.rows())
            .map(|i| {
                (0..m.cols())
                    .map(|j| format_frac(m.at(i, j)))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    };
    writeln!(out, "gram:").unwrap();
    if w.basis.is_empty() {
        writeln!(out, "(empty)").unwrap();
    } else {
        writeln!(out, "{}", grid(&w.gram)).unwrap();
    }
    writeln!(out, "gram_inverse:").unwrap();
    if w.basis.is_empty() {
        writeln!(out, "(empty)").unwrap();
    } else {
        writeln!(out, "{}", grid(&w.gram_inverse)).unwrap();
    }
    let p = build_projector_float(w)?;
    writeln!(out, "projector:").unwrap();
    for i in 0..p.dim() {
        let row: Vec<String> = (0..p.dim()).map(|j| format!("{:.11e}", p.at(i, j))).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{integer, ratio};

    fn parse(text: &str) -> PartialBooleanFunction {
        PartialBooleanFunction::parse(text).unwrap()
    }

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn cert(weights: Vec<Rational>) -> WeightCertificate {
        WeightCertificate::new(weights).unwrap()
    }

    fn uniform_cert_n4() -> WeightCertificate {
        cert(vec![
            integer(0),
            ratio(1, 4),
            ratio(1, 4),
            ratio(1, 4),
            ratio(1, 4),
        ])
    }

    fn f1_n4() -> PartialBooleanFunction {
        parse("0000 1\n1111 1\n0011 0\n0101 0\n0110 0\n1001 0\n1010 0\n1100 0")
    }

    fn f5_n1() -> PartialBooleanFunction {
        parse("0000 1\n1111 1\n0011 1\n1100 1\n0101 1\n1010 1\n0110 0\n1001 0")
    }

    #[test]
    fn weighted_inner_examples() {
        let c = uniform_cert_n4();
        assert_eq!(
            weighted_inner(&c, &bs("0000"), &bs("0011")).unwrap(),
            integer(0)
        );
        assert_eq!(
            weighted_inner(&c, &bs("0110"), &bs("0110")).unwrap(),
            integer(1)
        );
        assert_eq!(
            weighted_inner(&c, &bs("0000"), &bs("1111")).unwrap(),
            integer(-1)
        );
        assert!(weighted_inner(&c, &bs("000"), &bs("0000")).is_err());
    }

    #[test]
    fn orthogonality_examples() {
        assert!(check_orthogonality(&f1_n4(), &uniform_cert_n4()).unwrap());

        let f4 = parse("0000 0\n0011 0\n1100 0\n1111 0\n0101 1\n0110 1\n1001 1\n1010 1");
        let c4 = cert(vec![
            integer(0),
            integer(0),
            integer(0),
            ratio(1, 2),
            ratio(1, 2),
        ]);
        assert!(check_orthogonality(&f4, &c4).unwrap());

        let perturbed = cert(vec![
            ratio(1, 2),
            ratio(1, 8),
            ratio(1, 8),
            ratio(1, 8),
            ratio(1, 8),
        ]);
        assert!(!check_orthogonality(&f1_n4(), &perturbed).unwrap());
    }

    #[test]
    fn gram_witness_for_f5_n1_is_rank_3_identity() {
        let w = build_gram_witness(&f5_n1(), &uniform_cert_n4()).unwrap();
        let names: Vec<String> = w.basis().iter().map(BitString::to_string).collect();
        assert_eq!(names, vec!["0000", "0011", "0101"]);
        assert!(w.gram().is_identity());
        assert!(w.gram_inverse().is_identity());
    }

    #[test]
    fn gram_witness_for_f1_n4_is_rank_1() {
        let w = build_gram_witness(&f1_n4(), &uniform_cert_n4()).unwrap();
        assert_eq!(w.rank(), 1);
        assert_eq!(w.basis()[0].to_string(), "0000");
    }

    #[test]
    fn gram_witness_for_constant_zero_is_empty() {
        let f = parse("0000 0\n1111 0");
        let w = build_gram_witness(&f, &uniform_cert_n4()).unwrap();
        assert_eq!(w.rank(), 0);
        assert_eq!(evaluate_g(&w, &bs("0110")), integer(0));
    }

    #[test]
    fn evaluate_g_examples_for_f5() {
        let w = build_gram_witness(&f5_n1(), &uniform_cert_n4()).unwrap();
        assert_eq!(evaluate_g(&w, &bs("1111")), integer(1));
        assert_eq!(evaluate_g(&w, &bs("0110")), integer(0));
        // exact agreement on the whole domain
        for (x, v) in f5_n1().entries() {
            assert_eq!(evaluate_g(&w, x), integer(i64::from(v)));
        }
    }

    #[test]
    fn evaluate_g_is_scan_order_invariant() {
        let c = uniform_cert_n4();
        let forward = build_gram_witness_scan(&f5_n1(), &c, false).unwrap();
        let backward = build_gram_witness_scan(&f5_n1(), &c, true).unwrap();
        assert_ne!(forward.basis(), backward.basis());
        for k in 0..16u64 {
            let x = BitString::new(4, k).unwrap();
            assert_eq!(evaluate_g(&forward, &x), evaluate_g(&backward, &x));
        }
    }

    #[test]
    fn orthogonality_gate_rejects_bad_certificates() {
        let perturbed = cert(vec![
            ratio(1, 2),
            ratio(1, 8),
            ratio(1, 8),
            ratio(1, 8),
            ratio(1, 8),
        ]);
        assert!(matches!(
            build_gram_witness(&f1_n4(), &perturbed),
            Err(Error::OrthogonalityViolation { .. })
        ));
        assert!(build_gram_witness_unchecked(&f1_n4(), &perturbed).is_ok());
    }

    #[test]
    fn projector_for_f1_n4_is_quarter_block() {
        let w = build_gram_witness(&f1_n4(), &uniform_cert_n4()).unwrap();
        let p = build_projector_float(&w).unwrap();
        assert_eq!(p.dim(), 5);
        for j in 0..5 {
            assert_eq!(p.at(0, j), 0.0);
            assert_eq!(p.at(j, 0), 0.0);
        }
        for i in 1..5 {
            for j in 1..5 {
                assert!((p.at(i, j) - 0.25).abs() < 1e-12);
            }
        }
        assert_eq!(p.symmetry_defect(), 0.0);
        assert!(p.idempotence_defect() <= 1e-9);
    }

    #[test]
    fn projector_for_f5_n1_has_trace_3() {
        let w = build_gram_witness(&f5_n1(), &uniform_cert_n4()).unwrap();
        let p = build_projector_float(&w).unwrap();
        assert!((p.trace() - 3.0).abs() <= 1e-9);
        assert!(p.idempotence_defect() <= 1e-9);
    }

    #[test]
    fn empty_witness_projector_is_zero() {
        let f = parse("0000 0");
        let w = build_gram_witness(&f, &uniform_cert_n4()).unwrap();
        let p = build_projector_float(&w).unwrap();
        assert_eq!(p.trace(), 0.0);
    }

    #[test]
    fn float_and_exact_projection_agree() {
        let w = build_gram_witness(&f5_n1(), &uniform_cert_n4()).unwrap();
        let p = build_projector_float(&w).unwrap();
        for k in 0..16u64 {
            let x = BitString::new(4, k).unwrap();
            let exact = evaluate_g(&w, &x).to_f64().unwrap();
            let xd = weighted_sign_vector_f64(&uniform_cert_n4(), &x);
            assert!((p.quadratic_form(&xd) - exact).abs() <= 1e-9);
        }
    }

    #[test]
    fn dump_contains_all_sections() {
        let w = build_gram_witness(&f5_n1(), &uniform_cert_n4()).unwrap();
        let dump = witness_dump(&w).unwrap();
        for section in ["basis", "gram:", "gram_inverse:", "projector:"] {
            assert!(dump.contains(section), "missing {section}");
        }
    }
}
