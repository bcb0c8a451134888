//! Golden function families f1..f5 with their published certificates and
//! witness vectors.
//!
//! Every entry is checked at construction: the certificate verifies and is
//! orthogonal on all distinguishing pairs. Witness-vector caveats (the f4
//! complement flip, the orthonormalization requirement for f5, the blank
//! index subtlety when `c_0 > 0`) are recorded as notes instead of being
//! silently corrected.

use std::fmt::Write as _;

use num_traits::{One, ToPrimitive, Zero};

use crate::boolfn::{BitString, PartialBooleanFunction};
use crate::error::{Error, Result};
use crate::feasibility::{verify_certificate, WeightCertificate};
use crate::rational::{ratio, Rational};
use crate::simulator::simulate_with_certificate;
use crate::witness::{
    build_gram_witness, check_orthogonality, evaluate_g, weighted_sign_vector_f64,
};

/// Largest arity the catalog will materialize a domain for.
pub const MAX_CATALOG_VARS: usize = 20;

/// A named function with its certificate, Boolean witness strings, and
/// textual caveats.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub function: PartialBooleanFunction,
    pub certificate: WeightCertificate,
    pub raw_witnesses: Vec<BitString>,
    pub notes: Vec<String>,
}

fn new_entry(
    name: String,
    function: PartialBooleanFunction,
    certificate: WeightCertificate,
    raw_witnesses: Vec<BitString>,
    mut notes: Vec<String>,
) -> Result<CatalogEntry> {
    if !verify_certificate(&function, &certificate)? {
        return Err(Error::Internal(format!(
            "catalog entry {name}: certificate does not verify"
        )));
    }
    if !check_orthogonality(&function, &certificate)? {
        return Err(Error::Internal(format!(
            "catalog entry {name}: certificate is not orthogonal"
        )));
    }
    let mut entry = CatalogEntry {
        name,
        function,
        certificate,
        raw_witnesses,
        notes: Vec::new(),
    };
    notes.extend(witness_notes(&entry));
    entry.notes = notes;
    Ok(entry)
}

/// Enumerates the full cube; callers filter it down to their domain.
fn cube(n: usize) -> Result<impl Iterator<Item = BitString>> {
    if n == 0 || n > MAX_CATALOG_VARS {
        return Err(Error::InvalidParameter(format!(
            "catalog domains are materialized explicitly; n must be in 1..={MAX_CATALOG_VARS}, got {n}"
        )));
    }
    Ok((0..(1u64 << n)).map(move |k| BitString::new(n, k).expect("k fits in n bits")))
}

/// The Deutsch-Jozsa family: 1 on `|x| in {0, n}`, 0 on `|x| = n/2`, with
/// weights `c_0 = 0, c_i = 1/n`.
pub fn make_f1(n: usize) -> Result<CatalogEntry> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "f1 needs an even n >= 2, got {n}"
        )));
    }
    let half = (n / 2) as u32;
    let entries = cube(n)?.filter_map(|x| {
        let w = x.hamming_weight();
        if w == 0 || w == n as u32 {
            Some((x, true))
        } else if w == half {
            Some((x, false))
        } else {
            None
        }
    });
    let function = PartialBooleanFunction::from_entries(n, entries)?;
    let mut weights = vec![Rational::zero()];
    weights.extend(std::iter::repeat_n(ratio(1, n as i64), n));
    let certificate = WeightCertificate::new(weights)?;
    new_entry(
        format!("f1(n={n})"),
        function,
        certificate,
        vec![BitString::ones(n)?],
        Vec::new(),
    )
}

/// The symmetric family: 1 on `|x| = 0`, 0 on `|x| = c` for a single
/// `c >= ceil(n/2)`, with weights `c_0 = (2c-n)/(2c), c_i = 1/(2c)`.
pub fn make_f2(n: usize, c: usize) -> Result<CatalogEntry> {
    if 2 * c < n || c > n || c == 0 {
        return Err(Error::InvalidParameter(format!(
            "f2 needs ceil(n/2) <= c <= n, got n={n}, c={c}"
        )));
    }
    let entries = cube(n)?.filter_map(|x| {
        let w = x.hamming_weight() as usize;
        if w == 0 {
            Some((x, true))
        } else if w == c {
            Some((x, false))
        } else {
            None
        }
    });
    let function = PartialBooleanFunction::from_entries(n, entries)?;
    let blank = ratio(2 * c as i64 - n as i64, 2 * c as i64);
    let mut weights = vec![blank];
    weights.extend(std::iter::repeat_n(ratio(1, 2 * c as i64), n));
    let certificate = WeightCertificate::new(weights)?;
    new_entry(
        format!("f2(n={n},c={c})"),
        function,
        certificate,
        vec![BitString::ones(n)?],
        Vec::new(),
    )
}

/// The quasi-symmetric family for a given weight vector: with
/// `x_hat = sum_i c_i x_i`, the value is 1 at `x_hat in {0, 1}` and 0 at
/// `x_hat = 1/2`. Since `x_0 = 0`, the level `x_hat = 1` is reachable only
/// when `c_0 = 0`.
pub fn make_f3(weights: &WeightCertificate) -> Result<CatalogEntry> {
    let n = weights.n();
    let half = ratio(1, 2);
    let mut has_zero_level_points = false;
    let entries: Vec<(BitString, bool)> = cube(n)?
        .filter_map(|x| {
            let mut x_hat = Rational::zero();
            for i in 1..=n {
                if x.bit(i) == 1 {
                    x_hat += weights.weight(i);
                }
            }
            if x_hat.is_zero() || x_hat.is_one() {
                Some((x, true))
            } else if x_hat == half {
                has_zero_level_points = true;
                Some((x, false))
            } else {
                None
            }
        })
        .collect();
    let function = PartialBooleanFunction::from_entries(n, entries)?;
    let mut notes = Vec::new();
    if !has_zero_level_points {
        notes.push(
            "no input reaches x_hat = 1/2 with these weights; the 0-level of the domain is empty"
                .to_string(),
        );
    }
    new_entry(
        format!("f3(n={n})"),
        function,
        weights.clone(),
        vec![BitString::ones(n)?],
        notes,
    )
}

/// The fixed 4-bit function separating `{0000, 0011, 1100, 1111}` (value 0)
/// from `{0101, 0110, 1001, 1010}` (value 1), with weights
/// `(0, 0, 0, 1/2, 1/2)`.
pub fn make_f4() -> CatalogEntry {
    let zeros = ["0000", "0011", "1100", "1111"];
    let ones = ["0101", "0110", "1001", "1010"];
    let entries = zeros
        .iter()
        .map(|s| (s.parse().unwrap(), false))
        .chain(ones.iter().map(|s| (s.parse().unwrap(), true)));
    let function = PartialBooleanFunction::from_entries(4, entries).expect("fixed table");
    let certificate = WeightCertificate::new(vec![
        Rational::zero(),
        Rational::zero(),
        Rational::zero(),
        ratio(1, 2),
        ratio(1, 2),
    ])
    .expect("fixed weights");
    new_entry(
        "f4".to_string(),
        function,
        certificate,
        vec!["0011".parse().unwrap()],
        Vec::new(),
    )
    .expect("f4 data is internally consistent")
}

fn block_string(pattern: &[(usize, char)]) -> BitString {
    let mut s = String::new();
    for &(len, ch) in pattern {
        for _ in 0..len {
            s.push(ch);
        }
    }
    s.parse().expect("block pattern is a valid bit string")
}

/// The 4n-bit family whose 1-set is six block strings and whose 0-set is cut
/// out by three weight conditions, with weights `c_0 = 0, c_i = 1/(4n)`.
/// The 0-set is the condition-satisfiers minus the 1-set; tests assert the
/// subtraction removes nothing for n <= 4.
pub fn make_f5(n: usize) -> Result<CatalogEntry> {
    if n == 0 || 4 * n > MAX_CATALOG_VARS {
        return Err(Error::InvalidParameter(format!(
            "f5 needs 1 <= n <= {}, got {n}",
            MAX_CATALOG_VARS / 4
        )));
    }
    let width = 4 * n;
    let one_set: Vec<BitString> = vec![
        block_string(&[(width, '0')]),
        block_string(&[(width, '1')]),
        block_string(&[(2 * n, '0'), (2 * n, '1')]),
        block_string(&[(2 * n, '1'), (2 * n, '0')]),
        block_string(&[(n, '0'), (n, '1'), (n, '0'), (n, '1')]),
        block_string(&[(n, '1'), (n, '0'), (n, '1'), (n, '0')]),
    ];
    let mut entries: Vec<(BitString, bool)> = one_set.iter().map(|x| (*x, true)).collect();
    for x in cube(width)? {
        if zero_set_conditions(&x, n) && !one_set.contains(&x) {
            entries.push((x, false));
        }
    }
    let function = PartialBooleanFunction::from_entries(width, entries)?;
    let mut weights = vec![Rational::zero()];
    weights.extend(std::iter::repeat_n(ratio(1, width as i64), width));
    let certificate = WeightCertificate::new(weights)?;
    let witnesses = vec![
        block_string(&[(width, '1')]),
        block_string(&[(2 * n, '1'), (2 * n, '0')]),
        block_string(&[(n, '1'), (n, '0'), (n, '1'), (n, '0')]),
    ];
    new_entry(
        format!("f5(n={n})"),
        function,
        certificate,
        witnesses,
        Vec::new(),
    )
}

/// The three 0-set conditions: total weight 2n, weight n on the first half,
/// and weight n on blocks 1 and 3 combined.
pub fn zero_set_conditions(x: &BitString, n: usize) -> bool {
    debug_assert_eq!(x.n(), 4 * n);
    let weight_range = |from: usize, to: usize| -> usize {
        (from..=to).filter(|&i| x.bit(i) == 1).count()
    };
    x.hamming_weight() as usize == 2 * n
        && weight_range(1, 2 * n) == n
        && weight_range(1, n) + weight_range(2 * n + 1, 3 * n) == n
}

/// The vector `sqrt(D) |w>` for an n-bit witness string; the implicit index
/// 0 carries `w_0 = 0`, matching the `x_0 = 0` input convention.
fn embedded_witness(c: &WeightCertificate, w: &BitString) -> Vec<f64> {
    (0..=c.n())
        .map(|i| {
            if i >= 1 && w.bit(i) == 1 {
                c.weight(i).to_f64().expect("weight in [0,1]").sqrt()
            } else {
                0.0
            }
        })
        .collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `sum_i <u_i|x_D>^2` over the given real vectors.
pub fn witness_sum_of_squares(
    c: &WeightCertificate,
    vectors: &[Vec<f64>],
    x: &BitString,
) -> f64 {
    let xd = weighted_sign_vector_f64(c, x);
    vectors.iter().map(|u| dot(u, &xd).powi(2)).sum()
}

/// `sum_i <u_i|x_D>^2` with the raw (non-orthonormalized) embedded witness
/// vectors.
pub fn raw_witness_sum_of_squares(e: &CatalogEntry, x: &BitString) -> f64 {
    let vectors: Vec<Vec<f64>> = e
        .raw_witnesses
        .iter()
        .map(|w| embedded_witness(&e.certificate, w))
        .collect();
    witness_sum_of_squares(&e.certificate, &vectors, x)
}

/// Applies `sqrt(D)` to each witness string and orthonormalizes by modified
/// Gram-Schmidt. Errors when the embedded set is linearly dependent.
pub fn orthonormalized_witnesses(e: &CatalogEntry) -> Result<Vec<Vec<f64>>> {
    let mut ortho: Vec<Vec<f64>> = Vec::with_capacity(e.raw_witnesses.len());
    for w in &e.raw_witnesses {
        let mut v = embedded_witness(&e.certificate, w);
        for prev in &ortho {
            let proj = dot(prev, &v);
            for (vi, pi) in v.iter_mut().zip(prev) {
                *vi -= proj * pi;
            }
        }
        let norm = dot(&v, &v).sqrt();
        if norm < 1e-9 {
            return Err(Error::InvalidParameter(format!(
                "degenerate witness set: {w} is dependent on the earlier witnesses"
            )));
        }
        for vi in &mut v {
            *vi /= norm;
        }
        ortho.push(v);
    }
    Ok(ortho)
}

/// How a witness-vector family relates to the entry's function on its domain.
#[derive(Clone, Copy, Debug)]
pub struct WitnessAgreement {
    pub max_dev_function: f64,
    pub max_dev_complement: f64,
}

impl WitnessAgreement {
    pub fn matches_function(&self, tol: f64) -> bool {
        self.max_dev_function <= tol
    }

    pub fn matches_complement(&self, tol: f64) -> bool {
        self.max_dev_complement <= tol
    }
}

/// Evaluates `sum_i <v_i|x_D>^2` on every domain point and reports the
/// deviation from `f` and from `1 - f`.
pub fn witness_agreement(e: &CatalogEntry, vectors: &[Vec<f64>]) -> WitnessAgreement {
    let mut max_dev_function: f64 = 0.0;
    let mut max_dev_complement: f64 = 0.0;
    for (x, v) in e.function.entries() {
        let g = witness_sum_of_squares(&e.certificate, vectors, x);
        let fx = f64::from(u8::from(v));
        max_dev_function = max_dev_function.max((g - fx).abs());
        max_dev_complement = max_dev_complement.max((g - (1.0 - fx)).abs());
    }
    WitnessAgreement {
        max_dev_function,
        max_dev_complement,
    }
}

/// Notes derived from the raw witnesses at construction time.
fn witness_notes(e: &CatalogEntry) -> Vec<String> {
    let mut notes = Vec::new();
    if e.raw_witnesses.is_empty() {
        return notes;
    }
    let raw: Vec<Vec<f64>> = e
        .raw_witnesses
        .iter()
        .map(|w| embedded_witness(&e.certificate, w))
        .collect();
    let mut already_orthonormal = true;
    for (i, u) in raw.iter().enumerate() {
        for (j, v) in raw.iter().enumerate().take(i + 1) {
            let expected = if i == j { 1.0 } else { 0.0 };
            if (dot(u, v) - expected).abs() > 1e-12 {
                already_orthonormal = false;
            }
        }
    }
    if !already_orthonormal {
        notes.push(
            "raw witness vectors are not orthonormal under sqrt(D); the sum-of-squares form \
             needs the orthonormalized vectors"
                .to_string(),
        );
    }
    match orthonormalized_witnesses(e) {
        Err(_) => notes.push("witness vectors are linearly dependent after embedding".to_string()),
        Ok(vectors) => {
            let agreement = witness_agreement(e, &vectors);
            if agreement.matches_function(1e-9) {
                // expected; nothing to record
            } else if agreement.matches_complement(1e-9) {
                notes.push(
                    "witness vectors reproduce the complement of the function, not the function \
                     itself"
                        .to_string(),
                );
            } else {
                notes.push(
                    "witness vectors reproduce neither the function nor its complement; with \
                     c_0 > 0 the witness span needs a component on the blank index 0, which an \
                     n-bit witness string cannot carry"
                        .to_string(),
                );
            }
        }
    }
    notes
}

/// Full verification text for an entry: certificate check, orthogonality,
/// Gram rank, exact agreement of `g` with `f`, and the simulated run.
pub fn verification_report(e: &CatalogEntry, tolerance: f64) -> Result<String> {
    let mut out = String::new();
    writeln!(out, "entry: {}", e.name).unwrap();
    writeln!(out, "domain points: {}", e.function.len()).unwrap();
    let verified = verify_certificate(&e.function, &e.certificate)?;
    writeln!(out, "certificate: {}", if verified { "ok" } else { "FAILED" }).unwrap();
    let orthogonal = check_orthogonality(&e.function, &e.certificate)?;
    writeln!(out, "orthogonality: {}", if orthogonal { "ok" } else { "FAILED" }).unwrap();
    let w = build_gram_witness(&e.function, &e.certificate)?;
    writeln!(out, "gram rank: {}", w.rank()).unwrap();
    let exact = e
        .function
        .entries()
        .all(|(x, v)| evaluate_g(&w, x) == Rational::from_integer(u8::from(v).into()));
    writeln!(out, "exact agreement g = f: {}", if exact { "ok" } else { "FAILED" }).unwrap();
    let report = simulate_with_certificate(&e.function, &e.certificate, tolerance)?;
    writeln!(
        out,
        "simulation: max deviation {:.12e} (tolerance {:.1e}), {}",
        report.max_deviation,
        report.tolerance,
        if report.all_pass() { "all pass" } else { "FAILURES" }
    )
    .unwrap();
    if !e.notes.is_empty() {
        writeln!(out, "notes:").unwrap();
        for note in &e.notes {
            writeln!(out, "- {note}").unwrap();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::integer;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    #[test]
    fn f1_n2_is_the_deutsch_function() {
        let e = make_f1(2).unwrap();
        let expected = PartialBooleanFunction::parse("00 1\n11 1\n01 0\n10 0").unwrap();
        assert_eq!(e.function, expected);
        assert_eq!(
            e.certificate.weights(),
            &[integer(0), ratio(1, 2), ratio(1, 2)]
        );
    }

    #[test]
    fn f1_n4_domain_size() {
        let e = make_f1(4).unwrap();
        assert_eq!(e.function.len(), 8); // 2 + C(4,2)
    }

    #[test]
    fn f1_rejects_odd_n() {
        assert!(make_f1(3).is_err());
        assert!(make_f1(0).is_err());
    }

    #[test]
    fn f2_at_5_3_has_uniform_certificate() {
        let e = make_f2(5, 3).unwrap();
        assert_eq!(e.certificate.weights(), vec![ratio(1, 6); 6].as_slice());
        assert_eq!(e.function.len(), 11); // 1 + C(5,3)
    }

    #[test]
    fn f2_boundary_has_zero_blank_weight() {
        let e = make_f2(4, 2).unwrap();
        assert!(e.certificate.weight(0).is_zero());
        // a sub-domain of f1(4): every f2 entry appears in f1 with the same value
        let f1 = make_f1(4).unwrap();
        for (x, v) in e.function.entries() {
            assert_eq!(f1.function.value(x), Some(v));
        }
    }

    #[test]
    fn f2_rejects_small_c() {
        assert!(make_f2(5, 2).is_err());
    }

    #[test]
    fn f2_blank_weight_is_forced() {
        // the 3-subset equalities at n = 5 pin every c_i, so every
        // certificate must put 1/6 on the blank index
        let e = make_f2(5, 3).unwrap();
        let cs = crate::feasibility::build_constraints(&e.function);
        assert_eq!(
            crate::feasibility::minimum_weight(&cs, 0).unwrap(),
            ratio(1, 6)
        );
    }

    #[test]
    fn f3_with_uniform_weights_degenerates_to_f1() {
        let weights = WeightCertificate::new(vec![
            integer(0),
            ratio(1, 4),
            ratio(1, 4),
            ratio(1, 4),
            ratio(1, 4),
        ])
        .unwrap();
        let e = make_f3(&weights).unwrap();
        assert_eq!(e.function, make_f1(4).unwrap().function);
    }

    #[test]
    fn f3_with_f2_weights_contains_f2_domain() {
        let f2 = make_f2(5, 3).unwrap();
        let e = make_f3(&f2.certificate).unwrap();
        for (x, v) in f2.function.entries() {
            assert_eq!(e.function.value(x), Some(v));
        }
        // 2c = 6 > 5 means x_hat = 1 is unreachable, so the domains coincide
        assert_eq!(e.function, f2.function);
        // at the boundary (4,2) the f3 construction adds the |x| = 2c points
        let f2b = make_f2(4, 2).unwrap();
        let eb = make_f3(&f2b.certificate).unwrap();
        assert_eq!(eb.function, make_f1(4).unwrap().function);
    }

    #[test]
    fn f3_mixed_weights_domain() {
        let weights =
            WeightCertificate::new(vec![integer(0), ratio(1, 2), ratio(1, 4), ratio(1, 4)])
                .unwrap();
        let e = make_f3(&weights).unwrap();
        assert_eq!(e.function.value(&bs("000")), Some(true));
        assert_eq!(e.function.value(&bs("100")), Some(false));
        assert_eq!(e.function.value(&bs("011")), Some(false));
        assert_eq!(e.function.value(&bs("111")), Some(true));
        assert_eq!(e.function.len(), 4);
    }

    #[test]
    fn f4_fixed_values() {
        let e = make_f4();
        assert_eq!(e.function.value(&bs("0101")), Some(true));
        assert_eq!(e.function.value(&bs("1100")), Some(false));
        assert!(verify_certificate(&e.function, &e.certificate).unwrap());
        // the recorded caveat about the published witness
        assert!(e.notes.iter().any(|n| n.contains("complement")));
    }

    #[test]
    fn f5_n1_sets() {
        let e = make_f5(1).unwrap();
        let zeros: Vec<String> = e.function.zeros().map(BitString::to_string).collect();
        assert_eq!(zeros, vec!["0110", "1001"]);
        assert_eq!(e.function.len(), 8);
        assert_eq!(e.raw_witnesses.len(), 3);
    }

    #[test]
    fn f5_raw_witnesses_need_orthonormalization() {
        let e = make_f5(1).unwrap();
        let raw_at_zero = raw_witness_sum_of_squares(&e, &bs("0000"));
        assert!((raw_at_zero - 1.5).abs() < 1e-12);
        let vs = orthonormalized_witnesses(&e).unwrap();
        assert_eq!(vs.len(), 3);
        let agreement = witness_agreement(&e, &vs);
        assert!(agreement.matches_function(1e-9));
        assert!(e.notes.iter().any(|n| n.contains("not orthonormal")));
    }

    #[test]
    fn f1_witness_is_already_unit() {
        let e = make_f1(4).unwrap();
        let vs = orthonormalized_witnesses(&e).unwrap();
        assert_eq!(vs.len(), 1);
        let raw = embedded_witness(&e.certificate, &e.raw_witnesses[0]);
        for (a, b) in raw.iter().zip(&vs[0]) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(witness_agreement(&e, &vs).matches_function(1e-9));
    }

    #[test]
    fn f4_witness_reproduces_the_complement() {
        let e = make_f4();
        let vs = orthonormalized_witnesses(&e).unwrap();
        let agreement = witness_agreement(&e, &vs);
        assert!(!agreement.matches_function(1e-9));
        assert!(agreement.matches_complement(1e-9));
    }

    #[test]
    fn f2_witness_misses_the_blank_index() {
        let e = make_f2(5, 3).unwrap();
        let vs = orthonormalized_witnesses(&e).unwrap();
        let agreement = witness_agreement(&e, &vs);
        assert!(!agreement.matches_function(1e-9));
        assert!(!agreement.matches_complement(1e-9));
        assert!(e.notes.iter().any(|n| n.contains("blank index")));
    }

    #[test]
    fn verification_report_mentions_all_checks() {
        let report = verification_report(&make_f1(4).unwrap(), 1e-9).unwrap();
        for needle in ["certificate: ok", "orthogonality: ok", "gram rank: 1", "all pass"] {
            assert!(report.contains(needle), "missing {needle:?} in {report}");
        }
    }

    #[test]
    fn every_entry_passes_the_four_checks() {
        let f3_weights = [
            WeightCertificate::new(vec![integer(0), ratio(1, 2), ratio(1, 4), ratio(1, 4)])
                .unwrap(),
            WeightCertificate::new(vec![ratio(1, 3), ratio(1, 3), ratio(1, 6), ratio(1, 6)])
                .unwrap(),
        ];
        let entries = vec![
            make_f1(2).unwrap(),
            make_f1(4).unwrap(),
            make_f1(6).unwrap(),
            make_f2(5, 3).unwrap(),
            make_f2(4, 2).unwrap(),
            make_f2(3, 2).unwrap(),
            make_f3(&f3_weights[0]).unwrap(),
            make_f3(&f3_weights[1]).unwrap(),
            make_f4(),
            make_f5(1).unwrap(),
            make_f5(2).unwrap(),
        ];
        for entry in entries {
            let report = verification_report(&entry, 1e-9).unwrap();
            assert!(
                !report.contains("FAILED") && report.contains("all pass"),
                "{}: {report}",
                entry.name
            );
        }
    }

    #[test]
    fn f5_condition_set_avoids_the_one_set_up_to_n4() {
        for n in 1..=4usize {
            let e = make_f5(n).unwrap();
            for x in e.function.ones() {
                assert!(
                    !zero_set_conditions(x, n),
                    "f5(n={n}): 1-set member {x} satisfies the 0-set conditions"
                );
            }
            assert!(e.function.zeros().count() > 0, "f5(n={n}) 0-set is empty");
        }
    }
}
