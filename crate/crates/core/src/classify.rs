//! Classification of partial Boolean functions: the degree-2 necessary
//! condition, full one-query decisions, exhaustive scans over small cubes
//! with canonical deduplication, and the total-function characterization
//! check.
//!
//! Scans partition their enumeration range across workers (capped by the
//! `ONEQ_THREADS` environment variable) and merge results in code order, so
//! summaries are independent of worker count and scheduling.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::boolfn::{
    canonical_form, canonical_form_opts, isomorphism_group, BitString, PartialBooleanFunction,
    DEFAULT_CANONICAL_BUDGET,
};
use crate::catalog::make_f4;
use crate::error::{Error, Result};
use crate::feasibility::{
    build_constraints, minimum_weight, solve_feasibility, verify_certificate, ContradictionTrace,
    FeasibilityOutcome, WeightCertificate,
};
use crate::linalg::system_is_consistent;
use crate::rational::{integer, Rational};
use crate::witness::{build_gram_witness, evaluate_g};

/// One-query verdict for a single function.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Decision {
    OneQuery,
    NotOneQuery,
}

/// Result of the capped degree search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DegreeBound {
    Exact(usize),
    ExceedsCap(usize),
}

impl DegreeBound {
    pub fn exceeds_cap(&self) -> bool {
        matches!(self, DegreeBound::ExceedsCap(_))
    }
}

impl std::fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DegreeBound::Exact(d) => write!(f, "{d}"),
            DegreeBound::ExceedsCap(cap) => write!(f, ">{cap}"),
        }
    }
}

/// Everything the classifier learned about one function.
#[derive(Clone, Debug)]
pub struct Classification {
    pub decision: Decision,
    pub certificate: Option<WeightCertificate>,
    pub degree: DegreeBound,
    /// Canonical representative; absent above the canonical-search budget.
    pub canonical: Option<PartialBooleanFunction>,
    pub trace: Option<Box<ContradictionTrace>>,
    pub notes: Vec<String>,
}

/// Smallest `d <= cap` such that some real multilinear polynomial with
/// monomials of degree `<= d` agrees with `f` on every domain point, decided
/// by exact consistency of the coefficient system.
pub fn min_degree(f: &PartialBooleanFunction, cap: usize) -> Result<DegreeBound> {
    if cap > f.n() {
        return Err(Error::InvalidParameter(format!(
            "degree cap {cap} exceeds the arity {}",
            f.n()
        )));
    }
    for d in 0..=cap {
        if degree_fits(f, d) {
            return Ok(DegreeBound::Exact(d));
        }
    }
    Ok(DegreeBound::ExceedsCap(cap))
}

/// Monomials as variable masks (bit `i` stands for `x_{i+1}`), all sizes up
/// to `d`, in mask order.
fn monomials_up_to(n: usize, d: usize) -> Vec<u64> {
    (0..(1u64 << n))
        .filter(|t| (t.count_ones() as usize) <= d)
        .collect()
}

fn monomial_value(x: &BitString, t: u64) -> bool {
    let mut t = t;
    while t != 0 {
        let i = t.trailing_zeros() as usize;
        if x.bit(i + 1) == 0 {
            return false;
        }
        t &= t - 1;
    }
    true
}

fn degree_fits(f: &PartialBooleanFunction, d: usize) -> bool {
    let monomials = monomials_up_to(f.n(), d);
    let rows: Vec<Vec<Rational>> = f
        .entries()
        .map(|(x, _)| {
            monomials
                .iter()
                .map(|&t| integer(i64::from(monomial_value(x, t))))
                .collect()
        })
        .collect();
    let rhs: Vec<Rational> = f.entries().map(|(_, v)| integer(i64::from(v))).collect();
    system_is_consistent(&rows, &rhs)
}

/// Re-proves a solver certificate: it verifies, and the Gram witness built
/// from it reproduces `f` exactly on the whole domain. A failure here
/// falsifies the implementation, so it surfaces as an internal error.
fn confirm_certificate(f: &PartialBooleanFunction, c: &WeightCertificate) -> Result<()> {
    if !verify_certificate(f, c)? {
        return Err(Error::Internal(
            "solver returned a certificate that does not verify".into(),
        ));
    }
    let w = build_gram_witness(f, c)?;
    for (x, v) in f.entries() {
        if evaluate_g(&w, x) != integer(i64::from(v)) {
            return Err(Error::Internal(format!(
                "certificate found but g({x}) != f({x})"
            )));
        }
    }
    Ok(())
}

/// Full one-query decision: the degree filter first (degree above 2 rules
/// the function out), then exact feasibility; positive answers are always
/// re-proved through the Gram witness.
pub fn is_one_query(f: &PartialBooleanFunction) -> Result<Classification> {
    let cap = 2.min(f.n());
    let degree = min_degree(f, cap)?;
    let canonical = if f.n() <= DEFAULT_CANONICAL_BUDGET {
        Some(canonical_form(f)?)
    } else {
        None
    };
    let mut notes = Vec::new();
    if f.is_constant() {
        notes.push("degenerate: constant".to_string());
    }
    if degree.exceeds_cap() {
        return Ok(Classification {
            decision: Decision::NotOneQuery,
            certificate: None,
            degree,
            canonical,
            trace: None,
            notes,
        });
    }
    match solve_feasibility(&build_constraints(f)) {
        FeasibilityOutcome::Feasible(certificate) => {
            confirm_certificate(f, &certificate)?;
            Ok(Classification {
                decision: Decision::OneQuery,
                certificate: Some(certificate),
                degree,
                canonical,
                trace: None,
                notes,
            })
        }
        FeasibilityOutcome::Infeasible(trace) => Ok(Classification {
            decision: Decision::NotOneQuery,
            certificate: None,
            degree,
            canonical,
            trace: Some(trace),
            notes,
        }),
    }
}

/// One scanned function (or class representative when deduplicating).
#[derive(Clone, Debug)]
pub struct Representative {
    /// Enumeration code of the representative: the truth-table mask for
    /// total scans, the base-3 assignment code for partial scans.
    pub key: u64,
    pub function: PartialBooleanFunction,
    pub decision: Decision,
    pub degree: DegreeBound,
    pub certificate: Option<WeightCertificate>,
    /// Whether every certificate of this function puts positive weight on
    /// the blank index 0 (only computed for one-query entries).
    pub requires_blank_weight: bool,
    /// Number of scanned functions in the class (1 without deduplication).
    pub class_size: u64,
}

/// Aggregated scan results.
#[derive(Clone, Debug)]
pub struct SearchSummary {
    pub n: usize,
    pub total_only: bool,
    pub dedup: bool,
    pub examined: u64,
    pub one_query_functions: u64,
    /// Canonical class counts under the full group, when deduplicating.
    pub classes: Option<u64>,
    pub one_query_classes: Option<u64>,
    /// The same counts with output negation excluded from the group.
    pub classes_without_output_negation: Option<u64>,
    pub one_query_classes_without_output_negation: Option<u64>,
    /// Whether the one-query total functions are exactly the constants,
    /// dictators, and two-variable parities up to isomorphism (total scans
    /// only).
    pub characterization_holds: Option<bool>,
    pub representatives: Vec<Representative>,
}

impl SearchSummary {
    /// Representatives classified one-query, each carrying its certificate.
    pub fn one_query_representatives(&self) -> impl Iterator<Item = &Representative> {
        self.representatives
            .iter()
            .filter(|r| r.decision == Decision::OneQuery)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "scan: n={} mode={} dedup={}",
            self.n,
            if self.total_only { "total" } else { "partial" },
            self.dedup
        )
        .unwrap();
        writeln!(out, "examined: {}", self.examined).unwrap();
        writeln!(out, "one-query functions: {}", self.one_query_functions).unwrap();
        if let (Some(classes), Some(oq)) = (self.classes, self.one_query_classes) {
            writeln!(out, "canonical classes: {classes} ({oq} one-query)").unwrap();
        }
        if let (Some(classes), Some(oq)) = (
            self.classes_without_output_negation,
            self.one_query_classes_without_output_negation,
        ) {
            writeln!(
                out,
                "canonical classes without output negation: {classes} ({oq} one-query)"
            )
            .unwrap();
        }
        if let Some(holds) = self.characterization_holds {
            writeln!(
                out,
                "total-function characterization (constants, dictators, two-variable parities): {}",
                if holds { "confirmed" } else { "VIOLATED" }
            )
            .unwrap();
        }
        let blank = self
            .one_query_representatives()
            .filter(|r| r.requires_blank_weight)
            .count();
        writeln!(
            out,
            "one-query entries requiring positive blank weight c0: {blank}"
        )
        .unwrap();
        writeln!(out, "representatives:").unwrap();
        for r in &self.representatives {
            let cert = r
                .certificate
                .as_ref()
                .map(|c| {
                    c.weights()
                        .iter()
                        .map(crate::rational::format_frac)
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .unwrap_or_else(|| "-".to_string());
            writeln!(
                out,
                "key={} size={} decision={} degree={} certificate={}",
                r.key,
                r.class_size,
                match r.decision {
                    Decision::OneQuery => "one-query",
                    Decision::NotOneQuery => "not-one-query",
                },
                r.degree,
                cert
            )
            .unwrap();
        }
        out
    }
}

fn worker_count() -> usize {
    std::env::var("ONEQ_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&k| k >= 1)
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(std::num::NonZeroUsize::get)
                .unwrap_or(1)
        })
}

/// Maps `classify` over `0..total` on worker threads, merging results in
/// code order.
fn parallel_scan<T: Send>(
    total: u64,
    classify: impl Fn(u64) -> Result<Option<T>> + Sync,
) -> Result<Vec<T>> {
    let workers = worker_count().min(total.max(1) as usize).max(1);
    let chunk = total.div_ceil(workers as u64);
    let results: Vec<Result<Vec<T>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers as u64)
            .map(|w| {
                let classify = &classify;
                let start = w * chunk;
                let end = ((w + 1) * chunk).min(total);
                scope.spawn(move || {
                    let mut local = Vec::new();
                    for code in start..end {
                        if let Some(item) = classify(code)? {
                            local.push(item);
                        }
                    }
                    Ok(local)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });
    let mut merged = Vec::new();
    for r in results {
        merged.extend(r?);
    }
    Ok(merged)
}

/// Truth-table mask of a total function: bit `k` is the value at the point
/// with numeric value `k`.
fn encode_total(f: &PartialBooleanFunction) -> u64 {
    let mut mask = 0u64;
    for (x, v) in f.entries() {
        if v {
            mask |= 1 << x.raw();
        }
    }
    mask
}

fn decode_total(n: usize, mask: u64) -> PartialBooleanFunction {
    let entries = (0..(1u64 << n)).map(|k| {
        (
            BitString::new(n, k).expect("k fits in n bits"),
            (mask >> k) & 1 == 1,
        )
    });
    PartialBooleanFunction::from_entries(n, entries).expect("total functions are never empty")
}

/// Base-3 assignment code over the cube in bit-string order: digit `k` is
/// 0 for undefined, 1 for value 0, 2 for value 1.
fn encode_partial(f: &PartialBooleanFunction) -> u64 {
    let mut code = 0u64;
    for (x, v) in f.entries() {
        let digit = if v { 2u64 } else { 1u64 };
        code += digit * 3u64.pow(x.raw() as u32);
    }
    code
}

fn decode_partial(n: usize, code: u64) -> Option<PartialBooleanFunction> {
    let size = 1u32 << n;
    let mut rest = code;
    let mut entries = Vec::new();
    for k in 0..size {
        let digit = rest % 3;
        rest /= 3;
        if digit != 0 {
            entries.push((
                BitString::new(n, u64::from(k)).expect("k fits in n bits"),
                digit == 2,
            ));
        }
    }
    debug_assert_eq!(rest, 0);
    PartialBooleanFunction::from_entries(n, entries).ok()
}

struct ScanRecord {
    code: u64,
    function: PartialBooleanFunction,
    degree: DegreeBound,
    certificate: Option<WeightCertificate>,
}

/// Classifies one scanned function with both the degree bound and the full
/// feasibility decision, cross-checking the degree filter empirically:
/// a feasible function above degree 2 (or vice versa an infeasible claim on
/// every low-degree function) would falsify the filter.
fn classify_for_scan(code: u64, f: PartialBooleanFunction) -> Result<ScanRecord> {
    let cap = 2.min(f.n());
    let degree = min_degree(&f, cap)?;
    let certificate = match solve_feasibility(&build_constraints(&f)) {
        FeasibilityOutcome::Feasible(certificate) => {
            confirm_certificate(&f, &certificate)?;
            Some(certificate)
        }
        FeasibilityOutcome::Infeasible(_) => None,
    };
    assert!(
        !(certificate.is_some() && degree.exceeds_cap()),
        "degree filter falsified: feasible function {code} has degree above 2"
    );
    Ok(ScanRecord {
        code,
        function: f,
        degree,
        certificate,
    })
}

fn summarize(
    n: usize,
    total_only: bool,
    dedup: bool,
    examined: u64,
    records: Vec<ScanRecord>,
    characterization_holds: Option<bool>,
) -> Result<SearchSummary> {
    let one_query_functions = records.iter().filter(|r| r.certificate.is_some()).count() as u64;
    let mut classes = None;
    let mut one_query_classes = None;
    let mut classes_no_flip = None;
    let mut one_query_classes_no_flip = None;
    let encode = |f: &PartialBooleanFunction| {
        if total_only {
            encode_total(f)
        } else {
            encode_partial(f)
        }
    };
    let representatives = if dedup {
        // group by full-group canonical form; count the no-output-negation
        // classes alongside
        let mut by_class: BTreeMap<u64, (PartialBooleanFunction, Vec<usize>)> = BTreeMap::new();
        let mut no_flip_classes: BTreeMap<u64, bool> = BTreeMap::new();
        for (idx, record) in records.iter().enumerate() {
            let canon = canonical_form(&record.function)?;
            by_class
                .entry(encode(&canon))
                .or_insert_with(|| (canon, Vec::new()))
                .1
                .push(idx);
            let canon_no_flip = canonical_form_opts(&record.function, false, n)?;
            no_flip_classes.insert(encode(&canon_no_flip), record.certificate.is_some());
        }
        classes = Some(by_class.len() as u64);
        classes_no_flip = Some(no_flip_classes.len() as u64);
        one_query_classes_no_flip =
            Some(no_flip_classes.values().filter(|&&oq| oq).count() as u64);
        let mut reps = Vec::with_capacity(by_class.len());
        for (key, (canon, members)) in by_class {
            // classify the canonical representative itself so the listed
            // certificate belongs to the listed function
            let rep_record = classify_for_scan(key, canon)?;
            debug_assert_eq!(
                rep_record.certificate.is_some(),
                records[members[0]].certificate.is_some(),
                "decision must be constant on the orbit"
            );
            reps.push(build_representative(rep_record, members.len() as u64));
        }
        one_query_classes = Some(
            reps.iter()
                .filter(|r| r.decision == Decision::OneQuery)
                .count() as u64,
        );
        reps
    } else {
        records
            .into_iter()
            .map(|r| build_representative(r, 1))
            .collect()
    };
    Ok(SearchSummary {
        n,
        total_only,
        dedup,
        examined,
        one_query_functions,
        classes,
        one_query_classes,
        classes_without_output_negation: classes_no_flip,
        one_query_classes_without_output_negation: one_query_classes_no_flip,
        characterization_holds,
        representatives,
    })
}

fn build_representative(record: ScanRecord, class_size: u64) -> Representative {
    let requires_blank_weight = record.certificate.is_some()
        && minimum_weight(&build_constraints(&record.function), 0)
            .map(|min| min.is_zero())
            == Some(false);
    Representative {
        key: record.code,
        decision: if record.certificate.is_some() {
            Decision::OneQuery
        } else {
            Decision::NotOneQuery
        },
        degree: record.degree,
        certificate: record.certificate,
        requires_blank_weight,
        function: record.function,
        class_size,
    }
}

/// The set of total functions isomorphic to a constant, a dictator `x_i`,
/// or a two-variable parity `x_i XOR x_j`, as truth-table masks.
fn characterization_target(n: usize) -> Result<std::collections::BTreeSet<u64>> {
    let mut bases: Vec<PartialBooleanFunction> = vec![
        decode_total(n, 0),
        decode_total(n, if n < 6 { (1u64 << (1u64 << n)) - 1 } else { u64::MAX }),
    ];
    // dictator x_1: value is bit 1 of the point
    let dictator = PartialBooleanFunction::from_entries(
        n,
        (0..(1u64 << n)).map(|k| {
            let x = BitString::new(n, k).unwrap();
            let v = x.bit(1) == 1;
            (x, v)
        }),
    )
    .unwrap();
    bases.push(dictator);
    if n >= 2 {
        let parity = PartialBooleanFunction::from_entries(
            n,
            (0..(1u64 << n)).map(|k| {
                let x = BitString::new(n, k).unwrap();
                let v = (x.bit(1) ^ x.bit(2)) == 1;
                (x, v)
            }),
        )
        .unwrap();
        bases.push(parity);
    }
    let mut target = std::collections::BTreeSet::new();
    for base in &bases {
        for iso in isomorphism_group(n, true)? {
            target.insert(encode_total(&iso.apply(base)));
        }
    }
    Ok(target)
}

/// Classifies all `2^(2^n)` total functions (n <= 4) and checks the scanned
/// one-query set against the characterization by constants, dictators, and
/// two-variable parities. A mismatch would falsify the implementation and
/// aborts.
pub fn scan_total(n: usize) -> Result<SearchSummary> {
    if n == 0 || n > 4 {
        return Err(Error::InvalidParameter(format!(
            "total scans support 1 <= n <= 4, got {n}"
        )));
    }
    let total = 1u64 << (1u64 << n);
    let records = parallel_scan(total, |mask| {
        classify_for_scan(mask, decode_total(n, mask)).map(Some)
    })?;
    let one_query_masks: std::collections::BTreeSet<u64> = records
        .iter()
        .filter(|r| r.certificate.is_some())
        .map(|r| r.code)
        .collect();
    let target = characterization_target(n)?;
    assert_eq!(
        one_query_masks, target,
        "one-query totals at n={n} must be exactly the constants, dictators, and two-variable parities up to isomorphism"
    );
    summarize(n, true, true, total, records, Some(true))
}

/// Enumerates every partial assignment with a non-empty domain over `{0,1}^n`
/// (n <= 3; `3^(2^n) - 1` functions) and classifies each; with `dedup` the
/// results are grouped by canonical form.
pub fn scan_partial(n: usize, dedup: bool) -> Result<SearchSummary> {
    if n == 0 || n > 3 {
        return Err(Error::InvalidParameter(format!(
            "exhaustive partial scans support 1 <= n <= 3, got {n}"
        )));
    }
    let total = 3u64.pow(1 << n);
    let records = parallel_scan(total, |code| match decode_partial(n, code) {
        None => Ok(None),
        Some(f) => classify_for_scan(code, f).map(Some),
    })?;
    let examined = total - 1; // the all-undefined assignment is skipped
    debug_assert_eq!(records.len() as u64, examined);
    summarize(n, false, dedup, examined, records, None)
}

/// Whether `f^{-1}(1)` lies inside the weight extremes `{|x| in {0, n}}`.
pub fn extremal_one_set(f: &PartialBooleanFunction) -> bool {
    f.ones()
        .all(|x| x.hamming_weight() == 0 || x.hamming_weight() as usize == f.n())
}

/// Whether no isomorph of `f` has its 1-set inside the weight extremes.
pub fn no_isomorph_has_extremal_one_set(f: &PartialBooleanFunction) -> Result<bool> {
    for iso in isomorphism_group(f.n(), true)? {
        if extremal_one_set(&iso.apply(f)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Confirms the two published properties of f4: it is one-query, and no
/// isomorph has its 1-set inside `{|x| in {0, 4}}` (which rules out the
/// Deutsch-Jozsa shape).
pub fn rediscover_f4() -> Result<bool> {
    let f4 = make_f4().function;
    let classification = is_one_query(&f4)?;
    Ok(classification.decision == Decision::OneQuery && no_isomorph_has_extremal_one_set(&f4)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> PartialBooleanFunction {
        PartialBooleanFunction::parse(text).unwrap()
    }

    fn and_n2() -> PartialBooleanFunction {
        parse("00 0\n01 0\n10 0\n11 1")
    }

    fn f1_n4() -> PartialBooleanFunction {
        parse("0000 1\n1111 1\n0011 0\n0101 0\n0110 0\n1001 0\n1010 0\n1100 0")
    }

    /// Independent degree oracle for total functions: the multilinear
    /// extension is unique, so the degree is the largest monomial with a
    /// nonzero Moebius coefficient.
    fn moebius_degree(f: &PartialBooleanFunction) -> usize {
        let n = f.n();
        let mut best = 0usize;
        for t in 0..(1u64 << n) {
            let mut coeff = 0i64;
            // sum over subsets s of t of (-1)^{|t|-|s|} f(point with vars s)
            let mut s = t;
            loop {
                let point_bits: u64 = (0..n)
                    .filter(|&i| (s >> i) & 1 == 1)
                    .map(|i| 1u64 << (n - 1 - i))
                    .sum();
                let x = BitString::new(n, point_bits).unwrap();
                let v = i64::from(f.value(&x).expect("total function"));
                let sign = if (t.count_ones() - s.count_ones()) % 2 == 0 {
                    1
                } else {
                    -1
                };
                coeff += sign * v;
                if s == 0 {
                    break;
                }
                s = (s - 1) & t;
            }
            if coeff != 0 {
                best = best.max(t.count_ones() as usize);
            }
        }
        best
    }

    #[test]
    fn min_degree_examples() {
        let dictator = parse("00 0\n01 0\n10 1\n11 1");
        assert_eq!(min_degree(&dictator, 2).unwrap(), DegreeBound::Exact(1));
        assert_eq!(min_degree(&and_n2(), 2).unwrap(), DegreeBound::Exact(2));
        assert_eq!(min_degree(&f1_n4(), 2).unwrap(), DegreeBound::Exact(2));
        // OR on 3 variables has full degree
        let or3 = PartialBooleanFunction::from_entries(
            3,
            (0..8u64).map(|k| (BitString::new(3, k).unwrap(), k != 0)),
        )
        .unwrap();
        assert_eq!(min_degree(&or3, 2).unwrap(), DegreeBound::ExceedsCap(2));
        assert_eq!(min_degree(&or3, 3).unwrap(), DegreeBound::Exact(3));
        assert!(min_degree(&or3, 4).is_err());
    }

    #[test]
    fn min_degree_matches_moebius_oracle_on_all_totals() {
        for n in 1..=3usize {
            for mask in 0..(1u64 << (1 << n)) {
                let f = decode_total(n, mask);
                let DegreeBound::Exact(d) = min_degree(&f, n).unwrap() else {
                    panic!("total functions always fit at degree n");
                };
                assert_eq!(d, moebius_degree(&f), "mask {mask} at n={n}");
            }
        }
    }

    #[test]
    fn is_one_query_examples() {
        let c = is_one_query(&f1_n4()).unwrap();
        assert_eq!(c.decision, Decision::OneQuery);
        assert!(c.certificate.is_some());
        assert_eq!(c.degree, DegreeBound::Exact(2));

        let c = is_one_query(&and_n2()).unwrap();
        assert_eq!(c.decision, Decision::NotOneQuery);
        assert!(c.trace.is_some());

        let constant = parse("0101 1\n1110 1");
        let c = is_one_query(&constant).unwrap();
        assert_eq!(c.decision, Decision::OneQuery);
        assert!(c.notes.iter().any(|n| n == "degenerate: constant"));
    }

    #[test]
    fn degree_filter_rejects_without_solving() {
        let or3 = PartialBooleanFunction::from_entries(
            3,
            (0..8u64).map(|k| (BitString::new(3, k).unwrap(), k != 0)),
        )
        .unwrap();
        let c = is_one_query(&or3).unwrap();
        assert_eq!(c.decision, Decision::NotOneQuery);
        assert!(c.trace.is_none());
        assert_eq!(c.degree, DegreeBound::ExceedsCap(2));
    }

    #[test]
    fn scan_total_n1_all_one_query() {
        let summary = scan_total(1).unwrap();
        assert_eq!(summary.examined, 4);
        assert_eq!(summary.one_query_functions, 4);
        assert_eq!(summary.characterization_holds, Some(true));
    }

    #[test]
    fn scan_total_n2_counts() {
        let summary = scan_total(2).unwrap();
        assert_eq!(summary.examined, 16);
        assert_eq!(summary.one_query_functions, 8);
        let classes = summary.classes.unwrap();
        let oq = summary.one_query_classes.unwrap();
        assert!(oq <= classes && classes <= summary.examined);
    }

    #[test]
    fn scan_partial_n1_everything_is_one_query() {
        let summary = scan_partial(1, false).unwrap();
        assert_eq!(summary.examined, 8);
        assert_eq!(summary.one_query_functions, 8);
        assert_eq!(summary.representatives.len(), 8);
    }

    #[test]
    fn scan_partial_n2_finds_known_classes() {
        let summary = scan_partial(2, true).unwrap();
        assert_eq!(summary.examined, 80);
        // the Deutsch function's class is one-query
        let deutsch = canonical_form(&parse("00 1\n11 1\n01 0\n10 0")).unwrap();
        let deutsch_key = encode_partial(&deutsch);
        let rep = summary
            .representatives
            .iter()
            .find(|r| r.key == deutsch_key)
            .expect("Deutsch class present");
        assert_eq!(rep.decision, Decision::OneQuery);
        // the total AND's class is not
        let and_key = encode_partial(&canonical_form(&and_n2()).unwrap());
        let rep = summary
            .representatives
            .iter()
            .find(|r| r.key == and_key)
            .expect("AND class present");
        assert_eq!(rep.decision, Decision::NotOneQuery);
    }

    #[test]
    fn blank_weight_requirement_is_detected() {
        // {00 -> 1, 11 -> 0} forces c0 = 1/2
        let summary = scan_partial(2, false).unwrap();
        let f = parse("00 1\n11 0");
        let key = encode_partial(&f);
        let rep = summary
            .representatives
            .iter()
            .find(|r| r.key == key)
            .unwrap();
        assert_eq!(rep.decision, Decision::OneQuery);
        assert!(rep.requires_blank_weight);
    }

    #[test]
    fn rediscover_f4_and_its_negatives() {
        assert!(rediscover_f4().unwrap());
        assert!(!no_isomorph_has_extremal_one_set(&f1_n4()).unwrap());
        let f4 = make_f4().function;
        assert!(no_isomorph_has_extremal_one_set(&f4.complement()).unwrap());
    }

    // 2 constants + 8 dictators + 12 two-variable parities; a few minutes
    // of exact arithmetic, so opt in with --ignored
    #[test]
    #[ignore = "classifies all 65536 total functions at n = 4"]
    fn scan_total_n4_counts() {
        let summary = scan_total(4).unwrap();
        assert_eq!(summary.examined, 65536);
        assert_eq!(summary.one_query_functions, 22);
        assert_eq!(summary.characterization_holds, Some(true));
    }

    #[test]
    fn summary_text_is_deterministic() {
        let a = scan_partial(2, true).unwrap().to_text();
        let b = scan_partial(2, true).unwrap().to_text();
        assert_eq!(a, b);
        assert!(a.contains("examined: 80"));
    }
}
