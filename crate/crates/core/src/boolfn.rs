//! Partial Boolean functions and their symmetry handling.
//!
//! Inputs carry an implicit auxiliary bit `x_0 = 0`: it is never stored in a
//! [`BitString`], but index 0 always reads as 0 and every [`SignVector`]
//! materializes it as +1. Bit strings are written most-significant-first,
//! with variable index 1 leftmost.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Hard cap on stored variables (bits live in a `u64`).
pub const MAX_VARS: usize = 63;

/// Default `n` limit for the canonical-form group search.
pub const DEFAULT_CANONICAL_BUDGET: usize = 6;

/// An n-bit input string. Index 1 is the leftmost bit; index 0 is the
/// implicit auxiliary bit and always reads 0.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitString {
    n: usize,
    bits: u64,
}

impl BitString {
    /// Builds a string of `n` variables from its numeric value (bit string
    /// read as a binary number, index 1 most significant).
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidParameter(format!(
                "bit string length must be in 1..={MAX_VARS}, got {n}"
            )));
        }
        if n < 64 && bits >> n != 0 {
            return Err(Error::InvalidParameter(format!(
                "value {bits} does not fit in {n} bits"
            )));
        }
        Ok(Self { n, bits })
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn ones(n: usize) -> Result<Self> {
        Self::new(n, if n == 64 { u64::MAX } else { (1u64 << n) - 1 })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Numeric value of the string read most-significant-first.
    pub fn raw(&self) -> u64 {
        self.bits
    }

    /// Bit at index `i` for `i` in `0..=n`; index 0 is always 0.
    ///
    /// Panics if `i > n`.
    pub fn bit(&self, i: usize) -> u8 {
        assert!(i <= self.n, "bit index {i} out of range for n={}", self.n);
        if i == 0 {
            0
        } else {
            ((self.bits >> (self.n - i)) & 1) as u8
        }
    }

    /// Number of ones, written `|x|`.
    pub fn hamming_weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// The ±1 vector `x'` with `x'_i = (-1)^{x_i}`, including `x'_0 = +1`.
    pub fn sign_vector(&self) -> SignVector {
        let signs = (0..=self.n)
            .map(|i| if self.bit(i) == 0 { 1i8 } else { -1i8 })
            .collect();
        SignVector { signs }
    }

    /// The set `S = {i | x_i != y_i}` of indices where the strings disagree.
    /// Index 0 can never be a member.
    pub fn differing_set(&self, other: &BitString) -> Result<IndexSet> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let diff = self.bits ^ other.bits;
        Ok(IndexSet::new(
            (1..=self.n).filter(|&i| (diff >> (self.n - i)) & 1 == 1),
        ))
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.bits, width = self.n)
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let n = s.len();
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidParameter(format!(
                "bit string length must be in 1..={MAX_VARS}, got {n}"
            )));
        }
        let mut bits = 0u64;
        for ch in s.chars() {
            bits <<= 1;
            match ch {
                '0' => {}
                '1' => bits |= 1,
                _ => {
                    return Err(Error::InvalidParameter(format!(
                        "invalid character {ch:?} in bit string {s:?}"
                    )))
                }
            }
        }
        Ok(Self { n, bits })
    }
}

/// The ±1 encoding `x'` of a bit string, indexed `0..=n` with `signs[0] = +1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignVector {
    signs: Vec<i8>,
}

impl SignVector {
    pub fn n(&self) -> usize {
        self.signs.len() - 1
    }

    /// Sign at index `i` for `i` in `0..=n`.
    pub fn sign(&self, i: usize) -> i8 {
        self.signs[i]
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.signs
    }
}

/// A sorted duplicate-free set of variable indices drawn from `1..=n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IndexSet {
    members: Vec<usize>,
}

impl IndexSet {
    pub fn new(members: impl IntoIterator<Item = usize>) -> Self {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        assert!(
            members.first().is_none_or(|&i| i >= 1),
            "index 0 cannot belong to a differing set"
        );
        Self { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// Whether every member of `self` also belongs to `other`.
    pub fn is_subset_of(&self, other: &IndexSet) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// A 0/1-valued function defined on a non-empty subset of `{0,1}^n`.
///
/// Entries are kept sorted by bit string, so every iteration below is in
/// bit-string order and deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartialBooleanFunction {
    n: usize,
    entries: BTreeMap<BitString, bool>,
}

impl PartialBooleanFunction {
    pub fn from_entries(
        n: usize,
        entries: impl IntoIterator<Item = (BitString, bool)>,
    ) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidParameter(format!(
                "function arity must be in 1..={MAX_VARS}, got {n}"
            )));
        }
        let mut map = BTreeMap::new();
        for (x, v) in entries {
            if x.n() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: x.n(),
                });
            }
            if let Some(&prev) = map.get(&x) {
                if prev != v {
                    return Err(Error::InvalidParameter(format!(
                        "duplicate bit string {x} with conflicting values"
                    )));
                }
            }
            map.insert(x, v);
        }
        if map.is_empty() {
            return Err(Error::EmptyDomain);
        }
        Ok(Self { n, entries: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of domain points.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty domains
    }

    pub fn value(&self, x: &BitString) -> Option<bool> {
        self.entries.get(x).copied()
    }

    /// Domain points with their values, in bit-string order.
    pub fn entries(&self) -> impl Iterator<Item = (&BitString, bool)> {
        self.entries.iter().map(|(x, &v)| (x, v))
    }

    /// The domain `f^{-1}(1)`, in bit-string order.
    pub fn ones(&self) -> impl Iterator<Item = &BitString> {
        self.entries.iter().filter(|(_, &v)| v).map(|(x, _)| x)
    }

    /// The domain `f^{-1}(0)`, in bit-string order.
    pub fn zeros(&self) -> impl Iterator<Item = &BitString> {
        self.entries.iter().filter(|(_, &v)| !v).map(|(x, _)| x)
    }

    /// All pairs `(x, y)` with `f(x) = 1` and `f(y) = 0`, covering every
    /// value-distinguishing pair once.
    pub fn distinguishing_pairs(&self) -> impl Iterator<Item = (&BitString, &BitString)> {
        self.ones().flat_map(move |x| self.zeros().map(move |y| (x, y)))
    }

    pub fn is_constant(&self) -> bool {
        let mut values = self.entries.values();
        let first = *values.next().expect("domain is non-empty");
        values.all(|&v| v == first)
    }

    pub fn is_total(&self) -> bool {
        self.n < 64 && self.entries.len() as u64 == 1u64 << self.n
    }

    /// Same domain, every value flipped.
    pub fn complement(&self) -> Self {
        Self {
            n: self.n,
            entries: self.entries.iter().map(|(x, &v)| (*x, !v)).collect(),
        }
    }

    /// The restriction of `self` to the entries selected by `keep`.
    pub fn restrict(&self, keep: impl Fn(&BitString, bool) -> bool) -> Result<Self> {
        Self::from_entries(
            self.n,
            self.entries
                .iter()
                .filter(|(x, &v)| keep(x, v))
                .map(|(x, &v)| (*x, v)),
        )
    }

    /// Parses the function file format: an optional `n=<int>` header,
    /// `#` comments, and data lines `<bitstring> <0|1>`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut entries: Vec<(BitString, bool)> = Vec::new();
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
                        message: "header appears after n is already known".into(),
                    });
                }
                let parsed: usize = rest.trim().parse().map_err(|_| Error::Parse {
                    line: lineno,
                    message: format!("invalid header {line:?}"),
                })?;
                if parsed == 0 || parsed > MAX_VARS {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("n must be in 1..={MAX_VARS}, got {parsed}"),
                    });
                }
                n = Some(parsed);
                continue;
            }
            let Some((bits_str, value_str)) = line.split_once(' ') else {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("malformed line {line:?}, expected \"<bits> <0|1>\""),
                });
            };
            let x: BitString = bits_str.parse().map_err(|e| Error::Parse {
                line: lineno,
                message: format!("{e}"),
            })?;
            let value = match value_str {
                "0" => false,
                "1" => true,
                other => {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!("invalid value {other:?}, expected 0 or 1"),
                    })
                }
            };
            match n {
                None => n = Some(x.n()),
                Some(m) if m != x.n() => {
                    return Err(Error::Parse {
                        line: lineno,
                        message: format!(
                            "inconsistent string lengths: expected {m} bits, got {}",
                            x.n()
                        ),
                    });
                }
                Some(_) => {}
            }
            entries.push((x, value));
        }
        let Some(n) = n else {
            return Err(Error::EmptyDomain);
        };
        Self::from_entries(n, entries)
    }

    /// Serializes to the function file format: header, then data lines sorted
    /// by bit string.
    pub fn serialize(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for (x, v) in &self.entries {
            out.push_str(&format!("{x} {}\n", u8::from(*v)));
        }
        out
    }
}

/// A symmetry of the Boolean cube combined with an optional output flip:
/// the transformed function maps `y` with `y_i = x_{perm(i)} XOR m_i` to
/// `f(x) XOR output_negation`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Isomorphism {
    perm: Vec<usize>,     // 0-based: slot i takes source variable perm[i]
    input_negation: u64,  // mask in BitString numeric encoding
    output_negation: bool,
}

impl Isomorphism {
    pub fn new(perm: Vec<usize>, input_negation: u64, output_negation: bool) -> Result<Self> {
        let n = perm.len();
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidParameter(format!(
                "permutation length must be in 1..={MAX_VARS}, got {n}"
            )));
        }
        let mut seen = vec![false; n];
        for &j in &perm {
            if j >= n || seen[j] {
                return Err(Error::InvalidParameter(
                    "permutation is not a bijection on 0..n".into(),
                ));
            }
            seen[j] = true;
        }
        if n < 64 && input_negation >> n != 0 {
            return Err(Error::InvalidParameter(format!(
                "input negation mask {input_negation} does not fit in {n} bits"
            )));
        }
        Ok(Self {
            perm,
            input_negation,
            output_negation,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new((0..n).collect(), 0, false)
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Image of a point: `y_i = x_{perm(i)} XOR m_i`.
    pub fn transform_point(&self, x: &BitString) -> BitString {
        let n = self.perm.len();
        debug_assert_eq!(x.n(), n);
        let mut bits = 0u64;
        for (slot, &src) in self.perm.iter().enumerate() {
            // slot/src are 0-based; BitString.bit takes 1-based indices
            let b = x.bit(src + 1) as u64;
            bits |= b << (n - 1 - slot);
        }
        BitString {
            n,
            bits: bits ^ self.input_negation,
        }
    }

    /// Applies the isomorphism to a whole function.
    pub fn apply(&self, f: &PartialBooleanFunction) -> PartialBooleanFunction {
        assert_eq!(f.n(), self.n(), "isomorphism arity must match the function");
        let entries = f
            .entries()
            .map(|(x, v)| (self.transform_point(x), v ^ self.output_negation))
            .collect();
        PartialBooleanFunction {
            n: f.n(),
            entries,
        }
    }
}

/// Every element of the isomorphism group on `n` variables, in a fixed
/// deterministic order. With `include_output_negation` the group has size
/// `n! * 2^n * 2`, otherwise half that.
pub fn isomorphism_group(n: usize, include_output_negation: bool) -> Result<Vec<Isomorphism>> {
    if n == 0 || n > DEFAULT_CANONICAL_BUDGET {
        return Err(Error::BudgetExceeded {
            n,
            limit: DEFAULT_CANONICAL_BUDGET,
        });
    }
    let flips: &[bool] = if include_output_negation {
        &[false, true]
    } else {
        &[false]
    };
    let mut group = Vec::new();
    for perm in permutations(n) {
        for mask in 0..(1u64 << n) {
            for &flip in flips {
                group.push(Isomorphism {
                    perm: perm.clone(),
                    input_negation: mask,
                    output_negation: flip,
                });
            }
        }
    }
    Ok(group)
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    fn rec(n: usize, depth: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if depth == n {
            out.push(current.clone());
            return;
        }
        for j in 0..n {
            if !used[j] {
                used[j] = true;
                current[depth] = j;
                rec(n, depth + 1, current, used, out);
                used[j] = false;
            }
        }
    }
    rec(n, 0, &mut current, &mut used, &mut out);
    out
}

/// Three-valued table symbol: undefined < 0 < 1.
const SYM_UNDEF: u8 = 0;
const SYM_ZERO: u8 = 1;
const SYM_ONE: u8 = 2;

fn table_of(f: &PartialBooleanFunction) -> Vec<u8> {
    let size = 1usize << f.n();
    let mut table = vec![SYM_UNDEF; size];
    for (x, v) in f.entries() {
        table[x.raw() as usize] = if v { SYM_ONE } else { SYM_ZERO };
    }
    table
}

fn function_of_table(n: usize, table: &[u8]) -> PartialBooleanFunction {
    let entries = table.iter().enumerate().filter_map(|(k, &sym)| match sym {
        SYM_UNDEF => None,
        sym => Some((
            BitString {
                n,
                bits: k as u64,
            },
            sym == SYM_ONE,
        )),
    });
    PartialBooleanFunction::from_entries(n, entries).expect("table came from a non-empty function")
}

/// Canonical representative of the orbit of `f` under variable permutations,
/// per-variable input negation, and output negation: the function whose
/// 3-valued table over `{0,1}^n` (undefined < 0 < 1, bit-string order) is
/// lexicographically least.
pub fn canonical_form(f: &PartialBooleanFunction) -> Result<PartialBooleanFunction> {
    canonical_form_opts(f, true, DEFAULT_CANONICAL_BUDGET)
}

/// As [`canonical_form`], optionally excluding output negation from the group
/// and with an explicit `n` budget.
pub fn canonical_form_opts(
    f: &PartialBooleanFunction,
    include_output_negation: bool,
    budget: usize,
) -> Result<PartialBooleanFunction> {
    let n = f.n();
    if n > budget {
        return Err(Error::BudgetExceeded { n, limit: budget });
    }
    let size = 1usize << n;
    let mut best = table_of(f);
    let flips: &[bool] = if include_output_negation {
        &[false, true]
    } else {
        &[false]
    };
    let mut candidate = vec![SYM_UNDEF; size];
    for perm in permutations(n) {
        for mask in 0..(1u64 << n) {
            for &flip in flips {
                // Fill the candidate table position by position via the
                // inverse point map and abandon the group element as soon as
                // its prefix exceeds the best table seen so far.
                let mut better = false;
                let mut complete = true;
                for y in 0..size {
                    // y_i = x_{perm(i)} ^ m_i  =>  x_{perm(i)} = y_i ^ m_i
                    let ym = (y as u64) ^ mask;
                    let mut x_bits = 0u64;
                    for (slot, &src) in perm.iter().enumerate() {
                        let b = (ym >> (n - 1 - slot)) & 1;
                        x_bits |= b << (n - 1 - src);
                    }
                    let x = BitString { n, bits: x_bits };
                    let sym = match f.value(&x) {
                        None => SYM_UNDEF,
                        Some(v) => {
                            if v ^ flip {
                                SYM_ONE
                            } else {
                                SYM_ZERO
                            }
                        }
                    };
                    if !better {
                        if sym > best[y] {
                            complete = false;
                            break;
                        }
                        if sym < best[y] {
                            better = true;
                        }
                    }
                    candidate[y] = sym;
                }
                if better && complete {
                    best.copy_from_slice(&candidate);
                }
            }
        }
    }
    Ok(function_of_table(n, &best))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    fn total(n: usize, truth: &[u8]) -> PartialBooleanFunction {
        assert_eq!(truth.len(), 1 << n);
        PartialBooleanFunction::from_entries(
            n,
            truth
                .iter()
                .enumerate()
                .map(|(k, &v)| (BitString::new(n, k as u64).unwrap(), v == 1)),
        )
        .unwrap()
    }

    #[test]
    fn bit_index_zero_always_reads_zero() {
        let x = bs("1111");
        assert_eq!(x.bit(0), 0);
        assert_eq!(x.bit(1), 1);
        assert_eq!(x.bit(4), 1);
    }

    #[test]
    fn display_is_msb_first_with_index_one_leftmost() {
        let x = bs("0110");
        assert_eq!(x.to_string(), "0110");
        assert_eq!(x.bit(1), 0);
        assert_eq!(x.bit(2), 1);
        assert_eq!(x.bit(3), 1);
        assert_eq!(x.bit(4), 0);
    }

    #[test]
    fn sign_vector_examples() {
        assert_eq!(bs("0000").sign_vector().as_slice(), &[1, 1, 1, 1, 1]);
        assert_eq!(bs("0011").sign_vector().as_slice(), &[1, 1, 1, -1, -1]);
        assert_eq!(bs("1010").sign_vector().as_slice(), &[1, -1, 1, -1, 1]);
    }

    #[test]
    fn sign_vector_injective_on_fixed_n() {
        let all: Vec<_> = (0..16u64)
            .map(|k| BitString::new(4, k).unwrap().sign_vector())
            .collect();
        for i in 0..all.len() {
            for j in 0..i {
                assert_ne!(all[i], all[j]);
            }
        }
    }

    #[test]
    fn differing_set_examples() {
        assert_eq!(
            bs("0000").differing_set(&bs("0101")).unwrap().members(),
            &[2, 4]
        );
        assert!(bs("0110").differing_set(&bs("0110")).unwrap().is_empty());
        assert_eq!(
            bs("0011").differing_set(&bs("1010")).unwrap().members(),
            &[1, 4]
        );
        // symmetry
        assert_eq!(
            bs("0011").differing_set(&bs("1010")).unwrap(),
            bs("1010").differing_set(&bs("0011")).unwrap()
        );
        assert!(matches!(
            bs("01").differing_set(&bs("011")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn hamming_weight_examples() {
        assert_eq!(bs("0000").hamming_weight(), 0);
        assert_eq!(bs("1111").hamming_weight(), 4);
        assert_eq!(bs("0110").hamming_weight(), 2);
    }

    #[test]
    fn parse_basic() {
        let f = PartialBooleanFunction::parse("0000 1\n0011 0").unwrap();
        assert_eq!(f.n(), 4);
        assert_eq!(f.len(), 2);
        assert_eq!(f.value(&bs("0000")), Some(true));
        assert_eq!(f.value(&bs("0011")), Some(false));
        assert_eq!(f.value(&bs("1111")), None);
    }

    #[test]
    fn parse_deutsch_n2() {
        let f = PartialBooleanFunction::parse("00 1\n11 1\n01 0\n10 0").unwrap();
        assert_eq!(f.n(), 2);
        assert_eq!(f.ones().count(), 2);
        assert_eq!(f.value(&bs("01")), Some(false));
    }

    #[test]
    fn parse_rejects_inconsistent_lengths() {
        assert!(matches!(
            PartialBooleanFunction::parse("01 1\n011 0"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn parse_rejects_conflicting_duplicates_and_empty_domain() {
        assert!(PartialBooleanFunction::parse("01 1\n01 0").is_err());
        // duplicate with the same value is accepted
        assert!(PartialBooleanFunction::parse("01 1\n01 1").is_ok());
        assert!(matches!(
            PartialBooleanFunction::parse("# nothing\n"),
            Err(Error::EmptyDomain)
        ));
        assert!(matches!(
            PartialBooleanFunction::parse("n=3\n# nothing\n"),
            Err(Error::EmptyDomain)
        ));
    }

    #[test]
    fn parse_header_and_comments() {
        let f = PartialBooleanFunction::parse("# f1 at n=2\nn=2\n00 1\n11 1\n").unwrap();
        assert_eq!(f.n(), 2);
        assert!(matches!(
            PartialBooleanFunction::parse("n=2\n000 1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn serialize_round_trip() {
        let f = PartialBooleanFunction::parse("10 0\n00 1\n11 1\n").unwrap();
        let text = f.serialize();
        assert_eq!(text, "n=2\n00 1\n10 0\n11 1\n");
        assert_eq!(PartialBooleanFunction::parse(&text).unwrap(), f);
    }

    #[test]
    fn complement_examples() {
        let f1 = PartialBooleanFunction::parse("00 1\n11 1\n01 0\n10 0").unwrap();
        let c = f1.complement();
        assert_eq!(c.value(&bs("00")), Some(false));
        assert_eq!(c.value(&bs("01")), Some(true));
        assert_eq!(c.complement(), f1);
    }

    #[test]
    fn canonical_identifies_variable_swap() {
        // f(x) = x_1 and f(x) = x_2 on n = 2
        let dictator1 = total(2, &[0, 0, 1, 1]);
        let dictator2 = total(2, &[0, 1, 0, 1]);
        assert_eq!(
            canonical_form(&dictator1).unwrap(),
            canonical_form(&dictator2).unwrap()
        );
    }

    #[test]
    fn canonical_identifies_complement() {
        let f = PartialBooleanFunction::parse("000 1\n011 0\n101 0").unwrap();
        assert_eq!(
            canonical_form(&f).unwrap(),
            canonical_form(&f.complement()).unwrap()
        );
        // without output negation the complement of a constant is separate
        let c1 = total(2, &[1, 1, 1, 1]);
        let c0 = total(2, &[0, 0, 0, 0]);
        assert_ne!(
            canonical_form_opts(&c1, false, 6).unwrap(),
            canonical_form_opts(&c0, false, 6).unwrap()
        );
    }

    #[test]
    fn canonical_is_idempotent_and_orbit_constant() {
        let f = PartialBooleanFunction::parse("0000 0\n0011 0\n1100 0\n1111 0\n0101 1\n0110 1\n1001 1\n1010 1").unwrap();
        let canon = canonical_form(&f).unwrap();
        assert_eq!(canonical_form(&canon).unwrap(), canon);
        for iso in isomorphism_group(4, true).unwrap().iter().step_by(37) {
            assert_eq!(canonical_form(&iso.apply(&f)).unwrap(), canon);
        }
    }

    #[test]
    fn canonical_budget_enforced() {
        let f = PartialBooleanFunction::parse("0000000 1").unwrap();
        assert!(matches!(
            canonical_form(&f),
            Err(Error::BudgetExceeded { n: 7, .. })
        ));
    }

    #[test]
    fn canonical_form_near_the_budget() {
        let f = PartialBooleanFunction::parse("00000 1\n01011 0\n11100 0\n10101 1").unwrap();
        let canon = canonical_form(&f).unwrap();
        assert_eq!(canonical_form(&canon).unwrap(), canon);
        let iso = Isomorphism::new(vec![4, 2, 0, 1, 3], 0b10110, true).unwrap();
        assert_eq!(canonical_form(&iso.apply(&f)).unwrap(), canon);
    }

    #[test]
    fn isomorphism_group_sizes() {
        assert_eq!(isomorphism_group(2, true).unwrap().len(), 2 * 4 * 2);
        assert_eq!(isomorphism_group(3, false).unwrap().len(), 6 * 8);
    }

    #[test]
    fn transform_point_round_trips_under_inverse_search() {
        let iso = Isomorphism::new(vec![2, 0, 1], 0b101, true).unwrap();
        let f = PartialBooleanFunction::parse("000 1\n110 0\n").unwrap();
        let g = iso.apply(&f);
        assert_eq!(g.len(), f.len());
        assert_eq!(g.value(&iso.transform_point(&bs("000"))), Some(false));
        assert_eq!(g.value(&iso.transform_point(&bs("110"))), Some(true));
    }
}
