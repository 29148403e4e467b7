//! Exact and logarithmic measures of variety and entropy.
//!
//! Variety is the number of distinguishable states of a set, carried here as
//! an exact arbitrary-precision count together with its logarithmic form in
//! bits. Sequence spaces with successor constraints are counted exactly by a
//! transfer-matrix dynamic program ([`variety_count`]); an exhaustive
//! enumerator ([`brute_force_count`]) serves as an independent oracle on
//! small spaces, and [`unit_step_closed_form`] gives the Fibonacci closed
//! form for the classic four-symbol unit-step space.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

/// Absolute tolerance for a distribution summing to one.
pub const DISTRIBUTION_SUM_TOLERANCE: f64 = 1e-9;

/// Refusal bound for [`brute_force_count`]: enumeration spaces larger than
/// this many sequences are rejected so the oracle stays interactive.
pub const BRUTE_FORCE_LIMIT: u128 = 10_000_000;

#[derive(Debug, Error, PartialEq)]
pub enum VarietyError {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),
    #[error("sequence length must be at least 1")]
    ZeroLength,
    #[error("constraint covers {constraint} symbols but the alphabet has {alphabet}")]
    ConstraintSizeMismatch { constraint: usize, alphabet: usize },
    #[error("symbol index {index} out of range for alphabet of {alphabet}")]
    SymbolIndexOutOfRange { index: usize, alphabet: usize },
    #[error("variety of zero states is undefined (no distinguishable states)")]
    ZeroCount,
    #[error("combined variety needs at least one component")]
    NoComponents,
    #[error("search space of {size} sequences exceeds the enumeration bound of {limit}")]
    SearchSpaceTooLarge { size: u128, limit: u128 },
    #[error("probability at index {index} is negative ({value})")]
    NegativeProbability { index: usize, value: f64 },
    #[error("probabilities sum to {sum}, not 1 within {tolerance}")]
    ProbabilitiesDoNotSumToOne { sum: f64, tolerance: f64 },
    #[error("distribution must have at least one outcome")]
    EmptyDistribution,
    #[error("probability at index {index} is not finite")]
    NonFiniteProbability { index: usize },
}

/// An ordered, duplicate-free set of opaque symbols. Order is significant:
/// successor constraints refer to symbols by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Self, VarietyError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(VarietyError::EmptyAlphabet);
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(VarietyError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Self { symbols })
    }

    /// Alphabet of the symbols `"1"` through `"k"`.
    pub fn numbered(k: usize) -> Result<Self, VarietyError> {
        Self::new((1..=k).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }
}

/// A 0/1 relation over (predecessor index, successor index): the transfer
/// matrix of a sequence space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessorConstraint {
    size: usize,
    allowed: Vec<bool>, // row-major, allowed[pred * size + succ]
}

impl SuccessorConstraint {
    /// Build from a predicate over (predecessor, successor) indices.
    pub fn from_fn<F: Fn(usize, usize) -> bool>(size: usize, allow: F) -> Self {
        let mut allowed = vec![false; size * size];
        for pred in 0..size {
            for succ in 0..size {
                allowed[pred * size + succ] = allow(pred, succ);
            }
        }
        Self { size, allowed }
    }

    /// Build from an explicit list of allowed (predecessor, successor) pairs.
    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Self, VarietyError> {
        let mut allowed = vec![false; size * size];
        for &(pred, succ) in pairs {
            for index in [pred, succ] {
                if index >= size {
                    return Err(VarietyError::SymbolIndexOutOfRange {
                        index,
                        alphabet: size,
                    });
                }
            }
            allowed[pred * size + succ] = true;
        }
        Ok(Self { size, allowed })
    }

    /// The unit-step family: successors may differ from predecessors by at
    /// most `step` index positions.
    pub fn max_step(size: usize, step: usize) -> Self {
        Self::from_fn(size, |pred, succ| pred.abs_diff(succ) <= step)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn allows(&self, pred: usize, succ: usize) -> bool {
        self.allowed[pred * self.size + succ]
    }

    /// True when every pair allowed here is also allowed by `other`.
    pub fn is_subset_of(&self, other: &SuccessorConstraint) -> bool {
        self.size == other.size
            && self
                .allowed
                .iter()
                .zip(&other.allowed)
                .all(|(a, b)| !a || *b)
    }
}

/// A space of fixed-length sequences over an alphabet, optionally restricted
/// by a successor constraint and by the set of admissible first symbols.
#[derive(Clone, Debug, PartialEq)]
pub struct SequenceSpace {
    alphabet: Alphabet,
    length: u64,
    constraint: Option<SuccessorConstraint>,
    initial: Option<Vec<bool>>,
}

impl SequenceSpace {
    pub fn new(alphabet: Alphabet, length: u64) -> Result<Self, VarietyError> {
        if length == 0 {
            return Err(VarietyError::ZeroLength);
        }
        Ok(Self {
            alphabet,
            length,
            constraint: None,
            initial: None,
        })
    }

    pub fn with_constraint(mut self, constraint: SuccessorConstraint) -> Result<Self, VarietyError> {
        if constraint.size() != self.alphabet.len() {
            return Err(VarietyError::ConstraintSizeMismatch {
                constraint: constraint.size(),
                alphabet: self.alphabet.len(),
            });
        }
        self.constraint = Some(constraint);
        Ok(self)
    }

    /// Restrict the admissible first symbols to the given indices.
    pub fn with_initial(mut self, indices: &[usize]) -> Result<Self, VarietyError> {
        let k = self.alphabet.len();
        let mut mask = vec![false; k];
        for &index in indices {
            if index >= k {
                return Err(VarietyError::SymbolIndexOutOfRange { index, alphabet: k });
            }
            mask[index] = true;
        }
        self.initial = Some(mask);
        Ok(self)
    }

    /// The classic constrained-vector space: symbols `{1,2,3,4}`, adjacent
    /// symbols differing by at most one, all first symbols admissible.
    pub fn four_symbol_unit_step(length: u64) -> Result<Self, VarietyError> {
        Self::new(Alphabet::numbered(4)?, length)?
            .with_constraint(SuccessorConstraint::max_step(4, 1))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn length(&self) -> u64 {
        self.length
    }

    pub fn constraint(&self) -> Option<&SuccessorConstraint> {
        self.constraint.as_ref()
    }

    /// Drop the successor constraint, keeping alphabet, length and initial set.
    pub fn without_constraint(&self) -> Self {
        Self {
            alphabet: self.alphabet.clone(),
            length: self.length,
            constraint: None,
            initial: self.initial.clone(),
        }
    }

    fn initial_allowed(&self, index: usize) -> bool {
        self.initial.as_ref().is_none_or(|mask| mask[index])
    }

    fn step_allowed(&self, pred: usize, succ: usize) -> bool {
        self.constraint.as_ref().is_none_or(|c| c.allows(pred, succ))
    }
}

/// Variety as an exact count; the bits form is always derived from the count,
/// never stored, so the two can never disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyMeasure {
    count: BigUint,
}

impl VarietyMeasure {
    pub fn from_count(count: BigUint) -> Self {
        Self { count }
    }

    pub fn from_u64(count: u64) -> Self {
        Self {
            count: BigUint::from(count),
        }
    }

    pub fn count(&self) -> &BigUint {
        &self.count
    }

    /// log2 of the count; negative infinity for an empty set.
    pub fn bits(&self) -> f64 {
        log2_big(&self.count)
    }
}

/// log2 of an exact count, accurate to f64 precision for any magnitude.
///
/// Extracts the top 64 bits and adds the discarded exponent, so counts far
/// beyond 2^53 (or 2^1024) keep a meaningful bits value.
fn log2_big(count: &BigUint) -> f64 {
    if count.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = count.bits();
    if bits <= 64 {
        let v = count.to_u64().expect("fits in u64");
        (v as f64).log2()
    } else {
        let shift = bits - 64;
        let top = (count >> shift).to_u64().expect("top 64 bits");
        (top as f64).log2() + shift as f64
    }
}

/// A probability distribution over finitely many outcomes, validated at
/// construction: entries non-negative and summing to one within
/// [`DISTRIBUTION_SUM_TOLERANCE`].
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution {
    probabilities: Vec<f64>,
}

impl Distribution {
    pub fn new(probabilities: Vec<f64>) -> Result<Self, VarietyError> {
        if probabilities.is_empty() {
            return Err(VarietyError::EmptyDistribution);
        }
        for (index, &p) in probabilities.iter().enumerate() {
            if !p.is_finite() {
                return Err(VarietyError::NonFiniteProbability { index });
            }
            if p < 0.0 {
                return Err(VarietyError::NegativeProbability { index, value: p });
            }
        }
        let sum: f64 = probabilities.iter().sum();
        if (sum - 1.0).abs() > DISTRIBUTION_SUM_TOLERANCE {
            return Err(VarietyError::ProbabilitiesDoNotSumToOne {
                sum,
                tolerance: DISTRIBUTION_SUM_TOLERANCE,
            });
        }
        Ok(Self { probabilities })
    }

    pub fn uniform(outcomes: usize) -> Result<Self, VarietyError> {
        if outcomes == 0 {
            return Err(VarietyError::EmptyDistribution);
        }
        Ok(Self {
            probabilities: vec![1.0 / outcomes as f64; outcomes],
        })
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        false // non-empty by construction
    }
}

/// Shannon entropy in bits: −Σ pᵢ·log₂(pᵢ), with 0·log₂(0) = 0.
///
/// The non-negative sign convention is used throughout so entropy compares
/// directly with variety-in-bits; some texts print the sum without the minus
/// sign, which differs only in sign. Result lies in `[0, log2(k)]` for `k`
/// outcomes, with the upper bound attained exactly by the uniform
/// distribution.
pub fn entropy_bits(dist: &Distribution) -> f64 {
    -dist
        .probabilities()
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.log2())
        .sum::<f64>()
}

/// Variety of an exact count, in bits: log₂(count). A count of zero has no
/// distinguishable states and is a domain error.
pub fn variety_bits(count: &BigUint) -> Result<f64, VarietyError> {
    if count.is_zero() {
        return Err(VarietyError::ZeroCount);
    }
    Ok(log2_big(count))
}

/// Variety of independently varying components: the count multiplies and the
/// bits add. Every component must have at least one state.
pub fn combined_variety(component_counts: &[BigUint]) -> Result<VarietyMeasure, VarietyError> {
    if component_counts.is_empty() {
        return Err(VarietyError::NoComponents);
    }
    let mut product = BigUint::one();
    for count in component_counts {
        if count.is_zero() {
            return Err(VarietyError::ZeroCount);
        }
        product *= count;
    }
    Ok(VarietyMeasure::from_count(product))
}

/// Exact count of the sequences in a space, by dynamic programming over the
/// transfer matrix: a vector of per-symbol sequence counts is advanced
/// `length - 1` times. Arbitrary-precision arithmetic throughout, so no
/// length overflows.
pub fn variety_count(space: &SequenceSpace) -> VarietyMeasure {
    let k = space.alphabet.len();
    let mut counts: Vec<BigUint> = (0..k)
        .map(|i| {
            if space.initial_allowed(i) {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        })
        .collect();
    for _ in 1..space.length {
        let mut next = vec![BigUint::zero(); k];
        for (pred, count) in counts.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for (succ, slot) in next.iter_mut().enumerate() {
                if space.step_allowed(pred, succ) {
                    *slot += count;
                }
            }
        }
        counts = next;
    }
    VarietyMeasure::from_count(counts.iter().sum())
}

/// Independent oracle for [`variety_count`]: exhaustively generate sequences
/// and check the constraint. Refuses spaces with more than
/// [`BRUTE_FORCE_LIMIT`] candidate sequences.
pub fn brute_force_count(space: &SequenceSpace) -> Result<BigUint, VarietyError> {
    let k = space.alphabet.len() as u128;
    let n = space.length;
    let size = u32::try_from(n)
        .ok()
        .and_then(|n| k.checked_pow(n))
        .ok_or(VarietyError::SearchSpaceTooLarge {
            size: u128::MAX,
            limit: BRUTE_FORCE_LIMIT,
        })?;
    if size > BRUTE_FORCE_LIMIT {
        return Err(VarietyError::SearchSpaceTooLarge {
            size,
            limit: BRUTE_FORCE_LIMIT,
        });
    }

    let k = space.alphabet.len();
    let n = n as usize;
    let mut total: u64 = 0;
    // Depth-first walk over valid prefixes only.
    let mut stack: Vec<(usize, usize)> = (0..k)
        .rev()
        .filter(|&s| space.initial_allowed(s))
        .map(|s| (1, s))
        .collect();
    while let Some((depth, symbol)) = stack.pop() {
        if depth == n {
            total += 1;
            continue;
        }
        for succ in (0..k).rev() {
            if space.step_allowed(symbol, succ) {
                stack.push((depth + 1, succ));
            }
        }
    }
    Ok(BigUint::from(total))
}

/// Fibonacci numbers with F(1) = F(2) = 1, exact.
pub fn fibonacci(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    let (mut a, mut b) = (BigUint::zero(), BigUint::one());
    for _ in 1..n {
        let next = &a + &b;
        a = b;
        b = next;
    }
    b
}

/// Closed form for the four-symbol unit-step space: the number of length-n
/// sequences over `{1,2,3,4}` whose adjacent symbols differ by at most one
/// equals 2·F(2n+1). Equal to `variety_count` on
/// [`SequenceSpace::four_symbol_unit_step`] for every n ≥ 1.
pub fn unit_step_closed_form(n: u64) -> Result<BigUint, VarietyError> {
    if n == 0 {
        return Err(VarietyError::ZeroLength);
    }
    Ok(fibonacci(2 * n + 1) * 2u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn entropy_of_uniform_four_is_two_bits() {
        let d = Distribution::uniform(4).unwrap();
        assert!((entropy_bits(&d) - 2.0).abs() < 1e-12);
    }

    #[test]
    fn entropy_of_degenerate_is_zero() {
        let d = Distribution::new(vec![1.0]).unwrap();
        assert_eq!(entropy_bits(&d), 0.0);
    }

    #[test]
    fn entropy_half_quarter_quarter() {
        // Hand evaluation: 0.5*1 + 0.25*2 + 0.25*2 = 1.5 bits.
        let d = Distribution::new(vec![0.5, 0.25, 0.25]).unwrap();
        assert!((entropy_bits(&d) - 1.5).abs() < 1e-12);
    }

    #[test]
    fn zero_probability_contributes_nothing() {
        let d = Distribution::new(vec![0.5, 0.5, 0.0]).unwrap();
        assert!((entropy_bits(&d) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn invalid_distributions_are_rejected() {
        assert!(matches!(
            Distribution::new(vec![0.5, -0.1, 0.6]),
            Err(VarietyError::NegativeProbability { index: 1, .. })
        ));
        assert!(matches!(
            Distribution::new(vec![0.5, 0.6]),
            Err(VarietyError::ProbabilitiesDoNotSumToOne { .. })
        ));
        assert_eq!(Distribution::new(vec![]), Err(VarietyError::EmptyDistribution));
    }

    #[test]
    fn variety_bits_worked_values() {
        assert!((variety_bits(&big(1_048_576)).unwrap() - 20.0).abs() < 1e-12);
        assert_eq!(variety_bits(&big(1)).unwrap(), 0.0);
        let b = variety_bits(&big(21_892)).unwrap();
        assert!((b - (21_892f64).log2()).abs() < 1e-12);
        assert!((b - 14.4).abs() < 0.05, "got {b}");
        assert_eq!(variety_bits(&BigUint::zero()), Err(VarietyError::ZeroCount));
    }

    #[test]
    fn zero_count_reports_negative_infinity_bits() {
        let empty = VarietyMeasure::from_count(BigUint::zero());
        assert_eq!(empty.bits(), f64::NEG_INFINITY);
    }

    #[test]
    fn bits_survive_counts_beyond_f64_range() {
        // 2^2000 overflows f64 entirely; bits must still be exact.
        let count = BigUint::one() << 2000;
        assert_eq!(variety_bits(&count).unwrap(), 2000.0);
        let count = (BigUint::one() << 2000) * 3u32;
        let expected = 2000.0 + 3f64.log2();
        assert!((variety_bits(&count).unwrap() - expected).abs() < 1e-9);
    }

    #[test]
    fn combined_variety_of_ten_components_of_four() {
        let counts = vec![big(4); 10];
        let v = combined_variety(&counts).unwrap();
        assert_eq!(v.count(), &big(1_048_576));
        assert!((v.bits() - 20.0).abs() < 1e-12);
    }

    #[test]
    fn combined_variety_identity_and_product() {
        let v = combined_variety(&[big(4)]).unwrap();
        assert_eq!(v.count(), &big(4));
        assert!((v.bits() - 2.0).abs() < 1e-12);

        let v = combined_variety(&[big(2), big(8)]).unwrap();
        assert_eq!(v.count(), &big(16));
        assert!((v.bits() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn combined_variety_rejects_empty_and_zero() {
        assert_eq!(combined_variety(&[]), Err(VarietyError::NoComponents));
        assert_eq!(
            combined_variety(&[big(3), BigUint::zero()]),
            Err(VarietyError::ZeroCount)
        );
    }

    #[test]
    fn unit_step_count_matches_published_value() {
        let space = SequenceSpace::four_symbol_unit_step(10).unwrap();
        let v = variety_count(&space);
        assert_eq!(v.count(), &big(21_892));
        assert!((v.bits() - 14.4).abs() < 0.05);
    }

    #[test]
    fn unit_step_short_lengths() {
        let space = SequenceSpace::four_symbol_unit_step(1).unwrap();
        assert_eq!(variety_count(&space).count(), &big(4));
        let space = SequenceSpace::four_symbol_unit_step(2).unwrap();
        assert_eq!(variety_count(&space).count(), &big(10));
    }

    #[test]
    fn unconstrained_count_is_a_power() {
        let space = SequenceSpace::new(Alphabet::numbered(4).unwrap(), 10).unwrap();
        assert_eq!(variety_count(&space).count(), &big(1_048_576));
    }

    #[test]
    fn initial_restriction_reduces_count() {
        let space = SequenceSpace::new(Alphabet::numbered(3).unwrap(), 4)
            .unwrap()
            .with_initial(&[0])
            .unwrap();
        assert_eq!(variety_count(&space).count(), &big(27));
    }

    #[test]
    fn brute_force_matches_dp_on_small_spaces() {
        // All 64 triples of the unit-step space; the recurrence gives 26.
        let space = SequenceSpace::four_symbol_unit_step(3).unwrap();
        assert_eq!(brute_force_count(&space).unwrap(), big(26));
        assert_eq!(variety_count(&space).count(), &big(26));

        let space = SequenceSpace::new(Alphabet::numbered(3).unwrap(), 4).unwrap();
        assert_eq!(brute_force_count(&space).unwrap(), big(81));

        let space = SequenceSpace::four_symbol_unit_step(10).unwrap();
        assert_eq!(brute_force_count(&space).unwrap(), big(21_892));
    }

    #[test]
    fn brute_force_refuses_runaway_spaces() {
        let space = SequenceSpace::new(Alphabet::numbered(10).unwrap(), 12).unwrap();
        match brute_force_count(&space) {
            Err(VarietyError::SearchSpaceTooLarge { size, limit }) => {
                assert_eq!(size, 10u128.pow(12));
                assert_eq!(limit, BRUTE_FORCE_LIMIT);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(unit_step_closed_form(10).unwrap(), big(21_892)); // 2 * F(21) = 2 * 10946
        assert_eq!(unit_step_closed_form(1).unwrap(), big(4));
        assert_eq!(unit_step_closed_form(2).unwrap(), big(10));
        assert_eq!(unit_step_closed_form(0), Err(VarietyError::ZeroLength));
    }

    #[test]
    fn closed_form_matches_dp_for_first_thirty_lengths() {
        for n in 1..=30 {
            let space = SequenceSpace::four_symbol_unit_step(n).unwrap();
            assert_eq!(
                variety_count(&space).count(),
                &unit_step_closed_form(n).unwrap(),
                "length {n}"
            );
        }
    }

    #[test]
    fn fibonacci_base_cases() {
        assert_eq!(fibonacci(1), big(1));
        assert_eq!(fibonacci(2), big(1));
        assert_eq!(fibonacci(3), big(2));
        assert_eq!(fibonacci(21), big(10_946));
    }

    #[test]
    fn alphabet_rejects_duplicates_and_empty() {
        assert_eq!(
            Alphabet::new(["a", "b", "a"]),
            Err(VarietyError::DuplicateSymbol("a".into()))
        );
        assert_eq!(Alphabet::new(Vec::<String>::new()), Err(VarietyError::EmptyAlphabet));
    }

    #[test]
    fn constraint_size_must_match_alphabet() {
        let space = SequenceSpace::new(Alphabet::numbered(3).unwrap(), 2).unwrap();
        assert!(matches!(
            space.with_constraint(SuccessorConstraint::max_step(4, 1)),
            Err(VarietyError::ConstraintSizeMismatch { constraint: 4, alphabet: 3 })
        ));
    }

    fn arb_space() -> impl Strategy<Value = SequenceSpace> {
        (1usize..=5, 1u64..=8).prop_flat_map(|(k, n)| {
            (
                proptest::collection::vec(any::<bool>(), k * k),
                proptest::collection::vec(any::<bool>(), k),
            )
                .prop_map(move |(matrix, init)| {
                    let constraint =
                        SuccessorConstraint::from_fn(k, |p, s| matrix[p * k + s]);
                    let initial: Vec<usize> = init
                        .iter()
                        .enumerate()
                        .filter_map(|(i, &b)| b.then_some(i))
                        .collect();
                    let mut space = SequenceSpace::new(Alphabet::numbered(k).unwrap(), n)
                        .unwrap()
                        .with_constraint(constraint)
                        .unwrap();
                    if !initial.is_empty() {
                        space = space.with_initial(&initial).unwrap();
                    }
                    space
                })
        })
    }

    proptest! {
        #[test]
        fn transfer_matrix_agrees_with_enumeration(space in arb_space()) {
            let counted = variety_count(&space);
            prop_assert_eq!(counted.count(), &brute_force_count(&space).unwrap());
        }

        #[test]
        fn constraints_never_increase_count(space in arb_space()) {
            let constrained = variety_count(&space);
            let free = variety_count(&space.without_constraint());
            prop_assert!(constrained.count() <= free.count());
        }

        #[test]
        fn entropy_is_bounded_by_log_k(
            weights in proptest::collection::vec(0.0f64..1.0, 1..12)
        ) {
            let total: f64 = weights.iter().sum();
            prop_assume!(total > 1e-6);
            let probs: Vec<f64> = weights.iter().map(|w| w / total).collect();
            let k = probs.len();
            let d = Distribution::new(probs).unwrap();
            let h = entropy_bits(&d);
            prop_assert!(h >= 0.0);
            prop_assert!(h <= (k as f64).log2() + 1e-9);
        }

        #[test]
        fn combined_bits_add(counts in proptest::collection::vec(1u64..=1000, 1..8)) {
            let bigs: Vec<BigUint> = counts.iter().map(|&c| BigUint::from(c)).collect();
            let combined = combined_variety(&bigs).unwrap();
            let sum: f64 = counts.iter().map(|&c| (c as f64).log2()).sum();
            prop_assert!((combined.bits() - sum).abs() < 1e-9);
        }
    }
}
