//! Subsets of `Z_n` and the exact set-level arithmetic everything else is
//! built on: difference tables, negation, affine images, skew-type and
//! quadratic-residue (Paley) sets.

use crate::{Error, Result};

/// Order of the cyclic group `Z_n`. Always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus(usize);

impl Modulus {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(Modulus(n))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Canonical representative of `x` in `0..n`, for any signed `x`.
    pub fn reduce(self, x: i64) -> usize {
        x.rem_euclid(self.0 as i64) as usize
    }
}

impl std::fmt::Display for Modulus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Deterministic trial-division primality test. The moduli handled here are
/// at most a few hundred, so nothing faster is warranted.
pub fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A subset of `Z_n`, stored as a characteristic vector of length `n`.
///
/// Membership is O(1) and iteration yields residues in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueSet {
    modulus: Modulus,
    members: Vec<bool>,
}

impl ResidueSet {
    pub fn empty(modulus: Modulus) -> Self {
        ResidueSet {
            modulus,
            members: vec![false; modulus.get()],
        }
    }

    /// Builds a set from residues, rejecting anything outside `0..n`.
    /// Duplicates collapse (set semantics).
    pub fn from_members<I>(modulus: Modulus, residues: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = ResidueSet::empty(modulus);
        for r in residues {
            if r >= modulus.get() {
                return Err(Error::ResidueOutOfRange {
                    residue: r,
                    modulus: modulus.get(),
                });
            }
            set.members[r] = true;
        }
        Ok(set)
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn cardinality(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.members.iter().any(|&m| m)
    }

    pub fn contains(&self, residue: usize) -> bool {
        residue < self.members.len() && self.members[residue]
    }

    /// Residues of the set in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// The characteristic vector, index = residue.
    pub fn characteristic(&self) -> &[bool] {
        &self.members
    }

    /// `{ -x mod n : x in X }`.
    pub fn negate(&self) -> ResidueSet {
        let n = self.modulus.get();
        let mut out = ResidueSet::empty(self.modulus);
        for x in self.iter() {
            out.members[(n - x) % n] = true;
        }
        out
    }

    /// `{ x + t mod n : x in X }`.
    pub fn translate(&self, t: usize) -> ResidueSet {
        let n = self.modulus.get();
        let mut out = ResidueSet::empty(self.modulus);
        for x in self.iter() {
            out.members[(x + t) % n] = true;
        }
        out
    }

    /// `{ m*x + t mod n : x in X }` for a unit `m`, i.e. the image under an
    /// automorphism followed by a translation. Rejects `m` with
    /// `gcd(m, n) != 1` since that would not be a bijection.
    pub fn affine_image(&self, m: usize, t: usize) -> Result<ResidueSet> {
        let n = self.modulus.get();
        if gcd(m % n, n) != 1 {
            return Err(Error::NotAUnit {
                value: m,
                modulus: n,
            });
        }
        let mut out = ResidueSet::empty(self.modulus);
        for x in self.iter() {
            out.members[(m * x + t) % n] = true;
        }
        Ok(out)
    }

    /// True iff `X` and `-X` are disjoint and together cover `Z_n \ {0}`.
    ///
    /// Equivalently: `0` is not in `X` and exactly one of `x`, `n-x` is a
    /// member for every nonzero `x`. Forces `|X| = (n-1)/2`, so any set over
    /// an even modulus returns false.
    pub fn is_skew_type(&self) -> bool {
        let n = self.modulus.get();
        if self.contains(0) {
            return false;
        }
        for x in 1..n {
            let neg = n - x;
            if self.contains(x) == self.contains(neg) {
                return false;
            }
        }
        true
    }

    /// Counts, for each nonzero residue `r`, the ordered pairs `(i, j)` of
    /// distinct members with `i - j = r (mod n)`.
    pub fn difference_table(&self) -> DifferenceTable {
        let n = self.modulus.get();
        let mut counts = vec![0u32; n];
        for (r, slot) in counts.iter_mut().enumerate().skip(1) {
            *slot = self.iter().filter(|&j| self.members[(j + r) % n]).count() as u32;
        }
        DifferenceTable {
            modulus: self.modulus,
            counts,
        }
    }
}

/// Difference multiplicities `r -> lambda_X(r)` of one set, `r = 1..n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceTable {
    modulus: Modulus,
    counts: Vec<u32>,
}

impl DifferenceTable {
    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    /// Multiplicity of the difference `r`; zero for `r = 0` by convention
    /// (pairs are distinct).
    pub fn count(&self, r: usize) -> u32 {
        self.counts[r % self.modulus.get()]
    }

    /// All multiplicities for `r = 1..n-1`, in order.
    pub fn nonzero_residue_counts(&self) -> &[u32] {
        &self.counts[1..]
    }

    /// Total over all `r`; always `|X| * (|X| - 1)`.
    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }
}

/// The set of nonzero quadratic residues modulo a prime `n = 3 (mod 4)`.
///
/// This is the classic skew-type difference set with `(n-1)/2` elements;
/// other moduli are rejected because the result would not be skew.
pub fn paley_set(modulus: Modulus) -> Result<ResidueSet> {
    let n = modulus.get();
    if !is_prime(n) {
        return Err(Error::NotPrime { n });
    }
    if n % 4 != 3 {
        return Err(Error::PaleyCongruence { n });
    }
    let mut set = ResidueSet::empty(modulus);
    for x in 1..n {
        set.members[x * x % n] = true;
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(n: usize, members: &[usize]) -> ResidueSet {
        ResidueSet::from_members(Modulus::new(n).unwrap(), members.iter().copied()).unwrap()
    }

    /// Brute-force oracle: enumerate all ordered pairs of distinct members.
    fn naive_table(n: usize, members: &[usize]) -> Vec<u32> {
        let mut counts = vec![0u32; n];
        for &i in members {
            for &j in members {
                if i != j {
                    counts[(n + i - j) % n] += 1;
                }
            }
        }
        counts
    }

    #[test]
    fn difference_table_empty_set() {
        let t = rs(7, &[]).difference_table();
        assert_eq!(t.nonzero_residue_counts(), &[0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn difference_table_fano() {
        // {1,2,4} mod 7: all six ordered pairs give six distinct differences.
        let t = rs(7, &[1, 2, 4]).difference_table();
        assert_eq!(t.nonzero_residue_counts(), &[1, 1, 1, 1, 1, 1]);
        assert_eq!(t.total(), 6);
    }

    #[test]
    fn difference_table_matches_pair_enumeration() {
        let cases: &[(usize, &[usize])] = &[
            (7, &[1, 2, 4]),
            (7, &[0, 1, 2, 3]),
            (12, &[0, 3, 4, 7, 11]),
            (13, &[1, 5, 6, 8]),
            (1, &[0]),
        ];
        for &(n, members) in cases {
            let t = rs(n, members).difference_table();
            assert_eq!(t.counts, naive_table(n, members), "n={n} X={members:?}");
            assert_eq!(
                t.total(),
                (members.len() * (members.len().saturating_sub(1))) as u64
            );
        }
    }

    #[test]
    fn negate_examples() {
        assert_eq!(rs(7, &[]).negate(), rs(7, &[]));
        assert_eq!(rs(7, &[1, 2, 4]).negate(), rs(7, &[6, 5, 3]));
        // Negating a coset of <35> in Z_97 lands on its pair partner.
        assert_eq!(rs(97, &[1, 35, 61]).negate(), rs(97, &[96, 62, 36]));
        // 0 is its own negative.
        assert_eq!(rs(5, &[0]).negate(), rs(5, &[0]));
    }

    #[test]
    fn affine_image_examples() {
        let x = rs(7, &[1, 2, 4]);
        assert_eq!(x.affine_image(1, 0).unwrap(), x);
        // {1,2,4} is fixed by doubling mod 7.
        assert_eq!(x.affine_image(2, 0).unwrap(), x);
        assert_eq!(rs(7, &[0, 1]).affine_image(3, 5).unwrap(), rs(7, &[5, 1]));
    }

    #[test]
    fn affine_image_rejects_non_unit() {
        let x = rs(6, &[1, 2]);
        assert_eq!(
            x.affine_image(2, 0),
            Err(Error::NotAUnit {
                value: 2,
                modulus: 6
            })
        );
        assert!(x.affine_image(5, 3).is_ok());
    }

    #[test]
    fn affine_image_preserves_cardinality() {
        let x = rs(12, &[0, 2, 5, 7, 11]);
        for m in [1, 5, 7, 11] {
            for t in 0..12 {
                assert_eq!(x.affine_image(m, t).unwrap().cardinality(), 5);
            }
        }
    }

    #[test]
    fn skew_type_examples() {
        assert!(rs(7, &[1, 2, 4]).is_skew_type());
        assert!(!rs(7, &[1, 6]).is_skew_type()); // contains both 1 and -1
        assert!(!rs(7, &[0, 1, 2]).is_skew_type()); // contains 0
        assert!(!rs(8, &[1, 2, 3]).is_skew_type()); // even modulus
        assert!(rs(1, &[]).is_skew_type()); // vacuous
    }

    #[test]
    fn skew_type_forces_half_cardinality() {
        for n in [3usize, 7, 11, 15] {
            let set = ResidueSet::from_members(
                Modulus::new(n).unwrap(),
                (1..n).filter(|&x| 2 * x < n),
            )
            .unwrap();
            assert!(set.is_skew_type());
            assert_eq!(set.cardinality(), (n - 1) / 2);
        }
    }

    #[test]
    fn paley_examples() {
        assert_eq!(paley_set(Modulus::new(7).unwrap()).unwrap(), rs(7, &[1, 2, 4]));
        assert_eq!(paley_set(Modulus::new(3).unwrap()).unwrap(), rs(3, &[1]));
        let p47 = paley_set(Modulus::new(47).unwrap()).unwrap();
        assert_eq!(p47.cardinality(), 23);
        assert!(p47.is_skew_type());
    }

    #[test]
    fn paley_rejections() {
        assert_eq!(
            paley_set(Modulus::new(15).unwrap()),
            Err(Error::NotPrime { n: 15 })
        );
        assert_eq!(
            paley_set(Modulus::new(13).unwrap()),
            Err(Error::PaleyCongruence { n: 13 })
        );
        assert_eq!(
            paley_set(Modulus::new(2).unwrap()),
            Err(Error::PaleyCongruence { n: 2 })
        );
    }

    #[test]
    fn paley_skew_for_all_small_admissible_primes() {
        for n in [3usize, 7, 11, 19, 23, 31, 43, 47] {
            let set = paley_set(Modulus::new(n).unwrap()).unwrap();
            assert!(set.is_skew_type(), "Paley set mod {n} must be skew");
            assert_eq!(set.cardinality(), (n - 1) / 2);
        }
    }

    #[test]
    fn table_reversal_under_negation() {
        let x = rs(13, &[0, 1, 3, 9]);
        let t = x.difference_table();
        let tn = x.negate().difference_table();
        for r in 1..13 {
            assert_eq!(tn.count(r), t.count(13 - r));
        }
    }

    #[test]
    fn modulus_reduce() {
        let m = Modulus::new(7).unwrap();
        assert_eq!(m.reduce(-1), 6);
        assert_eq!(m.reduce(14), 0);
        assert_eq!(m.reduce(-15), 6);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_set() -> impl Strategy<Value = ResidueSet> {
            (2usize..40).prop_flat_map(|n| {
                proptest::collection::vec(0..n, 0..n).prop_map(move |members| {
                    ResidueSet::from_members(Modulus::new(n).unwrap(), members).unwrap()
                })
            })
        }

        proptest! {
            #[test]
            fn table_total_is_ordered_pair_count(x in arb_set()) {
                let k = x.cardinality() as u64;
                prop_assert_eq!(x.difference_table().total(), k * k.saturating_sub(1));
            }

            #[test]
            fn negation_reverses_table(x in arb_set()) {
                let n = x.modulus().get();
                let t = x.difference_table();
                let tn = x.negate().difference_table();
                for r in 1..n {
                    prop_assert_eq!(tn.count(r), t.count(n - r));
                }
            }

            // Translations leave the table unchanged; the automorphism m
            // permutes it: count_image(m*r) = count(r).
            #[test]
            fn affine_image_permutes_table(x in arb_set(), m in 1usize..40, t in 0usize..40) {
                let n = x.modulus().get();
                let (m, t) = (m % n, t % n);
                prop_assume!(gcd(m, n) == 1);
                let tab = x.difference_table();
                let tab_img = x.affine_image(m, t).unwrap().difference_table();
                for r in 1..n {
                    prop_assert_eq!(tab_img.count(m * r % n), tab.count(r));
                }
            }
        }
    }
}
