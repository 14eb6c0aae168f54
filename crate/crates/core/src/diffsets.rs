//! Supplementary difference sets: parameter verification, difference
//! fingerprints, and equivalence of sets and families under translations
//! and automorphisms of `Z_v`.

use std::collections::BTreeMap;

use crate::modring::{gcd, Modulus, ResidueSet};
use crate::par;
use crate::{Error, Result};

/// An ordered list of blocks over one modulus with a declared `lambda`.
///
/// Construction checks only structure (shared modulus, at least one block).
/// Whether the blocks actually form an SDS is the business of
/// [`verify_sds`], which reports a verdict instead of failing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdsFamily {
    modulus: Modulus,
    blocks: Vec<ResidueSet>,
    lambda: u32,
}

impl SdsFamily {
    pub fn new(blocks: Vec<ResidueSet>, lambda: u32) -> Result<Self> {
        let first = blocks.first().ok_or(Error::EmptyFamily)?;
        let modulus = first.modulus();
        for b in &blocks {
            if b.modulus() != modulus {
                return Err(Error::MixedModuli {
                    expected: modulus.get(),
                    got: b.modulus().get(),
                });
            }
        }
        Ok(SdsFamily {
            modulus,
            blocks,
            lambda,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn blocks(&self) -> &[ResidueSet] {
        &self.blocks
    }

    pub fn block(&self, k: usize) -> &ResidueSet {
        &self.blocks[k]
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn cardinals(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.cardinality()).collect()
    }

    /// `sum n_k(n_k-1) = lambda(v-1)`: necessary for verification to have a
    /// chance, used by the searcher to reject impossible parameters early.
    pub fn counting_identity_holds(&self) -> bool {
        let v = self.modulus.get() as u64;
        let lhs: u64 = self
            .cardinals()
            .iter()
            .map(|&n| (n * n.saturating_sub(1)) as u64)
            .sum();
        lhs == self.lambda as u64 * (v - 1)
    }

    /// A copy with `lambda` replaced, for re-verifying sub-families.
    pub fn with_lambda(&self, lambda: u32) -> SdsFamily {
        SdsFamily {
            modulus: self.modulus,
            blocks: self.blocks.clone(),
            lambda,
        }
    }

    /// Family of a contiguous block range, keeping the modulus.
    pub fn sub_family(&self, range: std::ops::Range<usize>, lambda: u32) -> Result<SdsFamily> {
        SdsFamily::new(self.blocks[range].to_vec(), lambda)
    }
}

/// The `t-(v;n_0,...,n_{t-1};lambda)` notation string.
pub fn declared_parameters(family: &SdsFamily) -> String {
    let cardinals: Vec<String> = family.cardinals().iter().map(|n| n.to_string()).collect();
    format!(
        "{}-({};{};{})",
        family.block_count(),
        family.modulus(),
        cardinals.join(","),
        family.lambda()
    )
}

/// The `lambda` a four-block family must have to feed the Goethals–Seidel
/// array: `sum n_k - v`. Negative means no such family exists.
pub fn goethals_seidel_lambda(v: usize, cardinals: &[usize]) -> i64 {
    cardinals.iter().map(|&n| n as i64).sum::<i64>() - v as i64
}

/// Outcome of checking `sum_k lambda_k(r) = lambda` for every nonzero `r`.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    lambda: u32,
    totals: Vec<u32>,
}

impl VerificationReport {
    /// Total difference count per residue, index `r = 1..v-1` at `r-1`.
    pub fn totals(&self) -> &[u32] {
        &self.totals
    }

    /// Signed deviations `total(r) - lambda` in residue order.
    pub fn residuals(&self) -> Vec<i64> {
        self.totals
            .iter()
            .map(|&t| t as i64 - self.lambda as i64)
            .collect()
    }

    pub fn pass(&self) -> bool {
        self.totals.iter().all(|&t| t == self.lambda)
    }

    /// `(r, deviation)` with the largest absolute deviation; `(0, 0)` for an
    /// empty residue range (v = 1).
    pub fn worst_deviation(&self) -> (usize, i64) {
        self.totals
            .iter()
            .enumerate()
            .map(|(i, &t)| (i + 1, t as i64 - self.lambda as i64))
            .max_by_key(|&(_, d)| d.abs())
            .unwrap_or((0, 0))
    }

    /// Sum of squared residuals; the searcher's cost function equals this.
    pub fn squared_residual(&self) -> u64 {
        self.residuals().iter().map(|&d| (d * d) as u64).sum()
    }
}

/// Checks the defining SDS condition of `family` against its declared
/// `lambda` and reports the full residual vector.
pub fn verify_sds(family: &SdsFamily) -> VerificationReport {
    let v = family.modulus().get();
    let mut totals = vec![0u32; v.saturating_sub(1)];
    for block in family.blocks() {
        let table = block.difference_table();
        for r in 1..v {
            totals[r - 1] += table.count(r);
        }
    }
    VerificationReport {
        lambda: family.lambda(),
        totals,
    }
}

/// Histogram of difference multiplicities: `mu ->` number of nonzero
/// residues whose difference count is `mu`. Invariant under translations
/// and automorphisms, so differing fingerprints certify inequivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fingerprint {
    histogram: BTreeMap<u32, u32>,
}

impl Fingerprint {
    pub fn histogram(&self) -> &BTreeMap<u32, u32> {
        &self.histogram
    }

    /// Residues accounted for; always `n - 1`.
    pub fn support(&self) -> u64 {
        self.histogram.values().map(|&c| c as u64).sum()
    }

    /// `sum mu * count`; always `|X| * (|X| - 1)`.
    pub fn weighted_total(&self) -> u64 {
        self.histogram
            .iter()
            .map(|(&mu, &c)| mu as u64 * c as u64)
            .sum()
    }
}

impl std::fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .histogram
            .iter()
            .map(|(mu, c)| format!("{mu}:{c}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

pub fn fingerprint(set: &ResidueSet) -> Fingerprint {
    let table = set.difference_table();
    let mut histogram = BTreeMap::new();
    for &mu in table.nonzero_residue_counts() {
        *histogram.entry(mu).or_insert(0) += 1;
    }
    Fingerprint { histogram }
}

/// Units of `Z_n` in ascending order.
fn units(n: usize) -> Vec<usize> {
    (1..n.max(2)).filter(|&m| gcd(m, n) == 1).collect()
}

/// Lexicographically smallest characteristic vector over all translations
/// of `set`, together with the smallest translation achieving it.
fn canonical_translation(set: &ResidueSet) -> (Vec<bool>, usize) {
    let n = set.modulus().get();
    let members = set.to_vec();
    let mut best: Option<(Vec<bool>, usize)> = None;
    for t in 0..n {
        let mut candidate = vec![false; n];
        for &x in &members {
            candidate[(x + t) % n] = true;
        }
        match &best {
            Some((b, _)) if *b <= candidate => {}
            _ => best = Some((candidate, t)),
        }
    }
    best.expect("modulus >= 1")
}

/// Searches for `(m, t)` with `Y = m*X + t`, exhaustively over all units
/// `m` (ascending) with the translation resolved by canonical forms.
/// `None` means the sets are inequivalent under the affine group.
pub fn sets_equivalent(x: &ResidueSet, y: &ResidueSet) -> Option<(usize, usize)> {
    assert_eq!(x.modulus(), y.modulus(), "sets must share a modulus");
    let n = x.modulus().get();
    if x.cardinality() != y.cardinality() {
        return None;
    }
    let (y_canon, y_shift) = canonical_translation(y);
    let unit_list = units(n);
    par::find_map_first(unit_list.len(), |idx| {
        let m = unit_list[idx];
        let image = x.affine_image(m, 0).expect("m is a unit");
        let (canon, shift) = canonical_translation(&image);
        if canon == y_canon {
            // translate(m*X, shift) = translate(Y, y_shift)
            let t = (n + shift - y_shift % n) % n;
            debug_assert_eq!(&x.affine_image(m, t).expect("unit"), y);
            Some((m, t))
        } else {
            None
        }
    })
}

/// An explicit family equivalence: one global automorphism, a block
/// permutation respecting cardinals, and one translation per block, so that
/// `G[permutation[k]] = m * F[k] + shifts[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyWitness {
    pub multiplier: usize,
    pub permutation: Vec<usize>,
    pub shifts: Vec<usize>,
}

impl FamilyWitness {
    pub fn identity(block_count: usize) -> Self {
        FamilyWitness {
            multiplier: 1,
            permutation: (0..block_count).collect(),
            shifts: vec![0; block_count],
        }
    }

    /// Applies the witness to `family`, producing the equivalent family it
    /// testifies to.
    pub fn apply(&self, family: &SdsFamily) -> Result<SdsFamily> {
        let mut blocks = vec![ResidueSet::empty(family.modulus()); family.block_count()];
        for (k, block) in family.blocks().iter().enumerate() {
            blocks[self.permutation[k]] = block.affine_image(self.multiplier, self.shifts[k])?;
        }
        SdsFamily::new(blocks, family.lambda())
    }
}

/// Decides equivalence of two families under a global automorphism,
/// per-block translations, and a cardinal-respecting block permutation.
///
/// Exhaustive over the automorphisms; per-block translations are resolved
/// by canonical-form lookup. Mismatched cardinal multisets are trivially
/// inequivalent and return `None`. The returned witness is the one with the
/// smallest automorphism, independent of scheduling.
pub fn families_equivalent(f: &SdsFamily, g: &SdsFamily) -> Option<FamilyWitness> {
    assert_eq!(f.modulus(), g.modulus(), "families must share a modulus");
    if f.block_count() != g.block_count() {
        return None;
    }
    let mut fc = f.cardinals();
    let mut gc = g.cardinals();
    fc.sort_unstable();
    gc.sort_unstable();
    if fc != gc {
        return None;
    }

    let n = f.modulus().get();
    let g_canon: Vec<(Vec<bool>, usize)> =
        g.blocks().iter().map(canonical_translation).collect();
    let unit_list = units(n);

    par::find_map_first(unit_list.len(), |idx| {
        let m = unit_list[idx];
        witness_for_multiplier(f, g, &g_canon, m, n)
    })
}

/// Sequential variant of [`families_equivalent`] with identical results.
pub fn families_equivalent_seq(f: &SdsFamily, g: &SdsFamily) -> Option<FamilyWitness> {
    assert_eq!(f.modulus(), g.modulus(), "families must share a modulus");
    if f.block_count() != g.block_count() {
        return None;
    }
    let mut fc = f.cardinals();
    let mut gc = g.cardinals();
    fc.sort_unstable();
    gc.sort_unstable();
    if fc != gc {
        return None;
    }
    let n = f.modulus().get();
    let g_canon: Vec<(Vec<bool>, usize)> =
        g.blocks().iter().map(canonical_translation).collect();
    units(n)
        .into_iter()
        .find_map(|m| witness_for_multiplier(f, g, &g_canon, m, n))
}

fn witness_for_multiplier(
    f: &SdsFamily,
    g: &SdsFamily,
    g_canon: &[(Vec<bool>, usize)],
    m: usize,
    n: usize,
) -> Option<FamilyWitness> {
    let count = f.block_count();
    let mut permutation = vec![usize::MAX; count];
    let mut shifts = vec![0usize; count];
    let mut used = vec![false; count];
    for (k, block) in f.blocks().iter().enumerate() {
        let image = block.affine_image(m, 0).expect("m is a unit");
        let (canon, a) = canonical_translation(&image);
        // Blocks with equal canonical forms are interchangeable, so greedy
        // first-fit matching is complete here.
        let slot = (0..count).find(|&j| !used[j] && g_canon[j].0 == canon)?;
        used[slot] = true;
        permutation[k] = slot;
        let b = g_canon[slot].1;
        let t = (n + a - b % n) % n;
        debug_assert_eq!(&block.affine_image(m, t).expect("unit"), g.block(slot));
        shifts[k] = t;
    }
    Some(FamilyWitness {
        multiplier: m,
        permutation,
        shifts,
    })
}

/// Four-square decomposition report: `sum (v - 2 n_k)^2` against `4v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourSquareReport {
    roots: Vec<i64>,
    target: i64,
}

impl FourSquareReport {
    /// The absolute values `|v - 2 n_k|`, descending.
    pub fn roots(&self) -> &[i64] {
        &self.roots
    }

    pub fn sum_of_squares(&self) -> i64 {
        self.roots.iter().map(|&r| r * r).sum()
    }

    /// `4v`, what the sum must equal.
    pub fn target(&self) -> i64 {
        self.target
    }

    pub fn pass(&self) -> bool {
        self.sum_of_squares() == self.target
    }
}

impl std::fmt::Display for FourSquareReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(|r| format!("{r}^2")).collect();
        write!(f, "{} = {}", parts.join("+"), self.sum_of_squares())
    }
}

/// Computes the four-square decomposition of a four-block family.
pub fn four_square_check(family: &SdsFamily) -> Result<FourSquareReport> {
    let cardinals = family.cardinals();
    if cardinals.len() != 4 {
        return Err(Error::FourBlocksRequired {
            got: cardinals.len(),
        });
    }
    let v = family.modulus().get() as i64;
    let mut roots: Vec<i64> = cardinals.iter().map(|&n| (v - 2 * n as i64).abs()).collect();
    roots.sort_unstable_by(|a, b| b.cmp(a));
    Ok(FourSquareReport {
        roots,
        target: 4 * v,
    })
}
