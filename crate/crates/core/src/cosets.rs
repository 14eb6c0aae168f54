//! Coset decomposition of the unit group of `Z_p` by a cyclic subgroup,
//! ordered so that odd-indexed cosets are the negatives of their even
//! predecessors. Searching over unions of cosets instead of raw residues
//! shrinks the state space by the subgroup order.

use crate::modring::{is_prime, Modulus, ResidueSet};
use crate::{Error, Result};

/// The cosets `a_0..a_{c-1}` of `H = <h>` in `Z_p*`.
///
/// Ordering rule: even-indexed cosets are sorted by their smallest
/// representative, ascending, and `a_{2i+1} = -a_{2i}`. Building the system
/// fails when `-1` lies in `H`, since then no such pairing exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSystem {
    modulus: Modulus,
    generator: usize,
    subgroup: ResidueSet,
    cosets: Vec<ResidueSet>,
}

impl CosetSystem {
    /// Builds the coset system of `<h>` in `Z_n*` for prime `n`.
    ///
    /// `h = 1` is allowed: the cosets degenerate to `±` pairs of single
    /// residues, which makes coset-level search equivalent to element-level
    /// search.
    pub fn build(modulus: Modulus, h: usize) -> Result<Self> {
        let n = modulus.get();
        if !is_prime(n) {
            return Err(Error::NotPrime { n });
        }
        let h = h % n;
        if h == 0 {
            return Err(Error::NotAUnit { value: 0, modulus: n });
        }

        // Cyclic subgroup generated by h.
        let mut subgroup_members = Vec::new();
        let mut x = 1usize;
        loop {
            subgroup_members.push(x);
            x = x * h % n;
            if x == 1 {
                break;
            }
        }
        if subgroup_members.contains(&(n - 1)) && n > 2 {
            return Err(Error::SubgroupContainsMinusOne {
                generator: h,
                modulus: n,
            });
        }
        if n == 2 {
            // -1 = 1, the pairing rule is unsatisfiable.
            return Err(Error::SubgroupContainsMinusOne {
                generator: h,
                modulus: n,
            });
        }
        let subgroup = ResidueSet::from_members(modulus, subgroup_members.iter().copied())?;

        // Sweep 1..n-1 ascending; the smallest residue not yet covered opens
        // the next even coset, its negative the odd partner.
        let mut covered = vec![false; n];
        let mut cosets = Vec::new();
        for rep in 1..n {
            if covered[rep] {
                continue;
            }
            let coset: Vec<usize> = subgroup_members.iter().map(|&g| g * rep % n).collect();
            let paired: Vec<usize> = coset.iter().map(|&x| n - x).collect();
            for &x in coset.iter().chain(paired.iter()) {
                debug_assert!(!covered[x]);
                covered[x] = true;
            }
            cosets.push(ResidueSet::from_members(modulus, coset)?);
            cosets.push(ResidueSet::from_members(modulus, paired)?);
        }

        Ok(CosetSystem {
            modulus,
            generator: h,
            subgroup,
            cosets,
        })
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn generator(&self) -> usize {
        self.generator
    }

    pub fn subgroup(&self) -> &ResidueSet {
        &self.subgroup
    }

    pub fn subgroup_order(&self) -> usize {
        self.subgroup.cardinality()
    }

    pub fn coset_count(&self) -> usize {
        self.cosets.len()
    }

    pub fn coset(&self, index: usize) -> &ResidueSet {
        &self.cosets[index]
    }

    pub fn cosets(&self) -> &[ResidueSet] {
        &self.cosets
    }

    /// Index whose coset is the elementwise negative of coset `index`.
    pub fn pair_partner(&self, index: usize) -> usize {
        index ^ 1
    }

    /// Union of the selected cosets; cardinality `|H| * |indices|`.
    pub fn expand(&self, indices: &IndexSet) -> ResidueSet {
        let members = indices
            .iter_slice()
            .iter()
            .flat_map(|&i| self.cosets[i].iter());
        ResidueSet::from_members(self.modulus, members).expect("coset members in range")
    }

    /// True iff `indices` picks exactly one coset of each `±` pair, which is
    /// exactly when the expanded union is a skew-type set.
    pub fn is_skew_index_set(&self, indices: &IndexSet) -> bool {
        let pairs = self.coset_count() / 2;
        let mut seen = vec![0u8; pairs];
        for &i in indices.iter_slice() {
            seen[i / 2] += 1;
        }
        seen.iter().all(|&c| c == 1)
    }
}

/// A subset of coset indices `0..c`, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSet {
    indices: Vec<usize>,
}

impl IndexSet {
    pub fn new<I>(indices: I, coset_count: usize) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&i| i >= coset_count) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                coset_count,
            });
        }
        Ok(IndexSet { indices: v })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn iter_slice(&self) -> &[usize] {
        &self.indices
    }
}
