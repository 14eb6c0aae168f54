//! The shipped difference families over `Z_47` and `Z_97`.
//!
//! Element lists are embedded in the source rather than loaded from files so
//! the test suite cannot drift from what the binary ships. Each entry is a
//! four-block family ready for the Goethals–Seidel array: the `Z_47`
//! families carry the quadratic-residue set as their skew first block, the
//! `Z_97` families are unions of cosets of the order-3 subgroup generated
//! by 35.

use crate::cosets::{CosetSystem, IndexSet};
use crate::diffsets::SdsFamily;
use crate::modring::{paley_set, Modulus, ResidueSet};

const X1: &[usize] = &[
    2, 3, 5, 6, 7, 9, 10, 11, 12, 13, 14, 17, 18, 19, 20, 21, 22, 25, 27, 30, 31, 33, 35, 37, 38,
    39, 40, 42, 43, 44,
];
const X2: &[usize] = &[
    1, 3, 6, 7, 8, 11, 13, 14, 15, 19, 20, 21, 24, 27, 30, 33, 39, 41, 43, 44, 45, 46,
];
const X3: &[usize] = &[
    3, 6, 8, 10, 11, 12, 14, 20, 21, 23, 24, 25, 26, 27, 30, 31, 32, 34, 35, 41, 42, 45,
];

const Y1: &[usize] = &[
    1, 2, 3, 4, 5, 6, 10, 11, 12, 13, 14, 15, 17, 18, 19, 21, 23, 24, 25, 27, 28, 29, 30, 31, 35,
    38, 41, 43, 44, 46,
];
const Y2: &[usize] = &[
    3, 6, 7, 8, 10, 11, 12, 16, 22, 25, 26, 31, 32, 33, 34, 37, 39, 41, 42, 43, 44, 46,
];
const Y3: &[usize] = &[
    3, 7, 12, 13, 15, 16, 18, 20, 21, 23, 25, 26, 27, 28, 32, 35, 38, 39, 42, 44, 45, 46,
];

const P1: &[usize] = &[
    0, 2, 4, 5, 9, 10, 12, 16, 17, 19, 21, 22, 23, 25, 27, 28, 35, 36, 37, 43, 46,
];
const P2: &[usize] = &[
    0, 1, 2, 6, 8, 9, 11, 15, 16, 19, 25, 32, 33, 35, 36, 37, 38, 40, 44,
];
const P3: &[usize] = &[
    1, 2, 3, 4, 5, 6, 7, 10, 11, 16, 18, 22, 24, 28, 31, 35, 38, 40, 43,
];

const Q1: &[usize] = &[
    4, 5, 6, 8, 11, 12, 15, 20, 21, 23, 25, 26, 28, 29, 30, 31, 32, 36, 39, 41, 43,
];
const Q2: &[usize] = &[
    1, 2, 5, 7, 13, 14, 21, 22, 24, 26, 31, 32, 35, 36, 37, 39, 40, 42, 46,
];
const Q3: &[usize] = &[
    1, 2, 3, 4, 5, 9, 12, 18, 20, 21, 24, 25, 32, 34, 38, 39, 43, 44, 46,
];

const J0: &[usize] = &[1, 2, 4, 6, 9, 11, 13, 14, 17, 18, 21, 23, 25, 27, 29, 30];
const J1: &[usize] = &[1, 2, 6, 7, 8, 9, 10, 11, 12, 13, 23, 27, 29];
const J2: &[usize] = &[0, 1, 2, 5, 6, 12, 13, 15, 16, 20, 24, 25, 26, 29, 30, 31];
const J3: &[usize] = &[0, 2, 3, 4, 7, 8, 9, 11, 12, 13, 15, 16, 17, 18, 23, 28, 29];

const K0: &[usize] = &[0, 3, 4, 7, 9, 11, 12, 14, 17, 19, 20, 22, 24, 27, 28, 30];
const K1: &[usize] = &[4, 7, 8, 10, 12, 13, 14, 15, 17, 18, 20, 26, 27];
const K2: &[usize] = &[0, 1, 2, 3, 6, 7, 8, 11, 12, 14, 20, 23, 24, 25, 28, 31];
const K3: &[usize] = &[1, 2, 4, 7, 8, 9, 10, 12, 13, 19, 21, 23, 24, 25, 26, 27, 31];

/// One shipped family with its expected certificates.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub family: SdsFamily,
    /// Index of the block required to be skew-type (always 0 here).
    pub skew_block: usize,
    pub provenance: &'static str,
    /// Expected `|v - 2 n_k|` values, descending.
    pub expected_squares: [i64; 4],
    /// `lambda` of the last three blocks on their own, where that is a
    /// meaningful sub-family (the `Z_47` entries).
    pub triple_lambda: Option<u32>,
}

impl CatalogEntry {
    /// The three non-Paley blocks as their own family, when applicable.
    pub fn triple(&self) -> Option<SdsFamily> {
        self.triple_lambda.map(|lambda| {
            self.family
                .sub_family(1..4, lambda)
                .expect("catalog entries have four blocks")
        })
    }
}

fn z47_entry(
    name: &'static str,
    provenance: &'static str,
    triples: [&[usize]; 3],
    lambda: u32,
    triple_lambda: u32,
    expected_squares: [i64; 4],
) -> CatalogEntry {
    let modulus = Modulus::new(47).expect("47 >= 1");
    let paley = paley_set(modulus).expect("47 is prime, 47 = 3 mod 4");
    let mut blocks = vec![paley];
    for t in triples {
        blocks.push(ResidueSet::from_members(modulus, t.iter().copied()).expect("in range"));
    }
    CatalogEntry {
        name,
        family: SdsFamily::new(blocks, lambda).expect("shared modulus"),
        skew_block: 0,
        provenance,
        expected_squares,
        triple_lambda: Some(triple_lambda),
    }
}

fn z97_entry(
    name: &'static str,
    provenance: &'static str,
    index_sets: [&[usize]; 4],
) -> CatalogEntry {
    let system = z97_coset_system();
    let blocks = index_sets
        .iter()
        .map(|idx| {
            let j = IndexSet::new(idx.iter().copied(), system.coset_count()).expect("in range");
            system.expand(&j)
        })
        .collect();
    CatalogEntry {
        name,
        family: SdsFamily::new(blocks, 89).expect("shared modulus"),
        skew_block: 0,
        provenance,
        expected_squares: [19, 5, 1, 1],
        triple_lambda: None,
    }
}

/// The coset system the `Z_97` entries are defined over.
pub fn z97_coset_system() -> CosetSystem {
    CosetSystem::build(Modulus::new(97).expect("97 >= 1"), 35)
        .expect("97 prime, <35> = {1,35,61} avoids -1")
}

/// Index sets of the `Z_97` entries, in block order.
pub fn z97_index_sets(name: &str) -> Option<[&'static [usize]; 4]> {
    match name {
        "97-U" => Some([J0, J1, J2, J3]),
        "97-V" => Some([K0, K1, K2, K3]),
        _ => None,
    }
}

/// All six shipped entries, in catalog order.
pub fn entries() -> Vec<CatalogEntry> {
    vec![
        z47_entry(
            "47-X",
            "first 4-(47;23,30,22,22;50) family; quadratic residues + triple X",
            [X1, X2, X3],
            50,
            39,
            [13, 3, 3, 1],
        ),
        z47_entry(
            "47-Y",
            "second 4-(47;23,30,22,22;50) family; quadratic residues + triple Y",
            [Y1, Y2, Y3],
            50,
            39,
            [13, 3, 3, 1],
        ),
        z47_entry(
            "47-P",
            "first 4-(47;23,21,19,19;35) family; quadratic residues + triple P",
            [P1, P2, P3],
            35,
            24,
            [9, 9, 5, 1],
        ),
        z47_entry(
            "47-Q",
            "second 4-(47;23,21,19,19;35) family; quadratic residues + triple Q",
            [Q1, Q2, Q3],
            35,
            24,
            [9, 9, 5, 1],
        ),
        z97_entry(
            "97-U",
            "first 4-(97;48,39,48,51;89) family; unions of cosets of <35>",
            [J0, J1, J2, J3],
        ),
        z97_entry(
            "97-V",
            "second 4-(97;48,39,48,51;89) family; unions of cosets of <35>",
            [K0, K1, K2, K3],
        ),
    ]
}

pub fn names() -> [&'static str; 6] {
    ["47-X", "47-Y", "47-P", "47-Q", "97-U", "97-V"]
}

pub fn entry(name: &str) -> Option<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name)
}
