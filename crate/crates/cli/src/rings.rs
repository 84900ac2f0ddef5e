//! Built-in fusion rings: the rank <= 3 rings hosting the classification
//! plus the multiplicity-free candidate rings of rank <= 6 that the
//! module-category filters draw from, and the one ring with multiplicity
//! (kept so the FP-dimension rejection path runs against real data).

use etale_core::FusionRing;

/// A catalog ring with identity, display name, provenance and the
/// cyclotomic conductor in which its characters are recognised.
#[derive(Clone, Debug)]
pub struct RingEntry {
    pub id: String,
    pub display: String,
    pub provenance: String,
    pub char_conductor: u64,
    pub ring: FusionRing,
}

fn group_ring(labels: &[&str], mul: impl Fn(usize, usize) -> usize) -> FusionRing {
    let n = labels.len();
    let mut dual = vec![0usize; n];
    for i in 0..n {
        dual[i] = (0..n).find(|&j| mul(i, j) == 0).expect("group inverse");
    }
    let mut tensor = vec![0u32; n * n * n];
    for i in 0..n {
        for j in 0..n {
            tensor[(i * n + j) * n + mul(i, j)] = 1;
        }
    }
    FusionRing::new(
        labels.iter().map(|s| s.to_string()).collect(),
        dual,
        tensor,
    )
}

pub fn trivial() -> FusionRing {
    FusionRing::from_products(&["1"], vec![0], &[&[&[0]]])
}

pub fn z2() -> FusionRing {
    group_ring(&["1", "X"], |a, b| (a + b) % 2)
}

pub fn z3() -> FusionRing {
    group_ring(&["1", "X", "Y"], |a, b| (a + b) % 3)
}

pub fn z4() -> FusionRing {
    group_ring(&["1", "g", "g2", "g3"], |a, b| (a + b) % 4)
}

pub fn z2z2() -> FusionRing {
    group_ring(&["1", "a", "b", "ab"], |x, y| x ^ y)
}

pub fn z6() -> FusionRing {
    group_ring(&["1", "g", "g2", "g3", "g4", "g5"], |a, b| (a + b) % 6)
}

pub fn vec_s3() -> FusionRing {
    // permutations of three points: e, r, r2, s, sr, sr2
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2], // e
        [1, 2, 0], // r
        [2, 0, 1], // r2
        [1, 0, 2], // s
        [0, 2, 1], // sr
        [2, 1, 0], // sr2
    ];
    let compose = |a: usize, b: usize| -> usize {
        let (pa, pb) = (PERMS[a], PERMS[b]);
        let prod = [pa[pb[0]], pa[pb[1]], pa[pb[2]]];
        PERMS.iter().position(|p| *p == prod).unwrap()
    };
    group_ring(&["1", "r", "r2", "s", "sr", "sr2"], compose)
}

pub fn fib() -> FusionRing {
    FusionRing::from_products(
        &["1", "X"],
        vec![0, 1],
        &[&[&[0], &[1]], &[&[1], &[0, 1]]],
    )
}

pub fn ising() -> FusionRing {
    FusionRing::from_products(
        &["1", "X", "Y"],
        vec![0, 1, 2],
        &[
            &[&[0], &[1], &[2]],
            &[&[1], &[0], &[2]],
            &[&[2], &[2], &[0, 1]],
        ],
    )
}

pub fn rep_s3() -> FusionRing {
    FusionRing::from_products(
        &["1", "X", "Y"],
        vec![0, 1, 2],
        &[
            &[&[0], &[1], &[2]],
            &[&[1], &[0], &[2]],
            &[&[2], &[2], &[0, 1, 2]],
        ],
    )
}

pub fn psu2_5() -> FusionRing {
    FusionRing::from_products(
        &["1", "X", "Y"],
        vec![0, 1, 2],
        &[
            &[&[0], &[1], &[2]],
            &[&[1], &[0, 2], &[1, 2]],
            &[&[2], &[1, 2], &[0, 1, 2]],
        ],
    )
}

pub fn k_1_0_2_0() -> FusionRing {
    FusionRing::from_products(
        &["1", "X", "Y"],
        vec![0, 1, 2],
        &[
            &[&[0], &[1], &[2]],
            &[&[1], &[0, 1, 1, 2], &[1]],
            &[&[2], &[1], &[0]],
        ],
    )
}

pub fn ty_z3() -> FusionRing {
    FusionRing::from_products(
        &["1", "g", "g2", "s"],
        vec![0, 2, 1, 3],
        &[
            &[&[0], &[1], &[2], &[3]],
            &[&[1], &[2], &[0], &[3]],
            &[&[2], &[0], &[1], &[3]],
            &[&[3], &[3], &[3], &[0, 1, 2]],
        ],
    )
}

/// The thirteen built-in rings with their `FR^{r,n}_i` style identifiers.
pub fn builtin_rings() -> Vec<RingEntry> {
    let entry = |id: &str, display: &str, provenance: &str, cond: u64, ring: FusionRing| RingEntry {
        id: id.to_string(),
        display: display.to_string(),
        provenance: provenance.to_string(),
        char_conductor: cond,
        ring,
    };
    vec![
        entry("fr-1-0-1", "Vect", "rank 1", 1, trivial()),
        entry("fr-2-0-1", "Vec(Z/2)", "rank 2 pointed", 2, z2()),
        entry("fr-2-0-2", "Fib", "rank 2, golden", 5, fib()),
        entry("fr-3-2-1", "Vec(Z/3)", "rank 3 pointed", 3, z3()),
        entry("fr-3-0-1", "Ising", "rank 3, sqrt(2)", 8, ising()),
        entry("fr-3-0-2", "Rep(S3)", "rank 3 group representations", 3, rep_s3()),
        entry("fr-3-0-3", "psu(2)_5", "rank 3, sine ratios", 7, psu2_5()),
        entry(
            "k-1-0-2-0",
            "K(1,0,2,0)",
            "rank 3 with multiplicity, FPdim 6+2*sqrt(3)",
            12,
            k_1_0_2_0(),
        ),
        entry("fr-4-0-1", "Vec(Z/2 x Z/2)", "rank 4 pointed", 2, z2z2()),
        entry("fr-4-2-1", "Vec(Z/4)", "rank 4 pointed", 4, z4()),
        entry("fr-4-2-2", "TY(Z/3)", "rank 4 Tambara-Yamagami", 12, ty_z3()),
        entry("fr-6-2-1", "Vec(S3)", "rank 6 pointed", 3, vec_s3()),
        entry("fr-6-4-1", "Vec(Z/6)", "rank 6 pointed", 6, z6()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_builtin_rings_valid() {
        for entry in builtin_rings() {
            assert!(
                entry.ring.validate().is_empty(),
                "ring {} violates axioms",
                entry.id
            );
        }
    }

    #[test]
    fn k_ring_fp_dimension() {
        let fp = k_1_0_2_0().fp_dims(12).unwrap();
        // 6 + 2 sqrt(3) ~ 9.46
        let (total, _) = fp.total.approx();
        assert!((total - 9.4641016).abs() < 1e-6);
    }

    #[test]
    fn vec_s3_is_noncommutative_group_ring() {
        let ring = vec_s3();
        assert!(!ring.is_commutative());
        assert!(ring.validate().is_empty());
        let fp = ring.fp_dims(3).unwrap();
        assert!(fp.dims.iter().all(|d| d.to_rational().is_some()));
    }

    #[test]
    fn ty_z3_fp_dimension() {
        let fp = ty_z3().fp_dims(12).unwrap();
        assert_eq!(fp.total.to_rational().unwrap(), etale_core::rat_int(6));
    }
}
