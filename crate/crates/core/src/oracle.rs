//! Independent brute-force oracle for NIM-rep enumeration (test-only; the
//! `oracle` feature gates it out of normal builds).
//!
//! The oracle enumerates raw matrix tuples over the certified entry bounds
//! without search pruning, using only defining structure: transpose ties,
//! matrices determined linearly by completed fusion products, and the fact
//! that an invertible object's matrix satisfies `M M^T = 1` and is
//! therefore a permutation. Everything found is verified against all
//! equations and canonicalised. It shares no code with the backtracking
//! engine beyond the `NimRep` container.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::fusion::FusionRing;
use crate::nimrep::NimRep;
use crate::rat;

/// Upper entry bound per object from certified Collatz-Wielandt intervals.
fn entry_bounds(ring: &FusionRing) -> Vec<u32> {
    let tol = rat(1, 1_000_000);
    (0..ring.rank())
        .map(|i| {
            let (_, hi) = ring.pf_eigenvalue_bounds(i, &tol).expect("bounds");
            hi.floor().to_integer().to_u32().unwrap()
        })
        .collect()
}

fn all_matrices(dim: usize, bound: u32, symmetric: bool) -> Vec<Vec<u32>> {
    let cells: Vec<(usize, usize)> = if symmetric {
        (0..dim)
            .flat_map(|a| (a..dim).map(move |b| (a, b)))
            .collect()
    } else {
        (0..dim)
            .flat_map(|a| (0..dim).map(move |b| (a, b)))
            .collect()
    };
    let mut out = Vec::new();
    let mut values = vec![0u32; cells.len()];
    loop {
        let mut m = vec![0u32; dim * dim];
        for (idx, &(a, b)) in cells.iter().enumerate() {
            m[a * dim + b] = values[idx];
            if symmetric {
                m[b * dim + a] = values[idx];
            }
        }
        out.push(m);
        let mut pos = cells.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            values[pos] += 1;
            if values[pos] <= bound {
                break;
            }
            values[pos] = 0;
        }
    }
}

/// Permutation matrices: `M M^T = 1` over the naturals forces exactly one
/// unit entry per row and column, so invertible objects range over these.
fn permutation_matrices(dim: usize) -> Vec<Vec<u32>> {
    let mut perms = Vec::new();
    let mut current: Vec<usize> = (0..dim).collect();
    heap_permutations(&mut current, dim, &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let mut m = vec![0u32; dim * dim];
            for (a, &b) in p.iter().enumerate() {
                m[a * dim + b] = 1;
            }
            m
        })
        .collect()
}

fn heap_permutations(current: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == 1 {
        out.push(current.clone());
        return;
    }
    for i in 0..k {
        heap_permutations(current, k - 1, out);
        if k % 2 == 0 {
            current.swap(i, k - 1);
        } else {
            current.swap(0, k - 1);
        }
    }
}

fn mat_mul(dim: usize, a: &[u32], b: &[u32]) -> Vec<u64> {
    let mut out = vec![0u64; dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                out[i * dim + j] += a[i * dim + k] as u64 * b[k * dim + j] as u64;
            }
        }
    }
    out
}

fn satisfies_all(ring: &FusionRing, dim: usize, mats: &[Vec<u32>]) -> bool {
    let rank = ring.rank();
    for i in 0..rank {
        for j in 0..rank {
            let product = mat_mul(dim, &mats[i], &mats[j]);
            for cell in 0..dim * dim {
                let rhs: u64 = (0..rank)
                    .map(|k| ring.n(i, j, k) as u64 * mats[k][cell] as u64)
                    .sum();
                if product[cell] != rhs {
                    return false;
                }
            }
        }
    }
    for i in 0..rank {
        let dual = ring.dual(i);
        for a in 0..dim {
            for b in 0..dim {
                if mats[i][a * dim + b] != mats[dual][b * dim + a] {
                    return false;
                }
            }
        }
    }
    true
}

fn transpose(dim: usize, m: &[u32]) -> Vec<u32> {
    let mut t = vec![0u32; dim * dim];
    for a in 0..dim {
        for b in 0..dim {
            t[b * dim + a] = m[a * dim + b];
        }
    }
    t
}

/// Brute-force enumeration of all NIM-reps of the given dimension, up to
/// simultaneous basis permutation. Free objects scan every raw matrix in
/// range; objects that appear as the unique unknown summand of an earlier
/// product are solved linearly.
pub fn enumerate_nimreps_oracle(ring: &FusionRing, dim: usize) -> Vec<NimRep> {
    let rank = ring.rank();
    let bounds = entry_bounds(ring);
    let mut identity = vec![0u32; dim * dim];
    for a in 0..dim {
        identity[a * dim + a] = 1;
    }

    let mut free: Vec<usize> = Vec::new();
    let mut derived: Vec<Option<(usize, usize)>> = vec![None; rank];
    for i in 1..rank {
        if ring.dual(i) < i {
            continue;
        }
        let known = |x: usize, i: usize| x < i || ring.dual(x) < i;
        let mut derivation = None;
        'outer: for j in 0..rank {
            for k in 0..rank {
                if !(known(j, i) && known(k, i)) || ring.n(j, k, i) != 1 {
                    continue;
                }
                if (0..rank).all(|l| l == i || ring.n(j, k, l) == 0 || known(l, i)) {
                    derivation = Some((j, k));
                    break 'outer;
                }
            }
        }
        match derivation {
            Some(d) => derived[i] = Some(d),
            None => free.push(i),
        }
    }

    let choices: Vec<Vec<Vec<u32>>> = free
        .iter()
        .map(|&i| {
            if ring.is_invertible(i) {
                permutation_matrices(dim)
            } else {
                all_matrices(dim, bounds[i], ring.dual(i) == i)
            }
        })
        .collect();

    let mut found = Vec::new();
    let mut idx = vec![0usize; free.len()];
    'scan: loop {
        let mut mats: Vec<Option<Vec<u32>>> = vec![None; rank];
        mats[0] = Some(identity.clone());
        for (pos, &i) in free.iter().enumerate() {
            let m = choices[pos][idx[pos]].clone();
            mats[ring.dual(i)] = Some(transpose(dim, &m));
            mats[i] = Some(m);
        }
        let mut consistent = true;
        // derived objects may depend on earlier derived ones: iterate
        loop {
            let mut progressed = false;
            for i in 1..rank {
                if mats[i].is_some() {
                    continue;
                }
                let (j, k) = match derived[i] {
                    Some(d) => d,
                    None => {
                        consistent = false;
                        break;
                    }
                };
                let (mj, mk) = match (&mats[j], &mats[k]) {
                    (Some(a), Some(b)) => (a.clone(), b.clone()),
                    _ => continue,
                };
                let rest_known = (0..rank)
                    .all(|l| l == i || ring.n(j, k, l) == 0 || mats[l].is_some());
                if !rest_known {
                    continue;
                }
                let product = mat_mul(dim, &mj, &mk);
                let mut m = vec![0u32; dim * dim];
                let mut ok = true;
                for cell in 0..dim * dim {
                    let rest: u64 = (0..rank)
                        .filter(|&l| l != i && ring.n(j, k, l) > 0)
                        .map(|l| {
                            ring.n(j, k, l) as u64
                                * mats[l].as_ref().unwrap()[cell] as u64
                        })
                        .sum();
                    if product[cell] < rest {
                        ok = false;
                        break;
                    }
                    m[cell] = (product[cell] - rest) as u32;
                }
                if !ok {
                    consistent = false;
                    break;
                }
                mats[ring.dual(i)] = Some(transpose(dim, &m));
                mats[i] = Some(m);
                progressed = true;
            }
            if !consistent || !progressed {
                break;
            }
        }
        if consistent && mats.iter().all(|m| m.is_some()) {
            let full: Vec<Vec<u32>> = mats.into_iter().map(|m| m.unwrap()).collect();
            if satisfies_all(ring, dim, &full) {
                found.push(NimRep::from_matrices(dim, full));
            }
        }
        let mut pos = free.len();
        loop {
            if pos == 0 {
                break 'scan;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < choices[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
    for rep in found.iter_mut() {
        rep.canonicalize();
    }
    found.sort();
    found.dedup();
    found
}
