//! Exhaustive enumeration of non-negative integer matrix representations
//! (NIM-reps) of a fusion ring, and internal-Hom candidate extraction.
//!
//! A NIM-rep of dimension `r` assigns an `r x r` matrix over the naturals to
//! every simple object so that `M_0 = 1`, `M_{i*} = M_i^T` and
//! `M_i M_j = sum_k N_{ij}^k M_k`. For a commutative fusion ring the
//! transpose condition makes every `M_i` normal, so each entry is bounded by
//! the Perron root `FPdim_i`; together with the row-sum-of-squares identity
//! `(M_i M_i^T)_{aa} = sum_k N_{i,i*}^k (M_k)_{aa}` this keeps the
//! backtracking search desk-scale. Results are deduplicated up to
//! simultaneous permutation of the module basis via a lexicographically
//! minimal canonical form.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::fusion::FusionRing;
use crate::{rat, Rational};

/// A NIM-rep: one `dim x dim` natural matrix per simple object, stored in
/// canonical (lexicographically minimal) form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct NimRep {
    dim: usize,
    /// `mats[i][a * dim + b]`, row-major.
    mats: Vec<Vec<u32>>,
}

impl NimRep {
    /// Raw constructor from row-major matrices (one per simple object).
    /// No equations are checked and the form is not canonical until
    /// [`NimRep::canonicalize`] runs; intended for test oracles.
    pub fn from_matrices(dim: usize, mats: Vec<Vec<u32>>) -> Self {
        NimRep { dim, mats }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self, object: usize) -> &[u32] {
        &self.mats[object]
    }

    pub fn entry(&self, object: usize, row: usize, col: usize) -> u32 {
        self.mats[object][row * self.dim + col]
    }

    pub fn matrices(&self) -> &[Vec<u32>] {
        &self.mats
    }

    /// The support graph of `sum_i M_i` is connected.
    pub fn is_indecomposable(&self) -> bool {
        let r = self.dim;
        if r == 0 {
            return true;
        }
        let mut adj = vec![false; r * r];
        for m in &self.mats {
            for a in 0..r {
                for b in 0..r {
                    if m[a * r + b] > 0 {
                        adj[a * r + b] = true;
                        adj[b * r + a] = true;
                    }
                }
            }
        }
        let mut seen = vec![false; r];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(a) = stack.pop() {
            for b in 0..r {
                if adj[a * r + b] && !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Internal-Hom multiplicity vectors: for each module basis element `m`
    /// the vector `n` with `n[i] = (M_i)_{mm}`, deduplicated and sorted.
    pub fn internal_hom_candidates(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = (0..self.dim)
            .map(|m| self.mats.iter().map(|mat| mat[m * self.dim + m]).collect())
            .collect();
        out.sort();
        out.dedup();
        out
    }

    /// Canonicalises: lexicographically minimal flattened matrix tuple under
    /// simultaneous permutation of the module basis.
    pub fn canonicalize(&mut self) {
        let r = self.dim;
        if r <= 1 {
            return;
        }
        let mut perm: Vec<usize> = (0..r).collect();
        let mut best: Option<Vec<Vec<u32>>> = None;
        permute_all(&mut perm, 0, &mut |p| {
            let candidate: Vec<Vec<u32>> = self
                .mats
                .iter()
                .map(|m| {
                    let mut out = vec![0u32; r * r];
                    for a in 0..r {
                        for b in 0..r {
                            out[a * r + b] = m[p[a] * r + p[b]];
                        }
                    }
                    out
                })
                .collect();
            match &best {
                Some(current) if candidate >= *current => {}
                _ => best = Some(candidate),
            }
        });
        self.mats = best.unwrap();
    }
}

fn permute_all<F: FnMut(&[usize])>(perm: &mut Vec<usize>, k: usize, f: &mut F) {
    let n = perm.len();
    if k == n {
        f(perm);
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute_all(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// The regular NIM-rep `(M_i)_{ab} = N[i][b][a]` of dimension `rank`.
pub fn regular_nimrep(ring: &FusionRing) -> NimRep {
    let r = ring.rank();
    let mats = (0..r)
        .map(|i| {
            let mut m = vec![0u32; r * r];
            for a in 0..r {
                for b in 0..r {
                    m[a * r + b] = ring.n(i, b, a);
                }
            }
            m
        })
        .collect();
    let mut rep = NimRep { dim: r, mats };
    rep.canonicalize();
    rep
}

/// Errors from NIM-rep enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NimRepError {
    DimensionTooLarge,
    InvalidRing,
    NonCommutativeRing,
    BoundsUnavailable,
}

/// Enumerates all NIM-reps of the given dimension up to simultaneous basis
/// permutation, in deterministic canonical order. Exhaustive: the entry and
/// row bounds are certified upper bounds, so no solution is pruned away.
pub fn enumerate_nimreps(
    ring: &FusionRing,
    dim: usize,
    ) -> Result<Vec<NimRep>, NimRepError> {
    if dim == 0 || dim > 9 {
        return Err(NimRepError::DimensionTooLarge);
    }
    if !ring.is_valid() {
        return Err(NimRepError::InvalidRing);
    }
    // the normal-matrix entry bound needs a commuting transpose-closed
    // family; pointed rings are fine either way since their matrices are
    // permutations
    let pointed = (1..ring.rank()).all(|i| ring.is_invertible(i));
    if !ring.is_commutative() && !pointed {
        return Err(NimRepError::NonCommutativeRing);
    }
    let rank = ring.rank();
    // certified upper bounds on FPdim_i, used as entry bounds
    let tol = rat(1, 1_000_000);
    let mut entry_bound = vec![0u32; rank];
    for i in 0..rank {
        let (_, hi) = ring
            .pf_eigenvalue_bounds(i, &tol)
            .ok_or(NimRepError::BoundsUnavailable)?;
        entry_bound[i] = hi.floor().to_integer().to_u32().unwrap_or(u32::MAX);
    }
    // row-sum-of-squares bound per object
    let row_bound: Vec<u64> = (0..rank)
        .map(|i| {
            (0..rank)
                .map(|k| ring.n(i, ring.dual(i), k) as u64 * entry_bound[k] as u64)
                .sum()
        })
        .collect();

    // representatives of dual orbits, unit excluded, descending FPdim
    let mut reps: Vec<usize> = (1..rank).filter(|&i| i <= ring.dual(i)).collect();
    reps.sort_by(|&a, &b| entry_bound[b].cmp(&entry_bound[a]).then(a.cmp(&b)));

    let mut mats: Vec<Option<Vec<u32>>> = vec![None; rank];
    let mut identity = vec![0u32; dim * dim];
    for a in 0..dim {
        identity[a * dim + a] = 1;
    }
    mats[0] = Some(identity);

    let mut found: Vec<NimRep> = Vec::new();
    search(
        ring,
        dim,
        &reps,
        0,
        &entry_bound,
        &row_bound,
        &mut mats,
        &mut found,
    );

    for rep in found.iter_mut() {
        rep.canonicalize();
    }
    found.sort();
    found.dedup();
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn search(
    ring: &FusionRing,
    dim: usize,
    reps: &[usize],
    next: usize,
    entry_bound: &[u32],
    row_bound: &[u64],
    mats: &mut Vec<Option<Vec<u32>>>,
    found: &mut Vec<NimRep>,
) {
    if next == reps.len() {
        if verify_all(ring, dim, mats) {
            let collected: Vec<Vec<u32>> =
                mats.iter().map(|m| m.clone().unwrap()).collect();
            found.push(NimRep {
                dim,
                mats: collected,
            });
        }
        return;
    }
    let obj = reps[next];
    // when a completed product determines this object's matrix linearly,
    // solve for it instead of enumerating (any valid completion must agree,
    // so failure of naturality prunes the branch soundly)
    if let Some(matrix) = derive_matrix(ring, dim, obj, mats) {
        // a None inside means negative entries: no valid completion
        if let Some(m) = matrix {
            let dual = ring.dual(obj);
            let transpose = {
                let mut t = vec![0u32; dim * dim];
                for a in 0..dim {
                    for b in 0..dim {
                        t[b * dim + a] = m[a * dim + b];
                    }
                }
                t
            };
            mats[obj] = Some(m);
            if dual != obj {
                mats[dual] = Some(transpose);
            }
            if partial_products_ok(ring, dim, mats) {
                search(ring, dim, reps, next + 1, entry_bound, row_bound, mats, found);
            }
            mats[obj] = None;
            if dual != obj {
                mats[dual] = None;
            }
        }
        return;
    }
    let self_dual = ring.dual(obj) == obj;
    // cells to fill: upper triangle for self-dual objects
    let cells: Vec<(usize, usize)> = if self_dual {
        (0..dim)
            .flat_map(|a| (a..dim).map(move |b| (a, b)))
            .collect()
    } else {
        (0..dim)
            .flat_map(|a| (0..dim).map(move |b| (a, b)))
            .collect()
    };
    let mut matrix = vec![0u32; dim * dim];
    fill_cells(
        ring,
        dim,
        reps,
        next,
        obj,
        self_dual,
        &cells,
        0,
        &mut matrix,
        entry_bound,
        row_bound,
        mats,
        found,
    );
}

#[allow(clippy::too_many_arguments)]
fn fill_cells(
    ring: &FusionRing,
    dim: usize,
    reps: &[usize],
    next: usize,
    obj: usize,
    self_dual: bool,
    cells: &[(usize, usize)],
    idx: usize,
    matrix: &mut Vec<u32>,
    entry_bound: &[u32],
    row_bound: &[u64],
    mats: &mut Vec<Option<Vec<u32>>>,
    found: &mut Vec<NimRep>,
) {
    if idx == cells.len() {
        // place the matrix and its dual, check available products
        let transpose = {
            let mut t = vec![0u32; dim * dim];
            for a in 0..dim {
                for b in 0..dim {
                    t[b * dim + a] = matrix[a * dim + b];
                }
            }
            t
        };
        mats[obj] = Some(matrix.clone());
        let dual = ring.dual(obj);
        if !self_dual {
            mats[dual] = Some(transpose);
        }
        if partial_products_ok(ring, dim, mats) {
            search(ring, dim, reps, next + 1, entry_bound, row_bound, mats, found);
        }
        mats[obj] = None;
        if !self_dual {
            mats[dual] = None;
        }
        return;
    }
    let (a, b) = cells[idx];
    let bound = entry_bound[obj];
    for v in 0..=bound {
        matrix[a * dim + b] = v;
        if self_dual {
            matrix[b * dim + a] = v;
        }
        if row_squares_ok(dim, matrix, row_bound[obj], a) {
            fill_cells(
                ring,
                dim,
                reps,
                next,
                obj,
                self_dual,
                cells,
                idx + 1,
                matrix,
                entry_bound,
                row_bound,
                mats,
                found,
            );
        }
    }
    matrix[a * dim + b] = 0;
    if self_dual {
        matrix[b * dim + a] = 0;
    }
}

/// If some fully placed product `M_j M_k` contains `obj` exactly once with
/// all other summands placed, its matrix is determined: returns
/// `Some(Some(m))` when the solved matrix is non-negative, `Some(None)`
/// when it would need negative entries (dead branch), `None` when no
/// product determines the object.
fn derive_matrix(
    ring: &FusionRing,
    dim: usize,
    obj: usize,
    mats: &[Option<Vec<u32>>],
) -> Option<Option<Vec<u32>>> {
    let rank = ring.rank();
    for j in 0..rank {
        for k in 0..rank {
            if ring.n(j, k, obj) != 1 {
                continue;
            }
            let (mj, mk) = match (&mats[j], &mats[k]) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            let others_placed =
                (0..rank).all(|l| l == obj || ring.n(j, k, l) == 0 || mats[l].is_some());
            if !others_placed {
                continue;
            }
            let mut m = vec![0u32; dim * dim];
            for a in 0..dim {
                for b in 0..dim {
                    let mut product = 0u64;
                    for c in 0..dim {
                        product += mj[a * dim + c] as u64 * mk[c * dim + b] as u64;
                    }
                    let rest: u64 = (0..rank)
                        .filter(|&l| l != obj && ring.n(j, k, l) > 0)
                        .map(|l| {
                            ring.n(j, k, l) as u64
                                * mats[l].as_ref().unwrap()[a * dim + b] as u64
                        })
                        .sum();
                    if product < rest {
                        return Some(None);
                    }
                    m[a * dim + b] = (product - rest) as u32;
                }
            }
            return Some(Some(m));
        }
    }
    None
}

fn row_squares_ok(dim: usize, matrix: &[u32], bound: u64, row: usize) -> bool {
    let sum: u64 = (0..dim)
        .map(|b| {
            let v = matrix[row * dim + b] as u64;
            v * v
        })
        .sum();
    sum <= bound
}

/// Checks every product equation whose matrices are all placed.
fn partial_products_ok(ring: &FusionRing, dim: usize, mats: &[Option<Vec<u32>>]) -> bool {
    let rank = ring.rank();
    for i in 0..rank {
        for j in 0..rank {
            let (mi, mj) = match (&mats[i], &mats[j]) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            let mut rhs_known = true;
            for k in 0..rank {
                if ring.n(i, j, k) > 0 && mats[k].is_none() {
                    rhs_known = false;
                    break;
                }
            }
            if !rhs_known {
                continue;
            }
            if !product_matches(ring, dim, i, j, mi, mj, mats) {
                return false;
            }
        }
    }
    true
}

fn product_matches(
    ring: &FusionRing,
    dim: usize,
    i: usize,
    j: usize,
    mi: &[u32],
    mj: &[u32],
    mats: &[Option<Vec<u32>>],
) -> bool {
    for a in 0..dim {
        for b in 0..dim {
            let mut lhs = 0u64;
            for c in 0..dim {
                lhs += mi[a * dim + c] as u64 * mj[c * dim + b] as u64;
            }
            let mut rhs = 0u64;
            for k in 0..ring.rank() {
                let n = ring.n(i, j, k);
                if n > 0 {
                    rhs += n as u64 * mats[k].as_ref().unwrap()[a * dim + b] as u64;
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn verify_all(ring: &FusionRing, dim: usize, mats: &[Option<Vec<u32>>]) -> bool {
    let rank = ring.rank();
    for i in 0..rank {
        if mats[i].is_none() {
            return false;
        }
    }
    for i in 0..rank {
        for j in 0..rank {
            if !product_matches(
                ring,
                dim,
                i,
                j,
                mats[i].as_ref().unwrap(),
                mats[j].as_ref().unwrap(),
                mats,
            ) {
                return false;
            }
        }
    }
    // transpose condition
    for i in 0..rank {
        let mi = mats[i].as_ref().unwrap();
        let md = mats[ring.dual(i)].as_ref().unwrap();
        for a in 0..dim {
            for b in 0..dim {
                if mi[a * dim + b] != md[b * dim + a] {
                    return false;
                }
            }
        }
    }
    true
}

/// Certified check that the Perron root of each NIM-rep matrix matches the
/// corresponding `FPdim` within `10^-9` (a consequence of the representation
/// property; used as a post-search sanity gate in tests).
pub fn pf_consistency(ring: &FusionRing, rep: &NimRep, fp_hint: u64) -> bool {
    let fp = match ring.fp_dims(fp_hint) {
        Ok(fp) => fp,
        Err(_) => return false,
    };
    let tol = Rational::new(crate::BigInt::from(1), crate::BigInt::from(1_000_000_000u64));
    for i in 0..ring.rank() {
        // Collatz-Wielandt on M_i + 1 with the all-ones start diverges on
        // nilpotent-free blocks only; the zero matrix means FPdim must be 0,
        // which cannot happen, so treat failure as mismatch.
        let m = rep.matrix(i);
        let dim = rep.dim();
        if m.iter().all(|&v| v == 0) {
            return false;
        }
        let mut v: Vec<crate::BigInt> = vec![crate::BigInt::from(1); dim];
        let mut ok = false;
        for _ in 0..20_000 {
            let mut w = vec![crate::BigInt::from(0u32); dim];
            for a in 0..dim {
                for b in 0..dim {
                    if m[a * dim + b] > 0 {
                        w[a] += crate::BigInt::from(m[a * dim + b]) * &v[b];
                    }
                }
                w[a] += &v[a];
            }
            let ratios: Vec<Rational> = (0..dim)
                .map(|a| Rational::new(w[a].clone(), v[a].clone()))
                .collect();
            let lo = ratios.iter().min().unwrap().clone();
            let hi = ratios.iter().max().unwrap().clone();
            if &hi - &lo <= tol {
                let one = crate::rat_int(1);
                let iv = fp.dims[i].real_interval(10).unwrap();
                if iv.hi < &lo - &one - &tol || iv.lo > &hi - &one + &tol {
                    return false;
                }
                ok = true;
                break;
            }
            v = w;
        }
        if !ok {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::test_rings::*;

    #[test]
    fn fib_two_dimensional_unique() {
        let reps = enumerate_nimreps(&fib(), 2).unwrap();
        assert_eq!(reps.len(), 1);
        let m = reps[0].matrix(1);
        assert_eq!(m, &[0, 1, 1, 1]);
        assert!(reps[0].is_indecomposable());
        // internal-Hom candidates: diagonals (1,0) and (1,1)
        assert_eq!(
            reps[0].internal_hom_candidates(),
            vec![vec![1, 0], vec![1, 1]]
        );
    }

    #[test]
    fn fib_no_one_or_three_dimensional() {
        assert!(enumerate_nimreps(&fib(), 1).unwrap().is_empty());
        assert!(enumerate_nimreps(&fib(), 3).unwrap().is_empty());
    }

    #[test]
    fn ising_no_one_dimensional() {
        assert!(enumerate_nimreps(&ising(), 1).unwrap().is_empty());
    }

    #[test]
    fn psu2_5_no_one_dimensional() {
        assert!(enumerate_nimreps(&psu2_5(), 1).unwrap().is_empty());
    }

    #[test]
    fn z2_two_dimensional_pair() {
        let reps = enumerate_nimreps(&z2(), 2).unwrap();
        assert_eq!(reps.len(), 2);
        // identity action (decomposable) and the swap (regular rep)
        let kinds: Vec<bool> = reps.iter().map(|r| r.is_indecomposable()).collect();
        assert!(kinds.contains(&true) && kinds.contains(&false));
        // the regular rep reads off the trivial internal Hom
        let regular = regular_nimrep(&z2());
        assert!(reps.contains(&regular));
        assert_eq!(regular.internal_hom_candidates(), vec![vec![1, 0]]);
    }

    #[test]
    fn z2_one_dimensional() {
        let reps = enumerate_nimreps(&z2(), 1).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].matrix(1), &[1]);
        assert_eq!(reps[0].internal_hom_candidates(), vec![vec![1, 1]]);
    }

    #[test]
    fn regular_rep_always_found() {
        for ring in [z2(), fib(), z3(), ising(), rep_s3(), psu2_5()] {
            let reps = enumerate_nimreps(&ring, ring.rank()).unwrap();
            let regular = regular_nimrep(&ring);
            assert!(
                reps.contains(&regular),
                "regular rep missing for {:?}",
                ring.labels()
            );
        }
    }

    #[test]
    fn rep_s3_two_dimensional() {
        let reps = enumerate_nimreps(&rep_s3(), 2).unwrap();
        // the (swap, all-ones) module action and the decomposable double
        // of the one-dimensional rep
        assert_eq!(reps.len(), 2);
        let with_diag: Vec<Vec<Vec<u32>>> = reps
            .iter()
            .map(|r| r.internal_hom_candidates())
            .collect();
        assert!(with_diag.contains(&vec![vec![1, 0, 1]]));
        assert!(with_diag.contains(&vec![vec![1, 1, 2]]));
    }

    #[test]
    fn canonical_form_idempotent_and_permutation_stable() {
        let reps = enumerate_nimreps(&fib(), 2).unwrap();
        let mut rep = reps[0].clone();
        let before = rep.clone();
        rep.canonicalize();
        assert_eq!(rep, before);
        // permuted copy canonicalises to the same form
        let permuted_mats: Vec<Vec<u32>> = before
            .matrices()
            .iter()
            .map(|m| {
                let perm = [1usize, 0];
                let mut out = vec![0u32; 4];
                for a in 0..2 {
                    for b in 0..2 {
                        out[a * 2 + b] = m[perm[a] * 2 + perm[b]];
                    }
                }
                out
            })
            .collect();
        let mut permuted = NimRep {
            dim: 2,
            mats: permuted_mats,
        };
        permuted.canonicalize();
        assert_eq!(permuted, before);
    }

    #[test]
    fn pf_consistency_on_catalog_reps() {
        let reps = enumerate_nimreps(&fib(), 2).unwrap();
        assert!(pf_consistency(&fib(), &reps[0], 5));
    }
}
