//! Structural predicates on Lie algebras over the residue field: center,
//! quotient by the center, perfectness, simplicity, Killing form,
//! unimodularity, and the spaces of invariant 3-forms (symmetric and
//! alternating).
//!
//! Every operation here requires level 1. Higher-level algebras must be
//! reduced first; callers that want the convenience do it explicitly.

use crate::algebra::{BracketAlgebra, LieAlgebra};
use crate::error::{Error, Result};
use crate::matrix::{checked_power, EchelonSpace, MatFp};
use crate::ring::RingElem;

/// Feasibility bound for the simplicity enumeration: p^n points.
pub const SIMPLE_ENUM_BOUND: u64 = 10_000_000;

/// Rank bound for the symmetric 3-form solver.
pub const SYM3_RANK_BOUND: usize = 12;

fn require_residue(a: &LieAlgebra, operation: &'static str) -> Result<()> {
    if !a.ring().is_residue_field() {
        return Err(Error::ResidueFieldOnly {
            operation,
            level: a.ring().level(),
        });
    }
    Ok(())
}

/// Matrix of ad e_i on the residue algebra: column j holds [e_i, e_j].
pub fn ad_matrix(a: &LieAlgebra, i: usize) -> Result<MatFp> {
    require_residue(a, "ad matrix")?;
    let n = a.rank();
    let c = a.residue_tensor();
    let mut m = MatFp::zeros(a.ring().p(), n, n);
    for j in 0..n {
        for row in 0..n {
            m.set(row, j, c[(i * n + j) * n + row]);
        }
    }
    Ok(m)
}

/// Basis of the center {v : [v, e_j] = 0 for all j}, as the kernel of the
/// stacked adjoint equations.
pub fn center(a: &LieAlgebra) -> Result<Vec<Vec<u64>>> {
    require_residue(a, "center")?;
    let n = a.rank();
    let p = a.ring().p();
    let c = a.residue_tensor();
    // Row (j, m) of the constraint matrix: sum_i v_i c[i][j][m] = 0.
    let mut m = MatFp::zeros(p, n * n, n);
    for j in 0..n {
        for mm in 0..n {
            for i in 0..n {
                m.set(j * n + mm, i, c[(i * n + j) * n + mm]);
            }
        }
    }
    Ok(m.kernel_basis())
}

/// Quotient by the center, on the complement basis picked by greedy
/// pivoting: the standard basis vectors avoiding the center's pivot columns.
pub fn quotient_by_center(a: &LieAlgebra) -> Result<LieAlgebra> {
    require_residue(a, "quotient by center")?;
    let n = a.rank();
    let p = a.ring().p();
    let ring = a.ring();
    let z = center(a)?;
    let mut zspace = EchelonSpace::new(p, n);
    for v in &z {
        zspace.insert(v);
    }
    let zdim = zspace.dim();
    let complement: Vec<usize> = (0..n).filter(|t| !zspace.pivots().contains(t)).collect();
    let q = n - zdim;
    assert_eq!(complement.len(), q);

    // Change of basis: complement vectors first, center vectors after.
    let mut basis = MatFp::zeros(p, n, n);
    for (col, &t) in complement.iter().enumerate() {
        basis.set(t, col, 1);
    }
    for (col, row) in zspace.basis().iter().enumerate() {
        for (r, &v) in row.iter().enumerate() {
            basis.set(r, q + col, v);
        }
    }
    let inv = basis
        .inverse()
        .expect("complement plus center is a basis of the whole space");

    let c = a.residue_tensor();
    let mut tensor = vec![RingElem::zero(ring); q * q * q];
    for (s, &ts) in complement.iter().enumerate() {
        for (u, &tu) in complement.iter().enumerate() {
            let w: Vec<u64> = (0..n).map(|m| c[(ts * n + tu) * n + m]).collect();
            let coords = inv.mul_vec(&w);
            // Center components of a bracket of central-complement classes
            // are discarded by the quotient.
            for m in 0..q {
                tensor[(s * q + u) * q + m] = RingElem::from_u64(ring, coords[m]);
            }
        }
    }
    LieAlgebra::new(BracketAlgebra::from_entries(ring, q, tensor)?)
}

/// True when the brackets [e_i, e_j] span the whole algebra.
pub fn is_perfect(a: &LieAlgebra) -> Result<bool> {
    require_residue(a, "perfectness")?;
    let n = a.rank();
    let p = a.ring().p();
    let c = a.residue_tensor();
    let mut m = MatFp::zeros(p, n, n * (n.saturating_sub(1)) / 2);
    let mut col = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            for row in 0..n {
                m.set(row, col, c[(i * n + j) * n + row]);
            }
            col += 1;
        }
    }
    Ok(m.rank() == n)
}

/// Smallest ideal containing v: closure of span{v} under bracketing with the
/// basis.
fn ideal_closure_dim(c: &[u64], n: usize, p: u64, v: &[u64]) -> usize {
    let mut space = EchelonSpace::new(p, n);
    space.insert(v);
    loop {
        if space.dim() == n {
            return n;
        }
        let rows: Vec<Vec<u64>> = space.basis().to_vec();
        let mut grew = false;
        for s in &rows {
            for j in 0..n {
                // [s, e_j]_m = sum_i s_i c[i][j][m]
                let mut w = vec![0u64; n];
                for (i, &si) in s.iter().enumerate() {
                    if si == 0 {
                        continue;
                    }
                    for (m, slot) in w.iter_mut().enumerate() {
                        *slot = (*slot + si * c[(i * n + j) * n + m]) % p;
                    }
                }
                grew |= space.insert(&w);
            }
        }
        if !grew {
            return space.dim();
        }
    }
}

/// Simplicity by exhaustion: nonabelian, and every projective point
/// generates the whole algebra as an ideal.
pub fn is_simple(a: &LieAlgebra) -> Result<bool> {
    require_residue(a, "simplicity")?;
    let n = a.rank();
    let p = a.ring().p();
    checked_power(p, n as u32, SIMPLE_ENUM_BOUND).ok_or(Error::GuardExceeded {
        what: "simplicity enumeration",
        bound: SIMPLE_ENUM_BOUND,
        actual: format!("{p}^{n}"),
    })?;
    let c = a.residue_tensor();
    if c.iter().all(|&x| x == 0) {
        return Ok(false);
    }
    // One representative per projective point: leading coordinate 1.
    for lead in 0..n {
        let tail = n - lead - 1;
        let count = checked_power(p, tail as u32, u64::MAX).expect("within guard");
        for mut t in 0..count {
            let mut v = vec![0u64; n];
            v[lead] = 1;
            for slot in v[lead + 1..].iter_mut() {
                *slot = t % p;
                t /= p;
            }
            if ideal_closure_dim(&c, n, p, &v) != n {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// K[i][j] = trace(ad e_i composed with ad e_j).
pub fn killing_form(a: &LieAlgebra) -> Result<MatFp> {
    require_residue(a, "Killing form")?;
    let n = a.rank();
    let p = a.ring().p();
    let c = a.residue_tensor();
    let mut k = MatFp::zeros(p, n, n);
    for i in 0..n {
        for j in 0..n {
            // tr(ad_i ad_j) = sum_{a,b} (ad_i)[a][b] (ad_j)[b][a]
            //              = sum_{a,b} c[i][b][a] c[j][a][b]
            let mut acc: u128 = 0;
            for aa in 0..n {
                for bb in 0..n {
                    acc += c[(i * n + bb) * n + aa] as u128 * c[(j * n + aa) * n + bb] as u128;
                }
            }
            k.set(i, j, (acc % p as u128) as u64);
        }
    }
    Ok(k)
}

pub fn is_killing_zero(a: &LieAlgebra) -> Result<bool> {
    Ok(killing_form(a)?.is_zero())
}

/// True when trace(ad e_i) = 0 for every basis vector.
pub fn is_unimodular(a: &LieAlgebra) -> Result<bool> {
    require_residue(a, "unimodularity")?;
    let n = a.rank();
    let p = a.ring().p();
    let c = a.residue_tensor();
    for i in 0..n {
        let mut tr: u64 = 0;
        for j in 0..n {
            tr = (tr + c[(i * n + j) * n + j]) % p;
        }
        if tr != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Sorted triples a <= b <= c indexing the symmetric 3-tensor coordinates,
/// in lexicographic order.
pub fn symmetric_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                out.push((a, b, c));
            }
        }
    }
    out
}

/// Basis of the space of symmetric trilinear forms omega with
/// omega([w,x],y,z) + omega(x,[w,y],z) + omega(x,y,[w,z]) = 0 for all basis
/// w,x,y,z. Coordinates follow symmetric_triples order.
pub fn invariant_symmetric_3forms(a: &LieAlgebra) -> Result<Vec<Vec<u64>>> {
    require_residue(a, "invariant symmetric 3-forms")?;
    let n = a.rank();
    if n > SYM3_RANK_BOUND {
        return Err(Error::GuardExceeded {
            what: "symmetric 3-form solver rank",
            bound: SYM3_RANK_BOUND as u64,
            actual: n.to_string(),
        });
    }
    let p = a.ring().p();
    let c = a.residue_tensor();
    let triples = symmetric_triples(n);
    let mut triple_index = vec![0usize; n * n * n];
    for (t, &(x, y, z)) in triples.iter().enumerate() {
        // All six orderings point at the same unknown.
        triple_index[(x * n + y) * n + z] = t;
        triple_index[(x * n + z) * n + y] = t;
        triple_index[(y * n + x) * n + z] = t;
        triple_index[(y * n + z) * n + x] = t;
        triple_index[(z * n + x) * n + y] = t;
        triple_index[(z * n + y) * n + x] = t;
    }
    let mut m = MatFp::zeros(p, n * n * n * n, triples.len());
    for w in 0..n {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let row = ((w * n + x) * n + y) * n + z;
                    // omega([w,x],y,z): [w,x] = sum_mm c[w][x][mm] e_mm.
                    for (slot1, slot2, slot3) in [(x, y, z), (y, x, z), (z, x, y)] {
                        // The moving argument replaces slot1; the fixed pair
                        // is (slot2, slot3).
                        for mm in 0..n {
                            let coeff = c[(w * n + slot1) * n + mm];
                            if coeff != 0 {
                                m.add(row, triple_index[(mm * n + slot2) * n + slot3], coeff);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(m.kernel_basis())
}

/// Strictly increasing triples a < b < c indexing alternating 3-form
/// coordinates, in lexicographic order.
pub fn alternating_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                out.push((a, b, c));
            }
        }
    }
    out
}

/// Coordinate index and sign of omega(a,b,c) relative to the sorted triple;
/// None when two arguments coincide.
fn alternating_lookup(n: usize, p: u64, a: usize, b: usize, c: usize) -> Option<(usize, u64)> {
    if a == b || b == c || a == c {
        return None;
    }
    let mut v = [a, b, c];
    v.sort_unstable();
    // Sign = parity of the inversion count of (a, b, c).
    let inv = usize::from(a > b) + usize::from(a > c) + usize::from(b > c);
    let (lo, mid, hi) = (v[0], v[1], v[2]);
    // Lexicographic position of (lo, mid, hi) among increasing triples.
    let mut idx = 0usize;
    for t in 0..lo {
        idx += (n - t - 1) * (n - t - 2) / 2;
    }
    for t in (lo + 1)..mid {
        idx += n - t - 1;
    }
    idx += hi - mid - 1;
    Some((idx, if inv % 2 == 0 { 1 } else { p - 1 }))
}

/// Basis of the space of alternating trilinear forms omega with
/// omega([w,x],y,z) + omega(x,[w,y],z) + omega(x,y,[w,z]) = 0 for all basis
/// w,x,y,z. Coordinates follow alternating_triples order.
///
/// This is the companion of invariant_symmetric_3forms; in small
/// characteristic the two spaces can differ sharply, e.g. a perfect algebra
/// with zero Killing form may carry a nondegenerate invariant alternating
/// form while no nonzero symmetric one exists.
pub fn invariant_alternating_3forms(a: &LieAlgebra) -> Result<Vec<Vec<u64>>> {
    require_residue(a, "invariant alternating 3-forms")?;
    let n = a.rank();
    if n > SYM3_RANK_BOUND {
        return Err(Error::GuardExceeded {
            what: "alternating 3-form solver rank",
            bound: SYM3_RANK_BOUND as u64,
            actual: n.to_string(),
        });
    }
    let p = a.ring().p();
    let c = a.residue_tensor();
    let triples = alternating_triples(n);
    // L_w of an alternating tensor is alternating, so rows with sorted
    // (x, y, z) already span all constraints.
    let mut m = MatFp::zeros(p, n * triples.len(), triples.len());
    for w in 0..n {
        for (t, &(x, y, z)) in triples.iter().enumerate() {
            let row = w * triples.len() + t;
            for mm in 0..n {
                for (coeff, slot) in [
                    (c[(w * n + x) * n + mm], alternating_lookup(n, p, mm, y, z)),
                    (c[(w * n + y) * n + mm], alternating_lookup(n, p, x, mm, z)),
                    (c[(w * n + z) * n + mm], alternating_lookup(n, p, x, y, mm)),
                ] {
                    if coeff == 0 {
                        continue;
                    }
                    if let Some((idx, sign)) = slot {
                        m.add(row, idx, coeff * sign % p);
                    }
                }
            }
        }
    }
    Ok(m.kernel_basis())
}
