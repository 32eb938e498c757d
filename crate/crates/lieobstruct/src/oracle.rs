//! Brute-force ground truth at desk scale.
//!
//! Nothing here row-reduces anything: candidate spaces are enumerated as
//! raw tuples and membership is decided by direct evaluation, so
//! agreement with the linear-algebra engine is evidence rather than
//! tautology. Budgets abort enumerations that would not finish.

use std::collections::HashSet;

use crate::algebra::{BracketAlgebra, LieAlgebra};
use crate::complex::{form_space_dim, tuples, Coefficients};
use crate::error::{Error, Result};
use crate::matrix::checked_power;
use crate::ring::{canonical_lift, lambda_residue, psi, RingElem};

/// Enumeration ceilings. Oracles refuse instances that exceed them
/// instead of degrading to sampling.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    pub max_candidates: u64,
    pub max_maps: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_candidates: 1_000_000,
            max_maps: 1_000_000,
        }
    }
}

impl OracleBudget {
    /// Reads LIEOBSTRUCT_BUDGET (one integer, applied to both ceilings),
    /// falling back to the defaults when unset or unparsable.
    pub fn from_env() -> Self {
        match std::env::var("LIEOBSTRUCT_BUDGET")
            .ok()
            .and_then(|v| v.parse::<u64>().ok())
        {
            Some(b) => OracleBudget {
                max_candidates: b,
                max_maps: b,
            },
            None => OracleBudget::default(),
        }
    }
}

fn over_budget(p: u64, exponent: u32, ceiling: u64) -> Error {
    Error::BudgetExceeded {
        needed: format!("{p}^{exponent}"),
        budget: ceiling,
    }
}

/// Little-endian base-p digits of index into len slots.
fn digits_of(index: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    let mut rest = index;
    for slot in out.iter_mut() {
        *slot = rest % p;
        rest /= p;
    }
    out
}

/// Every Lie algebra over R_{k+1} reducing to the base: all p^(n·C(n,2))
/// alternating corrections of the canonical lift, filtered by an exact
/// Jacobi check on each candidate.
pub fn enumerate_lifts_bruteforce(
    base: &LieAlgebra,
    budget: &OracleBudget,
) -> Result<Vec<LieAlgebra>> {
    let n = base.rank();
    let p = base.ring().p();
    let target = base.ring().raised()?;
    let fp = target.residue();
    let mut canonical: Vec<(usize, usize, Vec<RingElem>)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let lifted = (0..n)
                .map(|m| canonical_lift(base.c(i, j, m)))
                .collect::<Result<Vec<RingElem>>>()?;
            canonical.push((i, j, lifted));
        }
    }
    let slots = (n * canonical.len()) as u32;
    let total = checked_power(p, slots, budget.max_candidates)
        .ok_or_else(|| over_budget(p, slots, budget.max_candidates))?;

    let mut out = Vec::new();
    for index in 0..total {
        let correction = digits_of(index, p, slots as usize);
        let mut entries = Vec::with_capacity(canonical.len());
        for (pair, (i, j, coeffs)) in canonical.iter().enumerate() {
            let mut shifted = coeffs.clone();
            for (m, slot) in shifted.iter_mut().enumerate() {
                let digit = correction[pair * n + m];
                if digit != 0 {
                    *slot = &*slot + &psi(&RingElem::from_u64(fp, digit), target);
                }
            }
            entries.push((*i, *j, shifted));
        }
        let candidate = BracketAlgebra::from_upper_entries(target, n, &entries)?;
        if candidate.is_lie() {
            out.push(LieAlgebra::new(candidate)?);
        }
    }
    Ok(out)
}

/// Structure constants of x, y -> Psi_inverse([Psi x, Psi y]) for the map
/// Psi = Id + psi∘phi∘lambda, flattened to digit vectors for comparison.
/// phi is a raw n x n matrix over F_p, row-major.
fn transformed_tensor(lift: &LieAlgebra, phi: &[u64], n: usize) -> Vec<u64> {
    let ring = lift.ring();
    let p = ring.p();
    let fp = ring.residue();
    let shift = |x: &[RingElem]| -> Vec<RingElem> {
        let reduced: Vec<u64> = x.iter().map(|e| lambda_residue(e).residue_value()).collect();
        (0..n)
            .map(|r| {
                let mut acc = 0u64;
                for (c, &v) in reduced.iter().enumerate() {
                    acc += phi[r * n + c] * v;
                }
                psi(&RingElem::from_u64(fp, acc % p), ring)
            })
            .collect()
    };
    let mut key = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let xi: Vec<RingElem> = lift
                .basis_vector(i)
                .iter()
                .zip(shift(&lift.basis_vector(i)))
                .map(|(a, s)| a + &s)
                .collect();
            let xj: Vec<RingElem> = lift
                .basis_vector(j)
                .iter()
                .zip(shift(&lift.basis_vector(j)))
                .map(|(a, s)| a + &s)
                .collect();
            let v = lift.bracket(&xi, &xj).expect("same ring");
            let back: Vec<RingElem> = v.iter().zip(shift(&v)).map(|(a, s)| a - &s).collect();
            for e in back {
                key.extend(e.digits());
            }
        }
    }
    key
}

/// Groups lifts by the relation "some Id + psi∘phi∘lambda carries one
/// bracket to the other", decided by exhausting all p^(n^2) matrices phi.
/// Returns index classes in first-seen order.
pub fn partition_by_psi_equivalence(
    lifts: &[LieAlgebra],
    budget: &OracleBudget,
) -> Result<Vec<Vec<usize>>> {
    let Some(first) = lifts.first() else {
        return Ok(Vec::new());
    };
    let n = first.rank();
    let p = first.ring().p();
    for lift in lifts {
        if lift.ring() != first.ring() || lift.rank() != n {
            return Err(Error::DifferentBases);
        }
    }
    let maps = checked_power(p, (n * n) as u32, budget.max_maps)
        .ok_or_else(|| over_budget(p, (n * n) as u32, budget.max_maps))?;

    // The maps compose additively (the shifts square to zero), so each
    // orbit is the full sweep over phi; the lexicographically least
    // transformed tensor is a canonical orbit label.
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut labels: Vec<Vec<u64>> = Vec::new();
    for (index, lift) in lifts.iter().enumerate() {
        let mut label: Option<Vec<u64>> = None;
        for m in 0..maps {
            let phi = digits_of(m, p, n * n);
            let key = transformed_tensor(lift, &phi, n);
            if label.as_ref().is_none_or(|best| key < *best) {
                label = Some(key);
            }
        }
        let label = label.expect("at least the identity map");
        match labels.iter().position(|l| l == &label) {
            Some(c) => classes[c].push(index),
            None => {
                labels.push(label);
                classes.push(vec![index]);
            }
        }
    }
    Ok(classes)
}

/// Bracket of a basis vector with a coefficient vector, straight off the
/// residue structure tensor.
fn bracket_basis_vector(tensor: &[u64], p: u64, n: usize, i: usize, w: &[u64]) -> Vec<u64> {
    let mut out = vec![0u64; n];
    for (b, &wb) in w.iter().enumerate() {
        if wb == 0 {
            continue;
        }
        for (m, slot) in out.iter_mut().enumerate() {
            *slot = (*slot + wb * tensor[(i * n + b) * n + m]) % p;
        }
    }
    out
}

/// Value of a form at (v, e_rest...) by expanding the vector slot over
/// basis entries: merge each index into the ascending tuple, track the
/// insertion sign, drop repeats.
fn eval_vector_then_basis(
    coords: &[u64],
    all_tuples: &[Vec<usize>],
    fiber: usize,
    p: u64,
    v: &[u64],
    rest: &[usize],
) -> Vec<u64> {
    let mut out = vec![0u64; fiber];
    'entries: for (b, &vb) in v.iter().enumerate() {
        if vb == 0 {
            continue;
        }
        let mut merged = Vec::with_capacity(rest.len() + 1);
        let mut placed = false;
        let mut smaller = 0usize;
        for &r in rest {
            if r == b {
                continue 'entries;
            }
            if !placed && r > b {
                merged.push(b);
                placed = true;
            }
            if r < b {
                smaller += 1;
            }
            merged.push(r);
        }
        if !placed {
            merged.push(b);
        }
        let row = all_tuples
            .binary_search(&merged)
            .expect("ascending tuple is enumerated");
        let sign_pos = smaller % 2 == 0;
        for (m, slot) in out.iter_mut().enumerate() {
            let term = vb * coords[row * fiber + m] % p;
            *slot = if sign_pos {
                (*slot + term) % p
            } else {
                (*slot + p - term) % p
            };
        }
    }
    out
}

/// d of a degree-s form, evaluated tuple by tuple from the two-sum
/// formula. Returns the degree-(s+1) coordinate vector.
fn d_apply(
    a: &LieAlgebra,
    s: usize,
    kind: Coefficients,
    coords: &[u64],
) -> Vec<u64> {
    let n = a.rank();
    let p = a.ring().p();
    let tensor = a.residue_tensor();
    let fiber = match kind {
        Coefficients::Adjoint => n,
        Coefficients::Trivial => 1,
    };
    let source = tuples(n, s);
    let targets = tuples(n, s + 1);
    let mut out = vec![0u64; targets.len() * fiber];
    for (row, u) in targets.iter().enumerate() {
        let mut acc = vec![0u64; fiber];
        if kind == Coefficients::Adjoint {
            for (i, &ui) in u.iter().enumerate() {
                let omit: Vec<usize> = u
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i)
                    .map(|(_, &x)| x)
                    .collect();
                let srow = source.binary_search(&omit).expect("subtuple");
                let w = &coords[srow * fiber..(srow + 1) * fiber];
                let term = bracket_basis_vector(&tensor, p, n, ui, w);
                for (m, slot) in acc.iter_mut().enumerate() {
                    *slot = if i % 2 == 0 {
                        (*slot + term[m]) % p
                    } else {
                        (*slot + p - term[m]) % p
                    };
                }
            }
        }
        for i in 0..u.len() {
            for j in (i + 1)..u.len() {
                let mut v = vec![0u64; n];
                for m in 0..n {
                    v[m] = tensor[(u[i] * n + u[j]) * n + m];
                }
                let rest: Vec<usize> = u
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| t != i && t != j)
                    .map(|(_, &x)| x)
                    .collect();
                let term = eval_vector_then_basis(coords, &source, fiber, p, &v, &rest);
                for (m, slot) in acc.iter_mut().enumerate() {
                    *slot = if (i + j) % 2 == 0 {
                        (*slot + term[m]) % p
                    } else {
                        (*slot + p - term[m]) % p
                    };
                }
            }
        }
        out[row * fiber..(row + 1) * fiber].copy_from_slice(&acc);
    }
    out
}

/// log_p of a count known to be a power of p.
fn exact_log(count: u64, p: u64) -> usize {
    let mut rest = count;
    let mut e = 0;
    while rest > 1 {
        assert_eq!(rest % p, 0, "count {count} is not a power of {p}");
        rest /= p;
        e += 1;
    }
    e
}

/// Cohomology dimension by raw enumeration: count closed forms, count
/// distinct coboundaries, return the difference of their p-logs.
pub fn cohomology_bruteforce(
    a: &LieAlgebra,
    s: usize,
    kind: Coefficients,
    budget: &OracleBudget,
) -> Result<usize> {
    if !a.ring().is_residue_field() {
        return Err(Error::ResidueFieldOnly {
            operation: "cohomology oracle",
            level: a.ring().level(),
        });
    }
    let n = a.rank();
    let p = a.ring().p();
    let dim_s = form_space_dim(n, s, kind);
    let total = checked_power(p, dim_s as u32, budget.max_candidates)
        .ok_or_else(|| over_budget(p, dim_s as u32, budget.max_candidates))?;
    let mut closed = 0u64;
    for index in 0..total {
        let coords = digits_of(index, p, dim_s);
        if d_apply(a, s, kind, &coords).iter().all(|&v| v == 0) {
            closed += 1;
        }
    }
    let exact = if s == 0 {
        1
    } else {
        let dim_prev = form_space_dim(n, s - 1, kind);
        let total_prev = checked_power(p, dim_prev as u32, budget.max_candidates)
            .ok_or_else(|| over_budget(p, dim_prev as u32, budget.max_candidates))?;
        let mut seen = HashSet::new();
        for index in 0..total_prev {
            let coords = digits_of(index, p, dim_prev);
            seen.insert(d_apply(a, s - 1, kind, &coords));
        }
        seen.len() as u64
    };
    Ok(exact_log(closed, p) - exact_log(exact, p))
}
