//! Structure-constant algebras over R_k.
//!
//! A bracket algebra is a free R_k-module of rank n with an alternating
//! bilinear bracket given by a tensor c[i][j][m], meaning [e_i, e_j] =
//! sum_m c[i][j][m] e_m. A Lie algebra additionally satisfies the Jacobi
//! identity on all basis triples. The Jacobiator is trilinear and
//! alternating, so triples i < j < l suffice for validation.

use crate::error::{Error, Result};
use crate::ring::{self, RingElem, RingSpec};

fn idx(n: usize, i: usize, j: usize, m: usize) -> usize {
    (i * n + j) * n + m
}

/// Alternating bracket, Jacobi not required.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BracketAlgebra {
    ring: RingSpec,
    rank: usize,
    c: Vec<RingElem>,
}

impl BracketAlgebra {
    /// Builds from a full n^3 tensor, checking the alternating property.
    pub fn from_entries(ring: RingSpec, rank: usize, c: Vec<RingElem>) -> Result<Self> {
        if c.len() != rank * rank * rank {
            return Err(Error::TensorShape {
                got: c.len(),
                expected: rank * rank * rank,
                rank,
            });
        }
        for e in &c {
            assert_eq!(e.spec(), ring, "tensor entry from a different ring");
        }
        for i in 0..rank {
            for m in 0..rank {
                if !c[idx(rank, i, i, m)].is_zero() {
                    return Err(Error::NotAlternating { i, j: i });
                }
            }
            for j in (i + 1)..rank {
                for m in 0..rank {
                    let forward = &c[idx(rank, i, j, m)];
                    let backward = &c[idx(rank, j, i, m)];
                    if !(forward + backward).is_zero() {
                        return Err(Error::NotAlternating { i, j });
                    }
                }
            }
        }
        Ok(BracketAlgebra { ring, rank, c })
    }

    /// Builds from the i < j entries alone; the j > i half is filled in by
    /// antisymmetry, so the result is alternating by construction.
    pub fn from_upper_entries(
        ring: RingSpec,
        rank: usize,
        entries: &[(usize, usize, Vec<RingElem>)],
    ) -> Result<Self> {
        let mut c = vec![RingElem::zero(ring); rank * rank * rank];
        let mut seen = vec![false; rank * rank];
        for (i, j, coeffs) in entries {
            let (i, j) = (*i, *j);
            if i >= j || j >= rank {
                return Err(Error::Document(format!(
                    "bracket entry ({i},{j}) must satisfy i < j < n = {rank}"
                )));
            }
            if seen[i * rank + j] {
                return Err(Error::Document(format!(
                    "duplicate bracket entry for pair ({i},{j})"
                )));
            }
            seen[i * rank + j] = true;
            if coeffs.len() != rank {
                return Err(Error::LengthMismatch {
                    got: coeffs.len(),
                    expected: rank,
                });
            }
            for (m, v) in coeffs.iter().enumerate() {
                assert_eq!(v.spec(), ring, "tensor entry from a different ring");
                c[idx(rank, i, j, m)] = v.clone();
                c[idx(rank, j, i, m)] = -v;
            }
        }
        Ok(BracketAlgebra { ring, rank, c })
    }

    /// Builds from an integer tensor (row-major i, j, m), reduced into the
    /// ring entrywise.
    pub fn from_integer_tensor(ring: RingSpec, rank: usize, tensor: &[i64]) -> Result<Self> {
        if tensor.len() != rank * rank * rank {
            return Err(Error::TensorShape {
                got: tensor.len(),
                expected: rank * rank * rank,
                rank,
            });
        }
        let c = tensor
            .iter()
            .map(|&v| RingElem::from_i64(ring, v))
            .collect();
        Self::from_entries(ring, rank, c)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Structure constant c[i][j][m].
    pub fn c(&self, i: usize, j: usize, m: usize) -> &RingElem {
        &self.c[idx(self.rank, i, j, m)]
    }

    pub fn structure_tensor(&self) -> &[RingElem] {
        &self.c
    }

    /// Residue values of the tensor, flattened in the same order.
    pub fn residue_tensor(&self) -> Vec<u64> {
        self.c.iter().map(RingElem::residue_value).collect()
    }

    /// The nonzero i < j rows, each with its full coefficient vector.
    pub fn upper_entries(&self) -> Vec<(usize, usize, Vec<RingElem>)> {
        let mut out = Vec::new();
        for i in 0..self.rank {
            for j in (i + 1)..self.rank {
                let coeffs: Vec<RingElem> =
                    (0..self.rank).map(|m| self.c(i, j, m).clone()).collect();
                if coeffs.iter().any(|v| !v.is_zero()) {
                    out.push((i, j, coeffs));
                }
            }
        }
        out
    }

    pub fn zero_vector(&self) -> Vec<RingElem> {
        vec![RingElem::zero(self.ring); self.rank]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<RingElem> {
        let mut v = self.zero_vector();
        v[i] = RingElem::one(self.ring);
        v
    }

    /// [x, y] by bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[RingElem], y: &[RingElem]) -> Result<Vec<RingElem>> {
        if x.len() != self.rank {
            return Err(Error::LengthMismatch {
                got: x.len(),
                expected: self.rank,
            });
        }
        if y.len() != self.rank {
            return Err(Error::LengthMismatch {
                got: y.len(),
                expected: self.rank,
            });
        }
        let mut out = self.zero_vector();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let f = xi * yj;
                for m in 0..self.rank {
                    let cijm = self.c(i, j, m);
                    if !cijm.is_zero() {
                        out[m] = &out[m] + &(&f * cijm);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Jacobiator [[e_i,e_j],e_l] + [[e_j,e_l],e_i] + [[e_l,e_i],e_j] on a
    /// basis triple, straight from the tensor.
    pub fn jacobiator_basis(&self, i: usize, j: usize, l: usize) -> Vec<RingElem> {
        let n = self.rank;
        let mut out = self.zero_vector();
        for (x, y, z) in [(i, j, l), (j, l, i), (l, i, j)] {
            for a in 0..n {
                let inner = self.c(x, y, a);
                if inner.is_zero() {
                    continue;
                }
                for m in 0..n {
                    let outer = self.c(a, z, m);
                    if !outer.is_zero() {
                        out[m] = &out[m] + &(inner * outer);
                    }
                }
            }
        }
        out
    }

    /// True when Jacobi holds on every basis triple i < j < l.
    pub fn is_lie(&self) -> bool {
        self.first_jacobi_failure().is_none()
    }

    fn first_jacobi_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.rank;
        for i in 0..n {
            for j in (i + 1)..n {
                for l in (j + 1)..n {
                    if self.jacobiator_basis(i, j, l).iter().any(|v| !v.is_zero()) {
                        return Some((i, j, l));
                    }
                }
            }
        }
        None
    }

    /// Entrywise one-step reduction of the structure constants.
    pub fn reduce(&self) -> Result<BracketAlgebra> {
        let ring = self.ring.lowered()?;
        let c = self
            .c
            .iter()
            .map(ring::reduce_level)
            .collect::<Result<Vec<_>>>()?;
        Ok(BracketAlgebra {
            ring,
            rank: self.rank,
            c,
        })
    }

    /// Entrywise reduction all the way to the residue field.
    pub fn reduce_to_residue(&self) -> BracketAlgebra {
        BracketAlgebra {
            ring: self.ring.residue(),
            rank: self.rank,
            c: self.c.iter().map(ring::lambda_residue).collect(),
        }
    }
}

/// A bracket algebra whose Jacobi identity has been verified.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieAlgebra(BracketAlgebra);

impl LieAlgebra {
    pub fn new(b: BracketAlgebra) -> Result<Self> {
        match b.first_jacobi_failure() {
            None => Ok(LieAlgebra(b)),
            Some((i, j, l)) => Err(Error::JacobiFails { i, j, l }),
        }
    }

    pub fn as_bracket(&self) -> &BracketAlgebra {
        &self.0
    }

    pub fn into_bracket(self) -> BracketAlgebra {
        self.0
    }

    pub fn ring(&self) -> RingSpec {
        self.0.ring
    }

    pub fn rank(&self) -> usize {
        self.0.rank
    }

    pub fn c(&self, i: usize, j: usize, m: usize) -> &RingElem {
        self.0.c(i, j, m)
    }

    pub fn residue_tensor(&self) -> Vec<u64> {
        self.0.residue_tensor()
    }

    pub fn bracket(&self, x: &[RingElem], y: &[RingElem]) -> Result<Vec<RingElem>> {
        self.0.bracket(x, y)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<RingElem> {
        self.0.basis_vector(i)
    }

    pub fn zero_vector(&self) -> Vec<RingElem> {
        self.0.zero_vector()
    }
}

/// Outcome of classifying a tensor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Validated {
    Lie(LieAlgebra),
    Bracket(BracketAlgebra),
}

/// Classifies a tensor as a Lie algebra (alternating + Jacobi), a bracket
/// algebra (alternating only), or rejects it.
pub fn validate(ring: RingSpec, rank: usize, c: Vec<RingElem>) -> Result<Validated> {
    let b = BracketAlgebra::from_entries(ring, rank, c)?;
    Ok(match LieAlgebra::new(b.clone()) {
        Ok(lie) => Validated::Lie(lie),
        Err(_) => Validated::Bracket(b),
    })
}

/// One-step reduction R_{k+1} -> R_k of a Lie algebra.
pub fn reduce_algebra(a: &LieAlgebra) -> Result<LieAlgebra> {
    LieAlgebra::new(a.as_bracket().reduce()?)
}

/// Reduction of a Lie algebra to the residue field.
pub fn reduce_to_residue(a: &LieAlgebra) -> LieAlgebra {
    LieAlgebra::new(a.as_bracket().reduce_to_residue())
        .expect("Jacobi survives entrywise reduction")
}
