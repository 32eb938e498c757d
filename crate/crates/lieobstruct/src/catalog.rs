//! Named algebras with integer structure constants, reduced into any R_k on
//! request. psl is the one exception: it is the quotient of sl by its
//! center, so it only exists over the residue field and only when p divides
//! n.

use crate::algebra::{BracketAlgebra, LieAlgebra};
use crate::error::{Error, Result};
use crate::ring::RingSpec;
use crate::structure::quotient_by_center;

/// Integer n x n matrices, row-major.
type IntMat = Vec<i64>;

fn commutator(a: &IntMat, b: &IntMat, n: usize) -> IntMat {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0i64;
            for t in 0..n {
                acc += a[i * n + t] * b[t * n + j] - b[i * n + t] * a[t * n + j];
            }
            out[i * n + j] = acc;
        }
    }
    out
}

fn elementary(n: usize, i: usize, j: usize) -> IntMat {
    let mut m = vec![0i64; n * n];
    m[i * n + j] = 1;
    m
}

/// Structure tensor from a basis of integer matrices and a coordinate map.
fn tensor_from_matrices(
    basis: &[IntMat],
    n: usize,
    express: impl Fn(&IntMat) -> Vec<i64>,
) -> Vec<i64> {
    let rank = basis.len();
    let mut tensor = vec![0i64; rank * rank * rank];
    for (a, ma) in basis.iter().enumerate() {
        for (b, mb) in basis.iter().enumerate() {
            let coords = express(&commutator(ma, mb, n));
            for (m, &v) in coords.iter().enumerate() {
                tensor[(a * rank + b) * rank + m] = v;
            }
        }
    }
    tensor
}

/// sl(n): trace-zero n x n matrices. Basis: E_ij for i != j in row-major
/// order, then h_t = E_tt - E_{t+1,t+1} for t = 0..n-2.
fn sl_tensor(n: usize) -> (usize, Vec<i64>) {
    assert!(n >= 1);
    let rank = n * n - 1;
    let mut basis: Vec<IntMat> = Vec::with_capacity(rank);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                basis.push(elementary(n, i, j));
            }
        }
    }
    for t in 0..n - 1 {
        let mut h = vec![0i64; n * n];
        h[t * n + t] = 1;
        h[(t + 1) * n + t + 1] = -1;
        basis.push(h);
    }
    let express = move |m: &IntMat| -> Vec<i64> {
        let mut coords = vec![0i64; rank];
        let mut pos = 0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    coords[pos] = m[i * n + j];
                    pos += 1;
                }
            }
        }
        // Diagonal (d_0..d_{n-1}) with zero sum: the h-coordinates are the
        // partial sums a_t = d_0 + ... + d_t.
        let mut acc = 0i64;
        for t in 0..n - 1 {
            acc += m[t * n + t];
            coords[pos + t] = acc;
        }
        assert_eq!(acc + m[(n - 1) * n + n - 1], 0, "commutators are trace zero");
        coords
    };
    (rank, tensor_from_matrices(&basis, n, express))
}

/// Strictly upper triangular n x n matrices. Basis: E_ij for i < j in
/// row-major order.
fn nilpotent_triangular_tensor(n: usize) -> (usize, Vec<i64>) {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            pairs.push((i, j));
        }
    }
    let rank = pairs.len();
    let basis: Vec<IntMat> = pairs.iter().map(|&(i, j)| elementary(n, i, j)).collect();
    let pairs_for_express = pairs.clone();
    let express = move |m: &IntMat| -> Vec<i64> {
        let coords: Vec<i64> = pairs_for_express.iter().map(|&(i, j)| m[i * n + j]).collect();
        // Everything off the strict upper triangle must be zero.
        for i in 0..n {
            for j in 0..=i {
                assert_eq!(m[i * n + j], 0, "bracket left the strict upper triangle");
            }
        }
        coords
    };
    (rank, tensor_from_matrices(&basis, n, express))
}

fn heisenberg_tensor() -> (usize, Vec<i64>) {
    let mut t = vec![0i64; 27];
    // [e0, e1] = e2 and its antisymmetric mirror; e2 is central.
    t[5] = 1; // (i=0, j=1, m=2)
    t[11] = -1; // (i=1, j=0, m=2)
    (3, t)
}

/// Splits "name(N)" into the base name and the embedded rank.
fn parse_name(name: &str) -> Result<(&str, Option<usize>)> {
    match name.find('(') {
        None => Ok((name, None)),
        Some(open) => {
            let inner = name[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::UnknownCatalog(name.to_string()))?;
            let n = inner
                .parse::<usize>()
                .map_err(|_| Error::UnknownCatalog(name.to_string()))?;
            Ok((&name[..open], Some(n)))
        }
    }
}

/// Looks up a named algebra over the requested ring. The rank may be given
/// either as an argument or embedded in the name ("abelian(4)").
pub fn catalog(name: &str, rank: Option<usize>, ring: RingSpec) -> Result<LieAlgebra> {
    let (base, embedded) = parse_name(name)?;
    let rank = match (embedded, rank) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Document(format!(
                "conflicting ranks for catalog entry '{name}': {a} vs {b}"
            )));
        }
        (Some(a), _) => Some(a),
        (None, b) => b,
    };
    let need_rank = || {
        rank.ok_or(Error::CatalogNeedsRank {
            name: base.to_string(),
        })
    };

    let (tensor_rank, tensor) = match base {
        "abelian" => {
            let n = need_rank()?;
            (n, vec![0i64; n * n * n])
        }
        "heisenberg" => {
            if rank.is_some() {
                return Err(Error::Document(
                    "catalog entry 'heisenberg' takes no rank argument".into(),
                ));
            }
            heisenberg_tensor()
        }
        "sl" => {
            let n = need_rank()?;
            if n < 1 {
                return Err(Error::Document("sl requires n >= 1".into()));
            }
            sl_tensor(n)
        }
        "psl" => {
            let n = need_rank()?;
            if n < 1 {
                return Err(Error::Document("psl requires n >= 1".into()));
            }
            if !ring.is_residue_field() {
                return Err(Error::ResidueFieldOnly {
                    operation: "psl catalog entry",
                    level: ring.level(),
                });
            }
            if (n as u64) % ring.p() != 0 {
                return Err(Error::PslTrivialCenter { p: ring.p(), n });
            }
            let sl = catalog("sl", Some(n), ring)?;
            return quotient_by_center(&sl);
        }
        "nilpotent-triangular" => {
            let n = need_rank()?;
            nilpotent_triangular_tensor(n)
        }
        _ => return Err(Error::UnknownCatalog(name.to_string())),
    };
    LieAlgebra::new(BracketAlgebra::from_integer_tensor(ring, tensor_rank, &tensor)?)
}

/// The integer-constant catalog names, with the ranks exercised throughout
/// the test suites.
pub fn integer_catalog_entries() -> Vec<(&'static str, Option<usize>)> {
    vec![
        ("abelian", Some(2)),
        ("abelian", Some(3)),
        ("heisenberg", None),
        ("sl", Some(2)),
        ("sl", Some(3)),
        ("nilpotent-triangular", Some(3)),
        ("nilpotent-triangular", Some(4)),
    ]
}
