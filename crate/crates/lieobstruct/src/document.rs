//! On-disk algebra format: UTF-8 JSON with a ring header and the nonzero
//! upper structure constants. Zero brackets are omitted; coefficients
//! are canonical representatives for the declared ring, so rendering is
//! byte-stable.

use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{BracketAlgebra, LieAlgebra};
use crate::error::{Error, Result};
use crate::ring::{RingElem, RingFamily, RingSpec};

/// One nonzero bracket [e_i, e_j] = sum over m of coeffs[m] e_m.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<CoeffRepr>,
}

/// A coefficient as written in a file: a plain integer, or a little-endian
/// digit list for power-series levels above one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffRepr {
    Scalar(u64),
    Series(Vec<u64>),
}

/// The file-level shape: ring header plus bracket table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub family: String,
    pub p: u64,
    pub k: u32,
    pub n: usize,
    pub brackets: Vec<BracketEntry>,
}

impl AlgebraDocument {
    /// The ring the header declares.
    pub fn ring(&self) -> Result<RingSpec> {
        let family = RingFamily::from_str(&self.family).map_err(|_| {
            Error::Document(format!(
                "family: unknown ring family \"{}\" (expected \"padic\" or \"power-series\")",
                self.family
            ))
        })?;
        RingSpec::new(family, self.p, self.k)
    }
}

/// Parses document text. Shape errors keep serde's line and column;
/// range and uniqueness violations name the offending field.
pub fn parse_document(text: &str) -> Result<AlgebraDocument> {
    let doc: AlgebraDocument = serde_json::from_str(text)?;
    validate(&doc)?;
    Ok(doc)
}

/// Pretty-printed JSON with a trailing newline.
pub fn render_document(doc: &AlgebraDocument) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("plain data serializes");
    out.push('\n');
    out
}

fn validate(doc: &AlgebraDocument) -> Result<()> {
    let ring = doc.ring()?;
    let n = doc.n;
    let mut seen: Vec<(usize, usize)> = Vec::new();
    for (row, entry) in doc.brackets.iter().enumerate() {
        if entry.i >= entry.j {
            return Err(Error::Document(format!(
                "brackets[{row}]: need i < j, got ({}, {})",
                entry.i, entry.j
            )));
        }
        if entry.j >= n {
            return Err(Error::Document(format!(
                "brackets[{row}]: index {} is outside rank {n}",
                entry.j
            )));
        }
        if seen.contains(&(entry.i, entry.j)) {
            return Err(Error::Document(format!(
                "brackets[{row}]: pair ({}, {}) appears twice",
                entry.i, entry.j
            )));
        }
        seen.push((entry.i, entry.j));
        if entry.coeffs.len() != n {
            return Err(Error::Document(format!(
                "brackets[{row}].coeffs: expected {n} coefficients, found {}",
                entry.coeffs.len()
            )));
        }
        for (m, coeff) in entry.coeffs.iter().enumerate() {
            check_coeff(ring, coeff).map_err(|msg| {
                Error::Document(format!("brackets[{row}].coeffs[{m}]: {msg}"))
            })?;
        }
    }
    Ok(())
}

fn check_coeff(ring: RingSpec, coeff: &CoeffRepr) -> std::result::Result<(), String> {
    match (ring.family(), coeff) {
        (RingFamily::PadicQuotient, CoeffRepr::Scalar(v)) => {
            if *v >= ring.modulus() {
                return Err(format!(
                    "{v} is not a canonical representative modulo {}",
                    ring.modulus()
                ));
            }
            Ok(())
        }
        (RingFamily::PadicQuotient, CoeffRepr::Series(_)) => {
            Err("the padic family takes integer coefficients".into())
        }
        (RingFamily::PowerSeriesQuotient, CoeffRepr::Scalar(v)) => {
            if *v >= ring.p() {
                return Err(format!(
                    "constant coefficient {v} is not reduced modulo {}",
                    ring.p()
                ));
            }
            Ok(())
        }
        (RingFamily::PowerSeriesQuotient, CoeffRepr::Series(digits)) => {
            if digits.len() != ring.level() as usize {
                return Err(format!(
                    "digit list has length {}, the ring wants {}",
                    digits.len(),
                    ring.level()
                ));
            }
            if let Some(bad) = digits.iter().find(|&&d| d >= ring.p()) {
                return Err(format!("digit {bad} is not reduced modulo {}", ring.p()));
            }
            Ok(())
        }
    }
}

fn coeff_to_elem(ring: RingSpec, coeff: &CoeffRepr) -> RingElem {
    // Ranges were validated with the document, so plain constructors fit.
    match coeff {
        CoeffRepr::Scalar(v) => RingElem::from_u64(ring, *v),
        CoeffRepr::Series(digits) => {
            RingElem::from_coeffs(ring, digits).expect("validated length")
        }
    }
}

fn elem_to_coeff(e: &RingElem) -> CoeffRepr {
    match e.spec().family() {
        RingFamily::PadicQuotient => CoeffRepr::Scalar(e.padic_value()),
        RingFamily::PowerSeriesQuotient => {
            if e.spec().level() == 1 {
                CoeffRepr::Scalar(e.residue_value())
            } else {
                CoeffRepr::Series(e.series_coeffs().to_vec())
            }
        }
    }
}

/// Builds the algebra a validated document describes, running the full
/// alternation and Jacobi checks.
pub fn from_document(doc: &AlgebraDocument) -> Result<LieAlgebra> {
    validate(doc)?;
    let ring = doc.ring()?;
    let entries: Vec<(usize, usize, Vec<RingElem>)> = doc
        .brackets
        .iter()
        .map(|entry| {
            let coeffs = entry
                .coeffs
                .iter()
                .map(|c| coeff_to_elem(ring, c))
                .collect();
            (entry.i, entry.j, coeffs)
        })
        .collect();
    let bracket = BracketAlgebra::from_upper_entries(ring, doc.n, &entries)?;
    LieAlgebra::new(bracket)
}

/// The document for an algebra: header from its ring, entries from its
/// nonzero upper brackets.
pub fn to_document(a: &LieAlgebra) -> AlgebraDocument {
    let ring = a.ring();
    let brackets = a
        .as_bracket()
        .upper_entries()
        .into_iter()
        .map(|(i, j, coeffs)| BracketEntry {
            i,
            j,
            coeffs: coeffs.iter().map(elem_to_coeff).collect(),
        })
        .collect();
    AlgebraDocument {
        family: ring.family().to_string(),
        p: ring.p(),
        k: ring.level(),
        n: a.rank(),
        brackets,
    }
}
