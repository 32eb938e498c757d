//! Exact arithmetic in the quotient rings Z/p^k and F_p[x]/(x^k).
//!
//! Both families share a prime p and a level k >= 1; level 1 is the residue
//! field F_p in either case. The uniformizer pi is p in the p-adic family and
//! x in the power-series family. Representatives are kept canonical at all
//! times: an integer in [0, p^k) for the p-adic family, a little-endian
//! coefficient list over [0, p) for the power-series family.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which quotient family a ring belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingFamily {
    /// Z/p^k, uniformizer p.
    #[serde(rename = "padic")]
    PadicQuotient,
    /// F_p[x]/(x^k), uniformizer x.
    #[serde(rename = "power-series")]
    PowerSeriesQuotient,
}

impl fmt::Display for RingFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingFamily::PadicQuotient => write!(f, "padic"),
            RingFamily::PowerSeriesQuotient => write!(f, "power-series"),
        }
    }
}

impl FromStr for RingFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "padic" => Ok(RingFamily::PadicQuotient),
            "power-series" => Ok(RingFamily::PowerSeriesQuotient),
            other => Err(Error::Document(format!(
                "unknown ring family '{other}' (expected 'padic' or 'power-series')"
            ))),
        }
    }
}

/// Trial division primality check.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    if n % 3 == 0 {
        return n == 3;
    }
    let mut d = 5u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n % d == 0 || n % (d + 2) == 0 {
            return false;
        }
        d += 6;
    }
    true
}

/// p^k, provided it fits in 63 bits.
fn checked_pow(p: u64, k: u32) -> Option<u64> {
    let mut acc: u64 = 1;
    for _ in 0..k {
        acc = acc.checked_mul(p)?;
    }
    (acc < (1u64 << 63)).then_some(acc)
}

fn pow_u64(p: u64, k: u32) -> u64 {
    checked_pow(p, k).expect("modulus fits by spec construction")
}

/// The ring R_k: a family, a prime p, and a level k >= 1.
///
/// Construction validates primality and, for the p-adic family, that the
/// modulus p^k fits in 63 bits. Copyable and immutable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec {
    family: RingFamily,
    p: u64,
    level: u32,
}

impl RingSpec {
    pub fn new(family: RingFamily, p: u64, level: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if level < 1 {
            return Err(Error::InvalidLevel(level));
        }
        if p >= (1u64 << 63) {
            return Err(Error::ModulusTooLarge { p, k: 1 });
        }
        if family == RingFamily::PadicQuotient && checked_pow(p, level).is_none() {
            return Err(Error::ModulusTooLarge { p, k: level });
        }
        Ok(RingSpec { family, p, level })
    }

    pub fn family(&self) -> RingFamily {
        self.family
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn is_residue_field(&self) -> bool {
        self.level == 1
    }

    /// The residue field F_p: same family, level 1.
    pub fn residue(&self) -> RingSpec {
        RingSpec { level: 1, ..*self }
    }

    /// Same family and prime, one level higher.
    pub fn raised(&self) -> Result<RingSpec> {
        RingSpec::new(self.family, self.p, self.level + 1)
    }

    /// Same family and prime, one level lower.
    pub fn lowered(&self) -> Result<RingSpec> {
        if self.level == 1 {
            return Err(Error::CannotReduceResidue);
        }
        Ok(RingSpec {
            level: self.level - 1,
            ..*self
        })
    }

    /// p^k. Meaningful for the p-adic family only.
    pub fn modulus(&self) -> u64 {
        assert_eq!(
            self.family,
            RingFamily::PadicQuotient,
            "modulus is defined for the p-adic family only"
        );
        pow_u64(self.p, self.level)
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 1 {
            write!(f, "F_{}", self.p)
        } else {
            match self.family {
                RingFamily::PadicQuotient => write!(f, "Z/{}^{}", self.p, self.level),
                RingFamily::PowerSeriesQuotient => {
                    write!(f, "F_{}[x]/(x^{})", self.p, self.level)
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum RingValue {
    Padic(u64),
    Series(Vec<u64>),
}

/// An element of R_k, always stored in canonical reduced form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    spec: RingSpec,
    value: RingValue,
}

impl RingElem {
    pub fn zero(spec: RingSpec) -> Self {
        Self::from_u64(spec, 0)
    }

    pub fn one(spec: RingSpec) -> Self {
        Self::from_u64(spec, 1)
    }

    /// Image of an integer under Z -> R_k.
    pub fn from_u64(spec: RingSpec, v: u64) -> Self {
        let value = match spec.family {
            RingFamily::PadicQuotient => RingValue::Padic(v % spec.modulus()),
            RingFamily::PowerSeriesQuotient => {
                let mut coeffs = vec![0u64; spec.level as usize];
                coeffs[0] = v % spec.p;
                RingValue::Series(coeffs)
            }
        };
        RingElem { spec, value }
    }

    /// Image of an integer, negatives allowed.
    pub fn from_i64(spec: RingSpec, v: i64) -> Self {
        let pos = Self::from_u64(spec, v.unsigned_abs());
        if v < 0 {
            -&pos
        } else {
            pos
        }
    }

    /// Power-series element from little-endian coefficients; short lists are
    /// zero-padded to length k.
    pub fn from_coeffs(spec: RingSpec, coeffs: &[u64]) -> Result<Self> {
        assert_eq!(
            spec.family,
            RingFamily::PowerSeriesQuotient,
            "coefficient lists describe power-series elements only"
        );
        if coeffs.len() > spec.level as usize {
            return Err(Error::LengthMismatch {
                got: coeffs.len(),
                expected: spec.level as usize,
            });
        }
        let mut c = vec![0u64; spec.level as usize];
        for (slot, &v) in c.iter_mut().zip(coeffs) {
            *slot = v % spec.p;
        }
        Ok(RingElem {
            spec,
            value: RingValue::Series(c),
        })
    }

    /// The uniformizer pi: p in the p-adic family, x in the power-series one.
    pub fn uniformizer(spec: RingSpec) -> Self {
        match spec.family {
            RingFamily::PadicQuotient => Self::from_u64(spec, spec.p),
            RingFamily::PowerSeriesQuotient => {
                let mut coeffs = vec![0u64; spec.level as usize];
                if spec.level >= 2 {
                    coeffs[1] = 1;
                }
                RingElem {
                    spec,
                    value: RingValue::Series(coeffs),
                }
            }
        }
    }

    pub fn spec(&self) -> RingSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            RingValue::Padic(v) => *v == 0,
            RingValue::Series(c) => c.iter().all(|&d| d == 0),
        }
    }

    /// Canonical representative in [0, p^k). P-adic family only.
    pub fn padic_value(&self) -> u64 {
        match &self.value {
            RingValue::Padic(v) => *v,
            RingValue::Series(_) => panic!("padic_value called on a power-series element"),
        }
    }

    /// Little-endian coefficient list of length k. Power-series family only.
    pub fn series_coeffs(&self) -> &[u64] {
        match &self.value {
            RingValue::Series(c) => c,
            RingValue::Padic(_) => panic!("series_coeffs called on a p-adic element"),
        }
    }

    /// Base-p digits of the canonical representative, little-endian, length
    /// k. Digit t is the coefficient of pi^t; works in both families.
    pub fn digits(&self) -> Vec<u64> {
        match &self.value {
            RingValue::Padic(v) => {
                let mut v = *v;
                let mut out = Vec::with_capacity(self.spec.level as usize);
                for _ in 0..self.spec.level {
                    out.push(v % self.spec.p);
                    v /= self.spec.p;
                }
                out
            }
            RingValue::Series(c) => c.clone(),
        }
    }

    /// Image in the residue field, as an integer in [0, p).
    pub fn residue_value(&self) -> u64 {
        match &self.value {
            RingValue::Padic(v) => v % self.spec.p,
            RingValue::Series(c) => c[0],
        }
    }

    /// Product with an integer scalar.
    pub fn scale(&self, c: u64) -> RingElem {
        self * &RingElem::from_u64(self.spec, c)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            RingValue::Padic(v) => write!(f, "{v}"),
            RingValue::Series(c) => {
                if self.is_zero() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (i, &d) in c.iter().enumerate() {
                    if d == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, "+")?;
                    }
                    first = false;
                    match (i, d) {
                        (0, _) => write!(f, "{d}")?,
                        (1, 1) => write!(f, "x")?,
                        (1, _) => write!(f, "{d}*x")?,
                        (_, 1) => write!(f, "x^{i}")?,
                        (_, _) => write!(f, "{d}*x^{i}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

fn check_same(a: &RingElem, b: &RingElem) {
    assert_eq!(a.spec, b.spec, "arithmetic across different rings");
}

impl Add for &RingElem {
    type Output = RingElem;

    fn add(self, rhs: &RingElem) -> RingElem {
        check_same(self, rhs);
        let value = match (&self.value, &rhs.value) {
            (RingValue::Padic(a), RingValue::Padic(b)) => {
                RingValue::Padic((a + b) % self.spec.modulus())
            }
            (RingValue::Series(a), RingValue::Series(b)) => RingValue::Series(
                a.iter()
                    .zip(b)
                    .map(|(&x, &y)| (x + y) % self.spec.p)
                    .collect(),
            ),
            _ => unreachable!("value kind always matches the spec family"),
        };
        RingElem {
            spec: self.spec,
            value,
        }
    }
}

impl Sub for &RingElem {
    type Output = RingElem;

    fn sub(self, rhs: &RingElem) -> RingElem {
        check_same(self, rhs);
        let value = match (&self.value, &rhs.value) {
            (RingValue::Padic(a), RingValue::Padic(b)) => {
                let m = self.spec.modulus();
                RingValue::Padic((a + (m - b)) % m)
            }
            (RingValue::Series(a), RingValue::Series(b)) => {
                let p = self.spec.p;
                RingValue::Series(a.iter().zip(b).map(|(&x, &y)| (x + (p - y)) % p).collect())
            }
            _ => unreachable!("value kind always matches the spec family"),
        };
        RingElem {
            spec: self.spec,
            value,
        }
    }
}

impl Mul for &RingElem {
    type Output = RingElem;

    fn mul(self, rhs: &RingElem) -> RingElem {
        check_same(self, rhs);
        let value = match (&self.value, &rhs.value) {
            (RingValue::Padic(a), RingValue::Padic(b)) => {
                let m = self.spec.modulus() as u128;
                RingValue::Padic(((*a as u128 * *b as u128) % m) as u64)
            }
            (RingValue::Series(a), RingValue::Series(b)) => {
                let p = self.spec.p as u128;
                let k = a.len();
                let mut out = vec![0u64; k];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        if i + j >= k {
                            break;
                        }
                        let acc = out[i + j] as u128 + (x as u128 * y as u128) % p;
                        out[i + j] = (acc % p) as u64;
                    }
                }
                RingValue::Series(out)
            }
            _ => unreachable!("value kind always matches the spec family"),
        };
        RingElem {
            spec: self.spec,
            value,
        }
    }
}

impl Neg for &RingElem {
    type Output = RingElem;

    fn neg(self) -> RingElem {
        &RingElem::zero(self.spec) - self
    }
}

impl Add for RingElem {
    type Output = RingElem;
    fn add(self, rhs: RingElem) -> RingElem {
        &self + &rhs
    }
}

impl Sub for RingElem {
    type Output = RingElem;
    fn sub(self, rhs: RingElem) -> RingElem {
        &self - &rhs
    }
}

impl Mul for RingElem {
    type Output = RingElem;
    fn mul(self, rhs: RingElem) -> RingElem {
        &self * &rhs
    }
}

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

/// One-step reduction R_{k+1} -> R_k.
pub fn reduce_level(x: &RingElem) -> Result<RingElem> {
    let spec = x.spec;
    if spec.level == 1 {
        return Err(Error::CannotReduceResidue);
    }
    let target = RingSpec {
        level: spec.level - 1,
        ..spec
    };
    let value = match &x.value {
        RingValue::Padic(v) => RingValue::Padic(v % target.modulus()),
        RingValue::Series(c) => RingValue::Series(c[..target.level as usize].to_vec()),
    };
    Ok(RingElem {
        spec: target,
        value,
    })
}

/// Full reduction to the residue field F_p.
pub fn lambda_residue(x: &RingElem) -> RingElem {
    RingElem::from_u64(x.spec.residue(), x.residue_value())
}

/// Division by pi^{k-1} on an element of R_k known to lie in pi^{k-1}·R_k.
/// Inverse to psi; the identity on F_p when k = 1.
pub fn chi(x: &RingElem) -> Result<RingElem> {
    let spec = x.spec;
    let power = spec.level - 1;
    let digits = x.digits();
    if digits[..power as usize].iter().any(|&d| d != 0) {
        return Err(Error::NotDivisible {
            power,
            value: format!("{x}"),
        });
    }
    Ok(RingElem::from_u64(spec.residue(), digits[power as usize]))
}

/// Multiplication by pi^{k-1} into the target ring R_k, an isomorphism of
/// F_p onto pi^{k-1}·R_k. lambda_residue(psi(c)) = 0 whenever k >= 2.
pub fn psi(c: &RingElem, target: RingSpec) -> RingElem {
    assert!(
        c.spec.level == 1,
        "psi takes a residue-field element, got level {}",
        c.spec.level
    );
    assert_eq!(c.spec.p, target.p, "psi across different primes");
    let d = c.residue_value();
    match target.family {
        RingFamily::PadicQuotient => {
            // d < p, so d * p^{k-1} < p^k.
            let v = d * pow_u64(target.p, target.level - 1);
            RingElem {
                spec: target,
                value: RingValue::Padic(v),
            }
        }
        RingFamily::PowerSeriesQuotient => {
            let mut coeffs = vec![0u64; target.level as usize];
            coeffs[target.level as usize - 1] = d;
            RingElem {
                spec: target,
                value: RingValue::Series(coeffs),
            }
        }
    }
}

/// Section of reduce_level: the canonical representative reinterpreted one
/// level up. A set-theoretic section, not a ring homomorphism.
pub fn canonical_lift(x: &RingElem) -> Result<RingElem> {
    let target = x.spec.raised()?;
    let value = match &x.value {
        RingValue::Padic(v) => RingValue::Padic(*v),
        RingValue::Series(c) => {
            let mut c = c.clone();
            c.push(0);
            RingValue::Series(c)
        }
    };
    Ok(RingElem {
        spec: target,
        value,
    })
}

/// Constant-coefficient embedding F_p -> F_p[x]/(x^k). Unlike
/// canonical_lift, this section of lambda_residue is a ring homomorphism.
pub fn residue_section(c: &RingElem, target: RingSpec) -> RingElem {
    assert!(
        c.spec.level == 1,
        "residue_section takes a residue-field element"
    );
    assert_eq!(
        target.family,
        RingFamily::PowerSeriesQuotient,
        "only the power-series projection splits"
    );
    assert_eq!(c.spec.p, target.p, "residue_section across different primes");
    RingElem::from_u64(target, c.residue_value())
}
