//! Lifting structure constants one quotient level and the obstruction to
//! doing so.
//!
//! An algebra over R_k lifts entrywise to an alternating bracket over
//! R_{k+1} that usually breaks Jacobi. The failure is confined to the top
//! ideal pi^k·B and divides down to a closed 3-form J on the residue
//! algebra; J is a coboundary exactly when some perturbation repairs
//! Jacobi, closed 2-forms parametrize the repairs, and degree-1 forms
//! generate the module automorphisms identifying equivalent ones.

use crate::algebra::{reduce_algebra, reduce_to_residue, BracketAlgebra, LieAlgebra};
use crate::complex::{
    differential_matrix, form_space_dim, is_coboundary, tuples, AdForm, Coefficients,
    COHOMOLOGY_RANK_BOUND,
};
use crate::error::{Error, Result};
use crate::matrix::{checked_power, EchelonSpace};
use crate::ring::{canonical_lift, chi, lambda_residue, psi, RingElem, RingSpec};

/// Largest family fully materialized by lift_family: p^(dim H^2) members.
pub const FAMILY_ENUMERATION_BOUND: u64 = 100_000;

/// A base algebra over R_k together with an alternating bracket on the
/// free module over R_{k+1} reducing to it. Jacobi is not required of the
/// lifted bracket; measuring its failure is the whole point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BracketLift {
    base: LieAlgebra,
    lifted: BracketAlgebra,
}

impl BracketLift {
    /// Views a genuine Lie algebra over R_{k+1} as a bracket lift of its
    /// own one-level reduction.
    pub fn from_lie(lift: &LieAlgebra) -> Result<Self> {
        Ok(BracketLift {
            base: reduce_algebra(lift)?,
            lifted: lift.as_bracket().clone(),
        })
    }

    pub fn base(&self) -> &LieAlgebra {
        &self.base
    }

    pub fn lifted(&self) -> &BracketAlgebra {
        &self.lifted
    }

    pub fn into_lifted(self) -> BracketAlgebra {
        self.lifted
    }

    /// The residue-field algebra both levels reduce to.
    pub fn residue(&self) -> LieAlgebra {
        reduce_to_residue(&self.base)
    }
}

/// Entrywise canonical lift of the structure constants, with antisymmetry
/// imposed from the i < j entries so the result is alternating no matter
/// which representatives were chosen.
pub fn make_bracket_lift(base: &LieAlgebra) -> Result<BracketLift> {
    let target = base.ring().raised()?;
    let n = base.rank();
    let mut entries = Vec::with_capacity(n * (n - 1) / 2);
    for (i, j, coeffs) in base.as_bracket().upper_entries() {
        let lifted = coeffs
            .iter()
            .map(canonical_lift)
            .collect::<Result<Vec<RingElem>>>()?;
        entries.push((i, j, lifted));
    }
    let lifted = BracketAlgebra::from_upper_entries(target, n, &entries)?;
    Ok(BracketLift {
        base: base.clone(),
        lifted,
    })
}

/// Adds psi(t(lambda x, lambda y)) to the lifted bracket. The shift lives
/// in pi^k·B, so the result is another bracket lift of the same base.
pub fn perturb_lift(bl: &BracketLift, t: &AdForm) -> Result<BracketLift> {
    assert_eq!(t.degree(), 2, "perturbations are 2-forms");
    assert_eq!(
        t.kind(),
        Coefficients::Adjoint,
        "perturbations take adjoint values"
    );
    let residue = bl.residue();
    if t.base() != &residue {
        return Err(Error::DifferentBases);
    }
    let n = bl.base.rank();
    let target = bl.lifted.ring();
    let fp = target.residue();
    let pairs = tuples(n, 2);
    let mut entries = Vec::with_capacity(pairs.len());
    for (row, pair) in pairs.iter().enumerate() {
        let (i, j) = (pair[0], pair[1]);
        let mut coeffs = Vec::with_capacity(n);
        for m in 0..n {
            let shift = psi(&RingElem::from_u64(fp, t.coords()[row * n + m]), target);
            coeffs.push(bl.lifted.c(i, j, m) + &shift);
        }
        entries.push((i, j, coeffs));
    }
    let lifted = BracketAlgebra::from_upper_entries(target, n, &entries)?;
    Ok(BracketLift {
        base: bl.base.clone(),
        lifted,
    })
}

/// The Jacobi failure of a bracket lift, divided down to a 3-form on the
/// residue algebra. Checks that the failure lies in pi^k·B and that the
/// form is closed; either failing means the lift object is corrupt.
pub fn jacobiator(bl: &BracketLift) -> Result<AdForm> {
    let n = bl.base.rank();
    let residue = bl.residue();
    let triples = tuples(n, 3);
    let mut coords = vec![0u64; triples.len() * n];
    for (row, tri) in triples.iter().enumerate() {
        let (i, j, l) = (tri[0], tri[1], tri[2]);
        let jac = bl.lifted.jacobiator_basis(i, j, l);
        for (m, value) in jac.iter().enumerate() {
            let class = chi(value).map_err(|_| {
                Error::BrokenLift(format!(
                    "Jacobi failure escapes pi^{} at basis triple ({i},{j},{l})",
                    bl.base.ring().level()
                ))
            })?;
            coords[row * n + m] = class.residue_value();
        }
    }
    let j = AdForm::from_coords(&residue, Coefficients::Adjoint, 3, coords)?;
    // dJ = 0 is a theorem for any alternating lift of a Jacobi bracket.
    if n >= 3 {
        let d3 = differential_matrix(&residue, 3, Coefficients::Adjoint)?;
        if d3.matrix().mul_vec(j.coords()).iter().any(|&v| v != 0) {
            return Err(Error::BrokenLift(
                "Jacobi failure 3-form is not closed".into(),
            ));
        }
    }
    Ok(j)
}

/// Everything the one-level lifting question produces: the 3-form J, a
/// 2-form witness solving d(t) = J when one exists, and the repaired
/// algebra built from it.
#[derive(Clone, Debug)]
pub struct ObstructionReport {
    j: AdForm,
    closed: bool,
    witness: Option<AdForm>,
    lifted_algebra: Option<LieAlgebra>,
}

impl ObstructionReport {
    pub fn j(&self) -> &AdForm {
        &self.j
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn witness(&self) -> Option<&AdForm> {
        self.witness.as_ref()
    }

    pub fn lifted_algebra(&self) -> Option<&LieAlgebra> {
        self.lifted_algebra.as_ref()
    }

    /// Whether the base algebra lifts one level.
    pub fn lifts(&self) -> bool {
        self.witness.is_some()
    }
}

/// Decides whether an algebra over R_k lifts to R_{k+1}. The class of J
/// is the only obstruction: a witness with d(witness) = J turns the
/// canonical lift into a Lie algebra, and the result is re-verified by a
/// full Jacobi check over R_{k+1}.
pub fn obstruction(base: &LieAlgebra) -> Result<ObstructionReport> {
    let n = base.rank();
    if n > COHOMOLOGY_RANK_BOUND {
        return Err(Error::GuardExceeded {
            what: "cohomology rank",
            bound: COHOMOLOGY_RANK_BOUND as u64,
            actual: n.to_string(),
        });
    }
    let bl = make_bracket_lift(base)?;
    let j = jacobiator(&bl)?;
    let residue = bl.residue();
    let witness = is_coboundary(&residue, &j)?;
    let lifted_algebra = match &witness {
        Some(t) => {
            let repaired = perturb_lift(&bl, t)?;
            Some(LieAlgebra::new(repaired.into_lifted())?)
        }
        None => None,
    };
    Ok(ObstructionReport {
        j,
        closed: true,
        witness,
        lifted_algebra,
    })
}

/// Cocycle representatives for the degree-2 cohomology of the residue
/// algebra, in the same elimination order the cohomology report uses.
fn h2_representatives(residue: &LieAlgebra) -> Result<Vec<AdForm>> {
    let n = residue.rank();
    if n < 2 {
        return Ok(Vec::new());
    }
    let p = residue.ring().p();
    let d2 = differential_matrix(residue, 2, Coefficients::Adjoint)?;
    let kernel = d2.matrix().kernel_basis();
    let mut span = EchelonSpace::new(p, form_space_dim(n, 2, Coefficients::Adjoint));
    let d1 = differential_matrix(residue, 1, Coefficients::Adjoint)?;
    for col in 0..d1.matrix().cols() {
        span.insert(&d1.matrix().col(col));
    }
    let mut reps = Vec::new();
    for v in &kernel {
        let r = span.reduce(v);
        if r.iter().any(|&x| x != 0) {
            span.insert(&r);
            reps.push(AdForm::from_coords(
                residue,
                Coefficients::Adjoint,
                2,
                r,
            )?);
        }
    }
    Ok(reps)
}

/// All lifts of one base algebra, indexed by degree-2 cohomology
/// coordinates relative to the witness-repaired lift.
#[derive(Clone, Debug)]
pub struct LiftFamily {
    base_lift: LieAlgebra,
    h2_basis: Vec<AdForm>,
    members: Vec<(Vec<u64>, LieAlgebra)>,
    materialized: bool,
}

impl LiftFamily {
    /// The distinguished member at coordinates (0, ..., 0).
    pub fn base_lift(&self) -> &LieAlgebra {
        &self.base_lift
    }

    pub fn h2_basis(&self) -> &[AdForm] {
        &self.h2_basis
    }

    pub fn dim_h2(&self) -> usize {
        self.h2_basis.len()
    }

    /// Every member, keyed by its coordinate vector in the representative
    /// basis (first coordinate varies fastest). Empty when the family was
    /// too large to materialize.
    pub fn members(&self) -> &[(Vec<u64>, LieAlgebra)] {
        &self.members
    }

    /// False when only the basis is reported because p^(dim H^2) exceeds
    /// the enumeration bound.
    pub fn is_materialized(&self) -> bool {
        self.materialized
    }

    /// p^(dim H^2) when it fits in a u64.
    pub fn member_count(&self) -> Option<u64> {
        checked_power(
            self.base_lift.ring().p(),
            self.h2_basis.len() as u32,
            u64::MAX,
        )
    }
}

/// Classifies the lifts of an algebra whose obstruction vanishes: one
/// member per degree-2 class, each Jacobi-verified. Returns none when the
/// obstruction class is nonzero.
pub fn lift_family(base: &LieAlgebra) -> Result<Option<LiftFamily>> {
    let report = obstruction(base)?;
    let Some(base_lift) = report.lifted_algebra else {
        return Ok(None);
    };
    let residue = reduce_to_residue(base);
    let reps = h2_representatives(&residue)?;
    let dim = reps.len();
    let p = residue.ring().p();
    let count = checked_power(p, dim as u32, FAMILY_ENUMERATION_BOUND);
    let mut members = Vec::new();
    if let Some(count) = count {
        let base_bl = BracketLift {
            base: base.clone(),
            lifted: base_lift.as_bracket().clone(),
        };
        for index in 0..count {
            let mut coords = vec![0u64; dim];
            let mut rest = index;
            for slot in coords.iter_mut() {
                *slot = rest % p;
                rest /= p;
            }
            let mut t = AdForm::zero(&residue, Coefficients::Adjoint, 2);
            for (slot, rep) in reps.iter().enumerate() {
                t = t.add(&rep.scale(coords[slot]))?;
            }
            let member = perturb_lift(&base_bl, &t)?;
            // Perturbing a Lie lift by a cocycle keeps Jacobi; verified.
            members.push((coords, LieAlgebra::new(member.into_lifted())?));
        }
    }
    Ok(Some(LiftFamily {
        base_lift,
        h2_basis: reps,
        members,
        materialized: count.is_some(),
    }))
}

/// The unipotent module map Id + psi∘phi∘lambda over a level-(k+1) ring.
/// Its inverse is Id - psi∘phi∘lambda because the shift squares to zero.
#[derive(Clone, Debug)]
pub struct PsiAutomorphism {
    ring: RingSpec,
    phi: AdForm,
}

/// Builds the automorphism attached to a degree-1 form on the residue
/// algebra. The carrier ring must sit at least one level above the
/// residue field or the shift would not square to zero.
pub fn psi_automorphism(carrier: RingSpec, phi: &AdForm) -> PsiAutomorphism {
    assert_eq!(phi.degree(), 1, "automorphisms come from 1-forms");
    assert_eq!(
        phi.kind(),
        Coefficients::Adjoint,
        "automorphisms come from adjoint forms"
    );
    assert_eq!(carrier.p(), phi.base().ring().p(), "mismatched primes");
    assert!(carrier.level() >= 2, "carrier must lie above the residue field");
    PsiAutomorphism {
        ring: carrier,
        phi: phi.clone(),
    }
}

impl PsiAutomorphism {
    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn phi(&self) -> &AdForm {
        &self.phi
    }

    /// psi(phi(lambda x)), the nilpotent part of the map.
    fn shift(&self, x: &[RingElem]) -> Vec<RingElem> {
        let n = self.phi.base().rank();
        assert_eq!(x.len(), n, "vector has the wrong rank");
        let reduced: Vec<u64> = x.iter().map(|e| lambda_residue(e).residue_value()).collect();
        let value = self.phi.evaluate(&[reduced]).expect("degree-1 evaluation");
        value
            .iter()
            .map(|&c| psi(&RingElem::from_u64(self.ring.residue(), c), self.ring))
            .collect()
    }

    pub fn apply(&self, x: &[RingElem]) -> Vec<RingElem> {
        x.iter()
            .zip(self.shift(x))
            .map(|(a, s)| a + &s)
            .collect()
    }

    pub fn apply_inverse(&self, x: &[RingElem]) -> Vec<RingElem> {
        x.iter()
            .zip(self.shift(x))
            .map(|(a, s)| a - &s)
            .collect()
    }
}

/// chi of the entrywise difference from a canonical lift, assembled as a
/// 2-form on the residue algebra. Fails when the two do not share a base.
fn correction_form(canonical: &BracketLift, lift: &LieAlgebra) -> Result<AdForm> {
    let n = lift.rank();
    let residue = canonical.residue();
    let pairs = tuples(n, 2);
    let mut coords = vec![0u64; pairs.len() * n];
    for (row, pair) in pairs.iter().enumerate() {
        let (i, j) = (pair[0], pair[1]);
        for m in 0..n {
            let delta = lift.c(i, j, m) - canonical.lifted.c(i, j, m);
            let class = chi(&delta).map_err(|_| Error::DifferentBases)?;
            coords[row * n + m] = class.residue_value();
        }
    }
    AdForm::from_coords(&residue, Coefficients::Adjoint, 2, coords)
}

/// Decides whether two lifts of one base algebra are identified by some
/// Id + psi∘phi∘lambda. Returns the connecting phi when the correction
/// forms differ by the coboundary -d(phi); the returned map is checked to
/// carry the first bracket to the second on every basis pair.
pub fn lifts_equivalent(first: &LieAlgebra, second: &LieAlgebra) -> Result<Option<AdForm>> {
    if first.ring() != second.ring() || first.rank() != second.rank() {
        return Err(Error::DifferentBases);
    }
    let base = reduce_algebra(first)?;
    if base != reduce_algebra(second)? {
        return Err(Error::DifferentBases);
    }
    let canonical = make_bracket_lift(&base)?;
    let t1 = correction_form(&canonical, first)?;
    let t2 = correction_form(&canonical, second)?;
    let residue = canonical.residue();
    // The brackets differ by psi((t2 - t1)(lambda, lambda)); conjugating by
    // Id + psi∘phi∘lambda absorbs exactly the shifts of the form -d(phi).
    let phi = is_coboundary(&residue, &t1.sub(&t2)?)?;
    if let Some(phi) = &phi {
        let auto = psi_automorphism(first.ring(), phi);
        for i in 0..first.rank() {
            for j in 0..first.rank() {
                let xi = auto.apply(&first.basis_vector(i));
                let xj = auto.apply(&first.basis_vector(j));
                let lhs = second.bracket(&xi, &xj)?;
                let rhs = auto.apply(&first.bracket(
                    &first.basis_vector(i),
                    &first.basis_vector(j),
                )?);
                if lhs != rhs {
                    return Err(Error::BrokenLift(format!(
                        "connecting map fails to carry the bracket at pair ({i},{j})"
                    )));
                }
            }
        }
    }
    Ok(phi)
}

/// One completed level of a lifting tower.
#[derive(Clone, Debug)]
pub struct TowerStep {
    from_level: u32,
    witness: AdForm,
    algebra: LieAlgebra,
}

impl TowerStep {
    pub fn from_level(&self) -> u32 {
        self.from_level
    }

    /// The correction 2-form used at this level.
    pub fn witness(&self) -> &AdForm {
        &self.witness
    }

    /// The verified algebra one level up.
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }
}

/// Why a tower stopped short: the class that refused to die.
#[derive(Clone, Debug)]
pub struct TowerObstruction {
    at_level: u32,
    class: AdForm,
}

impl TowerObstruction {
    /// The level whose algebra does not lift.
    pub fn at_level(&self) -> u32 {
        self.at_level
    }

    /// The non-coboundary 3-form blocking the step.
    pub fn class(&self) -> &AdForm {
        &self.class
    }
}

/// Outcome of iterated lifting from the residue field.
#[derive(Clone, Debug)]
pub struct TowerReport {
    target_level: u32,
    steps: Vec<TowerStep>,
    top: LieAlgebra,
    obstruction: Option<TowerObstruction>,
}

impl TowerReport {
    pub fn target_level(&self) -> u32 {
        self.target_level
    }

    pub fn steps(&self) -> &[TowerStep] {
        &self.steps
    }

    /// The highest algebra constructed.
    pub fn top(&self) -> &LieAlgebra {
        &self.top
    }

    pub fn reached_level(&self) -> u32 {
        self.top.ring().level()
    }

    pub fn reached(&self) -> bool {
        self.obstruction.is_none()
    }

    pub fn obstruction(&self) -> Option<&TowerObstruction> {
        self.obstruction.as_ref()
    }
}

/// Lifts a residue-field algebra level by level toward the target,
/// greedily taking the solver's witness at each step and recording it.
/// Whether a different witness could unblock a stuck tower is not
/// explored; the recorded choices let alternates be replayed.
pub fn lift_tower(base: &LieAlgebra, target_level: u32) -> Result<TowerReport> {
    if target_level < 1 {
        return Err(Error::InvalidLevel(target_level));
    }
    if !base.ring().is_residue_field() {
        return Err(Error::ResidueFieldOnly {
            operation: "lift_tower",
            level: base.ring().level(),
        });
    }
    let mut current = base.clone();
    let mut steps = Vec::new();
    while current.ring().level() < target_level {
        let report = obstruction(&current)?;
        match (report.witness, report.lifted_algebra) {
            (Some(witness), Some(next)) => {
                steps.push(TowerStep {
                    from_level: current.ring().level(),
                    witness,
                    algebra: next.clone(),
                });
                current = next;
            }
            _ => {
                return Ok(TowerReport {
                    target_level,
                    obstruction: Some(TowerObstruction {
                        at_level: current.ring().level(),
                        class: report.j,
                    }),
                    steps,
                    top: current,
                });
            }
        }
    }
    Ok(TowerReport {
        target_level,
        steps,
        top: current,
        obstruction: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{catalog, integer_catalog_entries};
    use crate::complex::cohomology;
    use crate::ring::{RingFamily, RingSpec};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn field(p: u64) -> RingSpec {
        RingSpec::new(RingFamily::PadicQuotient, p, 1).unwrap()
    }

    fn padic(p: u64, k: u32) -> RingSpec {
        RingSpec::new(RingFamily::PadicQuotient, p, k).unwrap()
    }

    fn series(p: u64, k: u32) -> RingSpec {
        RingSpec::new(RingFamily::PowerSeriesQuotient, p, k).unwrap()
    }

    fn random_form(
        rng: &mut ChaCha8Rng,
        base: &LieAlgebra,
        kind: Coefficients,
        degree: usize,
    ) -> AdForm {
        let p = base.ring().p();
        let len = form_space_dim(base.rank(), degree, kind);
        let coords = (0..len).map(|_| rng.gen_range(0..p)).collect();
        AdForm::from_coords(base, kind, degree, coords).unwrap()
    }

    fn d_of(form: &AdForm) -> AdForm {
        let base = form.base().clone();
        let d = differential_matrix(&base, form.degree(), form.kind()).unwrap();
        AdForm::from_coords(
            &base,
            form.kind(),
            form.degree() + 1,
            d.matrix().mul_vec(form.coords()),
        )
        .unwrap()
    }

    #[test]
    fn canonical_lift_reduces_to_base() {
        for (name, rank) in integer_catalog_entries() {
            for p in [2u64, 3, 5] {
                for k in [1u32, 2] {
                    let base = catalog(name, rank, padic(p, k)).unwrap();
                    let bl = make_bracket_lift(&base).unwrap();
                    assert_eq!(bl.lifted().ring().level(), k + 1);
                    let reduced = bl.lifted().reduce().unwrap();
                    assert_eq!(&reduced, base.as_bracket(), "{name} p={p} k={k}");
                }
            }
        }
    }

    #[test]
    fn integer_catalog_lifts_have_vanishing_class() {
        for (name, rank) in integer_catalog_entries() {
            for p in [2u64, 3, 5] {
                let base = catalog(name, rank, field(p)).unwrap();
                let report = obstruction(&base).unwrap();
                assert!(report.closed());
                assert!(report.lifts(), "{name} over F_{p} must lift");
                let lifted = report.lifted_algebra().unwrap();
                assert_eq!(lifted.ring(), padic(p, 2));
                assert_eq!(&reduce_algebra(lifted).unwrap(), &base);
            }
        }
    }

    #[test]
    fn zero_bracket_catalog_jacobiators_vanish_exactly() {
        // Entries whose canonical representatives already satisfy Jacobi
        // over the integers produce J = 0 on the nose, not just [J] = 0.
        for name in ["abelian(3)", "heisenberg", "nilpotent-triangular(3)"] {
            for p in [2u64, 3, 5] {
                let base = catalog(name, None, field(p)).unwrap();
                let j = jacobiator(&make_bracket_lift(&base).unwrap()).unwrap();
                assert!(j.is_zero(), "{name} over F_{p}");
            }
        }
    }

    #[test]
    fn sl2_canonical_lift_has_nonzero_jacobi_failure_but_vanishing_class() {
        // The canonical representatives of sl2 over F_3 are 1, 1, 2 on the
        // pairs (e,f), (e,h), (f,h); their integer Jacobiator is -3h, so J
        // is nonzero while its class still vanishes.
        let base = catalog("sl", Some(2), field(3)).unwrap();
        let bl = make_bracket_lift(&base).unwrap();
        let j = jacobiator(&bl).unwrap();
        assert!(!j.is_zero());
        let report = obstruction(&base).unwrap();
        assert!(report.lifts());
        let witness = report.witness().unwrap();
        assert!(!witness.is_zero());
        assert_eq!(&d_of(witness), &j);
    }

    #[test]
    fn perturbation_shifts_jacobi_failure_by_the_coboundary() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for (name, p) in [("sl(2)", 3u64), ("heisenberg", 3), ("psl", 3), ("sl(3)", 5)] {
            let base = if name == "psl" {
                catalog("psl", Some(3), field(p)).unwrap()
            } else {
                catalog(name, None, field(p)).unwrap()
            };
            let bl = make_bracket_lift(&base).unwrap();
            let j0 = jacobiator(&bl).unwrap();
            for _ in 0..50 {
                let t = random_form(&mut rng, &base, Coefficients::Adjoint, 2);
                let perturbed = perturb_lift(&bl, &t).unwrap();
                let j1 = jacobiator(&perturbed).unwrap();
                assert_eq!(j1, j0.sub(&d_of(&t)).unwrap(), "{name}");
            }
        }
    }

    #[test]
    fn perturbing_by_t_then_minus_t_returns_the_original() {
        let base = catalog("sl", Some(2), field(5)).unwrap();
        let bl = make_bracket_lift(&base).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let t = random_form(&mut rng, &base, Coefficients::Adjoint, 2);
        let minus_t = t.scale(4);
        let back = perturb_lift(&perturb_lift(&bl, &t).unwrap(), &minus_t).unwrap();
        assert_eq!(back, bl);
        let same = perturb_lift(&bl, &AdForm::zero(&base, Coefficients::Adjoint, 2)).unwrap();
        assert_eq!(same, bl);
    }

    #[test]
    fn psi_shift_on_the_abelian_plane() {
        // t = (e0 wedge e1) tensor e0 turns the zero bracket into
        // [e0, e1] = psi(1) e0 = 3 e0 over Z/9.
        let base = catalog("abelian", Some(2), field(3)).unwrap();
        let bl = make_bracket_lift(&base).unwrap();
        let t = AdForm::from_coords(&base, Coefficients::Adjoint, 2, vec![1, 0]).unwrap();
        let shifted = perturb_lift(&bl, &t).unwrap();
        assert_eq!(shifted.lifted().c(0, 1, 0).padic_value(), 3);
        assert_eq!(shifted.lifted().c(0, 1, 1).padic_value(), 0);
        assert_eq!(shifted.lifted().c(1, 0, 0).padic_value(), 6);
    }

    #[test]
    fn genuine_lie_algebras_are_their_own_unobstructed_lifts() {
        for (name, rank) in integer_catalog_entries() {
            let alg = catalog(name, rank, padic(3, 2)).unwrap();
            let bl = BracketLift::from_lie(&alg).unwrap();
            assert!(jacobiator(&bl).unwrap().is_zero(), "{name}");
        }
    }

    #[test]
    fn psl3_does_not_lift_to_z9() {
        let base = catalog("psl", Some(3), field(3)).unwrap();
        let report = obstruction(&base).unwrap();
        assert!(report.closed());
        assert!(!report.j().is_zero());
        assert!(report.witness().is_none());
        assert!(report.lifted_algebra().is_none());
    }

    #[test]
    fn sl3_f3_lifts_to_z9() {
        let base = catalog("sl", Some(3), field(3)).unwrap();
        let report = obstruction(&base).unwrap();
        assert!(report.lifts());
        let lifted = report.lifted_algebra().unwrap();
        assert_eq!(&reduce_algebra(lifted).unwrap(), &base);
    }

    #[test]
    fn rank_two_degenerate_degrees_flow_through() {
        // C(2,3) = 0: the Jacobi-failure form lives in the zero space and
        // everything downstream still works.
        let base = catalog("abelian", Some(2), field(2)).unwrap();
        let report = obstruction(&base).unwrap();
        assert!(report.j().is_zero());
        assert!(report.j().coords().is_empty());
        assert!(report.lifts());
        let tower = lift_tower(&base, 3).unwrap();
        assert!(tower.reached());
        assert_eq!(tower.reached_level(), 3);
    }

    #[test]
    fn abelian_plane_family_has_p_squared_members() {
        for p in [2u64, 3] {
            let base = catalog("abelian", Some(2), field(p)).unwrap();
            let family = lift_family(&base).unwrap().unwrap();
            assert_eq!(family.dim_h2(), 2);
            assert!(family.is_materialized());
            assert_eq!(family.members().len(), (p * p) as usize);
            assert_eq!(family.member_count(), Some(p * p));
            // Distinct coordinates give distinct structure tensors: psi is
            // injective and the representatives are independent.
            for (a, (_, la)) in family.members().iter().enumerate() {
                for (_, lb) in family.members().iter().skip(a + 1) {
                    assert_ne!(la.as_bracket(), lb.as_bracket());
                }
                assert_eq!(&reduce_algebra(la).unwrap(), &base);
            }
        }
    }

    #[test]
    fn heisenberg_family_count_matches_its_h2_dimension() {
        let base = catalog("heisenberg", None, field(2)).unwrap();
        let dim = cohomology(&base, Coefficients::Adjoint).unwrap().dims()[2];
        let family = lift_family(&base).unwrap().unwrap();
        assert_eq!(family.dim_h2(), dim);
        assert_eq!(family.members().len(), 1usize << dim);
        for (_, member) in family.members() {
            assert_eq!(&reduce_algebra(member).unwrap(), &base);
        }
    }

    #[test]
    fn obstructed_algebras_have_no_family() {
        let base = catalog("psl", Some(3), field(3)).unwrap();
        assert!(lift_family(&base).unwrap().is_none());
    }

    #[test]
    fn family_members_with_distinct_coordinates_are_inequivalent() {
        let base = catalog("abelian", Some(2), field(3)).unwrap();
        let family = lift_family(&base).unwrap().unwrap();
        let members = family.members();
        for (a, (ca, la)) in members.iter().enumerate() {
            for (cb, lb) in members.iter().skip(a) {
                let connecting = lifts_equivalent(la, lb).unwrap();
                if ca == cb {
                    assert!(connecting.is_some());
                } else {
                    assert!(
                        connecting.is_none(),
                        "members {ca:?} and {cb:?} must be inequivalent"
                    );
                }
            }
        }
    }

    #[test]
    fn equivalence_finds_the_connecting_map() {
        let base = catalog("heisenberg", None, field(3)).unwrap();
        let l1 = obstruction(&base).unwrap().lifted_algebra().unwrap().clone();
        let bl1 = BracketLift::from_lie(&l1).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let phi0 = random_form(&mut rng, &base, Coefficients::Adjoint, 1);
            // Shifting by -d(phi0) produces an equivalent lift by design.
            let minus_d = d_of(&phi0).scale(2);
            let l2 = LieAlgebra::new(perturb_lift(&bl1, &minus_d).unwrap().into_lifted()).unwrap();
            let phi = lifts_equivalent(&l1, &l2).unwrap().expect("equivalent");
            assert_eq!(d_of(&phi), d_of(&phi0));
            assert!(lifts_equivalent(&l2, &l1).unwrap().is_some());
            assert!(lifts_equivalent(&l1, &l1).unwrap().unwrap().is_zero());
        }
    }

    #[test]
    fn equivalence_rejects_mismatched_inputs() {
        let h3 = catalog("heisenberg", None, padic(3, 2)).unwrap();
        let ab = catalog("abelian", Some(3), padic(3, 2)).unwrap();
        assert!(matches!(
            lifts_equivalent(&h3, &ab),
            Err(Error::DifferentBases)
        ));
        let other = catalog("heisenberg", None, padic(3, 3)).unwrap();
        assert!(matches!(
            lifts_equivalent(&h3, &other),
            Err(Error::DifferentBases)
        ));
        let level1 = catalog("heisenberg", None, field(3)).unwrap();
        assert!(lifts_equivalent(&level1, &level1).is_err());
    }

    #[test]
    fn psi_automorphism_inverts_and_conjugates() {
        let base = catalog("heisenberg", None, field(3)).unwrap();
        let carrier = padic(3, 2);
        let lie = catalog("heisenberg", None, carrier).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(23);

        let zero_phi = AdForm::zero(&base, Coefficients::Adjoint, 1);
        let identity = psi_automorphism(carrier, &zero_phi);
        for i in 0..3 {
            let e = lie.basis_vector(i);
            assert_eq!(identity.apply(&e), e);
        }

        let bl = make_bracket_lift(&base).unwrap();
        for _ in 0..20 {
            let phi = random_form(&mut rng, &base, Coefficients::Adjoint, 1);
            let auto = psi_automorphism(carrier, &phi);
            for _ in 0..10 {
                let x: Vec<RingElem> = (0..3)
                    .map(|_| RingElem::from_u64(carrier, rng.gen_range(0..9)))
                    .collect();
                assert_eq!(auto.apply_inverse(&auto.apply(&x)), x);
                assert_eq!(auto.apply(&auto.apply_inverse(&x)), x);
            }

            // The conjugation defect of an arbitrary phi between two
            // arbitrary lifts is psi((t2 - t1 + d phi)(lambda x, lambda y))
            // on every basis pair.
            let t1 = random_form(&mut rng, &base, Coefficients::Adjoint, 2);
            let t2 = random_form(&mut rng, &base, Coefficients::Adjoint, 2);
            let lift1 = perturb_lift(&bl, &t1).unwrap();
            let lift2 = perturb_lift(&bl, &t2).unwrap();
            let defect_form = t2.sub(&t1).unwrap().add(&d_of(&phi)).unwrap();
            for i in 0..3 {
                for j in 0..3 {
                    let xi = lift1.lifted().basis_vector(i);
                    let xj = lift1.lifted().basis_vector(j);
                    let lhs = lift2
                        .lifted()
                        .bracket(&auto.apply(&xi), &auto.apply(&xj))
                        .unwrap();
                    let rhs = auto.apply(&lift1.lifted().bracket(&xi, &xj).unwrap());
                    let expected: Vec<RingElem> = defect_form
                        .evaluate(&[basis_residue(i, 3), basis_residue(j, 3)])
                        .unwrap()
                        .iter()
                        .map(|&c| psi(&RingElem::from_u64(carrier.residue(), c), carrier))
                        .collect();
                    let defect: Vec<RingElem> = lhs
                        .iter()
                        .zip(&rhs)
                        .map(|(a, b)| a - b)
                        .collect();
                    assert_eq!(defect, expected);
                }
            }
        }
    }

    fn basis_residue(i: usize, n: usize) -> Vec<u64> {
        let mut v = vec![0u64; n];
        v[i] = 1;
        v
    }

    #[test]
    fn correction_soundness_by_exhaustion() {
        // Perturbations repairing Jacobi are exactly the solutions of
        // d(t) = J. At these sizes every candidate t can be tried.
        for (name, rank, p) in [("abelian", Some(2), 2u64), ("heisenberg", None, 2)] {
            let base = catalog(name, rank, field(p)).unwrap();
            let bl = make_bracket_lift(&base).unwrap();
            let j = jacobiator(&bl).unwrap();
            let n = base.rank();
            let len = form_space_dim(n, 2, Coefficients::Adjoint);
            let total = p.pow(len as u32);
            let mut repairs = 0u64;
            for index in 0..total {
                let mut coords = vec![0u64; len];
                let mut rest = index;
                for slot in coords.iter_mut() {
                    *slot = rest % p;
                    rest /= p;
                }
                let t = AdForm::from_coords(&base, Coefficients::Adjoint, 2, coords).unwrap();
                let repaired = perturb_lift(&bl, &t).unwrap().into_lifted().is_lie();
                let solves = d_of(&t) == j;
                assert_eq!(repaired, solves, "{name} candidate {index}");
                if repaired {
                    repairs += 1;
                }
            }
            let d2 = differential_matrix(&base, 2, Coefficients::Adjoint).unwrap();
            let cocycles = d2.matrix().kernel_basis().len() as u32;
            assert_eq!(repairs, p.pow(cocycles), "{name}: repairs form a coset");
        }
    }

    #[test]
    fn split_family_catalog_algebras_always_lift() {
        for (name, rank) in integer_catalog_entries() {
            for p in [2u64, 3, 5] {
                for k in [1u32, 2, 3] {
                    let base = catalog(name, rank, series(p, k)).unwrap();
                    let report = obstruction(&base).unwrap();
                    assert!(report.lifts(), "{name} over F_{p}[x]/(x^{k})");
                    assert_eq!(
                        report.lifted_algebra().unwrap().ring(),
                        series(p, k + 1)
                    );
                }
            }
        }
    }

    #[test]
    fn towers_climb_integer_catalog_algebras() {
        for (name, rank) in integer_catalog_entries() {
            let base = catalog(name, rank, field(3)).unwrap();
            let tower = lift_tower(&base, 4).unwrap();
            assert!(tower.reached(), "{name}");
            assert_eq!(tower.reached_level(), 4);
            assert_eq!(tower.steps().len(), 3);
            assert_eq!(tower.top().ring(), padic(3, 4));
            for step in tower.steps() {
                assert_eq!(
                    &reduce_to_residue(step.algebra()).as_bracket().clone(),
                    base.as_bracket()
                );
            }
        }
    }

    #[test]
    fn psl3_tower_stops_at_the_first_step() {
        let base = catalog("psl", Some(3), field(3)).unwrap();
        let tower = lift_tower(&base, 2).unwrap();
        assert!(!tower.reached());
        assert_eq!(tower.reached_level(), 1);
        assert!(tower.steps().is_empty());
        let stuck = tower.obstruction().unwrap();
        assert_eq!(stuck.at_level(), 1);
        assert!(!stuck.class().is_zero());
    }

    #[test]
    fn tower_rejects_bad_inputs() {
        let base = catalog("heisenberg", None, field(3)).unwrap();
        assert!(matches!(
            lift_tower(&base, 0),
            Err(Error::InvalidLevel(0))
        ));
        let high = catalog("heisenberg", None, padic(3, 2)).unwrap();
        assert!(matches!(
            lift_tower(&high, 3),
            Err(Error::ResidueFieldOnly { .. })
        ));
        let trivial = lift_tower(&base, 1).unwrap();
        assert!(trivial.reached());
        assert!(trivial.steps().is_empty());
    }
}
