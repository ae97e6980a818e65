//! Linear duals `b ⊣⊣ a`: snake laws, the double-dual maps, retraction and
//! section criteria, canonical dualities, exhaustive search, and mates.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closure::mor as cl;
use crate::error::{PolyError, Result};
pub use crate::law::LawReport;
use crate::monoidal::{self, mor as m};
use crate::polycore::cap::check_cap;
use crate::polycore::{checked_family, FiniteSet, HomIter, Mor, Obj, PolyMap, Polynomial};

/// A unit `η: y → a ◁ b` and counit `ε: b ⊗ a → y` for `b ⊣⊣ a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityWitness {
    pub left: Polynomial,
    pub right: Polynomial,
    pub eta: PolyMap,
    pub epsilon: PolyMap,
}

fn base(p: &Polynomial) -> Obj {
    Obj::base(p.clone())
}

fn y() -> Obj {
    Obj::y()
}

impl DualityWitness {
    pub fn new(left: Polynomial, right: Polynomial, eta: PolyMap, epsilon: PolyMap) -> Result<Self> {
        let w = DualityWitness {
            left,
            right,
            eta,
            epsilon,
        };
        w.eta_mor()?;
        w.epsilon_mor()?;
        Ok(w)
    }

    /// `η` typed as `y → a ◁ b`.
    pub fn eta_mor(&self) -> Result<Mor> {
        Mor::table(&self.eta, &y(), &Obj::sub(&base(&self.right), &base(&self.left))?)
    }

    /// `ε` typed as `b ⊗ a → y`.
    pub fn epsilon_mor(&self) -> Result<Mor> {
        Mor::table(&self.epsilon, &Obj::tensor(&base(&self.left), &base(&self.right)), &y())
    }
}

/// `[dual.1]`: `a ≅ y ⊗ a → (a ◁ b) ⊗ a → a ◁ (b ⊗ a) → a ◁ y ≅ a`.
pub fn snake_one(w: &DualityWitness) -> Result<Mor> {
    let (a, b) = (base(&w.right), base(&w.left));
    Mor::chain(&[
        m::tensor_unit_l_inv(&a),
        Mor::tensor(&w.eta_mor()?, &Mor::id(&a)),
        m::dist_r(&a, &b, &a)?,
        Mor::sub(&Mor::id(&a), &w.epsilon_mor()?)?,
        m::tri_unit_r(&a)?,
    ])
}

/// `[dual.2]`: `b ≅ b ⊗ y → b ⊗ (a ◁ b) → (b ⊗ a) ◁ b → y ◁ b ≅ b`.
pub fn snake_two(w: &DualityWitness) -> Result<Mor> {
    let (a, b) = (base(&w.right), base(&w.left));
    Mor::chain(&[
        m::tensor_unit_r_inv(&b),
        Mor::tensor(&Mor::id(&b), &w.eta_mor()?),
        m::dist_l(&b, &a, &b)?,
        Mor::sub(&w.epsilon_mor()?, &Mor::id(&b))?,
        m::tri_unit_l(&b)?,
    ])
}

pub fn verify_dual_pair(w: &DualityWitness) -> Result<LawReport> {
    Ok(LawReport::all(
        "dual pair",
        vec![
            LawReport::check_identity("dual.1", &snake_one(w)?)?,
            LawReport::check_identity("dual.2", &snake_two(w)?)?,
        ],
    ))
}

/// `Ay ⊣⊣ y^A` with `η = coev` and `ε = ev`.
pub fn canonical_dual(a: &FiniteSet) -> Result<DualityWitness> {
    check_cap("duality positions", a.card as u128)?;
    let lin = Polynomial::linear(a.card);
    let rep = Polynomial::representable(a.card);
    let eta = cl::coev(&y(), &base(&lin))?.tabulate()?;
    let epsilon = cl::ev(&base(&lin), &y())?.tabulate()?;
    DualityWitness::new(lin, rep, eta, epsilon)
}

/// `Φ_a: a → coclose(y, [a, y])`.
pub fn phi_mor(a: &Obj) -> Result<Mor> {
    let d = Obj::close(a, &y())?;
    let c = Obj::coclose(&y(), &d)?;
    Mor::chain(&[
        m::tensor_unit_l_inv(a),
        Mor::tensor(&cl::coev(&y(), &d)?, &Mor::id(a)),
        m::dist_r(&c, &d, a)?,
        Mor::sub(&Mor::id(&c), &m::tensor_sym(&d, a).then(&cl::ev(a, &y())?)?)?,
        m::tri_unit_r(&c)?,
    ])
}

/// `Ψ_a: [coclose(y, a), y] → a`.
pub fn psi_mor(a: &Obj) -> Result<Mor> {
    let c = Obj::coclose(&y(), a)?;
    let d = Obj::close(&c, &y())?;
    Mor::chain(&[
        m::tensor_unit_r_inv(&d),
        Mor::tensor(&Mor::id(&d), &cl::coev(&y(), a)?),
        m::dist_l(&d, &c, a)?,
        Mor::sub(&m::tensor_sym(&d, &c).then(&cl::ev(&c, &y())?)?, &Mor::id(a))?,
        m::tri_unit_l(a)?,
    ])
}

pub fn phi(p: &Polynomial) -> Result<PolyMap> {
    phi_mor(&base(p))?.tabulate()
}

pub fn psi(p: &Polynomial) -> Result<PolyMap> {
    psi_mor(&base(p))?.tabulate()
}

/// The composite that must be the identity on `[a, y]` for a retraction `χ`
/// of `Φ_a`: `[a,y] → [a,y] ⊗ (C ◁ [a,y]) → ([a,y] ⊗ C) ◁ [a,y] →
/// ([a,y] ⊗ a) ◁ [a,y] → y ◁ [a,y] ≅ [a,y]` with `C = coclose(y, [a, y])`.
pub fn retraction_composite(a: &Obj, chi: &Mor) -> Result<Mor> {
    let d = Obj::close(a, &y())?;
    let c = Obj::coclose(&y(), &d)?;
    Mor::chain(&[
        m::tensor_unit_r_inv(&d),
        Mor::tensor(&Mor::id(&d), &cl::coev(&y(), &d)?),
        m::dist_l(&d, &c, &d)?,
        Mor::sub(&Mor::tensor(&Mor::id(&d), chi), &Mor::id(&d))?,
        Mor::sub(&m::tensor_sym(&d, a).then(&cl::ev(a, &y())?)?, &Mor::id(&d))?,
        m::tri_unit_l(&d)?,
    ])
}

/// The composite that must be the identity on `C = coclose(y, b)` for a
/// section `Ω` of `Ψ_b`: `C → (C ◁ b) ⊗ C → C ◁ (b ⊗ C) → C ◁ ([C,y] ⊗ C) →
/// C ◁ y ≅ C`.
pub fn section_composite(b: &Obj, omega: &Mor) -> Result<Mor> {
    let c = Obj::coclose(&y(), b)?;
    let d = Obj::close(&c, &y())?;
    Mor::chain(&[
        m::tensor_unit_l_inv(&c),
        Mor::tensor(&cl::coev(&y(), b)?, &Mor::id(&c)),
        m::dist_r(&c, b, &c)?,
        Mor::sub(&Mor::id(&c), &Mor::tensor(omega, &Mor::id(&c)))?,
        Mor::sub(&Mor::id(&c), &m::tensor_sym(&d, &c).then(&cl::ev(&c, &y())?)?)?,
        m::tri_unit_r(&c)?,
    ])
}

/// Every `χ: coclose(y, [p, y]) → p` with `Φ_p ; χ = id` whose retraction
/// composite is also the identity.
pub fn retractions_of_phi(p: &Polynomial) -> Result<Vec<PolyMap>> {
    let a = base(p);
    let phi = phi_mor(&a)?;
    let c = phi.cod().clone();
    let mut out = Vec::new();
    for chi in HomIter::new(&c.flatten()?, p) {
        let chi_m = Mor::table(&chi, &c, &a)?;
        if phi.then(&chi_m)?.agrees(&Mor::id(&a))?
            && LawReport::check_identity("", &retraction_composite(&a, &chi_m)?)?.pass
        {
            out.push(chi);
        }
    }
    Ok(out)
}

/// Every `Ω: q → [coclose(y, q), y]` with `Ω ; Ψ_q = id` whose section
/// composite is also the identity.
pub fn sections_of_psi(q: &Polynomial) -> Result<Vec<PolyMap>> {
    let b = base(q);
    let psi = psi_mor(&b)?;
    let d = psi.dom().clone();
    let mut out = Vec::new();
    for omega in HomIter::new(q, &d.flatten()?) {
        let om = Mor::table(&omega, &b, &d)?;
        if om.then(&psi)?.agrees(&Mor::id(&b))? && LawReport::check_identity("", &section_composite(&b, &om)?)?.pass {
            out.push(omega);
        }
    }
    Ok(out)
}

/// `p` has a left dual exactly when it is representable.
pub fn decide_right_dualable(p: &Polynomial) -> Option<FiniteSet> {
    p.is_representable().then(|| FiniteSet::new(p.card(0)))
}

/// `q` has a right dual exactly when it is linear.
pub fn decide_left_dualable(q: &Polynomial) -> Option<FiniteSet> {
    q.is_linear().then(|| FiniteSet::new(q.num_positions()))
}

/// The two squares relating `ε ; η` to the composites through `η ⊗ ε`, with
/// the mix map the identity.
pub fn verify_mix_eta_epsilon(w: &DualityWitness) -> Result<LawReport> {
    let (a, b) = (base(&w.right), base(&w.left));
    let (eta, eps) = (w.eta_mor()?, w.epsilon_mor()?);
    let ba = Obj::tensor(&b, &a);
    let ab = Obj::sub(&a, &b)?;
    let direct = Mor::chain(&[eps.clone(), Mor::id(&y()), eta.clone()])?;
    let first = Mor::chain(&[
        m::tensor_unit_l_inv(&ba),
        Mor::tensor(&eta, &Mor::id(&ba)),
        Mor::tensor(&Mor::id(&ab), &eps),
        m::tensor_unit_r(&ab),
    ])?;
    let second = Mor::chain(&[
        m::tensor_unit_r_inv(&ba),
        Mor::tensor(&Mor::id(&ba), &eta),
        Mor::tensor(&eps, &Mor::id(&ab)),
        m::tensor_unit_l(&ab),
    ])?;
    Ok(LawReport::all(
        "mix eta epsilon",
        vec![
            LawReport::check("square (i)", &direct, &first)?,
            LawReport::check("square (ii)", &direct, &second)?,
        ],
    ))
}

/// `φ: a → coclose(y, b)`, built from `coev` and `ε`.
pub fn retraction_section_phi(w: &DualityWitness) -> Result<Mor> {
    let (a, b) = (base(&w.right), base(&w.left));
    let c = Obj::coclose(&y(), &b)?;
    Mor::chain(&[
        m::tensor_unit_l_inv(&a),
        Mor::tensor(&cl::coev(&y(), &b)?, &Mor::id(&a)),
        m::dist_r(&c, &b, &a)?,
        Mor::sub(&Mor::id(&c), &w.epsilon_mor()?)?,
        m::tri_unit_r(&c)?,
    ])
}

/// `ψ: [a, y] → b`, built from `η` and `ev`.
pub fn retraction_section_psi(w: &DualityWitness) -> Result<Mor> {
    let (a, b) = (base(&w.right), base(&w.left));
    let d = Obj::close(&a, &y())?;
    Mor::chain(&[
        m::tensor_unit_r_inv(&d),
        Mor::tensor(&Mor::id(&d), &w.eta_mor()?),
        m::dist_l(&d, &a, &b)?,
        Mor::sub(&m::tensor_sym(&d, &a).then(&cl::ev(&a, &y())?)?, &Mor::id(&b))?,
        m::tri_unit_l(&b)?,
    ])
}

/// `η' = cocurry(η)` is a retraction and `ε'`, the transpose of `ε`, is a
/// section. When `b` is `[a, y]` on the nose the retraction induced by `η`
/// also satisfies the retraction composite, and when `a` is
/// `coclose(y, b)` the section induced by `ε` satisfies the section composite.
pub fn verify_retract_section(w: &DualityWitness) -> Result<LawReport> {
    let (a, b) = (base(&w.right), base(&w.left));
    let eta = w.eta_mor()?;
    let eps = w.epsilon_mor()?;
    let eta_t = cl::cocurry(&eta)?;
    let eps_t = cl::curry(&m::tensor_sym(&a, &b).then(&eps)?)?;
    let mut parts = vec![
        LawReport::check_identity("eta' retraction", &retraction_section_phi(w)?.then(&eta_t)?)?,
        LawReport::check_identity("epsilon' section", &eps_t.then(&retraction_section_psi(w)?)?)?,
    ];
    let d = Obj::close(&a, &y())?;
    if d.flatten()? == w.left {
        let eta_d = Mor::table(&w.eta, &y(), &Obj::sub(&a, &d)?)?;
        let chi = cl::cocurry(&eta_d)?;
        parts.push(LawReport::check_identity("phi retraction", &phi_mor(&a)?.then(&chi)?)?);
        parts.push(LawReport::check_identity(
            "retraction composite",
            &retraction_composite(&a, &chi)?,
        )?);
    }
    let c = Obj::coclose(&y(), &b)?;
    if c.flatten()? == w.right {
        let eps_c = Mor::table(&w.epsilon, &Obj::tensor(&b, &c), &y())?;
        let omega = cl::curry(&m::tensor_sym(&c, &b).then(&eps_c)?)?;
        parts.push(LawReport::check_identity("psi section", &omega.then(&psi_mor(&b)?)?)?);
        parts.push(LawReport::check_identity(
            "section composite",
            &section_composite(&b, &omega)?,
        )?);
    }
    Ok(LawReport::all("retract section", parts))
}

fn expect_leg(actual: &Polynomial, expected: &Polynomial, role: &str) -> Result<()> {
    if actual != expected {
        return Err(PolyError::DomainMismatch(format!(
            "{role}: got {actual}, expected {expected}"
        )));
    }
    Ok(())
}

fn mate_mor(f: &Mor, w: &DualityWitness, w2: &DualityWitness) -> Result<Mor> {
    let (a, b) = (base(&w.right), base(&w.left));
    let a2 = base(&w2.right);
    Mor::chain(&[
        m::tensor_unit_l_inv(&a2),
        Mor::tensor(&w.eta_mor()?, &Mor::id(&a2)),
        m::dist_r(&a, &b, &a2)?,
        Mor::sub(&Mor::id(&a), &Mor::tensor(f, &Mor::id(&a2)))?,
        Mor::sub(&Mor::id(&a), &w2.epsilon_mor()?)?,
        m::tri_unit_r(&a)?,
    ])
}

/// The mate `g: a' → a` of `f: b → b'` for `b ⊣⊣ a` and `b' ⊣⊣ a'`.
pub fn mate(f: &PolyMap, w: &DualityWitness, w2: &DualityWitness) -> Result<PolyMap> {
    expect_leg(&f.dom, &w.left, "mate source")?;
    expect_leg(&f.cod, &w2.left, "mate target")?;
    mate_mor(&Mor::from_map(f), w, w2)?.tabulate()
}

/// The inverse construction: `f: b → b'` from `g: a' → a`.
pub fn comate(g: &PolyMap, w: &DualityWitness, w2: &DualityWitness) -> Result<PolyMap> {
    expect_leg(&g.dom, &w2.right, "comate source")?;
    expect_leg(&g.cod, &w.right, "comate target")?;
    let b = base(&w.left);
    let (a2, b2) = (base(&w2.right), base(&w2.left));
    Mor::chain(&[
        m::tensor_unit_r_inv(&b),
        Mor::tensor(&Mor::id(&b), &w2.eta_mor()?),
        m::dist_l(&b, &a2, &b2)?,
        Mor::sub(&Mor::tensor(&Mor::id(&b), &Mor::from_map(g)), &Mor::id(&b2))?,
        Mor::sub(&w.epsilon_mor()?, &Mor::id(&b2))?,
        m::tri_unit_l(&b2)?,
    ])?
    .tabulate()
}

/// The two equations making `(f, g)` a morphism of duals:
/// `η' ; (g ◁ b') = η ; (a ◁ f)` and `(f ⊗ a') ; ε' = (b ⊗ g) ; ε`.
pub fn verify_morphism_of_duals(
    f: &PolyMap,
    g: &PolyMap,
    w: &DualityWitness,
    w2: &DualityWitness,
) -> Result<LawReport> {
    let (a, b) = (base(&w.right), base(&w.left));
    let (a2, b2) = (base(&w2.right), base(&w2.left));
    let fm = Mor::table(f, &b, &b2)?;
    let gm = Mor::table(g, &a2, &a)?;
    let units = LawReport::check(
        "units",
        &w2.eta_mor()?.then(&Mor::sub(&gm, &Mor::id(&b2))?)?,
        &w.eta_mor()?.then(&Mor::sub(&Mor::id(&a), &fm)?)?,
    )?;
    let counits = LawReport::check(
        "counits",
        &Mor::tensor(&fm, &Mor::id(&a2)).then(&w2.epsilon_mor()?)?,
        &Mor::tensor(&Mor::id(&b), &gm).then(&w.epsilon_mor()?)?,
    )?;
    Ok(LawReport::all("morphism of duals", vec![units, counits]))
}

/// All verified dualities `b ⊣⊣ a` for one pair of legs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualPair {
    pub left: Polynomial,
    pub right: Polynomial,
    pub witnesses: Vec<DualityWitness>,
}

fn choice_lists(dom: &Polynomial) -> Vec<Vec<usize>> {
    dom.cards().iter().map(|&c| (0..c).collect()).collect()
}

/// Lazily enumerates maps into `y` whose direction at each position is
/// drawn from the matching list.
struct CounitIter {
    dom: Polynomial,
    lists: Vec<Vec<usize>>,
    digits: Vec<usize>,
    done: bool,
}

impl CounitIter {
    fn new(dom: &Polynomial, lists: Vec<Vec<usize>>) -> Self {
        CounitIter {
            dom: dom.clone(),
            done: lists.iter().any(Vec::is_empty),
            digits: vec![0; lists.len()],
            lists,
        }
    }
}

impl Iterator for CounitIter {
    type Item = PolyMap;

    fn next(&mut self) -> Option<PolyMap> {
        if self.done {
            return None;
        }
        let map = PolyMap {
            dom: self.dom.clone(),
            cod: Polynomial::y(),
            on_positions: vec![0; self.lists.len()],
            on_directions: self.digits.iter().zip(&self.lists).map(|(&i, l)| vec![l[i]]).collect(),
        };
        self.done = true;
        for k in (0..self.lists.len()).rev() {
            self.digits[k] += 1;
            if self.digits[k] < self.lists[k].len() {
                self.done = false;
                break;
            }
            self.digits[k] = 0;
        }
        Some(map)
    }
}

/// Candidate counits for a fixed unit, keeping only those that make the
/// forward part of `[dual.2]` the identity. At a position `(B, A)` of `b ⊗ a`
/// with `A` the position chosen by `η`, the snake sends `B` to `w(d)` where
/// `(e, d)` is the direction picked by `ε`, so `w(d) = B` is required.
fn counit_candidates(b: &Polynomial, a: &Polynomial, eta: &PolyMap) -> Result<CounitIter> {
    let ba = monoidal::tensor(b, a)?;
    let ab = Obj::sub(&base(a), &base(b))?;
    let pos = ab.pos_at(eta.on_positions[0] as u128);
    let a0 = pos.fst().idx();
    let w: Vec<usize> = pos.snd().seq().iter().map(|e| e.idx()).collect();
    let ca = a.card(a0);
    let mut lists = choice_lists(&ba);
    for big_b in 0..b.num_positions() {
        lists[big_b * a.num_positions() + a0].retain(|&c| w[c % ca] == big_b);
    }
    Ok(CounitIter::new(&ba, lists))
}

fn duals_for_pair(b: &Polynomial, a: &Polynomial, prune: bool) -> Result<Vec<DualityWitness>> {
    let ba = monoidal::tensor(b, a)?;
    if ba.cards().contains(&0) {
        return Ok(Vec::new());
    }
    let ab = monoidal::substitute(a, b)?;
    let first_eps = CounitIter::new(&ba, choice_lists(&ba)).next();
    let mut out = Vec::new();
    for eta in HomIter::new(&Polynomial::y(), &ab) {
        let epsilons: Box<dyn Iterator<Item = PolyMap>> = if prune {
            let probe = match &first_eps {
                Some(e) => e.clone(),
                None => break,
            };
            let w = DualityWitness::new(b.clone(), a.clone(), eta.clone(), probe)?;
            let s1 = snake_one(&w)?;
            if !s1.agrees_forward(&Mor::id(s1.dom()))? {
                continue;
            }
            Box::new(counit_candidates(b, a, &eta)?)
        } else {
            Box::new(HomIter::new(&ba, &Polynomial::y()))
        };
        for eps in epsilons {
            let w = DualityWitness::new(b.clone(), a.clone(), eta.clone(), eps)?;
            if verify_dual_pair(&w)?.pass {
                out.push(w);
            }
        }
    }
    Ok(out)
}

fn search(max_pos: usize, max_dir: usize, prune: bool) -> Result<Vec<DualPair>> {
    let fam = checked_family(max_pos, max_dir)?;
    check_cap("candidate pairs", (fam.len() as u128).pow(2))?;
    let pairs: Vec<(Polynomial, Polynomial)> = fam
        .iter()
        .flat_map(|b| fam.iter().map(move |a| (b.clone(), a.clone())))
        .collect();
    let found: Vec<Result<Option<DualPair>>> = pairs
        .par_iter()
        .map(|(b, a)| {
            let witnesses = duals_for_pair(b, a, prune)?;
            Ok((!witnesses.is_empty()).then(|| DualPair {
                left: b.clone(),
                right: a.clone(),
                witnesses,
            }))
        })
        .collect();
    let mut out: Vec<DualPair> = found.into_iter().filter_map(|r| r.transpose()).collect::<Result<_>>()?;
    out.sort_by(|x, y| (&x.left, &x.right).cmp(&(&y.left, &y.right)));
    Ok(out)
}

/// Every duality `b ⊣⊣ a` with both legs within the bounds, with all
/// witnesses, sorted by the legs.
///
/// Units are discarded when the forward part of `[dual.1]` is not the
/// identity (it does not depend on the counit), and counits are restricted
/// by the forward part of `[dual.2]`; every survivor is checked in full.
pub fn search_duals(max_pos: usize, max_dir: usize) -> Result<Vec<DualPair>> {
    search(max_pos, max_dir, true)
}

/// [`search_duals`] without pruning: every unit against every counit.
pub fn search_duals_exhaustive(max_pos: usize, max_dir: usize) -> Result<Vec<DualPair>> {
    search(max_pos, max_dir, false)
}

/// Polynomials `p` with `p ⊣⊣ q` and `q ⊣⊣ p` among the found pairs, as `(p, q)`.
pub fn cyclic_pairs(found: &[DualPair]) -> Vec<(Polynomial, Polynomial)> {
    found
        .iter()
        .filter(|d| found.iter().any(|e| e.left == d.right && e.right == d.left))
        .map(|d| (d.left.clone(), d.right.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::enumerate_homs;

    fn lin(n: usize) -> Polynomial {
        Polynomial::linear(n)
    }

    fn rep(n: usize) -> Polynomial {
        Polynomial::representable(n)
    }

    #[test]
    fn canonical_duals_satisfy_snakes() {
        for n in 0..4 {
            let w = canonical_dual(&FiniteSet::new(n)).unwrap();
            let r = verify_dual_pair(&w).unwrap();
            assert!(r.pass, "{}", r.summary());
        }
    }

    #[test]
    fn swapped_counit_breaks_a_snake() {
        let mut w = canonical_dual(&FiniteSet::new(2)).unwrap();
        for dirs in &mut w.epsilon.on_directions {
            dirs[0] = match dirs[0] {
                0 => 1,
                1 => 0,
                d => d,
            };
        }
        let w = DualityWitness::new(w.left, w.right, w.eta, w.epsilon).unwrap();
        let r = verify_dual_pair(&w).unwrap();
        assert!(!r.pass);
        assert_eq!(r.failed.as_deref(), Some("dual.1"));
        assert!(r.counterexample.is_some());
        // The mix squares hold for any unit and counit, mutants included.
        assert!(verify_mix_eta_epsilon(&w).unwrap().pass);
    }

    #[test]
    fn identity_witness_on_y() {
        let id = PolyMap::identity(&Polynomial::y());
        let w = DualityWitness::new(Polynomial::y(), Polynomial::y(), id.clone(), id).unwrap();
        for r in [
            verify_dual_pair(&w).unwrap(),
            verify_mix_eta_epsilon(&w).unwrap(),
            verify_retract_section(&w).unwrap(),
        ] {
            assert!(r.pass, "{}", r.summary());
        }
        assert_eq!(w, canonical_dual(&FiniteSet::new(1)).unwrap());
    }

    #[test]
    fn canonical_unit_tables() {
        let w = canonical_dual(&FiniteSet::new(0)).unwrap();
        assert_eq!((w.left.clone(), w.right.clone()), (Polynomial::zero(), rep(0)));
        assert!(w.epsilon.on_positions.is_empty());
        let w = canonical_dual(&FiniteSet::new(3)).unwrap();
        let ab = Obj::sub(&base(&rep(3)), &base(&lin(3))).unwrap();
        let pos = ab.pos_at(w.eta.on_positions[0] as u128);
        let f: Vec<usize> = pos.snd().seq().iter().map(|e| e.idx()).collect();
        assert_eq!(f, vec![0, 1, 2]);
        assert_eq!(w.eta.on_directions[0], vec![0, 0, 0]);
    }

    #[test]
    fn canonical_laws_up_to_four() {
        for n in 0..=4 {
            let w = canonical_dual(&FiniteSet::new(n)).unwrap();
            assert!(verify_dual_pair(&w).unwrap().pass);
            assert!(verify_mix_eta_epsilon(&w).unwrap().pass);
            assert!(verify_retract_section(&w).unwrap().pass);
            assert!(phi(&rep(n)).unwrap().is_identity());
            assert!(psi(&lin(n)).unwrap().is_iso());
        }
    }

    #[test]
    fn phi_identity_and_psi_iso_exactly_on_cores() {
        for p in crate::polycore::polynomials_within(3, 3) {
            assert_eq!(phi(&p).unwrap().is_identity(), p.num_positions() == 1, "{p}");
            let g = psi(&p).unwrap();
            assert_eq!(g.cod == p && g.is_iso(), p.is_linear(), "{p}");
        }
    }

    #[test]
    fn small_bounds_find_y_and_the_empty_duality() {
        let found = search_duals(1, 1).unwrap();
        let legs: Vec<_> = found.iter().map(|d| (d.left.clone(), d.right.clone())).collect();
        assert_eq!(legs, vec![(lin(0), rep(0)), (lin(1), rep(1))]);
    }

    #[test]
    fn canonical_mix_and_retract_section() {
        for n in 0..4 {
            let w = canonical_dual(&FiniteSet::new(n)).unwrap();
            let r = verify_mix_eta_epsilon(&w).unwrap();
            assert!(r.pass, "{}", r.summary());
            let r = verify_retract_section(&w).unwrap();
            assert!(r.pass, "{}", r.summary());
            assert_eq!(r.parts.len(), 6);
        }
    }

    #[test]
    fn phi_and_psi_shapes() {
        for n in 0..4 {
            let f = phi(&rep(n)).unwrap();
            assert_eq!(f.cod, rep(n));
            assert!(f.is_iso());
            let g = psi(&lin(n)).unwrap();
            assert_eq!(g.dom, lin(n));
            assert!(g.is_iso());
        }
        let p = Polynomial::new(vec![2, 1]);
        assert_eq!(phi(&p).unwrap().cod, rep(2));
        assert_eq!(phi(&Polynomial::new(vec![3, 2])).unwrap().cod, rep(6));
    }

    #[test]
    fn retractions_and_sections_decide_dualability() {
        for p in crate::polycore::polynomials_within(2, 2) {
            let chis = retractions_of_phi(&p).unwrap();
            assert_eq!(!chis.is_empty(), decide_right_dualable(&p).is_some(), "{p}");
            let omegas = sections_of_psi(&p).unwrap();
            assert_eq!(!omegas.is_empty(), decide_left_dualable(&p).is_some(), "{p}");
        }
        assert_eq!(decide_right_dualable(&rep(3)), Some(FiniteSet::new(3)));
        assert_eq!(decide_left_dualable(&lin(2)), Some(FiniteSet::new(2)));
        assert_eq!(decide_left_dualable(&Polynomial::new(vec![1, 2])), None);
    }

    #[test]
    fn pruned_search_matches_exhaustive() {
        assert_eq!(search_duals(2, 2).unwrap(), search_duals_exhaustive(2, 2).unwrap());
    }

    #[test]
    fn search_finds_exactly_the_canonical_legs() {
        let found = search_duals(3, 3).unwrap();
        let legs: Vec<(Polynomial, Polynomial)> = found.iter().map(|d| (d.left.clone(), d.right.clone())).collect();
        assert_eq!(legs, (0..4).map(|n| (lin(n), rep(n))).collect::<Vec<_>>());
        let counts: Vec<usize> = found.iter().map(|d| d.witnesses.len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6]);
        assert_eq!(cyclic_pairs(&found), vec![(lin(1), rep(1))]);
        let canon = canonical_dual(&FiniteSet::new(3)).unwrap();
        assert!(found[3].witnesses.contains(&canon));
    }

    #[test]
    fn mates_are_morphisms_of_duals() {
        for n in 0..3 {
            for k in 0..3 {
                let w = canonical_dual(&FiniteSet::new(n)).unwrap();
                let w2 = canonical_dual(&FiniteSet::new(k)).unwrap();
                for f in enumerate_homs(&lin(n), &lin(k)).unwrap() {
                    let g = mate(&f, &w, &w2).unwrap();
                    assert_eq!(g.dom, rep(k));
                    assert_eq!(g.cod, rep(n));
                    assert_eq!(g.on_directions[0], f.on_positions);
                    let r = verify_morphism_of_duals(&f, &g, &w, &w2).unwrap();
                    assert!(r.pass, "{}", r.summary());
                    assert_eq!(comate(&g, &w, &w2).unwrap(), f);
                }
                for g in enumerate_homs(&rep(k), &rep(n)).unwrap() {
                    assert_eq!(mate(&comate(&g, &w, &w2).unwrap(), &w, &w2).unwrap(), g);
                }
            }
        }
    }

    #[test]
    fn mate_preserves_identities_and_isos() {
        let w = canonical_dual(&FiniteSet::new(3)).unwrap();
        assert_eq!(
            mate(&PolyMap::identity(&lin(3)), &w, &w).unwrap(),
            PolyMap::identity(&rep(3))
        );
        for f in enumerate_homs(&lin(3), &lin(3)).unwrap() {
            assert_eq!(f.is_iso(), mate(&f, &w, &w).unwrap().is_iso());
        }
    }

    #[test]
    fn mate_rejects_wrong_legs() {
        let w = canonical_dual(&FiniteSet::new(2)).unwrap();
        let f = PolyMap::identity(&lin(3));
        assert!(matches!(mate(&f, &w, &w), Err(PolyError::DomainMismatch(_))));
    }
}
