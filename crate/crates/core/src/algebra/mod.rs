//! Finite monoids and the linear monoids, comonoids and bialgebras they
//! induce on the canonical dualities `Ay ⊣⊣ y^A`.

mod monoid;

pub use monoid::{enumerate_monoids, FiniteMonoid, MAX_ENUMERATED_ORDER};

use serde::{Deserialize, Serialize};

use crate::cores::Side;
use crate::duality::{canonical_dual, DualityWitness};
use crate::error::{PolyError, Result};
use crate::law::LawReport;
use crate::monoidal::{self, mor as m};
use crate::polycore::{FiniteSet, Mor, Obj, PolyMap, Polynomial};

/// Which monoidal product a (co)monoid lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Product {
    Tensor,
    Sub,
}

impl Product {
    fn name(self) -> &'static str {
        match self {
            Product::Tensor => "⊗",
            Product::Sub => "◁",
        }
    }

    fn obj(self, p: &Obj, q: &Obj) -> Result<Obj> {
        match self {
            Product::Tensor => Ok(Obj::tensor(p, q)),
            Product::Sub => Obj::sub(p, q),
        }
    }

    fn map(self, f: &Mor, g: &Mor) -> Result<Mor> {
        match self {
            Product::Tensor => Ok(Mor::tensor(f, g)),
            Product::Sub => Mor::sub(f, g),
        }
    }

    fn assoc(self, p: &Obj) -> Result<Mor> {
        match self {
            Product::Tensor => Ok(m::tensor_assoc(p, p, p)),
            Product::Sub => m::tri_assoc(p, p, p),
        }
    }

    fn unit_l(self, p: &Obj) -> Result<Mor> {
        match self {
            Product::Tensor => Ok(m::tensor_unit_l(p)),
            Product::Sub => m::tri_unit_l(p),
        }
    }

    fn unit_r(self, p: &Obj) -> Result<Mor> {
        match self {
            Product::Tensor => Ok(m::tensor_unit_r(p)),
            Product::Sub => m::tri_unit_r(p),
        }
    }

    fn unit_l_inv(self, p: &Obj) -> Result<Mor> {
        match self {
            Product::Tensor => Ok(m::tensor_unit_l_inv(p)),
            Product::Sub => m::tri_unit_l_inv(p),
        }
    }

    fn unit_r_inv(self, p: &Obj) -> Result<Mor> {
        match self {
            Product::Tensor => Ok(m::tensor_unit_r_inv(p)),
            Product::Sub => m::tri_unit_r_inv(p),
        }
    }
}

fn base(p: &Polynomial) -> Obj {
    Obj::base(p.clone())
}

fn id(p: &Obj) -> Mor {
    Mor::id(p)
}

/// Associativity and both unit laws of `(p, μ, ν)` in the given product.
pub fn monoid_laws(prod: Product, p: &Polynomial, mu: &PolyMap, nu: &PolyMap) -> Result<LawReport> {
    let o = base(p);
    let mu = Mor::table(mu, &prod.obj(&o, &o)?, &o)?;
    let nu = Mor::table(nu, &Obj::y(), &o)?;
    let name = prod.name();
    Ok(LawReport::all(
        &format!("{name}-monoid on {p}"),
        vec![
            LawReport::check(
                "associativity",
                &prod.map(&mu, &id(&o))?.then(&mu)?,
                &Mor::chain(&[prod.assoc(&o)?, prod.map(&id(&o), &mu)?, mu.clone()])?,
            )?,
            LawReport::check("left unit", &prod.map(&nu, &id(&o))?.then(&mu)?, &prod.unit_l(&o)?)?,
            LawReport::check("right unit", &prod.map(&id(&o), &nu)?.then(&mu)?, &prod.unit_r(&o)?)?,
        ],
    ))
}

/// Coassociativity and both counit laws of `(p, δ, γ)` in the given product.
pub fn comonoid_laws(prod: Product, p: &Polynomial, delta: &PolyMap, gamma: &PolyMap) -> Result<LawReport> {
    let o = base(p);
    let delta = Mor::table(delta, &o, &prod.obj(&o, &o)?)?;
    let gamma = Mor::table(gamma, &o, &Obj::y())?;
    let name = prod.name();
    Ok(LawReport::all(
        &format!("{name}-comonoid on {p}"),
        vec![
            LawReport::check(
                "coassociativity",
                &Mor::chain(&[delta.clone(), prod.map(&delta, &id(&o))?, prod.assoc(&o)?])?,
                &delta.then(&prod.map(&id(&o), &delta)?)?,
            )?,
            LawReport::check(
                "left counit",
                &delta.then(&prod.map(&gamma, &id(&o))?)?,
                &prod.unit_l_inv(&o)?,
            )?,
            LawReport::check(
                "right counit",
                &delta.then(&prod.map(&id(&o), &gamma)?)?,
                &prod.unit_r_inv(&o)?,
            )?,
        ],
    ))
}

/// A `⊗`-monoid on one leg of a duality and the `◁`-comonoid it induces on
/// the other. `Side::Left` puts the monoid on the left dual `b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMonoidStructure {
    pub side: Side,
    pub duality: DualityWitness,
    pub mu: PolyMap,
    pub nu: PolyMap,
    pub delta: PolyMap,
    pub gamma: PolyMap,
}

/// A `⊗`-comonoid on one leg of a duality and the `◁`-monoid it induces on
/// the other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearComonoidStructure {
    pub side: Side,
    pub duality: DualityWitness,
    pub delta: PolyMap,
    pub gamma: PolyMap,
    pub mu: PolyMap,
    pub nu: PolyMap,
}

fn legs(side: Side, w: &DualityWitness) -> (&Polynomial, &Polynomial) {
    match side {
        Side::Left => (&w.left, &w.right),
        Side::Right => (&w.right, &w.left),
    }
}

impl LinearMonoidStructure {
    /// The leg carrying the `⊗`-monoid.
    pub fn carrier(&self) -> &Polynomial {
        legs(self.side, &self.duality).0
    }

    /// The leg carrying the induced `◁`-comonoid.
    pub fn induced_carrier(&self) -> &Polynomial {
        legs(self.side, &self.duality).1
    }

    pub fn verify(&self) -> Result<LawReport> {
        Ok(LawReport::all(
            &format!("{} linear monoid", self.side),
            vec![
                monoid_laws(Product::Tensor, self.carrier(), &self.mu, &self.nu)?,
                comonoid_laws(Product::Sub, self.induced_carrier(), &self.delta, &self.gamma)?,
            ],
        ))
    }
}

impl LinearComonoidStructure {
    pub fn carrier(&self) -> &Polynomial {
        legs(self.side, &self.duality).0
    }

    pub fn induced_carrier(&self) -> &Polynomial {
        legs(self.side, &self.duality).1
    }

    pub fn verify(&self) -> Result<LawReport> {
        Ok(LawReport::all(
            &format!("{} linear comonoid", self.side),
            vec![
                comonoid_laws(Product::Tensor, self.carrier(), &self.delta, &self.gamma)?,
                monoid_laws(Product::Sub, self.induced_carrier(), &self.mu, &self.nu)?,
            ],
        ))
    }
}

struct Legs {
    a: Obj,
    b: Obj,
    eta: Mor,
    eps: Mor,
}

fn legs_of(w: &DualityWitness) -> Result<Legs> {
    Ok(Legs {
        a: base(&w.right),
        b: base(&w.left),
        eta: w.eta_mor()?,
        eps: w.epsilon_mor()?,
    })
}

/// The `◁`-comonoid `(δ, γ)` induced on the opposite leg by a `⊗`-monoid
/// `(μ, ν)` on the `side` leg. Each `δ` uses the unit twice and the counit
/// once, bending both outputs of `η` around `μ`.
pub fn induced_tri_comonoid(side: Side, w: &DualityWitness, mu: &PolyMap, nu: &PolyMap) -> Result<(PolyMap, PolyMap)> {
    let Legs { a, b, eta, eps } = legs_of(w)?;
    let (delta, gamma) = match side {
        Side::Left => {
            let mu = Mor::table(mu, &Obj::tensor(&b, &b), &b)?;
            let nu = Mor::table(nu, &Obj::y(), &b)?;
            let bb = Obj::tensor(&b, &b);
            let x = Mor::chain(&[
                Mor::tensor(&m::tensor_unit_l_inv(&b), &id(&a)),
                Mor::tensor(&Mor::tensor(&eta, &id(&b)), &id(&a)),
                Mor::tensor(&m::dist_r(&a, &b, &b)?, &id(&a)),
                m::dist_r(&a, &bb, &a)?,
                Mor::sub(&id(&a), &Mor::tensor(&mu, &id(&a)).then(&eps)?)?,
                m::tri_unit_r(&a)?,
            ])?;
            let delta = Mor::chain(&[
                m::tensor_unit_l_inv(&a),
                Mor::tensor(&eta, &id(&a)),
                m::dist_r(&a, &b, &a)?,
                Mor::sub(&id(&a), &x)?,
            ])?;
            let gamma = Mor::chain(&[m::tensor_unit_l_inv(&a), Mor::tensor(&nu, &id(&a)), eps])?;
            (delta, gamma)
        }
        Side::Right => {
            let mu = Mor::table(mu, &Obj::tensor(&a, &a), &a)?;
            let nu = Mor::table(nu, &Obj::y(), &a)?;
            let aa = Obj::tensor(&a, &a);
            let x = Mor::chain(&[
                Mor::tensor(&id(&b), &m::tensor_unit_r_inv(&a)),
                Mor::tensor(&id(&b), &Mor::tensor(&id(&a), &eta)),
                Mor::tensor(&id(&b), &m::dist_l(&a, &a, &b)?),
                m::dist_l(&b, &aa, &b)?,
                Mor::sub(&Mor::tensor(&id(&b), &mu).then(&eps)?, &id(&b))?,
                m::tri_unit_l(&b)?,
            ])?;
            let delta = Mor::chain(&[
                m::tensor_unit_r_inv(&b),
                Mor::tensor(&id(&b), &eta),
                m::dist_l(&b, &a, &b)?,
                Mor::sub(&x, &id(&b))?,
            ])?;
            let gamma = Mor::chain(&[m::tensor_unit_r_inv(&b), Mor::tensor(&id(&b), &nu), eps])?;
            (delta, gamma)
        }
    };
    Ok((delta.tabulate()?, gamma.tabulate()?))
}

/// The `◁`-monoid `(μ, ν)` induced on the opposite leg by a `⊗`-comonoid
/// `(δ, γ)` on the `side` leg, using the unit once and the counit twice.
pub fn induced_tri_monoid(
    side: Side,
    w: &DualityWitness,
    delta: &PolyMap,
    gamma: &PolyMap,
) -> Result<(PolyMap, PolyMap)> {
    let Legs { a, b, eta, eps } = legs_of(w)?;
    let (mu, nu) = match side {
        Side::Left => {
            let delta = Mor::table(delta, &b, &Obj::tensor(&b, &b))?;
            let gamma = Mor::table(gamma, &b, &Obj::y())?;
            let aa = Obj::sub(&a, &a)?;
            let inner = Mor::chain(&[m::dist_l(&b, &a, &a)?, Mor::sub(&eps, &id(&a))?, m::tri_unit_l(&a)?])?;
            let pair = Mor::chain(&[m::tensor_assoc(&b, &b, &aa), Mor::tensor(&id(&b), &inner), eps.clone()])?;
            let mu = Mor::chain(&[
                m::tensor_unit_l_inv(&aa),
                Mor::tensor(&eta, &id(&aa)),
                m::dist_r(&a, &b, &aa)?,
                Mor::sub(&id(&a), &Mor::tensor(&delta, &id(&aa)).then(&pair)?)?,
                m::tri_unit_r(&a)?,
            ])?;
            let nu = Mor::chain(&[eta, Mor::sub(&id(&a), &gamma)?, m::tri_unit_r(&a)?])?;
            (mu, nu)
        }
        Side::Right => {
            let delta = Mor::table(delta, &a, &Obj::tensor(&a, &a))?;
            let gamma = Mor::table(gamma, &a, &Obj::y())?;
            let bb = Obj::sub(&b, &b)?;
            let inner = Mor::chain(&[m::dist_r(&b, &b, &a)?, Mor::sub(&id(&b), &eps)?, m::tri_unit_r(&b)?])?;
            let pair = Mor::chain(&[
                m::tensor_assoc_inv(&bb, &a, &a),
                Mor::tensor(&inner, &id(&a)),
                eps.clone(),
            ])?;
            let mu = Mor::chain(&[
                m::tensor_unit_r_inv(&bb),
                Mor::tensor(&id(&bb), &eta),
                m::dist_l(&bb, &a, &b)?,
                Mor::sub(&Mor::tensor(&id(&bb), &delta).then(&pair)?, &id(&b))?,
                m::tri_unit_l(&b)?,
            ])?;
            let nu = Mor::chain(&[eta, Mor::sub(&gamma, &id(&b))?, m::tri_unit_l(&b)?])?;
            (mu, nu)
        }
    };
    Ok((mu.tabulate()?, nu.tabulate()?))
}

fn square(n: usize) -> usize {
    n * n
}

/// `μ(a1, a2) = a1 ∗ a2` and `ν = e` on `My`.
pub fn tensor_monoid_on_linear(mon: &FiniteMonoid) -> Result<(PolyMap, PolyMap)> {
    let n = mon.order();
    let lin = Polynomial::linear(n);
    let mu = PolyMap::new(
        Polynomial::linear(square(n)),
        lin.clone(),
        (0..square(n)).map(|k| mon.mul(k / n, k % n)).collect(),
        vec![vec![0]; square(n)],
    )?;
    let nu = PolyMap::new(Polynomial::y(), lin, vec![mon.unit()], vec![vec![0]])?;
    Ok((mu, nu))
}

/// The diagonal and terminal maps on `A`, as a `⊗`-monoid on `y^A`.
pub fn tensor_monoid_on_representable(a: &FiniteSet) -> Result<(PolyMap, PolyMap)> {
    let n = a.card;
    let rep = Polynomial::representable(n);
    let mu = PolyMap::new(
        Polynomial::representable(square(n)),
        rep.clone(),
        vec![0],
        vec![(0..n).map(|x| x * n + x).collect()],
    )?;
    let nu = PolyMap::new(Polynomial::y(), rep, vec![0], vec![vec![0; n]])?;
    Ok((mu, nu))
}

/// The diagonal and terminal maps on `A`, as a `⊗`-comonoid on `Ay`.
pub fn tensor_comonoid_on_linear(a: &FiniteSet) -> Result<(PolyMap, PolyMap)> {
    let n = a.card;
    let lin = Polynomial::linear(n);
    let delta = PolyMap::new(
        lin.clone(),
        Polynomial::linear(square(n)),
        (0..n).map(|x| x * n + x).collect(),
        vec![vec![0]; n],
    )?;
    let gamma = PolyMap::new(lin, Polynomial::y(), vec![0; n], vec![vec![0]; n])?;
    Ok((delta, gamma))
}

/// Multiplication and unit read backwards, as a `⊗`-comonoid on `y^M`.
pub fn tensor_comonoid_on_representable(mon: &FiniteMonoid) -> Result<(PolyMap, PolyMap)> {
    let n = mon.order();
    let rep = Polynomial::representable(n);
    let delta = PolyMap::new(
        rep.clone(),
        Polynomial::representable(square(n)),
        vec![0],
        vec![(0..square(n)).map(|k| mon.mul(k / n, k % n)).collect()],
    )?;
    let gamma = PolyMap::new(rep, Polynomial::y(), vec![0], vec![vec![mon.unit()]])?;
    Ok((delta, gamma))
}

fn carrier_set(mon: &FiniteMonoid) -> FiniteSet {
    FiniteSet::new(mon.order())
}

/// `My ⊣⊣ y^M` with the monoid of `M` on `My`.
pub fn left_linear_monoid(mon: &FiniteMonoid) -> Result<LinearMonoidStructure> {
    let duality = canonical_dual(&carrier_set(mon))?;
    let (mu, nu) = tensor_monoid_on_linear(mon)?;
    let (delta, gamma) = induced_tri_comonoid(Side::Left, &duality, &mu, &nu)?;
    Ok(LinearMonoidStructure {
        side: Side::Left,
        duality,
        mu,
        nu,
        delta,
        gamma,
    })
}

/// `Ay ⊣⊣ y^A` with the diagonal monoid on `y^A`.
pub fn right_linear_monoid(a: &FiniteSet) -> Result<LinearMonoidStructure> {
    let duality = canonical_dual(a)?;
    let (mu, nu) = tensor_monoid_on_representable(a)?;
    let (delta, gamma) = induced_tri_comonoid(Side::Right, &duality, &mu, &nu)?;
    Ok(LinearMonoidStructure {
        side: Side::Right,
        duality,
        mu,
        nu,
        delta,
        gamma,
    })
}

/// `Ay ⊣⊣ y^A` with the diagonal comonoid on `Ay`.
pub fn left_linear_comonoid(a: &FiniteSet) -> Result<LinearComonoidStructure> {
    let duality = canonical_dual(a)?;
    let (delta, gamma) = tensor_comonoid_on_linear(a)?;
    let (mu, nu) = induced_tri_monoid(Side::Left, &duality, &delta, &gamma)?;
    Ok(LinearComonoidStructure {
        side: Side::Left,
        duality,
        delta,
        gamma,
        mu,
        nu,
    })
}

/// `My ⊣⊣ y^M` with the comonoid read off `M` on `y^M`.
pub fn right_linear_comonoid(mon: &FiniteMonoid) -> Result<LinearComonoidStructure> {
    let duality = canonical_dual(&carrier_set(mon))?;
    let (delta, gamma) = tensor_comonoid_on_representable(mon)?;
    let (mu, nu) = induced_tri_monoid(Side::Right, &duality, &delta, &gamma)?;
    Ok(LinearComonoidStructure {
        side: Side::Right,
        duality,
        delta,
        gamma,
        mu,
        nu,
    })
}

fn expect_map(f: &PolyMap, dom: &Polynomial, cod: &Polynomial, role: &str) -> Result<()> {
    if &f.dom != dom || &f.cod != cod {
        return Err(PolyError::DomainMismatch(format!(
            "{role} must be {dom} -> {cod}, got {} -> {}",
            f.dom, f.cod
        )));
    }
    Ok(())
}

/// The swap `(p ⊗ p) ⊗ (p ⊗ p) → (p ⊗ p) ⊗ (p ⊗ p)` exchanging the middle
/// factors.
fn middle_swap(p: &Obj) -> Mor {
    let pp = Obj::tensor(p, p);
    Mor::chain(&[
        m::tensor_assoc(p, p, &pp),
        Mor::tensor(&id(p), &m::tensor_assoc_inv(p, p, p)),
        Mor::tensor(&id(p), &Mor::tensor(&m::tensor_sym(p, p), &id(p))),
        Mor::tensor(&id(p), &m::tensor_assoc(p, p, p)),
        m::tensor_assoc_inv(p, p, &pp),
    ])
    .expect("types line up")
}

/// The four `⊗`-bialgebra laws for a monoid and comonoid on the same
/// carrier: the unit is a comonoid map, the counit is a monoid map, the unit
/// followed by the counit is the identity, and the bialgebra rule.
pub fn check_bialgebra(
    p: &Polynomial,
    mu: &PolyMap,
    nu: &PolyMap,
    delta: &PolyMap,
    gamma: &PolyMap,
) -> Result<LawReport> {
    let pp = monoidal::tensor(p, p)?;
    let y = Polynomial::y();
    expect_map(mu, &pp, p, "multiplication")?;
    expect_map(nu, &y, p, "unit")?;
    expect_map(delta, p, &pp, "comultiplication")?;
    expect_map(gamma, p, &y, "counit")?;
    let o = base(p);
    let oo = Obj::tensor(&o, &o);
    let yo = Obj::y();
    let mu = Mor::table(mu, &oo, &o)?;
    let nu = Mor::table(nu, &yo, &o)?;
    let delta = Mor::table(delta, &o, &oo)?;
    let gamma = Mor::table(gamma, &o, &yo)?;
    Ok(LawReport::all(
        &format!("bialgebra on {p}"),
        vec![
            LawReport::check(
                "(i) unit then comultiplication",
                &nu.then(&delta)?,
                &m::tensor_unit_l_inv(&yo).then(&Mor::tensor(&nu, &nu))?,
            )?,
            LawReport::check(
                "(ii) multiplication then counit",
                &mu.then(&gamma)?,
                &Mor::tensor(&gamma, &gamma).then(&m::tensor_unit_l(&yo))?,
            )?,
            LawReport::check("(iii) unit then counit", &nu.then(&gamma)?, &id(&yo))?,
            LawReport::check(
                "(iv) bialgebra rule",
                &mu.then(&delta)?,
                &Mor::chain(&[Mor::tensor(&delta, &delta), middle_swap(&o), Mor::tensor(&mu, &mu)])?,
            )?,
        ],
    ))
}

/// The left (on `My`) or right (on `y^M`) linear bialgebra of a monoid.
pub fn linear_bialgebra(mon: &FiniteMonoid, side: Side) -> Result<(LinearMonoidStructure, LinearComonoidStructure)> {
    match side {
        Side::Left => Ok((left_linear_monoid(mon)?, left_linear_comonoid(&carrier_set(mon))?)),
        Side::Right => Ok((right_linear_monoid(&carrier_set(mon))?, right_linear_comonoid(mon)?)),
    }
}

/// Every law of the left or right linear bialgebra of a monoid: both linear
/// structures with their induced `◁`-structures, and the bialgebra laws on
/// the shared carrier.
pub fn verify_linear_bialgebra(mon: &FiniteMonoid, side: Side) -> Result<LawReport> {
    let (lm, lc) = linear_bialgebra(mon, side)?;
    let bialg = check_bialgebra(lm.carrier(), &lm.mu, &lm.nu, &lc.delta, &lc.gamma)?;
    Ok(LawReport::all(
        &format!("{side} linear bialgebra"),
        vec![lm.verify()?, lc.verify()?, bialg],
    ))
}

#[cfg(test)]
mod tests;
