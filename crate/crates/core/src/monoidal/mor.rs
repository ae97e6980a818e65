//! Structural maps over structured objects.

use crate::error::Result;
use crate::polycore::{Elem, Mor, Obj};

fn y() -> Obj {
    Obj::y()
}

/// `y ⊗ p → p`.
pub fn tensor_unit_l(p: &Obj) -> Mor {
    Mor::new(
        Obj::tensor(&y(), p),
        p.clone(),
        |x| x.snd().clone(),
        |_, d| Elem::pair(Elem::Idx(0), d.clone()),
    )
}

/// `p → y ⊗ p`.
pub fn tensor_unit_l_inv(p: &Obj) -> Mor {
    Mor::new(
        p.clone(),
        Obj::tensor(&y(), p),
        |x| Elem::pair(Elem::Idx(0), x.clone()),
        |_, d| d.snd().clone(),
    )
}

/// `p ⊗ y → p`.
pub fn tensor_unit_r(p: &Obj) -> Mor {
    Mor::new(
        Obj::tensor(p, &y()),
        p.clone(),
        |x| x.fst().clone(),
        |_, d| Elem::pair(d.clone(), Elem::Idx(0)),
    )
}

/// `p → p ⊗ y`.
pub fn tensor_unit_r_inv(p: &Obj) -> Mor {
    Mor::new(
        p.clone(),
        Obj::tensor(p, &y()),
        |x| Elem::pair(x.clone(), Elem::Idx(0)),
        |_, d| d.fst().clone(),
    )
}

/// `(p ⊗ q) ⊗ r → p ⊗ (q ⊗ r)`.
pub fn tensor_assoc(p: &Obj, q: &Obj, r: &Obj) -> Mor {
    Mor::new(
        Obj::tensor(&Obj::tensor(p, q), r),
        Obj::tensor(p, &Obj::tensor(q, r)),
        |x| {
            Elem::pair(
                x.fst().fst().clone(),
                Elem::pair(x.fst().snd().clone(), x.snd().clone()),
            )
        },
        |_, d| {
            Elem::pair(
                Elem::pair(d.fst().clone(), d.snd().fst().clone()),
                d.snd().snd().clone(),
            )
        },
    )
}

/// `p ⊗ (q ⊗ r) → (p ⊗ q) ⊗ r`.
pub fn tensor_assoc_inv(p: &Obj, q: &Obj, r: &Obj) -> Mor {
    Mor::new(
        Obj::tensor(p, &Obj::tensor(q, r)),
        Obj::tensor(&Obj::tensor(p, q), r),
        |x| {
            Elem::pair(
                Elem::pair(x.fst().clone(), x.snd().fst().clone()),
                x.snd().snd().clone(),
            )
        },
        |_, d| {
            Elem::pair(
                d.fst().fst().clone(),
                Elem::pair(d.fst().snd().clone(), d.snd().clone()),
            )
        },
    )
}

/// `p ⊗ q → q ⊗ p`.
pub fn tensor_sym(p: &Obj, q: &Obj) -> Mor {
    Mor::new(
        Obj::tensor(p, q),
        Obj::tensor(q, p),
        |x| Elem::pair(x.snd().clone(), x.fst().clone()),
        |_, d| Elem::pair(d.snd().clone(), d.fst().clone()),
    )
}

/// `y ◁ p → p`.
pub fn tri_unit_l(p: &Obj) -> Result<Mor> {
    Ok(Mor::new(
        Obj::sub(&y(), p)?,
        p.clone(),
        |x| x.snd().seq()[0].clone(),
        |_, d| Elem::pair(Elem::Idx(0), d.clone()),
    ))
}

/// `p → y ◁ p`.
pub fn tri_unit_l_inv(p: &Obj) -> Result<Mor> {
    Ok(Mor::new(
        p.clone(),
        Obj::sub(&y(), p)?,
        |x| Elem::pair(Elem::Idx(0), Elem::Seq(vec![x.clone()])),
        |_, d| d.snd().clone(),
    ))
}

/// `p ◁ y → p`.
pub fn tri_unit_r(p: &Obj) -> Result<Mor> {
    Ok(Mor::new(
        Obj::sub(p, &y())?,
        p.clone(),
        |x| x.fst().clone(),
        |_, d| Elem::pair(d.clone(), Elem::Idx(0)),
    ))
}

/// `p → p ◁ y`.
pub fn tri_unit_r_inv(p: &Obj) -> Result<Mor> {
    let pc = p.clone();
    Ok(Mor::new(
        p.clone(),
        Obj::sub(p, &y())?,
        move |x| {
            let n = pc.card(x) as usize;
            Elem::pair(x.clone(), Elem::Seq(vec![Elem::Idx(0); n]))
        },
        |_, d| d.fst().clone(),
    ))
}

/// `(p ◁ q) ◁ r → p ◁ (q ◁ r)`.
pub fn tri_assoc(p: &Obj, q: &Obj, r: &Obj) -> Result<Mor> {
    let qc = q.clone();
    Ok(Mor::new(
        Obj::sub(&Obj::sub(p, q)?, r)?,
        Obj::sub(p, &Obj::sub(q, r)?)?,
        move |x| {
            let (big_p, w) = (x.fst().fst(), x.fst().snd().seq());
            let v = x.snd().seq();
            let mut at = 0;
            let u = w
                .iter()
                .map(|qpos| {
                    let n = qc.card(qpos) as usize;
                    let part = v[at..at + n].to_vec();
                    at += n;
                    Elem::pair(qpos.clone(), Elem::Seq(part))
                })
                .collect();
            Elem::pair(big_p.clone(), Elem::Seq(u))
        },
        |_, d| {
            Elem::pair(
                Elem::pair(d.fst().clone(), d.snd().fst().clone()),
                d.snd().snd().clone(),
            )
        },
    ))
}

/// `p ◁ (q ◁ r) → (p ◁ q) ◁ r`.
pub fn tri_assoc_inv(p: &Obj, q: &Obj, r: &Obj) -> Result<Mor> {
    Ok(Mor::new(
        Obj::sub(p, &Obj::sub(q, r)?)?,
        Obj::sub(&Obj::sub(p, q)?, r)?,
        |x| {
            let u = x.snd().seq();
            let w = u.iter().map(|pair| pair.fst().clone()).collect();
            let v = u.iter().flat_map(|pair| pair.snd().seq().iter().cloned()).collect();
            Elem::pair(Elem::pair(x.fst().clone(), Elem::Seq(w)), Elem::Seq(v))
        },
        |_, d| {
            Elem::pair(
                d.fst().fst().clone(),
                Elem::pair(d.fst().snd().clone(), d.snd().clone()),
            )
        },
    ))
}

/// The duoidal interchange `(p1 ◁ p2) ⊗ (q1 ◁ q2) → (p1 ⊗ q1) ◁ (p2 ⊗ q2)`.
pub fn duoidal(p1: &Obj, p2: &Obj, q1: &Obj, q2: &Obj) -> Result<Mor> {
    Ok(Mor::new(
        Obj::tensor(&Obj::sub(p1, p2)?, &Obj::sub(q1, q2)?),
        Obj::sub(&Obj::tensor(p1, q1), &Obj::tensor(p2, q2))?,
        |x| {
            let (a, b) = (x.fst(), x.snd());
            let (w1, w2) = (a.snd().seq(), b.snd().seq());
            let u = w1
                .iter()
                .flat_map(|s| w2.iter().map(move |t| Elem::pair(s.clone(), t.clone())))
                .collect();
            Elem::pair(Elem::pair(a.fst().clone(), b.fst().clone()), Elem::Seq(u))
        },
        |_, d| {
            let (de, bc) = (d.fst(), d.snd());
            Elem::pair(
                Elem::pair(de.fst().clone(), bc.fst().clone()),
                Elem::pair(de.snd().clone(), bc.snd().clone()),
            )
        },
    ))
}

/// `∂^L: a ⊗ (b ◁ c) → (a ⊗ b) ◁ c`, through `a ≅ a ◁ y`, the interchange,
/// and `y ⊗ c ≅ c`.
pub fn dist_l(a: &Obj, b: &Obj, c: &Obj) -> Result<Mor> {
    let bc = Obj::sub(b, c)?;
    Mor::chain(&[
        Mor::tensor(&tri_unit_r_inv(a)?, &Mor::id(&bc)),
        duoidal(a, &y(), b, c)?,
        Mor::sub(&Mor::id(&Obj::tensor(a, b)), &tensor_unit_l(c))?,
    ])
}

/// `∂^R: (b ◁ c) ⊗ a → b ◁ (c ⊗ a)`, through `a ≅ y ◁ a`, the interchange,
/// and `b ⊗ y ≅ b`.
pub fn dist_r(b: &Obj, c: &Obj, a: &Obj) -> Result<Mor> {
    let bc = Obj::sub(b, c)?;
    Mor::chain(&[
        Mor::tensor(&Mor::id(&bc), &tri_unit_l_inv(a)?),
        duoidal(b, c, &y(), a)?,
        Mor::sub(&tensor_unit_r(b), &Mor::id(&Obj::tensor(c, a)))?,
    ])
}

/// `a ⊗ (b ◁ c) → b ◁ (a ⊗ c)`, as `σ ; ∂^R ; b ◁ σ`.
pub fn perm_dist_lr(a: &Obj, b: &Obj, c: &Obj) -> Result<Mor> {
    let bc = Obj::sub(b, c)?;
    Mor::chain(&[
        tensor_sym(a, &bc),
        dist_r(b, c, a)?,
        Mor::sub(&Mor::id(b), &tensor_sym(c, a))?,
    ])
}

/// `(b ◁ c) ⊗ a → (b ⊗ a) ◁ c`, as `σ ; ∂^L ; σ ◁ c`.
pub fn perm_dist_rl(b: &Obj, c: &Obj, a: &Obj) -> Result<Mor> {
    let bc = Obj::sub(b, c)?;
    Mor::chain(&[
        tensor_sym(&bc, a),
        dist_l(a, b, c)?,
        Mor::sub(&tensor_sym(a, b), &Mor::id(c))?,
    ])
}

/// `indep: p ⊗ q → p ◁ q`, pairing a position of `p` with the constant choice.
pub fn indep(p: &Obj, q: &Obj) -> Result<Mor> {
    let pc = p.clone();
    Ok(Mor::new(
        Obj::tensor(p, q),
        Obj::sub(p, q)?,
        move |x| {
            let n = pc.card(x.fst()) as usize;
            Elem::pair(x.fst().clone(), Elem::Seq(vec![x.snd().clone(); n]))
        },
        |_, d| d.clone(),
    ))
}

/// The mix coherence composite along the lower-left path:
/// `a ⊗ b → (a ◁ y) ⊗ b → a ◁ (y ⊗ b) → a ◁ b`, with the mix map the identity.
pub fn indep_via_dist_r(a: &Obj, b: &Obj) -> Result<Mor> {
    Mor::chain(&[
        Mor::tensor(&tri_unit_r_inv(a)?, &Mor::id(b)),
        dist_r(a, &y(), b)?,
        Mor::sub(&Mor::id(a), &tensor_unit_l(b))?,
    ])
}

/// The upper-right path: `a ⊗ b → a ⊗ (y ◁ b) → (a ⊗ y) ◁ b → a ◁ b`.
pub fn indep_via_dist_l(a: &Obj, b: &Obj) -> Result<Mor> {
    Mor::chain(&[
        Mor::tensor(&Mor::id(a), &tri_unit_l_inv(b)?),
        dist_l(a, &y(), b)?,
        Mor::sub(&tensor_unit_r(a), &Mor::id(b))?,
    ])
}

/// The map `k: y → y` of a normal duoidal structure:
/// `y ≅ y ⊗ y ≅ (y ◁ y) ⊗ (y ◁ y) → (y ⊗ y) ◁ (y ⊗ y) ≅ y ◁ y ≅ y`.
pub fn normality_k() -> Result<Mor> {
    let yy = Mor::tensor(&tri_unit_l_inv(&y())?, &tri_unit_l_inv(&y())?);
    Mor::chain(&[
        tensor_unit_l_inv(&y()),
        yy,
        duoidal(&y(), &y(), &y(), &y())?,
        Mor::sub(&tensor_unit_l(&y()), &tensor_unit_l(&y()))?,
        tri_unit_l(&y())?,
    ])
}
