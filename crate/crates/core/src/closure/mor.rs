//! Evaluation, coevaluation and transposes over structured objects.

use crate::error::{PolyError, Result};
use crate::polycore::{Elem, Kind, Mor, Obj};

/// `ev: p ⊗ [p, b] → b`.
pub fn ev(p: &Obj, b: &Obj) -> Result<Mor> {
    let (p1, p2, b2) = (p.clone(), p.clone(), b.clone());
    Ok(Mor::new(
        Obj::tensor(p, &Obj::close(p, b)?),
        b.clone(),
        move |x| {
            let i = p1.pos_index(x.fst()) as usize;
            x.snd().seq()[i].fst().clone()
        },
        move |x, e| {
            let big_p = x.fst();
            let choice = &x.snd().seq()[p2.pos_index(big_p) as usize];
            let d = &choice.snd().seq()[b2.dir_index(choice.fst(), e)];
            Elem::pair(d.clone(), Elem::pair(big_p.clone(), e.clone()))
        },
    ))
}

/// `coev: p → coclose(p, q) ◁ q`, sending `P` to `(P, (Q, d) ↦ Q)`.
pub fn coev(p: &Obj, q: &Obj) -> Result<Mor> {
    let c = Obj::coclose(p, q)?;
    let c1 = c.clone();
    let q2 = q.clone();
    Ok(Mor::new(
        p.clone(),
        Obj::sub(&c, q)?,
        move |x| {
            let w = c1.dirs(x).into_iter().map(|d| d.fst().clone()).collect();
            Elem::pair(x.clone(), Elem::Seq(w))
        },
        move |_, dir| {
            let (qd, b) = (dir.fst(), dir.snd());
            qd.snd().seq()[q2.dir_index(qd.fst(), b)].clone()
        },
    ))
}

fn tensor_parts(o: &Obj) -> Option<(&Obj, &Obj)> {
    match o.kind() {
        Kind::Tensor(a, b) => Some((a, b)),
        _ => None,
    }
}

fn sub_parts(o: &Obj) -> Option<(&Obj, &Obj)> {
    match o.kind() {
        Kind::Sub(a, b) => Some((a, b)),
        _ => None,
    }
}

/// Transposes `f: p ⊗ r → b` to `r → [p, b]`.
pub fn curry(f: &Mor) -> Result<Mor> {
    let (p, r) = tensor_parts(f.dom())
        .ok_or_else(|| PolyError::DomainMismatch(format!("curry needs a tensor domain, got {}", f.dom())))?;
    let (p, r) = (p.clone(), r.clone());
    let b = f.cod().clone();
    let cod = Obj::close(&p, &b)?;
    let np = p.enumerable_count("curry")?;
    let (f1, f2) = (f.clone(), f.clone());
    Ok(Mor::new(
        r,
        cod,
        move |x| {
            let phi = (0..np)
                .map(|i| {
                    let pr = Elem::pair(p.pos_at(i as u128), x.clone());
                    let q = f1.fwd(&pr);
                    let h = b.dirs(&q).iter().map(|e| f1.bwd(&pr, e).fst().clone()).collect();
                    Elem::pair(q, Elem::Seq(h))
                })
                .collect();
            Elem::Seq(phi)
        },
        move |x, dir| {
            let pr = Elem::pair(dir.fst().clone(), x.clone());
            f2.bwd(&pr, dir.snd()).snd().clone()
        },
    ))
}

/// `(id_p ⊗ g) ; ev` for `g: r → [p, b]`.
pub fn uncurry(g: &Mor) -> Result<Mor> {
    let (p, b) = match g.cod().kind() {
        Kind::Close(p, b) => (p.clone(), b.clone()),
        _ => {
            return Err(PolyError::DomainMismatch(format!(
                "uncurry needs a closure codomain, got {}",
                g.cod()
            )))
        }
    };
    Mor::tensor(&Mor::id(&p), g).then(&ev(&p, &b)?)
}

/// Transposes `g: p → r ◁ q` to `coclose(p, q) → r`.
pub fn cocurry(g: &Mor) -> Result<Mor> {
    let (r, q) = sub_parts(g.cod())
        .ok_or_else(|| PolyError::DomainMismatch(format!("cocurry needs a substitution codomain, got {}", g.cod())))?;
    let (r, q) = (r.clone(), q.clone());
    let dom = Obj::coclose(g.dom(), &q)?;
    let (g1, g2) = (g.clone(), g.clone());
    Ok(Mor::new(
        dom,
        r.clone(),
        move |x| g1.fwd(x).fst().clone(),
        move |x, e| {
            let image = g2.fwd(x);
            let w = image.snd().seq();
            let big_q = &w[r.dir_index(image.fst(), e)];
            let h = q
                .dirs(big_q)
                .into_iter()
                .map(|b| g2.bwd(x, &Elem::pair(e.clone(), b)))
                .collect();
            Elem::pair(big_q.clone(), Elem::Seq(h))
        },
    ))
}

/// `coev ; (h ◁ id_q)` for `h: coclose(p, q) → r`.
pub fn uncocurry(h: &Mor) -> Result<Mor> {
    let (p, q) = match h.dom().kind() {
        Kind::Coclose(p, q) => (p.clone(), q.clone()),
        _ => {
            return Err(PolyError::DomainMismatch(format!(
                "uncocurry needs a coclosure domain, got {}",
                h.dom()
            )))
        }
    };
    coev(&p, &q)?.then(&Mor::sub(h, &Mor::id(&q))?)
}

/// `[f, g]: [p, q] → [p', q']` for `f: p' → p` and `g: q → q'`.
pub fn close_map(f: &Mor, g: &Mor) -> Result<Mor> {
    let (p2, p) = (f.dom().clone(), f.cod().clone());
    let dom = Obj::close(&p, g.dom())?;
    let cod = Obj::close(&p2, g.cod())?;
    let np2 = p2.enumerable_count("closure map")?;
    let (f1, g1, p1, q1) = (f.clone(), g.clone(), p.clone(), g.dom().clone());
    let (f2, g2, pb) = (f.clone(), g.clone(), p.clone());
    Ok(Mor::new(
        dom,
        cod,
        move |phi| {
            let out = (0..np2)
                .map(|i| {
                    let big_p2 = p2.pos_at(i as u128);
                    let big_p = f1.fwd(&big_p2);
                    let choice = &phi.seq()[p1.pos_index(&big_p) as usize];
                    let (big_q, h) = (choice.fst(), choice.snd().seq());
                    let big_q2 = g1.fwd(big_q);
                    let h2 = g1
                        .cod()
                        .dirs(&big_q2)
                        .iter()
                        .map(|e2| {
                            let e = g1.bwd(big_q, e2);
                            f1.bwd(&big_p2, &h[q1.dir_index(big_q, &e)])
                        })
                        .collect();
                    Elem::pair(big_q2, Elem::Seq(h2))
                })
                .collect();
            Elem::Seq(out)
        },
        move |phi, dir| {
            let big_p = f2.fwd(dir.fst());
            let big_q = phi.seq()[pb.pos_index(&big_p) as usize].fst();
            Elem::pair(big_p, g2.bwd(big_q, dir.snd()))
        },
    ))
}

/// `coclose(f, g): coclose(p, q) → coclose(p', q')` for `f: p → p'` and `g: q' → q`.
pub fn coclose_map(f: &Mor, g: &Mor) -> Result<Mor> {
    let dom = Obj::coclose(f.dom(), g.cod())?;
    let cod = Obj::coclose(f.cod(), g.dom())?;
    let (f1, f2, g2) = (f.clone(), f.clone(), g.clone());
    Ok(Mor::new(
        dom,
        cod,
        move |x| f1.fwd(x),
        move |x, dir| {
            let (big_q2, h2) = (dir.fst(), dir.snd().seq());
            let big_q = g2.fwd(big_q2);
            let h = g2
                .cod()
                .dirs(&big_q)
                .iter()
                .map(|e| {
                    let e2 = g2.bwd(big_q2, e);
                    f2.bwd(x, &h2[g2.dom().dir_index(big_q2, &e2)])
                })
                .collect();
            Elem::pair(big_q, Elem::Seq(h))
        },
    ))
}
