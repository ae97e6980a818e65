//! Dirichlet product `⊗`, substitution `◁`, and the isomix linearly
//! distributive structure linking them.
//!
//! Table-level functions here take polynomials and return [`PolyMap`]s; the
//! [`mor`] submodule has the same maps over structured objects.

pub mod mor;

use crate::error::Result;
use crate::polycore::cap::{check_cap, checked_pow, overflow};
use crate::polycore::{Mor, Obj, PolyMap, Polynomial};

fn base(p: &Polynomial) -> Obj {
    Obj::base(p.clone())
}

/// `p ⊗ q`: positions `(P, Q)` with `P` most significant, directions
/// `p[P] × q[Q]`.
pub fn tensor(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let n = (p.num_positions() as u128) * (q.num_positions() as u128);
    check_cap("tensor positions", n)?;
    let mut cards = Vec::with_capacity(n as usize);
    for &a in p.cards() {
        for &b in q.cards() {
            cards.push(check_cap("tensor directions", a as u128 * b as u128)?);
        }
    }
    check_cap("tensor table entries", cards.iter().map(|&c| c as u128).sum())?;
    Ok(Polynomial::new(cards))
}

/// `p ◁ q`: positions `(P, w: p[P] → q(1))`, directions `Σ_d q[w(d)]`.
pub fn substitute(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let m = q.num_positions() as u128;
    let n = p.cards().iter().try_fold(0u128, |acc, &c| {
        checked_pow(m, c as u128).and_then(|x| acc.checked_add(x))
    });
    let n = n.ok_or_else(|| overflow("substitution positions"))?;
    check_cap("substitution positions", n)?;
    let mut cards = Vec::with_capacity(n as usize);
    let mut total = 0u128;
    for &c in p.cards() {
        if m == 0 && c > 0 {
            continue;
        }
        let mut w = vec![0usize; c];
        loop {
            let s: usize = w.iter().map(|&j| q.card(j)).sum();
            total += s as u128;
            cards.push(s);
            if !odometer(&mut w, m as usize) {
                break;
            }
        }
    }
    check_cap("substitution table entries", total)?;
    Ok(Polynomial::new(cards))
}

/// Advances a uniform-base counter, last digit fastest. False on wrap.
pub(crate) fn odometer(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn tab(m: Result<Mor>) -> Result<PolyMap> {
    m?.tabulate()
}

pub fn tensor_map(f: &PolyMap, g: &PolyMap) -> Result<PolyMap> {
    Mor::tensor(&Mor::from_map(f), &Mor::from_map(g)).tabulate()
}

pub fn substitute_map(f: &PolyMap, g: &PolyMap) -> Result<PolyMap> {
    tab(Mor::sub(&Mor::from_map(f), &Mor::from_map(g)))
}

pub fn tensor_unit_l(p: &Polynomial) -> Result<PolyMap> {
    mor::tensor_unit_l(&base(p)).tabulate()
}

pub fn tensor_unit_r(p: &Polynomial) -> Result<PolyMap> {
    mor::tensor_unit_r(&base(p)).tabulate()
}

pub fn tensor_assoc(p: &Polynomial, q: &Polynomial, r: &Polynomial) -> Result<PolyMap> {
    mor::tensor_assoc(&base(p), &base(q), &base(r)).tabulate()
}

pub fn tensor_sym(p: &Polynomial, q: &Polynomial) -> Result<PolyMap> {
    mor::tensor_sym(&base(p), &base(q)).tabulate()
}

pub fn tri_unit_l(p: &Polynomial) -> Result<PolyMap> {
    tab(mor::tri_unit_l(&base(p)))
}

pub fn tri_unit_r(p: &Polynomial) -> Result<PolyMap> {
    tab(mor::tri_unit_r(&base(p)))
}

pub fn tri_assoc(p: &Polynomial, q: &Polynomial, r: &Polynomial) -> Result<PolyMap> {
    tab(mor::tri_assoc(&base(p), &base(q), &base(r)))
}

pub fn duoidal(p1: &Polynomial, p2: &Polynomial, q1: &Polynomial, q2: &Polynomial) -> Result<PolyMap> {
    tab(mor::duoidal(&base(p1), &base(p2), &base(q1), &base(q2)))
}

pub fn dist_l(a: &Polynomial, b: &Polynomial, c: &Polynomial) -> Result<PolyMap> {
    tab(mor::dist_l(&base(a), &base(b), &base(c)))
}

pub fn dist_r(b: &Polynomial, c: &Polynomial, a: &Polynomial) -> Result<PolyMap> {
    tab(mor::dist_r(&base(b), &base(c), &base(a)))
}

pub fn perm_dist_lr(a: &Polynomial, b: &Polynomial, c: &Polynomial) -> Result<PolyMap> {
    tab(mor::perm_dist_lr(&base(a), &base(b), &base(c)))
}

pub fn perm_dist_rl(b: &Polynomial, c: &Polynomial, a: &Polynomial) -> Result<PolyMap> {
    tab(mor::perm_dist_rl(&base(b), &base(c), &base(a)))
}

/// The mix map `y → y`, which is the identity.
pub fn mix_map() -> PolyMap {
    PolyMap::identity(&Polynomial::y())
}

pub fn indep(p: &Polynomial, q: &Polynomial) -> Result<PolyMap> {
    tab(mor::indep(&base(p), &base(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::FiniteSet;

    fn poly(c: &[usize]) -> Polynomial {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn tensor_example() {
        assert_eq!(tensor(&poly(&[3, 2]), &poly(&[2])).unwrap(), poly(&[6, 4]));
        assert_eq!(
            tensor(&Polynomial::linear(2), &Polynomial::linear(3)).unwrap(),
            Polynomial::linear(6)
        );
    }

    #[test]
    fn substitute_example() {
        assert_eq!(substitute(&poly(&[2]), &poly(&[1, 0])).unwrap(), poly(&[2, 1, 1, 0]));
        let q = poly(&[2, 0, 1]);
        assert_eq!(substitute(&Polynomial::y(), &q).unwrap(), q);
        assert_eq!(substitute(&q, &Polynomial::y()).unwrap(), q);
    }

    #[test]
    fn direct_products_match_structured_objects() {
        let fam = crate::polycore::polynomials_within(2, 2);
        for p in &fam {
            for q in &fam {
                let (bp, bq) = (base(p), base(q));
                assert_eq!(Obj::tensor(&bp, &bq).flatten().unwrap(), tensor(p, q).unwrap());
                assert_eq!(
                    Obj::sub(&bp, &bq).unwrap().flatten().unwrap(),
                    substitute(p, q).unwrap()
                );
            }
        }
    }

    #[test]
    fn substitution_is_composition_on_small_sets() {
        let fam = crate::polycore::polynomials_within(2, 2);
        for p in &fam {
            for q in &fam {
                let s = substitute(p, q).unwrap();
                for x in 0..=3 {
                    let inner = q.evaluate(&FiniteSet::new(x)).unwrap();
                    assert_eq!(s.evaluate(&FiniteSet::new(x)).unwrap(), p.evaluate(&inner).unwrap());
                    let t = tensor(p, q).unwrap().eval_count(x as u128).unwrap();
                    let brute: u128 = p
                        .cards()
                        .iter()
                        .flat_map(|&a| q.cards().iter().map(move |&b| (x as u128).pow((a * b) as u32)))
                        .sum();
                    assert_eq!(t, brute);
                }
            }
        }
    }

    #[test]
    fn unitors_and_associators_are_isos() {
        let fam = crate::polycore::polynomials_within(2, 2);
        for p in &fam {
            assert!(tensor_unit_l(p).unwrap().is_iso());
            assert!(tensor_unit_r(p).unwrap().is_iso());
            assert!(tri_unit_l(p).unwrap().is_iso());
            assert!(tri_unit_r(p).unwrap().is_iso());
            for q in &fam {
                let s = tensor_sym(p, q).unwrap().then(&tensor_sym(q, p).unwrap()).unwrap();
                assert!(s.is_identity());
            }
        }
        let (p, q, r) = (poly(&[2, 1]), poly(&[0, 2]), poly(&[1, 2]));
        assert!(tensor_assoc(&p, &q, &r).unwrap().is_iso());
        assert!(tri_assoc(&p, &q, &r).unwrap().is_iso());
    }

    #[test]
    fn duoidal_at_squares_is_iso() {
        let y2 = Polynomial::representable(2);
        let y = Polynomial::y();
        assert!(duoidal(&y2, &y, &y2, &y).unwrap().is_iso());
    }

    #[test]
    fn indep_examples() {
        let y = Polynomial::y();
        assert!(indep(&y, &y).unwrap().is_identity());
        assert!(indep(&Polynomial::linear(3), &poly(&[2, 0])).unwrap().is_iso());
        // A representable on the right lands in the right core, so this one is iso.
        assert!(indep(&poly(&[2, 1]), &Polynomial::representable(2)).unwrap().is_iso());
        let f = indep(&poly(&[2, 1]), &Polynomial::constant(2)).unwrap();
        assert!(f.is_cartesian());
        assert!(!f.is_iso());
    }

    #[test]
    fn mix_is_identity() {
        assert!(mix_map().is_identity());
        assert!(mix_map().is_iso());
    }

    #[test]
    fn normality() {
        let k = mor::normality_k().unwrap();
        assert!(k.agrees(&Mor::id(&Obj::y())).unwrap());
    }
}
