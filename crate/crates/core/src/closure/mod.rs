//! The closure `[p, q]` of `⊗` and the coclosure of `◁`, with their
//! evaluation maps and transposes.

pub mod mor;

use crate::error::Result;
use crate::polycore::cap::{check_cap, overflow};
use crate::polycore::{Mor, Obj, PolyMap, Polynomial};

fn base(p: &Polynomial) -> Obj {
    Obj::base(p.clone())
}

/// `[p, q]`: positions choose, for every `P`, a position `Q` and a function
/// `q[Q] → p[P]`; the directions at such a choice are `Σ_P q[Q_P]`.
pub fn close(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let choices: Vec<Vec<usize>> = p
        .cards()
        .iter()
        .map(|&c| {
            let mut v = Vec::new();
            for &e in q.cards() {
                let n = crate::polycore::cap::checked_pow(c as u128, e as u128)
                    .ok_or_else(|| overflow("closure positions"))?;
                check_cap("closure choices", n + v.len() as u128)?;
                v.extend(std::iter::repeat_n(e, n as usize));
            }
            Ok(v)
        })
        .collect::<Result<_>>()?;
    let n = choices
        .iter()
        .try_fold(1u128, |acc, v| acc.checked_mul(v.len() as u128))
        .ok_or_else(|| overflow("closure positions"))?;
    check_cap("closure positions", n)?;
    if n == 0 {
        return Ok(Polynomial::zero());
    }
    let radices: Vec<usize> = choices.iter().map(Vec::len).collect();
    let mut digits = vec![0usize; radices.len()];
    let mut cards = Vec::with_capacity(n as usize);
    let mut total = 0u128;
    loop {
        let s: usize = digits.iter().zip(&choices).map(|(&d, v)| v[d]).sum();
        total += s as u128;
        cards.push(s);
        if !mixed_odometer(&mut digits, &radices) {
            break;
        }
    }
    check_cap("closure table entries", total)?;
    Ok(Polynomial::new(cards))
}

fn mixed_odometer(digits: &mut [usize], radices: &[usize]) -> bool {
    for (d, &r) in digits.iter_mut().zip(radices).rev() {
        *d += 1;
        if *d < r {
            return true;
        }
        *d = 0;
    }
    false
}

/// The coclosure of `p` over `q`: the positions of `p`, with `q(p[P])` as
/// directions at `P`.
pub fn coclose(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let cards = p
        .cards()
        .iter()
        .map(|&c| check_cap("coclosure directions", q.eval_count(c as u128)?))
        .collect::<Result<Vec<_>>>()?;
    check_cap("coclosure table entries", cards.iter().map(|&c| c as u128).sum())?;
    Ok(Polynomial::new(cards))
}

pub fn eval_map(p: &Polynomial, b: &Polynomial) -> Result<PolyMap> {
    mor::ev(&base(p), &base(b))?.tabulate()
}

pub fn coeval_map(p: &Polynomial, q: &Polynomial) -> Result<PolyMap> {
    mor::coev(&base(p), &base(q))?.tabulate()
}

/// Transposes `f: p ⊗ r → b` to `r → [p, b]`.
pub fn curry(p: &Polynomial, r: &Polynomial, f: &PolyMap) -> Result<PolyMap> {
    let dom = Obj::tensor(&base(p), &base(r));
    let f = Mor::table(f, &dom, &base(&f.cod))?;
    mor::curry(&f)?.tabulate()
}

/// Inverse of [`curry`]: `g: r → [p, b]` to `p ⊗ r → b`.
pub fn uncurry(p: &Polynomial, b: &Polynomial, g: &PolyMap) -> Result<PolyMap> {
    let cod = Obj::close(&base(p), &base(b))?;
    let g = Mor::table(g, &base(&g.dom), &cod)?;
    mor::uncurry(&g)?.tabulate()
}

/// Transposes `g: p → r ◁ q` to `coclose(p, q) → r`.
pub fn cocurry(r: &Polynomial, q: &Polynomial, g: &PolyMap) -> Result<PolyMap> {
    let cod = Obj::sub(&base(r), &base(q))?;
    let g = Mor::table(g, &base(&g.dom), &cod)?;
    mor::cocurry(&g)?.tabulate()
}

/// Inverse of [`cocurry`]: `h: coclose(p, q) → r` to `p → r ◁ q`.
pub fn uncocurry(p: &Polynomial, q: &Polynomial, h: &PolyMap) -> Result<PolyMap> {
    let dom = Obj::coclose(&base(p), &base(q))?;
    let h = Mor::table(h, &dom, &base(&h.cod))?;
    mor::uncocurry(&h)?.tabulate()
}

/// `[f, g]` for `f: p' → p` and `g: q → q'`.
pub fn close_map(f: &PolyMap, g: &PolyMap) -> Result<PolyMap> {
    mor::close_map(&Mor::from_map(f), &Mor::from_map(g))?.tabulate()
}

/// `coclose(f, g)` for `f: p → p'` and `g: q' → q`.
pub fn coclose_map(f: &PolyMap, g: &PolyMap) -> Result<PolyMap> {
    mor::coclose_map(&Mor::from_map(f), &Mor::from_map(g))?.tabulate()
}
