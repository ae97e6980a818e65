//! Structured objects built from finite polynomials by `⊗`, `◁`, closure and
//! coclosure, with direct access to their canonically enumerated positions and
//! directions. Nothing is materialized until asked for, so composites can pass
//! through objects far larger than any table.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::cap::{check_cap, checked_pow};
use super::poly::Polynomial;
use crate::error::{PolyError, Result};

/// A position or direction of a structured object.
///
/// Base positions and directions are `Idx`. A tensor position or direction is
/// a `Pair`. A position of `a ◁ b` is `Pair(P, Seq w)` with `w` indexed by the
/// directions of `a` at `P`, and its directions are `Pair(d, e)`. A position of
/// `[p, q]` is a `Seq` over the positions of `p` of `Pair(Q, Seq f)` with
/// `f: q[Q] → p[P]`, and its directions are `Pair(P, e)`. The coclosure of `p`
/// over `q` has the positions of `p` and directions `Pair(Q, Seq f)` with
/// `f: q[Q] → p[P]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Elem {
    Idx(usize),
    Pair(Box<(Elem, Elem)>),
    Seq(Vec<Elem>),
}

impl Elem {
    pub fn pair(a: Elem, b: Elem) -> Elem {
        Elem::Pair(Box::new((a, b)))
    }

    pub fn idx(&self) -> usize {
        match self {
            Elem::Idx(i) => *i,
            other => panic!("expected an index, found {other}"),
        }
    }

    pub fn fst(&self) -> &Elem {
        match self {
            Elem::Pair(ab) => &ab.0,
            other => panic!("expected a pair, found {other}"),
        }
    }

    pub fn snd(&self) -> &Elem {
        match self {
            Elem::Pair(ab) => &ab.1,
            other => panic!("expected a pair, found {other}"),
        }
    }

    pub fn seq(&self) -> &[Elem] {
        match self {
            Elem::Seq(v) => v,
            other => panic!("expected a sequence, found {other}"),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Elem::Idx(i) => write!(f, "{i}"),
            Elem::Pair(ab) => write!(f, "({},{})", ab.0, ab.1),
            Elem::Seq(v) => {
                f.write_str("[")?;
                for (i, e) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{e}")?;
                }
                f.write_str("]")
            }
        }
    }
}

#[derive(Debug)]
pub enum Kind {
    Base(Polynomial),
    Tensor(Obj, Obj),
    Sub(Obj, Obj),
    Close(Obj, Obj),
    Coclose(Obj, Obj),
}

#[derive(Debug)]
enum Layout {
    Base,
    Tensor {
        right: Option<u128>,
    },
    Sub {
        outer_cards: Vec<usize>,
        offsets: Option<Vec<u128>>,
        inner: Option<u128>,
    },
    Close {
        outer_cards: Vec<usize>,
        inner_cards: Vec<usize>,
        factors: Option<Vec<u128>>,
    },
    Coclose {
        inner_cards: Vec<usize>,
    },
}

#[derive(Debug)]
struct Node {
    kind: Kind,
    layout: Layout,
    count: Option<u128>,
}

/// A structured object. Equality is structural.
#[derive(Clone)]
pub struct Obj(Arc<Node>);

impl PartialEq for Obj {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&self.0.kind, &other.0.kind) {
            (Kind::Base(a), Kind::Base(b)) => a == b,
            (Kind::Tensor(a, b), Kind::Tensor(c, d))
            | (Kind::Sub(a, b), Kind::Sub(c, d))
            | (Kind::Close(a, b), Kind::Close(c, d))
            | (Kind::Coclose(a, b), Kind::Coclose(c, d)) => a == c && b == d,
            _ => false,
        }
    }
}

impl Eq for Obj {}

impl Hash for Obj {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0.kind {
            Kind::Base(p) => {
                0u8.hash(state);
                p.hash(state);
            }
            Kind::Tensor(a, b) => (1u8, a, b).hash(state),
            Kind::Sub(a, b) => (2u8, a, b).hash(state),
            Kind::Close(a, b) => (3u8, a, b).hash(state),
            Kind::Coclose(a, b) => (4u8, a, b).hash(state),
        }
    }
}

impl fmt::Debug for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.kind {
            Kind::Base(p) => write!(f, "({p})"),
            Kind::Tensor(a, b) => write!(f, "({a} @ {b})"),
            Kind::Sub(a, b) => write!(f, "({a} <| {b})"),
            Kind::Close(a, b) => write!(f, "close({a}, {b})"),
            Kind::Coclose(a, b) => write!(f, "coclose({a}, {b})"),
        }
    }
}

fn pow_usize(base: usize, exp: usize) -> Option<u128> {
    checked_pow(base as u128, exp as u128)
}

fn to_usize(x: u128) -> usize {
    usize::try_from(x).expect("index fits in usize")
}

impl Obj {
    pub fn base(p: Polynomial) -> Obj {
        let count = Some(p.num_positions() as u128);
        Obj(Arc::new(Node {
            kind: Kind::Base(p),
            layout: Layout::Base,
            count,
        }))
    }

    pub fn y() -> Obj {
        Obj::base(Polynomial::y())
    }

    pub fn tensor(a: &Obj, b: &Obj) -> Obj {
        let count = a.0.count.zip(b.0.count).and_then(|(x, y)| x.checked_mul(y));
        Obj(Arc::new(Node {
            kind: Kind::Tensor(a.clone(), b.clone()),
            layout: Layout::Tensor { right: b.0.count },
            count,
        }))
    }

    /// `a ◁ b`. Needs the positions of `a` to be enumerable.
    pub fn sub(a: &Obj, b: &Obj) -> Result<Obj> {
        let outer_cards = a.position_cards("outer factor of a substitution")?;
        let inner = b.0.count;
        let offsets = inner.and_then(|m| {
            let mut acc = vec![0u128];
            for &c in &outer_cards {
                let next = acc.last().unwrap().checked_add(checked_pow(m, c as u128)?)?;
                acc.push(next);
            }
            Some(acc)
        });
        let count = offsets.as_ref().map(|o| *o.last().unwrap());
        Ok(Obj(Arc::new(Node {
            kind: Kind::Sub(a.clone(), b.clone()),
            layout: Layout::Sub {
                outer_cards,
                offsets,
                inner,
            },
            count,
        })))
    }

    /// `[p, q]`. Needs both arguments enumerable.
    pub fn close(p: &Obj, q: &Obj) -> Result<Obj> {
        let outer_cards = p.position_cards("first argument of a closure")?;
        let inner_cards = q.position_cards("second argument of a closure")?;
        let factors: Option<Vec<u128>> = outer_cards
            .iter()
            .map(|&c| {
                inner_cards
                    .iter()
                    .try_fold(0u128, |s, &e| s.checked_add(pow_usize(c, e)?))
            })
            .collect();
        let count = factors
            .as_ref()
            .and_then(|f| f.iter().try_fold(1u128, |acc, &s| acc.checked_mul(s)));
        Ok(Obj(Arc::new(Node {
            kind: Kind::Close(p.clone(), q.clone()),
            layout: Layout::Close {
                outer_cards,
                inner_cards,
                factors,
            },
            count,
        })))
    }

    /// The coclosure of `p` over `q`. Needs `q` enumerable.
    pub fn coclose(p: &Obj, q: &Obj) -> Result<Obj> {
        let inner_cards = q.position_cards("second argument of a coclosure")?;
        Ok(Obj(Arc::new(Node {
            kind: Kind::Coclose(p.clone(), q.clone()),
            layout: Layout::Coclose { inner_cards },
            count: p.0.count,
        })))
    }

    pub fn kind(&self) -> &Kind {
        &self.0.kind
    }

    pub fn as_base(&self) -> Option<&Polynomial> {
        match &self.0.kind {
            Kind::Base(p) => Some(p),
            _ => None,
        }
    }

    /// Number of positions, `None` if it overflows `u128`.
    pub fn count(&self) -> Option<u128> {
        self.0.count
    }

    /// Number of positions as an enumerable size, subject to the cap.
    pub fn enumerable_count(&self, what: &str) -> Result<usize> {
        match self.0.count {
            Some(n) => check_cap(what, n),
            None => Err(super::cap::overflow(what)),
        }
    }

    fn position_cards(&self, what: &str) -> Result<Vec<usize>> {
        if let Kind::Base(p) = &self.0.kind {
            return Ok(p.cards().to_vec());
        }
        let n = self.enumerable_count(what)?;
        (0..n)
            .map(|k| {
                let c = self.card(&self.pos_at(k as u128));
                check_cap(what, c)
            })
            .collect()
    }

    /// Number of directions at a position.
    pub fn card(&self, pos: &Elem) -> u128 {
        match (&self.0.kind, &self.0.layout) {
            (Kind::Base(p), _) => p.card(pos.idx()) as u128,
            (Kind::Tensor(a, b), _) => a.card(pos.fst()) * b.card(pos.snd()),
            (Kind::Sub(_, b), _) => pos.snd().seq().iter().map(|q| b.card(q)).sum(),
            (Kind::Close(_, q), _) => pos.seq().iter().map(|pair| q.card(pair.fst())).sum(),
            (Kind::Coclose(p, _), Layout::Coclose { inner_cards }) => {
                let c = to_usize(p.card(pos));
                inner_cards
                    .iter()
                    .map(|&e| pow_usize(c, e).expect("direction count fits"))
                    .sum()
            }
            _ => unreachable!(),
        }
    }

    /// The `k`-th position.
    pub fn pos_at(&self, k: u128) -> Elem {
        match (&self.0.kind, &self.0.layout) {
            (Kind::Base(_), _) => Elem::Idx(to_usize(k)),
            (Kind::Tensor(a, b), Layout::Tensor { right }) => {
                let m = right.expect("enumerable tensor");
                Elem::pair(a.pos_at(k / m), b.pos_at(k % m))
            }
            (
                Kind::Sub(a, b),
                Layout::Sub {
                    outer_cards,
                    offsets,
                    inner,
                },
            ) => {
                let offsets = offsets.as_ref().expect("enumerable substitution");
                let i = offsets.partition_point(|&o| o <= k) - 1;
                let m = inner.unwrap();
                let mut rem = k - offsets[i];
                let mut w = vec![Elem::Idx(0); outer_cards[i]];
                for slot in w.iter_mut().rev() {
                    *slot = b.pos_at(rem % m);
                    rem /= m;
                }
                Elem::pair(a.pos_at(i as u128), Elem::Seq(w))
            }
            (
                Kind::Close(p, q),
                Layout::Close {
                    outer_cards,
                    inner_cards,
                    factors,
                },
            ) => {
                let factors = factors.as_ref().expect("enumerable closure");
                let mut digits = vec![0u128; factors.len()];
                let mut rem = k;
                for (i, &s) in factors.iter().enumerate().rev() {
                    digits[i] = rem % s;
                    rem /= s;
                }
                let out = digits
                    .iter()
                    .enumerate()
                    .map(|(i, &d)| {
                        let (j, f) = decode_choice(outer_cards[i], inner_cards, d);
                        let big_p = p.pos_at(i as u128);
                        let f = f.into_iter().map(|x| p.dir_at(&big_p, x)).collect();
                        Elem::pair(q.pos_at(j as u128), Elem::Seq(f))
                    })
                    .collect();
                Elem::Seq(out)
            }
            (Kind::Coclose(p, _), _) => p.pos_at(k),
            _ => unreachable!(),
        }
    }

    /// Index of a position, inverse to [`Obj::pos_at`].
    pub fn pos_index(&self, pos: &Elem) -> u128 {
        match (&self.0.kind, &self.0.layout) {
            (Kind::Base(_), _) => pos.idx() as u128,
            (Kind::Tensor(a, b), Layout::Tensor { right }) => {
                a.pos_index(pos.fst()) * right.unwrap() + b.pos_index(pos.snd())
            }
            (Kind::Sub(a, b), Layout::Sub { offsets, inner, .. }) => {
                let offsets = offsets.as_ref().expect("enumerable substitution");
                let m = inner.unwrap();
                let i = to_usize(a.pos_index(pos.fst()));
                let local = pos.snd().seq().iter().fold(0u128, |acc, q| acc * m + b.pos_index(q));
                offsets[i] + local
            }
            (
                Kind::Close(p, q),
                Layout::Close {
                    outer_cards,
                    inner_cards,
                    factors,
                },
            ) => {
                let factors = factors.as_ref().expect("enumerable closure");
                pos.seq().iter().enumerate().fold(0u128, |acc, (i, pair)| {
                    let big_p = p.pos_at(i as u128);
                    let j = to_usize(q.pos_index(pair.fst()));
                    let f: Vec<usize> = pair.snd().seq().iter().map(|d| p.dir_index(&big_p, d)).collect();
                    acc * factors[i] + encode_choice(outer_cards[i], inner_cards, j, &f)
                })
            }
            (Kind::Coclose(p, _), _) => p.pos_index(pos),
            _ => unreachable!(),
        }
    }

    /// The `k`-th direction at `pos`.
    pub fn dir_at(&self, pos: &Elem, k: usize) -> Elem {
        match (&self.0.kind, &self.0.layout) {
            (Kind::Base(_), _) => Elem::Idx(k),
            (Kind::Tensor(a, b), _) => {
                let m = to_usize(b.card(pos.snd()));
                Elem::pair(a.dir_at(pos.fst(), k / m), b.dir_at(pos.snd(), k % m))
            }
            (Kind::Sub(a, b), _) => {
                let mut rem = k;
                for (j, q) in pos.snd().seq().iter().enumerate() {
                    let s = to_usize(b.card(q));
                    if rem < s {
                        return Elem::pair(a.dir_at(pos.fst(), j), b.dir_at(q, rem));
                    }
                    rem -= s;
                }
                panic!("direction index out of range")
            }
            (Kind::Close(p, q), _) => {
                let mut rem = k;
                for (i, pair) in pos.seq().iter().enumerate() {
                    let s = to_usize(q.card(pair.fst()));
                    if rem < s {
                        return Elem::pair(p.pos_at(i as u128), q.dir_at(pair.fst(), rem));
                    }
                    rem -= s;
                }
                panic!("direction index out of range")
            }
            (Kind::Coclose(p, q), Layout::Coclose { inner_cards }) => {
                let c = to_usize(p.card(pos));
                let (j, f) = decode_choice(c, inner_cards, k as u128);
                let f = f.into_iter().map(|x| p.dir_at(pos, x)).collect();
                Elem::pair(q.pos_at(j as u128), Elem::Seq(f))
            }
            _ => unreachable!(),
        }
    }

    /// Index of a direction at `pos`, inverse to [`Obj::dir_at`].
    pub fn dir_index(&self, pos: &Elem, dir: &Elem) -> usize {
        match (&self.0.kind, &self.0.layout) {
            (Kind::Base(_), _) => dir.idx(),
            (Kind::Tensor(a, b), _) => {
                let m = to_usize(b.card(pos.snd()));
                a.dir_index(pos.fst(), dir.fst()) * m + b.dir_index(pos.snd(), dir.snd())
            }
            (Kind::Sub(a, b), _) => {
                let w = pos.snd().seq();
                let j = a.dir_index(pos.fst(), dir.fst());
                let before: u128 = w[..j].iter().map(|q| b.card(q)).sum();
                to_usize(before) + b.dir_index(&w[j], dir.snd())
            }
            (Kind::Close(p, q), _) => {
                let phi = pos.seq();
                let i = to_usize(p.pos_index(dir.fst()));
                let before: u128 = phi[..i].iter().map(|pair| q.card(pair.fst())).sum();
                to_usize(before) + q.dir_index(phi[i].fst(), dir.snd())
            }
            (Kind::Coclose(p, q), Layout::Coclose { inner_cards }) => {
                let c = to_usize(p.card(pos));
                let j = to_usize(q.pos_index(dir.fst()));
                let f: Vec<usize> = dir.snd().seq().iter().map(|d| p.dir_index(pos, d)).collect();
                to_usize(encode_choice(c, inner_cards, j, &f))
            }
            _ => unreachable!(),
        }
    }

    /// All directions at a position, in order.
    pub fn dirs(&self, pos: &Elem) -> Vec<Elem> {
        let n = to_usize(self.card(pos));
        (0..n).map(|k| self.dir_at(pos, k)).collect()
    }

    /// The canonical polynomial with the same enumerated positions and directions.
    pub fn flatten(&self) -> Result<Polynomial> {
        if let Kind::Base(p) = &self.0.kind {
            return Ok(p.clone());
        }
        let n = self.enumerable_count("positions")?;
        let mut cards = Vec::with_capacity(n);
        let mut total = 0u128;
        for k in 0..n {
            let c = self.card(&self.pos_at(k as u128));
            total += c;
            check_cap("table entries", total)?;
            cards.push(c as usize);
        }
        Ok(Polynomial::new(cards))
    }

    /// Errors unless this object flattens to `p`.
    pub fn expect_flat(&self, p: &Polynomial, role: &str) -> Result<()> {
        let flat = self.flatten()?;
        if &flat != p {
            return Err(PolyError::DomainMismatch(format!(
                "{role}: {self} is {flat}, expected {p}"
            )));
        }
        Ok(())
    }
}

/// Decodes an element of `Σ_j c^{e_j}` into the block `j` and the digits of a
/// function `e_j → c`, first digit most significant.
fn decode_choice(c: usize, exps: &[usize], mut k: u128) -> (usize, Vec<usize>) {
    for (j, &e) in exps.iter().enumerate() {
        let block = pow_usize(c, e).expect("block fits");
        if k < block {
            return (j, super::poly::decode_digits(k, c as u128, e));
        }
        k -= block;
    }
    panic!("choice index out of range")
}

fn encode_choice(c: usize, exps: &[usize], j: usize, f: &[usize]) -> u128 {
    let before: u128 = exps[..j].iter().map(|&e| pow_usize(c, e).expect("block fits")).sum();
    before + super::poly::encode_digits(f, c as u128)
}
