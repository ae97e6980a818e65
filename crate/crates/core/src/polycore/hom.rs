use super::cap::{add_or, check_cap, mul_or, overflow, pow_or};
use super::map::PolyMap;
use super::poly::Polynomial;
use crate::error::Result;
use rand::Rng;

/// `Π_P Σ_Q p[P]^{q[Q]}`, the number of maps `p → q`.
pub fn hom_count(p: &Polynomial, q: &Polynomial) -> Result<u128> {
    p.cards().iter().try_fold(1u128, |acc, &c| {
        let s = q.cards().iter().try_fold(0u128, |s, &e| {
            add_or("hom count", s, pow_or("hom count", c as u128, e as u128)?)
        })?;
        mul_or("hom count", acc, s)
    })
}

/// Every map `p → q`, ordered lexicographically by forward table and then by
/// the backward tables taken position by position.
pub fn enumerate_homs(p: &Polynomial, q: &Polynomial) -> Result<Vec<PolyMap>> {
    check_cap("hom set", hom_count(p, q)?)?;
    Ok(HomIter::new(p, q).collect())
}

/// A uniformly chosen forward table among viable ones position by position,
/// with uniform backward tables; `None` when there is no map `p → q`.
pub fn random_hom<R: Rng + ?Sized>(p: &Polynomial, q: &Polynomial, rng: &mut R) -> Option<PolyMap> {
    let mut on_positions = Vec::with_capacity(p.num_positions());
    let mut on_directions = Vec::with_capacity(p.num_positions());
    for &c in p.cards() {
        let viable: Vec<usize> = (0..q.num_positions()).filter(|&j| c > 0 || q.card(j) == 0).collect();
        if viable.is_empty() {
            return None;
        }
        let j = viable[rng.gen_range(0..viable.len())];
        on_positions.push(j);
        on_directions.push((0..q.card(j)).map(|_| rng.gen_range(0..c)).collect());
    }
    Some(PolyMap {
        dom: p.clone(),
        cod: q.clone(),
        on_positions,
        on_directions,
    })
}

/// Lazy form of [`enumerate_homs`], not subject to the cap.
pub struct HomIter {
    dom: Polynomial,
    cod: Polynomial,
    fwd: Vec<usize>,
    back: Vec<Vec<usize>>,
    done: bool,
}

impl HomIter {
    pub fn new(p: &Polynomial, q: &Polynomial) -> Self {
        let mut it = HomIter {
            dom: p.clone(),
            cod: q.clone(),
            fwd: vec![0; p.num_positions()],
            back: Vec::new(),
            done: false,
        };
        let starved = p.num_positions() > 0 && q.num_positions() == 0;
        if starved || (!it.forward_viable() && !it.advance_forward()) {
            it.done = true;
        }
        if !it.done {
            it.reset_back();
        }
        it
    }

    fn forward_viable(&self) -> bool {
        self.fwd
            .iter()
            .enumerate()
            .all(|(p, &q)| self.dom.card(p) > 0 || self.cod.card(q) == 0)
    }

    fn advance_forward(&mut self) -> bool {
        let m = self.cod.num_positions();
        loop {
            let mut i = self.fwd.len();
            loop {
                if i == 0 {
                    return false;
                }
                i -= 1;
                self.fwd[i] += 1;
                if self.fwd[i] < m {
                    break;
                }
                self.fwd[i] = 0;
            }
            if self.forward_viable() {
                return true;
            }
        }
    }

    fn reset_back(&mut self) {
        self.back = self.fwd.iter().map(|&q| vec![0; self.cod.card(q)]).collect();
    }

    fn advance_back(&mut self) -> bool {
        for p in (0..self.back.len()).rev() {
            let base = self.dom.card(p);
            for e in (0..self.back[p].len()).rev() {
                self.back[p][e] += 1;
                if self.back[p][e] < base {
                    return true;
                }
                self.back[p][e] = 0;
            }
        }
        false
    }
}

impl Iterator for HomIter {
    type Item = PolyMap;

    fn next(&mut self) -> Option<PolyMap> {
        if self.done {
            return None;
        }
        let out = PolyMap {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            on_positions: self.fwd.clone(),
            on_directions: self.back.clone(),
        };
        if !self.advance_back() {
            if self.advance_forward() {
                self.reset_back();
            } else {
                self.done = true;
            }
        }
        Some(out)
    }
}

/// [`polynomials_within`], refused when the family would exceed the size cap.
pub fn checked_family(max_pos: usize, max_dir: usize) -> Result<Vec<Polynomial>> {
    let base = max_dir as u128 + 1;
    let mut size = 1u128;
    let mut layer = 1u128;
    for _ in 0..max_pos {
        layer = layer.checked_mul(base).ok_or_else(|| overflow("family members"))?;
        size = size.checked_add(layer).ok_or_else(|| overflow("family members"))?;
        check_cap("family members", size)?;
    }
    Ok(polynomials_within(max_pos, max_dir))
}

/// All polynomials with at most `max_pos` positions, each with at most
/// `max_dir` directions, by number of positions and then lexicographically.
pub fn polynomials_within(max_pos: usize, max_dir: usize) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::zero()];
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_pos {
        let mut next = Vec::new();
        for cards in &layer {
            for c in 0..=max_dir {
                let mut v = cards.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Polynomial::new));
        layer = next;
    }
    out
}
