//! Lazily evaluated maps between structured objects.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::cap::check_cap;
use super::map::PolyMap;
use super::obj::{Elem, Obj};
use crate::error::{PolyError, Result};

type FwdFn = dyn Fn(&Elem) -> Elem + Send + Sync;
type BwdFn = dyn Fn(&Elem, &Elem) -> Elem + Send + Sync;
type LensFn = dyn Fn(&Elem) -> (Elem, Pullback) + Send + Sync;

/// Backward action at one fixed position.
pub type Pullback = Box<dyn Fn(&Elem) -> Elem>;

struct Inner {
    dom: Obj,
    cod: Obj,
    fwd: Box<FwdFn>,
    bwd: Box<BwdFn>,
    lens: Option<Box<LensFn>>,
}

/// A map of polynomials between structured objects, given by its action on
/// positions and, at each position, on directions of the codomain.
#[derive(Clone)]
pub struct Mor(Arc<Inner>);

impl fmt::Debug for Mor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mor({} -> {})", self.dom(), self.cod())
    }
}

/// The first coordinate at which two maps disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub position_index: String,
    pub position_path: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction_path: Option<String>,
    pub lhs: String,
    pub rhs: String,
}

/// Sizes visited by a pointwise comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareStats {
    pub positions: u64,
    pub directions: u64,
}

impl std::ops::AddAssign for CompareStats {
    fn add_assign(&mut self, rhs: Self) {
        self.positions += rhs.positions;
        self.directions += rhs.directions;
    }
}

impl Mor {
    pub fn new<F, B>(dom: Obj, cod: Obj, fwd: F, bwd: B) -> Mor
    where
        F: Fn(&Elem) -> Elem + Send + Sync + 'static,
        B: Fn(&Elem, &Elem) -> Elem + Send + Sync + 'static,
    {
        Mor(Arc::new(Inner {
            dom,
            cod,
            fwd: Box::new(fwd),
            bwd: Box::new(bwd),
            lens: None,
        }))
    }

    /// Like [`Mor::new`], with a per-position evaluator that computes the
    /// forward image once and shares it across every direction.
    fn with_lens<F, B, L>(dom: Obj, cod: Obj, fwd: F, bwd: B, lens: L) -> Mor
    where
        F: Fn(&Elem) -> Elem + Send + Sync + 'static,
        B: Fn(&Elem, &Elem) -> Elem + Send + Sync + 'static,
        L: Fn(&Elem) -> (Elem, Pullback) + Send + Sync + 'static,
    {
        Mor(Arc::new(Inner {
            dom,
            cod,
            fwd: Box::new(fwd),
            bwd: Box::new(bwd),
            lens: Some(Box::new(lens)),
        }))
    }

    pub fn dom(&self) -> &Obj {
        &self.0.dom
    }

    pub fn cod(&self) -> &Obj {
        &self.0.cod
    }

    pub fn fwd(&self, pos: &Elem) -> Elem {
        (self.0.fwd)(pos)
    }

    /// Pulls a direction of the codomain at `fwd(pos)` back to `pos`.
    pub fn bwd(&self, pos: &Elem, dir: &Elem) -> Elem {
        (self.0.bwd)(pos, dir)
    }

    /// The forward image of `pos` together with the backward action there.
    pub fn lens(&self, pos: &Elem) -> (Elem, Pullback) {
        match &self.0.lens {
            Some(l) => l(pos),
            None => {
                let (m, p) = (self.clone(), pos.clone());
                (self.fwd(pos), Box::new(move |d| m.bwd(&p, d)))
            }
        }
    }

    pub fn id(o: &Obj) -> Mor {
        Mor::new(o.clone(), o.clone(), |p| p.clone(), |_, d| d.clone())
    }

    /// Wraps a table whose endpoints are the flattenings of `dom` and `cod`.
    pub fn table(map: &PolyMap, dom: &Obj, cod: &Obj) -> Result<Mor> {
        dom.expect_flat(&map.dom, "table domain")?;
        cod.expect_flat(&map.cod, "table codomain")?;
        let map = Arc::new(map.clone());
        let (d, c) = (dom.clone(), cod.clone());
        let (m2, m3) = (map.clone(), map.clone());
        let (d2, c2) = (dom.clone(), cod.clone());
        let (d3, c3) = (dom.clone(), cod.clone());
        Ok(Mor::with_lens(
            dom.clone(),
            cod.clone(),
            move |p| c.pos_at(map.on_positions[d.pos_index(p) as usize] as u128),
            move |p, e| {
                let i = d2.pos_index(p) as usize;
                let q = c2.pos_at(m2.on_positions[i] as u128);
                d2.dir_at(p, m2.on_directions[i][c2.dir_index(&q, e)])
            },
            move |p| {
                let i = d3.pos_index(p) as usize;
                let q = c3.pos_at(m3.on_positions[i] as u128);
                let (m, dom, cod, at, pos) = (m3.clone(), d3.clone(), c3.clone(), q.clone(), p.clone());
                let back = move |e: &Elem| dom.dir_at(&pos, m.on_directions[i][cod.dir_index(&at, e)]);
                (q, Box::new(back))
            },
        ))
    }

    /// A table between base objects.
    pub fn from_map(map: &PolyMap) -> Mor {
        Mor::table(map, &Obj::base(map.dom.clone()), &Obj::base(map.cod.clone())).expect("base endpoints match")
    }

    /// The canonical re-indexing of a structured object onto its flattening.
    pub fn flatten(o: &Obj) -> Result<Mor> {
        let flat = Obj::base(o.flatten()?);
        let (a, b) = (o.clone(), o.clone());
        Ok(Mor::new(
            o.clone(),
            flat,
            move |p| Elem::Idx(a.pos_index(p) as usize),
            move |p, e| b.dir_at(p, e.idx()),
        ))
    }

    /// Inverse of [`Mor::flatten`].
    pub fn unflatten(o: &Obj) -> Result<Mor> {
        let flat = Obj::base(o.flatten()?);
        let (a, b) = (o.clone(), o.clone());
        Ok(Mor::new(
            flat,
            o.clone(),
            move |p| a.pos_at(p.idx() as u128),
            move |p, e| {
                let pos = b.pos_at(p.idx() as u128);
                Elem::Idx(b.dir_index(&pos, e))
            },
        ))
    }

    /// Diagrammatic composite `self ; g`.
    pub fn then(&self, g: &Mor) -> Result<Mor> {
        if self.cod() != g.dom() {
            return Err(PolyError::DomainMismatch(format!(
                "cannot compose: {} is not {}",
                self.cod(),
                g.dom()
            )));
        }
        let (f1, g1) = (self.clone(), g.clone());
        let (f2, g2) = (self.clone(), g.clone());
        let (f3, g3) = (self.clone(), g.clone());
        Ok(Mor::with_lens(
            self.dom().clone(),
            g.cod().clone(),
            move |p| g1.fwd(&f1.fwd(p)),
            move |p, d| f2.bwd(p, &g2.bwd(&f2.fwd(p), d)),
            move |p| {
                let (q, back_f) = f3.lens(p);
                let (r, back_g) = g3.lens(&q);
                (r, Box::new(move |d| back_f(&back_g(d))))
            },
        ))
    }

    /// Composes a whole chain left to right.
    pub fn chain(parts: &[Mor]) -> Result<Mor> {
        let (first, rest) = parts
            .split_first()
            .ok_or_else(|| PolyError::DomainMismatch("empty chain".into()))?;
        rest.iter().try_fold(first.clone(), |acc, m| acc.then(m))
    }

    pub fn tensor(f: &Mor, g: &Mor) -> Mor {
        let (f1, g1) = (f.clone(), g.clone());
        let (f2, g2) = (f.clone(), g.clone());
        let (f3, g3) = (f.clone(), g.clone());
        Mor::with_lens(
            Obj::tensor(f.dom(), g.dom()),
            Obj::tensor(f.cod(), g.cod()),
            move |p| Elem::pair(f1.fwd(p.fst()), g1.fwd(p.snd())),
            move |p, d| Elem::pair(f2.bwd(p.fst(), d.fst()), g2.bwd(p.snd(), d.snd())),
            move |p| {
                let (a, back_f) = f3.lens(p.fst());
                let (b, back_g) = g3.lens(p.snd());
                let back = move |d: &Elem| Elem::pair(back_f(d.fst()), back_g(d.snd()));
                (Elem::pair(a, b), Box::new(back))
            },
        )
    }

    pub fn sub(f: &Mor, g: &Mor) -> Result<Mor> {
        let dom = Obj::sub(f.dom(), g.dom())?;
        let cod = Obj::sub(f.cod(), g.cod())?;
        let (f1, g1) = (f.clone(), g.clone());
        let (f2, g2) = (f.clone(), g.clone());
        let (f3, g3) = (f.clone(), g.clone());
        Ok(Mor::with_lens(
            dom,
            cod,
            move |p| {
                let (big_p, w) = (p.fst(), p.snd().seq());
                let image = f1.fwd(big_p);
                let w2 = f1
                    .cod()
                    .dirs(&image)
                    .iter()
                    .map(|d2| {
                        let d = f1.bwd(big_p, d2);
                        g1.fwd(&w[f1.dom().dir_index(big_p, &d)])
                    })
                    .collect();
                Elem::pair(image, Elem::Seq(w2))
            },
            move |p, dir| {
                let (big_p, w) = (p.fst(), p.snd().seq());
                let d = f2.bwd(big_p, dir.fst());
                let q = &w[f2.dom().dir_index(big_p, &d)];
                Elem::pair(d, g2.bwd(q, dir.snd()))
            },
            move |p| {
                let (big_p, w) = (p.fst(), p.snd().seq());
                let (image, back_f) = f3.lens(big_p);
                let mut inner = Vec::new();
                let mut backs = Vec::new();
                for d2 in f3.cod().dirs(&image) {
                    let d = back_f(&d2);
                    let (q, back_g) = g3.lens(&w[f3.dom().dir_index(big_p, &d)]);
                    inner.push(q);
                    backs.push((d, back_g));
                }
                let (cod_f, at) = (f3.cod().clone(), image.clone());
                let back = move |dir: &Elem| {
                    let (d, back_g) = &backs[cod_f.dir_index(&at, dir.fst())];
                    Elem::pair(d.clone(), back_g(dir.snd()))
                };
                (Elem::pair(image, Elem::Seq(inner)), Box::new(back))
            },
        ))
    }

    /// Materializes the map as a table between flattened endpoints.
    pub fn tabulate(&self) -> Result<PolyMap> {
        let dom = self.dom().flatten()?;
        let cod = self.cod().flatten()?;
        let mut on_positions = Vec::with_capacity(dom.num_positions());
        let mut on_directions = Vec::with_capacity(dom.num_positions());
        for k in 0..dom.num_positions() {
            let p = self.dom().pos_at(k as u128);
            let (q, pull) = self.lens(&p);
            let qi = self.cod().pos_index(&q) as usize;
            on_positions.push(qi);
            let back = (0..cod.card(qi))
                .map(|e| {
                    let d = pull(&self.cod().dir_at(&q, e));
                    self.dom().dir_index(&p, &d)
                })
                .collect();
            on_directions.push(back);
        }
        Ok(PolyMap {
            dom,
            cod,
            on_positions,
            on_directions,
        })
    }

    /// Pointwise comparison over every position and direction.
    pub fn compare(&self, g: &Mor) -> Result<(Option<Counterexample>, CompareStats)> {
        if self.dom() != g.dom() || self.cod() != g.cod() {
            return Err(PolyError::DomainMismatch(format!(
                "cannot compare {} -> {} with {} -> {}",
                self.dom(),
                self.cod(),
                g.dom(),
                g.cod()
            )));
        }
        let n = self.dom().enumerable_count("positions to compare")?;
        let mut stats = CompareStats::default();
        for k in 0..n {
            let p = self.dom().pos_at(k as u128);
            stats.positions += 1;
            let ((a, pull_a), (b, pull_b)) = (self.lens(&p), g.lens(&p));
            if a != b {
                return Ok((
                    Some(Counterexample {
                        position_index: k.to_string(),
                        position_path: p.to_string(),
                        direction_index: None,
                        direction_path: None,
                        lhs: a.to_string(),
                        rhs: b.to_string(),
                    }),
                    stats,
                ));
            }
            let c = check_cap("directions to compare", self.cod().card(&a))?;
            for e in 0..c {
                stats.directions += 1;
                let dir = self.cod().dir_at(&a, e);
                let (x, y) = (pull_a(&dir), pull_b(&dir));
                if x != y {
                    return Ok((
                        Some(Counterexample {
                            position_index: k.to_string(),
                            position_path: p.to_string(),
                            direction_index: Some(e),
                            direction_path: Some(dir.to_string()),
                            lhs: x.to_string(),
                            rhs: y.to_string(),
                        }),
                        stats,
                    ));
                }
            }
        }
        Ok((None, stats))
    }

    pub fn agrees(&self, g: &Mor) -> Result<bool> {
        Ok(self.compare(g)?.0.is_none())
    }

    /// The forward action only, compared on every position.
    pub fn agrees_forward(&self, g: &Mor) -> Result<bool> {
        let n = self.dom().enumerable_count("positions to compare")?;
        Ok((0..n).all(|k| {
            let p = self.dom().pos_at(k as u128);
            self.fwd(&p) == g.fwd(&p)
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::hom::enumerate_homs;
    use crate::polycore::poly::Polynomial;

    #[test]
    fn table_roundtrip_through_tabulate() {
        let p = Polynomial::new(vec![2, 1]);
        let q = Polynomial::new(vec![1, 2]);
        for f in enumerate_homs(&p, &q).unwrap() {
            assert_eq!(Mor::from_map(&f).tabulate().unwrap(), f);
        }
    }

    #[test]
    fn lazy_composition_matches_tables() {
        let p = Polynomial::new(vec![2, 1]);
        let q = Polynomial::new(vec![1, 2]);
        let r = Polynomial::new(vec![2]);
        let fs = enumerate_homs(&p, &q).unwrap();
        let gs = enumerate_homs(&q, &r).unwrap();
        for f in &fs {
            for g in &gs {
                let lazy = Mor::from_map(f).then(&Mor::from_map(g)).unwrap();
                assert_eq!(lazy.tabulate().unwrap(), f.then(g).unwrap());
            }
        }
    }

    #[test]
    fn flatten_is_inverse_to_unflatten() {
        let a = Obj::base(Polynomial::new(vec![2, 0]));
        let b = Obj::base(Polynomial::new(vec![1, 1]));
        let s = Obj::sub(&a, &b).unwrap();
        let round = Mor::flatten(&s).unwrap().then(&Mor::unflatten(&s).unwrap()).unwrap();
        assert!(round.agrees(&Mor::id(&s)).unwrap());
    }

    #[test]
    fn compare_reports_first_direction() {
        let y2 = Polynomial::representable(2);
        let swap = PolyMap::new(y2.clone(), y2.clone(), vec![0], vec![vec![1, 0]]).unwrap();
        let (cex, _) = Mor::from_map(&swap)
            .compare(&Mor::from_map(&PolyMap::identity(&y2)))
            .unwrap();
        let cex = cex.unwrap();
        assert_eq!(cex.direction_index, Some(0));
        assert_eq!((cex.lhs.as_str(), cex.rhs.as_str()), ("1", "0"));
    }
}
