use std::fmt;

use serde::{Deserialize, Serialize};

use super::poly::Polynomial;
use crate::error::{PolyError, Result};

/// A natural transformation between finite polynomials: a forward table on
/// positions and, at each domain position `P`, a backward table from the
/// directions of `cod` at the image of `P` to the directions of `dom` at `P`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyMap {
    pub dom: Polynomial,
    pub cod: Polynomial,
    pub on_positions: Vec<usize>,
    pub on_directions: Vec<Vec<usize>>,
}

impl PolyMap {
    /// Builds a map after checking that every table is total and lands in range.
    pub fn new(
        dom: Polynomial,
        cod: Polynomial,
        on_positions: Vec<usize>,
        on_directions: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let f = PolyMap {
            dom,
            cod,
            on_positions,
            on_directions,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.dom.num_positions();
        if self.on_positions.len() != n || self.on_directions.len() != n {
            return Err(PolyError::InvalidMap(format!("expected tables for {n} positions")));
        }
        for p in 0..n {
            let q = self.on_positions[p];
            if q >= self.cod.num_positions() {
                return Err(PolyError::InvalidMap(format!("position {p} maps to {q}, out of range")));
            }
            let back = &self.on_directions[p];
            if back.len() != self.cod.card(q) {
                return Err(PolyError::InvalidMap(format!(
                    "backward table at {p} has {} entries, expected {}",
                    back.len(),
                    self.cod.card(q)
                )));
            }
            if let Some(&d) = back.iter().find(|&&d| d >= self.dom.card(p)) {
                return Err(PolyError::InvalidMap(format!(
                    "backward table at {p} hits direction {d}, out of range"
                )));
            }
        }
        Ok(())
    }

    pub fn identity(p: &Polynomial) -> Self {
        PolyMap {
            dom: p.clone(),
            cod: p.clone(),
            on_positions: (0..p.num_positions()).collect(),
            on_directions: p.cards().iter().map(|&c| (0..c).collect()).collect(),
        }
    }

    /// Diagrammatic composite `self ; g`.
    pub fn then(&self, g: &PolyMap) -> Result<PolyMap> {
        if self.cod != g.dom {
            return Err(PolyError::DomainMismatch(format!(
                "cannot compose: codomain {} differs from domain {}",
                self.cod, g.dom
            )));
        }
        let on_positions = self.on_positions.iter().map(|&q| g.on_positions[q]).collect();
        let on_directions = (0..self.dom.num_positions())
            .map(|p| {
                let q = self.on_positions[p];
                g.on_directions[q].iter().map(|&e| self.on_directions[p][e]).collect()
            })
            .collect();
        Ok(PolyMap {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            on_positions,
            on_directions,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && *self == PolyMap::identity(&self.dom)
    }

    /// Every backward table is a bijection.
    pub fn is_cartesian(&self) -> bool {
        self.on_directions
            .iter()
            .enumerate()
            .all(|(p, back)| is_bijection(back, self.dom.card(p)))
    }

    pub fn is_iso(&self) -> bool {
        is_bijection(&self.on_positions, self.cod.num_positions()) && self.is_cartesian()
    }

    pub fn inverse(&self) -> Option<PolyMap> {
        if !self.is_iso() {
            return None;
        }
        let m = self.cod.num_positions();
        let mut on_positions = vec![0; m];
        let mut on_directions = vec![Vec::new(); m];
        for (p, &q) in self.on_positions.iter().enumerate() {
            on_positions[q] = p;
            let back = &self.on_directions[p];
            let mut inv = vec![0; back.len()];
            for (e, &d) in back.iter().enumerate() {
                inv[d] = e;
            }
            on_directions[q] = inv;
        }
        Some(PolyMap {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            on_positions,
            on_directions,
        })
    }
}

fn is_bijection(table: &[usize], target: usize) -> bool {
    if table.len() != target {
        return false;
    }
    let mut seen = vec![false; target];
    table
        .iter()
        .all(|&x| x < target && !std::mem::replace(&mut seen[x], true))
}

/// Tables in the form `P ↦ Q [e ↦ d, ..]`, one position per line.
impl fmt::Display for PolyMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} -> {}", self.dom, self.cod)?;
        for (p, &q) in self.on_positions.iter().enumerate() {
            let back: Vec<String> = self.on_directions[p]
                .iter()
                .enumerate()
                .map(|(e, d)| format!("{e}>{d}"))
                .collect();
            writeln!(f, "  {p} -> {q} [{}]", back.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap2() -> PolyMap {
        let y2 = Polynomial::representable(2);
        PolyMap::new(y2.clone(), y2, vec![0], vec![vec![1, 0]]).unwrap()
    }

    #[test]
    fn identity_tables() {
        let p = Polynomial::new(vec![3, 2]);
        let id = PolyMap::identity(&p);
        assert_eq!(id.on_positions, vec![0, 1]);
        assert_eq!(id.on_directions, vec![vec![0, 1, 2], vec![0, 1]]);
        assert!(id.is_identity());
    }

    #[test]
    fn distinct_maps_differ() {
        let y2 = Polynomial::representable(2);
        assert_ne!(PolyMap::identity(&y2), swap2());
        assert!(swap2().then(&swap2()).unwrap().is_identity());
    }

    #[test]
    fn cartesian_and_iso() {
        let to_y = PolyMap::new(Polynomial::representable(2), Polynomial::y(), vec![0], vec![vec![0]]).unwrap();
        assert!(!to_y.is_cartesian());
        let fold = PolyMap::new(
            Polynomial::linear(2),
            Polynomial::y(),
            vec![0, 0],
            vec![vec![0], vec![0]],
        )
        .unwrap();
        assert!(fold.is_cartesian());
        assert!(!fold.is_iso());
        assert_eq!(swap2().inverse().unwrap(), swap2());
    }

    #[test]
    fn compose_rejects_mismatch() {
        let f = PolyMap::identity(&Polynomial::y());
        let g = PolyMap::identity(&Polynomial::linear(2));
        assert!(matches!(f.then(&g), Err(PolyError::DomainMismatch(_))));
    }

    #[test]
    fn validate_rejects_bad_tables() {
        let y2 = Polynomial::representable(2);
        assert!(PolyMap::new(y2.clone(), y2.clone(), vec![0], vec![vec![0, 2]]).is_err());
        assert!(PolyMap::new(y2.clone(), y2.clone(), vec![1], vec![vec![0, 1]]).is_err());
        assert!(PolyMap::new(y2.clone(), y2, vec![0], vec![vec![0]]).is_err());
    }
}
