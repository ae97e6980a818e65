//! Left and right cores: shape tests, bounded `indep` probing, and the
//! opposing-cores functor `y^A ↦ Ay`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{PolyError, Result};
use crate::law::LawReport;
use crate::monoidal;
use crate::polycore::cap::check_cap;
use crate::polycore::{checked_family, PolyMap, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("expected `left` or `right`, got `{other}`")),
        }
    }
}

/// Linear polynomials `Ay` make up the left core.
pub fn in_left_core(p: &Polynomial) -> bool {
    p.is_linear()
}

/// Representables `y^A` make up the right core.
pub fn in_right_core(p: &Polynomial) -> bool {
    p.is_representable()
}

pub fn in_core(p: &Polynomial, side: Side) -> bool {
    match side {
        Side::Left => in_left_core(p),
        Side::Right => in_right_core(p),
    }
}

/// The probes used by [`verify_core_membership`]: every polynomial within the
/// bound plus the constants `0..=2`, which always suffice to refute.
pub fn probes(max_pos: usize, max_dir: usize) -> Result<Vec<Polynomial>> {
    let mut out = checked_family(max_pos, max_dir)?;
    for n in 0..=2 {
        let c = Polynomial::constant(n);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    Ok(out)
}

/// Checks that `indep(p, x)` (left) or `indep(x, p)` (right) is an iso for
/// every probe `x` within the bound. Passes exactly when every probe does; the
/// note names the first probe that does not.
pub fn verify_core_membership(p: &Polynomial, side: Side, max_pos: usize, max_dir: usize) -> Result<LawReport> {
    let probes = probes(max_pos, max_dir)?;
    let verdicts: Vec<Result<bool>> = probes
        .par_iter()
        .map(|x| {
            let m = match side {
                Side::Left => monoidal::indep(p, x)?,
                Side::Right => monoidal::indep(x, p)?,
            };
            Ok(m.is_iso())
        })
        .collect();
    let mut first_bad = None;
    for (x, v) in probes.iter().zip(verdicts) {
        if !v? && first_bad.is_none() {
            first_bad = Some(x);
        }
    }
    let law = format!("core_{} {}", if side == Side::Left { "l" } else { "r" }, p);
    let note = match first_bad {
        Some(x) => match side {
            Side::Left => format!("indep({p}, {x}) is not an isomorphism"),
            Side::Right => format!("indep({x}, {p}) is not an isomorphism"),
        },
        None => format!("{} probes, all isomorphisms", probes.len()),
    };
    Ok(LawReport::verdict(&law, first_bad.is_none(), Some(note)))
}

fn representable_card(p: &Polynomial) -> Result<usize> {
    if p.is_representable() {
        Ok(p.card(0))
    } else {
        Err(PolyError::NotRepresentable(p.to_string()))
    }
}

/// `y^A ↦ Ay`.
pub fn star_obj(p: &Polynomial) -> Result<Polynomial> {
    let a = representable_card(p)?;
    check_cap("star positions", a as u128)?;
    Ok(Polynomial::linear(a))
}

/// A map `y^B → y^A`, whose backward table is a function `A → B`, goes to
/// the map `Ay → By` with that function as its forward table.
pub fn star_map(f: &PolyMap) -> Result<PolyMap> {
    let b = representable_card(&f.dom)?;
    let a = representable_card(&f.cod)?;
    check_cap("star positions", a.max(b) as u128)?;
    PolyMap::new(
        Polynomial::linear(a),
        Polynomial::linear(b),
        f.on_directions[0].clone(),
        vec![vec![0]; a],
    )
}
