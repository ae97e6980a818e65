use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::cap::{add_or, check_cap, mul_or, pow_or};
use crate::error::Result;

/// A finite set `{0, .., k-1}` with optional display labels.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiniteSet {
    pub card: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl FiniteSet {
    pub fn new(card: usize) -> Self {
        FiniteSet { card, labels: None }
    }

    pub fn labelled(labels: Vec<String>) -> Self {
        FiniteSet {
            card: labels.len(),
            labels: Some(labels),
        }
    }
}

impl PartialEq for FiniteSet {
    fn eq(&self, other: &Self) -> bool {
        self.card == other.card
    }
}

impl Eq for FiniteSet {}

/// Display names for positions and for the directions at each position.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Labels {
    #[serde(default)]
    pub positions: Vec<String>,
    #[serde(default)]
    pub directions: Vec<Vec<String>>,
}

/// A finite polynomial functor `Σ_P y^{p[P]}`, stored as the ordered list of
/// direction cardinalities. Labels never take part in equality.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Polynomial {
    positions: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Labels>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.positions == other.positions
    }
}

impl Eq for Polynomial {}

impl Hash for Polynomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.positions.hash(state);
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by number of positions, then by the cardinality list.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.positions.len(), &self.positions).cmp(&(other.positions.len(), &other.positions))
    }
}

impl Polynomial {
    pub fn new(cards: Vec<usize>) -> Self {
        Polynomial {
            positions: cards,
            labels: None,
        }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    /// The identity functor `y`.
    pub fn y() -> Self {
        Self::new(vec![1])
    }

    /// `Ay`: `|A|` positions with one direction each.
    pub fn linear(n: usize) -> Self {
        Self::new(vec![1; n])
    }

    /// `y^A`: one position with `|A|` directions.
    pub fn representable(n: usize) -> Self {
        Self::new(vec![n])
    }

    /// `A y^0`: `|A|` positions with no directions.
    pub fn constant(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    pub fn with_labels(mut self, labels: Labels) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&Labels> {
        self.labels.as_ref()
    }

    pub fn num_positions(&self) -> usize {
        self.positions.len()
    }

    pub fn card(&self, pos: usize) -> usize {
        self.positions[pos]
    }

    pub fn cards(&self) -> &[usize] {
        &self.positions
    }

    pub fn total_directions(&self) -> usize {
        self.positions.iter().sum()
    }

    pub fn is_linear(&self) -> bool {
        self.positions.iter().all(|&c| c == 1)
    }

    pub fn is_representable(&self) -> bool {
        self.positions.len() == 1
    }

    /// Coproduct: the positions of `other` follow those of `self`.
    pub fn sum(&self, other: &Polynomial) -> Polynomial {
        let mut cards = self.positions.clone();
        cards.extend_from_slice(&other.positions);
        Polynomial::new(cards)
    }

    /// Isomorphism of polynomials, i.e. equality of cardinality multisets.
    pub fn shape_iso(&self, other: &Polynomial) -> bool {
        let mut a = self.positions.clone();
        let mut b = other.positions.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }

    /// `|p(X)|` for `|X| = x`, with 0^0 = 1. Not capped.
    pub fn eval_count(&self, x: u128) -> Result<u128> {
        self.positions
            .iter()
            .try_fold(0u128, |acc, &c| add_or("p(X)", acc, pow_or("p(X)", x, c as u128)?))
    }

    /// Functor application on a finite set.
    pub fn evaluate(&self, x: &FiniteSet) -> Result<FiniteSet> {
        let n = self.eval_count(x.card as u128)?;
        Ok(FiniteSet::new(check_cap("p(X)", n)?))
    }

    /// Decodes the `k`-th element of `p(X)` as a position and a direction tuple.
    pub fn eval_element(&self, x: usize, mut k: u128) -> (usize, Vec<usize>) {
        for (pos, &c) in self.positions.iter().enumerate() {
            let block = super::cap::checked_pow(x as u128, c as u128).expect("block fits");
            if k < block {
                return (pos, decode_digits(k, x as u128, c));
            }
            k -= block;
        }
        panic!("element index out of range")
    }

    /// Inverse of [`Polynomial::eval_element`].
    pub fn eval_index(&self, x: usize, pos: usize, f: &[usize]) -> u128 {
        let mut k = 0u128;
        for &c in &self.positions[..pos] {
            k += super::cap::checked_pow(x as u128, c as u128).expect("block fits");
        }
        k + encode_digits(f, x as u128)
    }

    pub fn gamma_count(&self) -> Result<u128> {
        self.positions
            .iter()
            .try_fold(1u128, |acc, &c| mul_or("Γ(p)", acc, c as u128))
    }

    /// Global sections: one direction chosen at every position.
    pub fn gamma(&self) -> Result<FiniteSet> {
        let n = self.gamma_count()?;
        Ok(FiniteSet::new(check_cap("Γ(p)", n)?))
    }

    /// Plain-text notation such as `3y^2 + y + 2`.
    pub fn notation(&self) -> String {
        self.render(false)
    }

    /// Notation with superscript exponents.
    pub fn notation_unicode(&self) -> String {
        self.render(true)
    }

    fn render(&self, unicode: bool) -> String {
        if self.positions.is_empty() {
            return "0".to_string();
        }
        let mut runs: Vec<(usize, usize)> = Vec::new();
        for &c in &self.positions {
            match runs.last_mut() {
                Some((k, last)) if *last == c => *k += 1,
                _ => runs.push((1, c)),
            }
        }
        let terms: Vec<String> = runs
            .into_iter()
            .map(|(k, c)| {
                let coeff = if k == 1 { String::new() } else { k.to_string() };
                match c {
                    0 => k.to_string(),
                    1 => format!("{coeff}y"),
                    _ if unicode => format!("{coeff}y{}", superscript(c)),
                    _ => format!("{coeff}y^{c}"),
                }
            })
            .collect();
        terms.join(" + ")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.notation())
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string()
        .chars()
        .map(|ch| DIGITS[ch.to_digit(10).unwrap() as usize])
        .collect()
}

/// Mixed-radix decode with a uniform base, first digit most significant.
pub fn decode_digits(mut k: u128, base: u128, len: usize) -> Vec<usize> {
    let mut out = vec![0usize; len];
    for slot in out.iter_mut().rev() {
        *slot = (k % base) as usize;
        k /= base;
    }
    out
}

pub fn encode_digits(digits: &[usize], base: u128) -> u128 {
    digits.iter().fold(0u128, |acc, &d| acc * base + d as u128)
}
