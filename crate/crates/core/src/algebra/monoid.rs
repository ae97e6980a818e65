use serde::{Deserialize, Serialize};

use crate::error::{PolyError, Result};

/// A monoid on `{0, …, order-1}` given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MonoidRecord")]
pub struct FiniteMonoid {
    order: usize,
    unit: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MonoidRecord {
    order: usize,
    unit: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<MonoidRecord> for FiniteMonoid {
    type Error = PolyError;

    fn try_from(r: MonoidRecord) -> Result<Self> {
        FiniteMonoid::new(r.order, r.unit, r.table)
    }
}

fn invalid(msg: String) -> PolyError {
    PolyError::InvalidMonoid(msg)
}

impl FiniteMonoid {
    /// Validates shape, associativity and the unit laws.
    pub fn new(order: usize, unit: usize, table: Vec<Vec<usize>>) -> Result<Self> {
        if order == 0 {
            return Err(invalid("a monoid needs at least one element".into()));
        }
        if unit >= order {
            return Err(invalid(format!("unit {unit} is outside 0..{order}")));
        }
        if table.len() != order || table.iter().any(|row| row.len() != order) {
            return Err(invalid(format!("table must be {order} by {order}")));
        }
        if let Some(v) = table.iter().flatten().find(|&&v| v >= order) {
            return Err(invalid(format!("entry {v} is outside 0..{order}")));
        }
        let m = FiniteMonoid { order, unit, table };
        for a in 0..order {
            if m.mul(unit, a) != a || m.mul(a, unit) != a {
                return Err(invalid(format!("{unit} is not a unit at {a}")));
            }
        }
        if let Some((a, b, c)) = m.associativity_failure() {
            return Err(invalid(format!("({a}*{b})*{c} differs from {a}*({b}*{c})")));
        }
        Ok(m)
    }

    fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn trivial() -> Self {
        FiniteMonoid {
            order: 1,
            unit: 0,
            table: vec![vec![0]],
        }
    }

    /// `Z/n` under addition.
    pub fn cyclic(n: usize) -> Result<Self> {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteMonoid::new(n, 0, table)
    }

    /// `{0, …, n-1}` under `max`, with unit 0.
    pub fn max_monoid(n: usize) -> Result<Self> {
        let table = (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect();
        FiniteMonoid::new(n, 0, table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The same carrier with `a ∗ᵒᵖ b = b ∗ a`.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        FiniteMonoid {
            order: n,
            unit: self.unit,
            table: (0..n).map(|a| (0..n).map(|b| self.mul(b, a)).collect()).collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let r: MonoidRecord = serde_json::from_str(s).map_err(|e| invalid(e.to_string()))?;
        Self::try_from(r)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("monoid serializes")
    }
}

/// Largest carrier accepted by [`enumerate_monoids`].
pub const MAX_ENUMERATED_ORDER: usize = 4;

/// Every monoid table on `{0, …, n-1}`, sorted by table. Rows and columns of
/// the unit are forced, so only the `(n-1)^2` remaining entries are searched;
/// candidates are streamed, so only the order guard bounds the work.
pub fn enumerate_monoids(n: usize) -> Result<Vec<FiniteMonoid>> {
    if n > MAX_ENUMERATED_ORDER {
        return Err(PolyError::SizeCap {
            what: format!("monoid tables of order {n}"),
            needed: format!("{n}^{}", (n - 1) * (n - 1)),
            cap: MAX_ENUMERATED_ORDER as u64,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let free = (n - 1) * (n - 1);
    let mut out = Vec::new();
    for unit in 0..n {
        let others: Vec<usize> = (0..n).filter(|&x| x != unit).collect();
        let mut digits = vec![0usize; free];
        loop {
            let mut table = vec![vec![0; n]; n];
            for (a, row) in table.iter_mut().enumerate() {
                row[unit] = a;
            }
            table[unit] = (0..n).collect();
            for (k, &d) in digits.iter().enumerate() {
                table[others[k / (n - 1)]][others[k % (n - 1)]] = d;
            }
            let m = FiniteMonoid { order: n, unit, table };
            if m.associativity_failure().is_none() {
                out.push(m);
            }
            let mut k = free;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                digits[k] += 1;
                if digits[k] < n {
                    break;
                }
                digits[k] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    }
    out.sort();
    Ok(out)
}
