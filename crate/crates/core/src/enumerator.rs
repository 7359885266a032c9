//! Generating functions for centered and bicentered k-valent trees.
//!
//! `T_h` counts (k-1)-ary rooted trees of height at most `h`, with the empty
//! tree contributing the constant term. It obeys `T_{-2} = 0`, `T_{-1} = 1`
//! and `T_{h+1} = 1 + z·S_{k-1}(T_h)`. From those:
//!
//! * diameter `2h` (centered): `C_{2h} = z·S_k(T_{h-1}) - z·S_k(T_{h-2})
//!   - (T_{h-1} - T_{h-2})(T_{h-1} - 1)`,
//! * diameter `2h+1` (bicentered): `B_{2h+1} = S_2(T_h - T_{h-1})`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::cycle_index::substitute;
use crate::error::{Error, Result};
use crate::series::Series;

/// Memoized `T_h` and `1 + z·S_k(T_h)` for one `(k, order)` pair.
#[derive(Debug, Clone)]
pub struct RootedTrees {
    k: usize,
    order: usize,
    /// `heights[i]` is `T_{i-2}`.
    heights: Vec<Series>,
    /// `planted[i]` is `1 + z·S_k(T_{i-2})`, filled lazily.
    planted: Vec<Option<Series>>,
}

impl RootedTrees {
    pub fn new(k: usize, order: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!("valency k = {k} must be at least 2")));
        }
        Ok(RootedTrees {
            k,
            order,
            heights: vec![Series::zero(order), Series::constant(1, order)],
            planted: Vec::new(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// A rooted tree on `n <= order + 1` nodes has height at most `order`,
    /// so `T_h` is constant from `h = order` on.
    fn slot(&self, h: isize) -> usize {
        (h.min(self.order as isize) + 2) as usize
    }

    /// `T_h` for `h >= -2`.
    pub fn height_at_most(&mut self, h: isize) -> Result<&Series> {
        if h < -2 {
            return Err(Error::InvalidArgument(format!("height {h} is below -2")));
        }
        let slot = self.slot(h);
        while self.heights.len() <= slot {
            let prev = self.heights.last().expect("base cases present");
            let branches = substitute(self.k - 1, prev, self.order)?;
            let next = Series::constant(1, self.order).add(&branches.shift(1))?;
            self.heights.push(next);
        }
        Ok(&self.heights[slot])
    }

    /// `1 + z·S_k(T_h)`: trees hanging from a root of full valency `k`.
    fn planted(&mut self, h: isize) -> Result<Series> {
        let slot = self.slot(h);
        if self.planted.len() <= slot {
            self.planted.resize(slot + 1, None);
        }
        if let Some(s) = &self.planted[slot] {
            return Ok(s.clone());
        }
        let base = self.height_at_most(h)?.clone();
        let value = Series::constant(1, self.order).add(&substitute(self.k, &base, self.order)?.shift(1))?;
        self.planted[slot] = Some(value.clone());
        Ok(value)
    }

    /// `C_{2h}`: centered trees of diameter `2h`.
    pub fn centered_by_diameter(&mut self, h: usize) -> Result<Series> {
        let h = h as isize;
        let outer = self.planted(h - 1)?.sub(&self.planted(h - 2)?)?;
        let upper = self.height_at_most(h - 1)?.clone();
        let lower = self.height_at_most(h - 2)?.clone();
        let exact = upper.sub(&lower)?;
        let rest = upper.sub(&Series::constant(1, self.order))?;
        let single_tall = exact.mul(&rest)?;
        let result = outer.sub(&single_tall)?;
        ensure_nonnegative(&result, || format!("C_{} for k = {}", 2 * h, self.k))?;
        Ok(result)
    }

    /// `B_{2h+1}`: bicentered trees of diameter `2h + 1`.
    pub fn bicentered_by_diameter(&mut self, h: usize) -> Result<Series> {
        let h = h as isize;
        let upper = self.height_at_most(h)?.clone();
        let exact = upper.sub(self.height_at_most(h - 1)?)?;
        let result = substitute(2, &exact, self.order)?;
        ensure_nonnegative(&result, || format!("B_{} for k = {}", 2 * h + 1, self.k))?;
        Ok(result)
    }

    /// Half-diameters `h` with `C_{2h}` possibly nonzero below the order.
    pub fn centered_heights(&self) -> std::ops::Range<usize> {
        0..self.order.div_ceil(2)
    }

    /// Half-diameters `h` with `B_{2h+1}` possibly nonzero below the order.
    pub fn bicentered_heights(&self) -> std::ops::Range<usize> {
        0..self.order / 2
    }

    pub fn centered(&mut self) -> Result<Series> {
        let mut acc = Series::zero(self.order);
        for h in self.centered_heights() {
            acc = acc.add(&self.centered_by_diameter(h)?)?;
        }
        Ok(acc)
    }

    pub fn bicentered(&mut self) -> Result<Series> {
        let mut acc = Series::zero(self.order);
        for h in self.bicentered_heights() {
            acc = acc.add(&self.bicentered_by_diameter(h)?)?;
        }
        Ok(acc)
    }
}

fn ensure_nonnegative(s: &Series, what: impl FnOnce() -> String) -> Result<()> {
    match s.coeffs().iter().position(|c| c < &BigInt::zero()) {
        None => Ok(()),
        Some(n) => Err(Error::Inconsistent(format!(
            "negative coefficient of z^{n} in {}",
            what()
        ))),
    }
}

/// `T_h` for valency `k`, truncated at `order`.
pub fn rooted_bounded_height(k: usize, h: isize, order: usize) -> Result<Series> {
    RootedTrees::new(k, order)?.height_at_most(h).cloned()
}

pub fn centered_by_diameter(k: usize, h: usize, order: usize) -> Result<Series> {
    RootedTrees::new(k, order)?.centered_by_diameter(h)
}

pub fn bicentered_by_diameter(k: usize, h: usize, order: usize) -> Result<Series> {
    RootedTrees::new(k, order)?.bicentered_by_diameter(h)
}

/// `C(z)`, the centered k-valent trees by node count.
pub fn centered(k: usize, order: usize) -> Result<Series> {
    RootedTrees::new(k, order)?.centered()
}

/// `B(z)`, the bicentered k-valent trees by node count.
pub fn bicentered(k: usize, order: usize) -> Result<Series> {
    RootedTrees::new(k, order)?.bicentered()
}

/// One line of a census: counts of `n`-node k-valent trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub centered: BigUint,
    pub bicentered: BigUint,
    pub total: BigUint,
    /// Diameter -> count, nonzero entries only.
    pub by_diameter: Option<BTreeMap<usize, BigUint>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    k: usize,
    rows: Vec<CensusRow>,
}

impl CensusTable {
    /// Validates and assembles a table; rows must run `1..=max_n` in order.
    pub fn from_rows(k: usize, rows: Vec<CensusRow>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidArgument(format!("valency k = {k} must be at least 2")));
        }
        if rows.is_empty() {
            return Err(Error::InvalidArgument("a census needs at least one row".into()));
        }
        let with_breakdown = rows[0].by_diameter.is_some();
        for (i, row) in rows.iter().enumerate() {
            if row.n != i + 1 {
                return Err(Error::InvalidArgument(format!(
                    "row {i} is for n = {}, expected {}",
                    row.n,
                    i + 1
                )));
            }
            if row.total != &row.centered + &row.bicentered {
                return Err(Error::Inconsistent(format!(
                    "n = {}: total differs from centered + bicentered",
                    row.n
                )));
            }
            match &row.by_diameter {
                Some(map) => {
                    if !with_breakdown {
                        return Err(Error::InvalidArgument(
                            "diameter breakdown present on some rows only".into(),
                        ));
                    }
                    let parity_sum = |parity: usize| -> BigUint {
                        map.iter()
                            .filter(|(d, _)| *d % 2 == parity)
                            .map(|(_, c)| c)
                            .sum()
                    };
                    if parity_sum(0) != row.centered || parity_sum(1) != row.bicentered {
                        return Err(Error::Inconsistent(format!(
                            "n = {}: diameter breakdown does not sum to the class counts",
                            row.n
                        )));
                    }
                }
                None if with_breakdown => {
                    return Err(Error::InvalidArgument(
                        "diameter breakdown present on some rows only".into(),
                    ));
                }
                None => {}
            }
        }
        Ok(CensusTable { k, rows })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[CensusRow] {
        &self.rows
    }

    /// The row for `n` nodes (1-based).
    pub fn row(&self, n: usize) -> Option<&CensusRow> {
        n.checked_sub(1).and_then(|i| self.rows.get(i))
    }

    pub fn has_breakdown(&self) -> bool {
        self.rows[0].by_diameter.is_some()
    }

    pub fn without_breakdown(&self) -> CensusTable {
        let rows = self
            .rows
            .iter()
            .map(|r| CensusRow {
                by_diameter: None,
                ..r.clone()
            })
            .collect();
        CensusTable { k: self.k, rows }
    }
}

fn to_count(c: &BigInt) -> Result<BigUint> {
    c.to_biguint()
        .ok_or_else(|| Error::Inconsistent(format!("negative count {c}")))
}

/// Centered, bicentered and total counts of k-valent trees for `n = 1..=max_n`.
pub fn census(k: usize, max_n: usize, with_breakdown: bool) -> Result<CensusTable> {
    if max_n == 0 {
        return Err(Error::InvalidArgument("max_n must be at least 1".into()));
    }
    let mut trees = RootedTrees::new(k, max_n)?;

    let mut centered = Series::zero(max_n);
    let mut bicentered = Series::zero(max_n);
    let mut by_diameter: Vec<BTreeMap<usize, BigUint>> = vec![BTreeMap::new(); max_n + 1];
    let mut record = |series: &Series, diameter: usize| -> Result<()> {
        if with_breakdown {
            for (n, c) in series.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    by_diameter[n].insert(diameter, to_count(c)?);
                }
            }
        }
        Ok(())
    };
    for h in trees.centered_heights() {
        let c = trees.centered_by_diameter(h)?;
        record(&c, 2 * h)?;
        centered = centered.add(&c)?;
    }
    for h in trees.bicentered_heights() {
        let b = trees.bicentered_by_diameter(h)?;
        record(&b, 2 * h + 1)?;
        bicentered = bicentered.add(&b)?;
    }

    let rows = (1..=max_n)
        .map(|n| {
            let c = to_count(&centered.coeffs()[n])?;
            let b = to_count(&bicentered.coeffs()[n])?;
            Ok(CensusRow {
                n,
                total: &c + &b,
                centered: c,
                bicentered: b,
                by_diameter: with_breakdown.then(|| std::mem::take(&mut by_diameter[n])),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    CensusTable::from_rows(k, rows)
}
