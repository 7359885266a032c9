//! Cycle index of the symmetric group and series substitution into it.
//!
//! `substitute(m, f, N)` evaluates `Z(S_m)` with the power sum `p_i` replaced
//! by `f(z^i)`: the generating function for unordered `m`-multisets of
//! objects counted by `f`. The sum is accumulated as `m!` times the answer so
//! every intermediate stays integral, then divided once at the end.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::Series;

/// One conjugacy class of `S_m`, i.e. one partition of `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleType {
    /// `(cycle length, multiplicity)` pairs in increasing cycle length.
    parts: Vec<(usize, usize)>,
    /// `z_λ = Π s^c · c!`; the class has `m! / z_λ` permutations.
    weight_denominator: BigUint,
}

impl CycleType {
    fn from_parts(parts: Vec<(usize, usize)>) -> Self {
        let weight_denominator = parts
            .iter()
            .map(|&(size, mult)| BigUint::from(size).pow(mult as u32) * factorial(mult))
            .product();
        CycleType {
            parts,
            weight_denominator,
        }
    }

    pub fn parts(&self) -> &[(usize, usize)] {
        &self.parts
    }

    pub fn weight_denominator(&self) -> &BigUint {
        &self.weight_denominator
    }

    /// The `m` this is a partition of.
    pub fn degree(&self) -> usize {
        self.parts.iter().map(|&(s, c)| s * c).sum()
    }

    /// Number of permutations with this cycle type.
    pub fn class_size(&self) -> BigUint {
        factorial(self.degree()) / &self.weight_denominator
    }
}

pub fn factorial(m: usize) -> BigUint {
    (1..=m).map(BigUint::from).product()
}

/// All partitions of `m`, listed in lexicographic order of their
/// nonincreasing part sequences (`1^m` first, `m` last).
pub fn cycle_types(m: usize) -> Vec<CycleType> {
    fn descend(rem: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in 1..=rem.min(max) {
            prefix.push(p);
            descend(rem - p, p, prefix, out);
            prefix.pop();
        }
    }

    let mut partitions = Vec::new();
    descend(m, m, &mut Vec::new(), &mut partitions);
    partitions
        .into_iter()
        .map(|parts| {
            let mut grouped: Vec<(usize, usize)> = Vec::new();
            for p in parts.into_iter().rev() {
                match grouped.last_mut() {
                    Some((size, mult)) if *size == p => *mult += 1,
                    _ => grouped.push((p, 1)),
                }
            }
            CycleType::from_parts(grouped)
        })
        .collect()
}

/// `S_m(f(z))` truncated at `order`.
pub fn substitute(m: usize, f: &Series, order: usize) -> Result<Series> {
    if f.truncation_order() != order {
        return Err(Error::OrderMismatch {
            left: f.truncation_order(),
            right: order,
        });
    }
    if m == 1 {
        return Ok(f.clone());
    }

    let mut powers = PowerCache::new(f);
    let mut acc = Series::zero(order);
    for ct in cycle_types(m) {
        // Π f(z^s)^c, with each f(z^s)^c held as (f^c)(z^s) at order N / s.
        let mut term = Series::constant(1, order);
        for &(size, mult) in ct.parts() {
            term = term.mul_stretched(powers.get(size, mult)?, size)?;
        }
        acc = acc.add(&term.scale(&BigInt::from(ct.class_size())))?;
    }

    let divisor = BigInt::from(factorial(m));
    let coeffs = acc
        .into_coeffs()
        .into_iter()
        .enumerate()
        .map(|(n, c)| {
            let (q, r) = c.div_rem(&divisor);
            if r.is_zero() {
                Ok(q)
            } else {
                Err(Error::Inconsistent(format!(
                    "coefficient {n} of {m}! * S_{m}(f) is not divisible by {m}!"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Series::new(coeffs)
}

/// Memoizes `f^c` truncated at order `N / s`, the compressed form of `f(z^s)^c`.
struct PowerCache<'a> {
    base: &'a Series,
    cache: HashMap<(usize, usize), Series>,
}

impl<'a> PowerCache<'a> {
    fn new(base: &'a Series) -> Self {
        PowerCache {
            base,
            cache: HashMap::new(),
        }
    }

    fn get(&mut self, size: usize, mult: usize) -> Result<&Series> {
        if !self.cache.contains_key(&(size, mult)) {
            let order = self.base.truncation_order() / size;
            let value = match mult {
                0 => Series::constant(1, order),
                1 => self.base.truncated(order)?,
                _ => {
                    let half = self.get(size, mult / 2)?.clone();
                    let mut v = half.mul(&half)?;
                    if mult % 2 == 1 {
                        v = v.mul(self.get(size, 1)?)?;
                    }
                    v
                }
            };
            self.cache.insert((size, mult), value);
        }
        Ok(&self.cache[&(size, mult)])
    }
}

/// True when every `z_λ` of `m` divides `m!` and the class sizes add up to `m!`.
pub fn class_equation_holds(m: usize) -> bool {
    let total = factorial(m);
    let types = cycle_types(m);
    let sizes_sum: BigUint = types.iter().map(CycleType::class_size).sum();
    types
        .iter()
        .all(|ct| (&total % ct.weight_denominator()).is_zero())
        && sizes_sum == total
}
