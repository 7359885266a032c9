//! Truncated polynomial products.
//!
//! Short operands go through a schoolbook loop. Longer ones are packed into a
//! single big integer (Kronecker substitution) so the work lands in
//! `num-bigint`'s Karatsuba/Toom-3 multiplier. Signed operands are split into
//! positive and negative halves; each half-product is unsigned.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

/// Below this many nonzero-prefix terms in the shorter operand, schoolbook wins.
const SCHOOLBOOK_CUTOFF: usize = 24;

/// Coefficients `0..len` of `a * b`.
pub(super) fn truncated_product(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let a = significant(a, len);
    let b = significant(b, len);
    let mut out = vec![BigInt::zero(); len];
    if a.is_empty() || b.is_empty() {
        return out;
    }
    // Factor out z^(va + vb) so only the occupied ranges are multiplied.
    let va = a.iter().position(|x| !x.is_zero()).expect("trimmed to a nonzero tail");
    let vb = b.iter().position(|x| !x.is_zero()).expect("trimmed to a nonzero tail");
    if va + vb >= len {
        return out;
    }
    let inner = dense_product(&a[va..], &b[vb..], len - va - vb);
    for (slot, c) in out[va + vb..].iter_mut().zip(inner) {
        *slot = c;
    }
    out
}

/// Product of operands whose first and last coefficients are nonzero.
fn dense_product(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let a = &a[..a.len().min(len)];
    let b = &b[..b.len().min(len)];
    let mut out = vec![BigInt::zero(); len];
    if a.len().min(b.len()) < SCHOOLBOOK_CUTOFF {
        schoolbook(a, b, &mut out);
        return out;
    }

    let (a_pos, a_neg) = split_signs(a);
    let (b_pos, b_neg) = split_signs(b);
    let halves = [
        (&a_pos, &b_pos, Sign::Plus),
        (&a_pos, &b_neg, Sign::Minus),
        (&a_neg, &b_pos, Sign::Minus),
        (&a_neg, &b_neg, Sign::Plus),
    ];
    for (x, y, sign) in halves {
        let (Some(x), Some(y)) = (x, y) else { continue };
        for (slot, c) in out.iter_mut().zip(kronecker(x, y, len)) {
            if !c.is_zero() {
                *slot += BigInt::from_biguint(sign, c);
            }
        }
    }
    out
}

/// Restricts to the first `len` terms and drops trailing zeros.
fn significant(c: &[BigInt], len: usize) -> &[BigInt] {
    let c = &c[..c.len().min(len)];
    let end = c.iter().rposition(|x| !x.is_zero()).map_or(0, |i| i + 1);
    &c[..end]
}

fn schoolbook(a: &[BigInt], b: &[BigInt], out: &mut [BigInt]) {
    let len = out.len();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
}

/// Splits into magnitude vectors of the positive and negative parts; `None`
/// when a part is identically zero.
fn split_signs(c: &[BigInt]) -> (Option<Vec<BigUint>>, Option<Vec<BigUint>>) {
    let mut pos = Vec::with_capacity(c.len());
    let mut neg = Vec::with_capacity(c.len());
    let (mut any_pos, mut any_neg) = (false, false);
    for x in c {
        match x.sign() {
            Sign::Minus => {
                any_neg = true;
                pos.push(BigUint::zero());
                neg.push(x.magnitude().clone());
            }
            _ => {
                any_pos |= !x.is_zero();
                pos.push(x.magnitude().clone());
                neg.push(BigUint::zero());
            }
        }
    }
    (any_pos.then_some(pos), any_neg.then_some(neg))
}

fn kronecker(a: &[BigUint], b: &[BigUint], len: usize) -> Vec<BigUint> {
    let max_bits = |v: &[BigUint]| v.iter().map(BigUint::bits).max().unwrap_or(0);
    let terms = a.len().min(b.len()) as u64;
    // Each product coefficient is a sum of at most `terms` products, so it
    // fits in bits(a) + bits(b) + bits(terms).
    let slot = (max_bits(a) + max_bits(b) + u64::from(64 - terms.leading_zeros())) as usize;
    let product = pack(a, slot) * pack(b, slot);
    let count = len.min(a.len() + b.len() - 1);
    unpack(&product, slot, count)
}

fn pack(c: &[BigUint], slot: usize) -> BigUint {
    let mut words = vec![0u32; (c.len() * slot).div_ceil(32) + 2];
    for (i, x) in c.iter().enumerate() {
        let base = i * slot;
        for (j, d) in x.iter_u32_digits().enumerate() {
            let bit = base + 32 * j;
            let (w, shift) = (bit / 32, bit % 32);
            let wide = u64::from(d) << shift;
            words[w] |= wide as u32;
            words[w + 1] |= (wide >> 32) as u32;
        }
    }
    BigUint::new(words)
}

fn unpack(packed: &BigUint, slot: usize, count: usize) -> Vec<BigUint> {
    let words = packed.to_u32_digits();
    let word = |i: usize| u64::from(words.get(i).copied().unwrap_or(0));
    let per_slot = slot.div_ceil(32);
    (0..count)
        .map(|i| {
            let base = i * slot;
            let digits = (0..per_slot)
                .map(|j| {
                    let bit = base + 32 * j;
                    let (w, shift) = (bit / 32, bit % 32);
                    let v = ((word(w) | (word(w + 1) << 32)) >> shift) as u32;
                    let remaining = slot - 32 * j;
                    if remaining < 32 {
                        v & ((1u32 << remaining) - 1)
                    } else {
                        v
                    }
                })
                .collect();
            BigUint::new(digits)
        })
        .collect()
}
