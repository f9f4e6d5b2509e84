//! Scalar and vector helpers over arbitrary-precision integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn vec_i64(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Int], b: &[Int]) -> Vec<Int> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn neg(a: &[Int]) -> Vec<Int> {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero_vec(a: &[Int]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn gcd_all<'a>(values: impl IntoIterator<Item = &'a Int>) -> Int {
    let mut g = Int::zero();
    for v in values {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divide a vector by the gcd of its entries. The zero vector stays zero.
pub fn primitive(a: &[Int]) -> Vec<Int> {
    let g = gcd_all(a.iter());
    if g.is_zero() || g.is_one() {
        return a.to_vec();
    }
    a.iter().map(|x| x / &g).collect()
}

/// p(p-1)...(p-q+1)/q!, defined for any integer p and q >= 0.
pub fn binomial(p: &Int, q: usize) -> Int {
    let mut num = Int::one();
    let mut den = Int::one();
    for k in 0..q {
        num *= p - int(k as i64);
        den *= int(k as i64 + 1);
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

pub fn binomial_usize(p: usize, q: usize) -> Int {
    binomial(&int(p as i64), q)
}

pub fn sign_pow(k: usize) -> Int {
    if k % 2 == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

pub fn abs(a: &Int) -> Int {
    a.abs()
}
