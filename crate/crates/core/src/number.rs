//! Integer utilities: totients, factorizations, primes, primorials and
//! integer partitions.
//!
//! The factorization and totient routines are generic over any
//! [`num_integer::Integer`] so the same code serves `u64` element orders and
//! arbitrary-precision moduli.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Prime factorization by trial division, primes ascending.
pub fn factorize<T: Integer + Clone>(n: &T) -> Vec<(T, u32)> {
    let mut rest = n.clone();
    let mut out = Vec::new();
    if rest.is_zero() {
        return out;
    }
    let two = T::one() + T::one();
    let mut d = two.clone();
    while d.clone() * d.clone() <= rest {
        let mut e = 0;
        while rest.is_multiple_of(&d) {
            rest = rest / d.clone();
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d = if d == two { d + T::one() } else { d + two.clone() };
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}

/// Euler's totient via the product formula over the prime factorization.
pub fn euler_phi<T: Integer + Clone>(n: &T) -> T {
    factorize(n).into_iter().fold(T::one(), |acc, (p, e)| {
        let mut term = p.clone() - T::one();
        for _ in 1..e {
            term = term * p.clone();
        }
        acc * term
    })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, e))` when `n = p^e` with `e >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(&n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

/// True when `n` is `p^e` for the given prime (`e >= 0`, so 1 qualifies).
pub fn is_power_of(n: u64, p: u64) -> bool {
    let mut n = n;
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Residues in `1..n` coprime to `n`, ascending. For `n = 1` this is `[0]`,
/// the single generator of the trivial group.
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|u| u.gcd(&n) == 1).collect()
}

/// Order of the residue `k` in the additive group `Z_n`.
pub fn additive_order<T: Integer + Clone>(k: &T, n: &T) -> T {
    n.clone() / k.gcd(n)
}

/// The first `b` primes in increasing order.
pub fn primes_first(b: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(b);
    let mut candidate = 2u64;
    while out.len() < b {
        if out.iter().take_while(|&&p| p * p <= candidate).all(|&p| candidate % p != 0) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

/// Product of the first `b` primes.
pub fn primorial(b: usize) -> BigUint {
    primes_first(b).into_iter().map(BigUint::from).product()
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// All partitions of `m` with parts in descending order, listed in
/// descending lexicographic order: `4 -> [4], [3,1], [2,2], [2,1,1], [1,1,1,1]`.
pub fn enumerate_partitions(m: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(rest)).rev() {
            prefix.push(part);
            rec(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(m, m, &mut Vec::new(), &mut out);
    }
    out
}

/// Ordered compositions of `m` into at most `max_parts` positive parts, in
/// descending lexicographic order.
pub fn compositions(m: u32, max_parts: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, left: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        if left == 0 {
            return;
        }
        for part in (1..=rest).rev() {
            prefix.push(part);
            rec(rest - part, left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        rec(m, max_parts, &mut Vec::new(), &mut out);
    }
    out
}
