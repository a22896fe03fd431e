use alloc::vec::Vec;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `n`, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    if modulus == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

pub fn least_primitive_root(p: u32) -> Option<u32> {
    if !is_prime(p) {
        return None;
    }
    if p == 2 {
        return Some(1);
    }
    let order = u64::from(p) - 1;
    let factors = prime_factors(order);
    (2..p).find(|&g| {
        factors
            .iter()
            .all(|&r| pow_mod(u64::from(g), order / r, u64::from(p)) != 1)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert!(is_prime(2) && is_prime(65521));
        assert!(!is_prime(1) && !is_prime(65535));
        assert_eq!(least_primitive_root(7), Some(3));
        assert_eq!(least_primitive_root(41), Some(6));
        assert_eq!(least_primitive_root(3), Some(2));
        assert_eq!(prime_factors(255), [3, 5, 17]);
    }
}
