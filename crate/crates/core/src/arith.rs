//! Small modular-arithmetic helpers used by the field and local-ring backends.

/// Reduce a signed integer into `[0, m)`.
pub fn reduce_mod(v: i64, m: u64) -> u64 {
    let m_i = m as i64;
    let r = v % m_i;
    if r < 0 {
        (r + m_i) as u64
    } else {
        r as u64
    }
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Extended gcd: returns (g, x, y) with a*x + b*y = g.
pub fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), a.signum(), 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Inverse of `a` modulo `m`, if gcd(a, m) = 1.
pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (g, x, _) = egcd(a as i128, m as i128);
    if g != 1 {
        return None;
    }
    let m_i = m as i128;
    Some((((x % m_i) + m_i) % m_i) as u64)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Deterministic primality test by trial division; fine for the desk-scale
/// moduli this library works with.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_round_trip() {
        for p in [3u64, 5, 7, 11, 101] {
            for a in 1..p {
                let inv = inv_mod(a, p).unwrap();
                assert_eq!(mul_mod(a, inv, p), 1);
            }
        }
    }

    #[test]
    fn inverse_mod_prime_power() {
        // units mod 25 are exactly the residues prime to 5
        for a in 1..25u64 {
            let inv = inv_mod(a, 25);
            assert_eq!(inv.is_some(), a % 5 != 0);
            if let Some(i) = inv {
                assert_eq!(mul_mod(a, i, 25), 1);
            }
        }
    }

    #[test]
    fn small_primes() {
        let primes: Vec<u64> = (0..110).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109]
        );
    }
}
