//! Integer factorization: trial division, perfect-power extraction,
//! Miller–Rabin and Brent's variant of Pollard rho.
//!
//! Rho runs with a fixed parameter schedule (`c = 1, 2, 3, …`, start `2`)
//! so results never depend on timing. A step budget bounds the work per
//! input; anything left unsplit is returned as a composite cofactor.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

/// Bases for Miller–Rabin; deterministic for `n < 3.317·10²⁴`.
const MR_BASES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

const DEFAULT_TRIAL_BOUND: u32 = 1_000_000;
const DEFAULT_RHO_BUDGET: u64 = 100_000_000;
const RHO_BATCH: u64 = 128;

/// Signed prime factorization, possibly with an unsplit composite part.
///
/// `sign · ∏ pᵉ · cofactor` reproduces the input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    sign: i8,
    factors: Vec<(BigUint, u32)>,
    cofactor: Option<BigUint>,
}

impl Factorization {
    /// `-1`, `0` or `1`.
    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// `(prime, exponent)` pairs, primes strictly increasing.
    pub fn factors(&self) -> &[(BigUint, u32)] {
        &self.factors
    }

    /// Composite part rho could not split within its budget.
    pub fn cofactor(&self) -> Option<&BigUint> {
        self.cofactor.as_ref()
    }

    /// True when no cofactor remains.
    pub fn is_complete(&self) -> bool {
        self.cofactor.is_none()
    }

    /// Multiplies everything back out.
    pub fn value(&self) -> BigInt {
        let mut mag = BigUint::one();
        for (p, e) in &self.factors {
            mag *= num_traits::pow(p.clone(), *e as usize);
        }
        if let Some(c) = &self.cofactor {
            mag *= c;
        }
        match self.sign {
            0 => BigInt::zero(),
            s if s < 0 => BigInt::from_biguint(Sign::Minus, mag),
            _ => BigInt::from_biguint(Sign::Plus, mag),
        }
    }
}

/// Space-separated `p^e` terms (`e = 1` prints bare `p`), e.g.
/// `2^6 5^2 11^2`. Units print as `1`, zero as `0`; a negative value gets a
/// leading `-1` term and an unsplit cofactor is shown in parentheses.
impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == 0 {
            return f.write_str("0");
        }
        let mut terms = 0;
        if self.sign < 0 {
            f.write_str("-1")?;
            terms += 1;
        }
        for (p, e) in &self.factors {
            if terms > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
            terms += 1;
        }
        if let Some(c) = &self.cofactor {
            if terms > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({c})")?;
            terms += 1;
        }
        if terms == 0 {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Factorization engine holding a sieved prime table for trial division.
#[derive(Clone, Debug)]
pub struct Factorizer {
    primes: Vec<u32>,
    trial_bound: u32,
    rho_budget: u64,
}

impl Default for Factorizer {
    fn default() -> Self {
        Self::new(DEFAULT_TRIAL_BOUND, DEFAULT_RHO_BUDGET)
    }
}

impl Factorizer {
    /// Trial division by primes `≤ trial_bound`, then at most `rho_budget`
    /// rho iterations per input.
    pub fn new(trial_bound: u32, rho_budget: u64) -> Self {
        Factorizer { primes: sieve(trial_bound), trial_bound, rho_budget }
    }

    /// Factors a signed integer.
    pub fn factorize(&self, n: &BigInt) -> Factorization {
        let sign = match n.sign() {
            Sign::NoSign => return Factorization { sign: 0, factors: Vec::new(), cofactor: None },
            Sign::Minus => -1,
            Sign::Plus => 1,
        };
        let mut m = n.magnitude().clone();
        let mut found: BTreeMap<BigUint, u32> = BTreeMap::new();

        for &p in &self.primes {
            let pb = BigUint::from(p);
            if &pb * &pb > m {
                break;
            }
            let mut e = 0;
            loop {
                let (q, r) = m.div_rem(&pb);
                if !r.is_zero() {
                    break;
                }
                m = q;
                e += 1;
            }
            if e > 0 {
                found.insert(pb, e);
            }
        }

        let mut leftover = BigUint::one();
        if !m.is_one() {
            let bound = BigUint::from(self.trial_bound);
            let small = &bound * &bound;
            // below bound², whatever trial division left is prime
            if m < small || is_prime(&m) {
                *found.entry(m).or_insert(0) += 1;
            } else {
                let mut budget = self.rho_budget;
                split(m, 1, &mut found, &mut leftover, &mut budget);
            }
        }

        Factorization {
            sign,
            factors: found.into_iter().collect(),
            cofactor: if leftover.is_one() { None } else { Some(leftover) },
        }
    }
}

/// Factors `n` with the default trial bound (10⁶) and rho budget (10⁸ steps).
pub fn factorize(n: &BigInt) -> Factorization {
    Factorizer::default().factorize(n)
}

fn split(
    m: BigUint,
    mult: u32,
    found: &mut BTreeMap<BigUint, u32>,
    leftover: &mut BigUint,
    budget: &mut u64,
) {
    if m.is_one() {
        return;
    }
    if is_prime(&m) {
        *found.entry(m).or_insert(0) += mult;
        return;
    }
    if let Some((root, k)) = perfect_power(&m) {
        split(root, mult * k, found, leftover, budget);
        return;
    }
    match rho(&m, budget) {
        Some(d) => {
            let rest = &m / &d;
            split(d, mult, found, leftover, budget);
            split(rest, mult, found, leftover, budget);
        }
        None => *leftover *= num_traits::pow(m, mult as usize),
    }
}

/// Returns `(r, k)` with `r^k == n` and `k ≥ 2` prime, if any.
fn perfect_power(n: &BigUint) -> Option<(BigUint, u32)> {
    let bits = n.bits() as u32;
    let mut k = 2;
    while k <= bits {
        if is_small_prime(k) {
            let r = n.nth_root(k);
            if &num_traits::pow(r.clone(), k as usize) == n {
                return Some((r, k));
            }
        }
        k += 1;
    }
    None
}

fn is_small_prime(k: u32) -> bool {
    k >= 2 && (2..).take_while(|d| d * d <= k).all(|d| !k.is_multiple_of(d))
}

fn sieve(bound: u32) -> Vec<u32> {
    let n = bound as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = alloc::vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u32);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// Miller–Rabin with the first 13 prime bases: exact below `3.317·10²⁴`,
/// a strong probable-prime test above.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(small) = n.to_u64() {
        return is_prime_u64(small);
    }
    for &b in &MR_BASES {
        if (n % b).is_zero() {
            return false;
        }
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().unwrap_or(0);
    let d = &n1 >> s;
    'bases: for &b in &MR_BASES {
        let mut x = BigUint::from(b).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &b in &MR_BASES[..12] {
        let b = b as u64;
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for &b in &MR_BASES[..12] {
        let mut x = pow_mod(b as u64, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Finds a nontrivial factor of the odd composite `n`, or gives up when the
/// budget runs out.
fn rho(n: &BigUint, budget: &mut u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    if let Some(small) = n.to_u64() {
        return rho_u64(small, budget).map(BigUint::from);
    }
    let mut c = 1u32;
    while *budget > 0 {
        if let Some(d) = brent_big(n, &BigUint::from(c), budget) {
            return Some(d);
        }
        c += 1;
    }
    None
}

fn brent_big(n: &BigUint, c: &BigUint, budget: &mut u64) -> Option<BigUint> {
    let step = |v: &BigUint| (v * v + c) % n;
    let absdiff = |a: &BigUint, b: &BigUint| if a > b { a - b } else { b - a };
    let one = BigUint::one();
    let mut y = BigUint::from(2u32);
    let mut x = y.clone();
    let mut ys = y.clone();
    let mut q = one.clone();
    let mut g = one.clone();
    let mut r = 1u64;
    while g.is_one() {
        x = y.clone();
        for _ in 0..r {
            y = step(&y);
        }
        let mut k = 0;
        while k < r && g.is_one() {
            ys = y.clone();
            let batch = RHO_BATCH.min(r - k);
            for _ in 0..batch {
                y = step(&y);
                q = q * absdiff(&x, &y) % n;
            }
            *budget = budget.saturating_sub(batch);
            g = q.gcd(n);
            k += batch;
        }
        r *= 2;
        if g.is_one() && *budget == 0 {
            return None;
        }
    }
    if &g == n {
        // batch overshot; walk the last batch one step at a time
        loop {
            ys = step(&ys);
            g = absdiff(&x, &ys).gcd(n);
            if !g.is_one() {
                break;
            }
        }
    }
    if &g == n {
        None
    } else {
        Some(g)
    }
}

fn rho_u64(n: u64, budget: &mut u64) -> Option<u64> {
    let mut c = 1u64;
    while *budget > 0 {
        if let Some(d) = brent_u64(n, c, budget) {
            return Some(d);
        }
        c += 1;
    }
    None
}

fn brent_u64(n: u64, c: u64, budget: &mut u64) -> Option<u64> {
    let step = |v: u64| ((v as u128 * v as u128 + c as u128) % n as u128) as u64;
    let (mut x, mut y, mut ys) = (2u64, 2u64, 2u64);
    let (mut q, mut g, mut r) = (1u64, 1u64, 1u64);
    while g == 1 {
        x = y;
        for _ in 0..r {
            y = step(y);
        }
        let mut k = 0;
        while k < r && g == 1 {
            ys = y;
            let batch = RHO_BATCH.min(r - k);
            for _ in 0..batch {
                y = step(y);
                q = mul_mod(q, x.abs_diff(y), n);
            }
            *budget = budget.saturating_sub(batch);
            g = q.gcd(&n);
            k += batch;
        }
        r *= 2;
        if g == 1 && *budget == 0 {
            return None;
        }
    }
    if g == n {
        loop {
            ys = step(ys);
            g = x.abs_diff(ys).gcd(&n);
            if g != 1 {
                break;
            }
        }
    }
    (g != n).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::format;
    use std::string::ToString;

    fn big(s: &str) -> BigUint {
        s.parse().unwrap()
    }

    fn naive(mut n: u64) -> Vec<(u64, u32)> {
        let mut out = Vec::new();
        let mut p = 2;
        while p * p <= n {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
            p += 1;
        }
        if n > 1 {
            out.push((n, 1));
        }
        out
    }

    fn as_u64(f: &Factorization) -> Vec<(u64, u32)> {
        f.factors().iter().map(|(p, e)| (p.to_u64().unwrap(), *e)).collect()
    }

    #[test]
    fn primality() {
        assert!(is_prime(&BigUint::from(2u32)));
        assert!(is_prime(&BigUint::from(4_295_229_439u64)));
        assert!(!is_prime(&BigUint::from(6561u32)));
        assert!(!is_prime(&BigUint::one()));
        assert!(!is_prime(&BigUint::zero()));
        // strong pseudoprime to bases 2..37, caught by 41
        assert!(!is_prime(&big("318665857834031151167461")));
        // smallest strong pseudoprime to all 13 bases: the documented limit
        assert!(is_prime(&big("3317044064679887385961981")));
        assert!(is_prime(&big("131825214490835791")));
        assert!(is_prime(&big("170141183460469231731687303715884105727")));
        assert!(!is_prime(&(big("170141183460469231731687303715884105727") * 3u32)));
        // Carmichael numbers
        for c in [561u64, 1105, 1729, 2465, 2821, 6601, 8911] {
            assert!(!is_prime(&BigUint::from(c)), "{c}");
        }
    }

    #[test]
    fn table_style_factorizations() {
        let f = factorize(&BigInt::from(1));
        assert!(f.factors().is_empty());
        assert_eq!(f.to_string(), "1");
        assert_eq!(factorize(&BigInt::from(808_201)).to_string(), "29^2 31^2");
        assert_eq!(factorize(&BigInt::from(193_600)).to_string(), "2^6 5^2 11^2");
        let f = factorize(&BigInt::from(-12));
        assert_eq!(f.sign(), -1);
        assert_eq!(as_u64(&f), [(2, 2), (3, 1)]);
        assert_eq!(f.to_string(), "-1 2^2 3");
        let z = factorize(&BigInt::zero());
        assert_eq!(z.sign(), 0);
        assert_eq!(z.to_string(), "0");
        assert_eq!(factorize(&BigInt::from(-1)).to_string(), "-1");
    }

    #[test]
    fn large_square_of_big_primes() {
        // (4295229439 · 131825214490835791)² · 17489²
        let n = big("17489") * big("4295229439") * big("131825214490835791");
        let n = BigInt::from(&n * &n);
        let f = factorize(&n);
        assert!(f.is_complete());
        assert_eq!(f.to_string(), "17489^2 4295229439^2 131825214490835791^2");
        assert_eq!(f.value(), n);
    }

    #[test]
    fn rho_path_matches_trial_division() {
        // tiny trial bound pushes everything through rho and perfect powers
        let fz = Factorizer::new(3, 1_000_000);
        for n in (2u64..20_000).chain((999_000..1_000_000).step_by(7)) {
            let f = fz.factorize(&BigInt::from(n));
            assert!(f.is_complete(), "{n}");
            assert_eq!(as_u64(&f), naive(n), "{n}");
        }
    }

    #[test]
    fn exhausted_budget_leaves_cofactor() {
        let p = big("1000000000000000003");
        let q = big("1000000000000000009");
        let n = BigInt::from(&p * &q);
        let f = Factorizer::new(100, 10).factorize(&n);
        assert!(!f.is_complete());
        assert_eq!(f.cofactor(), Some(&(&p * &q)));
        assert_eq!(f.value(), n);
        assert_eq!(f.to_string(), format!("({})", &p * &q));
    }

    #[test]
    fn perfect_powers() {
        assert_eq!(perfect_power(&BigUint::from(6561u32)), Some((BigUint::from(81u32), 2)));
        assert_eq!(perfect_power(&BigUint::from(2u32 * 2 * 2 * 3 * 3 * 3)), Some((BigUint::from(6u32), 3)));
        assert_eq!(perfect_power(&BigUint::from(12u32)), None);
    }
}
