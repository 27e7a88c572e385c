//! Exact-arithmetic counting: how many equations there are of each
//! `(k1, k2)` class, how many irreducible components each class yields,
//! and the average component count with its closed form.

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::semilattice::{Equation, Term};

/// A valid `(k1, k2)` class of equations in `n` variables: `k1 + k2 <= n`
/// and `(k1, k2)` is neither `(n, 0)` nor `(0, n)` (one side would be
/// empty).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KIndex {
    k1: u32,
    k2: u32,
    n: u32,
}

impl KIndex {
    pub fn new(k1: u32, k2: u32, n: u32) -> Result<Self> {
        let invalid = k1 + k2 > n || (k1 == n && k2 == 0 && n > 0) || (k1 == 0 && k2 == n && n > 0);
        if invalid {
            return Err(Error::InvalidKIndex { k1, k2, n });
        }
        Ok(Self { k1, k2, n })
    }

    pub fn k1(&self) -> u32 {
        self.k1
    }

    pub fn k2(&self) -> u32 {
        self.k2
    }

    pub fn n(&self) -> u32 {
        self.n
    }
}

/// All members of `K_n` in ascending `(k1, k2)` order.
pub fn k_indices(n: u32) -> Vec<KIndex> {
    let mut out = Vec::new();
    for k1 in 0..=n {
        for k2 in 0..=n.saturating_sub(k1) {
            if let Ok(k) = KIndex::new(k1, k2, n) {
                out.push(k);
            }
        }
    }
    out
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `#Eq(k1, k2, n) = C(n, k1) * C(n - k1, k2)`.
pub fn eq_count(k: &KIndex) -> BigInt {
    binomial(k.n, k.k1) * binomial(k.n - k.k1, k.k2)
}

/// `#Eq(n) = 3^n - 2`.
pub fn eq_total(n: u32) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::OutOfDomain("eq_total requires n >= 1".into()));
    }
    Ok(BigInt::from(3u32).pow(n) - 2)
}

/// `Irr(k1, k2, n) = (n - k1 - k2)(n-1)! + k1*k2*(n-2)!`.
///
/// For n = 1 (and generally whenever `k1*k2 = 0`) the second term is
/// zero, so the `(n-2)!` factor is never needed when it would be
/// undefined.
pub fn irr_formula(k: &KIndex) -> BigInt {
    let first = BigInt::from(k.n - k.k1 - k.k2) * factorial(k.n.saturating_sub(1));
    if k.k1 == 0 || k.k2 == 0 {
        return first;
    }
    first + BigInt::from(k.k1) * BigInt::from(k.k2) * factorial(k.n - 2)
}

/// Closed form of the average component count:
/// `Irr̄(n) = 4 * n! * 3^(n-2) / (3^n - 2)`.
pub fn avg_irr(n: u32) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::OutOfDomain("avg_irr requires n >= 2".into()));
    }
    let numerator = BigInt::from(4u32) * factorial(n) * BigInt::from(3u32).pow(n - 2);
    Ok(BigRational::new(numerator, eq_total(n)?))
}

/// The same average by explicit summation over `K_n`:
/// `Σ #Eq(k1,k2,n) * Irr(k1,k2,n) / #Eq(n)`. Independent route used to
/// validate the closed form.
pub fn avg_irr_by_sum(n: u32) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::OutOfDomain("avg_irr_by_sum requires n >= 2".into()));
    }
    let total: BigInt = k_indices(n)
        .iter()
        .map(|k| eq_count(k) * irr_formula(k))
        .sum();
    Ok(BigRational::new(total, eq_total(n)?))
}

/// Checks `Σ_{t=0}^{n} C(n,t) * t * 2^t = 2n * 3^(n-1)` exactly.
pub fn binomial_identity_check(n: u32) -> bool {
    let lhs: BigInt = (0..=n)
        .map(|t| binomial(n, t) * BigInt::from(t) * BigInt::from(2u32).pow(t))
        .sum();
    let rhs = if n == 0 {
        BigInt::zero()
    } else {
        BigInt::from(2 * n) * BigInt::from(3u32).pow(n - 1)
    };
    lhs == rhs
}

/// All of `Eq(n)`: ordered pairs `(t, s)` of nonempty terms whose
/// variables jointly cover `{1..n}`, in ascending (lhs-mask, rhs-mask)
/// order.
pub fn enumerate_eq(n: u32) -> Result<Vec<Equation>> {
    if n < 1 {
        return Err(Error::OutOfDomain("enumerate_eq requires n >= 1".into()));
    }
    if n > 12 {
        return Err(Error::GuardViolation(format!(
            "enumerate_eq: n={n} exceeds guard of 12"
        )));
    }
    let full = (1u32 << n) - 1;
    let mut out = Vec::new();
    for tm in 1..=full {
        for sm in 1..=full {
            if tm | sm == full {
                out.push(Equation::new(Term::from_mask(tm)?, Term::from_mask(sm)?));
            }
        }
    }
    Ok(out)
}

/// `Irr̄(n) / n!` as an exact rational; converges to 4/9, with
/// `|ratio - 4/9| = (8/9) / (3^n - 2)` exactly.
pub fn asymptotic_ratio(n: u32) -> Result<BigRational> {
    Ok(avg_irr(n)? / BigRational::from_integer(factorial(n)))
}

/// Decimal rendering of a rational with `sig` significant digits,
/// rounded half-up.
pub fn decimal_string(r: &BigRational, sig: usize) -> String {
    assert!(sig > 0);
    if r.is_zero() {
        return "0".into();
    }
    let negative = r.numer().sign() == Sign::Minus;
    let num = r.numer().abs();
    let den = r.denom().clone();
    // exponent: position of the leading digit relative to the decimal point
    let mut exp: i64 = 0;
    let ten = BigInt::from(10u32);
    let mut scaled_num = num.clone();
    let mut scaled_den = den.clone();
    while scaled_num < scaled_den {
        scaled_num *= &ten;
        exp -= 1;
    }
    while scaled_num >= &scaled_den * &ten {
        scaled_den *= &ten;
        exp += 1;
    }
    // now 1 <= scaled_num/scaled_den < 10; extract `sig` digits, rounded
    let mut digits = (&scaled_num * ten.pow(sig as u32 - 1)) / &scaled_den;
    let rem = (&scaled_num * ten.pow(sig as u32 - 1)) % &scaled_den;
    if &rem * BigInt::from(2u32) >= scaled_den {
        digits += 1;
    }
    let mut digit_str = digits.to_string();
    if digit_str.len() > sig {
        // rounding carried over, e.g. 9.99 -> 10.0
        digit_str.truncate(sig);
        exp += 1;
    }
    let mut s = String::new();
    if negative {
        s.push('-');
    }
    if exp >= 0 && (exp as usize) < sig {
        let point = exp as usize + 1;
        s.push_str(&digit_str[..point]);
        if point < digit_str.len() {
            s.push('.');
            s.push_str(&digit_str[point..]);
        }
    } else if (-4..0).contains(&exp) {
        s.push_str("0.");
        for _ in 0..(-exp - 1) {
            s.push('0');
        }
        s.push_str(&digit_str);
    } else {
        s.push_str(&digit_str[..1]);
        if digit_str.len() > 1 {
            s.push('.');
            s.push_str(&digit_str[1..]);
        }
        s.push_str(&format!("e{exp}"));
    }
    s
}

/// Summary statistics for `Eq(n)`, serialized as
/// `{n, avg_irr: {num, den}, decimal, total_equations}`.
#[derive(Debug, Clone, Serialize)]
pub struct Stats {
    pub n: u32,
    pub avg_irr: Fraction,
    /// 12 significant digits.
    pub decimal: String,
    pub total_equations: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Fraction {
    pub num: String,
    pub den: String,
}

pub fn stats(n: u32) -> Result<Stats> {
    let avg = avg_irr(n)?;
    Ok(Stats {
        n,
        avg_irr: Fraction {
            num: avg.numer().to_string(),
            den: avg.denom().to_string(),
        },
        decimal: decimal_string(&avg, 12),
        total_equations: eq_total(n)?.to_string(),
    })
}
