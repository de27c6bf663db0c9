//! Univariate polynomials over a [`Field`], coefficients stored from degree 0 up.
//!
//! Only what the idempotent machinery needs: arithmetic, evaluation and root
//! finding in the coefficient field.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::{Field, FieldKind, Scalar};

pub type Poly = Vec<Scalar>;

pub fn trim(field: &Field, mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| field.is_zero(c)) {
        p.pop();
    }
    p
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(field: &Field, p: &[Scalar]) -> Option<usize> {
    p.iter().rposition(|c| !field.is_zero(c))
}

pub fn mul(field: &Field, a: &[Scalar], b: &[Scalar]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        field.axpy(&mut out[i..i + b.len()], x, b);
    }
    trim(field, out)
}

pub fn sub(field: &Field, a: &[Scalar], b: &[Scalar]) -> Poly {
    let n = a.len().max(b.len());
    let mut out = vec![field.zero(); n];
    out[..a.len()].clone_from_slice(a);
    let minus = field.from_i64(-1);
    field.axpy(&mut out[..b.len()], &minus, b);
    trim(field, out)
}

/// Quotient and remainder; panics on division by zero.
pub fn divrem(field: &Field, a: &[Scalar], b: &[Scalar]) -> (Poly, Poly) {
    let db = degree(field, b).expect("division by the zero polynomial");
    let lead_inv = field.inv(&b[db]);
    let mut r = trim(field, a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![field.zero(); r.len() - db];
    while let Some(dr) = degree(field, &r) {
        if dr < db {
            break;
        }
        let c = field.mul(&r[dr], &lead_inv);
        let shift = dr - db;
        let neg = field.neg(&c);
        field.axpy(&mut r[shift..shift + db + 1], &neg, &b[..=db]);
        q[shift] = c;
        r = trim(field, r);
    }
    (trim(field, q), r)
}

pub fn monic(field: &Field, p: &[Scalar]) -> Poly {
    match degree(field, p) {
        None => Vec::new(),
        Some(d) => {
            let inv = field.inv(&p[d]);
            p[..=d].iter().map(|c| field.mul(c, &inv)).collect()
        }
    }
}

pub fn gcd(field: &Field, a: &[Scalar], b: &[Scalar]) -> Poly {
    let mut a = trim(field, a.to_vec());
    let mut b = trim(field, b.to_vec());
    while !b.is_empty() {
        let (_, r) = divrem(field, &a, &b);
        a = b;
        b = r;
    }
    monic(field, &a)
}

pub fn eval(field: &Field, p: &[Scalar], x: &Scalar) -> Scalar {
    let mut acc = field.zero();
    for c in p.iter().rev() {
        acc = field.add(&field.mul(&acc, x), c);
    }
    acc
}

/// `base^e mod m`.
pub fn pow_mod(field: &Field, base: &[Scalar], mut e: u64, m: &[Scalar]) -> Poly {
    let mut acc = vec![field.one()];
    let mut b = divrem(field, base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(field, &mul(field, &acc, &b), m).1;
        }
        b = divrem(field, &mul(field, &b, &b), m).1;
        e >>= 1;
    }
    acc
}

/// Divides out the linear factor `t - r`.
pub fn deflate(field: &Field, p: &[Scalar], r: &Scalar) -> Poly {
    let lin = vec![field.neg(r), field.one()];
    divrem(field, p, &lin).0
}

/// Roots lying in the coefficient field, in increasing encoding order
/// (finite fields) or by increasing height (rationals). Multiplicities are
/// not reported.
pub fn roots(field: &Field, p: &[Scalar]) -> Vec<Scalar> {
    let p = trim(field, p.to_vec());
    if degree(field, &p).unwrap_or(0) == 0 {
        return Vec::new();
    }
    match field.kind() {
        FieldKind::Rationals => rational_roots(field, &p),
        _ => finite_roots(field, &p),
    }
}

const ENUMERATION_LIMIT: u64 = 1 << 16;

fn finite_roots(field: &Field, p: &[Scalar]) -> Vec<Scalar> {
    let q = field.order().expect("finite field");
    if q <= ENUMERATION_LIMIT {
        return field
            .elements()
            .expect("finite field")
            .filter(|x| field.is_zero(&eval(field, p, x)))
            .collect();
    }
    // Large odd q: restrict to the split part gcd(p, t^q - t) and separate
    // roots with gcd(g, (t + a)^((q-1)/2) - 1) for a = 0, 1, 2, ...
    let t = vec![field.zero(), field.one()];
    let tq = pow_mod(field, &t, q, p);
    let split = gcd(field, p, &sub(field, &tq, &t));
    let mut out = Vec::new();
    let mut stack = vec![split];
    while let Some(g) = stack.pop() {
        match degree(field, &g) {
            None | Some(0) => continue,
            Some(1) => {
                let g = monic(field, &g);
                out.push(field.neg(&g[0]));
                continue;
            }
            _ => {}
        }
        let mut a = 0i64;
        loop {
            let shifted = vec![field.from_i64(a), field.one()];
            let h = pow_mod(field, &shifted, (q - 1) / 2, &g);
            let d = gcd(field, &g, &sub(field, &h, &[field.one()]));
            let dd = degree(field, &d).unwrap_or(0);
            if dd > 0 && Some(dd) != degree(field, &g) {
                let (rest, _) = divrem(field, &g, &d);
                stack.push(d);
                stack.push(rest);
                break;
            }
            a += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}

fn rational_roots(field: &Field, p: &[Scalar]) -> Vec<Scalar> {
    // Clear denominators to get integer coefficients.
    let mut lcm = BigInt::one();
    for c in p {
        lcm = lcm.lcm(field.rational_value(c).denom());
    }
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (field.rational_value(c) * num_rational::BigRational::from(lcm.clone())).to_integer())
        .collect();
    let mut out = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        out.push(field.zero());
    }
    let ints = &ints[low..];
    if ints.len() <= 1 {
        return out;
    }
    let (Some(a0), Some(an)) = (
        ints[0].abs().to_u64(),
        ints[ints.len() - 1].abs().to_u64(),
    ) else {
        return out;
    };
    let reduced: Poly = p[low..].to_vec();
    let mut cands: Vec<Scalar> = Vec::new();
    for num in divisors(a0) {
        for den in divisors(an) {
            for sign in [1i64, -1] {
                let (Ok(n), Ok(d)) = (i64::try_from(num), i64::try_from(den)) else {
                    continue;
                };
                cands.push(field.rational(sign * n, d).expect("nonzero denominator"));
            }
        }
    }
    cands.sort_by_key(|c| (field.height(c), c.clone()));
    cands.dedup();
    for c in cands {
        if field.is_zero(&eval(field, &reduced, &c)) {
            out.push(c);
        }
    }
    out
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_and_gcd() {
        let f = Field::gf(5).unwrap();
        let p: Poly = [4, 0, 1].iter().map(|&c| f.from_i64(c)).collect(); // t^2 - 1
        let lin: Poly = vec![f.from_i64(4), f.one()]; // t - 1
        let (q, r) = divrem(&f, &p, &lin);
        assert!(r.is_empty());
        assert_eq!(q, vec![f.one(), f.one()]);
        assert_eq!(gcd(&f, &p, &lin), lin);
    }

    #[test]
    fn roots_over_prime_and_rationals() {
        let f = Field::gf(7).unwrap();
        let p: Poly = [6, 0, 1].iter().map(|&c| f.from_i64(c)).collect(); // t^2 - 1
        assert_eq!(roots(&f, &p), vec![f.from_i64(1), f.from_i64(6)]);

        let q = Field::rationals();
        // 2t^2 - 3t + 1 = (2t - 1)(t - 1)
        let p: Poly = [1, -3, 2].iter().map(|&c| q.from_i64(c)).collect();
        let r = roots(&q, &p);
        assert_eq!(r.len(), 2);
        assert!(r.contains(&q.rational(1, 2).unwrap()));
        assert!(r.contains(&q.one()));
        // t^2 - 2 has no rational root
        let p: Poly = [-2, 0, 1].iter().map(|&c| q.from_i64(c)).collect();
        assert!(roots(&q, &p).is_empty());
    }

    #[test]
    fn roots_in_large_field_by_splitting() {
        let f = Field::gf_pow(97, 3).unwrap();
        let a = f.generator();
        let b = f.add(&a, &f.one());
        // (t - a)(t - b)(t - 5)
        let mut p = vec![f.one()];
        for r in [a.clone(), b.clone(), f.from_i64(5)] {
            p = mul(&f, &p, &[f.neg(&r), f.one()]);
        }
        let mut expect = vec![a, b, f.from_i64(5)];
        expect.sort();
        assert_eq!(roots(&f, &p), expect);
    }
}
