//! Scalar fields: prime fields GF(p), extensions GF(p^k) and the rationals.
//!
//! Elements of a finite field are encoded as a single `u64`: for GF(p) the
//! residue itself, for GF(p^k) the base-p digits `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! of the polynomial `c_0 + c_1 w + ...` reduced modulo the defining
//! polynomial. Rationals are arbitrary precision and always in lowest terms,
//! so equality of scalars is structural.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest prime accepted for finite fields.
pub const MAX_PRIME: u64 = 97;
/// Largest extension degree accepted for GF(p^k).
pub const MAX_DEGREE: u32 = 8;
/// Extension fields up to this order get precomputed operation tables.
const TABLE_LIMIT: u64 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FieldKind {
    Prime,
    PrimePower,
    Rationals,
}

/// Description of a field. Every representable field is perfect.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub kind: FieldKind,
    /// Characteristic; zero for the rationals.
    pub p: u64,
    /// Degree over the prime field (1 for GF(p) and for the rationals).
    pub k: u32,
    /// Monic defining polynomial, coefficients from degree 0 up to degree k.
    /// Empty unless `kind == PrimePower`.
    pub modulus: Vec<u64>,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(FieldSpec {
            kind: FieldKind::Prime,
            p,
            k: 1,
            modulus: Vec::new(),
        })
    }

    /// GF(p^k) defined by the lexicographically least monic irreducible of
    /// degree k, comparing coefficient vectors from `x^{k-1}` down to `x^0`.
    pub fn prime_power(p: u64, k: u32) -> Result<Self> {
        check_prime(p)?;
        if k == 0 || k > MAX_DEGREE {
            return Err(Error::Field(format!(
                "extension degree {k} outside 1..={MAX_DEGREE}"
            )));
        }
        if k == 1 {
            return Self::prime(p);
        }
        let modulus = least_irreducible(p, k);
        Ok(FieldSpec {
            kind: FieldKind::PrimePower,
            p,
            k,
            modulus,
        })
    }

    /// GF(p^k) with an explicit monic modulus (coefficients low to high).
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        check_prime(p)?;
        if modulus.len() < 3 {
            return Err(Error::Field(
                "modulus must have degree at least 2".to_string(),
            ));
        }
        let k = (modulus.len() - 1) as u32;
        if k > MAX_DEGREE {
            return Err(Error::Field(format!(
                "extension degree {k} outside 1..={MAX_DEGREE}"
            )));
        }
        if *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::Field(
                "modulus must be monic with coefficients in 0..p".to_string(),
            ));
        }
        if !is_irreducible_mod_p(&modulus, p) {
            return Err(Error::Field(format!(
                "modulus {modulus:?} is reducible over GF({p})"
            )));
        }
        Ok(FieldSpec {
            kind: FieldKind::PrimePower,
            p,
            k,
            modulus,
        })
    }

    pub fn rationals() -> Self {
        FieldSpec {
            kind: FieldKind::Rationals,
            p: 0,
            k: 1,
            modulus: Vec::new(),
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if p < 2 || !is_prime(p) {
        return Err(Error::Field(format!("{p} is not prime")));
    }
    if p > MAX_PRIME {
        return Err(Error::Field(format!("prime {p} exceeds limit {MAX_PRIME}")));
    }
    Ok(())
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of some [`Field`]. Only meaningful together with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Fin(u64),
    Rat(BigRational),
}

struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

struct FieldData {
    spec: FieldSpec,
    /// Field order for finite fields, 0 for the rationals.
    order: u64,
    tables: Option<Tables>,
}

/// Shared handle to a field. Cheap to clone; compares by specification.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}
impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.spec.hash(state)
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.0.spec;
        match s.kind {
            FieldKind::Prime => write!(f, "GF({})", s.p),
            FieldKind::PrimePower => write!(f, "GF({}^{})", s.p, s.k),
            FieldKind::Rationals => write!(f, "Q"),
        }
    }
}

impl Field {
    pub fn new(spec: FieldSpec) -> Field {
        let order = match spec.kind {
            FieldKind::Rationals => 0,
            _ => spec.p.pow(spec.k),
        };
        let mut data = FieldData {
            spec,
            order,
            tables: None,
        };
        if data.spec.kind == FieldKind::PrimePower && order <= TABLE_LIMIT {
            data.tables = Some(build_tables(&data));
        }
        Field(Arc::new(data))
    }

    pub fn gf(p: u64) -> Result<Field> {
        Ok(Field::new(FieldSpec::prime(p)?))
    }

    pub fn gf_pow(p: u64, k: u32) -> Result<Field> {
        Ok(Field::new(FieldSpec::prime_power(p, k)?))
    }

    pub fn rationals() -> Field {
        Field::new(FieldSpec::rationals())
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn kind(&self) -> FieldKind {
        self.0.spec.kind
    }

    pub fn characteristic(&self) -> u64 {
        self.0.spec.p
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.0.spec.k
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        match self.kind() {
            FieldKind::Rationals => None,
            _ => Some(self.0.order),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.kind() != FieldKind::Rationals
    }

    /// The prime subfield as a field of its own.
    pub fn prime_field(&self) -> Field {
        match self.kind() {
            FieldKind::PrimePower => Field::gf(self.characteristic()).expect("valid prime"),
            _ => self.clone(),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self.kind() {
            FieldKind::Rationals => Scalar::Rat(BigRational::zero()),
            _ => Scalar::Fin(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self.kind() {
            FieldKind::Rationals => Scalar::Rat(BigRational::one()),
            _ => Scalar::Fin(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self.kind() {
            FieldKind::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            _ => {
                let p = self.characteristic() as i64;
                Scalar::Fin(n.rem_euclid(p) as u64)
            }
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self.kind() {
            FieldKind::Rationals => Scalar::Rat(BigRational::from_integer(n.clone())),
            _ => {
                let p = BigInt::from(self.characteristic());
                let r = n.mod_floor(&p);
                Scalar::Fin(r.to_u64().expect("residue fits"))
            }
        }
    }

    pub fn rational(&self, num: i64, den: i64) -> Result<Scalar> {
        if den == 0 {
            return Err(Error::Field("zero denominator".to_string()));
        }
        match self.kind() {
            FieldKind::Rationals => Ok(Scalar::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            _ => {
                let d = self.from_i64(den);
                if self.is_zero(&d) {
                    return Err(Error::Field(format!(
                        "denominator {den} vanishes in {self}"
                    )));
                }
                Ok(self.div(&self.from_i64(num), &d))
            }
        }
    }

    /// Element with the given polynomial coefficients (low to high) in the
    /// generator of an extension field. For prime fields and the rationals
    /// only a single coefficient is allowed.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<Scalar> {
        match self.kind() {
            FieldKind::PrimePower => {
                let k = self.degree() as usize;
                if coeffs.len() > k {
                    return Err(Error::Field(format!(
                        "{} coefficients given for an extension of degree {k}",
                        coeffs.len()
                    )));
                }
                let p = self.characteristic();
                let digits: Vec<u64> = coeffs
                    .iter()
                    .map(|c| c.rem_euclid(p as i64) as u64)
                    .collect();
                Ok(Scalar::Fin(encode(&digits, p)))
            }
            _ => match coeffs {
                [] => Ok(self.zero()),
                [c] => Ok(self.from_i64(*c)),
                _ => Err(Error::Field(format!(
                    "coefficient lists are only meaningful over extension fields, not {self}"
                ))),
            },
        }
    }

    /// Coefficients (low to high) of an extension-field element over the prime field.
    pub fn coeffs(&self, a: &Scalar) -> Vec<u64> {
        let v = self.fin(a);
        decode(v, self.characteristic(), self.degree() as usize)
    }

    /// The generator `w` of an extension field (the class of `x`).
    pub fn generator(&self) -> Scalar {
        match self.kind() {
            FieldKind::PrimePower => Scalar::Fin(self.characteristic()),
            _ => self.one(),
        }
    }

    #[inline]
    fn fin(&self, a: &Scalar) -> u64 {
        match a {
            Scalar::Fin(v) => *v,
            Scalar::Rat(_) => panic!("rational scalar used in {self}"),
        }
    }

    #[inline]
    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fin(v) => *v == 0,
            Scalar::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Fin(v) => *v == 1,
            Scalar::Rat(r) => r.is_one(),
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(self.add_fin(*x, *y)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match a {
            Scalar::Rat(x) => Scalar::Rat(-x),
            Scalar::Fin(x) => Scalar::Fin(self.neg_fin(*x)),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (a, b) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(self.mul_fin(*x, *y)),
            _ => panic!("mixed scalar kinds"),
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Scalar) -> Scalar {
        assert!(!self.is_zero(a), "inverse of zero in {self}");
        match a {
            Scalar::Rat(x) => Scalar::Rat(x.recip()),
            Scalar::Fin(x) => Scalar::Fin(self.inv_fin(*x)),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.mul(a, &self.inv(b))
    }

    pub fn pow(&self, a: &Scalar, mut e: u64) -> Scalar {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `y += a * x` entrywise.
    pub fn axpy(&self, y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
        debug_assert_eq!(y.len(), x.len());
        if self.is_zero(a) {
            return;
        }
        match (self.kind(), a) {
            (FieldKind::Prime, Scalar::Fin(a)) => {
                let p = self.characteristic();
                for (yi, xi) in y.iter_mut().zip(x) {
                    if let (Scalar::Fin(yv), Scalar::Fin(xv)) = (&mut *yi, xi) {
                        if *xv != 0 {
                            *yv = (*yv + a * xv) % p;
                        }
                    }
                }
            }
            _ => {
                for (yi, xi) in y.iter_mut().zip(x) {
                    if !self.is_zero(xi) {
                        *yi = self.add(yi, &self.mul(a, xi));
                    }
                }
            }
        }
    }

    /// All elements in increasing encoding order (finite fields only).
    pub fn elements(&self) -> Option<impl Iterator<Item = Scalar>> {
        self.order().map(|q| (0..q).map(Scalar::Fin))
    }

    fn add_fin(&self, x: u64, y: u64) -> u64 {
        let d = &self.0;
        match d.spec.kind {
            FieldKind::Prime => (x + y) % d.spec.p,
            _ => match &d.tables {
                Some(t) => t.add[(x * d.order + y) as usize] as u64,
                None => add_digits(x, y, d.spec.p, d.spec.k as usize),
            },
        }
    }

    fn neg_fin(&self, x: u64) -> u64 {
        let d = &self.0;
        match d.spec.kind {
            FieldKind::Prime => (d.spec.p - x) % d.spec.p,
            _ => match &d.tables {
                Some(t) => t.neg[x as usize] as u64,
                None => neg_digits(x, d.spec.p, d.spec.k as usize),
            },
        }
    }

    fn mul_fin(&self, x: u64, y: u64) -> u64 {
        let d = &self.0;
        match d.spec.kind {
            FieldKind::Prime => (x * y) % d.spec.p,
            _ => match &d.tables {
                Some(t) => t.mul[(x * d.order + y) as usize] as u64,
                None => mul_poly(x, y, &d.spec),
            },
        }
    }

    fn inv_fin(&self, x: u64) -> u64 {
        let d = &self.0;
        match d.spec.kind {
            FieldKind::Prime => pow_mod(x, d.spec.p - 2, d.spec.p),
            _ => match &d.tables {
                Some(t) => t.inv[x as usize] as u64,
                None => {
                    // x^(q-2)
                    let mut e = d.order - 2;
                    let mut base = x;
                    let mut acc = 1;
                    while e > 0 {
                        if e & 1 == 1 {
                            acc = mul_poly(acc, base, &d.spec);
                        }
                        base = mul_poly(base, base, &d.spec);
                        e >>= 1;
                    }
                    acc
                }
            },
        }
    }

    /// Textual form: integers for prime fields, `num/den` for rationals,
    /// coefficient tuples `(c0,c1,..)` for extension elements outside the prime field.
    pub fn format(&self, a: &Scalar) -> String {
        match a {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fin(v) => match self.kind() {
                FieldKind::PrimePower => {
                    let c = self.coeffs(a);
                    if c[1..].iter().all(|&x| x == 0) {
                        c[0].to_string()
                    } else {
                        let parts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                        format!("({})", parts.join(","))
                    }
                }
                _ => v.to_string(),
            },
        }
    }

    /// Inverse of [`Field::format`]; also accepts plain integers everywhere.
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        let bad = || Error::Parse(format!("cannot read '{s}' as an element of {self}"));
        if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            let coeffs = inner
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| bad())?;
            return self.from_coeffs(&coeffs).map_err(|_| bad());
        }
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|_| bad())?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            return self.rational(n, d).map_err(|_| bad());
        }
        match self.kind() {
            FieldKind::Rationals => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
            _ => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(self.from_bigint(&n))
            }
        }
    }

    /// Integer lift in `0..p` of a prime-field element.
    pub fn residue(&self, a: &Scalar) -> u64 {
        self.fin(a)
    }

    /// The rational value, panicking outside characteristic zero.
    pub fn rational_value<'a>(&self, a: &'a Scalar) -> &'a BigRational {
        match a {
            Scalar::Rat(r) => r,
            Scalar::Fin(_) => panic!("finite field scalar used as rational"),
        }
    }

    /// True if the element lies in the prime subfield.
    pub fn in_prime_field(&self, a: &Scalar) -> bool {
        match self.kind() {
            FieldKind::PrimePower => self.coeffs(a)[1..].iter().all(|&c| c == 0),
            _ => true,
        }
    }

    /// `|a|`-style size used only for deterministic ordering of rationals.
    pub fn height(&self, a: &Scalar) -> u64 {
        match a {
            Scalar::Fin(v) => *v,
            Scalar::Rat(r) => {
                let n = r.numer().abs().to_u64().unwrap_or(u64::MAX);
                let d = r.denom().to_u64().unwrap_or(u64::MAX);
                n.saturating_add(d)
            }
        }
    }
}

fn build_tables(d: &FieldData) -> Tables {
    let q = d.order;
    let (p, k) = (d.spec.p, d.spec.k as usize);
    let mut add = vec![0u32; (q * q) as usize];
    let mut mul = vec![0u32; (q * q) as usize];
    let mut neg = vec![0u32; q as usize];
    let mut inv = vec![0u32; q as usize];
    for x in 0..q {
        neg[x as usize] = neg_digits(x, p, k) as u32;
        for y in 0..q {
            add[(x * q + y) as usize] = add_digits(x, y, p, k) as u32;
            let m = mul_poly(x, y, &d.spec);
            mul[(x * q + y) as usize] = m as u32;
            if m == 1 {
                inv[x as usize] = y as u32;
            }
        }
    }
    Tables { add, mul, neg, inv }
}

fn decode(mut v: u64, p: u64, k: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(k);
    for _ in 0..k {
        out.push(v % p);
        v /= p;
    }
    out
}

fn encode(digits: &[u64], p: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * p + d)
}

fn add_digits(x: u64, y: u64, p: u64, k: usize) -> u64 {
    let a = decode(x, p, k);
    let b = decode(y, p, k);
    let s: Vec<u64> = a.iter().zip(&b).map(|(u, v)| (u + v) % p).collect();
    encode(&s, p)
}

fn neg_digits(x: u64, p: u64, k: usize) -> u64 {
    let a = decode(x, p, k);
    let s: Vec<u64> = a.iter().map(|u| (p - u) % p).collect();
    encode(&s, p)
}

fn mul_poly(x: u64, y: u64, spec: &FieldSpec) -> u64 {
    let (p, k) = (spec.p, spec.k as usize);
    let a = decode(x, p, k);
    let b = decode(y, p, k);
    let mut prod = vec![0u64; 2 * k - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // reduce modulo the monic modulus
    for deg in (k..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (t, &m) in spec.modulus[..k].iter().enumerate() {
            let idx = deg - k + t;
            prod[idx] = (prod[idx] + (p - c) * m) % p;
        }
    }
    encode(&prod[..k], p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

// ---- polynomials over GF(p) with u64 coefficients, used to vet moduli ----

fn trim(v: &mut Vec<u64>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn poly_rem_p(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = pow_mod(m[dm], p - 2, p);
    while r.len() > dm && !(r.len() == 1 && r[0] == 0) {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for (i, &mi) in m.iter().enumerate() {
            let idx = dr - dm + i;
            r[idx] = (r[idx] + (p - c) * mi % p) % p;
        }
        trim(&mut r);
        if r.len() - 1 < dm {
            break;
        }
    }
    r
}

fn poly_mulmod_p(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    poly_rem_p(&prod, m, p)
}

fn poly_gcd_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = poly_rem_p(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Ben-Or style irreducibility test: `f` of degree k is irreducible over GF(p)
/// iff `gcd(x^{p^i} - x, f) = 1` for all `1 <= i <= k/2`.
pub(crate) fn is_irreducible_mod_p(f: &[u64], p: u64) -> bool {
    let k = f.len() - 1;
    if k == 0 {
        return false;
    }
    if k == 1 {
        return true;
    }
    let x = vec![0, 1];
    let mut xp = x.clone();
    for _ in 1..=k / 2 {
        // xp <- xp^p mod f
        let mut acc = vec![1u64];
        let mut base = xp.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = poly_mulmod_p(&acc, &base, f, p);
            }
            base = poly_mulmod_p(&base, &base, f, p);
            e >>= 1;
        }
        xp = acc;
        let mut diff = xp.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(&mut diff);
        let g = poly_gcd_p(f, &diff, p);
        if g.len() > 1 {
            return false;
        }
        if g.len() == 1 && g[0] == 0 {
            // x^{p^i} == x mod f: f has a factor of degree dividing i
            return false;
        }
    }
    true
}

fn least_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    let total = p.pow(k as u32);
    for idx in 0..total {
        // idx's base-p digits, most significant first, are c_{k-1} .. c_0
        let mut coeffs = vec![0u64; k + 1];
        let mut v = idx;
        for c in coeffs.iter_mut().take(k) {
            *c = v % p;
            v /= p;
        }
        coeffs[k] = 1;
        if coeffs[0] == 0 {
            continue;
        }
        if is_irreducible_mod_p(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Fin(v) => write!(f, "{v}"),
            Scalar::Rat(r) => write!(f, "{r}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force irreducibility: no monic factor of degree 1..=k/2.
    fn brute_irreducible(f: &[u64], p: u64) -> bool {
        let k = f.len() - 1;
        for d in 1..=k / 2 {
            for idx in 0..p.pow(d as u32) {
                let mut g = vec![0u64; d + 1];
                let mut v = idx;
                for c in g.iter_mut().take(d) {
                    *c = v % p;
                    v /= p;
                }
                g[d] = 1;
                let r = poly_rem_p(f, &g, p);
                if r.len() == 1 && r[0] == 0 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(101).is_err());
        assert!(FieldSpec::prime_power(2, 9).is_err());
        assert!(FieldSpec::with_modulus(2, vec![1, 0, 1]).is_err()); // x^2+1 = (x+1)^2
    }

    #[test]
    fn least_moduli() {
        assert_eq!(FieldSpec::prime_power(2, 2).unwrap().modulus, vec![1, 1, 1]);
        assert_eq!(FieldSpec::prime_power(2, 3).unwrap().modulus, vec![1, 1, 0, 1]);
        assert_eq!(FieldSpec::prime_power(3, 2).unwrap().modulus, vec![1, 0, 1]);
    }

    #[test]
    fn ben_or_matches_brute_force() {
        for p in [2u64, 3, 5] {
            for k in 2..=4usize {
                for idx in 0..p.pow(k as u32) {
                    let mut f = vec![0u64; k + 1];
                    let mut v = idx;
                    for c in f.iter_mut().take(k) {
                        *c = v % p;
                        v /= p;
                    }
                    f[k] = 1;
                    assert_eq!(
                        is_irreducible_mod_p(&f, p),
                        brute_irreducible(&f, p),
                        "p={p} f={f:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn gf4_arithmetic() {
        let f = Field::gf_pow(2, 2).unwrap();
        let w = f.generator();
        // w^2 = w + 1
        let w2 = f.mul(&w, &w);
        assert_eq!(w2, f.add(&w, &f.one()));
        assert_eq!(f.pow(&w, 3), f.one());
        for a in f.elements().unwrap().skip(1) {
            assert!(f.is_one(&f.mul(&a, &f.inv(&a))));
        }
    }

    #[test]
    fn untabled_extension_matches_tables() {
        // GF(3^6) = 729 elements, beyond the table limit
        let f = Field::gf_pow(3, 6).unwrap();
        let w = f.generator();
        assert_eq!(f.pow(&w, 728), f.one());
        let a = f.from_coeffs(&[1, 2, 0, 1]).unwrap();
        assert!(f.is_one(&f.mul(&a, &f.inv(&a))));
    }

    #[test]
    fn format_parse_round_trip() {
        let f = Field::gf_pow(2, 2).unwrap();
        for a in f.elements().unwrap() {
            assert_eq!(f.parse(&f.format(&a)).unwrap(), a);
        }
        let q = Field::rationals();
        let x = q.rational(-6, 4).unwrap();
        assert_eq!(q.format(&x), "-3/2");
        assert_eq!(q.parse("-3/2").unwrap(), x);
        assert!(Field::gf(3).unwrap().parse("1/3").is_err());
    }
}
