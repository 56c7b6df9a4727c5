//! Exact arithmetic in cyclotomic fields `Q(zeta_N)`.
//!
//! An element is stored as its coordinate vector over the power basis
//! `1, zeta, ..., zeta^(phi(N)-1)`, i.e. as a polynomial reduced modulo the
//! `N`-th cyclotomic polynomial. Values of different orders can be mixed
//! freely: binary operations promote both operands to the least common
//! multiple of their orders.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{FieldError, Rational};

/// The field `Q(zeta_N)` together with cached reduction data.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u64,
    degree: usize,
    /// `Phi_N`, lowest coefficient first.
    modulus: Vec<BigInt>,
    /// `powers[e]` is `x^e mod Phi_N` for `0 <= e < N`.
    powers: Vec<Vec<Rational>>,
    /// The same, as integers (`Phi_N` is monic).
    int_powers: Vec<Vec<BigInt>>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for CyclotomicField {}

static FIELDS: LazyLock<Mutex<HashMap<u64, Arc<CyclotomicField>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

impl CyclotomicField {
    /// Shared handle for `Q(zeta_order)`. Fields are interned, so two handles
    /// of the same order are pointer-equal.
    pub fn get(order: u64) -> Arc<CyclotomicField> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let mut cache = FIELDS.lock().unwrap_or_else(|e| e.into_inner());
        cache
            .entry(order)
            .or_insert_with(|| Arc::new(CyclotomicField::build(order)))
            .clone()
    }

    fn build(order: u64) -> Self {
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut current = vec![Rational::zero(); degree];
        current[0] = Rational::one();
        for _ in 0..order {
            powers.push(current.clone());
            // multiply by x and reduce the overflow coefficient
            let top = current[degree - 1].clone();
            for idx in (1..degree).rev() {
                current[idx] = current[idx - 1].clone();
            }
            current[0] = Rational::zero();
            if !top.is_zero() {
                for (idx, c) in current.iter_mut().enumerate() {
                    *c -= &top * Rational::from_integer(modulus[idx].clone());
                }
            }
        }
        let int_powers = powers
            .iter()
            .map(|p| p.iter().map(|c| c.to_integer()).collect())
            .collect();
        CyclotomicField {
            order,
            degree,
            modulus,
            powers,
            int_powers,
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Euler phi of the order: the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of `Phi_N`, constant term first.
    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }

    fn power(&self, exponent: u64) -> &[Rational] {
        &self.powers[(exponent % self.order) as usize]
    }
}

/// Integer numerators over a common denominator.
fn clear_denominators(coeffs: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = coeffs.iter().fold(BigInt::one(), |acc, c| {
        if c.denom().is_one() {
            acc
        } else {
            acc.lcm(c.denom())
        }
    });
    let nums = coeffs
        .iter()
        .map(|c| {
            if c.denom() == &den {
                c.numer().clone()
            } else {
                c.numer() * (&den / c.denom())
            }
        })
        .collect();
    (nums, den)
}

/// `Phi_n` as an integer polynomial, constant term first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by Phi_d for every proper divisor d
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = -BigInt::one();
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let divisor = cyclotomic_polynomial(d);
            poly = exact_divide(&poly, &divisor);
        }
    }
    poly
}

fn exact_divide(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dl = den.len();
    let ql = rem.len() + 1 - dl;
    let mut quot = vec![BigInt::zero(); ql];
    for i in (0..ql).rev() {
        let c = rem[i + dl - 1].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// An element of a cyclotomic field.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Cyclotomic {
            field: field.clone(),
            coeffs: vec![Rational::zero(); field.degree],
        }
    }

    pub fn one(field: &Arc<CyclotomicField>) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &Arc<CyclotomicField>, value: Rational) -> Self {
        let mut out = Self::zero(field);
        out.coeffs[0] = value;
        out
    }

    pub fn from_integer(field: &Arc<CyclotomicField>, value: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(value.into()))
    }

    /// Build from power-basis coordinates. Extra coordinates beyond the field
    /// degree are reduced.
    pub fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<Rational>) -> Self {
        let mut out = Self::zero(field);
        for (e, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e < field.degree {
                out.coeffs[e] += c;
            } else {
                for (dst, p) in out.coeffs.iter_mut().zip(field.power(e as u64)) {
                    *dst += &c * p;
                }
            }
        }
        out
    }

    /// `zeta_order^exponent`, expressed in `Q(zeta_order)`.
    pub fn root_of_unity(order: u64, exponent: i64) -> Self {
        let field = CyclotomicField::get(order);
        let e = exponent.rem_euclid(order as i64) as u64;
        Cyclotomic {
            coeffs: field.power(e).to_vec(),
            field,
        }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The value as a rational number, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-express this value in `Q(zeta_order)`. `order` must be a multiple
    /// of the current order.
    pub fn promote(&self, order: u64) -> Self {
        if order == self.field.order {
            return self.clone();
        }
        assert!(
            order.is_multiple_of(self.field.order),
            "cannot embed Q(zeta_{}) into Q(zeta_{})",
            self.field.order,
            order
        );
        let target = CyclotomicField::get(order);
        let step = order / self.field.order;
        let mut out = Cyclotomic::zero(&target);
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (dst, p) in out.coeffs.iter_mut().zip(target.power(e as u64 * step)) {
                *dst += c * p;
            }
        }
        out
    }

    /// Bring two values into a common field.
    fn aligned<'a>(
        a: &'a Cyclotomic,
        b: &'a Cyclotomic,
    ) -> (
        std::borrow::Cow<'a, Cyclotomic>,
        std::borrow::Cow<'a, Cyclotomic>,
    ) {
        use std::borrow::Cow;
        if Arc::ptr_eq(&a.field, &b.field) {
            return (Cow::Borrowed(a), Cow::Borrowed(b));
        }
        let order = a.field.order.lcm(&b.field.order);
        let pa = if a.field.order == order {
            Cow::Borrowed(a)
        } else {
            Cow::Owned(a.promote(order))
        };
        let pb = if b.field.order == order {
            Cow::Borrowed(b)
        } else {
            Cow::Owned(b.promote(order))
        };
        (pa, pb)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    fn mul_same_field(&self, other: &Cyclotomic) -> Cyclotomic {
        let deg = self.field.degree;
        if deg == 1 {
            return Cyclotomic {
                field: self.field.clone(),
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
            };
        }
        // fraction-free: one gcd per output coefficient instead of per product
        let (na, da) = clear_denominators(&self.coeffs);
        let (nb, db) = clear_denominators(&other.coeffs);
        let mut prod = vec![BigInt::zero(); 2 * deg - 1];
        for (i, a) in na.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in nb.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let (low, high) = prod.split_at_mut(deg);
        for (e, c) in high.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (dst, p) in low
                .iter_mut()
                .zip(&self.field.int_powers[(e + deg) % self.field.order as usize])
            {
                if !p.is_zero() {
                    *dst += c * p;
                }
            }
        }
        let den = da * db;
        Cyclotomic {
            field: self.field.clone(),
            coeffs: low
                .iter_mut()
                .map(|c| Rational::new(std::mem::take(c), den.clone()))
                .collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in
    /// `Q[x]` against the cyclotomic polynomial.
    pub fn inv(&self) -> Result<Cyclotomic, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let modulus: Vec<Rational> = self
            .field
            .modulus
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let a = trim(self.coeffs.clone());
        // invariant: s_k * a == r_k (mod Phi)
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1) = (Vec::<Rational>::new(), vec![Rational::one()]);
        while r1.len() != 1 {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd is not a unit; impossible for a nonzero element of a field
                return Err(FieldError::DivisionByZero);
            }
        }
        let c = r1[0].recip();
        let inv = s1.into_iter().map(|x| x * &c).collect();
        Ok(Cyclotomic::from_coeffs(&self.field, inv))
    }

    pub fn checked_div(&self, other: &Cyclotomic) -> Result<Cyclotomic, FieldError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert (panics on zero base).
    pub fn pow(&self, exponent: i64) -> Cyclotomic {
        let base = if exponent < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = exponent.unsigned_abs();
        let mut acc = Cyclotomic::one(&self.field);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        acc
    }

    /// Multiplicative order if this value is a root of unity.
    pub fn root_order(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        // roots of unity in Q(zeta_N) have order dividing lcm(2, N)
        let bound = self.field.order.lcm(&2);
        let mut acc = self.clone();
        for m in 1..=bound {
            if acc.is_one() {
                return Some(m);
            }
            acc = &acc * self;
        }
        None
    }

    /// If this value is a root of unity of order `m`, the exponent `k` with
    /// value `zeta_m^k`.
    pub fn as_root_of_unity(&self) -> Option<(u64, u64)> {
        let m = self.root_order()?;
        (0..m)
            .find(|&k| Cyclotomic::root_of_unity(m, k as i64) == *self)
            .map(|k| (m, k))
    }

    /// The same value expressed in the smallest cyclotomic field holding it.
    pub fn reduced(&self) -> Cyclotomic {
        let order = self.minimal_order();
        if order == self.field.order {
            self.clone()
        } else {
            self.restrict(order).expect("value lies in the subfield")
        }
    }

    /// Smallest order whose field already contains this value.
    pub fn minimal_order(&self) -> u64 {
        let n = self.field.order;
        let mut divisors: Vec<u64> = (1..=n).filter(|&d| n.is_multiple_of(d)).collect();
        divisors.sort_unstable();
        for d in divisors {
            if d == n {
                return n;
            }
            if let Some(c) = self.restrict(d) {
                debug_assert!(c == *self);
                return d;
            }
        }
        n
    }

    /// Express this value in the subfield `Q(zeta_d)`, if it lies there.
    pub fn restrict(&self, d: u64) -> Option<Cyclotomic> {
        // solve for coefficients in Q(zeta_d) whose promotion equals self
        let small = CyclotomicField::get(d);
        let images: Vec<Cyclotomic> = (0..small.degree)
            .map(|e| Cyclotomic::root_of_unity(d, e as i64).promote(self.field.order))
            .collect();
        let rows = self.field.degree;
        let cols = small.degree;
        // augmented rational system
        let mut m: Vec<Vec<Rational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<Rational> =
                    images.iter().map(|img| img.coeffs[r].clone()).collect();
                row.push(self.coeffs[r].clone());
                row
            })
            .collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for c in 0..cols {
            let Some(p) = (pivot_row..rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, p);
            let inv = m[pivot_row][c].recip();
            for x in m[pivot_row].iter_mut() {
                *x *= &inv;
            }
            for r in 0..rows {
                if r != pivot_row && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    let (src, dst) = if r < pivot_row {
                        let (a, b) = m.split_at_mut(pivot_row);
                        (&b[0], &mut a[r])
                    } else {
                        let (a, b) = m.split_at_mut(r);
                        (&a[pivot_row], &mut b[0])
                    };
                    for (x, y) in dst.iter_mut().zip(src).take(cols + 1) {
                        *x -= &f * y;
                    }
                }
            }
            pivots.push(c);
            pivot_row += 1;
        }
        if m[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
            return None;
        }
        let mut coeffs = vec![Rational::zero(); cols];
        for (r, &c) in pivots.iter().enumerate() {
            coeffs[c] = m[r][cols].clone();
        }
        Some(Cyclotomic::from_coeffs(&small, coeffs))
    }
}

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

fn poly_divmod(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    let dl = den.len();
    if rem.len() < dl {
        return (Vec::new(), trim(rem));
    }
    let lead_inv = den[dl - 1].recip();
    let mut quot = vec![Rational::zero(); rem.len() + 1 - dl];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + dl - 1] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    rem.truncate(dl - 1);
    (trim(quot), trim(rem))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = Cyclotomic::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    /// Hashes the coordinates in the element's own field. Values that are
    /// only equal after promotion hash differently, so hashed collections
    /// should hold values from one field.
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyclotomic {
    /// Renders as a sum `c*zeta(N)^k + ...`, the same grammar the parser reads.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.field.order;
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = match e {
                0 => String::new(),
                1 => format!("zeta({n})"),
                _ => format!("zeta({n})^{e}"),
            };
            match (unit.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => write!(f, "{unit}")?,
                (false, false) => write!(f, "{mag}*{unit}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Cyclotomic> for &Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                let (a, b) = Cyclotomic::aligned(self, rhs);
                $body(&*a, &*b)
            }
        }
        impl $trait<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $method(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &Cyclotomic, b: &Cyclotomic| Cyclotomic {
    field: a.field.clone(),
    coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
});
forward_binop!(Sub, sub, |a: &Cyclotomic, b: &Cyclotomic| Cyclotomic {
    field: a.field.clone(),
    coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
});
forward_binop!(Mul, mul, |a: &Cyclotomic, b: &Cyclotomic| a
    .mul_same_field(b));

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        if Arc::ptr_eq(&self.field, &rhs.field) {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        if Arc::ptr_eq(&self.field, &rhs.field) {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x -= y;
            }
        } else {
            *self = &*self - rhs;
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

/// Exact integer value of a rational, if it is one and fits.
pub(crate) fn rational_to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        let as_i64 = |n| -> Vec<i64> {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| c.to_i64().unwrap())
                .collect()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity() {
        assert!(Cyclotomic::root_of_unity(1, 0).is_one());
        let minus_one = Cyclotomic::from_integer(&CyclotomicField::get(4), -1);
        assert_eq!(Cyclotomic::root_of_unity(4, 2), minus_one);
        let sum = Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2);
        assert_eq!(sum.to_rational(), Some(q(-1, 1)));
        assert_eq!(Cyclotomic::root_of_unity(12, 4).root_order(), Some(3));
        assert_eq!(Cyclotomic::root_of_unity(12, 5).root_order(), Some(12));
    }

    #[test]
    fn inverses() {
        let one = Cyclotomic::root_of_unity(1, 0);
        assert!(one.inv().unwrap().is_one());
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(i.inv().unwrap(), -&i);
        // 1 + zeta_3 = -zeta_3^2, so its inverse is -zeta_3
        let a = Cyclotomic::one(&CyclotomicField::get(3)) + Cyclotomic::root_of_unity(3, 1);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(inv, -Cyclotomic::root_of_unity(3, 1));
        assert!(matches!(
            Cyclotomic::zero(&CyclotomicField::get(5)).inv(),
            Err(FieldError::DivisionByZero)
        ));
    }

    #[test]
    fn mixed_orders_promote() {
        let i = Cyclotomic::root_of_unity(4, 1);
        let w = Cyclotomic::root_of_unity(3, 1);
        let prod = &i * &w;
        assert_eq!(prod.order(), 12);
        assert_eq!(prod, Cyclotomic::root_of_unity(12, 7));
        assert_eq!(Cyclotomic::root_of_unity(12, 3), i);
        assert_eq!(Cyclotomic::root_of_unity(12, 6).minimal_order(), 1);
        assert_eq!(Cyclotomic::root_of_unity(12, 3).minimal_order(), 4);
    }

    #[test]
    fn display_grammar() {
        let f = CyclotomicField::get(8);
        let x = Cyclotomic::from_coeffs(&f, vec![q(2, 1), q(0, 1), q(0, 1), q(-1, 2)]);
        assert_eq!(x.to_string(), "2 - 1/2*zeta(8)^3");
        assert_eq!(Cyclotomic::zero(&f).to_string(), "0");
        assert_eq!(Cyclotomic::root_of_unity(4, 1).to_string(), "zeta(4)");
    }

    #[test]
    fn root_exponent_recovery() {
        let v = Cyclotomic::root_of_unity(12, 9);
        assert_eq!(v.as_root_of_unity(), Some((4, 3)));
        let minus = -Cyclotomic::root_of_unity(3, 1);
        assert_eq!(minus.as_root_of_unity(), Some((6, 5)));
    }
}
