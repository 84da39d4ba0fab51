//! Exact arithmetic in Q(√5).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i128>;

/// `a + b√5` with rational `a`, `b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Q5 {
    pub a: Rational,
    pub b: Rational,
}

impl Q5 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Q5 { a, b }
    }

    pub fn rational(a: Rational) -> Self {
        Q5 { a, b: Rational::zero() }
    }

    pub fn int(n: i128) -> Self {
        Q5::rational(Rational::from_integer(n))
    }

    pub fn frac(p: i128, q: i128) -> Self {
        Q5::rational(Rational::new(p, q))
    }

    /// The golden ratio (1 + √5)/2.
    pub fn phi() -> Self {
        Q5::new(Rational::new(1, 2), Rational::new(1, 2))
    }

    pub fn sqrt5() -> Self {
        Q5::new(Rational::zero(), Rational::one())
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        Q5::new(self.a, -self.b)
    }

    /// Field norm a² − 5b².
    pub fn norm(&self) -> Rational {
        self.a * self.a - Rational::from_integer(5) * self.b * self.b
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(Q5::new(self.a / n, -self.b / n))
    }

    /// Sign of the real number a + b√5.
    pub fn signum(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        // opposite signs: compare a² with 5b²
        let a2 = self.a * self.a;
        let b2 = Rational::from_integer(5) * self.b * self.b;
        match a2.cmp(&b2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }
}

impl Zero for Q5 {
    fn zero() -> Self {
        Q5::default()
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Q5 {
    fn one() -> Self {
        Q5::int(1)
    }
}

impl Add for Q5 {
    type Output = Q5;
    fn add(self, o: Q5) -> Q5 {
        Q5::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for Q5 {
    type Output = Q5;
    fn sub(self, o: Q5) -> Q5 {
        Q5::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for Q5 {
    type Output = Q5;
    fn neg(self) -> Q5 {
        Q5::new(-self.a, -self.b)
    }
}

impl Mul for Q5 {
    type Output = Q5;
    fn mul(self, o: Q5) -> Q5 {
        let five = Rational::from_integer(5);
        Q5::new(self.a * o.a + five * self.b * o.b, self.a * o.b + self.b * o.a)
    }
}

impl Div for Q5 {
    type Output = Q5;
    fn div(self, o: Q5) -> Q5 {
        self * o.inv().expect("division by zero in Q(√5)")
    }
}

fn fmt_rat(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Rational string `"p/q"` (or `"p"` for integers).
pub fn rational_string(r: &Rational) -> String {
    fmt_rat(r)
}

impl fmt::Display for Q5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", fmt_rat(&self.a));
        }
        let sign = if self.b.is_negative() { "-" } else { "+" };
        let b = fmt_rat(&self.b.abs());
        if self.a.is_zero() {
            write!(f, "{}{b}√5", if self.b.is_negative() { "-" } else { "" })
        } else {
            write!(f, "{} {sign} {b}√5", fmt_rat(&self.a))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: (i64, i64), b: (i64, i64)) -> Q5 {
        Q5::new(
            Rational::new(a.0 as i128, a.1 as i128),
            Rational::new(b.0 as i128, b.1 as i128),
        )
    }

    #[test]
    fn golden_ratio_identity() {
        let phi = Q5::phi();
        assert_eq!(phi * phi, phi + Q5::one());
        assert_eq!(phi.inv().unwrap(), phi - Q5::one());
        assert_eq!(Q5::sqrt5().signum(), Ordering::Greater);
        assert_eq!((Q5::int(2) - Q5::sqrt5()).signum(), Ordering::Less);
        assert_eq!((Q5::int(3) - Q5::sqrt5()).signum(), Ordering::Greater);
    }

    proptest! {
        #[test]
        fn field_axioms(a in (-20i64..20, 1i64..9), b in (-20i64..20, 1i64..9),
                        c in (-20i64..20, 1i64..9), d in (-20i64..20, 1i64..9)) {
            let x = q(a, b);
            let y = q(c, d);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x + y) - y, x);
            if !y.is_zero() {
                prop_assert_eq!((x * y) / y, x);
            }
            let approx = |z: Q5| {
                (*z.a.numer() as f64 / *z.a.denom() as f64)
                    + (*z.b.numer() as f64 / *z.b.denom() as f64) * 5f64.sqrt()
            };
            let v = approx(x);
            if v.abs() > 1e-9 {
                prop_assert_eq!(x.signum(), v.partial_cmp(&0.0).unwrap());
            }
        }
    }
}
