//! Exact elements of cyclotomic fields Q(ζ_e).
//!
//! A value of conductor `e` is stored in the power basis `1, ζ, …, ζ^{φ(e)−1}`, reduced
//! modulo the cyclotomic polynomial Φ_e. The representation is unique for a fixed `e`;
//! values of different conductors are compared after lifting both to the lcm.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, LazyLock, Mutex};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

pub type Rational = Ratio<i128>;

static PHI: LazyLock<Mutex<HashMap<u32, Arc<Vec<i128>>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Coefficients of Φ_n, constant term first.
pub fn cyclotomic_polynomial(n: u32) -> Arc<Vec<i128>> {
    assert!(n >= 1);
    if let Some(p) = PHI.lock().expect("poisoned").get(&n) {
        return p.clone();
    }
    // x^n − 1 divided by Φ_d for every proper divisor d
    let mut num = vec![0i128; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        let den = cyclotomic_polynomial(d);
        num = poly_div_exact(&num, &den);
    }
    let p = Arc::new(num);
    PHI.lock().expect("poisoned").insert(n, p.clone());
    p
}

fn poly_div_exact(num: &[i128], den: &[i128]) -> Vec<i128> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut q = vec![0i128; num.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, &dj) in den.iter().enumerate() {
            rem[i + j] -= c * dj;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Cyclotomic::int(1)
    }

    pub fn int(n: i128) -> Self {
        Cyclotomic::rational(Rational::from_integer(n))
    }

    pub fn rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    /// ζ_e^k.
    pub fn root(e: u32, k: i64) -> Self {
        let k = k.rem_euclid(e as i64) as usize;
        let mut raw = vec![Rational::zero(); e as usize];
        raw[k] = Rational::one();
        Cyclotomic::from_powers(e, raw)
    }

    /// Σ c_k ζ_e^k for arbitrary exponents 0 ≤ k < len.
    pub fn from_powers(e: u32, raw: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(e);
        let d = phi.len() - 1;
        let mut c = raw;
        if c.len() < d {
            c.resize(d, Rational::zero());
        }
        for i in (d..c.len()).rev() {
            let top = c[i];
            if top.is_zero() {
                continue;
            }
            for (j, &pj) in phi.iter().enumerate() {
                let v = c[i - d + j] - top * Rational::from_integer(pj);
                c[i - d + j] = v;
            }
        }
        c.truncate(d);
        Cyclotomic {
            conductor: e,
            coeffs: c,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The same number written with conductor `l`, a multiple of the current one.
    pub fn lift(&self, l: u32) -> Self {
        assert_eq!(l % self.conductor, 0, "lift target must be a multiple of the conductor");
        if l == self.conductor {
            return self.clone();
        }
        let step = (l / self.conductor) as usize;
        let mut raw = vec![Rational::zero(); l as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step % l as usize] += c;
        }
        Cyclotomic::from_powers(l, raw)
    }

    fn aligned(&self, o: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let l = self.conductor.lcm(&o.conductor);
        (self.lift(l), o.lift(l))
    }

    /// Image under ζ ↦ ζ^k, for k coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let e = self.conductor as i64;
        let mut raw = vec![Rational::zero(); e as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[(i as i64 * k).rem_euclid(e) as usize] += c;
        }
        Cyclotomic::from_powers(self.conductor, raw)
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<i128> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn scale(&self, r: Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn to_complex(&self) -> (f64, f64) {
        let e = self.conductor as f64;
        self.coeffs.iter().enumerate().fold((0.0, 0.0), |(re, im), (k, c)| {
            let v = *c.numer() as f64 / *c.denom() as f64;
            let t = std::f64::consts::TAU * k as f64 / e;
            (re + v * t.cos(), im + v * t.sin())
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "conductor": self.conductor,
            "coeffs": self.coeffs.iter().map(rat_string).collect::<Vec<_>>(),
        })
    }
}

pub(crate) fn rat_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, o: &Self) -> bool {
        if self.conductor == o.conductor {
            return self.coeffs == o.coeffs;
        }
        let (a, b) = self.aligned(o);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.aligned(o);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: &Cyclotomic) -> Cyclotomic {
        self + &-o
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        self.scale(-Rational::one())
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.aligned(o);
        let mut raw = vec![Rational::zero(); (2 * a.coeffs.len()).max(1)];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                raw[i + j] += x * y;
            }
        }
        Cyclotomic::from_powers(a.conductor, raw)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", rat_string(&r));
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let z = match k {
                0 => String::new(),
                1 => format!("z{}", self.conductor),
                _ => format!("z{}^{k}", self.conductor),
            };
            match (a == Rational::one(), k) {
                (true, 0) => write!(f, "1")?,
                (true, _) => write!(f, "{z}")?,
                (false, 0) => write!(f, "{}", rat_string(&a))?,
                (false, _) => write!(f, "{}*{z}", rat_string(&a))?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(60).len() - 1, euler_phi(60) as usize);
    }

    #[test]
    fn roots_of_unity() {
        let i = Cyclotomic::root(4, 1);
        assert_eq!(&i * &i, Cyclotomic::int(-1));
        let w = Cyclotomic::root(3, 1);
        assert_eq!(&(&w + &w.conj()), &Cyclotomic::int(-1));
        // ζ_5 + ζ_5⁴ = (√5 − 1)/2 squares to (3 − √5)/2
        let t = &Cyclotomic::root(5, 1) + &Cyclotomic::root(5, 4);
        assert_eq!(&(&t * &t) + &t, Cyclotomic::one());
        assert_eq!(Cyclotomic::root(6, 3), Cyclotomic::int(-1));
        assert_eq!(Cyclotomic::root(2, 1).lift(12), Cyclotomic::root(12, 6));
    }

    proptest! {
        #[test]
        fn sums_of_roots_match_floats(e in 1u32..40, ks in proptest::collection::vec(-50i64..50, 1..6)) {
            let mut s = Cyclotomic::zero();
            let (mut re, mut im) = (0.0, 0.0);
            for &k in &ks {
                s = &s + &Cyclotomic::root(e, k);
                let t = std::f64::consts::TAU * k as f64 / e as f64;
                re += t.cos();
                im += t.sin();
            }
            let (a, b) = s.to_complex();
            prop_assert!((a - re).abs() < 1e-9 && (b - im).abs() < 1e-9);
            let n = &s * &s.conj();
            prop_assert_eq!(n.conj(), n.clone());
        }
    }
}
