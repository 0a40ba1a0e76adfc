//! Dense univariate polynomials over [`Rational`] and Sturm-sequence root
//! isolation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Coefficients in increasing degree; trailing zeros are stripped so the zero
/// polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

/// Partition function of a finite volume as a polynomial in the activity `z`.
pub type ActivityPolynomial = Polynomial;

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// `x + shift`.
    pub fn linear(shift: Rational) -> Self {
        Polynomial::new(vec![shift, Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> Rational {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn sign_at(&self, x: &Rational) -> i32 {
        self.eval(x).signum()
    }

    pub fn derivative(&self) -> Polynomial {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::integer(i as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term.
    pub fn integral(&self) -> Polynomial {
        let mut out = Vec::with_capacity(self.coeffs.len() + 1);
        out.push(Rational::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            out.push(c / Rational::integer(i as i64 + 1));
        }
        Polynomial::new(out)
    }

    /// `∫_a^b p(x) dx`, exactly.
    pub fn integrate(&self, a: &Rational, b: &Rational) -> Rational {
        let anti = self.integral();
        anti.eval(b) - anti.eval(a)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&Rational::integer(-1)))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::constant(Rational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Remainder of division by a nonzero polynomial.
    pub fn rem(&self, divisor: &Polynomial) -> Polynomial {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().expect("nonzero divisor").clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let top = r.len() - 1;
            let q = &r[top] / &lead;
            if !q.is_zero() {
                for (j, c) in divisor.coeffs.iter().enumerate() {
                    let idx = top - dd + j;
                    r[idx] = &r[idx] - &q * c;
                }
            }
            r.pop();
            while r.last().is_some_and(Rational::is_zero) {
                r.pop();
            }
        }
        Polynomial::new(r)
    }

    /// Divide by the absolute value of the leading coefficient; signs are kept.
    fn normalized(&self) -> Polynomial {
        match self.leading() {
            Some(l) => self.scale(&l.abs().recip().expect("nonzero leading coefficient")),
            None => Polynomial::zero(),
        }
    }
}

/// Sturm chain `p, p', -rem(p, p'), ...` with each member scaled by a positive
/// constant.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Polynomial>,
}

impl SturmSequence {
    pub fn new(p: &Polynomial) -> Self {
        let mut chain = vec![p.normalized()];
        if p.degree().unwrap_or(0) == 0 {
            return SturmSequence { chain };
        }
        chain.push(p.derivative().normalized());
        loop {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&Rational::integer(-1)).normalized());
        }
        SturmSequence { chain }
    }

    pub fn sign_changes(&self, x: &Rational) -> usize {
        let mut changes = 0;
        let mut last = 0;
        for p in &self.chain {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    changes += 1;
                }
                last = s;
            }
        }
        changes
    }

    /// Number of distinct real roots in `(a, b]`; requires `p(a) != 0`.
    pub fn count_roots(&self, a: &Rational, b: &Rational) -> usize {
        self.sign_changes(a).saturating_sub(self.sign_changes(b))
    }
}

/// Bracket around the smallest positive root of a function of `ρ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootBracket {
    pub lo: Rational,
    pub hi: Rational,
    /// The function is `> 0` at `lo` and `<= 0` at `hi`, by exact evaluation.
    pub guaranteed_sign_change: bool,
}

impl RootBracket {
    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> f64 {
        self.lo.midpoint(&self.hi).to_f64()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo.to_f64() <= x && x <= self.hi.to_f64()
    }

    /// `self` lies strictly to the right of `other`.
    pub fn strictly_above(&self, other: &RootBracket) -> bool {
        self.lo > other.hi
    }
}

/// Width check against a float tolerance without rounding the width.
pub(crate) fn width_within(lo: &Rational, hi: &Rational, tol: f64) -> bool {
    match Rational::from_f64(tol) {
        Ok(t) => (hi - lo) <= t,
        Err(_) => true,
    }
}

/// Isolate the smallest positive root of `p`, which must satisfy `p(0) > 0`.
///
/// Sturm counts locate the first root; once the bracket holds exactly one
/// root with a sign change the search continues by plain sign bisection.
pub fn smallest_positive_root(p: &Polynomial, tol: f64) -> Result<RootBracket> {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let zero = Rational::zero();
    if p.eval(&zero).signum() <= 0 {
        return Err(Error::Domain("polynomial must be positive at 0".into()));
    }
    let sturm = SturmSequence::new(p);
    let bound = cauchy_bound(p);
    let mut hi = Rational::one().min(bound.clone());
    while sturm.count_roots(&zero, &hi) == 0 {
        if hi >= bound {
            return Err(Error::NoPositiveRoot);
        }
        hi = (hi * Rational::integer(2)).min(bound.clone());
    }
    let mut lo = zero;
    let mut single = false;
    while !width_within(&lo, &hi, tol) {
        if !single
            && sturm.count_roots(&lo, &hi) == 1
            && p.sign_at(&hi) < 0
        {
            single = true;
        }
        let mid = lo.midpoint(&hi);
        let root_left = if single {
            p.sign_at(&mid) <= 0
        } else {
            sturm.count_roots(&lo, &mid) >= 1
        };
        if root_left {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let guaranteed_sign_change = p.sign_at(&lo) > 0 && p.sign_at(&hi) <= 0;
    Ok(RootBracket { lo, hi, guaranteed_sign_change })
}

/// `1 + max |c_i / c_d|` bounds every root in absolute value.
fn cauchy_bound(p: &Polynomial) -> Rational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let mut m = Rational::zero();
    for c in &p.coeffs()[..p.coeffs().len() - 1] {
        m = m.max(&c.abs() / &lead);
    }
    m + Rational::one()
}
