use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Zero;

use crate::rational::{q, qf, Q};

/// Finitely supported element of X ⊕ Y with exact coefficients.
///
/// `x` is keyed by ordered pairs `(a, b)`, `y` by integers `d`. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct XYVector {
    x: BTreeMap<(i64, i64), Q>,
    y: BTreeMap<i64, Q>,
}

impl XYVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn x_unit(a: i64, b: i64) -> Self {
        let mut v = Self::zero();
        v.add_x(a, b, q(1));
        v
    }

    pub fn y_unit(d: i64) -> Self {
        let mut v = Self::zero();
        v.add_y(d, q(1));
        v
    }

    pub fn add_x(&mut self, a: i64, b: i64, c: Q) {
        let e = self.x.entry((a, b)).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.x.remove(&(a, b));
        }
    }

    pub fn add_y(&mut self, d: i64, c: Q) {
        let e = self.y.entry(d).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.y.remove(&d);
        }
    }

    pub fn x_part(&self) -> &BTreeMap<(i64, i64), Q> {
        &self.x
    }

    pub fn y_part(&self) -> &BTreeMap<i64, Q> {
        &self.y
    }

    pub fn x_coeff(&self, a: i64, b: i64) -> Q {
        self.x.get(&(a, b)).copied().unwrap_or_else(Q::zero)
    }

    pub fn y_coeff(&self, d: i64) -> Q {
        self.y.get(&d).copied().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_empty() && self.y.is_empty()
    }

    pub fn scaled(&self, c: Q) -> Self {
        let mut out = Self::zero();
        if c.is_zero() {
            return out;
        }
        out.x = self.x.iter().map(|(k, v)| (*k, *v * c)).collect();
        out.y = self.y.iter().map(|(k, v)| (*k, *v * c)).collect();
        out
    }

    /// Reflection of all indices: `X_{a,b} -> X_{-b,-a}`, `Y_d -> Y_{-d}`.
    pub fn mirrored(&self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), &c) in &self.x {
            out.add_x(-b, -a, c);
        }
        for (&d, &c) in &self.y {
            out.add_y(-d, c);
        }
        out
    }

    /// Coordinates in the {Z, Y} basis, returned in the same container: the
    /// X part holds the Z coefficients.
    pub fn to_z(&self) -> Self {
        let mut out = self.clone();
        for (&(a, b), &c) in &self.x {
            for (d, coeff) in phi_terms(a, b) {
                out.add_y(d, coeff * c);
            }
        }
        out
    }

    /// Inverse of [`XYVector::to_z`].
    pub fn from_z(&self) -> Self {
        let mut out = self.clone();
        for (&(a, b), &c) in &self.x {
            for (d, coeff) in phi_terms(a, b) {
                out.add_y(d, -coeff * c);
            }
        }
        out
    }

    /// Projection onto Y along the span of the `Z_{a,b}`.
    pub fn project_pz(&self) -> Self {
        let mut out = Self::zero();
        out.y = self.y.clone();
        for (&(a, b), &c) in &self.x {
            for (d, coeff) in phi_terms(a, b) {
                out.add_y(d, coeff * c);
            }
        }
        out
    }
}

fn phi_terms(a: i64, b: i64) -> [(i64, Q); 3] {
    let s = a + b;
    let half = qf(a - b, 2);
    [(s - 2, half), (s, q(b - a - 1)), (s + 2, half)]
}

/// `Φ_{a,b} = (a-b)/2·Y_{a+b-2} + (b-a-1)·Y_{a+b} + (a-b)/2·Y_{a+b+2}`.
pub fn phi(a: i64, b: i64) -> XYVector {
    let mut v = XYVector::zero();
    for (d, c) in phi_terms(a, b) {
        v.add_y(d, c);
    }
    v
}

/// `Z_{a,b} = X_{a,b} - Φ_{a,b}` written in the X/Y basis.
pub fn z_basis(a: i64, b: i64) -> XYVector {
    XYVector::x_unit(a, b) - phi(a, b)
}

impl AddAssign<&XYVector> for XYVector {
    fn add_assign(&mut self, rhs: &XYVector) {
        for (&(a, b), &c) in &rhs.x {
            self.add_x(a, b, c);
        }
        for (&d, &c) in &rhs.y {
            self.add_y(d, c);
        }
    }
}

impl SubAssign<&XYVector> for XYVector {
    fn sub_assign(&mut self, rhs: &XYVector) {
        *self += &rhs.scaled(q(-1));
    }
}

impl Add for XYVector {
    type Output = XYVector;
    fn add(mut self, rhs: XYVector) -> XYVector {
        self += &rhs;
        self
    }
}

impl Sub for XYVector {
    type Output = XYVector;
    fn sub(mut self, rhs: XYVector) -> XYVector {
        self -= &rhs;
        self
    }
}

impl Neg for XYVector {
    type Output = XYVector;
    fn neg(self) -> XYVector {
        self.scaled(q(-1))
    }
}

impl Mul<Q> for XYVector {
    type Output = XYVector;
    fn mul(self, rhs: Q) -> XYVector {
        self.scaled(rhs)
    }
}

impl fmt::Display for XYVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        let terms = self
            .x
            .iter()
            .map(|(&(a, b), c)| (format!("X[{a},{b}]"), *c))
            .chain(self.y.iter().map(|(&d, c)| (format!("Y[{d}]"), *c)));
        for (name, c) in terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c == q(1) {
                write!(f, "{name}")?;
            } else {
                write!(f, "({c}){name}")?;
            }
        }
        Ok(())
    }
}
