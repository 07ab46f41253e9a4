//! Linear functionals on X ⊕ Y, given by their values on basis elements.
//! Basis elements not mentioned in a definition map to zero.

use num_traits::Zero;

use super::xy::XYVector;
use crate::rational::{q, qf, Q};

pub trait Functional {
    fn on_x(&self, a: i64, b: i64) -> Q;
    fn on_y(&self, d: i64) -> Q;

    fn apply(&self, v: &XYVector) -> Q {
        let xs = v.x_part().iter().map(|(&(a, b), &c)| self.on_x(a, b) * c);
        let ys = v.y_part().iter().map(|(&d, &c)| self.on_y(d) * c);
        xs.chain(ys).fold(Q::zero(), |acc, t| acc + t)
    }
}

fn odd(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

fn even(n: i64) -> bool {
    !odd(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    Psi(u8),
    Eta(u8),
    PhiPlus,
    PhiMinus,
    /// The strangeness functional: `d^2` on `Y_d`, zero on every `Z_{a,b}`.
    PhiSt,
}

pub const PSI: [Named; 6] = [
    Named::Psi(1),
    Named::Psi(2),
    Named::Psi(3),
    Named::Psi(4),
    Named::Psi(5),
    Named::Psi(6),
];

pub const ETA: [Named; 6] = [
    Named::Eta(1),
    Named::Eta(2),
    Named::Eta(3),
    Named::Eta(4),
    Named::Eta(5),
    Named::Eta(6),
];

impl Named {
    pub fn name(self) -> String {
        match self {
            Named::Psi(i) => format!("psi{i}"),
            Named::Eta(i) => format!("eta{i}"),
            Named::PhiPlus => "phi+".into(),
            Named::PhiMinus => "phi-".into(),
            Named::PhiSt => "phiSt".into(),
        }
    }
}

impl Functional for Named {
    fn on_x(&self, a: i64, b: i64) -> Q {
        let s = a + b;
        let zero = Q::zero();
        match *self {
            Named::Psi(1) => {
                if odd(s) {
                    q(-1)
                } else {
                    zero
                }
            }
            Named::Psi(2) => {
                if even(s) {
                    q(-1)
                } else {
                    zero
                }
            }
            Named::Psi(3) => {
                if odd(s) {
                    q(-s)
                } else {
                    zero
                }
            }
            Named::Psi(4) => {
                if even(s) {
                    q(-s)
                } else {
                    zero
                }
            }
            Named::Psi(5) => {
                if odd(s) {
                    // s is odd, so s(s^2 - 4) never vanishes.
                    qf(4 * (a - b + 1) - s * s, s * (s * s - 4))
                } else {
                    zero
                }
            }
            Named::Psi(6) => match s {
                0 => q(b - a - 1),
                2 | -2 => qf(a - b, 2),
                _ => zero,
            },
            Named::Eta(1) => {
                if odd(s) {
                    q(s * s)
                } else {
                    zero
                }
            }
            Named::Eta(2) => {
                if even(s) {
                    q(s * s)
                } else {
                    zero
                }
            }
            Named::Eta(3) => {
                if even(a) && odd(b) {
                    q(1)
                } else {
                    zero
                }
            }
            Named::Eta(4) => {
                if even(a) && even(b) {
                    q(1)
                } else {
                    zero
                }
            }
            Named::Eta(5) => {
                if odd(a) && even(b) {
                    q(1)
                } else {
                    zero
                }
            }
            Named::Eta(6) => {
                if odd(a) && odd(b) {
                    q(1)
                } else {
                    zero
                }
            }
            Named::PhiPlus => q(4 + s * s),
            Named::PhiMinus => q(s * s),
            Named::PhiSt => q(4 * (a - b) - s * s),
            Named::Psi(_) | Named::Eta(_) => panic!("no such functional {}", self.name()),
        }
    }

    fn on_y(&self, d: i64) -> Q {
        let zero = Q::zero();
        match *self {
            Named::Psi(1) => {
                if odd(d) {
                    q(1)
                } else {
                    zero
                }
            }
            Named::Psi(2) => {
                if even(d) {
                    q(1)
                } else {
                    zero
                }
            }
            Named::Psi(3) => {
                if odd(d) {
                    q(d)
                } else {
                    zero
                }
            }
            Named::Psi(4) => {
                if even(d) {
                    q(d)
                } else {
                    zero
                }
            }
            Named::Psi(5) => {
                if odd(d) {
                    qf(1, d)
                } else {
                    zero
                }
            }
            Named::Psi(6) => {
                if d == 0 {
                    q(1)
                } else {
                    zero
                }
            }
            Named::Eta(1) => {
                if odd(d) {
                    q(-d * d)
                } else {
                    zero
                }
            }
            Named::Eta(2) => {
                if even(d) {
                    q(-d * d)
                } else {
                    zero
                }
            }
            Named::Eta(3..=6) => zero,
            Named::PhiPlus | Named::PhiMinus => q(-d * d),
            Named::PhiSt => q(d * d),
            Named::Psi(_) | Named::Eta(_) => panic!("no such functional {}", self.name()),
        }
    }
}

/// `Y_d -> h(d)`, `X_{a,b} -> -h(a+b)`.
pub struct HForm<F: Fn(i64) -> Q>(pub F);

impl<F: Fn(i64) -> Q> Functional for HForm<F> {
    fn on_x(&self, a: i64, b: i64) -> Q {
        -(self.0)(a + b)
    }

    fn on_y(&self, d: i64) -> Q {
        (self.0)(d)
    }
}

pub fn apply(f: &impl Functional, v: &XYVector) -> Q {
    f.apply(v)
}
