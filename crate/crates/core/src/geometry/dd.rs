//! Double-double arithmetic (about 106 significant bits).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Copy, Clone, Default, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

pub const PI: Dd = Dd {
    hi: std::f64::consts::PI,
    lo: 1.224_646_799_147_353_2e-16,
};

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub fn new(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    fn from_parts(hi: f64, lo: f64) -> Dd {
        let (hi, lo) = quick_two_sum(hi, lo);
        Dd { hi, lo }
    }

    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn sqrt(self) -> Dd {
        if self.hi <= 0.0 {
            return Dd::new(self.hi.max(0.0).sqrt());
        }
        let x = Dd::new(self.hi.sqrt());
        let resid = self - x * x;
        x + Dd::new(resid.hi / (2.0 * x.hi))
    }

    /// Sine and cosine by argument halving, a Taylor series and angle doubling.
    pub fn sin_cos(self) -> (Dd, Dd) {
        const HALVINGS: i32 = 6;
        let x = self * Dd::new(0.5f64.powi(HALVINGS));
        let mut sin = Dd::default();
        let mut cos = Dd::default();
        let mut term = Dd::new(1.0);
        for n in 0..30u32 {
            if n % 2 == 0 {
                let t = if n % 4 == 0 { term } else { -term };
                cos += t;
            } else {
                let t = if n % 4 == 1 { term } else { -term };
                sin += t;
            }
            term = term * x / Dd::new((n + 1) as f64);
        }
        for _ in 0..HALVINGS {
            let s = Dd::new(2.0) * sin * cos;
            let c = cos * cos - sin * sin;
            sin = s;
            cos = c;
        }
        (sin, cos)
    }

    pub fn sin(self) -> Dd {
        self.sin_cos().0
    }

    pub fn cos(self) -> Dd {
        self.sin_cos().1
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::new(x)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, b.hi);
        let (t, f) = two_sum(self.lo, b.lo);
        let (s, e) = quick_two_sum(s, e + t);
        Dd::from_parts(s, e + f)
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, b: Dd) -> Dd {
        self + (-b)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, b: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, b.hi);
        Dd::from_parts(p, e + (self.hi * b.lo + self.lo * b.hi))
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, b: Dd) -> Dd {
        let q1 = self.hi / b.hi;
        let r = self - b * Dd::new(q1);
        let q2 = r.hi / b.hi;
        let r = r - b * Dd::new(q2);
        let q3 = r.hi / b.hi;
        Dd::from_parts(q1, q2) + Dd::new(q3)
    }
}

macro_rules! assign_op {
    ($tr:ident, $f:ident, $op:tt) => {
        impl $tr for Dd {
            fn $f(&mut self, b: Dd) {
                *self = *self $op b;
            }
        }
    };
}

assign_op!(AddAssign, add_assign, +);
assign_op!(SubAssign, sub_assign, -);
assign_op!(MulAssign, mul_assign, *);
assign_op!(DivAssign, div_assign, /);

impl fmt::Debug for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}+{:e}", self.hi, self.lo)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: Dd, tol: f64) -> bool {
        (a - b).abs().hi() < tol
    }

    #[test]
    fn arithmetic_is_double_double() {
        let third = Dd::new(1.0) / Dd::new(3.0);
        assert!(close(third * Dd::new(3.0), Dd::new(1.0), 1e-31));
        let two = Dd::new(2.0);
        assert!(close(two.sqrt() * two.sqrt(), two, 1e-31));
    }

    #[test]
    fn trigonometry() {
        let (s, c) = (PI / Dd::new(4.0)).sin_cos();
        let half_sqrt2 = Dd::new(2.0).sqrt() / Dd::new(2.0);
        assert!(close(s, half_sqrt2, 1e-30));
        assert!(close(c, half_sqrt2, 1e-30));
        let (s, c) = (PI / Dd::new(6.0)).sin_cos();
        assert!(close(s, Dd::new(0.5), 1e-30));
        assert!(close(c * c, Dd::new(0.75), 1e-30));
        assert!(close(PI.sin(), Dd::default(), 1e-30));
    }
}
