//! Exact arithmetic in Q(zeta_12).
//!
//! Elements are stored as `c0 + c1*z + c2*z^2 + c3*z^3` with `z` a primitive
//! twelfth root of unity and exact rational coefficients, reduced modulo the
//! minimal polynomial `z^4 = z^2 - 1`. This one field houses every constant
//! the line equations need: the primitive cube root `xi = z^4`, the imaginary
//! unit `i = z^3`, `sqrt(3) = 2z - z^3`, and `eta = sqrt(3)/3`. Arithmetic is
//! closed and exact; an element is zero iff all four coefficients are zero,
//! so vanishing tests carry no tolerance.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// zeta^p for p = 0..11 in the basis 1, z, z^2, z^3.
const ZETA_POWERS: [[i64; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
];

#[derive(Clone, PartialEq, Eq)]
pub struct CyclotomicNumber {
    c: [BigRational; 4],
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl CyclotomicNumber {
    pub fn zero() -> Self {
        Self {
            c: [rat(0), rat(0), rat(0), rat(0)],
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Self {
            c: [rat(v), rat(0), rat(0), rat(0)],
        }
    }

    pub fn from_coeffs(c: [BigRational; 4]) -> Self {
        Self { c }
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.c
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// zeta^e for any integer exponent.
    pub fn zeta_pow(e: i64) -> Self {
        let p = e.rem_euclid(12) as usize;
        let row = ZETA_POWERS[p];
        Self {
            c: [rat(row[0]), rat(row[1]), rat(row[2]), rat(row[3])],
        }
    }

    /// The primitive cube root of unity e^(2 pi i / 3) = zeta^4.
    pub fn xi() -> Self {
        Self::zeta_pow(4)
    }

    /// xi^e for any integer exponent.
    pub fn xi_pow(e: i64) -> Self {
        Self::zeta_pow(4 * e.rem_euclid(3))
    }

    /// The imaginary unit, zeta^3.
    pub fn i_unit() -> Self {
        Self::zeta_pow(3)
    }

    /// i^e for any integer exponent.
    pub fn i_pow(e: i64) -> Self {
        Self::zeta_pow(3 * e.rem_euclid(4))
    }

    /// sqrt(3) = zeta + zeta^-1 = 2*zeta - zeta^3.
    pub fn sqrt3() -> Self {
        Self {
            c: [rat(0), rat(2), rat(0), rat(-1)],
        }
    }

    /// eta = sqrt(3)/3.
    pub fn eta() -> Self {
        Self::sqrt3().scaled(&BigRational::new(BigInt::from(1), BigInt::from(3)))
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, factor: &BigRational) -> Self {
        Self {
            c: [
                &self.c[0] * factor,
                &self.c[1] * factor,
                &self.c[2] * factor,
                &self.c[3] * factor,
            ],
        }
    }

    pub fn scaled_int(&self, factor: i64) -> Self {
        self.scaled(&rat(factor))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero. Solves the 4x4 rational
    /// system (multiplication-by-self) x = 1 by Gaussian elimination.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        // Column j of the system is self * zeta^j.
        let mut aug: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); 5]; 4];
        for j in 0..4 {
            let col = self * &Self::zeta_pow(j as i64);
            for i in 0..4 {
                aug[i][j] = col.c[i].clone();
            }
        }
        aug[0][4] = BigRational::one();
        // forward elimination with partial pivoting
        for col in 0..4 {
            let pivot_row = (col..4).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, pivot_row);
            let pivot = aug[col][col].clone();
            for r in 0..4 {
                if r == col {
                    continue;
                }
                if aug[r][col].is_zero() {
                    continue;
                }
                let factor = &aug[r][col] / &pivot;
                for c in col..5 {
                    let sub = &factor * &aug[col][c];
                    aug[r][c] = &aug[r][c] - &sub;
                }
            }
        }
        let mut out = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ];
        for i in 0..4 {
            if aug[i][i].is_zero() {
                return None;
            }
            out[i] = &aug[i][4] / &aug[i][i];
        }
        Some(Self { c: out })
    }
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber {
            c: [
                &self.c[0] + &rhs.c[0],
                &self.c[1] + &rhs.c[1],
                &self.c[2] + &rhs.c[2],
                &self.c[3] + &rhs.c[3],
            ],
        }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        CyclotomicNumber {
            c: [
                &self.c[0] - &rhs.c[0],
                &self.c[1] - &rhs.c[1],
                &self.c[2] - &rhs.c[2],
                &self.c[3] - &rhs.c[3],
            ],
        }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            c: [-&self.c[0], -&self.c[1], -&self.c[2], -&self.c[3]],
        }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        // Raw product coefficients for z^0..z^6, then reduce with
        // z^4 = z^2 - 1, z^5 = z^3 - z, z^6 = -1.
        let mut raw = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ];
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let prod = &self.c[i] * &rhs.c[j];
                raw[i + j] = &raw[i + j] + &prod;
            }
        }
        CyclotomicNumber {
            c: [
                &(&raw[0] - &raw[4]) - &raw[6],
                &raw[1] - &raw[5],
                &raw[2] + &raw[4],
                &raw[3] + &raw[5],
            ],
        }
    }
}

macro_rules! forward_owned_ops {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_owned_ops!(Add::add, Sub::sub, Mul::mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (p, coeff) in self.c.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let shown = if first || !coeff.is_negative() {
                coeff.clone()
            } else {
                -coeff.clone()
            };
            match p {
                0 => write!(f, "{shown}")?,
                1 => write!(f, "{shown}*z")?,
                _ => write!(f, "{shown}*z^{p}")?,
            }
        }
        Ok(())
    }
}
