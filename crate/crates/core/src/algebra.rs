// SPDX-License-Identifier: Apache-2.0 OR MIT

//! Exact polynomial identities in the side parameters `d0, d1, d2`.
//!
//! Polynomials have arbitrary-precision rational coefficients, so every check
//! here is a coefficient-by-coefficient comparison with no rounding. `χ`
//! appears only through `χ²`, except in [`verify_final_identity`], which
//! substitutes `2χ = d0 + d1 + d2 - d0d1d2` (valid on the Napoleonic locus).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponents of `d0^i d1^j d2^k`.
pub type Exponents = [u32; 3];

/// Sparse polynomial in `d0, d1, d2` over `ℚ`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    terms: BTreeMap<Exponents, BigRational>,
}

impl RationalPolynomial {
    #[must_use]
    pub fn zero() -> Self {
        Self::default()
    }

    #[must_use]
    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    #[must_use]
    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, [0, 0, 0])
    }

    #[must_use]
    pub fn integer(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    /// The constant `num / den`; `den ≠ 0`.
    #[must_use]
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(BigRational::new(num.into(), den.into()))
    }

    #[must_use]
    pub fn monomial(c: BigRational, exponents: Exponents) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, c);
        p
    }

    /// The variable `d_i`, `i < 3`.
    #[must_use]
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(BigRational::one(), e)
    }

    fn add_term(&mut self, e: Exponents, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[must_use]
    pub fn coefficient(&self, e: Exponents) -> BigRational {
        self.terms
            .get(&e)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigRational)> {
        self.terms.iter()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Total degree; `None` for the zero polynomial.
    #[must_use]
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    #[must_use]
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    #[must_use]
    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Cyclic relabelling `d_i → d_{i+k}`.
    #[must_use]
    pub fn rotated(&self, k: usize) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut r = [0; 3];
            for (i, &ei) in e.iter().enumerate() {
                r[(i + k) % 3] = ei;
            }
            out.add_term(r, c.clone());
        }
        out
    }

    #[must_use]
    pub fn evaluate(&self, d: &[BigRational; 3]) -> BigRational {
        self.terms.iter().fold(BigRational::zero(), |acc, (e, c)| {
            let mut term = c.clone();
            for (x, &k) in d.iter().zip(e) {
                term *= num_traits::pow(x.clone(), k as usize);
            }
            acc + term
        })
    }

    #[must_use]
    pub fn evaluate_f64(&self, d: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let c = c.to_f64().unwrap_or(f64::NAN);
                c * d
                    .iter()
                    .zip(e)
                    .map(|(x, &k)| x.powi(k as i32))
                    .product::<f64>()
            })
            .sum()
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Highest degree first.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then(b.cmp(a))
        });
        for (n, (e, c)) in terms.into_iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (n, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let mag = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("d{i}")
                    } else {
                        format!("d{i}^{k}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&vars.join("*"))?;
            } else {
                write!(f, "{mag}*{}", vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        -&self
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let mut out = RationalPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $method(self, rhs: RationalPolynomial) -> RationalPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&RationalPolynomial> for RationalPolynomial {
            type Output = RationalPolynomial;
            fn $method(self, rhs: &RationalPolynomial) -> RationalPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<RationalPolynomial> for &RationalPolynomial {
            type Output = RationalPolynomial;
            fn $method(self, rhs: RationalPolynomial) -> RationalPolynomial {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

fn d(i: usize) -> RationalPolynomial {
    RationalPolynomial::var(i)
}

fn int(n: i64) -> RationalPolynomial {
    RationalPolynomial::integer(n)
}

fn half() -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(2))
}

#[must_use]
pub fn sum_poly() -> RationalPolynomial {
    d(0) + d(1) + d(2)
}

#[must_use]
pub fn product_poly() -> RationalPolynomial {
    d(0) * d(1) * d(2)
}

#[must_use]
pub fn sum_squares_poly() -> RationalPolynomial {
    d(0).pow(2) + d(1).pow(2) + d(2).pow(2)
}

#[must_use]
pub fn pair_sum_poly() -> RationalPolynomial {
    d(0) * d(1) + d(1) * d(2) + d(2) * d(0)
}

/// `α = (Σd_i² - 1) / 2`.
#[must_use]
pub fn alpha_poly() -> RationalPolynomial {
    (sum_squares_poly() - int(1)).scale(&half())
}

/// `χ²` from `4χ² = 2(1 - α)(1 + 2α) + Σ_{i<j} d_i²d_j² + d0²d1²d2²`.
#[must_use]
pub fn chi_squared_poly() -> RationalPolynomial {
    let a = alpha_poly();
    let sq = [0, 1, 2].map(|i| d(i).pow(2));
    let four_chi_sq = int(2) * (int(1) - &a) * (int(1) + int(2) * &a)
        + &sq[0] * &sq[1]
        + &sq[1] * &sq[2]
        + &sq[2] * &sq[0]
        + product_poly().pow(2);
    four_chi_sq.scale(&BigRational::new(1.into(), 4.into()))
}

/// `χ = (d0 + d1 + d2 - d0d1d2) / 2`, valid only on the Napoleonic locus.
#[must_use]
pub fn chi_on_locus_poly() -> RationalPolynomial {
    (sum_poly() - product_poly()).scale(&half())
}

/// `γ = 3(d0² + 1)(d1² + 1)(d2² + 1)`.
#[must_use]
pub fn gamma_poly() -> RationalPolynomial {
    (0..3).fold(int(3), |acc, i| acc * (d(i).pow(2) + int(1)))
}

/// `Σd_i² + Σ_{i<j} d_i d_j`.
#[must_use]
pub fn condition_poly() -> RationalPolynomial {
    sum_squares_poly() + pair_sum_poly()
}

/// `Σd_i² - Σ_{i<j} d_i d_j`.
#[must_use]
pub fn equilateral_factor_poly() -> RationalPolynomial {
    sum_squares_poly() - pair_sum_poly()
}

/// Outcome of comparing two polynomial expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    /// `lhs - rhs`; zero exactly when the identity holds.
    pub difference: RationalPolynomial,
}

impl IdentityCheck {
    fn compare(
        name: impl Into<String>,
        lhs: &RationalPolynomial,
        rhs: &RationalPolynomial,
    ) -> Self {
        let difference = lhs - rhs;
        Self {
            name: name.into(),
            holds: difference.is_zero(),
            difference,
        }
    }
}

/// `α²(Σd - Πd)² - χ²(1 - Σ_{i<j}d_id_j)² = (γ/12)(Σd² - Σd_id_j)(Σd² + Σd_id_j - 2)`.
#[must_use]
pub fn verify_factorisation() -> IdentityCheck {
    verify_factorisation_with(&chi_squared_poly())
}

/// [`verify_factorisation`] with a caller-supplied `χ²`.
#[must_use]
pub fn verify_factorisation_with(chi_squared: &RationalPolynomial) -> IdentityCheck {
    let lhs = alpha_poly().pow(2) * (sum_poly() - product_poly()).pow(2)
        - chi_squared * (int(1) - pair_sum_poly()).pow(2);
    let rhs = gamma_poly().scale(&BigRational::new(1.into(), 12.into()))
        * equilateral_factor_poly()
        * (condition_poly() - int(2));
    IdentityCheck::compare("factorisation", &lhs, &rhs)
}

/// `(d0 + d1/2 + d2/2)² + (3/4)(d1 + d2/3)² + (2/3)d2² = Σd² + Σd_id_j`.
#[must_use]
pub fn verify_sum_of_squares() -> IdentityCheck {
    let q = |n, m| BigRational::new(BigInt::from(n), BigInt::from(m));
    let lhs = (d(0) + d(1).scale(&half()) + d(2).scale(&half())).pow(2)
        + (d(1) + d(2).scale(&q(1, 3))).pow(2).scale(&q(3, 4))
        + d(2).pow(2).scale(&q(2, 3));
    IdentityCheck::compare("sum of squares", &lhs, &condition_poly())
}

/// Left-hand side of the final identity for cyclic index `i`, with the
/// locus value of `χ` substituted.
#[must_use]
pub fn final_identity_lhs(i: usize) -> RationalPolynomial {
    let (a, b, c) = (d(0), d(1), d(2));
    let chi = chi_on_locus_poly();
    let base = (a.pow(2) + int(1)) * (c.pow(2) + int(1))
        + int(4) * (alpha_poly() * &c * &a - chi * (&c + &a))
        + (c.pow(2) - int(1)) * (a.pow(2) - int(1))
        - int(2) * (b.pow(2) - int(1));
    base.rotated(i % 3)
}

/// `2(d_i d_{i+2} - 1)(Σd² + Σd_id_j - 2)`.
#[must_use]
pub fn final_identity_rhs(i: usize) -> RationalPolynomial {
    (int(2) * (d(0) * d(2) - int(1)) * (condition_poly() - int(2))).rotated(i % 3)
}

/// The reduction of `⟨R_{i+2}, R_i⟩ + 1/3` to a multiple of the condition
/// polynomial, for cyclic index `i`.
#[must_use]
pub fn verify_final_identity(i: usize) -> IdentityCheck {
    IdentityCheck::compare(
        format!("final identity (i = {})", i % 3),
        &final_identity_lhs(i),
        &final_identity_rhs(i),
    )
}

/// `2X² + Y²/2 + Z²/2 = Σd² + Σd_id_j` under the ellipsoid rotation.
#[must_use]
pub fn verify_rotation_quadratic() -> IdentityCheck {
    let q = |n, m| BigRational::new(BigInt::from(n), BigInt::from(m));
    let x_sq = sum_poly().pow(2).scale(&q(1, 3));
    let y_sq = (d(1) + d(2) - int(2) * d(0)).pow(2).scale(&q(1, 6));
    let z_sq = (d(2) - d(1)).pow(2).scale(&q(1, 2));
    let lhs = int(2) * x_sq + (y_sq + z_sq).scale(&half());
    IdentityCheck::compare("rotation quadratic", &lhs, &condition_poly())
}

#[must_use]
pub fn verify_all() -> Vec<IdentityCheck> {
    let mut checks = vec![verify_factorisation(), verify_sum_of_squares()];
    checks.extend((0..3).map(verify_final_identity));
    checks.push(verify_rotation_quadratic());
    checks
}
