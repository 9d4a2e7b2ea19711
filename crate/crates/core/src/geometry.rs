//! Holomorphic tori `u = H·e^{C₀ + D(λ)}`: modulus, twistor angle,
//! translation constant, the Cauchy-Riemann defect and the evaluation
//! cycle.
//!
//! Complex structures and moduli are floating point; everything that is
//! rational in the input (the translation constant, the `λ` period and the
//! pulled-back forms) stays exact.

pub mod poly;

use num_traits::{Float, ToPrimitive, Zero};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::homology::{H3Class, HomologyClass};
use crate::homs::HomDerivs;
use crate::nilalg::{GroupElem, LieAlgElem};
use crate::Rational;
use poly::{d, wedge3, Poly3};

/// Floating-point scalar for the geometric data.
pub trait Real: Float + std::fmt::Debug {}

impl<T: Float + std::fmt::Debug> Real for T {}

fn to_float<F: Real>(q: &Rational) -> F {
    F::from(q.to_f64().expect("finite rational")).expect("representable")
}

/// Orthogonal complex structure `ψ_θ` on `𝔫`: `Ψ_θ` on `span(n₃, n₄) →
/// span(n₁, n₂)` and `−Ψ_θᵀ` back.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwistorStructure<F> {
    pub cos_theta: F,
    pub sin_theta: F,
}

impl<F: Real> TwistorStructure<F> {
    pub fn new(cos_theta: F, sin_theta: F) -> Self {
        Self {
            cos_theta,
            sin_theta,
        }
    }

    pub fn from_angle(theta: F) -> Self {
        Self::new(theta.cos(), theta.sin())
    }

    /// Angle in `(−π, π]`.
    pub fn theta(&self) -> F {
        self.sin_theta.atan2(self.cos_theta)
    }

    /// `Ψ_θ = [[cos, −sin], [sin, cos]]`.
    pub fn rotation(&self) -> [[F; 2]; 2] {
        let (c, s) = (self.cos_theta, self.sin_theta);
        [[c, -s], [s, c]]
    }

    pub fn apply(&self, v: &LieAlgElem<F>) -> LieAlgElem<F> {
        let (c, s) = (self.cos_theta, self.sin_theta);
        LieAlgElem::new(
            c * v.t - s * v.z,
            s * v.t + c * v.z,
            -(c * v.y + s * v.x),
            s * v.y - c * v.x,
        )
    }

    /// Matrix of `ψ` in the basis `n₁..n₄`; column `j` is `ψ(n_{j+1})`.
    pub fn matrix(&self) -> [[F; 4]; 4] {
        let mut m = [[F::zero(); 4]; 4];
        for j in 0..4 {
            let col = self.apply(&LieAlgElem::basis(j + 1)).to_array();
            for i in 0..4 {
                m[i][j] = col[i];
            }
        }
        m
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusModulus<F> {
    pub tau1: F,
    pub tau2: F,
}

/// The three-dimensional family `He^{C₀ + D(λ)}` of tori over one
/// fully reduced `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusSolution<F> {
    pub h: HomDerivs,
    pub modulus: TorusModulus<F>,
    pub psi: TwistorStructure<F>,
    /// Multiple of `n₂`.
    pub c0: LieAlgElem<Rational>,
    /// `1 / gcd(∂_p h₃, ∂_p h₄)`.
    pub lambda_period: Rational,
}

impl<F: Real> TorusSolution<F> {
    /// `D(λ) = λ(∂_p h₄ n₃ − ∂_p h₃ n₄)`.
    pub fn d_lambda(&self, lambda: &Rational) -> LieAlgElem<Rational> {
        LieAlgElem::new(
            Rational::zero(),
            Rational::zero(),
            self.h.p(4) * lambda,
            -(self.h.p(3) * lambda),
        )
    }
}

/// Modulus, twistor angle and translation constant of the tori over `h`.
pub fn solve_torus_data<F: Real>(h: &HomDerivs) -> Result<TorusSolution<F>> {
    if !h.is_valid() {
        return Err(Error::InvalidHom);
    }
    if !h.p(1).is_zero() || !h.p(2).is_zero() {
        return Err(Error::NotReduced);
    }
    if h.p(3).is_zero() {
        return Err(Error::Obstructed);
    }
    if h.q(1).is_zero() {
        return Err(Error::DegenerateDq);
    }
    let (a, b) = (h.q(1), h.q(2));
    let (p3, p4) = (h.p(3), h.p(4));
    let tau1_exact = h.q(3) / p3;
    let norm_v2 = p3 * p3 + p4 * p4;
    let norm_ab: F = to_float::<F>(&(a * a + b * b)).sqrt();
    let tau2 = norm_ab / to_float::<F>(&norm_v2).sqrt();

    // Ψ v = w with v = (∂_p h₃, ∂_p h₄), w = (∂_q h₁, ∂_q h₂)/τ₂
    let nv2: F = to_float(&norm_v2);
    let (v1, v2): (F, F) = (to_float(p3), to_float(p4));
    let (w1, w2) = (to_float::<F>(a) / tau2, to_float::<F>(b) / tau2);
    let cos = (v1 * w1 + v2 * w2) / nv2;
    let sin = (v1 * w2 - v2 * w1) / nv2;

    let c0_x = (h.q(4) - &tau1_exact * p4) / a;
    let c0 = LieAlgElem::new(Rational::zero(), c0_x, Rational::zero(), Rational::zero());

    let g = gcd(
        p3.to_integer().to_i64().expect("integral ∂_p h₃"),
        p4.to_integer().to_i64().expect("integral ∂_p h₄"),
    );
    Ok(TorusSolution {
        h: h.clone(),
        modulus: TorusModulus {
            tau1: to_float(&tau1_exact),
            tau2,
        },
        psi: TwistorStructure::new(cos, sin),
        c0,
        lambda_period: Rational::new(1.into(), g.into()),
    })
}

/// `exp(h(p, q)) · exp(C₀ + D(λ))`, exactly.
pub fn curve_point_exact<F: Real>(
    s: &TorusSolution<F>,
    lambda: &Rational,
    p: &Rational,
    q: &Rational,
) -> GroupElem<Rational> {
    let h = &s.h;
    let (a, b) = (h.q(1), h.q(2));
    let half = Rational::new(1.into(), 2.into());
    GroupElem::new(
        q * b + &s.c0.x,
        q * a,
        -(lambda * h.p(3)) + p * h.p(4) + q * h.q(4) + half * q * q * a * b,
        lambda * h.p(4) + p * h.p(3) + q * h.q(3),
    )
}

pub fn curve_point<F: Real>(s: &TorusSolution<F>, lambda: F, p: F, q: F) -> GroupElem<F> {
    let f = |r: &Rational| to_float::<F>(r);
    let h = &s.h;
    let (a, b) = (f(h.q(1)), f(h.q(2)));
    let two = F::one() + F::one();
    GroupElem::new(
        q * b + f(&s.c0.x),
        q * a,
        -lambda * f(h.p(3)) + p * f(h.p(4)) + q * f(h.q(4)) + q * q * a * b / two,
        lambda * f(h.p(4)) + p * f(h.p(3)) + q * f(h.q(3)),
    )
}

/// Maximum over a `grid × grid` sample of `[0,1]²` of
/// `|ψ(∂_a w − ½[w, ∂_a w]) − (∂_b w − ½[w, ∂_b w])|` for `w = log u`.
pub fn cr_residual<F: Real>(s: &TorusSolution<F>, grid: usize) -> Result<F> {
    if grid < 2 {
        return Err(Error::GridTooSmall(grid));
    }
    let half = Rational::new(1.into(), 2.into());
    let c = &s.c0 + &s.d_lambda(&Rational::zero());
    // w is affine in (p, q): w = w0 + p·wp + q·wq
    let wp = &s.h.dp + &s.h.dp.bracket(&c).scale(&half);
    let wq = &s.h.dq + &s.h.dq.bracket(&c).scale(&half);
    let to_f = |v: &LieAlgElem<Rational>| v.map(to_float::<F>);
    let (c_f, wp_f, wq_f) = (to_f(&c), to_f(&wp), to_f(&wq));
    let TorusModulus { tau1, tau2 } = s.modulus;
    let da = wp_f.clone();
    let db = (wq_f.clone() - wp_f.scale(&tau1)).scale(&(F::one() / tau2));
    let half_f = F::one() / (F::one() + F::one());

    let step = F::one() / F::from(grid - 1).expect("grid size");
    let mut worst = F::zero();
    for i in 0..grid {
        for j in 0..grid {
            let p = F::from(i).unwrap() * step;
            let q = F::from(j).unwrap() * step;
            let w = c_f.clone() + wp_f.scale(&p) + wq_f.scale(&q);
            let la = da.clone() - w.bracket(&da).scale(&half_f);
            let lb = db.clone() - w.bracket(&db).scale(&half_f);
            let defect = s.psi.apply(&la) - lb;
            worst = worst.max(defect.dot(&defect).sqrt());
        }
    }
    Ok(worst)
}

/// `ω_θ(A)` for `ω_θ = g(ψ_θ·, ·)`.
pub fn symplectic_area<F: Real>(a: &HomologyClass, psi: &TwistorStructure<F>) -> F {
    let f = |v: i64| F::from(v).expect("representable");
    -(psi.cos_theta * f(a.a13 + a.a24) + psi.sin_theta * f(a.a23 - a.a14))
}

/// Coordinates `(x, y, z, log t)` of the curve as exact polynomials in
/// `(λ, p, q)`.
pub fn curve_polys<F: Real>(s: &TorusSolution<F>) -> GroupElem<Poly3> {
    let h = &s.h;
    let (l, p, q) = (Poly3::var(0), Poly3::var(1), Poly3::var(2));
    let k = |r: &Rational| Poly3::constant(r.clone());
    let half = Rational::new(1.into(), 2.into());
    let qq = &q * &q;
    let x = &q.scale(h.q(2)) + &k(&s.c0.x);
    let y = q.scale(h.q(1));
    let z = &(&(&l.scale(&-h.p(3)) + &p.scale(h.p(4))) + &q.scale(h.q(4)))
        + &qq.scale(&(half * h.q(1) * h.q(2)));
    let t = &(&l.scale(h.p(4)) + &p.scale(h.p(3))) + &q.scale(h.q(3));
    GroupElem { x, y, z, logt: t }
}

/// `∫ e₁₃₄, ∫ e₂₃₄, ∫ e₁₂₄` over `[0, L] × [0,1]²` against `dλ∧dp∧dq`.
pub fn pullback_integrals<F: Real>(s: &TorusSolution<F>) -> H3Class {
    let c = curve_polys(s);
    let (dx, dy, dt) = (d(&c.x), d(&c.y), d(&c.logt));
    let dz = d(&c.z);
    // γ = dz − x dy
    let gamma = [0, 1, 2].map(|i| &dz[i] - &(&c.x * &dy[i]));
    let one = Rational::from_integer(1.into());
    let bounds = [&s.lambda_period, &one, &one];
    let integrate = |f: Poly3| f.integrate_box(bounds);
    H3Class::new(
        integrate(wedge3(&dy, &dt, &gamma)),
        integrate(wedge3(&dx, &dt, &gamma)),
        integrate(wedge3(&dy, &dx, &gamma)),
    )
}

/// Homology class of the evaluation cycle of one component, oriented by
/// `dp∧dλ∧dq`. Under this orientation every component of `[m, m, n, n]`
/// represents `sgn(m)(m² + n²)/gcd(m, n)·(E₁₃₄ + E₂₃₄)`.
pub fn eval_class_integrate<F: Real>(s: &TorusSolution<F>) -> H3Class {
    pullback_integrals(s).neg()
}
