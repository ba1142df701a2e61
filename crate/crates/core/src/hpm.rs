//! Homotopy-perturbation series for the flat-plate momentum and energy
//! equations
//!
//! ```text
//! f''' + ½ f f'' = 0,        ε θ'' + ½ f θ' = 0,
//! ```
//!
//! with the far-field conditions imposed at a finite `η = L`.
//!
//! The homotopy uses the highest derivative as linear operator, so matching
//! powers of the embedding parameter `p` gives
//!
//! ```text
//! f_j'''   = −½ Σ_{k<j} f_k · f''_{j−1−k}
//! ε θ_j''  = −½ Σ_{k<j} f_k · θ'_{j−1−k}
//! ```
//!
//! Each order is integrated with zero constants and then corrected by the
//! single homogeneous term (`η²` for `f`, `η` for `θ`) that meets the
//! condition at `L`:
//!
//! ```text
//! f_j(0) = 0,  f_j'(0) = 0,  f_j'(L) = δ_j0,   θ_j(0) = δ_j0,  θ_j(L) = 0.
//! ```
//!
//! Polynomials can never satisfy `f'(∞) = 1`; the finite `L` is what makes
//! the scheme close at all.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactalg::{Rational, RationalPolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HpmError {
    #[error("domain length must satisfy L > 0, got {0}")]
    NonPositiveDomain(Rational),
    #[error("epsilon must be > 0, got {0}")]
    NonPositiveEpsilon(Rational),
    #[error("order {j} needs {j} prior corrections, got {got}")]
    PriorLength { j: usize, got: usize },
    #[error("recurrence order must be >= 1, got 0")]
    ZeroOrderStep,
    #[error("partial sum up to {up_to} exceeds series order {order}")]
    OutOfRange { up_to: usize, order: usize },
    #[error("invalid series document: {0}")]
    InvalidDocument(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HpmConfig {
    order: usize,
    domain_length: Rational,
    epsilon: Rational,
}

impl HpmConfig {
    pub fn new(order: usize, domain_length: Rational, epsilon: Rational) -> Result<Self, HpmError> {
        if !domain_length.is_positive() {
            return Err(HpmError::NonPositiveDomain(domain_length));
        }
        if !epsilon.is_positive() {
            return Err(HpmError::NonPositiveEpsilon(epsilon));
        }
        Ok(HpmConfig {
            order,
            domain_length,
            epsilon,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The truncated "infinity" `L`.
    pub fn domain_length(&self) -> &Rational {
        &self.domain_length
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }
}

/// Order 3, `L = 5`, `ε = 1`.
impl Default for HpmConfig {
    fn default() -> Self {
        HpmConfig {
            order: 3,
            domain_length: Rational::from(5),
            epsilon: Rational::one(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    F,
    Theta,
}

/// `f_0 = η²/(2L)` and `θ_0 = 1 − η/L`.
pub fn initial_corrections(config: &HpmConfig) -> (RationalPolynomial, RationalPolynomial) {
    let l = config.domain_length();
    let two_l = l + l;
    let f0 = RationalPolynomial::monomial(two_l.recip().expect("L > 0"), 2);
    let theta0 =
        RationalPolynomial::from_terms([(0, Rational::one()), (1, -l.recip().expect("L > 0"))]);
    (f0, theta0)
}

fn half() -> Rational {
    Rational::new(1, 2).expect("nonzero denominator")
}

/// `−½ Σ_{k<j} f_k · f''_{j−1−k}`
fn f_forcing(j: usize, prior_f: &[RationalPolynomial]) -> RationalPolynomial {
    let sum = (0..j).fold(RationalPolynomial::zero(), |acc, k| {
        acc + &prior_f[k] * &prior_f[j - 1 - k].derivative().derivative()
    });
    sum.scale(&-half())
}

/// `−½ Σ_{k<j} f_k · θ'_{j−1−k}`
fn theta_forcing(
    j: usize,
    prior_f: &[RationalPolynomial],
    prior_theta: &[RationalPolynomial],
) -> RationalPolynomial {
    let sum = (0..j).fold(RationalPolynomial::zero(), |acc, k| {
        acc + &prior_f[k] * &prior_theta[j - 1 - k].derivative()
    });
    sum.scale(&-half())
}

fn check_prior(j: usize, len: usize) -> Result<(), HpmError> {
    if j == 0 {
        return Err(HpmError::ZeroOrderStep);
    }
    if len < j {
        return Err(HpmError::PriorLength { j, got: len });
    }
    Ok(())
}

/// Order-`j` momentum correction. Only the first `j` entries of `prior_f`
/// are read.
pub fn recurrence_step_f(
    j: usize,
    prior_f: &[RationalPolynomial],
    config: &HpmConfig,
) -> Result<RationalPolynomial, HpmError> {
    check_prior(j, prior_f.len())?;
    let particular = f_forcing(j, prior_f)
        .antiderivative()
        .antiderivative()
        .antiderivative();
    // f_j'(L) = particular'(L) + 2cL must vanish.
    let l = config.domain_length();
    let slope_at_l = particular.derivative().eval(l);
    let c = (-slope_at_l).checked_div(&(l + l)).expect("L > 0");
    Ok(particular + RationalPolynomial::monomial(c, 2))
}

/// Order-`j` temperature correction, using `f_0..f_{j-1}` and `θ_0..θ_{j-1}`.
pub fn recurrence_step_theta(
    j: usize,
    prior_f: &[RationalPolynomial],
    prior_theta: &[RationalPolynomial],
    config: &HpmConfig,
) -> Result<RationalPolynomial, HpmError> {
    check_prior(j, prior_f.len())?;
    check_prior(j, prior_theta.len())?;
    let inv_eps = config.epsilon().recip().expect("ε > 0");
    let particular = theta_forcing(j, prior_f, prior_theta)
        .scale(&inv_eps)
        .antiderivative()
        .antiderivative();
    let l = config.domain_length();
    let c = (-particular.eval(l)).checked_div(l).expect("L > 0");
    Ok(particular + RationalPolynomial::monomial(c, 1))
}

/// Corrections `f_j`, `θ_j` for `j = 0..=order`; index `j` is the power of
/// the embedding parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HpmSeries {
    config: HpmConfig,
    f_corrections: Vec<RationalPolynomial>,
    theta_corrections: Vec<RationalPolynomial>,
}

pub fn build_series(config: &HpmConfig) -> HpmSeries {
    let (f0, theta0) = initial_corrections(config);
    let mut f = vec![f0];
    let mut theta = vec![theta0];
    for j in 1..=config.order() {
        let fj = recurrence_step_f(j, &f, config).expect("prior orders present");
        let tj = recurrence_step_theta(j, &f, &theta, config).expect("prior orders present");
        f.push(fj);
        theta.push(tj);
    }
    HpmSeries {
        config: config.clone(),
        f_corrections: f,
        theta_corrections: theta,
    }
}

/// A single violated exact identity, reported by [`HpmSeries::violations`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub profile: Profile,
    pub order: usize,
    pub condition: &'static str,
}

impl HpmSeries {
    pub fn config(&self) -> &HpmConfig {
        &self.config
    }

    pub fn order(&self) -> usize {
        self.config.order()
    }

    pub fn f_corrections(&self) -> &[RationalPolynomial] {
        &self.f_corrections
    }

    pub fn theta_corrections(&self) -> &[RationalPolynomial] {
        &self.theta_corrections
    }

    pub fn corrections(&self, which: Profile) -> &[RationalPolynomial] {
        match which {
            Profile::F => &self.f_corrections,
            Profile::Theta => &self.theta_corrections,
        }
    }

    /// Sum of corrections `0..=up_to`, i.e. the series at `p = 1`.
    pub fn partial_sum(
        &self,
        which: Profile,
        up_to: usize,
    ) -> Result<RationalPolynomial, HpmError> {
        if up_to > self.order() {
            return Err(HpmError::OutOfRange {
                up_to,
                order: self.order(),
            });
        }
        Ok(self.corrections(which)[..=up_to]
            .iter()
            .fold(RationalPolynomial::zero(), |acc, p| acc + p))
    }

    /// Partial sum over every stored order.
    pub fn total(&self, which: Profile) -> RationalPolynomial {
        self.partial_sum(which, self.order())
            .expect("order is in range")
    }

    /// `f_j''' + ½ Σ f_k f''_{j−1−k}`; zero for every valid `j ≥ 1`.
    pub fn f_residual(&self, j: usize) -> RationalPolynomial {
        self.f_corrections[j].derivative().derivative().derivative()
            - f_forcing(j, &self.f_corrections)
    }

    /// `ε θ_j'' + ½ Σ f_k θ'_{j−1−k}`; zero for every valid `j ≥ 1`.
    pub fn theta_residual(&self, j: usize) -> RationalPolynomial {
        self.theta_corrections[j]
            .derivative()
            .derivative()
            .scale(self.config.epsilon())
            - theta_forcing(j, &self.f_corrections, &self.theta_corrections)
    }

    /// Every per-order boundary identity and ODE residual that fails to hold
    /// exactly. Empty for any series produced by [`build_series`].
    pub fn violations(&self) -> Vec<Violation> {
        let zero = Rational::zero();
        let l = self.config.domain_length();
        let delta = |j: usize| {
            if j == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        };
        let mut out = Vec::new();
        let mut check = |ok: bool, profile, order, condition| {
            if !ok {
                out.push(Violation {
                    profile,
                    order,
                    condition,
                });
            }
        };
        for (j, f) in self.f_corrections.iter().enumerate() {
            let fp = f.derivative();
            check(f.eval(&zero).is_zero(), Profile::F, j, "f_j(0) = 0");
            check(fp.eval(&zero).is_zero(), Profile::F, j, "f_j'(0) = 0");
            check(fp.eval(l) == delta(j), Profile::F, j, "f_j'(L) = delta_j0");
            if j > 0 {
                check(
                    self.f_residual(j).is_zero(),
                    Profile::F,
                    j,
                    "order-j momentum residual = 0",
                );
            }
        }
        for (j, t) in self.theta_corrections.iter().enumerate() {
            check(
                t.eval(&zero) == delta(j),
                Profile::Theta,
                j,
                "theta_j(0) = delta_j0",
            );
            check(t.eval(l).is_zero(), Profile::Theta, j, "theta_j(L) = 0");
            if j > 0 {
                check(
                    self.theta_residual(j).is_zero(),
                    Profile::Theta,
                    j,
                    "order-j energy residual = 0",
                );
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SeriesDocument::from(self)).expect("series serializes")
    }

    /// Parses a document written by [`HpmSeries::to_json`], rejecting any
    /// that is not an exact series for its own configuration.
    pub fn from_json(text: &str) -> Result<Self, HpmError> {
        let doc: SeriesDocument =
            serde_json::from_str(text).map_err(|e| HpmError::InvalidDocument(e.to_string()))?;
        let config = HpmConfig::new(doc.order, doc.domain_length, doc.epsilon)?;
        let expected = config.order() + 1;
        if doc.f_corrections.len() != expected || doc.theta_corrections.len() != expected {
            return Err(HpmError::InvalidDocument(format!(
                "expected {expected} corrections per profile, got {} and {}",
                doc.f_corrections.len(),
                doc.theta_corrections.len()
            )));
        }
        let series = HpmSeries {
            config,
            f_corrections: doc.f_corrections,
            theta_corrections: doc.theta_corrections,
        };
        if let Some(v) = series.violations().first() {
            return Err(HpmError::InvalidDocument(format!(
                "{:?} order {} violates {}",
                v.profile, v.order, v.condition
            )));
        }
        Ok(series)
    }

    /// One row per stored term: `profile,j,power,num,den`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("profile,j,power,num,den\n");
        for (name, list) in [
            ("f", &self.f_corrections),
            ("theta", &self.theta_corrections),
        ] {
            for (j, p) in list.iter().enumerate() {
                for (power, c) in p.terms() {
                    out.push_str(&format!("{name},{j},{power},{},{}\n", c.numer(), c.denom()));
                }
            }
        }
        out
    }
}

/// Human-readable listing of every correction and both partial sums.
impl fmt::Display for HpmSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "# HPM series: order={} L={} epsilon={}",
            self.order(),
            self.config.domain_length(),
            self.config.epsilon()
        )?;
        for (j, p) in self.f_corrections.iter().enumerate() {
            writeln!(f, "f{j} = {p}")?;
        }
        for (j, p) in self.theta_corrections.iter().enumerate() {
            writeln!(f, "theta{j} = {p}")?;
        }
        writeln!(f, "F = {}", self.total(Profile::F))?;
        writeln!(f, "Theta = {}", self.total(Profile::Theta))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesDocument {
    order: usize,
    #[serde(rename = "L")]
    domain_length: Rational,
    epsilon: Rational,
    f_corrections: Vec<RationalPolynomial>,
    theta_corrections: Vec<RationalPolynomial>,
}

impl From<&HpmSeries> for SeriesDocument {
    fn from(s: &HpmSeries) -> Self {
        SeriesDocument {
            order: s.order(),
            domain_length: s.config.domain_length().clone(),
            epsilon: s.config.epsilon().clone(),
            f_corrections: s.f_corrections.clone(),
            theta_corrections: s.theta_corrections.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn poly(terms: &[(u32, i64, i64)]) -> RationalPolynomial {
        RationalPolynomial::from_terms(terms.iter().map(|&(k, n, d)| (k, r(n, d))))
    }

    fn config(order: usize, l: Rational, eps: Rational) -> HpmConfig {
        HpmConfig::new(order, l, eps).unwrap()
    }

    #[test]
    fn config_rejects_nonpositive_parameters() {
        assert!(matches!(
            HpmConfig::new(3, Rational::zero(), Rational::one()),
            Err(HpmError::NonPositiveDomain(_))
        ));
        assert!(matches!(
            HpmConfig::new(3, r(5, 1), Rational::zero()),
            Err(HpmError::NonPositiveEpsilon(_))
        ));
        assert!(HpmConfig::new(3, r(5, 1), r(-1, 2)).is_err());
    }

    #[test]
    fn zeroth_order() {
        let (f0, t0) = initial_corrections(&HpmConfig::default());
        assert_eq!(f0, poly(&[(2, 1, 10)]));
        assert_eq!(t0, poly(&[(0, 1, 1), (1, -1, 5)]));
        let (f0, _) = initial_corrections(&config(0, r(10, 1), Rational::one()));
        assert_eq!(f0, poly(&[(2, 1, 20)]));
    }

    #[test]
    fn first_and_second_momentum_corrections() {
        let cfg = HpmConfig::default();
        let (f0, _) = initial_corrections(&cfg);
        let f1 = recurrence_step_f(1, std::slice::from_ref(&f0), &cfg).unwrap();
        assert_eq!(f1, poly(&[(5, -1, 6000), (2, 5, 96)]));
        let f2 = recurrence_step_f(2, &[f0, f1], &cfg).unwrap();
        assert_eq!(
            f2,
            poly(&[(8, 11, 20160000), (5, -1, 5760), (2, 325, 16128)])
        );
    }

    #[test]
    fn first_order_degree_is_five_for_any_domain() {
        for l in [r(1, 3), r(5, 1), r(7, 2), r(40, 1)] {
            let cfg = config(1, l, Rational::one());
            let (f0, _) = initial_corrections(&cfg);
            assert_eq!(recurrence_step_f(1, &[f0], &cfg).unwrap().degree(), Some(5));
        }
    }

    #[test]
    fn first_temperature_correction() {
        let cfg = HpmConfig::default();
        let (f0, t0) = initial_corrections(&cfg);
        let t1 = recurrence_step_theta(
            1,
            std::slice::from_ref(&f0),
            std::slice::from_ref(&t0),
            &cfg,
        )
        .unwrap();
        assert_eq!(t1, poly(&[(4, 1, 1200), (1, -5, 48)]));
        assert!(t1.eval(&Rational::zero()).is_zero());

        let cfg2 = config(1, r(5, 1), r(2, 1));
        let t1 = recurrence_step_theta(1, &[f0], &[t0], &cfg2).unwrap();
        assert_eq!(t1, poly(&[(4, 1, 2400), (1, -5, 96)]));
    }

    #[test]
    fn step_argument_errors() {
        let cfg = HpmConfig::default();
        assert_eq!(
            recurrence_step_f(0, &[], &cfg),
            Err(HpmError::ZeroOrderStep)
        );
        assert_eq!(
            recurrence_step_f(2, &[poly(&[(2, 1, 10)])], &cfg),
            Err(HpmError::PriorLength { j: 2, got: 1 })
        );
    }

    #[test]
    fn order_three_matches_published_polynomial() {
        let series = build_series(&HpmConfig::default());
        let f = series.total(Profile::F);
        let expected = poly(&[
            (2, 1348969, 7741440),
            (5, -4867, 10752000),
            (8, 451, 322560000),
            (11, -1, 532224000),
        ]);
        assert_eq!(f, expected);
        assert_eq!(f.powers(), vec![2, 5, 8, 11]);
    }

    #[test]
    fn partial_sums() {
        let series = build_series(&HpmConfig::default());
        assert_eq!(
            series.partial_sum(Profile::F, 0).unwrap(),
            poly(&[(2, 1, 10)])
        );
        let expected = poly(&[(2, 1, 10), (2, 5, 96), (5, -1, 6000)]);
        assert_eq!(series.partial_sum(Profile::F, 1).unwrap(), expected);
        assert_eq!(
            series.partial_sum(Profile::F, 4),
            Err(HpmError::OutOfRange { up_to: 4, order: 3 })
        );
        let zeroth = build_series(&config(0, r(5, 1), Rational::one()));
        assert_eq!(zeroth.total(Profile::F), poly(&[(2, 1, 10)]));
    }

    #[test]
    fn degree_law() {
        let series = build_series(&config(6, r(5, 1), Rational::one()));
        for (j, f) in series.f_corrections().iter().enumerate() {
            assert_eq!(f.degree(), Some(3 * j as u32 + 2), "order {j}");
        }
    }

    #[test]
    fn partial_sum_slope_is_never_constant() {
        for order in 0..5 {
            let series = build_series(&config(order, r(5, 1), Rational::one()));
            let slope = series.total(Profile::F).derivative();
            assert!(slope.degree().unwrap() >= 1);
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let series = build_series(&config(4, r(7, 2), r(3, 5)));
        let text = series.to_json();
        assert!(text.contains("\"L\""));
        let back = HpmSeries::from_json(&text).unwrap();
        assert_eq!(back, series);
        assert_eq!(back.to_json(), text);

        let tampered = text.replacen("\"num\": \"1\"", "\"num\": \"2\"", 1);
        assert!(matches!(
            HpmSeries::from_json(&tampered),
            Err(HpmError::InvalidDocument(_))
        ));
        assert!(HpmSeries::from_json("{}").is_err());
    }

    #[test]
    fn csv_lists_every_term() {
        let series = build_series(&HpmConfig::default());
        let csv = series.to_csv();
        assert!(csv.starts_with("profile,j,power,num,den\n"));
        assert!(csv.contains("f,1,5,-1,6000\n"));
        assert!(csv.contains("theta,0,0,1,1\n"));
    }

    #[test]
    fn pretty_listing() {
        let text = build_series(&config(0, r(5, 1), Rational::one())).to_string();
        assert!(text.contains("f0 = (1/10)*eta^2\n"));
        assert!(text.contains("theta0 = 1 - (1/5)*eta\n"));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn first_order_theta_scales_with_inverse_epsilon(n in 1i64..40, d in 1i64..40) {
            let eps = r(n, d);
            let unit = build_series(&config(1, r(5, 1), Rational::one()));
            let scaled = build_series(&config(1, r(5, 1), eps.clone()));
            let expected = unit.theta_corrections()[1].scale(&eps.recip().unwrap());
            prop_assert_eq!(&scaled.theta_corrections()[1], &expected);
        }

        #[test]
        fn exact_identities_hold(ln in 1i64..30, ld in 1i64..5, en in 1i64..10, ed in 1i64..10, order in 0usize..4) {
            let series = build_series(&config(order, r(ln, ld), r(en, ed)));
            prop_assert!(series.violations().is_empty());
        }
    }
}
