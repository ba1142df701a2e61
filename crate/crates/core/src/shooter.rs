//! Reference numerical solution of the Blasius problem
//!
//! ```text
//! f''' + ½ f f'' = 0,   f(0) = f'(0) = 0,   f'(η_max) = 1
//! ```
//!
//! by fixed-step RK4 and shooting on `s = f''(0)`, plus the temperature
//! profile by integrating-factor quadrature over the converged trajectory.

use std::fmt::Write as _;

use thiserror::Error;

/// Integration aborts once `|f''|` grows past this.
pub const DIVERGENCE_LIMIT: f64 = 1e6;

/// Bisection stops when the bracket on `s` is narrower than this.
pub const BRACKET_WIDTH: f64 = 1e-12;

/// Bisection steps spent locating the edge of a divergent region of `s`.
const FRONTIER_STEPS: usize = 30;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ShootError {
    #[error("invalid integrator settings: {0}")]
    InvalidSettings(String),
    #[error("integration diverged at eta = {eta} for s = {s}")]
    Diverged { s: f64, eta: f64 },
    #[error("no sign change on bracket [{lo}, {hi}]: g({lo}) = {g_lo:+e}, g({hi}) = {g_hi:+e}")]
    NoSignChange {
        lo: f64,
        hi: f64,
        g_lo: f64,
        g_hi: f64,
    },
    #[error("bracket emptied while shrinking away from divergent probes")]
    BracketEmpty,
    #[error("residual {residual:e} above tolerance {tol:e}")]
    NotConverged { residual: f64, tol: f64 },
    #[error("epsilon must be > 0, got {0}")]
    InvalidEpsilon(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegratorSettings {
    eta_max: f64,
    step: f64,
    shoot_tol: f64,
    bracket: (f64, f64),
}

impl IntegratorSettings {
    pub fn new(
        eta_max: f64,
        step: f64,
        shoot_tol: f64,
        bracket: (f64, f64),
    ) -> Result<Self, ShootError> {
        let bad = |msg: String| Err(ShootError::InvalidSettings(msg));
        if !(eta_max.is_finite() && eta_max > 0.0) {
            return bad(format!("eta_max must be > 0, got {eta_max}"));
        }
        if !(step > 0.0 && step <= eta_max) {
            return bad(format!("step must lie in (0, eta_max], got {step}"));
        }
        if !(shoot_tol > 0.0) {
            return bad(format!("shoot_tol must be > 0, got {shoot_tol}"));
        }
        if !(bracket.0.is_finite() && bracket.1.is_finite() && bracket.0 < bracket.1) {
            return bad(format!("bracket must satisfy low < high, got {bracket:?}"));
        }
        Ok(IntegratorSettings {
            eta_max,
            step,
            shoot_tol,
            bracket,
        })
    }

    pub fn eta_max(&self) -> f64 {
        self.eta_max
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn shoot_tol(&self) -> f64 {
        self.shoot_tol
    }

    pub fn bracket(&self) -> (f64, f64) {
        self.bracket
    }

    pub fn with_eta_max(self, eta_max: f64) -> Result<Self, ShootError> {
        Self::new(eta_max, self.step, self.shoot_tol, self.bracket)
    }

    pub fn with_step(self, step: f64) -> Result<Self, ShootError> {
        Self::new(self.eta_max, step, self.shoot_tol, self.bracket)
    }

    pub fn with_bracket(self, lo: f64, hi: f64) -> Result<Self, ShootError> {
        Self::new(self.eta_max, self.step, self.shoot_tol, (lo, hi))
    }
}

/// `η_max = 10`, step `1e-3`, tolerance `1e-8`, bracket `[0.1, 1.0]`.
impl Default for IntegratorSettings {
    fn default() -> Self {
        IntegratorSettings {
            eta_max: 10.0,
            step: 1e-3,
            shoot_tol: 1e-8,
            bracket: (0.1, 1.0),
        }
    }
}

/// Right-hand side of the momentum equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Momentum {
    /// `f''' = −½ f f''`
    #[default]
    Blasius,
    /// `f''' = 0`, whose exact solution `f' = s η` checks the machinery.
    Linear,
}

impl Momentum {
    fn rhs(self, y: [f64; 3]) -> [f64; 3] {
        let third = match self {
            Momentum::Blasius => -0.5 * y[0] * y[2],
            Momentum::Linear => 0.0,
        };
        [y[1], y[2], third]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub eta: f64,
    pub f: f64,
    pub fp: f64,
    pub fpp: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    samples: Vec<Sample>,
}

impl Trajectory {
    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn last(&self) -> &Sample {
        self.samples.last().expect("trajectory is never empty")
    }

    pub fn eta_max(&self) -> f64 {
        self.last().eta
    }

    /// `f'` linearly interpolated between grid points; `None` outside `[0, η_max]`.
    pub fn fp_at(&self, eta: f64) -> Option<f64> {
        interpolate(&self.samples, eta, |s| s.eta, |s| s.fp)
    }

    /// CSV with header `eta,f,fp,fpp`.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.samples.len() * 64);
        out.push_str("eta,f,fp,fpp\n");
        for s in &self.samples {
            let _ = writeln!(out, "{:.12},{:.12},{:.12},{:.12}", s.eta, s.f, s.fp, s.fpp);
        }
        out
    }
}

pub(crate) fn interpolate<T>(
    rows: &[T],
    x: f64,
    key: impl Fn(&T) -> f64,
    value: impl Fn(&T) -> f64,
) -> Option<f64> {
    let first = rows.first()?;
    let last = rows.last()?;
    if x < key(first) || x > key(last) {
        return None;
    }
    let i = rows.partition_point(|r| key(r) < x);
    if i == 0 {
        return Some(value(first));
    }
    let (a, b) = (&rows[i - 1], &rows[i]);
    let t = (x - key(a)) / (key(b) - key(a));
    Some(value(a) + t * (value(b) - value(a)))
}

fn rk4_step(momentum: Momentum, y: [f64; 3], h: f64) -> [f64; 3] {
    let add =
        |y: [f64; 3], k: [f64; 3], c: f64| [y[0] + c * k[0], y[1] + c * k[1], y[2] + c * k[2]];
    let k1 = momentum.rhs(y);
    let k2 = momentum.rhs(add(y, k1, h / 2.0));
    let k3 = momentum.rhs(add(y, k2, h / 2.0));
    let k4 = momentum.rhs(add(y, k3, h));
    std::array::from_fn(|i| y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
}

/// Uniform grid `0, h, 2h, …` closed by a final partial step landing on `η_max`.
fn grid(settings: &IntegratorSettings) -> Vec<f64> {
    let ratio = settings.eta_max / settings.step;
    let n = if (ratio - ratio.round()).abs() < 1e-9 {
        ratio.round() as usize
    } else {
        ratio.ceil() as usize
    };
    let mut etas: Vec<f64> = (0..n).map(|i| i as f64 * settings.step).collect();
    etas.push(settings.eta_max);
    etas
}

pub fn integrate_blasius(s: f64, settings: &IntegratorSettings) -> Result<Trajectory, ShootError> {
    integrate(Momentum::Blasius, s, settings)
}

/// Integrates from `(f, f', f'') = (0, 0, s)` out to `η_max`.
pub fn integrate(
    momentum: Momentum,
    s: f64,
    settings: &IntegratorSettings,
) -> Result<Trajectory, ShootError> {
    let etas = grid(settings);
    let mut samples = Vec::with_capacity(etas.len());
    let mut y = [0.0, 0.0, s];
    samples.push(Sample {
        eta: 0.0,
        f: 0.0,
        fp: 0.0,
        fpp: s,
    });
    for w in etas.windows(2) {
        y = rk4_step(momentum, y, w[1] - w[0]);
        if !y.iter().all(|v| v.is_finite()) || y[2].abs() > DIVERGENCE_LIMIT {
            return Err(ShootError::Diverged { s, eta: w[1] });
        }
        samples.push(Sample {
            eta: w[1],
            f: y[0],
            fp: y[1],
            fpp: y[2],
        });
    }
    Ok(Trajectory { samples })
}

/// `g(s) = f'(η_max; s) − 1`.
pub fn shooting_function(
    momentum: Momentum,
    s: f64,
    settings: &IntegratorSettings,
) -> Result<f64, ShootError> {
    Ok(integrate(momentum, s, settings)?.last().fp - 1.0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShootingResult {
    pub s_star: f64,
    pub trajectory: Trajectory,
    /// `|f'(η_max) − 1|` at `s_star`.
    pub residual: f64,
    /// Shooting-function evaluations spent inside the bisection/secant loop.
    pub iterations: usize,
    pub eta_max_used: f64,
}

pub fn solve_shooting(settings: &IntegratorSettings) -> Result<ShootingResult, ShootError> {
    solve_shooting_with(Momentum::Blasius, settings)
}

/// Replaces a divergent bracket end by the non-divergent point nearest to
/// it: halve toward `anchor` until a shot survives, then bisect the
/// divergence frontier between the last failing and first surviving probe.
fn retreat_from_divergence(
    momentum: Momentum,
    settings: &IntegratorSettings,
    end: f64,
    anchor: f64,
) -> Result<(f64, f64), ShootError> {
    let probe = |s: f64| match shooting_function(momentum, s, settings) {
        Ok(g) => Ok(Some(g)),
        Err(ShootError::Diverged { .. }) => Ok(None),
        Err(e) => Err(e),
    };
    if let Some(g) = probe(end)? {
        return Ok((end, g));
    }
    let mut bad = end;
    let (mut good, mut g_good) = loop {
        let next = anchor + (bad - anchor) / 2.0;
        if (next - anchor).abs() < BRACKET_WIDTH {
            return Err(ShootError::BracketEmpty);
        }
        match probe(next)? {
            Some(g) => break (next, g),
            None => bad = next,
        }
    };
    for _ in 0..FRONTIER_STEPS {
        let mid = good + (bad - good) / 2.0;
        match probe(mid)? {
            Some(g) => (good, g_good) = (mid, g),
            None => bad = mid,
        }
    }
    Ok((good, g_good))
}

/// Bisection down to [`BRACKET_WIDTH`], then one secant step across the
/// final bracket; whichever of the midpoint and secant point has the
/// smaller residual is kept.
pub fn solve_shooting_with(
    momentum: Momentum,
    settings: &IntegratorSettings,
) -> Result<ShootingResult, ShootError> {
    let (lo0, hi0) = settings.bracket();
    let (mut lo, mut g_lo) = retreat_from_divergence(momentum, settings, lo0, hi0)?;
    let (mut hi, mut g_hi) = retreat_from_divergence(momentum, settings, hi0, lo)?;
    if g_lo.signum() == g_hi.signum() && g_lo != 0.0 && g_hi != 0.0 {
        return Err(ShootError::NoSignChange { lo, hi, g_lo, g_hi });
    }

    let mut iterations = 0;
    let (mut best_s, mut best_g) = if g_lo.abs() <= g_hi.abs() {
        (lo, g_lo)
    } else {
        (hi, g_hi)
    };
    while best_g != 0.0 && hi - lo > BRACKET_WIDTH {
        let mid = lo + (hi - lo) / 2.0;
        let g_mid = shooting_function(momentum, mid, settings)?;
        iterations += 1;
        if g_mid.abs() < best_g.abs() {
            (best_s, best_g) = (mid, g_mid);
        }
        if g_mid.signum() == g_lo.signum() {
            (lo, g_lo) = (mid, g_mid);
        } else {
            (hi, g_hi) = (mid, g_mid);
        }
    }

    if best_g != 0.0 && g_hi != g_lo {
        let secant = lo - g_lo * (hi - lo) / (g_hi - g_lo);
        if secant.is_finite() && (lo..=hi).contains(&secant) {
            let g_sec = shooting_function(momentum, secant, settings)?;
            iterations += 1;
            if g_sec.abs() <= best_g.abs() {
                (best_s, best_g) = (secant, g_sec);
            }
        }
    }

    let residual = best_g.abs();
    if residual > settings.shoot_tol() {
        return Err(ShootError::NotConverged {
            residual,
            tol: settings.shoot_tol(),
        });
    }
    Ok(ShootingResult {
        s_star: best_s,
        trajectory: integrate(momentum, best_s, settings)?,
        residual,
        iterations,
        eta_max_used: settings.eta_max(),
    })
}

/// Temperature profile for `ε θ'' + ½ f θ' = 0`, `θ(0) = 1`, `θ(η_max) = 0`:
///
/// ```text
/// θ(η) = 1 − W(η) / W(η_max),   W(η) = ∫₀^η exp(−(1/2ε) ∫₀^t f) dt
/// ```
///
/// with both integrals taken by the composite trapezoid rule on the
/// trajectory grid.
pub fn theta_profile(trajectory: &Trajectory, epsilon: f64) -> Result<Vec<(f64, f64)>, ShootError> {
    if !(epsilon > 0.0) {
        return Err(ShootError::InvalidEpsilon(epsilon));
    }
    let samples = trajectory.samples();
    let mut inner = 0.0;
    let mut outer = 0.0;
    let mut weight_prev = 1.0;
    let mut cumulative = Vec::with_capacity(samples.len());
    cumulative.push(0.0);
    for w in samples.windows(2) {
        let h = w[1].eta - w[0].eta;
        inner += 0.5 * h * (w[0].f + w[1].f);
        let weight = (-inner / (2.0 * epsilon)).exp();
        outer += 0.5 * h * (weight_prev + weight);
        weight_prev = weight;
        cumulative.push(outer);
    }
    let total = outer;
    Ok(samples
        .iter()
        .zip(cumulative)
        .map(|(s, w)| (s.eta, 1.0 - w / total))
        .collect())
}
