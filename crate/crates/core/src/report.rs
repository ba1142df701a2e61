//! Side-by-side comparison of the HPM slope `F'(η)` against the shooting
//! reference, with CSV and SVG output.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::exactalg::Rational;
use crate::hpm::{HpmSeries, Profile};
use crate::shooter::{interpolate, theta_profile, ShootError, ShootingResult};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid plot window: {0}")]
    InvalidWindow(String),
    #[error("report has no rows")]
    EmptyReport,
    #[error(transparent)]
    Theta(#[from] ShootError),
    #[error("cannot write {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

/// Uniform η grid `start, start + step, …, stop`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    start: f64,
    stop: f64,
    step: f64,
}

impl Grid {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self, ReportError> {
        let bad = |m: String| Err(ReportError::InvalidGrid(m));
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return bad("values must be finite".into());
        }
        if start < 0.0 {
            return bad(format!("start must be >= 0, got {start}"));
        }
        if !(start < stop) {
            return bad(format!("start {start} must be below stop {stop}"));
        }
        if !(step > 0.0) {
            return bad(format!("step must be > 0, got {step}"));
        }
        let intervals = (stop - start) / step;
        if (intervals - intervals.round()).abs() > 1e-6 {
            return bad(format!(
                "stop {stop} is not reached from {start} in steps of {step}"
            ));
        }
        Ok(Grid { start, stop, step })
    }

    pub fn start(&self) -> f64 {
        self.start
    }

    pub fn stop(&self) -> f64 {
        self.stop
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    /// `floor((stop − start)/step) + 1`, tolerant of roundoff in the quotient.
    pub fn len(&self) -> usize {
        ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |i| self.start + i as f64 * self.step)
    }

    pub fn contains(&self, eta: f64) -> bool {
        eta >= self.start && eta <= self.stop
    }
}

/// `0:12:0.05`
impl Default for Grid {
    fn default() -> Self {
        Grid {
            start: 0.0,
            stop: 12.0,
            step: 0.05,
        }
    }
}

/// Parses `START:STOP:STEP`.
impl FromStr for Grid {
    type Err = ReportError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(ReportError::InvalidGrid(format!(
                "expected START:STOP:STEP, got `{s}`"
            )));
        };
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| ReportError::InvalidGrid(format!("`{t}` is not a number")))
        };
        Grid::new(num(a)?, num(b)?, num(c)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompareOptions {
    /// η at which the far-field deviation is measured.
    pub probe: f64,
    /// Adds θ columns from both methods.
    pub with_theta: bool,
}

impl Default for CompareOptions {
    fn default() -> Self {
        CompareOptions {
            probe: 10.0,
            with_theta: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaPair {
    pub numerical: f64,
    pub hpm: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Row {
    pub eta: f64,
    pub fprime_numerical: f64,
    pub fprime_hpm: f64,
    pub theta: Option<ThetaPair>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport {
    pub rows: Vec<Row>,
    /// Truncated domain length `L` of the series, as a float.
    pub domain_length: f64,
    /// `max |ΔF'|` over grid rows in `[0, L]`; `None` if no row falls there.
    pub max_dev_inside: Option<f64>,
    /// η of the row achieving `max_dev_inside`.
    pub max_dev_eta: Option<f64>,
    pub probe: f64,
    /// `|ΔF'|` at `probe`; `None` when the probe lies outside the grid.
    pub dev_at_probe: Option<f64>,
    pub s_numerical: f64,
    /// `F''(0)`, twice the η² coefficient of the partial sum.
    pub s_hpm_exact: Rational,
    pub s_hpm_float: f64,
    /// True when some rows lie past the shooting domain and the numerical
    /// slope was extended by its far-field value 1.
    pub extrapolated: bool,
}

impl ComparisonReport {
    /// `s_hpm` rounded half-up to three decimals.
    pub fn s_hpm_rounded(&self) -> String {
        self.s_hpm_exact.to_decimal_half_up(3)
    }

    pub fn s_gap(&self) -> f64 {
        (self.s_hpm_float - self.s_numerical).abs()
    }

    /// `eta,fprime_numerical,fprime_hpm[,theta_numerical,theta_hpm]`, nine
    /// decimals, LF line endings.
    pub fn to_csv(&self) -> String {
        let with_theta = self.rows.iter().any(|r| r.theta.is_some());
        let mut out = String::from("eta,fprime_numerical,fprime_hpm");
        if with_theta {
            out.push_str(",theta_numerical,theta_hpm");
        }
        out.push('\n');
        for r in &self.rows {
            let _ = write!(
                out,
                "{:.9},{:.9},{:.9}",
                r.eta, r.fprime_numerical, r.fprime_hpm
            );
            if let Some(t) = r.theta {
                let _ = write!(out, ",{:.9},{:.9}", t.numerical, t.hpm);
            }
            out.push('\n');
        }
        out
    }

    /// Multi-line human summary of the headline numbers.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "s_numerical = {:.7}", self.s_numerical);
        let _ = writeln!(
            out,
            "s_hpm = {} = {:.6} (rounded {})",
            self.s_hpm_exact,
            self.s_hpm_float,
            self.s_hpm_rounded()
        );
        let _ = writeln!(out, "|s_hpm - s_numerical| = {:.6}", self.s_gap());
        match (self.max_dev_inside, self.max_dev_eta) {
            (Some(d), Some(eta)) => {
                let _ = writeln!(
                    out,
                    "max_dev_inside [0, {}] = {:.6} at eta = {:.2}",
                    self.domain_length, d, eta
                );
            }
            _ => {
                let _ = writeln!(
                    out,
                    "max_dev_inside: no grid rows inside [0, {}]",
                    self.domain_length
                );
            }
        }
        match self.dev_at_probe {
            Some(d) => {
                let _ = writeln!(out, "dev_at_probe (eta = {}) = {:.6}", self.probe, d);
            }
            None => {
                let _ = writeln!(
                    out,
                    "dev_at_probe omitted: probe eta = {} outside grid",
                    self.probe
                );
            }
        }
        if self.extrapolated {
            let _ = writeln!(
                out,
                "note: numerical f' extended as 1.0 beyond the shooting domain"
            );
        }
        out
    }
}

/// Numerical slope: interpolated on the trajectory, 1.0 beyond it.
fn numerical_fp(shot: &ShootingResult, eta: f64) -> f64 {
    shot.trajectory.fp_at(eta).unwrap_or(1.0)
}

pub fn compare(
    series: &HpmSeries,
    shot: &ShootingResult,
    grid: &Grid,
    options: &CompareOptions,
) -> Result<ComparisonReport, ReportError> {
    let f_sum = series.total(Profile::F);
    let slope = f_sum.derivative();
    let domain_length = series.config().domain_length().to_f64();

    let theta = if options.with_theta {
        let eps = series.config().epsilon().to_f64();
        let numerical = theta_profile(&shot.trajectory, eps)?;
        Some((numerical, series.total(Profile::Theta)))
    } else {
        None
    };

    let rows: Vec<Row> = grid
        .points()
        .map(|eta| Row {
            eta,
            fprime_numerical: numerical_fp(shot, eta),
            fprime_hpm: slope.eval_f64(eta),
            theta: theta.as_ref().map(|(num, hpm)| ThetaPair {
                numerical: interpolate(num, eta, |p| p.0, |p| p.1).unwrap_or(0.0),
                hpm: hpm.eval_f64(eta),
            }),
        })
        .collect();

    let (max_dev_eta, max_dev_inside) = rows
        .iter()
        .filter(|r| r.eta <= domain_length * (1.0 + 1e-12))
        .map(|r| (r.eta, (r.fprime_hpm - r.fprime_numerical).abs()))
        .fold(None, |best: Option<(f64, f64)>, cur| match best {
            Some(b) if b.1 >= cur.1 => Some(b),
            _ => Some(cur),
        })
        .unzip();

    let dev_at_probe = grid
        .contains(options.probe)
        .then(|| (slope.eval_f64(options.probe) - numerical_fp(shot, options.probe)).abs());

    let s_hpm_exact = f_sum.derivative().derivative().eval(&Rational::zero());
    Ok(ComparisonReport {
        extrapolated: grid.stop() > shot.trajectory.eta_max(),
        rows,
        domain_length,
        max_dev_inside,
        max_dev_eta,
        probe: options.probe,
        dev_at_probe,
        s_numerical: shot.s_star,
        s_hpm_float: s_hpm_exact.to_f64(),
        s_hpm_exact,
    })
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<(), ReportError> {
    fs::write(path, text).map_err(|source| ReportError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn emit_csv(report: &ComparisonReport, path: impl AsRef<Path>) -> Result<(), ReportError> {
    write_text(path.as_ref(), &report.to_csv())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgOptions {
    /// Visible f' range; curves leaving it are clipped at the frame.
    pub y_window: (f64, f64),
    pub width: f64,
    pub height: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            y_window: (-0.2, 1.4),
            width: 640.0,
            height: 440.0,
        }
    }
}

const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 24.0;
const MARGIN_BOTTOM: f64 = 52.0;

/// Tick spacing from {1, 2, 5}·10^k giving roughly `target` intervals.
fn nice_step(span: f64, target: f64) -> f64 {
    let raw = span / target;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let nice = if norm < 1.5 {
        1.0
    } else if norm < 3.5 {
        2.0
    } else if norm < 7.5 {
        5.0
    } else {
        10.0
    };
    nice * mag
}

fn ticks(lo: f64, hi: f64, target: f64) -> (Vec<f64>, usize) {
    let step = nice_step(hi - lo, target);
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    let first = (lo / step - 1e-9).ceil() as i64;
    let last = (hi / step + 1e-9).floor() as i64;
    ((first..=last).map(|i| i as f64 * step).collect(), decimals)
}

pub fn render_svg(report: &ComparisonReport, options: &SvgOptions) -> Result<String, ReportError> {
    let (first, last) = match (report.rows.first(), report.rows.last()) {
        (Some(a), Some(b)) => (a.eta, b.eta),
        _ => return Err(ReportError::EmptyReport),
    };
    let (y_lo, y_hi) = options.y_window;
    if !(y_lo < y_hi) {
        return Err(ReportError::InvalidWindow(format!(
            "{y_lo} must be below {y_hi}"
        )));
    }
    let x_hi = if last > first { last } else { first + 1.0 };
    let plot_w = options.width - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = options.height - MARGIN_TOP - MARGIN_BOTTOM;
    let px = |eta: f64| MARGIN_LEFT + (eta - first) / (x_hi - first) * plot_w;
    // Values far outside the window are pinned just past the frame so the
    // clip path cuts them cleanly.
    let pad = 0.1 * (y_hi - y_lo);
    let py = |v: f64| {
        let v = v.clamp(y_lo - pad, y_hi + pad);
        MARGIN_TOP + (y_hi - v) / (y_hi - y_lo) * plot_h
    };
    let points = |value: fn(&Row) -> f64| {
        report
            .rows
            .iter()
            .map(|r| format!("{:.2},{:.2}", px(r.eta), py(value(r))))
            .collect::<Vec<_>>()
            .join(" ")
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<?xml version="1.0" encoding="UTF-8" standalone="no"?>"#
    );
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#,
        w = options.width,
        h = options.height
    );
    let _ = writeln!(
        s,
        r#"<defs><clipPath id="plot-area"><rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}"/></clipPath></defs>"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);

    // Axes frame and ticks.
    let _ = writeln!(
        s,
        r#"<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black" stroke-width="1"/>"#
    );
    let bottom = MARGIN_TOP + plot_h;
    let (xt, xd) = ticks(first, x_hi, 6.0);
    for t in xt {
        let x = px(t);
        let _ = writeln!(
            s,
            r#"<line x1="{x:.2}" y1="{bottom:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{t:.xd$}</text>"#,
            bottom + 5.0,
            bottom + 18.0
        );
    }
    let (yt, yd) = ticks(y_lo, y_hi, 8.0);
    for t in yt {
        let y = py(t);
        let _ = writeln!(
            s,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{MARGIN_LEFT}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{t:.yd$}</text>"#,
            MARGIN_LEFT - 5.0,
            MARGIN_LEFT - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">η</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        options.height - 12.0
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{:.2}" text-anchor="middle" transform="rotate(-90 16 {:.2})">f′(η)</text>"#,
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0
    );

    let _ = writeln!(
        s,
        r#"<g clip-path="url(#plot-area)" fill="none" stroke-width="1.5">"#
    );
    let _ = writeln!(
        s,
        r#"<polyline id="numerical" stroke="black" stroke-dasharray="6,4" points="{}"/>"#,
        points(|r| r.fprime_numerical)
    );
    let _ = writeln!(
        s,
        r#"<polyline id="hpm" stroke="black" points="{}"/>"#,
        points(|r| r.fprime_hpm)
    );
    let _ = writeln!(s, "</g>");

    // Legend, lower right of the plot.
    let lx = MARGIN_LEFT + plot_w - 150.0;
    let ly = bottom - 44.0;
    let _ = writeln!(
        s,
        r#"<g id="legend" stroke-width="1.5"><rect x="{:.2}" y="{:.2}" width="140" height="40" fill="white" stroke="gray"/><line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-dasharray="6,4"/><text x="{:.2}" y="{:.2}" stroke="none">Numerical</text><line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" stroke="none">HPM</text></g>"#,
        lx - 6.0,
        ly - 6.0,
        lx,
        ly + 6.0,
        lx + 30.0,
        ly + 6.0,
        lx + 38.0,
        ly + 10.0,
        lx,
        ly + 24.0,
        lx + 30.0,
        ly + 24.0,
        lx + 38.0,
        ly + 28.0
    );
    s.push_str("</svg>\n");
    Ok(s)
}

pub fn emit_svg_figure(
    report: &ComparisonReport,
    path: impl AsRef<Path>,
) -> Result<(), ReportError> {
    emit_svg_figure_with(report, path, &SvgOptions::default())
}

pub fn emit_svg_figure_with(
    report: &ComparisonReport,
    path: impl AsRef<Path>,
    options: &SvgOptions,
) -> Result<(), ReportError> {
    write_text(path.as_ref(), &render_svg(report, options)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hpm::{build_series, HpmConfig};
    use crate::shooter::{solve_shooting, IntegratorSettings};
    use std::sync::OnceLock;

    fn shot() -> &'static ShootingResult {
        static SHOT: OnceLock<ShootingResult> = OnceLock::new();
        SHOT.get_or_init(|| solve_shooting(&IntegratorSettings::default()).unwrap())
    }

    fn report(grid: &str, options: CompareOptions) -> ComparisonReport {
        let series = build_series(&HpmConfig::default());
        compare(&series, shot(), &grid.parse().unwrap(), &options).unwrap()
    }

    #[test]
    fn grid_parsing_and_length() {
        let g: Grid = "0:12:0.05".parse().unwrap();
        assert_eq!(g.len(), 241);
        assert_eq!(Grid::default(), g);
        assert_eq!("0:5:0.05".parse::<Grid>().unwrap().len(), 101);
        assert_eq!(
            "1:2:0.5"
                .parse::<Grid>()
                .unwrap()
                .points()
                .collect::<Vec<_>>(),
            vec![1.0, 1.5, 2.0]
        );
        assert!("5:0:0.1".parse::<Grid>().is_err());
        assert!("0:1:0".parse::<Grid>().is_err());
        assert!("0:1".parse::<Grid>().is_err());
        assert!("0:1:0.3".parse::<Grid>().is_err());
        assert!("-1:1:0.5".parse::<Grid>().is_err());
    }

    #[test]
    fn headline_values() {
        let rep = report("0:12:0.05", CompareOptions::default());
        assert_eq!(rep.s_hpm_exact, Rational::new(1348969, 3870720).unwrap());
        assert_eq!(rep.s_hpm_rounded(), "0.349");
        assert!((rep.s_hpm_float - 0.348506).abs() < 1e-6);
        assert!((rep.s_gap() - 0.0164).abs() < 1e-3);
        assert!((rep.dev_at_probe.unwrap() - 114.97).abs() < 0.01);
        assert!(rep.extrapolated);
        // Oracle (dense comparison against an adaptive integrator): 0.0397 near η = 2.85.
        assert!((rep.max_dev_inside.unwrap() - 0.0397).abs() < 1e-3);
    }

    #[test]
    fn probe_outside_grid_is_omitted() {
        let rep = report("0:5:0.05", CompareOptions::default());
        assert_eq!(rep.dev_at_probe, None);
        assert!(!rep.extrapolated);
        assert!(rep.summary().contains("dev_at_probe omitted"));
    }

    #[test]
    fn boundary_identities_in_floats() {
        let rep = report("0:12:0.05", CompareOptions::default());
        assert_eq!(rep.rows[0].fprime_hpm, 0.0);
        let at_l = rep
            .rows
            .iter()
            .find(|r| (r.eta - 5.0).abs() < 1e-9)
            .unwrap();
        assert!((at_l.fprime_hpm - 1.0).abs() < 1e-12);
        assert!(rep.rows.windows(2).all(|w| w[1].eta > w[0].eta));
    }

    #[test]
    fn csv_layout() {
        let rep = report("0:12:0.05", CompareOptions::default());
        let csv = rep.to_csv();
        let lines: Vec<&str> = csv.split('\n').collect();
        assert_eq!(lines[0], "eta,fprime_numerical,fprime_hpm");
        assert_eq!(lines[1], "0.000000000,0.000000000,0.000000000");
        assert!(lines[101].starts_with("5.000000000,"));
        assert!(lines[101].ends_with(",1.000000000"));
        assert_eq!(csv.lines().count(), 1 + 241);
        assert!(!csv.contains('\r'));
    }

    #[test]
    fn theta_columns() {
        let rep = report(
            "0:12:0.5",
            CompareOptions {
                with_theta: true,
                ..Default::default()
            },
        );
        let csv = rep.to_csv();
        assert!(csv.starts_with("eta,fprime_numerical,fprime_hpm,theta_numerical,theta_hpm\n"));
        let first = rep.rows[0].theta.unwrap();
        assert!((first.numerical - 1.0).abs() < 1e-12 && (first.hpm - 1.0).abs() < 1e-12);
        let at_l = rep
            .rows
            .iter()
            .find(|r| r.eta == 5.0)
            .unwrap()
            .theta
            .unwrap();
        assert!(at_l.hpm.abs() < 1e-12);
        assert_eq!(rep.rows.last().unwrap().theta.unwrap().numerical, 0.0);
    }

    #[test]
    fn deterministic() {
        let a = report("0:12:0.05", CompareOptions::default());
        let b = report("0:12:0.05", CompareOptions::default());
        assert_eq!(a, b);
        assert_eq!(a.to_csv(), b.to_csv());
    }

    /// (id, points, stroke-dasharray) per polyline.
    type Polyline = (String, Vec<(f64, f64)>, Option<String>);

    fn polylines(svg: &str) -> Vec<Polyline> {
        let doc = roxmltree::Document::parse(svg).expect("well-formed XML");
        doc.descendants()
            .filter(|n| n.has_tag_name("polyline"))
            .map(|n| {
                let pts = n
                    .attribute("points")
                    .unwrap()
                    .split_whitespace()
                    .map(|p| {
                        let (x, y) = p.split_once(',').unwrap();
                        (x.parse().unwrap(), y.parse().unwrap())
                    })
                    .collect();
                (
                    n.attribute("id").unwrap().to_string(),
                    pts,
                    n.attribute("stroke-dasharray").map(str::to_string),
                )
            })
            .collect()
    }

    #[test]
    fn svg_structure() {
        let rep = report("0:12:0.05", CompareOptions::default());
        let svg = render_svg(&rep, &SvgOptions::default()).unwrap();
        let lines = polylines(&svg);
        assert_eq!(lines.len(), 2);
        let numerical = lines.iter().find(|l| l.0 == "numerical").unwrap();
        let hpm = lines.iter().find(|l| l.0 == "hpm").unwrap();
        assert!(numerical.2.is_some());
        assert!(hpm.2.is_none());
        assert_eq!(numerical.1.len(), rep.rows.len());
        assert!(svg.contains(">Numerical<") && svg.contains(">HPM<"));
    }

    #[test]
    fn svg_inside_window_for_truncated_grid() {
        let rep = report("0:5:0.05", CompareOptions::default());
        let opts = SvgOptions::default();
        let svg = render_svg(&rep, &opts).unwrap();
        let top = MARGIN_TOP;
        let bottom = opts.height - MARGIN_BOTTOM;
        for (_, pts, _) in polylines(&svg) {
            assert!(pts
                .iter()
                .all(|&(_, y)| y >= top - 1e-9 && y <= bottom + 1e-9));
        }
    }

    #[test]
    fn svg_rejects_empty_and_bad_window() {
        let mut rep = report("0:1:0.5", CompareOptions::default());
        let bad = SvgOptions {
            y_window: (1.0, 0.0),
            ..Default::default()
        };
        assert!(matches!(
            render_svg(&rep, &bad),
            Err(ReportError::InvalidWindow(_))
        ));
        rep.rows.clear();
        assert!(matches!(
            render_svg(&rep, &SvgOptions::default()),
            Err(ReportError::EmptyReport)
        ));
    }

    #[test]
    fn io_errors_carry_the_path() {
        let rep = report("0:1:0.5", CompareOptions::default());
        let err = emit_csv(&rep, "/nonexistent-dir/out.csv").unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/out.csv"));
    }
}
