//! Runs each shipped example as a smoke test.

macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(exact_algebra, "exact_algebra.rs");
example!(hpm_series, "hpm_series.rs");
example!(shooting, "shooting.rs");
example!(shrunk_infinity, "shrunk_infinity.rs");
example!(fprime_figure, "fprime_figure.rs");

#[test]
fn exact_algebra_runs() {
    exact_algebra::run_example().expect("exact_algebra example");
}

#[test]
fn hpm_series_runs() {
    hpm_series::run_example().expect("hpm_series example");
}

#[test]
fn shooting_runs() {
    shooting::run_example().expect("shooting example");
}

#[test]
fn shrunk_infinity_runs() {
    shrunk_infinity::run_example().expect("shrunk_infinity example");
}

#[test]
fn fprime_figure_runs() {
    fprime_figure::run_example().expect("fprime_figure example");
}
