// Compares F'(eta) from the order-3 series with the shooting solution and
// writes the CSV table and SVG figure.
//
// cargo run --release --example fprime_figure -- [OUT_DIR]

use std::path::PathBuf;

use blasius_hpm::hpm::{build_series, HpmConfig};
use blasius_hpm::report::{compare, emit_csv, emit_svg_figure, CompareOptions, Grid};
use blasius_hpm::shooter::{solve_shooting, IntegratorSettings};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    write_figure(std::env::temp_dir())
}

fn write_figure(out_dir: PathBuf) -> Result<(), Box<dyn std::error::Error>> {
    let series = build_series(&HpmConfig::default());
    let shot = solve_shooting(&IntegratorSettings::default())?;
    let report = compare(&series, &shot, &Grid::default(), &CompareOptions::default())?;
    print!("{}", report.summary());

    let csv = out_dir.join("fprime_comparison.csv");
    let svg = out_dir.join("fprime_comparison.svg");
    emit_csv(&report, &csv)?;
    emit_svg_figure(&report, &svg)?;
    println!("wrote {} and {}", csv.display(), svg.display());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args().nth(1) {
        Some(dir) => write_figure(PathBuf::from(dir)),
        None => run_example(),
    }
}
