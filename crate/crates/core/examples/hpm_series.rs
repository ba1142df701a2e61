// Builds the HPM corrections to a chosen order and checks every exact
// boundary identity on the truncated domain.
//
// cargo run --example hpm_series -- [ORDER] [L] [EPSILON]

use blasius_hpm::exactalg::Rational;
use blasius_hpm::hpm::{build_series, HpmConfig, HpmSeries, Profile};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    show(3, Rational::from(5), Rational::one())
}

fn show(order: usize, l: Rational, eps: Rational) -> Result<(), Box<dyn std::error::Error>> {
    let series = build_series(&HpmConfig::new(order, l.clone(), eps)?);
    print!("{series}");

    let violations = series.violations();
    println!("exact identity violations: {}", violations.len());

    let f = series.total(Profile::F);
    println!("F'(L) = {}", f.derivative().eval(&l));
    println!("Theta(L) = {}", series.total(Profile::Theta).eval(&l));
    println!(
        "degree of F' = {:?} (a polynomial cannot level off at 1)",
        f.derivative().degree()
    );

    let json = series.to_json();
    assert_eq!(HpmSeries::from_json(&json)?, series);
    println!("JSON document: {} bytes, round trip exact", json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let order = args.next().map(|s| s.parse()).transpose()?.unwrap_or(3);
    let l: Rational = args
        .next()
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(Rational::from(5));
    let eps: Rational = args
        .next()
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(Rational::one());
    show(order, l, eps)
}
