// How the HPM answer depends on where "infinity" is placed: F''(0) and the
// slope at eta = 10 for several truncation lengths L.
//
// cargo run --release --example shrunk_infinity

use blasius_hpm::exactalg::Rational;
use blasius_hpm::hpm::{build_series, HpmConfig, Profile};
use blasius_hpm::shooter::{solve_shooting, IntegratorSettings};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let reference = solve_shooting(&IntegratorSettings::default())?.s_star;
    println!("shooting reference f''(0) = {reference:.7}");
    println!(
        "{:>6} {:>10} {:>12} {:>14}",
        "L", "F''(0)", "error", "F'(10)"
    );
    for l in ["3", "4", "9/2", "5", "6", "8", "10"] {
        let l: Rational = l.parse()?;
        let series = build_series(&HpmConfig::new(3, l.clone(), Rational::one())?);
        let f = series.total(Profile::F);
        let s = f.derivative().derivative().eval(&Rational::zero()).to_f64();
        println!(
            "{:>6} {:>10.6} {:>12.6} {:>14.4}",
            l.to_string(),
            s,
            s - reference,
            f.derivative().eval_f64(10.0)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
