// Exact rational and polynomial arithmetic on the published third-order
// momentum polynomial.
//
// cargo run --example exact_algebra

use blasius_hpm::exactalg::{rat_arith, RatOp, Rational, RationalPolynomial};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a: Rational = "625/1152".parse()?;
    let b: Rational = "859375/2520000".parse()?;
    println!("{a} - {b} = {}", rat_arith(&a, &b, RatOp::Sub)?);

    match rat_arith(&a, &Rational::zero(), RatOp::Div) {
        Err(e) => println!("{a} / 0 -> {e}"),
        Ok(v) => println!("unexpected {v}"),
    }

    let f = RationalPolynomial::from_terms([
        (2, "1348969/7741440".parse()?),
        (5, "-4867/10752000".parse()?),
        (8, "451/322560000".parse()?),
        (11, "-1/532224000".parse()?),
    ]);
    let slope = f.derivative();
    let curvature = slope.derivative();
    println!("F(eta)   = {f}");
    println!("F'(eta)  = {slope}");
    println!("F'(5)    = {} (exact)", slope.eval(&Rational::from(5)));
    println!("F'(10)   = {:.4} (float)", slope.eval_f64(10.0));
    let s = curvature.eval(&Rational::zero());
    println!(
        "F''(0)   = {s} = {:.6} ~ {}",
        s.to_f64(),
        s.to_decimal_half_up(3)
    );

    let round_trip = f.antiderivative().derivative();
    assert_eq!(round_trip, f);
    println!("antiderivative/derivative round trip: exact");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
