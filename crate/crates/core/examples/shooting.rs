// Shooting on f''(0) for the Blasius equation and the temperature profile
// for a few values of epsilon.
//
// cargo run --release --example shooting

use blasius_hpm::shooter::{solve_shooting, theta_profile, IntegratorSettings};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let settings = IntegratorSettings::default();
    let shot = solve_shooting(&settings)?;
    println!(
        "eta_max = {}, step = {}: s* = {:.9} (residual {:.1e}, {} shots)",
        settings.eta_max(),
        settings.step(),
        shot.s_star,
        shot.residual,
        shot.iterations
    );

    for eta_max in [4.0, 6.0, 8.0, 10.0, 15.0] {
        let s = solve_shooting(&settings.with_eta_max(eta_max)?)?.s_star;
        println!("  eta_max = {eta_max:>4}: s* = {s:.10}");
    }

    println!("theta at eta = 1, 2, 4:");
    for eps in [0.5, 1.0, 2.0] {
        let theta = theta_profile(&shot.trajectory, eps)?;
        let at = |eta: f64| {
            theta
                .iter()
                .find(|p| (p.0 - eta).abs() < 1e-9)
                .map(|p| p.1)
                .unwrap_or(f64::NAN)
        };
        println!(
            "  epsilon = {eps}: {:.6} {:.6} {:.6}",
            at(1.0),
            at(2.0),
            at(4.0)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
