//! File and document formats exchanged with other tools.

use std::fs;

use blasius_hpm::exactalg::{Rational, RationalPolynomial};
use blasius_hpm::hpm::{build_series, HpmConfig, HpmSeries};
use blasius_hpm::report::{compare, emit_csv, emit_svg_figure, CompareOptions, Grid};
use blasius_hpm::shooter::{integrate_blasius, solve_shooting, IntegratorSettings};
use proptest::prelude::*;

#[test]
fn series_document_shape() {
    let series = build_series(&HpmConfig::default());
    let value: serde_json::Value = serde_json::from_str(&series.to_json()).unwrap();
    assert_eq!(value["order"], 3);
    assert_eq!(value["L"], serde_json::json!({"num": "5", "den": "1"}));
    assert_eq!(
        value["epsilon"],
        serde_json::json!({"num": "1", "den": "1"})
    );
    let f3 = value["f_corrections"][3].as_array().unwrap();
    let powers: Vec<u64> = f3.iter().map(|t| t["power"].as_u64().unwrap()).collect();
    assert_eq!(powers, vec![2, 5, 8, 11]);
    assert_eq!(
        f3[3],
        serde_json::json!({"power": 11, "num": "-1", "den": "532224000"})
    );
    assert_eq!(value["theta_corrections"].as_array().unwrap().len(), 4);
}

#[test]
fn series_document_rejects_wrong_lengths() {
    let series = build_series(&HpmConfig::default());
    let mut value: serde_json::Value = serde_json::from_str(&series.to_json()).unwrap();
    value["order"] = serde_json::json!(4);
    assert!(HpmSeries::from_json(&value.to_string()).is_err());
    value["order"] = serde_json::json!(3);
    value["L"] = serde_json::json!({"num": "0", "den": "1"});
    assert!(HpmSeries::from_json(&value.to_string()).is_err());
}

#[test]
fn comparison_files() {
    let dir = tempfile::tempdir().unwrap();
    let series = build_series(&HpmConfig::default());
    let shot = solve_shooting(&IntegratorSettings::default()).unwrap();
    let report = compare(&series, &shot, &Grid::default(), &CompareOptions::default()).unwrap();
    let csv = dir.path().join("f.csv");
    let svg = dir.path().join("f.svg");
    emit_csv(&report, &csv).unwrap();
    emit_svg_figure(&report, &svg).unwrap();

    let text = fs::read_to_string(&csv).unwrap();
    let mut rows = text.lines();
    assert_eq!(rows.next(), Some("eta,fprime_numerical,fprime_hpm"));
    for (line, row) in rows.zip(&report.rows) {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert!((cols[0] - row.eta).abs() < 1e-9);
        assert!((cols[2] - row.fprime_hpm).abs() <= 5e-10 * row.fprime_hpm.abs().max(1.0));
    }

    let svg_text = fs::read_to_string(&svg).unwrap();
    let doc = roxmltree::Document::parse(&svg_text).unwrap();
    assert_eq!(doc.root_element().attribute("version"), Some("1.1"));
    assert!(!svg_text.contains("xlink:href") && !svg_text.contains("<image"));
}

#[test]
fn trajectory_csv_parses_back() {
    let settings = IntegratorSettings::default().with_step(0.01).unwrap();
    let traj = integrate_blasius(0.332, &settings).unwrap();
    let csv = traj.to_csv();
    for (line, s) in csv.lines().skip(1).zip(traj.samples()) {
        let cols: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        assert_eq!(cols.len(), 4);
        assert!((cols[1] - s.f).abs() < 1e-11 && (cols[2] - s.fp).abs() < 1e-11);
    }
}

fn polynomial() -> impl Strategy<Value = RationalPolynomial> {
    proptest::collection::vec((0u32..20, -10_000i64..10_000, 1i64..10_000), 0..8).prop_map(
        |terms| {
            RationalPolynomial::from_terms(
                terms
                    .into_iter()
                    .map(|(k, n, d)| (k, Rational::new(n, d).unwrap())),
            )
        },
    )
}

proptest! {
    #[test]
    fn polynomial_json_round_trip(p in polynomial()) {
        let text = serde_json::to_string(&p).unwrap();
        let back: RationalPolynomial = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string(&back).unwrap(), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn series_json_round_trip(order in 0usize..5, ln in 1i64..20, ld in 1i64..6, en in 1i64..9, ed in 1i64..9) {
        let cfg = HpmConfig::new(order, Rational::new(ln, ld).unwrap(), Rational::new(en, ed).unwrap()).unwrap();
        let series = build_series(&cfg);
        let text = series.to_json();
        let back = HpmSeries::from_json(&text).unwrap();
        prop_assert_eq!(back.to_json(), text);
    }
}
