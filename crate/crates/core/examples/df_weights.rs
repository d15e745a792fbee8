//! Donaldson-Futaki invariants of the test configurations induced by
//! one-parameter subgroups, from equivariant Hilbert series, compared with
//! the weight `a(beta) <f, lambda> + b(beta) <h, lambda>` of the CM bundle.
//!
//! ```text
//! cargo run --example df_weights
//! ```

use vgit::engine::PairState;
use vgit::rational::ratio;
use vgit::series::{cm_weight, df_of_one_ps, dictionary_ratio, equivariant_weights};
use vgit::{parse_polynomial, OneParamSubgroup};

fn main() -> vgit::Result<()> {
    let cubic = parse_polynomial("x0*x1*x3 + x2^3", 4)?;
    println!("Hilbert function of a cubic surface and of a plane section:");
    for s in equivariant_weights(&cubic, &parse_polynomial("x2", 4)?, None, 0..=8)? {
        println!("  k = {}: {} and {}", s.k, s.dim, s.divisor_dim);
    }

    let f = "x0*x1*x3 + x2^3 + 2*x2^2*x0 - 3*x2^2*x1 + 5*x2*x0^2 + 11*x0^3 + 19*x1^3";
    let cases = [
        (f, "x2", vec![1, 1, 0, -2]),
        (f, "x0", vec![1, 1, 0, -2]),
        (f, "x1 + x3", vec![2, 1, 0, -3]),
        ("x0^3 + x1^3 + x2^3 + x3^3", "x0 + x1 + x2", vec![1, 0, 0, -1]),
        ("x0^3 + x1^3 + x2^3 + x3^3", "x0 + x1 + x2", vec![3, -1, -1, -1]),
    ];
    println!("\n(n+1)! DF_beta against the CM weight at beta = 9/10:");
    let beta = ratio(9, 10);
    for (f, h, lambda) in cases {
        let pair = PairState::new(2, 3, parse_polynomial(f, 4)?, parse_polynomial(h, 4)?)?;
        let lambda = OneParamSubgroup::normalize(&lambda)?;
        let report = df_of_one_ps(&pair, &lambda, &beta)?;
        let weight = cm_weight(2, 3, &beta, report.weight_f, report.weight_h)?;
        let ratio = dictionary_ratio(2, 3, &report)?.map(|r| r.to_string()).unwrap_or("-".into());
        println!(
            "  {lambda:<13} h = {h:<13} DF = {:>7}  weight = {:>7}  ratio = {ratio}",
            report.df.to_string(),
            weight.to_string()
        );
    }
    Ok(())
}
