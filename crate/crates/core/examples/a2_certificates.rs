//! Hilbert-Mumford certificates for the cubic surface with an A2 point and a
//! hyperplane section, in the normal form
//! `f = x0 x1 x3 + x2^3 + (terms in x0, x1, x2)`.
//!
//! ```text
//! cargo run --example a2_certificates
//! ```

use vgit::engine::{limit_pair, mu_t, verdict_in_coords, PairState};
use vgit::rational::ratio;
use vgit::{generate_candidates, parse_polynomial, OneParamSubgroup};

const F: &str = "x0*x1*x3 + x2^3 + 2*x2^2*x0 - 3*x2^2*x1 + 5*x2*x0^2 + 7*x2*x0*x1 \
                 - x2*x1^2 + 11*x0^3 + 13*x0^2*x1 - 17*x0*x1^2 + 19*x1^3";

fn main() -> vgit::Result<()> {
    let f = parse_polynomial(F, 4)?;
    let star = OneParamSubgroup::normalize(&[1, 1, 0, -2])?;
    let candidates = generate_candidates(2, 3)?;
    println!("{} candidate subgroups for (n, d) = (2, 3)\n", candidates.len());

    for h in ["x0 - 4*x1 + x2", "x2", "x0", "2*x0 - x1"] {
        let pair = PairState::new(2, 3, f.clone(), parse_polynomial(h, 4)?)?;
        println!("h = {h}");
        for t in [ratio(1, 10), ratio(1, 7), ratio(1, 5) - ratio(1, 1000)] {
            let verdict = verdict_in_coords(&pair, &t, &candidates.candidates)?;
            let witness = verdict.witness.as_ref().map(ToString::to_string).unwrap_or_default();
            println!(
                "  t = {t:>9}  mu_t(lambda_*) = {:>9}  {:?} (witness {witness}, mu {})",
                mu_t(&pair, &star, &t)?,
                verdict.kind,
                verdict.mu_max
            );
        }
        let limit = limit_pair(&pair, &star)?;
        println!("  limit under {star}: ({}, {}), log pair: {}\n", limit.f0, limit.h0, limit.is_log_pair);
    }
    Ok(())
}
