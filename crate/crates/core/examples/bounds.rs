//! Closed-form thresholds: angle bounds, volume inequalities and codimensions.
//!
//! ```text
//! cargo run --example bounds
//! ```

use vgit::bounds::*;
use vgit::rational::{int, ratio};

fn main() -> vgit::Result<()> {
    println!("beta_0 for P^n hypersurfaces of degree d:");
    for (n, d) in [(2, 3), (2, 4), (3, 4), (3, 5)] {
        let b0 = beta0_pn(n, d)?;
        let above = is_above_beta0(n, d, &ratio(9, 10))?;
        println!("  (n, d) = ({n}, {d}): beta_0 = {b0:.9}, 9/10 above: {above}");
    }

    println!("\ncubic surfaces, beta > sqrt(3)/2 and |Gamma|:");
    for beta in [ratio(1, 2), ratio(86, 100), ratio(87, 100), ratio(99, 100)] {
        println!(
            "  beta = {beta:<7} above: {:<5} |Gamma| <= {}",
            beta0_cubic_predicate(&beta),
            max_group_order_cubic(&beta)?
        );
    }

    let degree = int(3) * ratio(9, 10) * ratio(9, 10);
    println!("\nvolume inequality at degree {degree}:");
    for order in 1..=6 {
        let vol = quotient_volume(order)?;
        let ok = liu_bound_ok(&VolumeBoundQuery::new(2, degree.clone(), vol.clone())?);
        println!("  |Gamma| = {order}: vol = {vol:<4} admissible: {ok}");
    }

    println!("\ngap bound 2(n-1)^n: {:?}", (2..=5).map(gap_bound).collect::<Result<Vec<_>, _>>()?);

    println!("\ncodimensions (Z1, Z1', Z2):");
    for n in 2..=4u32 {
        for d in 2..=n + 1 {
            println!(
                "  (n, d) = ({n}, {d}): {}, {}, {}",
                codim_z1(n, d)?,
                codim_z1prime(n, d)?,
                codim_z2(n, d)?
            );
        }
    }
    Ok(())
}
