//! The log CM line bundle `O(a(beta), b(beta))` and the slope `t(beta)` that
//! matches cone angles with GIT polarizations.
//!
//! ```text
//! cargo run --example cm_dictionary
//! ```

use vgit::cm::{beta_of_t, cm_coefficients, t_of_beta_closed, t_of_beta_f64};
use vgit::rational::{ratio, to_f64};

fn main() -> vgit::Result<()> {
    println!("(n, d) = (2, 3)");
    println!("{:>8} {:>10} {:>8} {:>10} {:>10}", "beta", "a", "b", "t", "beta(t)");
    for beta in [ratio(1, 10), ratio(1, 2), ratio(3, 4), ratio(87, 100), ratio(9, 10), ratio(1, 1)] {
        let cm = cm_coefficients(2, 3, &beta)?;
        assert_eq!(cm.t, t_of_beta_closed(3, &beta));
        println!(
            "{:>8} {:>10} {:>8} {:>10} {:>10}",
            beta.to_string(),
            cm.a.to_string(),
            cm.b.to_string(),
            cm.t.to_string(),
            beta_of_t(3, &cm.t)?.to_string()
        );
    }

    let root = 3f64.sqrt() / 2.0;
    let t0 = t_of_beta_f64(2, 3, root);
    println!("\nt(sqrt(3)/2) = {t0:.12}, below the first wall 1/5: {}", t0 < to_f64(&ratio(1, 5)));

    println!("\n(n, d) = (3, 4)");
    for beta in [ratio(1, 2), ratio(9, 10)] {
        let cm = cm_coefficients(3, 4, &beta)?;
        println!("  beta = {beta}: a = {}, b = {}, t = {}", cm.a, cm.b, cm.t);
    }
    Ok(())
}
