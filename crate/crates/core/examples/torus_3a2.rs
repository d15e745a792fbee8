//! Centroid criterion for hyperplane sections of the cubic surface
//! `x0 x2 x3 = x1^3` with three A2 points, under its rank two torus.
//!
//! ```text
//! cargo run --example torus_3a2
//! ```

use std::collections::BTreeMap;

use vgit::rational::{int, Rational};
use vgit::torus::*;

fn main() -> vgit::Result<()> {
    let table = three_a2_weight_table();
    let group = permutations_of(&[0, 2, 3], 4);
    let zero = vec![int(0), int(0)];

    println!("support pattern (c0 c1 c2 c3) -> verdict");
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for c in support_patterns(4) {
        let v = extended_verdict(&c, &table, &zero, &group)?;
        let pattern: String = c.iter().map(|x| if x == &int(0) { '0' } else { '1' }).collect();
        println!("  {pattern}  {:?} (hull dim {}, origin {:?})", v.kind, v.hull_dimension, v.origin_position);
        *counts.entry(format!("{:?}", v.kind)).or_default() += 1;
    }
    println!("{counts:?}");

    println!("\nstable patterns under shifted linearisations:");
    for a in [-2i64, -1, 0, 1, 2] {
        for b in [-2i64, -1, 0, 1, 2] {
            let shift: Vec<Rational> = vec![int(a), int(b)];
            let stable = support_patterns(4)
                .iter()
                .filter(|c| matches!(centroid_verdict(c, &table, &shift), Ok(v) if v.kind == TorusVerdictKind::Stable))
                .count();
            print!("{stable:>3}");
        }
        println!();
    }
    Ok(())
}
