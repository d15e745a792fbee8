//! Candidate subgroups and candidate walls of the variational GIT problem for
//! degree `d` hypersurfaces in `P^{n+1}` with a hyperplane.
//!
//! ```text
//! cargo run --release --example walls -- 2 3
//! ```

use std::time::Instant;

use vgit::engine::{candidate_walls, t_max};
use vgit::generate_candidates;

fn main() -> vgit::Result<()> {
    let args: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, d) = match args.as_slice() {
        [n, d, ..] => (*n as usize, *d),
        _ => (2, 3),
    };

    let start = Instant::now();
    let set = generate_candidates(n, d)?;
    println!("(n, d) = ({n}, {d}): {} candidates in {:.2?}", set.len(), start.elapsed());
    for lambda in set.iter() {
        println!("  {lambda}");
    }

    let walls = candidate_walls(n, d, &set.candidates);
    println!("\n{} candidate walls in (0, {}]:", walls.len(), t_max(n, d));
    for wall in &walls {
        println!(
            "  t = {:<6} from {} with <I, lambda> = {}, h-index {}",
            wall.t.to_string(),
            wall.source.lambda,
            wall.source.monomial_weight,
            wall.source.h_index
        );
    }
    Ok(())
}
