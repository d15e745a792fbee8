//! Writing a candidate set to disk, loading it back, and reusing it for a
//! stability check.
//!
//! ```text
//! cargo run --example candidate_cache
//! ```

use vgit::candidates::{cache_candidates, load_candidates};
use vgit::engine::{verdict_in_coords, PairState};
use vgit::parse_polynomial;
use vgit::rational::ratio;

fn main() -> vgit::Result<()> {
    let path = std::env::temp_dir().join(format!("vgit-candidates-2-3-{}.json", std::process::id()));

    let written = cache_candidates(2, 3, &path)?;
    let loaded = load_candidates(&path)?;
    println!("wrote {} candidates to {}", written.len(), path.display());
    println!("round trip identical: {}", written == loaded);

    let f = parse_polynomial("x0*x1*x3 + x2^3 + x0^3 - x1^3 + x0*x1*x2", 4)?;
    for h in ["x1", "x1 + x2"] {
        let pair = PairState::new(2, 3, f.clone(), parse_polynomial(h, 4)?)?;
        let verdict = verdict_in_coords(&pair, &ratio(1, 10), &loaded.candidates)?;
        println!("h = {h:<8} -> {:?}, mu_max = {}", verdict.kind, verdict.mu_max);
    }

    std::fs::remove_file(&path)?;
    Ok(())
}
