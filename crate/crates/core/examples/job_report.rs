//! Building a job by hand and printing the same report the `vgit` binary
//! produces.
//!
//! ```text
//! cargo run --example job_report
//! ```

use vgit::job::{run, Command, JobSpec, OutputFormat, PairFile, PairSource, PolyInput};

fn main() -> vgit::Result<()> {
    let pair = PairSource::Inline(PairFile {
        f: PolyInput::Text("x0*x1*x3 + x2^3 + x0^3 + x1^3".into()),
        h: PolyInput::Text("x0 + x1".into()),
    });
    let job = JobSpec {
        command: Command::Check { n: 2, d: 3, t: "1/10".into(), pair, lambda: Some(vec![1, 1, 0, -2]), cache: None },
        output_path: None,
        format: OutputFormat::Record,
    };
    println!("job: {}", serde_json::to_string(&job)?);
    println!("{}", serde_json::to_string_pretty(&run(&job)?)?);
    Ok(())
}
