//! Driving the command layer from code: the same records the `kalman` binary
//! prints, without spawning it.

use clap::Parser;
use kalman_degree::cli::{run, Cli};

fn main() {
    let invocations = [
        "kalman table --kind matrix-ed --max-n 4",
        "kalman table --kind isotropic-sym --max-n 4 --max-omega 3",
        "kalman degree --n 3,3,3 --delta 1,0,0 --omega 2,1,1 --format text",
        "kalman asympt --k 4 --omega 1 --n 8 --compare",
    ];
    for line in invocations {
        let cli = Cli::parse_from(line.split_whitespace());
        println!("$ {line}");
        match run(&cli) {
            Ok(out) => print!("{out}"),
            Err(e) => println!("error: {e}"),
        }
        println!();
    }
}
