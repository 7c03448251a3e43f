//! Driving the command-line front end from code, with a config file.

use aw_nevanlinna::cli::{run, Cli};
use aw_nevanlinna::config::Config;
use clap::Parser;

fn main() -> aw_nevanlinna::Result<()> {
    let cfg = Config::default().apply_str("s = 1/3\ntheta_points = 512\nformat = json\n")?;
    println!("{cfg:?}");

    for args in [
        vec!["awnev", "ops", "--expr", "x^2", "--op", "dq", "--s", "1/2"],
        vec!["awnev", "params", "--n", "2", "--dhat", "2", "--alpha", "3/2", "--eps", "1/2"],
        vec!["awnev", "wronskian", "--funcs", "1; x; x^2"],
    ] {
        let out = run(&Cli::parse_from(args))?;
        print!("{}", out.stdout);
    }
    Ok(())
}
