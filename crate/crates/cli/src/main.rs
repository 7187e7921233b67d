use std::io::{stderr, stdout, BufWriter};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let code = deflab_cli::dispatch(&args, &mut BufWriter::new(stdout()), &mut stderr().lock());
    std::process::exit(code);
}
