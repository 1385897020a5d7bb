use std::io::Write;

fn main() {
    let (code, out, err) = finlogic::cli::run(std::env::args());
    print!("{out}");
    eprint!("{err}");
    let _ = std::io::stdout().flush();
    std::process::exit(code);
}
