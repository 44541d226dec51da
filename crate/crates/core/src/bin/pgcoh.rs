use std::io::Write;

fn main() {
    let inv = pgcoh::cli::run(std::env::args().skip(1));
    let _ = writeln!(std::io::stdout().lock(), "{}", inv.stdout);
    std::process::exit(inv.exit_code);
}
