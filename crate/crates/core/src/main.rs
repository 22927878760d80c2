use std::io;

fn main() {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = sdp_degree::cli::execute(std::env::args_os().skip(1), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
