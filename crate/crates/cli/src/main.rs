use std::io::Write;

fn main() {
    let out = ahtoric_cli::run(std::env::args_os());
    let stream: &mut dyn Write = if out.code == 2 { &mut std::io::stderr() } else { &mut std::io::stdout() };
    let _ = stream.write_all(out.report.as_bytes());
    std::process::exit(out.code);
}
