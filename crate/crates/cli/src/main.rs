use std::io::Write;

fn main() {
    let (code, out, err) = chowwitt::run(std::env::args_os());
    print!("{out}");
    eprint!("{err}");
    std::io::stdout().flush().ok();
    std::process::exit(code);
}
