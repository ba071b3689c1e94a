fn main() {
    let stdin = std::io::stdin();
    let out = hamlab_core::cli::run(std::env::args_os(), &mut stdin.lock());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::process::exit(out.code);
}
