fn main() {
    let (code, out) = catalan_tasep::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
