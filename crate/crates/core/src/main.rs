fn main() {
    let code = regprod::cli::run(std::env::args_os());
    std::process::exit(code);
}
