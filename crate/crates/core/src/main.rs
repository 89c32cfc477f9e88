fn main() {
    std::process::exit(bessel_exp::cli::run(std::env::args_os()));
}
