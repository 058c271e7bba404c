fn main() {
    std::process::exit(repcontain::cli::run(std::env::args_os()));
}
