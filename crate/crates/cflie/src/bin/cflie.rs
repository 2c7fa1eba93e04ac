fn main() {
    std::process::exit(cflie::harness::cli::run(std::env::args_os()));
}
