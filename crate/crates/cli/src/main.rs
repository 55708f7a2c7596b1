fn main() {
    std::process::exit(fibsum_cli::run(std::env::args_os()));
}
