fn main() {
    std::process::exit(betadual_cli::run(std::env::args_os()));
}
