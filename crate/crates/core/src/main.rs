fn main() {
    std::process::exit(locc_recovery::cli::run(std::env::args_os()));
}
