fn main() {
    std::process::exit(shifted_chains::cli::run(std::env::args_os()));
}
