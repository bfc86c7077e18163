fn main() {
    std::process::exit(wc2::cli::run_from_env());
}
