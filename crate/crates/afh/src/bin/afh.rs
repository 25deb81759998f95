fn main() {
    std::process::exit(afh::cli::run_cli());
}
