fn main() {
    std::process::exit(lagfib::cli::run());
}
