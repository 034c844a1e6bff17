fn main() {
    std::process::exit(detinv::cli::run());
}
