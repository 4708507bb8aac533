fn main() {
    std::process::exit(flatband::cli::run());
}
