fn main() {
    std::process::exit(biascube::cli::run());
}
