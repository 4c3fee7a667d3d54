fn main() {
    std::process::exit(orbitlab::cli::run());
}
