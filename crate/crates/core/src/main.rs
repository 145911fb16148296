fn main() {
    std::process::exit(dsym::cli::run(std::env::args()));
}
