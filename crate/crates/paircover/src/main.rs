fn main() {
    std::process::exit(paircover::cli::run(std::env::args()));
}
