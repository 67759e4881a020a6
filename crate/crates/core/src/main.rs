fn main() {
    std::process::exit(hypergrowth::cli::run(std::env::args_os()));
}
