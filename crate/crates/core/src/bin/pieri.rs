fn main() {
    std::process::exit(pieri_chevalley::cli::run(std::env::args_os()));
}
