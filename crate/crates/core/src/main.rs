fn main() {
    std::process::exit(hamrel::cli::run(std::env::args_os()));
}
