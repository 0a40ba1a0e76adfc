fn main() {
    std::process::exit(shearer::cli::run(std::env::args_os()));
}
