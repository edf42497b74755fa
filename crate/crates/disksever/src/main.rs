fn main() {
    std::process::exit(disksever::cli::run(std::env::args_os()));
}
