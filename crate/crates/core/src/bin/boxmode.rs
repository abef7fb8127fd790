fn main() {
    std::process::exit(boxmode::cli::run(std::env::args_os()));
}
