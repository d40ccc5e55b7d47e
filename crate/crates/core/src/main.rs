fn main() {
    std::process::exit(chromroot::cli::run(std::env::args_os()));
}
