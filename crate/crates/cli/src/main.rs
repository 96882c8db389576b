fn main() {
    std::process::exit(pointpart_cli::run(std::env::args_os()));
}
