fn main() {
    std::process::exit(maxab_cli::run(std::env::args_os()));
}
