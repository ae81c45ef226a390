fn main() {
    std::process::exit(hermpos_cli::run(std::env::args_os()));
}
