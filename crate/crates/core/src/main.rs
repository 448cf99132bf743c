fn main() {
    std::process::exit(genhooks::harness::cli::cli_main(std::env::args_os()));
}
