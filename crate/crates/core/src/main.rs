fn main() {
    std::process::exit(sombor_core::cli::run_command(std::env::args_os()));
}
