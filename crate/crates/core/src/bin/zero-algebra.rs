fn main() {
    std::process::exit(zero_algebra::cli::main_with_args(std::env::args_os()));
}
