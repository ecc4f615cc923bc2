fn main() {
    std::process::exit(brandt::cli::main_from_args(std::env::args_os()));
}
