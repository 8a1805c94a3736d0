fn main() {
    std::process::exit(submax::cli::main_with(std::env::args_os()));
}
