fn main() {
    std::process::exit(hodge_moduli::cli::main_with_args(std::env::args_os()));
}
