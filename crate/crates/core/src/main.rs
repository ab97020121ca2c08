fn main() {
    std::process::exit(supersym::cli::main_with_args(std::env::args_os()));
}
