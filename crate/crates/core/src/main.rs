fn main() {
    std::process::exit(commtrace::cli::main_with_args(std::env::args_os()));
}
