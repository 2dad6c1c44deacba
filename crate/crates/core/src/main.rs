fn main() {
    std::process::exit(hzbounds::cli::main_with_args(std::env::args_os()));
}
