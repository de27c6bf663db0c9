fn main() {
    std::process::exit(raddeg_cli::main_with_args(std::env::args_os()));
}
