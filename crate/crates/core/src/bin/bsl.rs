fn main() {
    std::process::exit(bowen_series::cli::main_with_args(std::env::args_os()));
}
