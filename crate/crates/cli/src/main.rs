fn main() {
    std::process::exit(hdx_cli::run(std::env::args_os()));
}
