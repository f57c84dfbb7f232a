fn main() {
    std::process::exit(einv::cli::run(std::env::args_os()));
}
