fn main() {
    std::process::exit(qpv::cli::run(std::env::args_os()));
}
