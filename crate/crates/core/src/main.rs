fn main() {
    std::process::exit(hm_core::cli::run(std::env::args_os()));
}
