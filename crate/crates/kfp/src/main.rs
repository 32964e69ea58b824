fn main() {
    std::process::exit(kfp::cli::run());
}
