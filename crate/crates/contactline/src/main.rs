fn main() {
    std::process::exit(contactline::cli::run());
}
