fn main() {
    std::process::exit(hopfcat::cli::main());
}
