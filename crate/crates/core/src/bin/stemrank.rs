fn main() {
    std::process::exit(stemrank::cli::main());
}
