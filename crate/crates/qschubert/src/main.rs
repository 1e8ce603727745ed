fn main() {
    std::process::exit(qschubert::cli::main())
}
