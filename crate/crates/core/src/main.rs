fn main() {
    std::process::exit(sptrace::cli::main());
}
