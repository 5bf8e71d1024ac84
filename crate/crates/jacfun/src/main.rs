fn main() {
    std::process::exit(jacfun::cli::main());
}
