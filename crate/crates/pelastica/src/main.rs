fn main() {
    std::process::exit(pelastica::cli::main());
}
