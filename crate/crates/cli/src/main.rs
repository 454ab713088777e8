fn main() {
    std::process::exit(fqlab_cli::run());
}
