fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(compring_cli::run(&argv));
}
