fn main() {
    let args: Vec<String> = std::env::args().collect();
    std::process::exit(tricon_cli::run(args));
}
