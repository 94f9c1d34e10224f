fn main() { std::process::exit(elliptica::cli::run()) }
