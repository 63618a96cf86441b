fn main() {
    std::process::exit(star_rings::cli::run(std::env::args_os()));
}
