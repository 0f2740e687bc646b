fn main() {
    std::process::exit(tgraphlet::cli::run(std::env::args_os()));
}
