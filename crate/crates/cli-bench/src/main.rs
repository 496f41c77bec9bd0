fn main() {
    std::process::exit(cli_bench::run());
}
