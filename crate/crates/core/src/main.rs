fn main() {
    std::process::exit(ntnsim::cli_io::cli(std::env::args_os()));
}
