fn main() {
    std::process::exit(o2sim_cli::run(std::env::args_os()));
}
