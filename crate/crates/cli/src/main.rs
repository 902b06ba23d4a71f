fn main() {
    std::process::exit(ruledkit::run(std::env::args_os()));
}
