fn main() {
    std::process::exit(qverify::cli::run_main(std::env::args_os()));
}
