fn main() -> std::process::ExitCode {
    splitsmooth::cli::run(std::env::args_os())
}
