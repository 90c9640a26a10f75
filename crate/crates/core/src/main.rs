fn main() -> std::process::ExitCode {
    extcode::cli::main()
}
