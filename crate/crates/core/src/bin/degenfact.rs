fn main() -> std::process::ExitCode {
    degenfact::cli::main()
}
