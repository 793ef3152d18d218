fn main() -> std::process::ExitCode {
    madic::cli::main_entry()
}
