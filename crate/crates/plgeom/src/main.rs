use std::process::ExitCode;

fn main() -> ExitCode {
    plgeom::cli::run()
}
