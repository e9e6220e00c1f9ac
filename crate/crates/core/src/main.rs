use std::io::IsTerminal;

fn main() {
    let decorate = std::io::stdout().is_terminal()
        && std::env::var("RAMSEY_NO_COLOR").map_or(true, |v| v != "1");
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = cyclic_ramsey::cli::run_with(
        std::env::args_os(),
        &mut stdout.lock(),
        &mut stderr.lock(),
        decorate,
    );
    std::process::exit(code);
}
