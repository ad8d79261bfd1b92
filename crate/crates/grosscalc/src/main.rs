use std::process::ExitCode;

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let argv: Vec<&str> = args.iter().map(String::as_str).collect();
    let (code, output) = grosscalc::cli::run_command(&argv);
    if !output.is_empty() {
        if code == 0 {
            println!("{output}");
        } else {
            eprintln!("{output}");
        }
    }
    ExitCode::from(code.clamp(0, 255) as u8)
}
