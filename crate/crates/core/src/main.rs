use std::io::Write;

fn main() {
    let argv: Vec<std::ffi::OsString> = std::env::args_os().collect();
    let verbose = argv
        .iter()
        .filter_map(|a| a.to_str())
        .map(|a| match a {
            "--verbose" => 1,
            a if a.starts_with('-') && !a.starts_with("--") && a[1..].chars().all(|c| c == 'v') => {
                a.len() - 1
            }
            _ => 0,
        })
        .sum::<usize>();
    let level = match verbose {
        0 => "warn",
        1 => "info",
        2 => "debug",
        _ => "trace",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();

    let out = twred::cli::run_command(argv);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    let _ = std::io::stdout().flush();
    std::process::exit(out.code);
}
