use postnikov::Outcome;
use std::io::Write;

fn main() {
    let mut out = std::io::stdout().lock();
    match postnikov::run(std::env::args()) {
        Outcome::Text(t) => {
            let _ = write!(out, "{t}");
        }
        Outcome::Report(r, code) => {
            // A closed pipe downstream is not an error of ours.
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&r).expect("report serializes")
            );
            if let Some(e) = &r.error {
                eprintln!("error: {e}");
            }
            drop(out);
            std::process::exit(code);
        }
    }
}
