//! Drives the command-line front end in process and prints its JSON.

use hermquot::cli::run;

fn main() {
    let out = run(["hermq", "semigroup", "--telescopic", "14", "49", "50"]);
    println!("exit {}\n{}", out.code, out.stdout);
    let out = run(["hermq", "--format", "table", "curve", "--family", "I", "-p", "7", "-h", "2", "-d", "5"]);
    println!("exit {}\n{}", out.code, out.stdout);
}
