//! Drives the `omega` command line in-process.

use omega_polytope::cli::run;

fn main() {
    for line in [
        "omega vertices --n 2 --reduced",
        "omega hull --n 2",
        "omega verify --n 3 --jobs 2",
        "omega face-test --n 3 --exclude 1,1,1 2,2,2",
        "omega edge-cert --n 2 --a 1,1 --b 2,2",
        "omega census --n 3 --orbits",
    ] {
        let out = run(line.split_whitespace());
        println!("$ {line}   (exit {})", out.code);
        print!("{}{}", out.stdout, out.stderr);
    }
}
