//! Drives the command-line front end in-process.

use bicomplex::cli::run;

fn main() {
    let cmds: &[&[&str]] = &[
        &["minpoly", "1+i+j-k"],
        &["census", "X^3-2*X^2+4*X-8"],
        &["units", "--L", "QB"],
        &["zeta", "--K", "Qh", "--s", "2"],
        &["radix-encode", "3+2*i", "--base", "gauss:-1+", "--json"],
    ];
    let (mut out, mut err) = (std::io::stdout(), std::io::stderr());
    for args in cmds {
        println!("$ bicomplex {}", args.join(" "));
        let argv: Vec<String> = std::iter::once("bicomplex").chain(args.iter().copied()).map(String::from).collect();
        let code = run(&argv, &mut out, &mut err);
        if code != 0 {
            println!("(exit {code})");
        }
    }
}
