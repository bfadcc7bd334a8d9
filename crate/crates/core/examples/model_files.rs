//! Writes a model to JSON, reloads it, and runs the command-line driver on it.

use multiple_points::{bundled, cli, model_file};

fn main() {
    let m = bundled::by_name("two-lines").unwrap();
    let text = model_file::to_json(&m).unwrap();
    println!("{} bytes of JSON, first lines:", text.len());
    for line in text.lines().take(12) {
        println!("  {line}");
    }
    let back = model_file::from_json(&text).unwrap();
    assert_eq!(back, m);

    let path = std::env::temp_dir().join("two-lines-example.json");
    std::fs::write(&path, &text).unwrap();
    let p = path.to_str().unwrap();
    let mut out = Vec::new();
    let code = cli::run(["mpoints", "compute", p, "--k", "2", "--quantity", "signature"], &mut out, &mut std::io::stderr());
    print!("{}", String::from_utf8(out).unwrap());
    println!("exit {code}");
    std::fs::remove_file(path).unwrap();

    match model_file::from_json("{\"rings\": {}, \"target\": \"N\"}") {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("rejected: {e}"),
    }
}
