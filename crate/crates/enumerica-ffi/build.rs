use std::env;
use std::path::Path;

fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").unwrap();
    let out_dir = Path::new(&crate_dir).join("include");
    std::fs::create_dir_all(&out_dir).expect("create include directory");

    cbindgen::generate(&crate_dir)
        .expect("generate C header")
        .write_to_file(out_dir.join("enumerica.h"));

    println!("cargo:rerun-if-changed=cbindgen.toml");
    println!("cargo:rerun-if-changed=src/lib.rs");
}
