use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = env::var("CARGO_MANIFEST_DIR").expect("CARGO_MANIFEST_DIR is set");
    let out = PathBuf::from(&crate_dir).join("include").join("wavekernel.h");
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    match cbindgen::generate(&crate_dir) {
        Ok(bindings) => {
            bindings.write_to_file(out);
        }
        Err(err) => {
            // Header generation failures should not mask compile errors in
            // the crate itself; cbindgen parses the source independently.
            println!("cargo:warning=cbindgen failed: {err}");
        }
    }
}
