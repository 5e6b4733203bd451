use std::env;
use std::path::PathBuf;

fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");

    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    let out_header = PathBuf::from(env::var("OUT_DIR").unwrap()).join("sl3coh.h");

    match cbindgen::generate(&crate_dir) {
        Ok(bindings) => {
            bindings.write_to_file(&out_header);
            // Keep the in-tree copy that C consumers include up to date; a
            // read-only checkout still builds, it just skips the refresh.
            let tracked = crate_dir.join("include").join("sl3coh.h");
            if std::fs::create_dir_all(tracked.parent().unwrap()).is_ok() {
                let _ = std::fs::copy(&out_header, &tracked);
            }
        }
        Err(err) => println!("cargo:warning=header generation skipped: {err}"),
    }
}
