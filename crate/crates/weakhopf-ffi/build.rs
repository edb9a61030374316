use std::env;
use std::path::PathBuf;

fn main() {
    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").unwrap());
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");

    let out = PathBuf::from(env::var("OUT_DIR").unwrap()).join("weakhopf.h");
    let config =
        cbindgen::Config::from_file(crate_dir.join("cbindgen.toml")).expect("cbindgen.toml parses");
    let bindings = cbindgen::Builder::new()
        .with_crate(&crate_dir)
        .with_config(config)
        .generate()
        .expect("cbindgen generates the header");
    bindings.write_to_file(&out);

    // keep the checked-in copy current when the source tree is writable
    let checked_in = crate_dir.join("include").join("weakhopf.h");
    if let Ok(fresh) = std::fs::read(&out) {
        let stale = std::fs::read(&checked_in)
            .map(|old| old != fresh)
            .unwrap_or(true);
        if stale {
            let _ = std::fs::create_dir_all(checked_in.parent().unwrap());
            let _ = std::fs::write(&checked_in, fresh);
        }
    }
}
