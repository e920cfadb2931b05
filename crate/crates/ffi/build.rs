fn main() {
    let crate_dir = std::env::var("CARGO_MANIFEST_DIR").expect("cargo sets this");
    let out_dir = std::env::var("OUT_DIR").expect("cargo sets this");
    let header = std::path::Path::new(&out_dir).join("qhstruct.h");
    // The committed copy lives in include/; a test checks it matches.
    cbindgen::generate(&crate_dir)
        .expect("C header generation")
        .write_to_file(&header);
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
}
