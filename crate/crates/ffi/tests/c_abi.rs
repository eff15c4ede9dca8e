use std::path::{Path, PathBuf};
use std::process::Command;

fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// `target/<profile>`, where cargo puts the built libraries.
fn lib_dir() -> PathBuf {
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn header_declares_the_api() {
    let header = std::fs::read_to_string(crate_dir().join("include/stemrank.h")).unwrap();
    for name in [
        "STEMRANK_STATUS_OK = 0",
        "STEMRANK_STATUS_PANIC",
        "typedef struct StemrankModel StemrankModel;",
        "stemrank_last_error_message(void)",
        "stemrank_model_load(",
        "stemrank_model_build(",
        "stemrank_model_prob(",
        "stemrank_stemmer_stem(",
        "stemrank_ranker_new(",
        "stemrank_ranker_rank(",
        "stemrank_spearman(",
        "stemrank_string_free(",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

#[test]
fn c_program_links_and_runs() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("c.txt");
    std::fs::write(&corpus, "a b a\na b c\n").unwrap();
    let exe = dir.path().join("smoke");
    let libs = lib_dir();
    assert!(
        libs.join("libstemrank_ffi.so").exists(),
        "no shared library in {}",
        libs.display()
    );
    let status = Command::new("cc")
        .arg(crate_dir().join("tests/c/smoke.c"))
        .arg("-std=c11")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(crate_dir().join("include"))
        .arg("-L")
        .arg(&libs)
        .arg(format!("-Wl,-rpath,{}", libs.display()))
        .arg("-lstemrank_ffi")
        .arg("-o")
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(status.success());
    let out = Command::new(&exe).arg(&corpus).output().unwrap();
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(
        out.status.success(),
        "{stdout}{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(stdout.contains("P(b|a)=1.000000 count=2\n"), "{stdout}");
    assert!(stdout.contains("stem=लड़क\n"), "{stdout}");
    assert!(stdout.contains("rho=0.942857142857\n"), "{stdout}");
}
