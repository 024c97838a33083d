//! Compiles `tests/c/smoke.c` against the generated header and the static
//! library, then runs it.

use std::path::{Path, PathBuf};
use std::process::Command;

fn profile_dir() -> PathBuf {
    // target/<profile>/deps/c_link-<hash>
    let exe = std::env::current_exe().unwrap();
    exe.parent().and_then(Path::parent).unwrap().to_path_buf()
}

#[test]
fn c_program_links_and_runs() {
    let manifest = Path::new(env!("CARGO_MANIFEST_DIR"));
    let lib = profile_dir().join("libfibcube_ffi.a");
    assert!(lib.exists(), "static library missing at {}", lib.display());
    let out = Path::new(env!("CARGO_TARGET_TMPDIR")).join("fibcube_smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let status = Command::new(&cc)
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(manifest.join("tests/c/smoke.c"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&out)
        .status()
        .unwrap_or_else(|e| panic!("running {cc}: {e}"));
    assert!(status.success(), "C compile failed");
    let run = Command::new(&out).output().unwrap();
    assert!(
        run.status.success(),
        "{}",
        String::from_utf8_lossy(&run.stderr)
    );
    assert_eq!(String::from_utf8_lossy(&run.stdout).trim(), "ok");
}

#[test]
fn header_declares_every_export() {
    let header =
        std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("include/fibcube.h"))
            .unwrap();
    for name in [
        "fibcube_graph_new",
        "fibcube_graph_free",
        "fibcube_graph_degree",
        "fibcube_imbalance",
        "fibcube_complement_edge_count",
        "fibcube_embed",
        "fibcube_status_message",
        "fibcube_last_error",
        "typedef struct FibcubeGraph FibcubeGraph",
        "FIBCUBE_STATUS_CAP_EXCEEDED",
    ] {
        assert!(header.contains(name), "{name} missing from header");
    }
}
