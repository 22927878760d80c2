//! Replays the checked-in fuzz corpus through the same entry points the
//! fuzz targets use.

use std::fs;
use std::path::PathBuf;

fn replay(target: &str, check: fn(&[u8])) {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut seen = 0;
    for entry in fs::read_dir(&dir).unwrap_or_else(|e| panic!("{}: {e}", dir.display())) {
        let path = entry.unwrap().path();
        check(&fs::read(&path).unwrap());
        seen += 1;
    }
    assert!(seen > 0, "empty corpus for {target}");
}

#[test]
fn index_sequence_corpus() {
    replay("index_sequence", sdp_degree::fuzzing::index_sequence);
}

#[test]
fn integer_corpus() {
    replay("integer", sdp_degree::fuzzing::integer);
}

#[test]
fn cache_file_corpus() {
    replay("cache_file", sdp_degree::fuzzing::cache_file);
}

#[test]
fn cli_args_corpus() {
    replay("cli_args", sdp_degree::fuzzing::cli_args);
}
