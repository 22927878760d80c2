//! Entry points shared by the fuzz targets and the corpus replay test.
//! Each one panics if a parser accepts input it cannot reproduce.

use crate::exactnum::{parse_integer, render_integer};
use crate::indexseq::IndexSequence;
use crate::psi::PsiCache;

/// Complements are only checked for ambient sizes up to this bound; the
/// complement of `{max}` has `max - 1` entries.
const MAX_COMPLEMENT: u32 = 1 << 12;

pub fn index_sequence(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(seq) = text.parse::<IndexSequence>() {
        assert!(seq.entries().windows(2).all(|w| w[0] < w[1]));
        assert!(seq.entries().iter().all(|&e| e >= 1));
        let rendered = seq.to_string();
        assert_eq!(rendered.parse::<IndexSequence>().unwrap(), seq);
        if let Some(&max) = seq.entries().last().filter(|&&m| m <= MAX_COMPLEMENT) {
            let comp = seq.complement(max).unwrap();
            assert_eq!(comp.len() + seq.len(), max as usize);
            assert_eq!(comp.complement(max).unwrap(), seq);
        }
    }
}

pub fn integer(data: &[u8]) {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = parse_integer(text) {
        let rendered = render_integer(&x);
        assert_eq!(parse_integer(&rendered).unwrap(), x);
        assert!(rendered.len() <= text.len());
    }
}

pub fn cache_file(data: &[u8]) {
    if let Ok(cache) = PsiCache::parse(data) {
        let mut buf = Vec::new();
        cache.save(&mut buf).unwrap();
        let again = PsiCache::parse(&buf[..]).unwrap();
        assert_eq!(again.records(), cache.records());
    }
}

/// Arguments are separated by NUL bytes.
pub fn cli_args(data: &[u8]) {
    let args: Vec<String> = data
        .split(|&b| b == 0)
        .map(|a| String::from_utf8_lossy(a).into_owned())
        .collect();
    if let Ok(cmd) = crate::cli::parse_args(&args) {
        let again = crate::cli::parse_args(&args).unwrap();
        assert_eq!(cmd, again);
    }
}
