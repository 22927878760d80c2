#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    sdp_degree::fuzzing::index_sequence(data);
});
