#![no_main]

use framerole::srl::{parse_frame_annotations, write_frame_annotations};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(anns) = parse_frame_annotations(text) else { return };
    let again = parse_frame_annotations(&write_frame_annotations(&anns)).expect("written annotations parse");
    assert_eq!(again, anns);
});
