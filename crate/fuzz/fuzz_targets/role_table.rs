#![no_main]

use framerole::heuristics::load_role_table;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(table) = load_role_table(Some(text)) else { return };
    assert_eq!(load_role_table(Some(&table.to_config())).expect("written table parses"), table);
});
