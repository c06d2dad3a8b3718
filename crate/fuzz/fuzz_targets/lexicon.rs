#![no_main]

use framerole::lexicon::load_lexicon;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(store) = load_lexicon(text) else { return };
    let reloaded = load_lexicon(&store.serialize()).expect("serialized store reloads");
    assert_eq!(reloaded.stats(), store.stats());
    for sense in store.senses() {
        let ranked = store.most_frequent_senses(&sense.lemma);
        assert_eq!(ranked.len(), store.senses_for_lemma(&sense.lemma).len());
        for (role, _) in store.roles_for_sense(&sense.id) {
            let _ = store.role_apex(&role.id);
        }
    }
});
