#![no_main]

use dyckstat::{compute_stats, Alphabet, DyckWord};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    for alphabet in Alphabet::ALL {
        if let Ok(word) = DyckWord::parse(text, alphabet) {
            assert_eq!(word.format(alphabet), text);
            let stats = compute_stats(&word);
            assert_eq!(
                stats.rise_composition.iter().sum::<usize>(),
                stats.semilength
            );
        }
    }
});
