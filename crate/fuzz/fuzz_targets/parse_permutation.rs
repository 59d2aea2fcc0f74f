#![no_main]

use dyckstat::{from_dyck, to_dyck, Permutation};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(perm) = text.parse::<Permutation>() else {
        return;
    };
    if let Ok(word) = to_dyck(&perm) {
        assert_eq!(from_dyck(&word), perm);
    } else {
        assert!(!perm.is_321_avoiding());
    }
});
