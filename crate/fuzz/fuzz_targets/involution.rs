#![no_main]

use dyckstat::stats::{ldr, returns, rises};
use dyckstat::{big_phi, Alphabet, DyckWord};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Some(alphabet) = Alphabet::detect(text) else {
        return;
    };
    let Ok(word) = DyckWord::parse(text, alphabet) else {
        return;
    };
    let n = word.semilength();
    let image = big_phi(&word).expect("involution stays in its domain");
    assert_eq!(big_phi(&image).unwrap(), word);
    assert_eq!(rises(image.steps()), rises(word.steps()));
    assert_eq!(returns(image.steps()), n - ldr(word.steps()));
});
