#![no_main]

use dyckstat::{MarkedFactorization, Step};
use libfuzzer_sys::fuzz_target;

// One bit per step, low bit first; 1 is north.
fuzz_target!(|data: &[u8]| {
    let steps: Vec<Step> = data
        .iter()
        .flat_map(|b| {
            (0..8).map(move |i| {
                if b >> i & 1 == 1 {
                    Step::North
                } else {
                    Step::East
                }
            })
        })
        .collect();
    if let Ok(factors) = MarkedFactorization::of(&steps) {
        assert_eq!(factors.reassemble(), steps);
    }
});
