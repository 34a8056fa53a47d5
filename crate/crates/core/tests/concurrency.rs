//! The public operations are pure values plus one memoized projector cache;
//! concurrent use must agree with sequential results exactly.

use std::thread;

use skeintail_core::corpus;
use skeintail_core::jones::colored_jones;
use skeintail_core::jw;
use skeintail_core::morse::EvalConfig;

#[test]
fn concurrent_projector_and_evaluation() {
    let config = EvalConfig { width_cap: 16 };
    let expected: Vec<_> = (1..=3)
        .map(|n| {
            colored_jones(&corpus::load("trefoil-std").unwrap(), n, &config)
                .unwrap()
                .polynomial
        })
        .collect();
    let handles: Vec<_> = (0..8)
        .map(|i| {
            let expected = expected.clone();
            thread::spawn(move || {
                let n = i % 3 + 1;
                let p = jw::jw(n + 1).unwrap();
                assert!(jw::verify_jw(n + 1).unwrap().all_pass());
                assert_eq!(*p, *jw::jw(n + 1).unwrap());
                let config = EvalConfig { width_cap: 16 };
                let d = corpus::load("trefoil-std").unwrap();
                let r = colored_jones(&d, n, &config).unwrap();
                assert_eq!(r.polynomial, expected[n - 1]);
            })
        })
        .collect();
    for h in handles {
        h.join().unwrap();
    }
}
