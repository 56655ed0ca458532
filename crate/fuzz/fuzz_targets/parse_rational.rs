#![no_main]

use libfuzzer_sys::fuzz_target;
use oldsum::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(v) = s.parse::<Rational>() {
        let printed = v.to_string();
        let back: Rational = printed.parse().expect("printed form reparses");
        assert_eq!(back, v);
        assert_eq!(back.to_string(), printed);
    }
});
