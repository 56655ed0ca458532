#![no_main]

use libfuzzer_sys::fuzz_target;
use oldsum::rational::parse_rational_list;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(list) = parse_rational_list(s) {
        let joined = list
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",");
        assert_eq!(
            parse_rational_list(&joined).expect("joined list reparses"),
            list
        );
    }
});
