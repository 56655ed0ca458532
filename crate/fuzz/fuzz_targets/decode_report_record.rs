#![no_main]

use libfuzzer_sys::fuzz_target;
use oldsum::sweep::Record;

fuzz_target!(|data: &[u8]| {
    let Ok(record) = serde_json::from_slice::<Record>(data) else {
        return;
    };
    let text = serde_json::to_string(&record).unwrap();
    let back: Record = serde_json::from_str(&text).expect("encoded record decodes");
    assert_eq!(back, record);
    // small cases are cheap enough to re-run
    if record.params.n <= 8
        && record
            .params
            .rational
            .values()
            .all(|v| v.numer().bits() < 32 && v.denom().bits() < 32)
    {
        let _ = record.reevaluate();
    }
});
