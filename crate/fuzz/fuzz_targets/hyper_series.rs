#![no_main]

use libfuzzer_sys::fuzz_target;
use oldsum::hyper::HyperSeries;
use oldsum::Rational;

// byte 0: number of upper parameters, byte 1: lower, then 2 bytes per parameter
// and 2 for the argument.
fuzz_target!(|data: &[u8]| {
    if data.len() < 2 {
        return;
    }
    let (p, r) = ((data[0] % 4) as usize, (data[1] % 4) as usize);
    let mut rest = data[2..]
        .chunks_exact(2)
        .map(|c| Rational::frac(c[0] as i8 as i64, (c[1] % 6) as i64 + 1));
    let upper: Vec<Rational> = rest.by_ref().take(p).collect();
    let lower: Vec<Rational> = rest.by_ref().take(r).collect();
    let Some(z) = rest.next() else {
        return;
    };
    if upper.len() != p || lower.len() != r {
        return;
    }
    let Ok(series) = HyperSeries::new(upper, lower, z) else {
        return;
    };
    if series.termination_index() > 40 {
        return;
    }
    let summed = series.eval_terminating();
    let direct: Result<Vec<Rational>, _> = (0..=series.termination_index() as u64)
        .map(|k| series.term(k))
        .collect();
    if let (Ok(s), Ok(terms)) = (summed, direct) {
        assert_eq!(s, terms.into_iter().sum::<Rational>());
    }
});
