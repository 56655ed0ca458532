#![no_main]

use libfuzzer_sys::fuzz_target;
use oldsum::gamma::GammaExpr;
use oldsum::Rational;

// Each 3-byte chunk is one factor Γ(p/q)^e.
fuzz_target!(|data: &[u8]| {
    let factors: Vec<(Rational, i64)> = data
        .chunks_exact(3)
        .take(8)
        .map(|c| {
            let p = c[0] as i8 as i64;
            let q = (c[1] % 8) as i64 + 1;
            let e = (c[2] % 5) as i64 - 2;
            (Rational::frac(p, q), e)
        })
        .collect();
    let build = |fs: &mut dyn Iterator<Item = &(Rational, i64)>| {
        fs.fold(GammaExpr::new(Rational::one()), |g, (a, e)| {
            g.gamma(a.clone(), *e)
        })
    };
    let forward = build(&mut factors.iter()).reduce();
    let backward = build(&mut factors.iter().rev()).reduce();
    assert_eq!(forward, backward);
});
