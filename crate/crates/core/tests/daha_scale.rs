use dahalab::daha::{pbw_roundtrip, verify_presentation, verify_symbolic, Rep};
use dahalab::params::Params;
use std::time::Instant;

#[test]
fn rank_three_presentation() {
    let rep = Rep::new(Params::generic(3));
    let t = Instant::now();
    let s = verify_presentation(&rep, 3);
    eprintln!("apply path {:?}", t.elapsed());
    assert!(s.all_pass(), "{:?}", s.failures().collect::<Vec<_>>());
    let t = Instant::now();
    let s = verify_symbolic(&rep);
    eprintln!("symbolic {:?}", t.elapsed());
    assert!(s.all_pass(), "{:?}", s.failures().collect::<Vec<_>>());
}

#[test]
fn random_words_roundtrip() {
    for n in [2, 3] {
        let rep = Rep::new(Params::generic(n));
        let t = Instant::now();
        let s = pbw_roundtrip(&rep, 200, 5, 7, 3);
        eprintln!("n={n} roundtrip {:?}", t.elapsed());
        assert!(s.all_pass(), "{:?}", s.failures().next());
    }
}
