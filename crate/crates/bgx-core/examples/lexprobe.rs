use bgx_core::poly::MonomialOrder;
use bgx_core::quantum::Presentation;
use std::time::Instant;

fn main() {
    for n in 3..=8u32 {
        let t = Instant::now();
        let p = Presentation::new(n, MonomialOrder::Lex).unwrap();
        eprintln!(
            "lex n={n}: rank {} ({} basis elements) in {:?}",
            p.rank(),
            p.groebner_basis().basis().len(),
            t.elapsed()
        );
    }
}
