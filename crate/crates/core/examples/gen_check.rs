use hypercert_core::groups::GroupSpec;
use hypercert_core::sums::epsilon;
use hypercert_core::sums::gen::build_certificate;
use std::time::Instant;

fn main() {
    let f2 = GroupSpec::free(2).unwrap();
    for case in epsilon::f2_cases() {
        let t0 = Instant::now();
        match build_certificate(&f2, &case) {
            Ok(g) => println!("{}: ok  lhs monomials={} ({:?})", case.id, g.lhs.terms.len(), t0.elapsed()),
            Err(e) => println!("{}: FAIL {e}", case.id),
        }
    }
    let tri = GroupSpec::triangular_local(16).unwrap();
    for case in epsilon::triangular_cases() {
        match build_certificate(&tri, &case) {
            Ok(g) => println!("{}: ok  lhs monomials={}", case.id, g.lhs.terms.len()),
            Err(e) => println!("{}: FAIL {e}", case.id),
        }
    }
    for n in [6u32, 7, 8] {
        let zn = GroupSpec::cyclic(n).unwrap();
        for case in epsilon::cyclic_cases(n).unwrap() {
            match build_certificate(&zn, &case) {
                Ok(_) => println!("{}: ok", case.id),
                Err(e) => println!("{}: FAIL {e}", case.id),
            }
        }
    }
    for n in [2u32, 3] {
        let fnn = GroupSpec::free(n).unwrap();
        for m in 2..=4u64 {
            for case in epsilon::general_rank_cases(n, m).unwrap() {
                let t0 = Instant::now();
                match build_certificate(&fnn, &case) {
                    Ok(_) => println!("{}: ok ({:?})", case.id, t0.elapsed()),
                    Err(e) => println!("{}: FAIL {e}", case.id),
                }
            }
        }
    }
}
