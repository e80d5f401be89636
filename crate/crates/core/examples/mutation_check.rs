use hypercert_core::groups::GroupSpec;
use hypercert_core::rat;
use hypercert_core::sums::certificate::check_certificate;
use hypercert_core::sums::epsilon;
use hypercert_core::sums::gen::build_certificate;

fn check_case(group: &GroupSpec, case: &epsilon::EpsilonCase) {
    let gen = build_certificate(group, case).expect(&case.id);
    for (i, term) in case.bound.iter().enumerate() {
        let mut mutated = case.bound.clone();
        let reduced = rat::parse(&term.coef).unwrap() * rat::frac(99, 100);
        mutated[i].coef = rat::render(&reduced);
        let still_ok = check_certificate(group, &gen.lhs, &mutated, &gen.certificate)
            .map(|c| c.ok)
            .unwrap_or(false);
        if still_ok {
            println!("{} term {i}: NOT DETECTED", case.id);
        } else {
            println!("{} term {i}: detected", case.id);
        }
    }
}

fn main() {
    let f2 = GroupSpec::free(2).unwrap();
    for case in epsilon::f2_cases() { check_case(&f2, &case); }
    let tri = GroupSpec::triangular_local(16).unwrap();
    for case in epsilon::triangular_cases() { check_case(&tri, &case); }
    for n in [6u32, 7] {
        let zn = GroupSpec::cyclic(n).unwrap();
        for case in epsilon::cyclic_cases(n).unwrap() { check_case(&zn, &case); }
    }
    for n in [2u32, 3] {
        let g = GroupSpec::free(n).unwrap();
        for m in 2..=4 {
            for case in epsilon::general_rank_cases(n, m).unwrap() { check_case(&g, &case); }
        }
    }
}
