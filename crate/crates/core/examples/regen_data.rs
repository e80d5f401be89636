//! Regenerates the committed certificate and fixture files under
//! `crates/core/data/`. The construction is deterministic; a test asserts
//! that the committed files match a fresh regeneration byte for byte.

use hypercert_core::groups::GroupSpec;
use hypercert_core::sums::epsilon::{self, EpsilonCase};
use hypercert_core::sums::gen::{build_certificate, to_file};
use hypercert_core::sums::{data, expand_sum};
use std::fs;

fn emit(group: &GroupSpec, case: &EpsilonCase) {
    let gen = build_certificate(group, case).expect(&case.id);
    let cert_file = to_file(group, case, &gen.certificate);
    let cert_path = data::certificate_path(&case.id);
    fs::create_dir_all(cert_path.parent().unwrap()).unwrap();
    fs::write(&cert_path, serde_json::to_string_pretty(&cert_file).unwrap()).unwrap();

    let expansion = expand_sum(group, &case.lengths, case.with_unit).unwrap();
    let fix_path = data::fixture_path(&case.id);
    fs::create_dir_all(fix_path.parent().unwrap()).unwrap();
    fs::write(&fix_path, expansion.to_canonical_json()).unwrap();
    println!("{}: {} lhs monomials", case.id, expansion.terms.len());
}

fn main() {
    let f2 = GroupSpec::free(2).unwrap();
    for case in epsilon::f2_cases() {
        emit(&f2, &case);
    }
    let tri = GroupSpec::triangular_local(16).unwrap();
    for case in epsilon::triangular_cases() {
        emit(&tri, &case);
    }
    for n in [6u32, 7] {
        let zn = GroupSpec::cyclic(n).unwrap();
        for case in epsilon::cyclic_cases(n).unwrap() {
            emit(&zn, &case);
        }
    }
    for n in [2u32, 3] {
        let group = GroupSpec::free(n).unwrap();
        for m in 2..=4u64 {
            for case in epsilon::general_rank_cases(n, m).unwrap() {
                emit(&group, &case);
            }
        }
    }
}
