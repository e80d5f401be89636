use hypercert_core::groups::GroupSpec;
use hypercert_core::rat;
use hypercert_core::sums::epsilon;
use hypercert_core::sums::gen::build_certificate;
use hypercert_core::sums::certificate::monomial_key;
use hypercert_core::sums::symbolic::Monomial;
use num::rational::BigRational;
use num::Zero;
use std::collections::BTreeMap;

fn letter4(group: &GroupSpec, case: &epsilon::EpsilonCase) -> BTreeMap<Monomial, BigRational> {
    let g = build_certificate(group, case).unwrap();
    let mut out: BTreeMap<Monomial, BigRational> = BTreeMap::new();
    let half = rat::frac(1, 2);
    for (m, c) in &g.lhs.terms {
        for e in &g.certificate.entries[&monomial_key(m)] {
            let w = rat::parse(&e.weight).unwrap();
            let t = rat::parse(&e.scale).unwrap();
            let left = e.left_vars().unwrap();
            let right = m.minus(&left).unwrap();
            for (side, amount) in [(&left, c * &w * &t * &half), (&right, c * &w * &half / &t)] {
                let sq = Monomial::new(side.iter().map(|&(v, k)| (v, 2 * k)).collect(), 0);
                if sq.degree() == 4 && sq.vars.iter().all(|&(v, _)| v.len == 1) {
                    *out.entry(sq).or_insert_with(BigRational::zero) += amount;
                }
            }
        }
    }
    out
}

fn main() {
    let f2 = GroupSpec::free(2).unwrap();
    let cases = epsilon::routing_cases(&f2).unwrap();
    for lengths in [vec![1u64,1,1,1], vec![3,1,1,1], vec![2,1,1,1,1]] {
        let case = cases.iter().find(|c| c.lengths == lengths).unwrap();
        println!("{:?}:", lengths);
        for (m, v) in letter4(&f2, case) {
            println!("   {} -> {}", monomial_key(&m), rat::render(&v));
        }
    }
}
