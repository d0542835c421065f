use std::sync::OnceLock;

use proptest::prelude::*;

use scmh::betti::GeneratorArray;
use scmh::characterization::{
    check_htriangle_with, necessity_compositions, sigma_top, validate_composition, CheckOptions, CompositionSpace,
    PiOrder, RhoMethod,
};
use scmh::complexes::{Face, SimplicialComplex, Triangle};
use scmh::correspondence::{phi, psi};
use scmh::harness::enumerate_shifted_with;
use scmh::macaulay::{boundary, l_representation};
use scmh::multicomplexes::{monomials_up_to, Monomial};

fn choose(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Macaulay boundary by linear scan over the top indices.
fn boundary_oracle(p: u64, ell: u64) -> u64 {
    let mut rest = p as u128;
    let mut out = 0u128;
    let mut k = ell;
    while rest > 0 && k > 0 {
        let mut a = k;
        while choose(a + 1, k) <= rest {
            a += 1;
        }
        rest -= choose(a, k);
        out += choose(a - 1, k - 1);
        k -= 1;
    }
    out as u64
}

fn census5() -> &'static [SimplicialComplex] {
    static CENSUS: OnceLock<Vec<SimplicialComplex>> = OnceLock::new();
    CENSUS.get_or_init(|| enumerate_shifted_with(5, 5, Some(2)).unwrap())
}

proptest! {
    #[test]
    fn l_representation_reassembles(p in 1u64..200_000, ell in 1u32..9) {
        let rep = l_representation(p, ell).unwrap();
        prop_assert_eq!(rep.value().unwrap(), p);
        let terms = rep.terms();
        prop_assert_eq!(terms[0].1, ell);
        for w in terms.windows(2) {
            prop_assert!(w[0].0 > w[1].0);
            prop_assert_eq!(w[0].1, w[1].1 + 1);
        }
        let (a, k) = *terms.last().unwrap();
        prop_assert!(a >= k as u64 && k >= 1);
    }

    #[test]
    fn boundary_matches_scan(p in 0u64..50_000, ell in 1u32..8) {
        prop_assert_eq!(boundary(p, ell).unwrap(), boundary_oracle(p, ell as u64));
    }

    #[test]
    fn phi_psi_round_trip(r in 1u32..7, a in 0u32..6, seed in any::<u64>()) {
        let mut exps = vec![0u32; r as usize];
        let mut s = seed;
        let degree = if a == 0 { 0 } else { (s % (a as u64 + 1)) as u32 };
        for _ in 0..degree {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            exps[(s >> 33) as usize % r as usize] += 1;
        }
        let m = Monomial::new(exps);
        let set = phi(&m, a).unwrap();
        prop_assert_eq!(set.len(), a as usize);
        prop_assert_eq!(psi(set, r, a).unwrap(), m);
    }

    #[test]
    fn psi_phi_round_trip(r in 1u32..7, bits in any::<u64>(), a in 0u32..6) {
        let len = r + a;
        let mut chosen: Vec<u32> = (1..=len).filter(|v| bits >> v & 1 == 1).take(a as usize).collect();
        let mut v = 1;
        while chosen.len() < a as usize {
            if !chosen.contains(&v) {
                chosen.push(v);
            }
            v += 1;
        }
        let set = Face::from_vertices(chosen).unwrap();
        prop_assert_eq!(phi(&psi(set, r, a).unwrap(), a).unwrap(), set);
    }

    #[test]
    fn generator_array_round_trip(n in 1usize..7, seed in any::<u64>()) {
        let d = 1 + (seed % n as u64) as usize;
        let degrees = 1 + (seed >> 8) as usize % (n - d + 1);
        let mut s = seed;
        let reduced: Vec<Vec<i64>> = (0..degrees)
            .map(|off| {
                (0..n - (d + off) + 1)
                    .map(|_| {
                        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        ((s >> 33) % 21) as i64
                    })
                    .collect()
            })
            .collect();
        let a = GeneratorArray::from_reduced(n, d, reduced.clone()).unwrap();
        let b = GeneratorArray::from_cumulative(n, d, a.cumulative().to_vec()).unwrap();
        prop_assert_eq!(b.reduced(), &reduced[..]);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn census_is_independent_of_workers(n in 1u32..6, jobs in 1usize..6) {
        let dmax = n.min(4);
        prop_assert_eq!(
            enumerate_shifted_with(n, dmax, Some(1)).unwrap(),
            enumerate_shifted_with(n, dmax, Some(jobs)).unwrap()
        );
    }

    #[test]
    fn necessity_replays(idx in any::<prop::sample::Index>()) {
        let census = census5();
        let c = &census[idx.index(census.len())];
        for rec in necessity_compositions(c).unwrap() {
            prop_assert_eq!(validate_composition(&rec.composition, rec.mass), Ok(()));
            prop_assert!(sigma_top(&rec.composition) <= rec.bound);
        }
    }

    #[test]
    fn checker_methods_agree(d in 1usize..4, entries in prop::collection::vec(0i64..6, 9)) {
        let mut it = entries.into_iter();
        let rows: Vec<Vec<i64>> = (0..=d)
            .map(|i| (0..=i).map(|j| if j == 0 { 1 } else { it.next().unwrap_or(0) }).collect())
            .collect();
        let t = Triangle::new(rows).unwrap();
        let regular = check_htriangle_with(&t, &CheckOptions { method: RhoMethod::Regular, ..Default::default() });
        let search = check_htriangle_with(&t, &CheckOptions { method: RhoMethod::Search, ..Default::default() });
        prop_assert_eq!(regular, search);
    }
}

#[test]
fn pi_order_extends_the_array_relations() {
    for vars in 1..=3 {
        for cap in 1..=4u32 {
            let order = PiOrder::new(vars);
            let sorted = order.sorted(cap);
            assert_eq!(sorted.len(), monomials_up_to(vars, cap).len());
            for w in sorted.windows(2) {
                assert_eq!(order.compare(&w[0], &w[1]), std::cmp::Ordering::Less);
            }
            for m in &sorted {
                if m.degree() < cap {
                    for j in 1..=vars {
                        assert!(order.compare(m, &m.times_var(j)).is_lt());
                    }
                }
                for i in 1..=vars {
                    for j in i + 1..=vars {
                        if let Some(up) = m.exchange(i, j) {
                            assert!(order.compare(m, &up).is_lt(), "{m:?} -> {up:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn space_listing_follows_pi_order() {
    let space = CompositionSpace::new(3, 3, vec![1, 2, 1, 0]).unwrap();
    assert_eq!(space.monomials(), &PiOrder::new(3).sorted(3)[..]);
}
