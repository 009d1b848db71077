//! Property tests over randomly assembled block potentials.

use proptest::prelude::*;

use bhcr_core::atoms::atomic_decomposition;
use bhcr_core::rational::Rat;
use bhcr_core::symmetry::{j_element, SymmetryGroup};
use bhcr_core::weights::{charges, WeightSystem};
use bhcr_core::{duality, parse, DelsartePolynomial};

#[derive(Clone, Debug)]
enum AtomSpec {
    Fermat(u64),
    Chain(Vec<u64>),
    Loop(Vec<u64>),
}

impl AtomSpec {
    fn len(&self) -> usize {
        match self {
            AtomSpec::Fermat(_) => 1,
            AtomSpec::Chain(exps) | AtomSpec::Loop(exps) => exps.len(),
        }
    }
}

fn arb_atom() -> impl Strategy<Value = AtomSpec> {
    prop_oneof![
        (2u64..=6).prop_map(AtomSpec::Fermat),
        proptest::collection::vec(2u64..=5, 2..=3).prop_map(AtomSpec::Chain),
        proptest::collection::vec(2u64..=4, 2..=3).prop_map(AtomSpec::Loop),
    ]
}

/// Assemble a block-diagonal potential from atoms, then scramble the
/// variable order with a seeded shuffle.
fn assemble(atoms: &[AtomSpec], shuffle_seed: u64) -> Option<DelsartePolynomial> {
    let n: usize = atoms.iter().map(AtomSpec::len).sum();
    if n > 6 {
        return None;
    }
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut base = 0usize;
    for atom in atoms {
        let k = atom.len();
        match atom {
            AtomSpec::Fermat(a) => {
                let mut row = vec![0u64; n];
                row[base] = *a;
                rows.push(row);
            }
            AtomSpec::Chain(exps) => {
                for (i, &a) in exps.iter().enumerate() {
                    let mut row = vec![0u64; n];
                    row[base + i] = a;
                    if i + 1 < k {
                        row[base + i + 1] = 1;
                    }
                    rows.push(row);
                }
            }
            AtomSpec::Loop(exps) => {
                for (i, &a) in exps.iter().enumerate() {
                    let mut row = vec![0u64; n];
                    row[base + i] = a;
                    row[base + (i + 1) % k] += 1;
                    rows.push(row);
                }
            }
        }
        base += k;
    }
    // seeded Fisher-Yates over the variables
    let mut perm: Vec<usize> = (0..n).collect();
    let mut state = shuffle_seed | 1;
    for i in (1..n).rev() {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        let j = (state >> 33) as usize % (i + 1);
        perm.swap(i, j);
    }
    let rows: Vec<Vec<u64>> = rows
        .iter()
        .map(|row| perm.iter().map(|&c| row[c]).collect())
        .collect();
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    DelsartePolynomial::new(names, rows).ok()
}

fn arb_potential() -> impl Strategy<Value = DelsartePolynomial> {
    (proptest::collection::vec(arb_atom(), 1..=3), any::<u64>())
        .prop_filter_map("atoms exceed six variables", |(atoms, seed)| {
            assemble(&atoms, seed)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn transpose_is_involutive(p in arb_potential()) {
        prop_assert_eq!(p.transpose().transpose(), p);
    }

    #[test]
    fn charges_solve_the_unit_system(p in arb_potential()) {
        let q = charges(&p).unwrap();
        for row in p.exponents() {
            let total: Rat = row
                .iter()
                .zip(&q)
                .map(|(&e, qi)| Rat::from_integer(e as i64) * qi)
                .sum();
            prop_assert_eq!(total, Rat::from_integer(1));
        }
    }

    #[test]
    fn weights_are_minimal_and_coprime(p in arb_potential()) {
        let ws = WeightSystem::of(&p).unwrap();
        let gcd = ws.weights().iter().fold(0i64, |acc, &w| num_integer::gcd(acc, w));
        prop_assert_eq!(gcd, 1);
        // the transposed side is symmetric: its weights exist and are coprime
        let dual = WeightSystem::of(&p.transpose()).unwrap();
        let gcd = dual.weights().iter().fold(0i64, |acc, &w| num_integer::gcd(acc, w));
        prop_assert_eq!(gcd, 1);
    }

    #[test]
    fn block_potentials_decompose(p in arb_potential()) {
        prop_assert!(atomic_decomposition(&p).is_determined());
    }

    #[test]
    fn parse_of_display_is_equivalent(p in arb_potential()) {
        let reparsed = parse::parse(&p.to_string()).unwrap().polynomial;
        prop_assert!(p.equivalent_up_to_permutation(&reparsed).unwrap().is_some());
    }

    #[test]
    fn equivalence_is_reflexive_and_transpose_compatible(p in arb_potential()) {
        prop_assert!(p.equivalent_up_to_permutation(&p).unwrap().is_some());
        let t = p.transpose();
        let fwd = p.equivalent_up_to_permutation(&t).unwrap();
        let back = t.equivalent_up_to_permutation(&p).unwrap();
        prop_assert_eq!(fwd.is_some(), back.is_some());
    }

    #[test]
    fn aut_order_equals_absolute_determinant(p in arb_potential()) {
        let det = p.determinant().unwrap().unsigned_abs();
        prop_assume!(det <= 4096);
        let aut = SymmetryGroup::aut(&p).unwrap();
        prop_assert_eq!(aut.order() as u128, det);
    }

    #[test]
    fn quotient_products_ignore_representatives(
        p in prop_oneof![
            Just(parse::parse("x0^3+x1^3+x2^3").unwrap().polynomial),
            Just(parse::parse("x0^2+x1^4+x2^4").unwrap().polynomial),
        ],
        picks in proptest::collection::vec((0usize..64, 0i64..64, 0i64..64), 1..=8),
    ) {
        let quotient = SymmetryGroup::sl_tilde(&p).unwrap();
        let j = j_element(&p).unwrap();
        let elements = quotient.elements();
        for (pick, ka, kb) in picks {
            let a = &elements[pick % elements.len()];
            let b = &elements[(pick / elements.len()) % elements.len()];
            let canonical = quotient.compose(a, b).unwrap();
            // recompute the product from arbitrary coset representatives
            let shifted = a
                .add(&j.scale(ka)).unwrap()
                .add(&b.add(&j.scale(kb)).unwrap()).unwrap();
            prop_assert_eq!(quotient.class_of(&shifted).unwrap(), canonical);
        }
    }

    #[test]
    fn pairing_bilinear_in_the_second_slot(
        seed in any::<u64>(),
    ) {
        let p = parse::parse("x0^3+x1^3+x2^3").unwrap().polynomial;
        let quotient = SymmetryGroup::sl_tilde(&p).unwrap();
        let dual = SymmetryGroup::sl_tilde(&p.transpose()).unwrap();
        let u = &dual.elements()[(seed % dual.order()) as usize];
        let v = &quotient.elements()[((seed >> 8) % quotient.order()) as usize];
        let w = &quotient.elements()[((seed >> 16) % quotient.order()) as usize];
        let lhs = duality::pairing(&p, u, &v.add(w).unwrap()).unwrap().value();
        let rhs = bhcr_core::rational::reduce_mod_one(
            duality::pairing(&p, u, v).unwrap().value()
                + duality::pairing(&p, u, w).unwrap().value(),
        );
        prop_assert_eq!(lhs, rhs);
    }
}
