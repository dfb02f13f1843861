use num_bigint::BigInt;
use num_traits::One;
use tutte_dfs_core::graph::{
    brute_connected_enumerator, brute_tutte, brute_tutte_by_neighbor_set, ContractedGraph,
};
use tutte_dfs_core::parallel::EnumConfig;
use tutte_dfs_core::poly::{binomial, q_analogue, BiPoly, IntPoly};
use tutte_dfs_core::recurrence::TutteTable;

fn cfg() -> EnumConfig {
    EnumConfig::with_workers(1)
}

fn y_poly(p: &IntPoly) -> BiPoly {
    BiPoly::from_y_poly(p)
}

#[test]
fn recurrence_equals_subgraph_expansion() {
    let table = TutteTable::new(7).unwrap();
    for n in 1..=7 {
        for r in 1..=n {
            let g = ContractedGraph::build(n, r).unwrap();
            assert_eq!(&brute_tutte(&g, &cfg()).unwrap(), table.get(n, r).unwrap(), "n={n} r={r}");
        }
    }
}

#[test]
fn neighbor_set_cases() {
    let table = TutteTable::new(6).unwrap();
    let x_minus_one = &BiPoly::x() - &BiPoly::one();
    for n in 2..=6 {
        for r in 1..n {
            let k = n - r;
            let split = brute_tutte_by_neighbor_set(&ContractedGraph::build(n, r).unwrap(), &cfg()).unwrap();
            let qr = y_poly(&q_analogue(r).unwrap());

            let empty = split.get(&0).cloned().unwrap_or_else(BiPoly::zero);
            assert_eq!(empty, &x_minus_one * table.get(k, 1).unwrap(), "empty S, n={n} r={r}");

            let singles: BiPoly =
                split.iter().filter(|(s, _)| s.count_ones() == 1).map(|(_, t)| t.clone()).sum();
            let expected = (&qr * table.get(k, 1).unwrap()).scale(&binomial(k as u64, 1));
            assert_eq!(singles, expected, "|S|=1, n={n} r={r}");

            for (&s, t) in split.iter().filter(|(s, _)| s.count_ones() >= 2) {
                let size = s.count_ones() as usize;
                let y_pow = BiPoly::monomial(BigInt::one(), 0, (size * (size - 1) / 2) as u32);
                let expected = &(&y_pow * &qr.pow(size as u32)) * table.get(k, size).unwrap();
                assert_eq!(t, &expected, "S={s:b}, n={n} r={r}");
            }
            // every S occurs
            assert_eq!(split.len(), 1 << k);
        }
    }
}

#[test]
fn connected_enumerator_is_shifted_j() {
    let table = TutteTable::new(7).unwrap();
    for n in 1..=7 {
        for r in 1..=n {
            let c = brute_connected_enumerator(&ContractedGraph::build(n, r).unwrap(), &cfg()).unwrap();
            let expected = table.j_poly(n, r).unwrap().substitute_shift(&BigInt::one()).shift_up(n - r);
            assert_eq!(c, expected, "n={n} r={r}");
            assert_eq!(c, table.c_poly(n, r).unwrap());
        }
    }
}

#[test]
fn worked_j_value() {
    let table = TutteTable::new(4).unwrap();
    assert_eq!(table.j_poly(4, 2).unwrap(), IntPoly::from_i64(&[2, 3, 2, 1]));
}
