//! Invariants of root systems and Chevalley structure constants.

use hermpos::chevalley::{
    bracket, killing_form, killing_inner_ratio, structure_constants, AlgebraElement, StructureTable,
};
use hermpos::root_system::{build_root_system, coordinates_are_uniform, Family};
use num_rational::Rational64;
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn small_systems() -> Vec<(Family, usize)> {
    vec![
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::B, 4),
        (Family::C, 2),
        (Family::C, 3),
        (Family::C, 4),
        (Family::D, 3),
        (Family::D, 4),
    ]
}

fn all_systems() -> Vec<(Family, usize)> {
    let mut v = small_systems();
    v.extend([(Family::A, 7), (Family::B, 6), (Family::C, 6), (Family::D, 7), (Family::E6, 6), (Family::E7, 7)]);
    v
}

#[test]
fn root_counts_and_partition() {
    for (f, n) in all_systems() {
        let rs = build_root_system(f, n).unwrap();
        assert_eq!(rs.len(), f.root_count(n), "{f}{n}");
        assert_eq!(rs.n_positive() * 2, rs.len());
        for i in 0..rs.n_positive() {
            let neg = rs.negate(i);
            assert_eq!(rs.root(neg), &-rs.root(i));
            assert!(rs.coefficients(i).iter().all(|&c| c >= 0));
            assert!(rs.coefficients(neg).iter().all(|&c| c <= 0));
        }
        for r in rs.roots() {
            if matches!(f, Family::E6 | Family::E7) {
                assert!(coordinates_are_uniform(r), "{r}");
            }
        }
    }
}

/// Brute force: all vectors of the E8 lattice (integer or half-odd
/// coordinates, even coordinate sum) of squared length 2 that are
/// orthogonal to ε7+ε8.
#[test]
fn e7_count_by_lattice_enumeration() {
    let mut count = 0;
    // doubled coordinates in -2..=2
    let vals = [-2i64, -1, 0, 1, 2];
    let mut idx = [0usize; 8];
    loop {
        let c: Vec<i64> = idx.iter().map(|&k| vals[k]).collect();
        let all_even = c.iter().all(|x| x % 2 == 0);
        let all_odd = c.iter().all(|x| x % 2 != 0);
        let norm: i64 = c.iter().map(|x| x * x).sum();
        let sum: i64 = c.iter().sum();
        if (all_even || all_odd) && norm == 8 && sum % 4 == 0 && c[6] + c[7] == 0 {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == 8 {
                assert_eq!(count, 126);
                let rs = build_root_system(Family::E7, 7).unwrap();
                assert_eq!(rs.len(), count);
                return;
            }
            idx[k] += 1;
            if idx[k] < vals.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn weyl_closure_and_cartan_integers() {
    for (f, n) in all_systems() {
        let rs = build_root_system(f, n).unwrap();
        for a in 0..rs.len() {
            for b in 0..rs.len() {
                assert!(rs.index_of(&rs.reflect(a, b)).is_some());
                if rs.sum_index(a, b).is_some() {
                    assert!(rs.cartan_integer(a, b).abs() <= 3);
                }
                if b != a && b != rs.negate(a) {
                    let (p, q) = rs.string_idx(a, b);
                    assert_eq!(p - q, rs.cartan_integer(a, b));
                    let (p2, q2) = rs.root_string(rs.root(a), rs.root(b)).unwrap();
                    assert_eq!((p, q), (p2, q2));
                }
            }
        }
    }
}

fn check_constants(t: &StructureTable) {
    let rs = t.root_system();
    for a in 0..rs.len() {
        for b in 0..rs.len() {
            if rs.sum_index(a, b).is_some() {
                let n = t.n_idx(a, b);
                assert_eq!(n, -t.n_idx(b, a));
                assert_eq!(n, -t.n_idx(rs.negate(a), rs.negate(b)));
                assert_eq!(n.abs(), rs.string_idx(a, b).0 + 1);
            } else {
                assert_eq!(t.n_idx(a, b), 0);
            }
        }
    }
}

fn jacobi(
    t: &StructureTable,
    x: &AlgebraElement<Rational64>,
    y: &AlgebraElement<Rational64>,
    z: &AlgebraElement<Rational64>,
) -> bool {
    let a = bracket(t, &bracket(t, x, y), z);
    let b = bracket(t, &bracket(t, y, z), x);
    let c = bracket(t, &bracket(t, z, x), y);
    a.add(&b).add(&c).is_zero()
}

#[test]
fn structure_constants_exhaustive_small_rank() {
    for (f, n) in small_systems() {
        let t = structure_constants(&build_root_system(f, n).unwrap()).unwrap();
        check_constants(&t);
        let basis = t.basis::<Rational64>();
        for x in &basis {
            for y in &basis {
                for z in &basis {
                    assert!(jacobi(&t, x, y, z), "Jacobi fails in {f}{n}");
                }
            }
        }
    }
}

fn random_element(t: &StructureTable, rng: &mut ChaCha8Rng) -> AlgebraElement<Rational64> {
    let cartan = (0..t.rank()).map(|_| Rational64::new(rng.gen_range(-3..=3), rng.gen_range(1..=3))).collect();
    let mut roots = Vec::new();
    for a in 0..t.root_system().len() {
        if rng.gen_bool(0.3) {
            roots.push((a, Rational64::new(rng.gen_range(-3..=3), rng.gen_range(1..=3))));
        }
    }
    AlgebraElement::from_parts(cartan, roots)
}

#[test]
fn exceptional_constants_and_sampled_jacobi() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for f in [Family::E6, Family::E7] {
        let rs = build_root_system(f, if f == Family::E6 { 6 } else { 7 }).unwrap();
        let t = structure_constants(&rs).unwrap();
        check_constants(&t);
        let basis = t.basis::<Rational64>();
        for _ in 0..1000 {
            let i = rng.gen_range(0..basis.len());
            let j = rng.gen_range(0..basis.len());
            let k = rng.gen_range(0..basis.len());
            assert!(jacobi(&t, &basis[i], &basis[j], &basis[k]));
        }
        assert!(killing_inner_ratio(&t).is_some());
    }
}

#[test]
fn killing_invariance_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (f, n) in [(Family::B, 3), (Family::C, 3), (Family::A, 3), (Family::D, 4)] {
        let t = structure_constants(&build_root_system(f, n).unwrap()).unwrap();
        for _ in 0..10 {
            let x = random_element(&t, &mut rng);
            let y = random_element(&t, &mut rng);
            let z = random_element(&t, &mut rng);
            let lhs = killing_form(&t, &bracket(&t, &x, &y), &z);
            let rhs = killing_form(&t, &x, &bracket(&t, &y, &z));
            assert_eq!(lhs, rhs);
            assert_eq!(killing_form(&t, &x, &y), killing_form(&t, &y, &x));
            assert_eq!(t.killing_gram().eval(&t, &x, &y), killing_form(&t, &x, &y));
            assert!(jacobi(&t, &x, &y, &z));
        }
    }
}

#[test]
fn killing_ratio_constant_and_positive() {
    for (f, n) in all_systems() {
        let t = structure_constants(&build_root_system(f, n).unwrap()).unwrap();
        let c = killing_inner_ratio(&t).unwrap_or_else(|| panic!("{f}{n}"));
        assert!(c.is_positive());
    }
}
