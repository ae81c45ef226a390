use hermpos::curvature::{
    bracket_curvature_oracle, certify_psd, complex_positivity, grassmann_rank, hermitian_form, nullity,
    oracle_constant, oracle_gram, oracle_real_gram, psi_prime_sizes, TangentVector,
};
use hermpos::hss_catalog::{resolve, table_catalog, verification_catalog, SpaceId};
use hermpos::sampling::Sampler;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[test]
fn positivity_matches_expected_table() {
    for id in table_catalog() {
        let space = resolve(id).unwrap();
        assert_eq!(complex_positivity(&space).unwrap(), id.expected_positivity(), "{id}");
    }
}

#[test]
fn component_form_agrees_with_bracket_oracle() {
    for id in verification_catalog() {
        let space = resolve(id).unwrap();
        let c = oracle_constant(&space).unwrap();
        assert!(c.is_positive(), "{id}");
        let mut sampler = Sampler::for_label(7, &id.to_string());
        let samples = if space.v() > 16 { 3 } else { 10 };
        for _ in 0..samples {
            let x = sampler.tangent_vector(&space);
            let form = hermitian_form(&space, &x).unwrap();
            assert_eq!(oracle_gram(&space, &x).unwrap(), form.matrix.scale(&c), "{id}");
            let w = sampler.tangent_vector(&space);
            let direct = bracket_curvature_oracle(&space, &x, &w).unwrap();
            assert_eq!(direct, form.matrix.quadratic_form(w.coeffs()) * c.clone(), "{id}");
        }
    }
}

#[test]
fn forms_are_positive_semidefinite() {
    for id in verification_catalog() {
        let space = resolve(id).unwrap();
        let mut sampler = Sampler::for_label(11, &id.to_string());
        for _ in 0..20 {
            let x = sampler.tangent_vector(&space);
            let form = hermitian_form(&space, &x).unwrap();
            let cert = certify_psd(&form).unwrap();
            let ell = space.v() - cert.nullity;
            assert!(ell >= id.expected_positivity(), "{id}: line with ℓ = {ell}");
        }
    }
}

#[test]
fn real_form_kernel_is_complex() {
    for id in [
        SpaceId::Grassmannian { p: 2, q: 3 },
        SpaceId::Quadric { p: 6 },
        SpaceId::Quadric { p: 7 },
        SpaceId::Lagrangian { r: 3 },
        SpaceId::Spinor { r: 5 },
    ] {
        let space = resolve(id).unwrap();
        let mut sampler = Sampler::for_label(3, &id.to_string());
        for _ in 0..3 {
            let x = sampler.tangent_vector(&space);
            let g = oracle_real_gram(&space, &x).unwrap();
            assert!(g.definiteness().is_psd(), "{id}");
            assert_eq!(g.nullity(), 2 * nullity(&space, &x).unwrap(), "{id}");
        }
    }
}

#[test]
fn grassmann_nullity_law() {
    for (p, q) in [(2, 2), (2, 3), (3, 3), (3, 4), (4, 4)] {
        let space = resolve(SpaceId::Grassmannian { p, q }).unwrap();
        let mut sampler = Sampler::for_label(5, &format!("{p},{q}"));
        for r in 1..=p.min(q) {
            for _ in 0..10 {
                let x = sampler.grassmann_rank_vector(&space, r).unwrap();
                assert_eq!(grassmann_rank(&space, &x).unwrap(), r);
                assert_eq!(nullity(&space, &x).unwrap(), (p - r) * (q - r), "gr:{p},{q} r={r}");
            }
        }
    }
}

#[test]
fn basis_vector_kernel_is_complement_of_psi_prime() {
    for id in verification_catalog() {
        let space = resolve(id).unwrap();
        let sizes = psi_prime_sizes(&space);
        for (k, &size) in sizes.iter().enumerate() {
            let x = TangentVector::<BigRational>::basis(&space, space.psi_root(k)).unwrap();
            assert_eq!(space.v() - nullity(&space, &x).unwrap(), size, "{id}");
            let m = hermitian_form(&space, &x).unwrap().matrix;
            for i in 0..space.v() {
                for j in 0..space.v() {
                    assert!(i == j || m[(i, j)].is_zero());
                }
            }
        }
    }
}
