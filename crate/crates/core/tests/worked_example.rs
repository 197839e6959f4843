//! The n = 6 point of the orbit ((1,1,1),(3)).

use exotic::bipartitions::{collapse, filtration_dims, phi_c, Bipartition, Partition};
use exotic::exoticlin::{
    adapted_filtration, centralizer_basis, exv_module, in_exotic_cone, jordan_type, orbit_of, perp, solve_form,
    verify_adapted, worked_example, Domain, IsotropicFiltration, DEFAULT_CLOSURE_DEPTH,
};
use exotic::linalg::{Matrix, Subspace};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn bp(mu: &[usize], nu: &[usize]) -> Bipartition {
    Bipartition::from_parts(mu, nu).unwrap()
}

fn image_of_power(x: &Matrix, k: u32) -> Subspace {
    Subspace::column_space(&x.pow(k))
}

#[test]
fn combinatorics() {
    let b = bp(&[1, 1, 1], &[3]);
    assert_eq!(phi_c(&b).unwrap(), p(&[4, 4, 2, 1, 1]));
    assert_eq!(collapse(&b).unwrap(), bp(&[2, 1, 1], &[2]));
    let f = filtration_dims(&b).unwrap();
    assert_eq!([f.dim(3), f.dim(1), f.dim(0), f.dim(-2)], [2, 5, 7, 10]);
}

#[test]
fn form_exists_and_pair_is_in_the_cone() {
    let pair = worked_example();
    let space = solve_form(&pair.x).expect("some invertible form");
    assert!(space.is_exotic_endomorphism(&pair.x));
    assert!(in_exotic_cone(&pair));
    assert!(in_exotic_cone(&pair.with_form().unwrap()));
}

#[test]
fn jordan_data() {
    let pair = worked_example();
    let c = centralizer_basis(&pair.x);
    let lambda = [4usize, 4, 1, 1, 1, 1];
    let expected: usize = lambda.iter().flat_map(|a| lambda.iter().map(move |b| (*a).min(*b))).sum();
    assert_eq!(c.len(), expected);
    assert_eq!(c.len(), 48);

    assert_eq!(jordan_type(&pair.x, Domain::Full).unwrap(), p(&[4, 4, 1, 1, 1, 1]));
    let w = exv_module(&pair);
    assert_eq!(w.dim(), 6);
    assert!(w.image(&pair.x).dim() == 0);
    assert_eq!(jordan_type(&pair.x, Domain::Sub(&w)).unwrap(), p(&[1, 1, 1, 1, 1, 1]));
    assert_eq!(jordan_type(&pair.x, Domain::Quotient(&w)).unwrap(), p(&[3, 3]));
    assert_eq!(orbit_of(&pair).unwrap(), bp(&[1, 1, 1], &[3]));
}

#[test]
fn adapted_filtration_matches_the_hand_computation() {
    let pair = worked_example().with_form().unwrap();
    let space = pair.space.clone().unwrap();
    let b = orbit_of(&pair).unwrap();
    let f = adapted_filtration(&pair, DEFAULT_CLOSURE_DEPTH).unwrap();

    let im3 = image_of_power(&pair.x, 3);
    let v1 = image_of_power(&pair.x, 2).sum(&Subspace::span(12, std::slice::from_ref(&pair.v)));
    assert_eq!(v1.dim(), 5);
    assert_eq!(f.get(3), im3);
    assert_eq!(f.get(2), im3);
    assert_eq!(f.get(1), v1);
    assert_eq!(f.get(0), perp(&v1, &space));
    assert_eq!(f.get(-2), perp(&im3, &space));
    assert_eq!(f.get(4).dim(), 0);
    assert_eq!(f.get(-3).dim(), 12);
    assert!(verify_adapted(&f, &pair, &b).unwrap());
}

#[test]
fn verify_rejects_broken_filtrations() {
    let pair = worked_example().with_form().unwrap();
    let space = pair.space.clone().unwrap();
    let b = bp(&[1, 1, 1], &[3]);
    let profile = filtration_dims(&b).unwrap();
    let im3 = image_of_power(&pair.x, 3);
    let im2 = image_of_power(&pair.x, 2);
    let good_v1 = im2.sum(&Subspace::span(12, std::slice::from_ref(&pair.v)));

    let build = |v1: Subspace| {
        let positive = [(1, v1), (2, im3.clone()), (3, im3.clone())].into_iter().collect();
        IsotropicFiltration::from_positive(&space, &profile, &positive)
    };
    assert!(verify_adapted(&build(good_v1), &pair, &b).unwrap());
    // Wrong dimension at a = 1.
    assert!(!verify_adapted(&build(im2.clone()), &pair, &b).unwrap());

    // v outside V≥1: replace ℂv by a different line in ker x.
    let mut other = vec![exotic::linalg::q(0); 12];
    other[6] = exotic::linalg::q(1);
    let moved = im2.sum(&Subspace::span(12, &[other]));
    assert_eq!(moved.dim(), 5);
    assert!(!verify_adapted(&build(moved), &pair, &b).unwrap());
}
