mod common;

use common::{pos, random_pos, random_rat, rat, seeded};
use floor_commutator::exactnum::{PosRat, Rat};
use floor_commutator::geometry::{
    diag_lemma_predicates, frac, hyperbola_witness, lattice_disjoint_punctured, lattice_disjoint_union,
    punctured_by_rounding, punctured_by_strict_rounding, region_contains, torus_orbit, PlanePoint, RectLattice,
    RegionId,
};
use num_bigint::BigInt;
use num_integer::Integer;
use rand::Rng;

fn big_to_i64(n: &BigInt) -> i64 {
    i64::try_from(n).unwrap()
}

/// Direct scan of `μℤ × νℤ` against a region. Both `D` and `D'` are invariant
/// under `(1, 1)` and confined to `|x − y| < 1`, and the lattice is invariant
/// under `(L, L)` for `L = lcm(num μ, num ν)`, so abscissae in `[0, L)` with
/// `|x − y| < 1` cover everything.
fn lattice_scan_hits(mu: &PosRat, nu: &PosRat, region: RegionId) -> bool {
    let l = mu.numer().lcm(nu.numer());
    let lattice = RectLattice::new(mu.clone(), nu.clone());
    let steps = big_to_i64(&(Rat::from_int(l) / mu.get()).to_integer().unwrap());
    for i in 0..steps {
        let x = mu.get() * Rat::from(i);
        let lo = big_to_i64(&((&x - Rat::one()) / nu.get()).floor());
        let hi = big_to_i64(&((&x + Rat::one()) / nu.get()).ceil());
        for j in lo..=hi {
            if region_contains(region, &lattice.point(i, j)) {
                return true;
            }
        }
    }
    false
}

#[test]
fn punctured_formulations_agree_on_random_points() {
    let mut rng = seeded(41);
    for _ in 0..10_000 {
        let x = random_rat(&mut rng, -40, 40, 6);
        // half the samples sit on the diagonal, on integer rows or near
        // the diagonal
        let y = match rng.gen_range(0..6) {
            0 => x.clone(),
            1 => Rat::from(rng.gen_range(-8i64..8)),
            2 => &x + random_rat(&mut rng, -6, 6, 6),
            _ => random_rat(&mut rng, -40, 40, 6),
        };
        let p = PlanePoint::new(x, y);
        let by_cells = region_contains(RegionId::PuncturedDiagonal, &p);
        assert_eq!(by_cells, punctured_by_rounding(&p), "{p:?}");
        assert_eq!(by_cells, punctured_by_strict_rounding(&p), "{p:?}");
        let neg = PlanePoint::new(-p.x.clone(), -p.y.clone());
        assert_eq!(by_cells, region_contains(RegionId::PuncturedDiagonal, &neg), "{p:?}");
    }
}

#[test]
fn torus_route_matches_direct_lattice_scan() {
    let mut rng = seeded(7);
    for _ in 0..600 {
        let mu = random_pos(&mut rng, 24, 7);
        let nu = random_pos(&mut rng, 24, 7);
        let direct = lattice_scan_hits(&mu, &nu, RegionId::PuncturedDiagonal);
        assert_eq!(
            lattice_disjoint_punctured(&mu, &nu),
            !direct,
            "μ = {}, ν = {}",
            mu.get(),
            nu.get()
        );
    }
    assert!(!lattice_scan_hits(
        &pos("11/6"),
        &pos("11/4"),
        RegionId::PuncturedDiagonal
    ));
    assert!(lattice_scan_hits(&pos("1"), &pos("3/2"), RegionId::PuncturedDiagonal));
}

#[test]
fn hyperbola_route_matches_direct_lattice_scan() {
    let mut rng = seeded(8);
    for _ in 0..600 {
        let mu = random_pos(&mut rng, 24, 6);
        let nu = random_pos(&mut rng, 24, 6);
        let direct = lattice_scan_hits(&mu, &nu, RegionId::UnionDiagonal);
        assert_eq!(
            lattice_disjoint_union(&mu, &nu),
            !direct,
            "μ = {}, ν = {}",
            mu.get(),
            nu.get()
        );
        if let Some((m, n)) = hyperbola_witness(&mu, &nu) {
            let lhs = Rat::from_int(m) / mu.get() + Rat::from_int(n) / nu.get();
            assert_eq!(lhs, Rat::one());
        }
    }
}

#[test]
fn disjoint_lattices_stay_disjoint_under_diagonal_translation() {
    let mut rng = seeded(9);
    let mut checked = 0;
    while checked < 200 {
        let mu = random_pos(&mut rng, 20, 6);
        let nu = random_pos(&mut rng, 20, 6);
        if !lattice_disjoint_punctured(&mu, &nu) {
            continue;
        }
        checked += 1;
        let lattice = RectLattice::new(mu, nu);
        for _ in 0..20 {
            let point = lattice.point(rng.gen_range(-30..30), rng.gen_range(-30..30));
            for k in -3i64..=3 {
                let shifted = PlanePoint::new(&point.x + Rat::from(k), &point.y + Rat::from(k));
                assert!(!region_contains(RegionId::PuncturedDiagonal, &shifted), "{shifted:?}");
            }
        }
    }
}

/// Brute-force `s1`, `s2`, `s3` for `1 + u > v` by scanning the
/// skew lattices directly.
fn brute_diag(u: &Rat, v: &Rat, r: u64) -> (bool, bool, bool) {
    let one = Rat::one();
    let slack = &one + u - v;
    // (1, 1)-invariance: only the coefficient of (1+u, v) matters, and
    // |x − y| = |a|·slack must stay below 1.
    let reach = big_to_i64(&slack.recip().unwrap().ceil());
    let (mut hits_punctured, mut hits_union) = (false, false);
    for a in -reach..=reach {
        let p = PlanePoint::new(Rat::from(a) * (&one + u), Rat::from(a) * v);
        hits_punctured |= region_contains(RegionId::PuncturedDiagonal, &p);
        hits_union |= region_contains(RegionId::UnionDiagonal, &p);
    }
    let rr = Rat::from(r as i64);
    let gen = PlanePoint::new(&one + u / &rr, v / &rr);
    let gap = &gen.x - &gen.y;
    let reach = big_to_i64(&gap.recip().unwrap().ceil());
    let mut hits_contracted = false;
    for a in -reach..=reach {
        for b in 0..r as i64 {
            let shift = Rat::frac(b, r as i64);
            let p = PlanePoint::new(Rat::from(a) * &gen.x + &shift, Rat::from(a) * &gen.y + &shift);
            hits_contracted |= region_contains(RegionId::PuncturedDiagonal, &p);
        }
    }
    (!hits_union, !hits_punctured, !hits_contracted)
}

#[test]
fn diagonal_lemma_closed_forms_match_brute_force() {
    let mut rng = seeded(10);
    let mut seen = [0usize; 2];
    for _ in 0..1500 {
        let u = random_rat(&mut rng, -12, 30, 6);
        // v within a few units of u, so both outcomes are common
        let v = &u + random_rat(&mut rng, -20, 7, 6);
        if &Rat::one() + &u <= v {
            assert!(diag_lemma_predicates(&u, &v, 2).is_err() || &Rat::one() + &u == v);
            continue;
        }
        let r = rng.gen_range(1..6u64);
        let closed = diag_lemma_predicates(&u, &v, r).unwrap();
        assert_eq!(closed.0, closed.1, "u = {u}, v = {v}, r = {r}");
        assert_eq!(closed.1, closed.2, "u = {u}, v = {v}, r = {r}");
        assert_eq!(closed, brute_diag(&u, &v, r), "u = {u}, v = {v}, r = {r}");
        seen[closed.0 as usize] += 1;
    }
    assert!(seen[0] > 50 && seen[1] > 50, "{seen:?}");
}

#[test]
fn torus_orbit_is_a_cyclic_group_of_the_stated_order() {
    let mut rng = seeded(11);
    for _ in 0..300 {
        let sigma = random_pos(&mut rng, 30, 9);
        let tau = random_pos(&mut rng, 30, 9);
        let orbit = torus_orbit(&sigma, &tau);
        let order = sigma.denom().lcm(tau.denom());
        assert_eq!(BigInt::from(orbit.len()), order);
        let mut sorted = orbit.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), orbit.len(), "orbit points repeat");
        let closing = PlanePoint::new(
            frac(&(Rat::from_int(order.clone()) * sigma.get())),
            frac(&(Rat::from_int(order) * tau.get())),
        );
        assert_eq!(closing, PlanePoint::new(Rat::zero(), Rat::zero()));
    }
    assert_eq!(torus_orbit(&pos("1"), &pos("1/3")).len(), 3);
    assert_eq!(rat("0"), frac(&rat("5")));
}
