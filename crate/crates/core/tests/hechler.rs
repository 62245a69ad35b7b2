use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tforce::hechler::{d_leq, d_member, mod2_phi_star, realize_mod2, DCondition, EventualFn};
use tforce::gen;

const CAP: u64 = 8;
const DEPTH: usize = 6;

fn floor_value<R: Rng>(rng: &mut R) -> u64 {
    rng.gen_range(4..=CAP)
}

fn condition<R: Rng>(rng: &mut R) -> DCondition {
    let table = (0..rng.gen_range(0..=3)).map(|_| floor_value(rng)).collect();
    let stem = (0..rng.gen_range(0..=3)).map(|_| rng.gen_range(0..=CAP)).collect();
    DCondition::new(stem, EventualFn::new(table, floor_value(rng)))
}

/// A condition below `p` most of the time: longer stem on the floor, raised floor.
fn perturbed<R: Rng>(rng: &mut R, p: &DCondition) -> DCondition {
    let mut stem = p.stem.clone();
    for _ in 0..rng.gen_range(0..=2) {
        let lo = p.floor.at(stem.len());
        stem.push(rng.gen_range(lo.saturating_sub(1)..=CAP));
    }
    let raise = |v: u64, rng: &mut R| (v + rng.gen_range(0..=1)).min(CAP);
    let mut table: Vec<u64> = p.floor.table.iter().map(|&v| raise(v, rng)).collect();
    if rng.gen_bool(0.2) && !table.is_empty() {
        let i = rng.gen_range(0..table.len());
        table[i] = table[i].saturating_sub(1);
    }
    let tail = raise(p.floor.tail, rng);
    DCondition::new(stem, EventualFn::new(table, tail))
}

/// Nodes of length `d` with entries at most `CAP`, by explicit enumeration.
fn nodes(p: &DCondition, d: usize) -> Vec<Vec<u64>> {
    let mut layer = vec![Vec::new()];
    for n in 0..d {
        let values: Vec<u64> = if n < p.stem.len() {
            vec![p.stem[n]]
        } else {
            (p.floor.at(n)..=CAP).collect()
        };
        layer = layer
            .into_iter()
            .flat_map(|t| {
                values.iter().map(move |&v| {
                    let mut u = t.clone();
                    u.push(v);
                    u
                })
            })
            .collect();
    }
    layer
}

#[test]
fn membership_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..100 {
        let p = condition(&mut rng);
        for d in 0..=4 {
            let listed = nodes(&p, d);
            for _ in 0..20 {
                let t: Vec<u64> = (0..d).map(|_| rng.gen_range(0..=CAP)).collect();
                assert_eq!(d_member(&p, &t), listed.contains(&t), "{p:?} {t:?}");
            }
            assert!(listed.iter().all(|t| d_member(&p, t)));
        }
    }
}

#[test]
fn order_matches_inclusion() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let (mut below, mut total) = (0, 0);
    for _ in 0..150 {
        let p = condition(&mut rng);
        let q = if rng.gen_bool(0.8) { perturbed(&mut rng, &p) } else { condition(&mut rng) };
        let inclusion = (0..=DEPTH).all(|d| nodes(&q, d).iter().all(|t| d_member(&p, t)));
        assert_eq!(d_leq(&q, &p), inclusion, "{q:?} ≤ {p:?}");
        below += inclusion as usize;
        total += 1;
    }
    assert!(below > 20 && below < total, "{below}/{total} pairs comparable");
}

#[test]
fn order_is_reflexive_and_transitive() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..300 {
        let p = condition(&mut rng);
        let q = perturbed(&mut rng, &p);
        let r = perturbed(&mut rng, &q);
        assert!(d_leq(&p, &p));
        if d_leq(&r, &q) && d_leq(&q, &p) {
            assert!(d_leq(&r, &p));
        }
    }
}

#[test]
fn realizer_post_condition() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..200 {
        let q = condition(&mut rng);
        let s = gen::random_word2(&mut rng, 6);
        let sigma = realize_mod2(&q, &s);
        assert!(d_member(&q, &sigma));
        assert_eq!(sigma[..q.stem.len()], q.stem[..]);
        assert_eq!(mod2_phi_star(&sigma), mod2_phi_star(&q.stem).concat(&s));
    }
}

#[test]
fn json_encoding() {
    let p: DCondition = serde_json::from_str(r#"{"stem":[2,5],"floor":{"table":[3,3,4],"tail":4}}"#).unwrap();
    assert_eq!(p.stem, vec![2, 5]);
    assert_eq!(p.floor.at(2), 4);
    assert_eq!(p.floor.at(100), 4);
    assert_eq!(
        serde_json::to_string(&p).unwrap(),
        r#"{"stem":[2,5],"floor":{"table":[3,3,4],"tail":4}}"#
    );
}
