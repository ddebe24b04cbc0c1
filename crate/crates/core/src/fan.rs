//! The fan of `X_k` as a whole: an independent construction by iterated
//! star subdivision, randomized soundness checks, and the JSON dump.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::chains::{
    compare_chains, cone_coordinates, cone_membership, cone_of_chain, count_ascents,
    enumerate_chains, intersect_chains, tau_chain, Chain, Subset,
};
use crate::linalg::{coordinates_in_span, integer_rank};
use crate::rng::trial_rng;
use crate::{check_k, Rational, Result};

/// A set of maximal cones, each given by its set of primitive rays.
pub type GeneratorSets = BTreeSet<BTreeSet<Vec<i64>>>;

/// Maximal chains of the fan for `(n, k)`.
pub fn maximal_chains(n: usize, k: usize) -> Result<Vec<Chain>> {
    enumerate_chains(n, k, Some(n - 1))
}

/// Maximal cones of the fan, read off from chain enumeration.
pub fn fan_from_chains(n: usize, k: usize) -> Result<GeneratorSets> {
    Ok(maximal_chains(n, k)?
        .iter()
        .map(|c| cone_of_chain(c).generators.into_iter().collect())
        .collect())
}

/// Maximal cones obtained from the fan of `P^{n-1}` by star subdivision at
/// `e_β` for every `|β| = n-1`, then every `|β| = n-2`, and so on down to
/// `|β| = n-k`.
pub fn build_fan_by_subdivision(n: usize, k: usize) -> Result<GeneratorSets> {
    check_k(n, k, 0, 2)?;
    let full = Subset::full(n);
    let mut cones: Vec<Vec<Vec<i64>>> = (1..=n)
        .map(|missing| {
            full.iter()
                .filter(|&i| i != missing)
                .map(|i| Subset::singleton(i).ray(n))
                .collect()
        })
        .collect();
    for size in (n - k..n).rev() {
        for bits in 0..full.bits() {
            let beta = Subset::from_bits(bits);
            if beta.len() == size {
                cones = star_subdivide(cones, &beta.ray(n));
            }
        }
    }
    Ok(cones.into_iter().map(|c| c.into_iter().collect()).collect())
}

/// Star subdivision of a complete simplicial fan at the ray `v`: cones not
/// containing `v` survive; a cone containing `v` is replaced by the cones
/// spanned by `v` and each facet not containing `v`.
pub fn star_subdivide(cones: Vec<Vec<Vec<i64>>>, v: &[i64]) -> Vec<Vec<Vec<i64>>> {
    let target: Vec<Rational64> = v.iter().map(|&x| x.into()).collect();
    let mut out = Vec::with_capacity(cones.len());
    for cone in cones {
        let gens: Vec<Vec<Rational64>> = cone
            .iter()
            .map(|g| g.iter().map(|&x| x.into()).collect())
            .collect();
        let coords = coordinates_in_span(&gens, &target);
        match coords {
            Some(c) if c.iter().all(|x| *x >= Rational64::from(0)) => {
                for (i, ci) in c.iter().enumerate() {
                    if *ci > Rational64::from(0) {
                        let mut replaced = cone.clone();
                        replaced[i] = v.to_vec();
                        out.push(replaced);
                    }
                }
            }
            _ => out.push(cone),
        }
    }
    out
}

/// Outcome of [`verify_fan`]. Every flag is true when no violation was seen.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FanReport {
    pub n: usize,
    pub k: usize,
    pub maximal_cone_count: usize,
    pub simplicial_ok: bool,
    pub completeness_ok: bool,
    pub intersection_ok: bool,
    pub star_ok: bool,
    pub condition_star_ok: bool,
    pub tau_ok: bool,
    pub seed: u64,
    pub trials: usize,
    pub violations: Vec<String>,
}

impl FanReport {
    pub fn all_ok(&self) -> bool {
        self.simplicial_ok
            && self.completeness_ok
            && self.intersection_ok
            && self.star_ok
            && self.condition_star_ok
            && self.tau_ok
    }
}

const MAX_LOGGED: usize = 20;

fn log(violations: &mut Vec<String>, msg: impl FnOnce() -> String) {
    if violations.len() < MAX_LOGGED {
        violations.push(msg());
    }
}

fn odd_in<R: Rng>(rng: &mut R, lo: i64, hi: i64) -> i64 {
    loop {
        let x = rng.gen_range(lo..=hi);
        if x % 2 != 0 {
            return x;
        }
    }
}

/// A point with odd numerators in `[-997, 997]` and odd denominators in
/// `[1, 997]`.
pub fn generic_point<R: Rng>(rng: &mut R, dim: usize) -> Vec<Rational> {
    (0..dim)
        .map(|_| Rational::new(odd_in(rng, -997, 997).into(), odd_in(rng, 1, 997).into()))
        .collect()
}

/// Nonnegative combination of generators with random weights; each weight
/// is zero with probability `zero_prob`.
fn random_combination<R: Rng>(
    rng: &mut R,
    gens: &[Vec<Rational>],
    dim: usize,
    zero_prob: f64,
) -> Vec<Rational> {
    let mut p = vec![Rational::from_integer(0.into()); dim];
    for g in gens {
        if rng.gen_bool(zero_prob) {
            continue;
        }
        let w = Rational::new(
            rng.gen_range(1..=997i64).into(),
            rng.gen_range(1..=997i64).into(),
        );
        for (x, y) in p.iter_mut().zip(g) {
            *x += &w * y;
        }
    }
    p
}

const MAX_RESAMPLES: usize = 100;

/// Checks the fan for `(n, k)`: simpliciality of every cone, agreement with
/// the subdivision oracle, condition (*) and the `τ_C` description over all
/// pairs of maximal cones, and `trials` seeded samples each for completeness
/// and intersection consistency.
pub fn verify_fan(n: usize, k: usize, trials: usize, seed: u64) -> Result<FanReport> {
    check_k(n, k, 0, 2)?;
    let mut violations = Vec::new();
    let all = enumerate_chains(n, k, None)?;
    let maximal: Vec<Chain> = all.iter().filter(|c| c.dim() == n - 1).cloned().collect();

    let simplicial_ok = all.iter().all(|c| {
        let cone = cone_of_chain(c);
        let ok = integer_rank(&cone.generators) == cone.dim() && cone.dim() == c.dim();
        if !ok {
            log(&mut violations, || format!("cone of {c} is not simplicial"));
        }
        ok
    });

    let star_ok = fan_from_chains(n, k)? == build_fan_by_subdivision(n, k)?;
    if !star_ok {
        log(&mut violations, || {
            "subdivision fan differs from chain fan".into()
        });
    }

    let (condition_star_ok, tau_ok) = check_shelling(&maximal, &mut violations)?;

    let dim = n - 1;
    let mut completeness_ok = true;
    for trial in 0..trials {
        let mut rng = trial_rng(seed, trial as u64);
        let mut hits = None;
        for _ in 0..MAX_RESAMPLES {
            let p = generic_point(&mut rng, dim);
            let mut count = 0;
            let mut boundary = false;
            for c in &maximal {
                if let Some(coords) = cone_coordinates(&p, c)? {
                    if coords.iter().all(|x| !x.is_negative()) {
                        count += 1;
                        boundary |= coords.iter().any(|x| x.is_zero());
                    }
                }
            }
            if !boundary {
                hits = Some(count);
                break;
            }
        }
        if hits != Some(1) {
            completeness_ok = false;
            log(&mut violations, || {
                format!("trial {trial}: generic point in {hits:?} maximal cones")
            });
        }
    }

    let mut intersection_ok = true;
    if maximal.len() > 1 {
        for trial in 0..trials {
            let mut rng = trial_rng(seed ^ 0x9e37_79b9_7f4a_7c15, trial as u64);
            let a = &maximal[rng.gen_range(0..maximal.len())];
            let b = &maximal[rng.gen_range(0..maximal.len())];
            let meet = intersect_chains(a, b)?;
            let ga: BTreeSet<Vec<i64>> = cone_of_chain(a).generators.into_iter().collect();
            let gb: BTreeSet<Vec<i64>> = cone_of_chain(b).generators.into_iter().collect();
            let gm: BTreeSet<Vec<i64>> = cone_of_chain(&meet).generators.into_iter().collect();
            let common: BTreeSet<Vec<i64>> = ga.intersection(&gb).cloned().collect();
            let mut ok = gm == common;

            let meet_gens = cone_of_chain(&meet).field_generators::<Rational>();
            let p = random_combination(&mut rng, &meet_gens, dim, 0.0);
            ok &= cone_membership(&p, a)? && cone_membership(&p, b)?;

            let a_gens = cone_of_chain(a).field_generators::<Rational>();
            let q = random_combination(&mut rng, &a_gens, dim, 0.5);
            if cone_membership(&q, b)? {
                ok &= cone_membership(&q, &meet)?;
            }
            if !ok {
                intersection_ok = false;
                log(&mut violations, || {
                    format!("trial {trial}: intersection of {a} and {b} inconsistent")
                });
            }
        }
    }

    Ok(FanReport {
        n,
        k,
        maximal_cone_count: maximal.len(),
        simplicial_ok,
        completeness_ok,
        intersection_ok,
        star_ok,
        condition_star_ok,
        tau_ok,
        seed,
        trials,
        violations,
    })
}

/// Condition (*) and the `τ` rule over every maximal cone of the fan,
/// returned as `(condition_ok, tau_ok, violations)`.
pub fn shelling_check(n: usize, k: usize) -> Result<(bool, bool, Vec<String>)> {
    let mut violations = Vec::new();
    let (condition_ok, tau_ok) = check_shelling(&maximal_chains(n, k)?, &mut violations)?;
    Ok((condition_ok, tau_ok, violations))
}

/// Exhaustive pair checks on maximal chains: condition (*) and the claim
/// that `τ_C` is the intersection of `σ_C` with the later facet neighbours,
/// of dimension equal to the ascent count.
fn check_shelling(maximal: &[Chain], violations: &mut Vec<String>) -> Result<(bool, bool)> {
    let mut condition_ok = true;
    let mut tau_ok = true;
    for c in maximal {
        let tau = tau_chain(c)?;
        let n = c.n();

        let mut brute = c.clone();
        for c2 in maximal {
            if compare_chains(c2, c)? == Ordering::Greater {
                let meet = intersect_chains(c, c2)?;
                if meet.dim() == n - 2 {
                    brute = intersect_chains(&brute, &meet)?;
                }
            }
        }
        if brute != tau || tau.dim() != count_ascents(c)? {
            tau_ok = false;
            log(violations, || {
                format!("τ of {c}: rule gives {tau}, brute force gives {brute}")
            });
        }

        let tau_gens = cone_of_chain(&tau).field_generators::<Rational>();
        for c2 in maximal {
            let mut inside = true;
            for g in &tau_gens {
                if !cone_membership(g, c2)? {
                    inside = false;
                    break;
                }
            }
            if inside && compare_chains(c2, c)? == Ordering::Less {
                condition_ok = false;
                log(violations, || {
                    format!("condition (*) fails: τ of {c} lies in earlier {c2}")
                });
            }
        }
    }
    Ok((condition_ok, tau_ok))
}

#[derive(Serialize)]
struct ConeEntry {
    chain: String,
    generators: Vec<Vec<i64>>,
}

#[derive(Serialize)]
struct FanDump {
    n: usize,
    k: usize,
    maximal_cones: Vec<ConeEntry>,
}

/// `{"n":…,"k":…,"maximal_cones":[{"chain":"[[…]]","generators":[…]}]}`.
pub fn fan_json(n: usize, k: usize) -> Result<serde_json::Value> {
    let dump = FanDump {
        n,
        k,
        maximal_cones: maximal_chains(n, k)?
            .iter()
            .map(|c| ConeEntry {
                chain: c.to_ascii(),
                generators: cone_of_chain(c).generators,
            })
            .collect(),
    };
    Ok(serde_json::to_value(dump).expect("fan dump serializes"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_plane_and_its_blowup() {
        assert_eq!(build_fan_by_subdivision(3, 0).unwrap().len(), 3);
        let blown = build_fan_by_subdivision(3, 1).unwrap();
        assert_eq!(blown.len(), 6);
        assert_eq!(blown, fan_from_chains(3, 1).unwrap());
    }

    #[test]
    fn subdivision_matches_chains_n4() {
        let fan = build_fan_by_subdivision(4, 2).unwrap();
        assert_eq!(fan.len(), 24);
        assert_eq!(fan, fan_from_chains(4, 2).unwrap());
    }

    #[test]
    fn verify_small_fans() {
        let r = verify_fan(3, 1, 100, 1).unwrap();
        assert!(r.all_ok(), "{r:?}");
        assert_eq!(r.maximal_cone_count, 6);
        let r = verify_fan(4, 2, 500, 1).unwrap();
        assert!(r.all_ok(), "{r:?}");
        assert_eq!(r.maximal_cone_count, 24);
    }

    #[test]
    fn json_dump_shape() {
        let v = fan_json(3, 1).unwrap();
        assert_eq!(v["n"], 3);
        let cones = v["maximal_cones"].as_array().unwrap();
        assert_eq!(cones.len(), 6);
        assert!(cones[0]["chain"].as_str().unwrap().starts_with("[["));
        assert_eq!(cones[0]["generators"].as_array().unwrap().len(), 2);
    }
}
