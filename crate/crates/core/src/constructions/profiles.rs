//! `Alt_Y(n_1⊗⋯⊗n_k)` for consecutive monomials of a degree profile: zero
//! unless the profile is a permutation of a refinement of `1, 3, …, 2d−1`,
//! and for the profile itself `𝒯_d(Y)·Wg(d,d)`.

use serde::Serialize;

use super::tcal::{letters, t_cal};
use crate::error::{Error, Result};
use crate::exact::TensorOperator;
use crate::ncpoly::{alt_eval_stream, random_assignment, seeded_rng, Family, MonomialPattern, Word};
use crate::symmetric::{algebra_to_operator, class_to_algebra, weingarten};

/// Consecutive blocks `y_1…y_{h_1}`, `y_{h_1+1}…`, alternated in all `y_i`.
pub fn profile_pattern(family: Family, profile: &[usize]) -> Result<MonomialPattern> {
    if profile.is_empty() || profile.contains(&0) {
        return Err(Error::Precondition(format!("bad profile {profile:?}")));
    }
    let mut slots = Vec::with_capacity(profile.len());
    let mut start = 1u32;
    for &h in profile {
        let end = start + h as u32 - 1;
        slots.push(Word::run(family, start, end));
        start = end + 1;
    }
    let n: usize = profile.iter().sum();
    MonomialPattern::new(slots, vec![letters(family, n)])
}

/// Whether the parts can be grouped into blocks summing to `1, 3, …, 2d−1`.
pub fn is_admissible(d: usize, profile: &[usize]) -> bool {
    let targets: Vec<usize> = (1..=d).map(|i| 2 * i - 1).collect();
    if profile.iter().sum::<usize>() != d * d {
        return false;
    }
    fn place(parts: &[usize], k: usize, room: &mut [usize]) -> bool {
        if k == parts.len() {
            return room.iter().all(|&r| r == 0);
        }
        for i in 0..room.len() {
            if room[i] >= parts[k] {
                room[i] -= parts[k];
                let ok = place(parts, k + 1, room);
                room[i] += parts[k];
                if ok {
                    return true;
                }
            }
        }
        false
    }
    let mut parts = profile.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    let mut room = targets;
    place(&parts, 0, &mut room)
}

#[derive(Clone, Debug, Serialize)]
pub struct ProfileRow {
    pub d: usize,
    pub profile: Vec<usize>,
    pub admissible: bool,
    pub zero: bool,
}

/// Evaluates each profile at one random point.
pub fn profile_check(d: usize, profiles: &[Vec<usize>], seed: u64) -> Result<Vec<ProfileRow>> {
    let mut rng = seeded_rng(seed);
    let asg = random_assignment(&mut rng, d, &letters(Family::Y, d * d));
    profiles
        .iter()
        .map(|p| {
            if p.iter().sum::<usize>() != d * d {
                return Err(Error::Dimension(format!("{p:?} does not sum to {}", d * d)));
            }
            let op = alt_eval_stream(&profile_pattern(Family::Y, p)?, &asg)?;
            Ok(ProfileRow {
                d,
                profile: p.clone(),
                admissible: is_admissible(d, p),
                zero: op.is_zero(),
            })
        })
        .collect()
}

/// Every profile that is not admissible, up to reordering.
pub fn bad_profiles(d: usize) -> Vec<Vec<usize>> {
    crate::symmetric::partitions(d * d)
        .into_iter()
        .map(|p| p.parts().to_vec())
        .filter(|p| !is_admissible(d, p))
        .collect()
}

pub fn default_bad_profiles(d: usize) -> Vec<Vec<usize>> {
    match d {
        2 => vec![vec![4], vec![2, 2]],
        3 => vec![vec![9], vec![8, 1], vec![4, 5], vec![2, 2, 5], vec![3, 3, 3], vec![7, 2]],
        _ => bad_profiles(d),
    }
}

pub fn default_good_profiles(d: usize) -> Vec<Vec<usize>> {
    match d {
        2 => vec![vec![1, 3], vec![3, 1], vec![1, 1, 2]],
        3 => vec![vec![1, 3, 5], vec![5, 3, 1], vec![1, 2, 1, 5]],
        _ => vec![(1..=d).map(|i| 2 * i - 1).collect()],
    }
}

/// `Alt_Y(n_1⊗⋯⊗n_d)` against `𝒯_d(Y)·Wg(d,d)` at one point.
#[derive(Clone, Debug, Serialize)]
pub struct WeingartenCross {
    pub d: usize,
    pub equal: bool,
}

pub fn weingarten_cross(d: usize, seed: u64) -> Result<WeingartenCross> {
    let profile: Vec<usize> = (1..=d).map(|i| 2 * i - 1).collect();
    let mut rng = seeded_rng(seed);
    let ys = letters(Family::Y, d * d);
    let asg = random_assignment(&mut rng, d, &ys);
    let streamed: TensorOperator = alt_eval_stream(&profile_pattern(Family::Y, &profile)?, &asg)?;
    let mats = ys.iter().map(|l| asg.get(*l).cloned()).collect::<Result<Vec<_>>>()?;
    let t = t_cal(&mats)?;
    let wg = algebra_to_operator(&class_to_algebra(&weingarten(d, d)), d)?;
    Ok(WeingartenCross {
        d,
        equal: streamed == wg.scale(&t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn admissibility() {
        assert!(is_admissible(3, &[1, 3, 5]));
        assert!(is_admissible(3, &[2, 1, 1, 5]));
        assert!(!is_admissible(3, &[3, 3, 3]));
        assert_eq!(bad_profiles(2), vec![vec![4], vec![2, 2]]);
    }

    #[test]
    fn vanishing_d2() {
        for row in profile_check(2, &default_bad_profiles(2), 1).unwrap() {
            assert!(row.zero && !row.admissible, "{row:?}");
        }
        for row in profile_check(2, &default_good_profiles(2), 1).unwrap() {
            assert!(!row.zero && row.admissible, "{row:?}");
        }
    }

    #[test]
    fn cross_d2() {
        assert!(weingarten_cross(2, 5).unwrap().equal);
    }

    #[test]
    fn vanishing_and_cross_d3() {
        for row in profile_check(3, &default_bad_profiles(3), 2).unwrap() {
            assert!(row.zero && !row.admissible, "{row:?}");
        }
        for row in profile_check(3, &default_good_profiles(3), 2).unwrap() {
            assert!(!row.zero && row.admissible, "{row:?}");
        }
        assert!(weingarten_cross(3, 6).unwrap().equal);
    }
}
