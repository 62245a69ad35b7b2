use std::collections::HashMap;
use std::hash::Hash;

use super::condition::TCondition;
use super::schedule::LevelRule;
use crate::real::{Eventual, EventualReal};
use crate::real::BranchSelector;
use crate::word::Digit3;

/// The branch of `p` that follows `sel` at splitting levels.
pub fn branch(p: &TCondition, sel: &BranchSelector) -> EventualReal {
    unroll(p, 0usize, |phase, _level, rule| match rule {
        LevelRule::Fixed(b) => b,
        LevelRule::Split => {
            let d = sel.choice(*phase);
            *phase = sel.phase(*phase + 1);
            d
        }
    })
}

/// Walk the levels of `p` above its stem with a finite-state strategy and
/// return the resulting branch in eventually periodic form.
///
/// Past the horizon `step` may depend on the level only through its phase
/// in the periodic tail; once a (phase, state) pair recurs the digits repeat.
pub(crate) fn unroll<St, F>(p: &TCondition, init: St, mut step: F) -> EventualReal
where
    St: Clone + Eq + Hash,
    F: FnMut(&mut St, usize, LevelRule) -> Digit3,
{
    let mut digits: Vec<Digit3> = p.stem().to_vec();
    let mut state = init;
    let mut seen: HashMap<(usize, St), usize> = HashMap::new();
    let horizon = p.horizon();
    let period = p.period();
    let mut level = p.stem().len();
    loop {
        if level >= horizon {
            let key = ((level - horizon) % period, state.clone());
            if let Some(&start) = seen.get(&key) {
                let tail = digits.split_off(start);
                return Eventual::new(digits, tail).expect("cycle is nonempty");
            }
            seen.insert(key, level);
        }
        let rule = p.rule(level).expect("level above stem");
        let d = step(&mut state, level, rule);
        debug_assert!(rule.allows(d));
        digits.push(d);
        level += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::LevelSchedule;
    use crate::word::Word3;

    #[test]
    fn constant_two_on_full_splitting() {
        let p = TCondition::full_splitting(Word3::new());
        let x = branch(&p, &BranchSelector::constant(Digit3::TWO));
        assert!(x.same_sequence(&EventualReal::constant(Digit3::TWO)));
    }

    #[test]
    fn constant_zero_on_strict_has_no_late_two() {
        let p = TCondition::normalize(
            "22".parse().unwrap(),
            LevelSchedule::new(vec![LevelRule::Split, LevelRule::F1], vec![LevelRule::F0, LevelRule::Split]).unwrap(),
        )
        .unwrap();
        let x = branch(&p, &BranchSelector::constant(Digit3::ZERO));
        assert!(!x.in_h());
        assert!((2..60).all(|i| !x.digit(i).is_two()));
    }

    #[test]
    fn prefixes_are_members() {
        let p = TCondition::normalize(
            "1".parse().unwrap(),
            LevelSchedule::new(vec![LevelRule::Split, LevelRule::F0, LevelRule::Split], vec![LevelRule::F1, LevelRule::Split, LevelRule::Split]).unwrap(),
        )
        .unwrap();
        let sel = BranchSelector::new("20".parse().unwrap(), "12".parse().unwrap()).unwrap();
        let x = branch(&p, &sel);
        for len in 0..=40 {
            assert!(p.member(&x.take(len)));
        }
        // splitting levels receive 2, 0, 1, 2, 1, 2, ...
        let splits = p.splitting_levels(6);
        let got: Vec<u8> = splits.iter().map(|&l| x.digit(l).value()).collect();
        assert_eq!(got, vec![2, 0, 1, 2, 1, 2]);
    }
}
