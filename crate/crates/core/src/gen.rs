//! Seedable random instances for tests, demos and benchmarks.

use rand::Rng;

use crate::real::{BranchSelector, Eventual, EventualReal};
use crate::tree::{LevelRule, LevelSchedule, OddPredicate, TCondition};
use crate::word::{Digit3, Word2, Word3};

/// Shape of randomly generated conditions.
#[derive(Debug, Clone)]
pub struct GenParams {
    pub max_stem: usize,
    pub max_table: usize,
    pub max_tail: usize,
    /// Probability that a generated level splits.
    pub split_prob: f64,
    /// Draw fixed digits from `{0,1}` only.
    pub strict: bool,
}

impl GenParams {
    pub fn strict() -> GenParams {
        GenParams {
            max_stem: 3,
            max_table: 3,
            max_tail: 3,
            split_prob: 0.45,
            strict: true,
        }
    }

    pub fn lenient() -> GenParams {
        GenParams {
            strict: false,
            ..GenParams::strict()
        }
    }
}

pub fn random_digit<R: Rng + ?Sized>(rng: &mut R) -> Digit3 {
    Digit3::ALL[rng.gen_range(0..3)]
}

pub fn random_word3<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Word3 {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_digit(rng)).collect()
}

pub fn random_word2<R: Rng + ?Sized>(rng: &mut R, max_len: usize) -> Word2 {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| rng.gen_bool(0.5)).collect()
}

fn random_rule<R: Rng + ?Sized>(rng: &mut R, params: &GenParams) -> LevelRule {
    if rng.gen_bool(params.split_prob) {
        LevelRule::Split
    } else if params.strict {
        LevelRule::Fixed(Digit3::from_bit(rng.gen_bool(0.5)))
    } else {
        LevelRule::Fixed(random_digit(rng))
    }
}

/// A canonical condition; strict unless `params.strict` is off.
pub fn random_condition<R: Rng + ?Sized>(rng: &mut R, params: &GenParams) -> TCondition {
    let stem = random_word3(rng, params.max_stem);
    let table: Vec<LevelRule> = (0..rng.gen_range(0..=params.max_table))
        .map(|_| random_rule(rng, params))
        .collect();
    let tail_len = rng.gen_range(1..=params.max_tail.max(1));
    let mut tail: Vec<LevelRule> = (0..tail_len).map(|_| random_rule(rng, params)).collect();
    if !tail.iter().any(|r| r.is_split()) {
        let i = rng.gen_range(0..tail.len());
        tail[i] = LevelRule::Split;
    }
    let schedule = LevelSchedule::new(table, tail).expect("tail nonempty");
    TCondition::normalize(stem, schedule).expect("tail splits")
}

/// A random `r ≤ q`: a few restrictions to nodes and freezings of single
/// splitting levels.
pub fn random_refinement<R: Rng + ?Sized>(rng: &mut R, q: &TCondition, strict: bool) -> TCondition {
    let mut r = q.clone();
    for _ in 0..rng.gen_range(0..=3) {
        if rng.gen_bool(0.5) {
            let extra = rng.gen_range(1..=3);
            let sel = random_selector(rng);
            let x = crate::tree::branch(&r, &sel);
            r = r.restrict(&x.take(r.stem().len() + extra)).expect("branch prefix is a member");
        } else {
            let splits = r.splitting_levels(4);
            let level = splits[rng.gen_range(0..splits.len())];
            let digit = if strict {
                Digit3::from_bit(rng.gen_bool(0.5))
            } else {
                random_digit(rng)
            };
            let sched = r.schedule().with_rule(level - r.stem().len(), LevelRule::Fixed(digit));
            r = TCondition::normalize(r.stem().clone(), sched).expect("tail untouched");
        }
    }
    r
}

pub fn random_selector<R: Rng + ?Sized>(rng: &mut R) -> BranchSelector {
    let choices = random_word3(rng, 4);
    let len = rng.gen_range(1..=3);
    let tail: Word3 = (0..len).map(|_| random_digit(rng)).collect();
    BranchSelector::new(choices, tail).expect("tail nonempty")
}

/// A selector whose periodic part contains a 2, so branches through
/// strict conditions lie in `H`.
pub fn random_h_selector<R: Rng + ?Sized>(rng: &mut R) -> BranchSelector {
    let mut sel = random_selector(rng);
    if !sel.tail_choices.iter().any(|d| d.is_two()) {
        let mut tail = sel.tail_choices.into_digits();
        let i = rng.gen_range(0..tail.len());
        tail[i] = Digit3::TWO;
        sel.tail_choices = Word3::from_digits(tail);
    }
    sel
}

pub fn random_real_in_h<R: Rng + ?Sized>(rng: &mut R, max_prefix: usize, max_tail: usize) -> EventualReal {
    let prefix = random_word3(rng, max_prefix);
    let len = rng.gen_range(1..=max_tail.max(1));
    let mut tail: Vec<Digit3> = (0..len).map(|_| random_digit(rng)).collect();
    if !tail.iter().any(|d| d.is_two()) {
        let i = rng.gen_range(0..tail.len());
        tail[i] = Digit3::TWO;
    }
    Eventual::new(prefix.into_digits(), tail).expect("tail nonempty")
}

pub fn random_odd_predicate<R: Rng + ?Sized>(rng: &mut R, max_table: usize, max_tail: usize) -> OddPredicate {
    let table = random_word2(rng, max_table);
    let len = rng.gen_range(1..=max_tail.max(1));
    let tail: Word2 = (0..len).map(|_| rng.gen_bool(0.5)).collect();
    OddPredicate::new(table, tail).expect("tail nonempty")
}
