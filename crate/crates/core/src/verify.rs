//! Exhaustive small-case verification suites producing JSON-lines records.
//!
//! Each record covers one check on one instance (typically a size `n` and a
//! mask `I`) and carries the first counterexample found when it fails.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::asm::Asm;
use crate::bruhat;
use crate::completion::{dm_completion, poset_isomorphism};
use crate::count::{
    alpha_operator, alpha_recursive, count_tail_family, extend_partial_triangle, increasing_sequences,
    tail_closed_form, truncate_to_partial_triangle,
};
use crate::enumerate::{asm_count_formula, enumerate_asms, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::hasse::{asm_poset, quotient_poset};
use crate::mask::ParabolicMask;
use crate::parabolic::{
    canonical_p_decomposition, canonical_q_decomposition, enumerate_asm_i, in_asm_i, join_i_all, meet_i,
    meet_i_all, parabolic_quotient, rank_rows_invariant_under_quotient,
};
use crate::permutation::Permutation;
use crate::pi::{fiber_minimum, pi_i, pi_image_is_lattice, pi_parabolic, pi_parabolic_via_word, pi_word};
use crate::six_vertex::SixVertexState;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    MainTheorem,
    MeetFormula,
    Pi,
    SixVertex,
    Counts,
    Decomposition,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::MainTheorem, Suite::MeetFormula, Suite::Pi, Suite::SixVertex, Suite::Counts, Suite::Decomposition];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainTheorem => "main-theorem",
            Suite::MeetFormula => "meet-formula",
            Suite::Pi => "pi",
            Suite::SixVertex => "sixvertex",
            Suite::Counts => "counts",
            Suite::Decomposition => "decomposition",
            Suite::All => "all",
        }
    }

    /// Largest `n` the suite visits; larger requests are clamped to this.
    pub fn n_cap(self) -> usize {
        match self {
            Suite::MainTheorem => 5,
            Suite::MeetFormula => 4,
            Suite::Pi => 4,
            Suite::SixVertex => 6,
            Suite::Counts => 7,
            Suite::Decomposition => 5,
            Suite::All => DEFAULT_ENUMERATION_CAP,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::ParameterOutOfRange(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub suite: &'static str,
    pub instance: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub seed: u64,
}

/// Runs one suite (or all of them) and returns the records in a fixed order.
pub fn run(suite: Suite, cfg: VerifyConfig) -> Result<Vec<Record>> {
    if cfg.max_n > DEFAULT_ENUMERATION_CAP {
        return Err(Error::ResourceLimit { what: "max-n", requested: cfg.max_n, cap: DEFAULT_ENUMERATION_CAP });
    }
    let suites: Vec<Suite> = if suite == Suite::All { Suite::ALL.to_vec() } else { vec![suite] };
    let mut out = Vec::new();
    for s in suites {
        let mut sink = Sink { suite: s.name(), out: &mut out };
        let max_n = cfg.max_n.min(s.n_cap());
        match s {
            Suite::MainTheorem => main_theorem(&mut sink, max_n)?,
            Suite::MeetFormula => meet_formula(&mut sink, max_n)?,
            Suite::Pi => pi_suite(&mut sink, max_n, cfg.seed)?,
            Suite::SixVertex => six_vertex(&mut sink, max_n)?,
            Suite::Counts => counts(&mut sink, max_n)?,
            Suite::Decomposition => decomposition(&mut sink, max_n)?,
            Suite::All => unreachable!("expanded above"),
        }
    }
    Ok(out)
}

struct Sink<'a> {
    suite: &'static str,
    out: &'a mut Vec<Record>,
}

impl Sink<'_> {
    fn push(&mut self, instance: String, outcome: std::result::Result<(), Value>) {
        let (pass, witness) = match outcome {
            Ok(()) => (true, None),
            Err(w) => (false, Some(w)),
        };
        self.out.push(Record { suite: self.suite, instance, pass, witness });
    }
}

fn rows(a: &Asm) -> Value {
    json!(a.rows())
}

fn instance(n: usize, mask: &ParabolicMask) -> String {
    format!("n={n} I={mask}")
}

/// First failure of `check` over `items`, as a witness.
fn first_failure<T>(items: impl IntoIterator<Item = T>, mut check: impl FnMut(&T) -> Result<Option<Value>>) -> Result<std::result::Result<(), Value>> {
    for x in items {
        if let Some(w) = check(&x)? {
            return Ok(Err(w));
        }
    }
    Ok(Ok(()))
}

fn main_theorem(sink: &mut Sink, max_n: usize) -> Result<()> {
    for n in 1..=max_n {
        for mask in ParabolicMask::all(n) {
            let quotient = quotient_poset(n, &mask)?;
            let completion = dm_completion(&quotient)?;
            let members: Vec<Asm> = enumerate_asm_i(n, &mask)?.collect();
            let target = asm_poset(&members)?;
            let outcome = match poset_isomorphism(&completion.lattice, &target)? {
                Some(_) => Ok(()),
                None => Err(json!({
                    "completion_size": completion.lattice.len(),
                    "asm_i_size": target.len(),
                    "completion_covers": completion.lattice.covers().len(),
                    "asm_i_covers": target.covers().len(),
                })),
            };
            sink.push(instance(n, &mask), outcome);
        }
    }
    Ok(())
}

/// Greatest element of `{X ∈ set : X ≤ a, X ≤ b}`, if it exists.
fn brute_glb<'a>(set: &'a [Asm], a: &Asm, b: &Asm) -> Option<&'a Asm> {
    let lower: Vec<&Asm> = set
        .iter()
        .filter(|x| x.rank_matrix().dominates(a.rank_matrix()) && x.rank_matrix().dominates(b.rank_matrix()))
        .collect();
    lower.iter().copied().find(|m| lower.iter().all(|x| x.rank_matrix().dominates(m.rank_matrix())))
}

fn meet_formula(sink: &mut Sink, max_n: usize) -> Result<()> {
    for n in 1..=max_n {
        for mask in ParabolicMask::all(n) {
            let set: Vec<Asm> = enumerate_asm_i(n, &mask)?.collect();
            let members: HashSet<&Asm> = set.iter().collect();
            let pairs = set.iter().flat_map(|a| set.iter().map(move |b| (a, b)));
            let outcome = first_failure(pairs, |(a, b)| {
                let m = meet_i(a, b, &mask)?;
                let glb = brute_glb(&set, a, b);
                if glb != Some(&m) {
                    return Ok(Some(json!({
                        "check": "meet", "a": rows(a), "b": rows(b), "meet_i": rows(&m),
                        "brute_force": glb.map(rows),
                    })));
                }
                let j = bruhat::join(a, b)?;
                if !members.contains(&j) {
                    return Ok(Some(json!({ "check": "join", "a": rows(a), "b": rows(b), "join": rows(&j) })));
                }
                Ok(None)
            })?;
            sink.push(instance(n, &mask), outcome);
        }
    }
    Ok(())
}

fn pi_suite(sink: &mut Sink, max_n: usize, seed: u64) -> Result<()> {
    for n in 2..=max_n {
        let universe: Vec<Asm> = enumerate_asms(n)?.collect();
        let outcome = first_failure(&universe, |a| {
            for i in 1..n {
                let p = pi_i(a, i)?;
                if fiber_minimum(a, |r| r == i, &universe).as_ref() != Some(&p) {
                    return Ok(Some(json!({ "check": "closed-form", "a": rows(a), "i": i, "pi": rows(&p) })));
                }
                if pi_i(&p, i)? != p {
                    return Ok(Some(json!({ "check": "idempotence", "a": rows(a), "i": i })));
                }
                for j in 1..n {
                    if i + 1 < j && pi_word(a, &[i, j])? != pi_word(a, &[j, i])? {
                        return Ok(Some(json!({ "check": "commutation", "a": rows(a), "i": i, "j": j })));
                    }
                }
                if i + 1 < n && pi_word(a, &[i, i + 1, i])? != pi_word(a, &[i + 1, i, i + 1])? {
                    return Ok(Some(json!({ "check": "braid", "a": rows(a), "i": i })));
                }
            }
            Ok(None)
        })?;
        sink.push(format!("n={n} pi_i"), outcome);

        for mask in ParabolicMask::all(n) {
            let members: HashSet<Asm> = enumerate_asm_i(n, &mask)?.collect();
            let mut image = HashSet::new();
            let outcome = first_failure(&universe, |a| {
                let p = pi_parabolic(a, &mask)?;
                let via_word = pi_parabolic_via_word(a, &mask)?;
                let fiber = fiber_minimum(a, |r| mask.contains(r), &universe);
                if via_word != p || fiber.as_ref() != Some(&p) {
                    return Ok(Some(json!({
                        "check": "pi_I", "a": rows(a), "closed_form": rows(&p),
                        "via_word": rows(&via_word), "fiber_minimum": fiber.as_ref().map(rows),
                    })));
                }
                if members.contains(*a) && p != **a {
                    return Ok(Some(json!({ "check": "fixes members", "a": rows(a) })));
                }
                image.insert(p);
                Ok(None)
            })?;
            let outcome = outcome.and_then(|()| {
                if image == members {
                    Ok(())
                } else {
                    Err(json!({ "check": "image", "image_size": image.len(), "asm_i_size": members.len() }))
                }
            });
            sink.push(format!("{} pi_I", instance(n, &mask)), outcome);
        }
    }

    let mut words: Vec<(usize, Permutation)> = Vec::new();
    if max_n >= 3 {
        words.extend(Permutation::all(3).into_iter().map(|w| (3, w)));
    }
    if max_n >= 4 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let all4 = Permutation::all(4);
        words.extend(all4.choose_multiple(&mut rng, 10).cloned().map(|w| (4, w)));
    }
    for (n, w) in words {
        let mut word = w.reduced_word();
        word.reverse();
        let report = pi_image_is_lattice(n, &word)?;
        let outcome = if report.is_lattice() { Ok(()) } else { Err(json!(format!("{report:?}"))) };
        sink.push(format!("n={n} w={w} image lattice"), outcome);
    }
    Ok(())
}

fn six_vertex(sink: &mut Sink, max_n: usize) -> Result<()> {
    for n in 1..=max_n {
        let universe: Vec<Asm> = enumerate_asms(n)?.collect();
        let states: Vec<SixVertexState> = universe.iter().map(SixVertexState::from_asm).collect();
        let outcome = first_failure(universe.iter().zip(&states), |(a, s)| {
            if s.validate().is_err() {
                return Ok(Some(json!({ "check": "ice rule", "a": rows(a) })));
            }
            if s.to_asm()? != **a {
                return Ok(Some(json!({ "check": "round trip", "a": rows(a) })));
            }
            Ok(None)
        })?;
        let distinct: HashSet<&SixVertexState> = states.iter().collect();
        let outcome = outcome.and_then(|()| {
            if distinct.len() == universe.len() {
                Ok(())
            } else {
                Err(json!({ "check": "injective", "states": distinct.len(), "asms": universe.len() }))
            }
        });
        sink.push(format!("n={n} bijection"), outcome);

        for mask in ParabolicMask::all(n) {
            let outcome = first_failure(universe.iter().zip(&states), |(a, s)| {
                let st = s.in_st_i(&mask)?;
                let asm = in_asm_i(a, &mask)?;
                Ok((st != asm).then(|| json!({ "a": rows(a), "in_st_i": st, "in_asm_i": asm })))
            })?;
            sink.push(format!("{} St_I", instance(n, &mask)), outcome);
        }
    }
    Ok(())
}

fn counts(sink: &mut Sink, max_n: usize) -> Result<()> {
    for n in 1..=max_n {
        let got = enumerate_asms(n)?.count() as u128;
        let want = asm_count_formula(n);
        sink.push(format!("n={n} |ASM(n)|"), if got == want { Ok(()) } else { Err(json!({ "enumerated": got, "formula": want })) });
    }

    for (t, range) in [(3usize, 4..=8usize), (4, 5..=7)] {
        for n in range {
            let sum = count_tail_family(t, n)?;
            let closed = tail_closed_form(t, n);
            let mut outcome = if closed.as_ref() == Some(&sum) {
                Ok(())
            } else {
                Err(json!({ "sum": sum.to_string(), "closed_form": closed.map(|c| c.to_string()) }))
            };
            if outcome.is_ok() && n <= max_n.min(6) {
                let direct = enumerate_asm_i(n, &ParabolicMask::tail(n, t))?.count();
                if BigUint::from(direct) != sum {
                    outcome = Err(json!({ "sum": sum.to_string(), "enumerated": direct }));
                }
            }
            sink.push(format!("t={t} n={n} tail count"), outcome);
        }
    }

    for n in 2..=max_n.min(6) {
        for t in 2..=n {
            let sum = count_tail_family(t, n)?;
            let direct = enumerate_asm_i(n, &ParabolicMask::tail(n, t))?.count();
            let outcome = if BigUint::from(direct) == sum {
                Ok(())
            } else {
                Err(json!({ "sum": sum.to_string(), "enumerated": direct }))
            };
            sink.push(format!("t={t} n={n} tail sum vs enumeration"), outcome);
        }
    }

    let bottoms = (1..=4).flat_map(|m| increasing_sequences(6, m));
    let outcome = first_failure(bottoms, |k| {
        let rec = alpha_recursive(k)?;
        let op = alpha_operator(k)?;
        Ok((rec != op).then(|| json!({ "bottom": k, "recursive": rec.to_string(), "operator": op.to_string() })))
    })?;
    sink.push("alpha operator vs recursion, m<=4, entries<=6".into(), outcome);

    for n in 1..=max_n.min(5) {
        for t in 1..=n {
            let mask = ParabolicMask::tail(n, t);
            let outcome = first_failure(enumerate_asm_i(n, &mask)?, |a| {
                let tri = truncate_to_partial_triangle(a, t)?;
                let back = extend_partial_triangle(&tri)?;
                Ok((back != *a).then(|| json!({ "a": rows(a), "triangle": tri.rows(), "extended": rows(&back) })))
            })?;
            sink.push(format!("t={t} n={n} truncate/extend"), outcome);
        }
    }
    Ok(())
}

fn decomposition(sink: &mut Sink, max_n: usize) -> Result<()> {
    for n in 1..=max_n {
        for mask in ParabolicMask::all(n) {
            let outcome = first_failure(enumerate_asm_i(n, &mask)?, |a| {
                let ps: Vec<Asm> = canonical_p_decomposition(a, &mask)?.iter().map(Permutation::to_asm).collect();
                let qs: Vec<Asm> = canonical_q_decomposition(a, &mask)?.iter().map(Permutation::to_asm).collect();
                let j = join_i_all(&ps, &mask)?.expect("n >= 1");
                let m = meet_i_all(&qs, &mask)?.expect("n >= 1");
                Ok((j != *a || m != *a).then(|| json!({ "a": rows(a), "join_of_p": rows(&j), "meet_of_q": rows(&m) })))
            })?;
            sink.push(format!("{} P/Q reconstruction", instance(n, &mask)), outcome);

            let outcome = first_failure(Permutation::all(n), |w| {
                Ok((!rank_rows_invariant_under_quotient(w, &mask)?).then(|| json!({ "w": w.word() })))
            })?;
            sink.push(format!("{} quotient rank rows", instance(n, &mask)), outcome);

            if n >= 2 && mask.len() == n - 2 {
                let asm_i: HashSet<Asm> = enumerate_asm_i(n, &mask)?.collect();
                let quotient: HashSet<Asm> = parabolic_quotient(n, &mask)?.iter().map(Permutation::to_asm).collect();
                let outcome = if asm_i == quotient {
                    Ok(())
                } else {
                    let extra: Vec<Value> = asm_i.difference(&quotient).map(rows).collect();
                    Err(json!({ "asm_i_size": asm_i.len(), "quotient_size": quotient.len(), "extra": extra }))
                };
                sink.push(format!("{} ASM^I = S_n^I", instance(n, &mask)), outcome);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_suites() {
        assert_eq!("pi".parse::<Suite>().unwrap(), Suite::Pi);
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn all_small_pass() {
        let recs = run(Suite::All, VerifyConfig { max_n: 3, seed: 0 }).unwrap();
        let failed: Vec<&Record> = recs.iter().filter(|r| !r.pass).collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert!(recs.iter().any(|r| r.suite == "main-theorem"));
    }

    #[test]
    fn max_n_cap() {
        assert!(matches!(run(Suite::Pi, VerifyConfig { max_n: 9, seed: 0 }), Err(Error::ResourceLimit { .. })));
    }
}
