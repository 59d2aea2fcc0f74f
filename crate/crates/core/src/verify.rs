//! Exhaustive checks over all words (or permutations) up to a semilength.
//!
//! Each check enumerates every object of size `0..=max_n`, splits the work
//! across a rayon pool and returns a [`VerificationReport`]. Reports do not
//! depend on the number of workers: counterexamples are sorted before they
//! are truncated and distributions live in ordered maps.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::enumerate::{catalan, enumerate_dyck};
use crate::involution::{big_phi, in_phi_domain, in_phi_inverse_domain, phi, phi_inverse};
use crate::perm::{blocks, from_dyck, ldes, lrmax, to_dyck, Permutation};
use crate::stats::{self, compute_stats};
use crate::word::{is_dyck, DyckWord};

pub const DEFAULT_MAX_N: usize = 12;
pub const DEFAULT_MAX_COUNTEREXAMPLES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DistKey {
    pub rises: Vec<usize>,
    pub p: usize,
    pub q: usize,
}

impl fmt::Display for DistKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rises={:?} p={} q={}", self.rises, self.p, self.q)
    }
}

/// Counts of `(rise set, p, q)` over one semilength.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct JointDistribution {
    pub semilength: usize,
    pub entries: BTreeMap<DistKey, u64>,
}

impl JointDistribution {
    pub fn new(semilength: usize) -> Self {
        JointDistribution {
            semilength,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, key: DistKey) {
        *self.entries.entry(key).or_insert(0) += 1;
    }

    pub fn merge(mut self, other: JointDistribution) -> JointDistribution {
        for (k, c) in other.entries {
            *self.entries.entry(k).or_insert(0) += c;
        }
        self
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn get(&self, rises: &[usize], p: usize, q: usize) -> u64 {
        let key = DistKey {
            rises: rises.to_vec(),
            p,
            q,
        };
        self.entries.get(&key).copied().unwrap_or(0)
    }

    /// Keys whose count differs from the count of the key with `p` and `q`
    /// exchanged, with `(key, count, swapped count)`.
    pub fn asymmetries(&self) -> Vec<(DistKey, u64, u64)> {
        self.entries
            .iter()
            .filter_map(|(k, &c)| {
                let swapped = self.get(&k.rises, k.q, k.p);
                (swapped != c).then(|| (k.clone(), c, swapped))
            })
            .collect()
    }
}

impl Serialize for JointDistribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            rises: &'a [usize],
            p: usize,
            q: usize,
            count: u64,
        }
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|(k, &count)| Entry {
                rises: &k.rises,
                p: k.p,
                q: k.q,
                count,
            })
            .collect();
        let mut s = serializer.serialize_struct("JointDistribution", 2)?;
        s.serialize_field("semilength", &self.semilength)?;
        s.serialize_field("entries", &entries)?;
        s.end()
    }
}

/// Distribution of `(rises, returns, n - ldr)` over all words of semilength `n`.
pub fn joint_distribution(n: usize) -> JointDistribution {
    let mut dist = JointDistribution::new(n);
    for w in enumerate_dyck(n) {
        dist.add(path_key(&w));
    }
    dist
}

fn path_key(w: &DyckWord) -> DistKey {
    let s = w.steps();
    DistKey {
        rises: stats::rises(s),
        p: stats::returns(s),
        q: w.semilength() - stats::ldr(s),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub expected: String,
    pub actual: String,
}

impl Counterexample {
    fn new(
        input: impl fmt::Display,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
    ) -> Self {
        Counterexample {
            input: input.to_string(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub max_n: usize,
    pub instances_checked: u64,
    pub passed: bool,
    pub total_counterexamples: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Observations that are reported but never fail the check.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub findings: BTreeMap<String, serde_json::Value>,
}

impl VerificationReport {
    fn build(
        check: Check,
        opts: &VerifyOptions,
        instances_checked: u64,
        mut counterexamples: Vec<Counterexample>,
    ) -> Self {
        counterexamples.sort();
        let total = counterexamples.len();
        counterexamples.truncate(opts.max_counterexamples);
        VerificationReport {
            check_name: check.name().to_string(),
            max_n: opts.max_n,
            instances_checked,
            passed: total == 0,
            total_counterexamples: total,
            counterexamples,
            findings: BTreeMap::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    Switch,
    Involution,
    Phi,
    Bijection,
    Duality,
    Enumeration,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Switch,
        Check::Involution,
        Check::Phi,
        Check::Bijection,
        Check::Duality,
        Check::Enumeration,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Switch => "switch",
            Check::Involution => "involution",
            Check::Phi => "phi",
            Check::Bijection => "bijection",
            Check::Duality => "duality",
            Check::Enumeration => "enumeration",
        }
    }

    pub fn run(self, opts: &VerifyOptions) -> VerificationReport {
        match self {
            Check::Switch => check_switch_symmetry(opts),
            Check::Involution => check_involution(opts),
            Check::Phi => check_phi_laws(opts),
            Check::Bijection => check_bijection_laws(opts),
            Check::Duality => check_duality(opts),
            Check::Enumeration => check_enumeration(opts),
        }
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub max_n: usize,
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    pub max_counterexamples: usize,
}

impl VerifyOptions {
    pub fn new(max_n: usize) -> Self {
        VerifyOptions {
            max_n,
            ..Default::default()
        }
    }

    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    fn pool(&self) -> rayon::ThreadPool {
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .expect("failed to start worker pool")
    }
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: DEFAULT_MAX_N,
            jobs: 0,
            max_counterexamples: DEFAULT_MAX_COUNTEREXAMPLES,
        }
    }
}

/// Applies `check` to every word of every semilength up to `max_n`.
fn for_all_words<F>(opts: &VerifyOptions, check: F) -> (u64, Vec<Counterexample>)
where
    F: Fn(&DyckWord) -> Vec<Counterexample> + Sync,
{
    let pool = opts.pool();
    let mut instances = 0;
    let mut found = Vec::new();
    for n in 0..=opts.max_n {
        let words: Vec<DyckWord> = enumerate_dyck(n).collect();
        instances += words.len() as u64;
        found.extend(pool.install(|| words.par_iter().flat_map_iter(&check).collect::<Vec<_>>()));
    }
    (instances, found)
}

pub fn check_switch_symmetry(opts: &VerifyOptions) -> VerificationReport {
    let pool = opts.pool();
    let mut instances = 0;
    let mut found = Vec::new();
    for n in 0..=opts.max_n {
        let words: Vec<DyckWord> = enumerate_dyck(n).collect();
        instances += words.len() as u64;
        let dist = pool.install(|| {
            words
                .par_iter()
                .fold(
                    || JointDistribution::new(n),
                    |mut d, w| {
                        d.add(path_key(w));
                        d
                    },
                )
                .reduce(|| JointDistribution::new(n), JointDistribution::merge)
        });
        if dist.total() != catalan(n) {
            found.push(Counterexample::new(
                format!("n={n}"),
                format!("total {}", catalan(n)),
                format!("total {}", dist.total()),
            ));
        }
        for (key, count, swapped) in dist.asymmetries() {
            found.push(Counterexample::new(
                format!("n={n} {key}"),
                format!("count {swapped}"),
                format!("count {count}"),
            ));
        }
    }
    VerificationReport::build(Check::Switch, opts, instances, found)
}

pub fn check_involution(opts: &VerifyOptions) -> VerificationReport {
    let changed = std::sync::atomic::AtomicU64::new(0);
    let (instances, found) = for_all_words(opts, |w| {
        let mut bad = Vec::new();
        let n = w.semilength();
        let before = compute_stats(w);
        let image = match big_phi(w) {
            Ok(image) => image,
            Err(e) => return vec![Counterexample::new(w, "Phi(D) defined", e)],
        };
        if !is_dyck(image.steps()) {
            bad.push(Counterexample::new(w, "valid image", &image));
        }
        match big_phi(&image) {
            Ok(back) if &back == w => {}
            Ok(back) => bad.push(Counterexample::new(w, format!("Phi(Phi(D)) = {w}"), back)),
            Err(e) => bad.push(Counterexample::new(w, "Phi(Phi(D)) defined", e)),
        }
        let after = compute_stats(&image);
        if after.rises != before.rises {
            bad.push(Counterexample::new(
                w,
                format!("rises {:?}", before.rises),
                format!("rises {:?}", after.rises),
            ));
        }
        if after.returns != n - before.ldr {
            bad.push(Counterexample::new(
                w,
                format!("returns {}", n - before.ldr),
                format!("returns {}", after.returns),
            ));
        }
        if n - after.ldr != before.returns {
            bad.push(Counterexample::new(
                w,
                format!("n-ldr {}", before.returns),
                format!("n-ldr {}", n - after.ldr),
            ));
        }
        let fixed = &image == w;
        if fixed != (before.returns == n - before.ldr) {
            bad.push(Counterexample::new(
                w,
                format!("fixed {}", !fixed),
                format!("fixed {fixed}"),
            ));
        }
        if after.rise_composition != before.rise_composition {
            changed.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
        }
        bad
    });
    let mut report = VerificationReport::build(Check::Involution, opts, instances, found);
    let changed = changed.into_inner();
    report.findings.insert(
        "rise_composition_preserved".into(),
        serde_json::Value::Bool(changed == 0),
    );
    report
        .findings
        .insert("rise_composition_changed_count".into(), changed.into());
    report
}

pub fn check_phi_laws(opts: &VerifyOptions) -> VerificationReport {
    let (instances, mut found) = for_all_words(opts, |w| {
        let mut bad = Vec::new();
        if in_phi_domain(w) {
            bad.extend(phi_step_laws(w));
        }
        if in_phi_inverse_domain(w) {
            match phi_inverse(w) {
                Ok((pre, case)) => {
                    if !is_dyck(pre.steps()) {
                        bad.push(Counterexample::new(w, "valid phi^-1 image", &pre));
                    }
                    match phi(&pre) {
                        Ok((again, c)) if &again == w && c == case => {}
                        Ok((again, c)) => bad.push(Counterexample::new(
                            w,
                            format!("phi(phi^-1(D)) = {w} case {case}"),
                            format!("{again} case {c}"),
                        )),
                        Err(e) => bad.push(Counterexample::new(w, "phi(phi^-1(D)) defined", e)),
                    }
                }
                Err(e) => bad.push(Counterexample::new(w, "phi^-1(D) defined", e)),
            }
        }
        bad
    });

    // Injectivity on each semilength.
    let pool = opts.pool();
    for n in 0..=opts.max_n {
        let words: Vec<DyckWord> = enumerate_dyck(n).filter(in_phi_domain).collect();
        let mut images: Vec<(DyckWord, DyckWord)> = pool.install(|| {
            words
                .par_iter()
                .filter_map(|w| phi(w).ok().map(|(img, _)| (img, w.clone())))
                .collect()
        });
        images.sort();
        for pair in images.windows(2) {
            if pair[0].0 == pair[1].0 {
                found.push(Counterexample::new(
                    &pair[1].1,
                    format!("image distinct from phi({})", pair[0].1),
                    &pair[1].0,
                ));
            }
        }
    }
    VerificationReport::build(Check::Phi, opts, instances, found)
}

/// Rise set kept, returns +1, ldr +1, and phi^-1 undoes the step with the
/// same case.
fn phi_step_laws(w: &DyckWord) -> Vec<Counterexample> {
    let mut bad = Vec::new();
    let (image, case) = match phi(w) {
        Ok(r) => r,
        Err(e) => return vec![Counterexample::new(w, "phi(D) defined", e)],
    };
    if !is_dyck(image.steps()) {
        return vec![Counterexample::new(w, "valid phi image", &image)];
    }
    let before = compute_stats(w);
    let after = compute_stats(&image);
    if after.rises != before.rises {
        bad.push(Counterexample::new(
            w,
            format!("rises {:?}", before.rises),
            format!("rises {:?}", after.rises),
        ));
    }
    if after.returns != before.returns + 1 {
        bad.push(Counterexample::new(
            w,
            format!("returns {}", before.returns + 1),
            format!("returns {}", after.returns),
        ));
    }
    if after.ldr != before.ldr + 1 {
        bad.push(Counterexample::new(
            w,
            format!("ldr {}", before.ldr + 1),
            format!("ldr {}", after.ldr),
        ));
    }
    match phi_inverse(&image) {
        Ok((back, c)) if &back == w && c == case => {}
        Ok((back, c)) => bad.push(Counterexample::new(
            w,
            format!("phi^-1(phi(D)) = {w} case {case}"),
            format!("{back} case {c}"),
        )),
        Err(e) => bad.push(Counterexample::new(w, "phi^-1(phi(D)) defined", e)),
    }
    bad
}

/// 321-avoiders of size `n` by depth-first search with exact pruning,
/// independent of the Dyck-word correspondence.
///
/// A prefix extends to an avoider iff its non-maxima increase and every
/// unused value below the running maximum exceeds the last non-maximum.
pub fn avoiders_by_search(n: usize) -> Vec<Permutation> {
    fn rec(
        prefix: &mut Vec<usize>,
        used: &mut [bool],
        max: usize,
        last_small: usize,
        n: usize,
        out: &mut Vec<Permutation>,
    ) {
        if prefix.len() == n {
            out.push(Permutation::new(prefix.clone()).expect("search builds permutations"));
            return;
        }
        for v in 1..=n {
            if used[v] {
                continue;
            }
            let (new_max, new_small) = if v > max {
                (v, last_small)
            } else if v > last_small {
                (max, v)
            } else {
                continue;
            };
            if (1..new_max).any(|u| !used[u] && u != v && u < new_small) {
                continue;
            }
            used[v] = true;
            prefix.push(v);
            rec(prefix, used, new_max, new_small, n, out);
            prefix.pop();
            used[v] = false;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n + 1], 0, 0, n, &mut out);
    out
}

pub fn check_bijection_laws(opts: &VerifyOptions) -> VerificationReport {
    let pool = opts.pool();
    let mut instances = 0;
    let mut found = Vec::new();
    for n in 0..=opts.max_n {
        let words: Vec<DyckWord> = enumerate_dyck(n).collect();
        let perms = avoiders_by_search(n);
        instances += words.len() as u64;

        if perms.len() != words.len() {
            found.push(Counterexample::new(
                format!("n={n}"),
                format!("{} avoiders", words.len()),
                format!("{} avoiders", perms.len()),
            ));
        }

        // Words -> permutations -> words.
        found.extend(pool.install(|| {
            words
                .par_iter()
                .flat_map_iter(|w| {
                    let p = from_dyck(w);
                    let mut bad = Vec::new();
                    match to_dyck(&p) {
                        Ok(back) if &back == w => {}
                        Ok(back) => bad.push(Counterexample::new(w, w, back)),
                        Err(e) => bad.push(Counterexample::new(w, format!("avoider from {p}"), e)),
                    }
                    bad
                })
                .collect::<Vec<_>>()
        }));

        // Permutations -> words -> permutations, with the statistic
        // correspondences; images must cover every word exactly once.
        let results: Vec<(Option<DyckWord>, Vec<Counterexample>)> = pool.install(|| {
            perms
                .par_iter()
                .map(|p| match to_dyck(p) {
                    Ok(w) => {
                        let mut bad = Vec::new();
                        if from_dyck(&w) != *p {
                            bad.push(Counterexample::new(p, p, from_dyck(&w)));
                        }
                        let s = w.steps();
                        let checks = [
                            (
                                "rises/lrmax",
                                format!("{:?}", lrmax(p)),
                                format!("{:?}", stats::rises(s)),
                            ),
                            (
                                "returns/blocks",
                                blocks(p).to_string(),
                                stats::returns(s).to_string(),
                            ),
                            (
                                "ldr/ldes-inverse",
                                ldes(&p.inverse()).to_string(),
                                stats::ldr(s).to_string(),
                            ),
                        ];
                        for (what, expected, actual) in checks {
                            if expected != actual {
                                bad.push(Counterexample::new(
                                    p,
                                    format!("{what} {expected}"),
                                    format!("{what} {actual}"),
                                ));
                            }
                        }
                        (Some(w), bad)
                    }
                    Err(e) => (None, vec![Counterexample::new(p, "Dyck image", e)]),
                })
                .collect()
        });
        let mut images = HashSet::with_capacity(results.len());
        for (image, bad) in results {
            found.extend(bad);
            if let Some(w) = image {
                if !images.insert(w.clone()) {
                    found.push(Counterexample::new(
                        format!("n={n}"),
                        "distinct images",
                        format!("repeated {w}"),
                    ));
                }
            }
        }
        if let Some(missed) = words.iter().find(|w| !images.contains(*w)) {
            found.push(Counterexample::new(
                missed,
                "in image of to_dyck",
                "not hit",
            ));
        }

        // Joint symmetry of (lrmax, blocks) and (lrmax, n - ldes(p^-1)).
        let mut dist = JointDistribution::new(n);
        for p in &perms {
            dist.add(DistKey {
                rises: lrmax(p),
                p: blocks(p),
                q: n - ldes(&p.inverse()),
            });
        }
        for (key, count, swapped) in dist.asymmetries() {
            found.push(Counterexample::new(
                format!("n={n} perm {key}"),
                format!("count {swapped}"),
                format!("count {count}"),
            ));
        }
    }
    VerificationReport::build(Check::Bijection, opts, instances, found)
}

pub fn check_duality(opts: &VerifyOptions) -> VerificationReport {
    let (instances, found) = for_all_words(opts, |w| {
        let n = w.semilength();
        let rc = w.reverse_complement();
        let s = w.steps();
        let mut bad = Vec::new();
        if !is_dyck(rc.steps()) {
            bad.push(Counterexample::new(w, "valid reverse complement", &rc));
        }
        let expected = n - stats::ldr(s);
        let fdf = stats::fdf(rc.steps());
        if fdf != expected {
            bad.push(Counterexample::new(
                w,
                format!("fdf(rev) {expected}"),
                format!("fdf(rev) {fdf}"),
            ));
        }
        let (r, rr) = (stats::returns(s), stats::returns(rc.steps()));
        if r != rr {
            bad.push(Counterexample::new(
                w,
                format!("returns(rev) {r}"),
                format!("returns(rev) {rr}"),
            ));
        }
        bad
    });
    VerificationReport::build(Check::Duality, opts, instances, found)
}

/// Word counts against the Catalan recurrence, and distinctness of the
/// generated words.
pub fn check_enumeration(opts: &VerifyOptions) -> VerificationReport {
    let mut instances = 0;
    let mut found = Vec::new();
    for n in 0..=opts.max_n {
        let mut count = 0u64;
        let mut previous: Option<DyckWord> = None;
        for w in enumerate_dyck(n) {
            count += 1;
            if w.semilength() != n || !is_dyck(w.steps()) {
                found.push(Counterexample::new(
                    &w,
                    format!("Dyck word of semilength {n}"),
                    "invalid",
                ));
            }
            if let Some(prev) = &previous {
                if prev >= &w {
                    found.push(Counterexample::new(
                        &w,
                        format!("after {prev}"),
                        "out of order",
                    ));
                }
            }
            previous = Some(w);
        }
        instances += count;
        if count != catalan(n) {
            found.push(Counterexample::new(format!("n={n}"), catalan(n), count));
        }
    }
    VerificationReport::build(Check::Enumeration, opts, instances, found)
}

pub fn run_checks(checks: &[Check], opts: &VerifyOptions) -> Vec<VerificationReport> {
    checks.iter().map(|c| c.run(opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distribution_semilength_three() {
        let d = joint_distribution(3);
        let expect = [
            (vec![1], 1, 1),
            (vec![1, 2], 1, 2),
            (vec![1, 3], 2, 2),
            (vec![1, 2], 2, 1),
            (vec![1, 2, 3], 3, 3),
        ];
        assert_eq!(d.entries.len(), 5);
        for (rises, p, q) in expect {
            assert_eq!(d.get(&rises, p, q), 1, "{rises:?} {p} {q}");
        }
        assert!(d.asymmetries().is_empty());
    }

    #[test]
    fn distribution_trivial_sizes() {
        let d = joint_distribution(0);
        assert_eq!(d.entries.len(), 1);
        assert_eq!(d.get(&[], 0, 0), 1);
        let d = joint_distribution(1);
        assert_eq!(d.entries.len(), 1);
        assert_eq!(d.get(&[1], 1, 1), 1);
    }

    #[test]
    fn asymmetry_is_detected() {
        let mut d = JointDistribution::new(2);
        d.add(DistKey {
            rises: vec![1],
            p: 1,
            q: 2,
        });
        let a = d.asymmetries();
        assert_eq!(a.len(), 1);
        assert_eq!((a[0].1, a[0].2), (1, 0));
    }

    #[test]
    fn serializes_sorted() {
        let json = serde_json::to_string(&joint_distribution(2)).unwrap();
        assert_eq!(
            json,
            r#"{"semilength":2,"entries":[{"rises":[1],"p":1,"q":1,"count":1},{"rises":[1,2],"p":2,"q":2,"count":1}]}"#
        );
    }

    #[test]
    fn small_reports_pass() {
        let opts = VerifyOptions::new(5);
        for check in Check::ALL {
            let r = check.run(&opts);
            assert!(r.passed, "{r:?}");
            assert_eq!(
                r.instances_checked,
                1 + 1 + 2 + 5 + 14 + 42,
                "{}",
                r.check_name
            );
        }
    }

    #[test]
    fn report_truncates_but_counts() {
        let opts = VerifyOptions {
            max_counterexamples: 2,
            ..VerifyOptions::new(3)
        };
        let found = (0..5)
            .rev()
            .map(|i| Counterexample::new(i, "x", "y"))
            .collect();
        let r = VerificationReport::build(Check::Duality, &opts, 9, found);
        assert!(!r.passed);
        assert_eq!(r.total_counterexamples, 5);
        assert_eq!(r.counterexamples.len(), 2);
        assert_eq!(r.counterexamples[0].input, "0");
    }

    #[test]
    fn search_counts_avoiders() {
        let counts: Vec<usize> = (0..=8).map(|n| avoiders_by_search(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 5, 14, 42, 132, 429, 1430]);
        assert!(avoiders_by_search(6).iter().all(|p| p.is_321_avoiding()));
    }

    #[test]
    fn check_names_parse() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        assert!("nope".parse::<Check>().is_err());
    }
}
