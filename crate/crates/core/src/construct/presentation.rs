//! Finite presentations, HLT coset enumeration and presentation verification.

use std::fmt;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// A word in the generators: letter `k > 0` is generator `k-1`, `-k` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<i32>);

impl Word {
    /// `gen^exp` repeated; `power` of the whole word.
    pub fn power(&self, exp: i64) -> Word {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        Word(
            std::iter::repeat(base.0)
                .take(exp.unsigned_abs() as usize)
                .flatten()
                .collect(),
        )
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&l| -l).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn gen(k: usize) -> Word {
        Word(vec![k as i32 + 1])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Evaluates left to right with `images[k]` for generator `k`.
    pub fn evaluate(&self, images: &[Permutation], degree: usize) -> Permutation {
        let invs: Vec<Permutation> = images.iter().map(|p| p.inverse()).collect();
        self.0.iter().fold(Permutation::identity(degree), |acc, &l| {
            let k = l.unsigned_abs() as usize - 1;
            if l > 0 {
                acc.then(&images[k])
            } else {
                acc.then(&invs[k])
            }
        })
    }

    /// Generic evaluation in any monoid given generator images and their inverses.
    pub fn fold<T, F: Fn(T, &T) -> T>(&self, identity: T, gens: &[T], invs: &[T], mul: F) -> T {
        self.0.iter().fold(identity, |acc, &l| {
            let k = l.unsigned_abs() as usize - 1;
            mul(acc, if l > 0 { &gens[k] } else { &invs[k] })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::arg("a presentation needs at least one generator"));
        }
        for r in &relators {
            if r.is_empty() {
                return Err(Error::arg("relators must be nonempty words"));
            }
            if r.0.iter().any(|&l| l == 0 || l.unsigned_abs() as usize > generators.len()) {
                return Err(Error::arg("relator uses an undeclared generator"));
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    /// Generator names plus relators written like `"a^2; b^3; (a b)^5"`.
    pub fn parse(generators: &[&str], relators: &str) -> Result<Self> {
        let names: Vec<String> = generators.iter().map(|s| s.to_string()).collect();
        let words = relators
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| parse_word(&names, s))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(names, words)
    }

    /// The file format: first non-comment line lists generators, then one relator per line.
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: "missing generator line".into(),
            })?;
        let names: Vec<String> = header
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect();
        let words = lines
            .map(|l| parse_word(&names, l))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(names, words)
    }

    pub fn parse_word(&self, s: &str) -> Result<Word> {
        parse_word(&self.generators, s)
    }

    pub fn format_word(&self, w: &Word) -> String {
        w.0.iter()
            .map(|&l| {
                let name = &self.generators[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    name.clone()
                } else {
                    format!("{name}^-1")
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.generators.join(" "))?;
        for r in &self.relators {
            writeln!(f, "{}", self.format_word(r))?;
        }
        Ok(())
    }
}

/// Tokens: generator names, `^k` exponents (possibly negative), parentheses.
fn parse_word(names: &[String], s: &str) -> Result<Word> {
    let chars: Vec<char> = s.chars().collect();
    let mut pos = 0;
    let w = parse_seq(names, &chars, &mut pos)?;
    skip_ws(&chars, &mut pos);
    if pos != chars.len() {
        return Err(Error::Parse {
            pos,
            msg: format!("unexpected {:?} in word {s:?}", chars[pos]),
        });
    }
    Ok(w)
}

fn skip_ws(chars: &[char], pos: &mut usize) {
    while *pos < chars.len() && (chars[*pos].is_whitespace() || chars[*pos] == '*') {
        *pos += 1;
    }
}

fn parse_seq(names: &[String], chars: &[char], pos: &mut usize) -> Result<Word> {
    let mut out = Word(Vec::new());
    loop {
        skip_ws(chars, pos);
        if *pos >= chars.len() || chars[*pos] == ')' {
            return Ok(out);
        }
        let atom = if chars[*pos] == '(' {
            *pos += 1;
            let inner = parse_seq(names, chars, pos)?;
            skip_ws(chars, pos);
            if *pos >= chars.len() || chars[*pos] != ')' {
                return Err(Error::Parse {
                    pos: *pos,
                    msg: "expected ')'".into(),
                });
            }
            *pos += 1;
            inner
        } else {
            let start = *pos;
            while *pos < chars.len() && (chars[*pos].is_alphanumeric() || chars[*pos] == '_') {
                *pos += 1;
            }
            let name: String = chars[start..*pos].iter().collect();
            let k = names.iter().position(|n| *n == name).ok_or_else(|| Error::Parse {
                pos: start,
                msg: format!("unknown generator {name:?}"),
            })?;
            Word::gen(k)
        };
        let mut exp = 1i64;
        if *pos < chars.len() && chars[*pos] == '^' {
            *pos += 1;
            let start = *pos;
            if *pos < chars.len() && chars[*pos] == '-' {
                *pos += 1;
            }
            while *pos < chars.len() && chars[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let digits: String = chars[start..*pos].iter().collect();
            exp = digits.parse().map_err(|_| Error::Parse {
                pos: start,
                msg: format!("bad exponent {digits:?}"),
            })?;
        }
        out = out.concat(&atom.power(exp));
    }
}

/// Result of a complete coset enumeration.
#[derive(Clone, Debug)]
pub struct CosetTable {
    /// `table[c][2k]` = c·g_k, `table[c][2k+1]` = c·g_k^-1; coset 0 is the subgroup.
    pub table: Vec<Vec<u32>>,
    /// Total cosets defined during the run, including ones later merged.
    pub cosets_defined: usize,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.table.len()
    }

    /// The permutation induced by each generator on the cosets.
    pub fn generator_permutations(&self) -> Vec<Permutation> {
        let ngens = self.table.first().map_or(0, |r| r.len() / 2);
        (0..ngens)
            .map(|k| {
                Permutation::from_images(self.table.iter().map(|row| row[2 * k]).collect())
                    .expect("complete coset table columns are bijections")
            })
            .collect()
    }

    pub fn group(&self) -> Result<PermGroup> {
        PermGroup::new(self.index(), self.generator_permutations())
    }
}

const UNDEF: u32 = u32::MAX;

struct Enumerator<'a> {
    ncols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    budget: usize,
    relators: Vec<Vec<usize>>,
    queue: Vec<u32>,
    _p: std::marker::PhantomData<&'a ()>,
}

fn column(letter: i32) -> usize {
    let k = letter.unsigned_abs() as usize - 1;
    if letter > 0 {
        2 * k
    } else {
        2 * k + 1
    }
}

#[inline]
fn inv_col(c: usize) -> usize {
    c ^ 1
}

impl Enumerator<'_> {
    fn n(&self) -> usize {
        self.parent.len()
    }

    fn get(&self, c: u32, col: usize) -> u32 {
        self.table[c as usize * self.ncols + col]
    }

    fn set(&mut self, c: u32, col: usize, v: u32) {
        self.table[c as usize * self.ncols + col] = v;
    }

    fn define(&mut self, c: u32, col: usize) -> Result<()> {
        if self.n() >= self.budget {
            return Err(Error::BudgetExhausted {
                budget: self.budget,
            });
        }
        let d = self.n() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.ncols));
        self.set(c, col, d);
        self.set(d, inv_col(col), c);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut x = c;
        while self.parent[x as usize] != root {
            let next = self.parent[x as usize];
            self.parent[x as usize] = root;
            x = next;
        }
        root
    }

    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for col in 0..self.ncols {
                let d = self.get(g, col);
                if d == UNDEF {
                    continue;
                }
                // only clear the back pointer if it still points at g
                if self.get(d, inv_col(col)) == g {
                    self.set(d, inv_col(col), UNDEF);
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mu_x = self.get(mu, col);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x);
                } else {
                    let nu_inv = self.get(nu, inv_col(col));
                    if nu_inv != UNDEF {
                        self.merge(mu, nu_inv);
                    } else {
                        self.set(mu, col, nu);
                        self.set(nu, inv_col(col), mu);
                    }
                }
            }
        }
    }

    fn scan_and_fill(&mut self, alpha: u32, word: &[usize]) -> Result<()> {
        let k = word.len();
        let mut f = alpha;
        let mut b = alpha;
        let mut i = 0usize;
        let mut j = k; // exclusive upper end: letters i..j remain
        loop {
            while i < j && self.get(f, word[i]) != UNDEF {
                f = self.get(f, word[i]);
                i += 1;
            }
            if i == j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j > i && self.get(b, inv_col(word[j - 1])) != UNDEF {
                b = self.get(b, inv_col(word[j - 1]));
                j -= 1;
            }
            if j == i {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i + 1 {
                self.set(f, word[i], b);
                self.set(b, inv_col(word[i]), f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }
}

/// HLT enumeration of the cosets of `<subgroup>` in the presented group.
///
/// Fails with [`Error::BudgetExhausted`] if more than `budget` cosets are needed; that means
/// the enumeration was inconclusive, not that the index is infinite.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Word], budget: usize) -> Result<CosetTable> {
    if budget == 0 {
        return Err(Error::arg("coset budget must be positive"));
    }
    let ncols = 2 * p.generators.len();
    let mut e = Enumerator {
        ncols,
        table: vec![UNDEF; ncols],
        parent: vec![0],
        budget,
        relators: p
            .relators
            .iter()
            .map(|w| w.0.iter().map(|&l| column(l)).collect())
            .collect(),
        queue: Vec::new(),
        _p: std::marker::PhantomData,
    };
    for w in subgroup {
        let cols: Vec<usize> = w.0.iter().map(|&l| column(l)).collect();
        if !cols.is_empty() {
            e.scan_and_fill(0, &cols)?;
        }
    }
    let relators = std::mem::take(&mut e.relators);
    let mut alpha = 0u32;
    while (alpha as usize) < e.n() {
        for r in &relators {
            if !e.alive(alpha) {
                break;
            }
            e.scan_and_fill(alpha, r)?;
        }
        if e.alive(alpha) {
            for col in 0..ncols {
                if !e.alive(alpha) {
                    break;
                }
                if e.get(alpha, col) == UNDEF {
                    e.define(alpha, col)?;
                }
            }
        }
        alpha += 1;
    }

    let live: Vec<u32> = (0..e.n() as u32).filter(|&c| e.alive(c)).collect();
    let mut renumber = vec![UNDEF; e.n()];
    for (k, &c) in live.iter().enumerate() {
        renumber[c as usize] = k as u32;
    }
    let table = live
        .iter()
        .map(|&c| {
            (0..ncols)
                .map(|col| {
                    let d = e.get(c, col);
                    debug_assert!(d != UNDEF && e.alive(d));
                    renumber[d as usize]
                })
                .collect()
        })
        .collect();
    Ok(CosetTable {
        table,
        cosets_defined: e.n(),
    })
}

pub const DEFAULT_TC_BUDGET: usize = 1_000_000;

/// Which of the three verification conditions held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationCheck {
    pub relators_hold: bool,
    pub images_generate: bool,
    /// `None` when coset enumeration ran out of budget.
    pub enumerated_index: Option<u64>,
    pub target_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Failed,
    Inconclusive,
}

impl PresentationCheck {
    pub fn verdict(&self) -> Verdict {
        if !self.relators_hold || !self.images_generate {
            return Verdict::Failed;
        }
        match self.enumerated_index {
            None => Verdict::Inconclusive,
            Some(i) if i == self.target_order => Verdict::Verified,
            Some(_) => Verdict::Failed,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.verdict() == Verdict::Verified
    }
}

/// A presentation proven to define `target` via `gen_images`.
#[derive(Clone, Debug)]
pub struct VerifiedPresentation {
    presentation: Presentation,
    target: PermGroup,
    gen_images: Vec<Permutation>,
}

impl VerifiedPresentation {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn target(&self) -> &PermGroup {
        &self.target
    }

    pub fn gen_images(&self) -> &[Permutation] {
        &self.gen_images
    }

    /// The target regenerated by the images, so its generator list matches the presentation.
    pub fn presented_group(&self) -> PermGroup {
        self.target
            .subgroup(self.gen_images.clone())
            .expect("images have the target degree")
    }
}

/// Checks that the relators hold on the images, the images generate `target`, and coset
/// enumeration over the trivial subgroup yields exactly `|target|` cosets.
pub fn check_presentation(
    p: &Presentation,
    target: &PermGroup,
    gen_images: &[Permutation],
    budget: usize,
) -> Result<PresentationCheck> {
    if gen_images.len() != p.generators.len() {
        return Err(Error::arg("one image per generator is required"));
    }
    for x in gen_images {
        if x.degree() != target.degree() {
            return Err(Error::DegreeMismatch {
                expected: target.degree(),
                found: x.degree(),
            });
        }
    }
    let relators_hold = p
        .relators
        .iter()
        .all(|r| r.evaluate(gen_images, target.degree()).is_identity());
    let generated = target.subgroup(gen_images.to_vec())?;
    let images_generate =
        generated.order() == target.order() && generated.is_subgroup_of(target);
    let enumerated_index = match todd_coxeter(p, &[], budget) {
        Ok(t) => Some(t.index() as u64),
        Err(Error::BudgetExhausted { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(PresentationCheck {
        relators_hold,
        images_generate,
        enumerated_index,
        target_order: target.order(),
    })
}

pub fn verify_presentation(
    p: &Presentation,
    target: &PermGroup,
    gen_images: &[Permutation],
) -> Result<VerifiedPresentation> {
    verify_presentation_within(p, target, gen_images, DEFAULT_TC_BUDGET)
}

/// [`verify_presentation`] with an explicit coset budget.
pub fn verify_presentation_within(
    p: &Presentation,
    target: &PermGroup,
    gen_images: &[Permutation],
    budget: usize,
) -> Result<VerifiedPresentation> {
    let check = check_presentation(p, target, gen_images, budget)?;
    match check.verdict() {
        Verdict::Verified => Ok(VerifiedPresentation {
            presentation: p.clone(),
            target: target.clone(),
            gen_images: gen_images.to_vec(),
        }),
        Verdict::Inconclusive => Err(Error::BudgetExhausted { budget }),
        Verdict::Failed => Err(Error::UnverifiedPresentation(format!("{check:?}"))),
    }
}
