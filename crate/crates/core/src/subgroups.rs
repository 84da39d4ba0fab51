//! Centralizers, normal closures, derived and lower central series, Sylow subgroups,
//! p-cores and the Fitting subgroup.

use crate::classes::is_prime;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;

/// Smallest subgroup of `g` containing `elements`, generated greedily in input order.
pub fn subgroup_from_elements<'a, I>(g: &PermGroup, elements: I) -> Result<PermGroup>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut gens: Vec<Permutation> = Vec::new();
    let mut h = g.subgroup(Vec::new())?;
    for x in elements {
        if !h.has(x) {
            gens.push(x.clone());
            h = g.subgroup(gens.clone())?;
        }
    }
    Ok(h)
}

pub fn centralizer(g: &PermGroup, s: &[Permutation]) -> Result<PermGroup> {
    let els = g.elements_within(g.limits().enumeration)?;
    let filtered: Vec<&Permutation> = els
        .iter()
        .filter(|x| s.iter().all(|y| x.commutes_with(y)))
        .collect();
    subgroup_from_elements(g, filtered)
}

pub fn center(g: &PermGroup) -> Result<PermGroup> {
    centralizer(g, g.generators())
}

/// Elements of `g` normalizing the subgroup `h`.
pub fn normalizer(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let els = g.elements_within(g.limits().enumeration)?;
    let filtered: Vec<&Permutation> = els
        .iter()
        .filter(|x| h.generators().iter().all(|y| h.has(&y.conjugate_by(x))))
        .collect();
    subgroup_from_elements(g, filtered)
}

pub fn intersection(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let (small, large) = if a.order() <= b.order() { (a, b) } else { (b, a) };
    let els = small.elements_within(small.limits().enumeration)?;
    let filtered: Vec<&Permutation> = els.iter().filter(|x| large.has(x)).collect();
    subgroup_from_elements(small, filtered)
}

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure(g: &PermGroup, s: &[Permutation]) -> Result<PermGroup> {
    let mut gens: Vec<Permutation> = s.iter().filter(|x| !x.is_identity()).cloned().collect();
    let mut n = g.subgroup(gens.clone())?;
    let mut i = 0;
    while i < gens.len() {
        let x = gens[i].clone();
        for t in g.generators() {
            let y = x.conjugate_by(t);
            if !n.has(&y) {
                gens.push(y);
                n = g.subgroup(gens.clone())?;
            }
        }
        i += 1;
    }
    Ok(n)
}

fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    a.inverse().then(&b.inverse()).then(a).then(b)
}

/// `[n, g]` for `n` normal in `g`.
pub fn commutator_subgroup(g: &PermGroup, n: &PermGroup, m: &PermGroup) -> Result<PermGroup> {
    let comms: Vec<Permutation> = n
        .generators()
        .iter()
        .flat_map(|a| m.generators().iter().map(move |b| commutator(a, b)))
        .collect();
    normal_closure(g, &comms)
}

pub fn derived_subgroup(g: &PermGroup) -> Result<PermGroup> {
    commutator_subgroup(g, g, g)
}

pub fn derived_series(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = derived_subgroup(last)?;
        if next.order() == last.order() {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn lower_central_series(g: &PermGroup) -> Result<Vec<PermGroup>> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("nonempty");
        let next = commutator_subgroup(g, last, g)?;
        if next.order() == last.order() {
            return Ok(series);
        }
        series.push(next);
    }
}

pub fn is_perfect(g: &PermGroup) -> Result<bool> {
    Ok(derived_subgroup(g)?.order() == g.order())
}

pub fn is_solvable(g: &PermGroup) -> Result<bool> {
    Ok(derived_series(g)?.last().expect("nonempty").order() == 1)
}

pub fn is_nilpotent(g: &PermGroup) -> Result<bool> {
    Ok(lower_central_series(g)?.last().expect("nonempty").order() == 1)
}

/// Last term of the derived series.
pub fn solvable_residual(g: &PermGroup) -> Result<PermGroup> {
    Ok(derived_series(g)?.pop().expect("nonempty"))
}

pub fn p_part(order: u64, p: u64) -> u64 {
    let mut n = order;
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut m = n;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// A Sylow p-subgroup, grown one normalizer step at a time.
pub fn sylow(g: &PermGroup, p: u64) -> Result<PermGroup> {
    if !is_prime(p) {
        return Err(Error::arg(format!("{p} is not prime")));
    }
    let target = p_part(g.order(), p);
    g.check_order(g.limits().enumeration)?;
    let mut current = g.subgroup(Vec::new())?;
    while current.order() < target {
        let n = normalizer(g, &current)?;
        let n_els = n.elements_within(g.limits().enumeration)?;
        // x has order p modulo `current`, so <current, x> is p times larger.
        let x = n_els
            .iter()
            .find(|x| !current.has(x) && current.has(&x.pow(p as i64)))
            .cloned()
            .ok_or_else(|| Error::Unsupported("no p-element in the normalizer quotient".into()))?;
        let mut gens = current.generators().to_vec();
        gens.push(x);
        current = g.subgroup(gens)?;
    }
    Ok(current)
}

/// Largest normal subgroup of `g` contained in `h`.
pub fn core(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let mut c = h.clone();
    loop {
        let mut changed = false;
        for s in g.generators() {
            let conj = g.subgroup(c.generators().iter().map(|x| x.conjugate_by(s)).collect())?;
            if !conj.same_group(&c) {
                c = intersection(&c, &conj)?;
                changed = true;
            }
        }
        if !changed {
            return Ok(c);
        }
    }
}

pub fn p_core(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let s = sylow(g, p)?;
    core(g, &s)
}

pub fn fitting(g: &PermGroup) -> Result<PermGroup> {
    let mut gens = Vec::new();
    for p in prime_divisors(g.order()) {
        gens.extend(p_core(g, p)?.generators().iter().cloned());
    }
    g.subgroup(gens)
}

/// `<a, b>` for two subgroups of the same group.
pub fn join(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let mut gens = a.generators().to_vec();
    gens.extend(b.generators().iter().cloned());
    a.subgroup(gens)
}

/// `g` modulo a normal subgroup, realized on the cosets of `n`.
///
/// The returned group acts faithfully on the right cosets; the second component maps each
/// generator of `g` to its image.
pub fn quotient(g: &PermGroup, n: &PermGroup) -> Result<(PermGroup, Vec<Permutation>)> {
    let els = g.elements_within(g.limits().enumeration)?;
    let n_els = n.elements_within(g.limits().enumeration)?;
    let mut coset_of = vec![usize::MAX; els.len()];
    let mut reps: Vec<usize> = Vec::new();
    for i in 0..els.len() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let c = reps.len();
        reps.push(i);
        for m in n_els.iter() {
            let j = els.index_of(&m.then(els.get(i))).expect("closed");
            coset_of[j] = c;
        }
    }
    let k = reps.len();
    let images: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|s| {
            let imgs: Vec<u32> = reps
                .iter()
                .map(|&r| {
                    let j = els.index_of(&els.get(r).then(s)).expect("closed");
                    coset_of[j] as u32
                })
                .collect();
            Permutation::from_images(imgs)
        })
        .collect::<Result<_>>()?;
    let q = PermGroup::new(k.max(1), if k == 0 { vec![] } else { images.clone() })?
        .with_limits(g.limits());
    Ok((q, images))
}
