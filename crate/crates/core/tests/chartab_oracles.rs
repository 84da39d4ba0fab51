mod common;

use common::{group, CORPUS};
use num_rational::Ratio;
use so5_core::{character_table, CharacterTable, Cyclotomic};

fn int(n: i128) -> Cyclotomic {
    Cyclotomic::int(n)
}

fn tables() -> Vec<(&'static str, std::sync::Arc<CharacterTable>)> {
    CORPUS
        .iter()
        .map(|e| (*e, character_table(&group(e)).unwrap_or_else(|err| panic!("{e}: {err}"))))
        .collect()
}

fn class_sum(t: &CharacterTable, f: impl Fn(usize) -> Cyclotomic) -> Cyclotomic {
    (0..t.len()).fold(Cyclotomic::zero(), |acc, j| {
        &acc + &f(j).scale(Ratio::from_integer(t.classes.sizes[j] as i128))
    })
}

/// Elementary symmetric polynomial e_d of the eigenvalues from power sums χ(g^k).
fn det_by_newton(t: &CharacterTable, row: usize, class: usize) -> Cyclotomic {
    let d = t.degrees[row] as usize;
    let p: Vec<Cyclotomic> = (0..=d)
        .map(|k| t.value(row, t.classes.power_class(class, k as i64)).clone())
        .collect();
    let mut e = vec![Cyclotomic::one()];
    for k in 1..=d {
        let mut acc = Cyclotomic::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(Ratio::new(1, k as i128)));
    }
    e[d].clone()
}

#[test]
fn tables_satisfy_orthogonality_and_degree_sum() {
    for (expr, t) in tables() {
        let order = t.order() as i128;
        assert!(t.verify(), "{expr}");
        assert_eq!(t.len(), t.classes.len(), "{expr}: square table");
        let sq: u64 = t.degrees.iter().map(|d| d * d).sum();
        assert_eq!(sq, t.order(), "{expr}");
        for a in 0..t.len() {
            assert_eq!(t.value(a, 0), &int(t.degrees[a] as i128), "{expr}");
            for b in 0..t.len() {
                let s = class_sum(&t, |j| t.value(a, j) * &t.value(b, j).conj());
                let want = if a == b { int(order) } else { Cyclotomic::zero() };
                assert_eq!(s, want, "{expr}: rows {a},{b}");
            }
        }
        for j in 0..t.len() {
            for k in 0..t.len() {
                let s = (0..t.len()).fold(Cyclotomic::zero(), |acc, r| {
                    &acc + &(t.value(r, j) * &t.value(r, k).conj())
                });
                let want = if j == k {
                    int(t.classes.centralizer_order(j) as i128)
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(s, want, "{expr}: columns {j},{k}");
            }
        }
    }
}

#[test]
fn indicators_by_direct_summation() {
    for (expr, t) in tables() {
        for r in 0..t.len() {
            let s = class_sum(&t, |j| t.value(r, t.classes.power_class(j, 2)).clone());
            let nu = s.scale(Ratio::new(1, t.order() as i128));
            assert_eq!(nu, int(t.fs_indicator(r) as i128), "{expr}: row {r}");
        }
    }
}

#[test]
fn determinants_by_newton_identities() {
    for (expr, t) in tables() {
        for r in 0..t.len() {
            let det = t.det_character(r);
            for j in 0..t.len() {
                assert_eq!(det_by_newton(&t, r, j), det[j], "{expr}: row {r} class {j}");
            }
        }
    }
}

#[test]
fn permutation_character_decomposes() {
    for (expr, t) in tables() {
        let g = group(expr);
        let fixed: Vec<Cyclotomic> = t
            .classes
            .representatives
            .iter()
            .map(|x| int((0..g.degree()).filter(|&p| x.image(p) == p).count() as i128))
            .collect();
        let mult = t.decompose(&fixed);
        for m in &mult {
            assert!(m.to_integer().is_some_and(|v| v >= 0), "{expr}: {m}");
        }
        // trivial constituent counts orbits
        let mut seen = vec![false; g.degree()];
        let mut orbits = 0;
        for p in 0..g.degree() {
            if !seen[p] {
                orbits += 1;
                for q in g.orbit(p) {
                    seen[q] = true;
                }
            }
        }
        let triv = (0..t.len()).find(|&r| t.degrees[r] == 1 && (0..t.len()).all(|j| t.value(r, j) == &int(1)));
        assert_eq!(mult[triv.unwrap()], int(orbits), "{expr}");
    }
}

#[test]
fn known_degree_patterns() {
    let degrees = |e: &str| {
        let mut d = character_table(&group(e)).unwrap().degrees.clone();
        d.sort_unstable();
        d
    };
    assert_eq!(degrees("alt(5)"), [1, 3, 3, 4, 5]);
    assert_eq!(degrees("sym(5)"), [1, 1, 4, 4, 5, 5, 6]);
    assert_eq!(degrees("alt(6)"), [1, 5, 5, 8, 8, 9, 10]);
    assert_eq!(degrees("psl2(7)"), [1, 3, 3, 6, 7, 8]);
    assert_eq!(degrees("binary_icosahedral"), [1, 2, 2, 3, 3, 4, 4, 5, 6]);
    assert_eq!(degrees("q8"), [1, 1, 1, 1, 2]);

    let q8 = character_table(&group("q8")).unwrap();
    let two = (0..q8.len()).find(|&r| q8.degrees[r] == 2).unwrap();
    assert_eq!(q8.fs_indicator(two), -1);
    let a5 = character_table(&group("alt(5)")).unwrap();
    assert!((0..a5.len()).all(|r| a5.fs_indicator(r) == 1));
    let p27 = character_table(&group("psl2(7)")).unwrap();
    let threes: Vec<i8> = (0..p27.len())
        .filter(|&r| p27.degrees[r] == 3)
        .map(|r| p27.fs_indicator(r))
        .collect();
    assert_eq!(threes, [0, 0]);
}
