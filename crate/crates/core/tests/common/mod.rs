#![allow(dead_code)]

use std::collections::HashSet;

use so5_core::{build, PermGroup, Permutation};

/// Groups from every constructor family at small parameters.
pub const CORPUS: &[&str] = &[
    "cyclic(1)",
    "cyclic(2)",
    "cyclic(5)",
    "cyclic(12)",
    "dihedral(3)",
    "dihedral(4)",
    "dihedral(5)",
    "dihedral(6)",
    "sym(3)",
    "sym(4)",
    "sym(5)",
    "alt(4)",
    "alt(5)",
    "alt(6)",
    "q8",
    "elem_ab(2,3)",
    "elem_ab(3,2)",
    "binary_dihedral(8)",
    "binary_dihedral(12)",
    "binary_dihedral(20)",
    "binary_tetrahedral",
    "binary_octahedral",
    "binary_icosahedral",
    "psl2(7)",
    "psl27_presented",
    "product(sym(3), cyclic(2))",
    "product(alt(4), cyclic(3))",
    "product(alt(5), cyclic(2))",
    "semidirect(elem_ab(2,4), alt(5), deleted_perm)",
    "semidirect(elem_ab(2,4), alt(5), natural_sl24)",
    "semidirect(cyclic(5), cyclic(4), dihedral_inv)",
    "wreath_z2(2)",
    "wreath_z2(3)",
    "weyl_w0",
    "milnor_Q(3,1,1)",
    "milnor_Q(5,3,1)",
    "question_group(3,1)",
    "central_product(q8, q8)",
    "central_product(binary_tetrahedral, q8)",
    "simplex_s6",
    "from_perms(\"(1 2 3 4 5 6 7)\", \"(2 3 5)(4 7 6)\")",
];

pub fn group(expr: &str) -> PermGroup {
    build(expr).unwrap_or_else(|e| panic!("{expr}: {e}"))
}

/// All elements by breadth-first closure under the generators.
pub fn closure(g: &PermGroup) -> HashSet<Permutation> {
    let id = g.identity();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for s in g.generators() {
            let y = x.then(s);
            if seen.insert(y.clone()) {
                queue.push(y);
            }
        }
    }
    seen
}
