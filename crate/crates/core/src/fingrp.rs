//! Finite groups by multiplication table, homomorphisms, and the finite limits of
//! the category of groups (products, equalizers, pullbacks).
//!
//! Elements are dense indices `0..n`. Constructed groups order their elements
//! lexicographically by their tuple encoding, so tables are reproducible.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Default hard cap on group orders, keeping exhaustive diagram checks tractable.
pub const DEFAULT_MAX_ORDER: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is empty")]
    Empty,
    #[error("table is not square: row {row} has {len} entries, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("entry {value} at ({row}, {col}) is out of range")]
    OutOfRange { row: usize, col: usize, value: usize },
    #[error("not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("no identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("not associative: ({a}·{b})·{c} ≠ {a}·({b}·{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("group order {order} exceeds the cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("generator {0} is not a bijection on {1} points")]
    NotBijection(usize, usize),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("signature mismatch: {0}")]
    Mismatch(String),
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
    names: Option<Vec<String>>,
    permutations: Option<Vec<Vec<usize>>>,
}

/// Groups are equal when their tables are; labels are presentation only.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<FiniteGroup, GroupError> {
        FiniteGroup::from_table_capped(table, names, DEFAULT_MAX_ORDER)
    }

    /// Validate a table: squareness, range, Latin square, identity, inverses,
    /// associativity, in that order. The first violated axiom is reported.
    pub fn from_table_capped(
        table: Vec<Vec<usize>>,
        names: Option<Vec<String>>,
        max_order: usize,
    ) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        if n > max_order {
            return Err(GroupError::TooLarge {
                order: n,
                cap: max_order,
            });
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::NotSquare {
                    row: r,
                    len: row.len(),
                    order: n,
                });
            }
            if let Some((c, &v)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::OutOfRange {
                    row: r,
                    col: c,
                    value: v,
                });
            }
        }
        for r in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for c in 0..n {
                if std::mem::replace(&mut seen_row[table[r][c]], true) {
                    return Err(GroupError::NotLatinSquare(format!(
                        "value {} repeats in row {r}",
                        table[r][c]
                    )));
                }
                if std::mem::replace(&mut seen_col[table[c][r]], true) {
                    return Err(GroupError::NotLatinSquare(format!(
                        "value {} repeats in column {r}",
                        table[c][r]
                    )));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let y = (0..n)
                .find(|&y| table[x][y] == identity && table[y][x] == identity)
                .ok_or(GroupError::NoInverse(x))?;
            inverse.push(y);
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(GroupError::Mismatch(format!("{} names for {n} elements", names.len())));
            }
        }
        Ok(FiniteGroup {
            order: n,
            table: table.into_iter().flatten().collect(),
            identity,
            inverse,
            names,
            permutations: None,
        })
    }

    /// Trusted constructor for tables produced by this crate's constructions.
    fn from_flat_unchecked(order: usize, table: Vec<usize>, names: Option<Vec<String>>) -> Self {
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] == x))
            .expect("constructed table has an identity");
        let inverse = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| table[x * order + y] == identity)
                    .expect("constructed table has inverses")
            })
            .collect();
        FiniteGroup {
            order,
            table,
            identity,
            inverse,
            names,
            permutations: None,
        }
    }

    pub fn from_permutations(degree: usize, generators: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
        FiniteGroup::from_permutations_capped(degree, generators, DEFAULT_MAX_ORDER)
    }

    /// Closure of permutation generators (images of `0..degree`, zero-based).
    pub fn from_permutations_capped(
        degree: usize,
        generators: &[Vec<usize>],
        max_order: usize,
    ) -> Result<FiniteGroup, GroupError> {
        for (i, g) in generators.iter().enumerate() {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(GroupError::NotBijection(i, degree));
            }
        }
        let id: Vec<usize> = (0..degree).collect();
        let mut elements: BTreeSet<Vec<usize>> = BTreeSet::new();
        elements.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q = compose_perm(&p, g);
                if elements.insert(q.clone()) {
                    if elements.len() > max_order {
                        return Err(GroupError::TooLarge {
                            order: elements.len(),
                            cap: max_order,
                        });
                    }
                    queue.push_back(q);
                }
            }
        }
        let perms: Vec<Vec<usize>> = elements.into_iter().collect();
        let n = perms.len();
        let index = |p: &Vec<usize>| perms.binary_search(p).expect("closed under composition");
        let mut table = Vec::with_capacity(n * n);
        for a in &perms {
            for b in &perms {
                table.push(index(&compose_perm(a, b)));
            }
        }
        let names = perms
            .iter()
            .map(|p| format!("[{}]", p.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        let mut g = FiniteGroup::from_flat_unchecked(n, table, Some(names));
        g.permutations = Some(perms);
        Ok(g)
    }

    pub fn trivial() -> FiniteGroup {
        FiniteGroup::from_flat_unchecked(1, vec![0], Some(vec!["e".into()]))
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n > 0);
        let table = (0..n).flat_map(|a| (0..n).map(move |b| (a + b) % n)).collect();
        FiniteGroup::from_flat_unchecked(n, table, Some((0..n).map(|i| i.to_string()).collect()))
    }

    /// The symmetric group on `n` points as a permutation group.
    pub fn symmetric(n: usize) -> FiniteGroup {
        if n < 2 {
            return FiniteGroup::from_permutations(n, &[]).expect("trivial");
        }
        let transposition: Vec<usize> = {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(0, 1);
            p
        };
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        FiniteGroup::from_permutations(n, &[transposition, cycle]).expect("S_n within cap")
    }

    /// Dihedral group of order `2n` acting on the vertices of an `n`-gon.
    pub fn dihedral(n: usize) -> FiniteGroup {
        let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        FiniteGroup::from_permutations(n, &[rotation, reflection]).expect("D_n within cap")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn name(&self, a: usize) -> String {
        match &self.names {
            Some(n) => n[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// The permutation an element stands for, when the group was built from permutations.
    pub fn permutation(&self, a: usize) -> Option<&[usize]> {
        self.permutations.as_ref().map(|p| p[a].as_slice())
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    /// Conjugacy classes, each sorted, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for x in self.elements() {
            if seen[x] {
                continue;
            }
            let class: BTreeSet<usize> = self.elements().map(|g| self.conjugate(g, x)).collect();
            for &y in &class {
                seen[y] = true;
            }
            classes.push(class.into_iter().collect());
        }
        classes
    }

    /// Sorted elements of the subgroup generated by `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !std::mem::replace(&mut inside[y], true) {
                    queue.push_back(y);
                }
            }
        }
        self.elements().filter(|&x| inside[x]).collect()
    }

    /// Greedy generating set: scan elements in order, keep those not yet generated.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        for x in self.elements() {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.subgroup_generated(&gens);
            }
        }
        gens
    }
}

fn compose_perm(p: &[usize], q: &[usize]) -> Vec<usize> {
    // (p·q)(x) = p(q(x))
    q.iter().map(|&x| p[x]).collect()
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "group of order {}", self.order)
    }
}

/// A homomorphism between finite groups, as an image array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    dom: Arc<FiniteGroup>,
    cod: Arc<FiniteGroup>,
    map: Vec<usize>,
}

impl GroupHom {
    pub fn new(dom: Arc<FiniteGroup>, cod: Arc<FiniteGroup>, map: Vec<usize>) -> Result<GroupHom, GroupError> {
        check_hom(&dom, &cod, &map).map_err(GroupError::NotHomomorphism)?;
        Ok(GroupHom { dom, cod, map })
    }

    pub fn from_fn(
        dom: Arc<FiniteGroup>,
        cod: Arc<FiniteGroup>,
        f: impl Fn(usize) -> usize,
    ) -> Result<GroupHom, GroupError> {
        let map = dom.elements().map(f).collect();
        GroupHom::new(dom, cod, map)
    }

    pub fn identity(g: Arc<FiniteGroup>) -> GroupHom {
        let map = g.elements().collect();
        GroupHom {
            dom: g.clone(),
            cod: g,
            map,
        }
    }

    /// The homomorphism sending every element to the identity.
    pub fn trivial(dom: Arc<FiniteGroup>, cod: Arc<FiniteGroup>) -> GroupHom {
        let map = vec![cod.identity(); dom.order()];
        GroupHom { dom, cod, map }
    }

    pub fn dom(&self) -> &Arc<FiniteGroup> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FiniteGroup> {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GroupHom) -> Result<GroupHom, GroupError> {
        if *self.cod != *next.dom {
            return Err(GroupError::Mismatch("codomain does not match domain".into()));
        }
        Ok(GroupHom {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            map: self.map.iter().map(|&x| next.map[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.order()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.cod.order()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn kernel(&self) -> Vec<usize> {
        self.dom
            .elements()
            .filter(|&x| self.map[x] == self.cod.identity())
            .collect()
    }
}

/// Check that `map` is a homomorphism `dom → cod`; `Err` names the first bad pair.
pub fn check_hom(dom: &FiniteGroup, cod: &FiniteGroup, map: &[usize]) -> Result<(), String> {
    if map.len() != dom.order() {
        return Err(format!(
            "map has {} entries for a group of order {}",
            map.len(),
            dom.order()
        ));
    }
    if let Some(x) = map.iter().find(|&&y| y >= cod.order()) {
        return Err(format!("image {x} out of range"));
    }
    for a in dom.elements() {
        for b in dom.elements() {
            if map[dom.mul(a, b)] != cod.mul(map[a], map[b]) {
                return Err(format!("f({a}·{b}) ≠ f({a})·f({b})"));
            }
        }
    }
    Ok(())
}

/// `G × H` with elements `(g, h) ↦ g·|H| + h` and its two projections.
pub fn direct_product(g: &Arc<FiniteGroup>, h: &Arc<FiniteGroup>) -> (Arc<FiniteGroup>, GroupHom, GroupHom) {
    let (m, n) = (g.order(), h.order());
    let mut table = Vec::with_capacity(m * n * m * n);
    for a in 0..m * n {
        for b in 0..m * n {
            table.push(g.mul(a / n, b / n) * n + h.mul(a % n, b % n));
        }
    }
    let names = (0..m * n)
        .map(|x| format!("({},{})", g.name(x / n), h.name(x % n)))
        .collect();
    let prod = Arc::new(FiniteGroup::from_flat_unchecked(m * n, table, Some(names)));
    let p1 = GroupHom {
        dom: prod.clone(),
        cod: g.clone(),
        map: (0..m * n).map(|x| x / n).collect(),
    };
    let p2 = GroupHom {
        dom: prod.clone(),
        cod: h.clone(),
        map: (0..m * n).map(|x| x % n).collect(),
    };
    (prod, p1, p2)
}

/// Subgroup on a sorted, closed set of elements, with its inclusion.
pub fn subgroup(g: &Arc<FiniteGroup>, elements: &[usize]) -> Result<(Arc<FiniteGroup>, GroupHom), GroupError> {
    let index = |x: usize| elements.binary_search(&x).ok();
    let n = elements.len();
    let mut table = Vec::with_capacity(n * n);
    for &a in elements {
        for &b in elements {
            let i = index(g.mul(a, b))
                .ok_or_else(|| GroupError::Mismatch("subset not closed under multiplication".into()))?;
            table.push(i);
        }
    }
    if index(g.identity()).is_none() {
        return Err(GroupError::Mismatch("subset lacks the identity".into()));
    }
    let names = elements.iter().map(|&x| g.name(x)).collect();
    let mut sub = FiniteGroup::from_flat_unchecked(n, table, Some(names));
    if let Some(perms) = &g.permutations {
        sub.permutations = Some(elements.iter().map(|&x| perms[x].clone()).collect());
    }
    let sub = Arc::new(sub);
    let inclusion = GroupHom {
        dom: sub.clone(),
        cod: g.clone(),
        map: elements.to_vec(),
    };
    Ok((sub, inclusion))
}

/// The pullback `G ×_K H = {(g, h) : s(g) = t(h)}` with its projections.
#[derive(Clone, Debug)]
pub struct GroupPullback {
    pub group: Arc<FiniteGroup>,
    /// Element `i` of `group` is the pair `pairs[i]`, in lexicographic order.
    pub pairs: Vec<(usize, usize)>,
    pub p1: GroupHom,
    pub p2: GroupHom,
}

impl GroupPullback {
    pub fn index_of(&self, pair: (usize, usize)) -> Option<usize> {
        self.pairs.binary_search(&pair).ok()
    }
}

pub fn pullback(s: &GroupHom, t: &GroupHom) -> Result<GroupPullback, GroupError> {
    if *s.cod != *t.cod {
        return Err(GroupError::Mismatch("pullback legs have different codomains".into()));
    }
    let (g, h) = (&s.dom, &t.dom);
    let pairs: Vec<(usize, usize)> = g
        .elements()
        .flat_map(|a| h.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| s.apply(a) == t.apply(b))
        .collect();
    let n = pairs.len();
    let index = |p: (usize, usize)| pairs.binary_search(&p).expect("pullback is a subgroup");
    let mut table = Vec::with_capacity(n * n);
    for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            table.push(index((g.mul(a, c), h.mul(b, d))));
        }
    }
    let names = pairs
        .iter()
        .map(|&(a, b)| format!("({},{})", g.name(a), h.name(b)))
        .collect();
    let group = Arc::new(FiniteGroup::from_flat_unchecked(n, table, Some(names)));
    let p1 = GroupHom {
        dom: group.clone(),
        cod: g.clone(),
        map: pairs.iter().map(|p| p.0).collect(),
    };
    let p2 = GroupHom {
        dom: group.clone(),
        cod: h.clone(),
        map: pairs.iter().map(|p| p.1).collect(),
    };
    Ok(GroupPullback { group, pairs, p1, p2 })
}

/// `eq(f1, f2) = {g : f1(g) = f2(g)}` with its inclusion.
pub fn equalizer(f1: &GroupHom, f2: &GroupHom) -> Result<(Arc<FiniteGroup>, GroupHom), GroupError> {
    if *f1.dom != *f2.dom || *f1.cod != *f2.cod {
        return Err(GroupError::Mismatch(
            "equalizer of maps with different signatures".into(),
        ));
    }
    let elements: Vec<usize> = f1.dom.elements().filter(|&x| f1.apply(x) == f2.apply(x)).collect();
    subgroup(&f1.dom, &elements)
}

/// All homomorphisms `g → h` as image arrays, in lexicographic order of the
/// generator images.
pub fn homomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Vec<Vec<usize>> {
    let gens = g.generators();
    // Spanning tree: every element as parent · generator.
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.order()];
    let mut reached = vec![false; g.order()];
    reached[g.identity()] = true;
    let mut order = vec![g.identity()];
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for (k, &gen) in gens.iter().enumerate() {
            let y = g.mul(x, gen);
            if !std::mem::replace(&mut reached[y], true) {
                parent[y] = Some((x, k));
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    loop {
        let mut map = vec![0usize; g.order()];
        map[g.identity()] = h.identity();
        for &y in &order[1..] {
            let (x, k) = parent[y].expect("spanning tree");
            map[y] = h.mul(map[x], images[k]);
        }
        if check_hom(g, h, &map).is_ok() {
            out.push(map);
        }
        // next assignment of generator images
        let mut k = gens.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            images[k] += 1;
            if images[k] < h.order() {
                break;
            }
            images[k] = 0;
        }
    }
}

/// An isomorphism `a → b`, if one exists.
pub fn isomorphism(a: &FiniteGroup, b: &FiniteGroup) -> Option<Vec<usize>> {
    if a.order() != b.order() {
        return None;
    }
    homomorphisms(a, b).into_iter().find(|m| {
        let mut seen = vec![false; b.order()];
        m.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    })
}

/// `Aut(h)` under composition (`(a·b)(x) = a(b(x))`) and its evaluation action
/// `action[a][x] = a(x)`.
pub fn aut_group(h: &FiniteGroup) -> (Arc<FiniteGroup>, Vec<Vec<usize>>) {
    let mut auts: Vec<Vec<usize>> = homomorphisms(h, h)
        .into_iter()
        .filter(|m| {
            let mut seen = vec![false; h.order()];
            m.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
        })
        .collect();
    auts.sort();
    let n = auts.len();
    let index = |m: &Vec<usize>| auts.binary_search(m).expect("automorphisms closed");
    let mut table = Vec::with_capacity(n * n);
    for a in &auts {
        for b in &auts {
            table.push(index(&b.iter().map(|&x| a[x]).collect()));
        }
    }
    let names = auts
        .iter()
        .map(|m| format!("[{}]", m.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    (Arc::new(FiniteGroup::from_flat_unchecked(n, table, Some(names))), auts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> Arc<FiniteGroup> {
        Arc::new(FiniteGroup::symmetric(3))
    }

    fn sign(g: &Arc<FiniteGroup>, z2: &Arc<FiniteGroup>) -> GroupHom {
        GroupHom::from_fn(g.clone(), z2.clone(), |x| {
            let p = g.permutation(x).unwrap();
            let inversions = (0..p.len())
                .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            inversions % 2
        })
        .unwrap()
    }

    #[test]
    fn table_errors_are_distinct() {
        assert_eq!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]], None)
                .unwrap()
                .order(),
            2
        );
        assert!(matches!(
            FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]], None),
            Err(GroupError::NotLatinSquare(_))
        ));
        assert!(matches!(
            FiniteGroup::from_table(vec![vec![0, 1]], None),
            Err(GroupError::NotSquare { .. })
        ));
        // x·y = −x−y on ℤ₃: Latin, no identity.
        assert_eq!(
            FiniteGroup::from_table(vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]], None),
            Err(GroupError::NoIdentity)
        );
        // Latin square with identity 0 that is not associative (order-5 loop).
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(loop5, None),
            Err(GroupError::NotAssociative { .. })
        ));
    }

    #[test]
    fn s3_table_round_trips_through_validation() {
        let g = s3();
        let again = FiniteGroup::from_table(g.table_rows(), None).unwrap();
        assert_eq!(again, *g);
        assert_eq!(again.order(), 6);
    }

    #[test]
    fn permutation_closure() {
        // one-line (2,1,3), (2,3,1) in 1-based notation
        let g = FiniteGroup::from_permutations(3, &[vec![1, 0, 2], vec![1, 2, 0]]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(FiniteGroup::from_permutations(4, &[]).unwrap().order(), 1);
        let c4 = FiniteGroup::from_permutations(4, &[vec![1, 2, 3, 0]]).unwrap();
        assert_eq!(c4.order(), 4);
        assert!(matches!(
            FiniteGroup::from_permutations(3, &[vec![0, 0, 1]]),
            Err(GroupError::NotBijection(0, 3))
        ));
        assert!(matches!(
            FiniteGroup::from_permutations_capped(5, &[vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]], 100),
            Err(GroupError::TooLarge { .. })
        ));
    }

    #[test]
    fn products() {
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let triv = Arc::new(FiniteGroup::trivial());
        let (gt, p1, _) = direct_product(&s3(), &triv);
        assert_eq!(gt.order(), 6);
        assert!(p1.is_injective() && p1.is_surjective());
        let (v4, _, _) = direct_product(&z2, &z2);
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
        assert_eq!(direct_product(&s3(), &z2).0.order(), 12);
    }

    #[test]
    fn pullback_examples() {
        let g = s3();
        let id = GroupHom::identity(g.clone());
        assert_eq!(pullback(&id, &id).unwrap().group.order(), 6);
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let triv = GroupHom::trivial(g.clone(), z2.clone());
        assert_eq!(pullback(&triv, &triv).unwrap().group.order(), 36);
        let sg = sign(&g, &z2);
        // enumeration oracle over all 36 pairs
        let count = (0..6)
            .flat_map(|a| (0..6).map(move |b| (a, b)))
            .filter(|&(a, b)| sg.apply(a) == sg.apply(b))
            .count();
        assert_eq!(count, 18);
        assert_eq!(pullback(&sg, &sg).unwrap().group.order(), 18);
        let other = GroupHom::identity(Arc::new(FiniteGroup::cyclic(3)));
        assert!(pullback(&sg, &other).is_err());
    }

    #[test]
    fn equalizer_examples() {
        let g = s3();
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let sg = sign(&g, &z2);
        assert_eq!(equalizer(&sg, &sg).unwrap().0.order(), 6);
        let triv = GroupHom::trivial(g.clone(), z2.clone());
        assert_eq!(equalizer(&sg, &triv).unwrap().0.order(), 3);
        let z3 = Arc::new(FiniteGroup::cyclic(3));
        let inv = GroupHom::from_fn(z3.clone(), z3.clone(), |x| z3.inv(x)).unwrap();
        assert_eq!(equalizer(&GroupHom::identity(z3.clone()), &inv).unwrap().0.order(), 1);
    }

    #[test]
    fn automorphism_groups() {
        // brute force over all bijections of the underlying set
        fn brute_aut_count(h: &FiniteGroup) -> usize {
            fn perms(n: usize) -> Vec<Vec<usize>> {
                if n == 0 {
                    return vec![vec![]];
                }
                let mut out = Vec::new();
                for p in perms(n - 1) {
                    for i in 0..n {
                        let mut q = p.clone();
                        q.insert(i, n - 1);
                        out.push(q);
                    }
                }
                out
            }
            perms(h.order())
                .into_iter()
                .filter(|m| check_hom(h, h, m).is_ok())
                .count()
        }
        let z3 = FiniteGroup::cyclic(3);
        assert_eq!(brute_aut_count(&z3), 2);
        assert_eq!(aut_group(&z3).0.order(), 2);
        assert_eq!(aut_group(&FiniteGroup::trivial()).0.order(), 1);
        let z2 = Arc::new(FiniteGroup::cyclic(2));
        let (v4, _, _) = direct_product(&z2, &z2);
        assert_eq!(brute_aut_count(&v4), 6);
        let (aut_v4, _) = aut_group(&v4);
        assert_eq!(aut_v4.order(), 6);
        assert!(isomorphism(&aut_v4, &FiniteGroup::symmetric(3)).is_some());
        assert_eq!(aut_group(&FiniteGroup::symmetric(3)).0.order(), 6);
    }

    #[test]
    fn classes_and_exponent() {
        let g = s3();
        assert_eq!(g.conjugacy_classes().len(), 3);
        assert_eq!(g.exponent(), 6);
        assert_eq!(FiniteGroup::cyclic(4).conjugacy_classes().len(), 4);
        assert_eq!(FiniteGroup::dihedral(4).order(), 8);
    }

    #[test]
    fn hom_enumeration_counts() {
        // Hom(Z4, Z2) = 2, Hom(S3, Z2) = 2, Hom(Z2, S3) = 4 (identity + 3 transpositions)
        assert_eq!(homomorphisms(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(2)).len(), 2);
        assert_eq!(homomorphisms(&s3(), &FiniteGroup::cyclic(2)).len(), 2);
        assert_eq!(homomorphisms(&FiniteGroup::cyclic(2), &s3()).len(), 4);
    }
}
