//! Finite groups stored as multiplication tables.
//!
//! Element `0` is always the identity. Permutation groups enter through
//! [`Group::closure`]; quotients and presentation-built groups are built
//! directly from tables.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::perm::Perm;

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;
pub const DEFAULT_METACYCLIC_CAP: usize = 128;
const ASSOCIATIVITY_CHECK_MAX: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl Group {
    /// Builds a group from a row-major `order × order` table, validating the
    /// Latin-square property, the identity at index 0 and (for small orders)
    /// associativity.
    pub fn from_table(order: usize, table: Vec<usize>, labels: Option<Vec<String>>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidTable("empty group".into()));
        }
        if table.len() != order * order {
            return Err(Error::InvalidTable(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(l) = &labels {
            if l.len() != order {
                return Err(Error::InvalidTable("label count does not match order".into()));
            }
        }
        for g in 0..order {
            if table[g] != g || table[g * order] != g {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for g in 0..order {
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for h in 0..order {
                let r = table[g * order + h];
                let c = table[h * order + g];
                if r >= order || c >= order || row_seen[r] || col_seen[c] {
                    return Err(Error::InvalidTable("rows and columns must be permutations".into()));
                }
                row_seen[r] = true;
                col_seen[c] = true;
                if r == 0 {
                    inverses[g] = h;
                }
            }
        }
        let group = Group {
            order,
            table,
            inverses,
            labels,
        };
        if order <= ASSOCIATIVITY_CHECK_MAX && !group.is_associative() {
            return Err(Error::InvalidTable("multiplication is not associative".into()));
        }
        Ok(group)
    }

    fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    pub fn trivial() -> Self {
        Group::from_table(1, vec![0], None).expect("trivial group")
    }

    /// The group generated by `generators` under composition.
    pub fn closure(generators: &[Perm]) -> Result<Self> {
        Self::closure_with_cap(generators, DEFAULT_CLOSURE_CAP)
    }

    pub fn closure_with_cap(generators: &[Perm], cap: usize) -> Result<Self> {
        let degree = generators.first().map_or(0, Perm::degree);
        if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        let identity = Perm::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index: HashMap<Perm, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in generators {
                let p = elements[i].compose(g);
                if !index.contains_key(&p) {
                    if elements.len() == cap {
                        return Err(Error::CapExceeded {
                            what: "generated group",
                            size: cap + 1,
                            cap,
                        });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let n = elements.len();
        let mut table = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                table.push(index[&a.compose(b)]);
            }
        }
        let labels = elements.iter().map(|p| p.to_string()).collect();
        Group::from_table(n, table, Some(labels))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => format!("g{g}"),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn pow(&self, g: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, g))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Elements `g ≠ e` with `g² = e`.
    pub fn involutions(&self) -> Vec<usize> {
        (1..self.order).filter(|&g| self.mul(g, g) == 0).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Left regular representation `g ↦ (x ↦ g·x)`.
    pub fn left_regular(&self) -> Vec<Perm> {
        (0..self.order).map(|g| self.left_mult(g)).collect()
    }

    pub fn left_mult(&self, g: usize) -> Perm {
        Perm::new(self.table[g * self.order..(g + 1) * self.order].to_vec())
            .expect("table rows are permutations")
    }

    /// Whether every left-translation is an even permutation, together with
    /// whether the Sylow 2-subgroup is non-cyclic (the two must agree).
    pub fn regular_rep_in_alternating(&self) -> AlternatingCheck {
        let in_alternating = (0..self.order).all(|g| self.left_mult(g).signature() == 1);
        let sylow = self.sylow2();
        AlternatingCheck {
            in_alternating,
            sylow_noncyclic: !sylow.is_cyclic(),
            vacuous: self.order % 2 == 1,
        }
    }

    pub fn subgroup_generated(&self, generators: &[usize]) -> Subgroup<'_> {
        let mut members = vec![0usize];
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in generators {
                let y = self.mul(x, g);
                if !in_set[y] {
                    in_set[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        Subgroup {
            group: self,
            members,
        }
    }

    /// Wraps `members` as a subgroup after checking closure.
    pub fn subgroup(&self, members: &[usize]) -> Result<Subgroup<'_>> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut in_set = vec![false; self.order];
        for &m in &members {
            if m >= self.order {
                return Err(Error::OutOfRange(format!("element {m}")));
            }
            in_set[m] = true;
        }
        let closed = in_set[0]
            && members
                .iter()
                .all(|&a| in_set[self.inv(a)] && members.iter().all(|&b| in_set[self.mul(a, b)]));
        if !closed {
            return Err(Error::InvalidTable("subset is not a subgroup".into()));
        }
        Ok(Subgroup {
            group: self,
            members,
        })
    }

    pub fn whole(&self) -> Subgroup<'_> {
        Subgroup {
            group: self,
            members: (0..self.order).collect(),
        }
    }

    /// A Sylow 2-subgroup, grown one 2-element of the normalizer at a time.
    pub fn sylow2(&self) -> Subgroup<'_> {
        let target = 1usize << self.order.trailing_zeros();
        let mut p = self.subgroup_generated(&[]);
        while p.order() < target {
            let mut in_p = vec![false; self.order];
            for &m in &p.members {
                in_p[m] = true;
            }
            let next = (0..self.order).find(|&g| {
                !in_p[g]
                    && self.element_order(g).is_power_of_two()
                    && p.members
                        .iter()
                        .all(|&x| in_p[self.mul(self.mul(g, x), self.inv(g))])
            });
            let g = next.expect("a proper 2-subgroup has a 2-element in its normalizer outside it");
            let mut gens = p.members.clone();
            gens.push(g);
            p = self.subgroup_generated(&gens);
        }
        p
    }

    /// Quotient by a normal subgroup, indexed by cosets ordered by their
    /// smallest member.
    pub fn quotient(&self, n: &Subgroup<'_>) -> Result<Group> {
        Ok(self.quotient_map(n)?.0)
    }

    /// The quotient together with the projection `g ↦ gN`.
    pub fn quotient_map(&self, n: &Subgroup<'_>) -> Result<(Group, Vec<usize>)> {
        if !n.is_normal() {
            return Err(Error::NotNormal);
        }
        let mut coset_of = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in 0..self.order {
            if coset_of[g] == usize::MAX {
                for &m in &n.members {
                    coset_of[self.mul(g, m)] = reps.len();
                }
                reps.push(g);
            }
        }
        let k = reps.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                table.push(coset_of[self.mul(a, b)]);
            }
        }
        let labels = reps.iter().map(|&r| format!("{}N", self.label(r))).collect();
        Ok((Group::from_table(k, table, Some(labels))?, coset_of))
    }

    /// Direct product with element `(g, h)` at index `g·|H| + h`.
    pub fn direct_product(&self, other: &Group) -> Group {
        let (m, n) = (self.order, other.order);
        let mut table = Vec::with_capacity(m * m * n * n);
        for a in 0..m * n {
            for b in 0..m * n {
                let g = self.mul(a / n, b / n);
                let h = other.mul(a % n, b % n);
                table.push(g * n + h);
            }
        }
        let labels = (0..m * n)
            .map(|i| format!("({},{})", self.label(i / n), other.label(i % n)))
            .collect();
        Group::from_table(m * n, table, Some(labels)).expect("direct product of groups")
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|g| self.element_order(g) == self.order)
    }

    pub fn is_elementary_abelian_2(&self) -> bool {
        (0..self.order).all(|g| self.mul(g, g) == 0)
    }

    pub fn is_metacyclic(&self) -> Result<bool> {
        self.is_metacyclic_with_cap(DEFAULT_METACYCLIC_CAP)
    }

    /// Brute force over cyclic subgroups `⟨h⟩`: metacyclic iff some `⟨h⟩` is
    /// normal with cyclic quotient.
    pub fn is_metacyclic_with_cap(&self, cap: usize) -> Result<bool> {
        if self.order > cap {
            return Err(Error::CapExceeded {
                what: "metacyclic test",
                size: self.order,
                cap,
            });
        }
        for h in 0..self.order {
            let n = self.subgroup_generated(&[h]);
            if !n.is_normal() {
                continue;
            }
            let mut in_n = vec![false; self.order];
            for &m in &n.members {
                in_n[m] = true;
            }
            let index = self.order / n.order();
            let quotient_cyclic = (0..self.order).any(|k| {
                let mut x = k;
                let mut steps = 1;
                while !in_n[x] {
                    x = self.mul(x, k);
                    steps += 1;
                }
                steps == index
            });
            if quotient_cyclic {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlternatingCheck {
    pub in_alternating: bool,
    pub sylow_noncyclic: bool,
    /// Set for groups of odd order, where the statement carries no content.
    pub vacuous: bool,
}

/// A subgroup of a parent group, as a sorted list of element indices.
#[derive(Clone, Debug)]
pub struct Subgroup<'g> {
    group: &'g Group,
    members: Vec<usize>,
}

impl<'g> Subgroup<'g> {
    pub fn parent(&self) -> &'g Group {
        self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    pub fn is_normal(&self) -> bool {
        let g = self.group;
        (0..g.order()).all(|x| {
            self.members
                .iter()
                .all(|&m| self.contains(g.mul(g.mul(x, m), g.inv(x))))
        })
    }

    /// The subgroup as a standalone group; element `i` corresponds to
    /// `members()[i]`.
    pub fn to_group(&self) -> Group {
        let pos: HashMap<usize, usize> = self.members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let k = self.members.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in &self.members {
            for &b in &self.members {
                table.push(pos[&self.group.mul(a, b)]);
            }
        }
        let labels = self.members.iter().map(|&m| self.group.label(m)).collect();
        Group::from_table(k, table, Some(labels)).expect("subgroup table")
    }

    pub fn is_cyclic(&self) -> bool {
        self.members
            .iter()
            .any(|&g| self.group.element_order(g) == self.order())
    }

    pub fn is_elementary_abelian_2(&self) -> bool {
        self.members.iter().all(|&g| self.group.mul(g, g) == 0)
    }

    pub fn is_metacyclic(&self) -> Result<bool> {
        if self.order() > DEFAULT_METACYCLIC_CAP {
            return Err(Error::CapExceeded {
                what: "metacyclic test",
                size: self.order(),
                cap: DEFAULT_METACYCLIC_CAP,
            });
        }
        self.to_group().is_metacyclic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(n: usize, specs: &[&[&[usize]]]) -> Vec<Perm> {
        specs
            .iter()
            .map(|cycles| {
                let c: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
                Perm::from_cycles(n, &c).unwrap()
            })
            .collect()
    }

    #[test]
    fn closure_orders() {
        let g = Group::closure(&perms(2, &[&[&[0, 1]]])).unwrap();
        assert_eq!(g.order(), 2);
        let s3 = Group::closure(&perms(3, &[&[&[0, 1]], &[&[0, 1, 2]]])).unwrap();
        assert_eq!(s3.order(), 6);
        let d8 = Group::closure(&perms(4, &[&[&[0, 1, 2, 3]], &[&[1, 3]]])).unwrap();
        assert_eq!(d8.order(), 8);
        assert_eq!(d8.involutions().len(), 5);
    }

    #[test]
    fn closure_errors() {
        let gens = vec![Perm::identity(2), Perm::identity(3)];
        assert!(matches!(Group::closure(&gens), Err(Error::DegreeMismatch { .. })));
        let s5 = perms(5, &[&[&[0, 1]], &[&[0, 1, 2, 3, 4]]]);
        assert!(matches!(
            Group::closure_with_cap(&s5, 50),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn bad_tables_rejected() {
        // Latin square on 3 elements whose identity is not at index 0.
        assert!(Group::from_table(2, vec![1, 0, 0, 1], None).is_err());
        // Non-associative loop of order 5.
        let loop5 = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(Group::from_table(5, loop5, None).is_err());
    }

    #[test]
    fn regular_rep_is_injective_homomorphism() {
        let s3 = Group::closure(&perms(3, &[&[&[0, 1]], &[&[0, 1, 2]]])).unwrap();
        let f = s3.left_regular();
        for g in 0..6 {
            for h in 0..6 {
                assert_eq!(f[s3.mul(g, h)], f[g].compose(&f[h]));
            }
        }
        let mut distinct = f.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 6);
    }

    #[test]
    fn subgroup_and_quotient() {
        let s3 = Group::closure(&perms(3, &[&[&[0, 1]], &[&[0, 1, 2]]])).unwrap();
        let a3 = s3
            .subgroup_generated(&[(0..6).find(|&g| s3.element_order(g) == 3).unwrap()]);
        assert_eq!(a3.order(), 3);
        assert!(a3.is_normal());
        let q = s3.quotient(&a3).unwrap();
        assert_eq!(q.order(), 2);
        let t = s3.subgroup_generated(&[s3.involutions()[0]]);
        assert!(!t.is_normal());
        assert_eq!(s3.quotient(&t), Err(Error::NotNormal));
        assert_eq!(s3.quotient(&s3.whole()).unwrap().order(), 1);
        assert_eq!(s3.subgroup(a3.members()).unwrap().order(), 3);
        let not_closed = [0, t.members()[1], a3.members()[1]];
        assert!(s3.subgroup(&not_closed).is_err());
    }
}
