//! Degree-2 cohomology of a finite group with F2 coefficients.
//!
//! Everything works in the normalized bar complex: cochains satisfy
//! `c(e, g) = c(g, e) = 0`, so the restriction of a class to the order-2
//! subgroup `{e, g}` is literally `c(g, g)`.
//!
//! Z² is the solution space of the cocycle identity
//! `c(g,h) + c(gh,k) + c(h,k) + c(g,hk) = 0` in the `(|G|-1)²` unknowns
//! `c(g,h)`, `g, h ≠ e`; B² is spanned by `δb(g,h) = b(g) + b(h) + b(gh)`.

use crate::error::{Error, Result};
use crate::f2::{BitVec, Echelon};
use crate::group::Group;

pub const DEFAULT_H2_CAP: usize = 64;

/// A normalized F2-valued 2-cochain stored as a `|G| × |G|` bit matrix.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cocycle2 {
    n: usize,
    bits: BitVec,
}

impl Cocycle2 {
    pub fn zero(n: usize) -> Self {
        Cocycle2 {
            n,
            bits: BitVec::zeros(n * n),
        }
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut c = Self::zero(n);
        for g in 0..n {
            for h in 0..n {
                if f(g, h) {
                    c.bits.set(g * n + h, true);
                }
            }
        }
        c
    }

    pub fn group_order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, g: usize, h: usize) -> bool {
        self.bits.get(g * self.n + h)
    }

    pub fn set(&mut self, g: usize, h: usize, value: bool) {
        self.bits.set(g * self.n + h, value);
    }

    pub fn add(&self, other: &Cocycle2) -> Cocycle2 {
        assert_eq!(self.n, other.n);
        let mut bits = self.bits.clone();
        bits.xor_assign(&other.bits);
        Cocycle2 { n: self.n, bits }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn is_normalized(&self) -> bool {
        (0..self.n).all(|g| !self.get(0, g) && !self.get(g, 0))
    }

    pub fn is_cocycle(&self, group: &Group) -> bool {
        let n = group.order();
        if n != self.n {
            return false;
        }
        (0..n).all(|g| {
            (0..n).all(|h| {
                let gh = group.mul(g, h);
                (0..n).all(|k| {
                    self.get(g, h) ^ self.get(gh, k) == self.get(h, k) ^ self.get(g, group.mul(h, k))
                })
            })
        })
    }

    pub fn validate(&self, group: &Group) -> Result<()> {
        if self.n != group.order() {
            return Err(Error::InvalidCocycle(format!(
                "cochain is for a group of order {}, group has order {}",
                self.n,
                group.order()
            )));
        }
        if !self.is_normalized() {
            return Err(Error::InvalidCocycle("not normalized".into()));
        }
        if !self.is_cocycle(group) {
            return Err(Error::InvalidCocycle("cocycle identity fails".into()));
        }
        Ok(())
    }

    /// `δb` for a normalized 1-cochain `b` (`b[0]` must be false).
    pub fn coboundary(group: &Group, b: &[bool]) -> Cocycle2 {
        assert_eq!(b.len(), group.order());
        assert!(!b[0], "1-cochain must vanish at the identity");
        Cocycle2::from_fn(group.order(), |g, h| b[g] ^ b[h] ^ b[group.mul(g, h)])
    }

    fn to_reduced(&self) -> BitVec {
        let m = self.n - 1;
        let mut v = BitVec::zeros(m * m);
        for g in 1..self.n {
            for h in 1..self.n {
                if self.get(g, h) {
                    v.set((g - 1) * m + (h - 1), true);
                }
            }
        }
        v
    }

    fn from_reduced(n: usize, v: &BitVec) -> Cocycle2 {
        let m = n - 1;
        Cocycle2::from_fn(n, |g, h| g > 0 && h > 0 && v.get((g - 1) * m + (h - 1)))
    }

    /// Parses `|G|²` ASCII `0`/`1` characters in row-major order; whitespace
    /// is ignored.
    pub fn parse_ascii(n: usize, text: &str) -> Result<Cocycle2> {
        let bits: Vec<bool> = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("unexpected character `{other}` in cocycle"))),
            })
            .collect::<Result<_>>()?;
        if bits.len() != n * n {
            return Err(Error::Parse(format!(
                "cocycle has {} bits, expected {}",
                bits.len(),
                n * n
            )));
        }
        Ok(Cocycle2 {
            n,
            bits: BitVec::from_bools(&bits),
        })
    }

    /// One row per line, `0`/`1` characters.
    pub fn to_ascii(&self) -> String {
        let mut s = String::with_capacity(self.n * (self.n + 1));
        for g in 0..self.n {
            for h in 0..self.n {
                s.push(if self.get(g, h) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn rows(&self) -> Vec<String> {
        self.to_ascii().lines().map(str::to_string).collect()
    }
}

/// A class in H²(G, F2): coordinates in the chosen H² basis plus a
/// representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    pub coords: BitVec,
    pub representative: Cocycle2,
}

impl CohClass {
    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

fn check_cap(group: &Group, cap: usize) -> Result<()> {
    if group.order() > cap {
        return Err(Error::CapExceeded {
            what: "H^2 computation",
            size: group.order(),
            cap,
        });
    }
    Ok(())
}

/// Basis of normalized 2-cocycles Z²(G, F2).
pub fn cocycle_space(group: &Group) -> Result<Vec<Cocycle2>> {
    cocycle_space_with_cap(group, DEFAULT_H2_CAP)
}

pub fn cocycle_space_with_cap(group: &Group, cap: usize) -> Result<Vec<Cocycle2>> {
    check_cap(group, cap)?;
    let n = group.order();
    if n == 1 {
        return Ok(Vec::new());
    }
    let m = n - 1;
    let var = |g: usize, h: usize| -> Option<usize> {
        (g != 0 && h != 0).then(|| (g - 1) * m + (h - 1))
    };
    let mut system = Echelon::new(m * m, 0);
    let mut eq = BitVec::zeros(m * m);
    for g in 1..n {
        for h in 1..n {
            let gh = group.mul(g, h);
            for k in 1..n {
                let hk = group.mul(h, k);
                for v in [var(g, h), var(gh, k), var(h, k), var(g, hk)].into_iter().flatten() {
                    eq.flip(v);
                }
                if !eq.is_zero() {
                    system.insert_untagged(&eq);
                    eq = BitVec::zeros(m * m);
                }
            }
        }
    }
    Ok(system
        .kernel()
        .iter()
        .map(|v| Cocycle2::from_reduced(n, v))
        .collect())
}

/// Spanning coboundaries `δ(1_g)` for `g ≠ e`, reduced to a basis of B².
pub fn coboundary_space(group: &Group) -> Result<Vec<Cocycle2>> {
    check_cap(group, DEFAULT_H2_CAP)?;
    let n = group.order();
    if n == 1 {
        return Ok(Vec::new());
    }
    let mut e = Echelon::new((n - 1) * (n - 1), 0);
    let mut out = Vec::new();
    for g in 1..n {
        let b = indicator(n, g);
        let c = Cocycle2::coboundary(group, &b);
        if e.insert_untagged(&c.to_reduced()) {
            out.push(c);
        }
    }
    Ok(out)
}

fn indicator(n: usize, g: usize) -> Vec<bool> {
    let mut b = vec![false; n];
    b[g] = true;
    b
}

/// H²(G, F2) with an echelon basis of class representatives.
#[derive(Clone, Debug)]
pub struct H2<'g> {
    group: &'g Group,
    z2_dim: usize,
    b2_dim: usize,
    reps: Vec<Cocycle2>,
    // Rows tagged by `[b (n-1 bits) | H² coordinates]`.
    echelon: Echelon,
    involutions: Vec<usize>,
}

impl<'g> H2<'g> {
    pub fn compute(group: &'g Group) -> Result<Self> {
        Self::compute_with_cap(group, DEFAULT_H2_CAP)
    }

    pub fn compute_with_cap(group: &'g Group, cap: usize) -> Result<Self> {
        let z2 = cocycle_space_with_cap(group, cap)?;
        let n = group.order();
        let m = n.saturating_sub(1);
        let tag_width = m + z2.len();
        let mut echelon = Echelon::new(m * m, tag_width);
        let mut b2_dim = 0;
        for g in 1..n {
            let c = Cocycle2::coboundary(group, &indicator(n, g));
            if echelon.insert(&c.to_reduced(), &BitVec::unit(tag_width, g - 1)).is_none() {
                b2_dim += 1;
            }
        }
        let mut reps = Vec::new();
        for z in &z2 {
            let tag = BitVec::unit(tag_width, m + reps.len());
            if echelon.insert(&z.to_reduced(), &tag).is_none() {
                reps.push(z.clone());
            }
        }
        Ok(H2 {
            group,
            z2_dim: z2.len(),
            b2_dim,
            reps,
            echelon,
            involutions: group.involutions(),
        })
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn z2_dim(&self) -> usize {
        self.z2_dim
    }

    pub fn b2_dim(&self) -> usize {
        self.b2_dim
    }

    pub fn involutions(&self) -> &[usize] {
        &self.involutions
    }

    pub fn basis(&self) -> Vec<CohClass> {
        (0..self.dim())
            .map(|i| CohClass {
                coords: BitVec::unit(self.dim(), i),
                representative: self.reps[i].clone(),
            })
            .collect()
    }

    /// Splits a cocycle as `δb + Σ coords_i rep_i`.
    fn decompose(&self, c: &Cocycle2) -> Result<(Vec<bool>, BitVec)> {
        c.validate(self.group)?;
        let n = self.group.order();
        if n == 1 {
            return Ok((vec![false], BitVec::zeros(0)));
        }
        let tag_width = n - 1 + self.z2_dim;
        let (residue, tag) = self.echelon.reduce(&c.to_reduced(), &BitVec::zeros(tag_width));
        debug_assert!(residue.is_zero(), "Z² is spanned by B² and the H² representatives");
        let mut b = vec![false; n];
        for g in 1..n {
            b[g] = tag.get(g - 1);
        }
        let mut coords = BitVec::zeros(self.dim());
        for i in 0..self.dim() {
            coords.set(i, tag.get(n - 1 + i));
        }
        Ok((b, coords))
    }

    pub fn class_of(&self, c: &Cocycle2) -> Result<CohClass> {
        let (_, coords) = self.decompose(c)?;
        Ok(CohClass {
            coords,
            representative: c.clone(),
        })
    }

    pub fn class_from_coords(&self, coords: &BitVec) -> CohClass {
        assert_eq!(coords.len(), self.dim());
        let n = self.group.order();
        let representative = coords
            .ones()
            .fold(Cocycle2::zero(n), |acc, i| acc.add(&self.reps[i]));
        CohClass {
            coords: coords.clone(),
            representative,
        }
    }

    pub fn is_coboundary(&self, c: &Cocycle2) -> Result<bool> {
        Ok(self.decompose(c)?.1.is_zero())
    }

    /// A normalized 1-cochain `b` with `δb = c`, if `c` is a coboundary.
    pub fn coboundary_preimage(&self, c: &Cocycle2) -> Result<Option<Vec<bool>>> {
        let (b, coords) = self.decompose(c)?;
        Ok(coords.is_zero().then_some(b))
    }

    pub fn s_map(&self, x: &CohClass) -> BitVec {
        s_map_of(self.group, &x.representative)
    }

    /// Kernel of the s-map on H², with a basis of classes.
    pub fn ker_s(&self) -> KerS {
        let k = self.involutions.len();
        let mut e = Echelon::new(k, self.dim());
        let mut basis = Vec::new();
        for (i, class) in self.basis().iter().enumerate() {
            let s = self.s_map(class);
            if let Some(dep) = e.insert(&s, &BitVec::unit(self.dim(), i)) {
                basis.push(self.class_from_coords(&dep));
            }
        }
        KerS {
            dim: basis.len(),
            basis,
        }
    }
}

/// The s-map at the cochain level: the component at involution `g` is
/// `c(g, g)`.
pub fn s_map_of(group: &Group, c: &Cocycle2) -> BitVec {
    let inv = group.involutions();
    let mut v = BitVec::zeros(inv.len());
    for (i, &g) in inv.iter().enumerate() {
        v.set(i, c.get(g, g));
    }
    v
}

#[derive(Clone, Debug)]
pub struct KerS {
    pub dim: usize,
    pub basis: Vec<CohClass>,
}

pub fn ker_s(group: &Group) -> Result<KerS> {
    Ok(H2::compute(group)?.ker_s())
}

/// 2-reduced test through `Ker(s_G) = 0`.
pub fn is_2_reduced(group: &Group) -> Result<bool> {
    Ok(ker_s(group)?.dim == 0)
}

/// A central extension `1 → Z/2 → total → base → 1`.
#[derive(Clone, Debug)]
pub struct CentralExt {
    pub base: Group,
    pub total: Group,
    /// The non-trivial kernel element `t`.
    pub kernel: usize,
    /// `projection[x]` is the image in `base` of `x ∈ total`.
    pub projection: Vec<usize>,
}

impl CentralExt {
    /// Validates the extension data: `t` central of order 2, projection a
    /// surjective homomorphism with kernel `{e, t}`.
    pub fn new(base: Group, total: Group, kernel: usize, projection: Vec<usize>) -> Result<Self> {
        let (n, big) = (base.order(), total.order());
        let bad = |m: &str| Err(Error::InvalidTable(format!("not a central Z/2 extension: {m}")));
        if big != 2 * n || projection.len() != big {
            return bad("order mismatch");
        }
        if kernel == 0 || kernel >= big || total.mul(kernel, kernel) != 0 {
            return bad("kernel generator is not an involution");
        }
        if (0..big).any(|x| total.mul(x, kernel) != total.mul(kernel, x)) {
            return bad("kernel generator is not central");
        }
        for x in 0..big {
            for y in 0..big {
                if projection[total.mul(x, y)] != base.mul(projection[x], projection[y]) {
                    return bad("projection is not a homomorphism");
                }
            }
        }
        let kernel_set: Vec<usize> = (0..big).filter(|&x| projection[x] == 0).collect();
        if kernel_set != [0, kernel] {
            return bad("projection kernel is not {e, t}");
        }
        Ok(CentralExt {
            base,
            total,
            kernel,
            projection,
        })
    }

    /// Section choosing, for each base element, the smallest preimage
    /// (the identity for `e`).
    pub fn default_section(&self) -> Vec<usize> {
        let mut section = vec![usize::MAX; self.base.order()];
        for x in (0..self.total.order()).rev() {
            section[self.projection[x]] = x;
        }
        section
    }

    /// `c(g,h)` from `s(g)s(h) = t^{c(g,h)} s(gh)`, for a section with
    /// `s(e) = e`.
    pub fn cocycle_for_section(&self, section: &[usize]) -> Result<Cocycle2> {
        let n = self.base.order();
        if section.len() != n || section[0] != 0 {
            return Err(Error::InvalidCocycle("section must send e to e".into()));
        }
        if (0..n).any(|g| self.projection[section[g]] != g) {
            return Err(Error::InvalidCocycle("not a section of the projection".into()));
        }
        Ok(Cocycle2::from_fn(n, |g, h| {
            let lhs = self.total.mul(section[g], section[h]);
            let rhs = section[self.base.mul(g, h)];
            debug_assert!(lhs == rhs || lhs == self.total.mul(self.kernel, rhs));
            lhs != rhs
        }))
    }

    pub fn cocycle(&self) -> Cocycle2 {
        self.cocycle_for_section(&self.default_section())
            .expect("default section is a normalized section")
    }

    /// Every involution of the base has a preimage of order 2.
    pub fn two_lift_property(&self) -> bool {
        self.base.involutions().iter().all(|&g| {
            (0..self.total.order())
                .any(|x| self.projection[x] == g && self.total.mul(x, x) == 0)
        })
    }

    /// Preimage of a set of base elements, sorted.
    pub fn preimage(&self, members: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.total.order())
            .filter(|&x| members.contains(&self.projection[x]))
            .collect();
        out.sort_unstable();
        out
    }
}

/// Total group on pairs `(g, a)` at index `2g + a` with
/// `(g,a)(h,b) = (gh, a + b + c(g,h))`.
pub fn extension_from_cocycle(group: &Group, c: &Cocycle2) -> Result<CentralExt> {
    c.validate(group)?;
    let n = group.order();
    let big = 2 * n;
    let mut table = Vec::with_capacity(big * big);
    for x in 0..big {
        let (g, a) = (x / 2, x % 2 == 1);
        for y in 0..big {
            let (h, b) = (y / 2, y % 2 == 1);
            let bit = a ^ b ^ c.get(g, h);
            table.push(2 * group.mul(g, h) + usize::from(bit));
        }
    }
    let labels = (0..big)
        .map(|x| format!("({},{})", group.label(x / 2), x % 2))
        .collect();
    let total = Group::from_table(big, table, Some(labels))?;
    let projection = (0..big).map(|x| x / 2).collect();
    CentralExt::new(group.clone(), total, 1, projection)
}

/// The extension `1 → {e, t} → total → total/{e, t} → 1`.
pub fn extension_from_quotient(total: &Group, t: usize) -> Result<CentralExt> {
    let kernel = total.subgroup(&[0, t])?;
    let (base, projection) = total.quotient_map(&kernel)?;
    CentralExt::new(base, total.clone(), t, projection)
}

pub fn class_of_extension(h2: &H2<'_>, ext: &CentralExt) -> Result<CohClass> {
    h2.class_of(&ext.cocycle())
}
