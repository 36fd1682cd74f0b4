//! Exact arithmetic for three presentation families of finite groups:
//! cyclic `C_n`, dihedral `D_{2.2m}` (order `4m`), and dicyclic `Q_{4m}`
//! (order `4m`), plus the derived group-theoretic queries the graph
//! builders need (element orders, centralizers, center, cyclic-subgroup
//! and commuting-subgroup tests).
//!
//! Every element is kept in the normal form `r^i f^j`: a rotation index
//! `i` reduced modulo the rotation-part order and a flip bit `j`. For the
//! dihedral group the generators are written `a` (rotation) and `b`
//! (reflection); for the dicyclic group `h` and `x`; cyclic groups use a
//! single generator `g`. Multiplication and inversion are closed-form
//! index rules derived from the presentation relations
//! `bab = a^{-1}` resp. `x^{-1}hx = h^{-1}`, `x^2 = h^m`.

use std::fmt;

use thiserror::Error;

/// Errors from group construction and descriptor parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// Family parameters must be at least 1.
    #[error("group parameter must be positive")]
    ZeroParameter,
    /// A group descriptor string did not parse.
    #[error("invalid group descriptor `{input}`: {reason}")]
    InvalidDescriptor { input: String, reason: String },
}

/// The three supported presentation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    Cyclic,
    Dihedral,
    Dicyclic,
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupFamily::Cyclic => write!(f, "cyclic"),
            GroupFamily::Dihedral => write!(f, "dihedral"),
            GroupFamily::Dicyclic => write!(f, "dicyclic"),
        }
    }
}

/// A group element in normal form: rotation index plus flip bit.
///
/// The rotation index is always reduced modulo the rotation-part order of
/// the owning group (`2m` for dihedral/dicyclic, `n` for cyclic); the flip
/// bit is always `false` for cyclic groups. Two elements are equal exactly
/// when their normal forms are equal. The derived `Ord` (rotation index
/// ascending, flip `false` before `true`) is the canonical enumeration
/// order used everywhere for deterministic output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    rotation_index: u32,
    flip: bool,
}

impl GroupElement {
    pub fn new(rotation_index: u32, flip: bool) -> Self {
        GroupElement { rotation_index, flip }
    }

    pub fn rotation_index(&self) -> u32 {
        self.rotation_index
    }

    pub fn flip(&self) -> bool {
        self.flip
    }
}

/// A finite group from one of the three families, described by its family
/// and a single positive parameter (`n` for cyclic order `n`; `m` for
/// dihedral/dicyclic order `4m`).
///
/// Groups are immutable and all operations are pure, so values can be
/// shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    family: GroupFamily,
    parameter: u32,
    order: u32,
    rotation_order: u32,
}

impl FiniteGroup {
    /// Builds a group from its family and parameter. Rejects parameter 0.
    pub fn new(family: GroupFamily, parameter: u32) -> Result<Self, GroupError> {
        if parameter == 0 {
            return Err(GroupError::ZeroParameter);
        }
        let (order, rotation_order) = match family {
            GroupFamily::Cyclic => (parameter, parameter),
            GroupFamily::Dihedral | GroupFamily::Dicyclic => (4 * parameter, 2 * parameter),
        };
        Ok(FiniteGroup { family, parameter, order, rotation_order })
    }

    pub fn cyclic(n: u32) -> Result<Self, GroupError> {
        Self::new(GroupFamily::Cyclic, n)
    }

    pub fn dihedral(m: u32) -> Result<Self, GroupError> {
        Self::new(GroupFamily::Dihedral, m)
    }

    pub fn dicyclic(m: u32) -> Result<Self, GroupError> {
        Self::new(GroupFamily::Dicyclic, m)
    }

    /// Parses a descriptor string: `C<n>`, `D<order>`, or `Q<order>`,
    /// where `D`/`Q` take the total group order, which must be a positive
    /// multiple of 4 (e.g. `Q32` is the dicyclic group of order 32).
    pub fn from_descriptor(input: &str) -> Result<Self, GroupError> {
        let err = |reason: &str| GroupError::InvalidDescriptor {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let mut chars = input.chars();
        let family = match chars.next() {
            Some('C') => GroupFamily::Cyclic,
            Some('D') => GroupFamily::Dihedral,
            Some('Q') => GroupFamily::Dicyclic,
            _ => return Err(err("expected a family letter C, D, or Q")),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("expected a positive integer after the family letter"));
        }
        let value: u32 = digits
            .parse()
            .map_err(|_| err("order does not fit in 32 bits"))?;
        if value == 0 {
            return Err(err("order must be positive"));
        }
        match family {
            GroupFamily::Cyclic => Self::new(family, value),
            GroupFamily::Dihedral | GroupFamily::Dicyclic => {
                if !value.is_multiple_of(4) {
                    return Err(err("dihedral and dicyclic orders must be multiples of 4"));
                }
                Self::new(family, value / 4)
            }
        }
    }

    /// The descriptor string this group parses from (`C5`, `D12`, `Q32`, ...).
    pub fn descriptor(&self) -> String {
        let letter = match self.family {
            GroupFamily::Cyclic => 'C',
            GroupFamily::Dihedral => 'D',
            GroupFamily::Dicyclic => 'Q',
        };
        format!("{letter}{}", self.order)
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn parameter(&self) -> u32 {
        self.parameter
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Order of the rotation part: `n` for cyclic, `2m` otherwise.
    pub fn rotation_order(&self) -> u32 {
        self.rotation_order
    }

    /// True for dicyclic groups whose parameter is a power of two; these
    /// are exactly the generalized quaternion groups `Q_{2^{n+1}}`.
    pub fn is_generalized_quaternion(&self) -> bool {
        self.family == GroupFamily::Dicyclic && self.parameter.is_power_of_two()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::new(0, false)
    }

    /// Normal form for `r^i f^j` given any integer rotation exponent.
    pub fn element(&self, rotation_exponent: i64, flip: bool) -> GroupElement {
        debug_assert!(!(flip && self.family == GroupFamily::Cyclic));
        let r = self.rotation_order as i64;
        GroupElement::new(rotation_exponent.rem_euclid(r) as u32, flip)
    }

    /// True iff `e` is a valid normal form for this group.
    pub fn contains(&self, e: GroupElement) -> bool {
        e.rotation_index < self.rotation_order && !(e.flip && self.family == GroupFamily::Cyclic)
    }

    /// All elements in canonical order: rotation index ascending, flip
    /// `false` before `true`.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.rotation_order).flat_map(move |i| {
            let flips: &[bool] = match self.family {
                GroupFamily::Cyclic => &[false],
                _ => &[false, true],
            };
            flips.iter().map(move |&f| GroupElement::new(i, f))
        })
    }

    /// Position of `e` in the `elements()` enumeration.
    pub fn ordinal(&self, e: GroupElement) -> usize {
        debug_assert!(self.contains(e));
        match self.family {
            GroupFamily::Cyclic => e.rotation_index as usize,
            _ => 2 * e.rotation_index as usize + e.flip as usize,
        }
    }

    /// Product `s * t` in normal form.
    ///
    /// The index rules come from the presentation relations: a flip
    /// conjugates the rotation part (`f r^k = r^{-k} f`), and two flips
    /// contribute `r^m` for dicyclic (`x^2 = h^m`) and nothing for
    /// dihedral (`b^2 = e`).
    pub fn multiply(&self, s: GroupElement, t: GroupElement) -> GroupElement {
        debug_assert!(self.contains(s) && self.contains(t));
        let (i, k) = (s.rotation_index as i64, t.rotation_index as i64);
        match (s.flip, t.flip) {
            (false, f) => self.element(i + k, f),
            (true, false) => self.element(i - k, true),
            (true, true) => {
                let twist = match self.family {
                    GroupFamily::Dicyclic => self.parameter as i64,
                    _ => 0,
                };
                self.element(i - k + twist, false)
            }
        }
    }

    /// Inverse of `s`: rotations invert by negating the index; dihedral
    /// reflections are involutions; dicyclic flips invert to `h^{i+m}x`.
    pub fn inverse(&self, s: GroupElement) -> GroupElement {
        debug_assert!(self.contains(s));
        let i = s.rotation_index as i64;
        match (self.family, s.flip) {
            (_, false) => self.element(-i, false),
            (GroupFamily::Dihedral, true) => s,
            (GroupFamily::Dicyclic, true) => self.element(i + self.parameter as i64, true),
            (GroupFamily::Cyclic, true) => unreachable!("cyclic elements never flip"),
        }
    }

    /// `s^k` for any integer exponent.
    pub fn power(&self, s: GroupElement, k: i64) -> GroupElement {
        let base = if k < 0 { self.inverse(s) } else { s };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.multiply(acc, base);
        }
        acc
    }

    /// Smallest `k >= 1` with `s^k = e`, by repeated multiplication.
    pub fn element_order(&self, s: GroupElement) -> u32 {
        debug_assert!(self.contains(s));
        let mut acc = s;
        let mut k = 1;
        while acc != self.identity() {
            acc = self.multiply(acc, s);
            k += 1;
        }
        k
    }

    pub fn commutes(&self, s: GroupElement, t: GroupElement) -> bool {
        self.multiply(s, t) == self.multiply(t, s)
    }

    /// Elements commuting with everything, by enumeration.
    pub fn center(&self) -> Vec<GroupElement> {
        self.elements()
            .filter(|&s| self.elements().all(|t| self.commutes(s, t)))
            .collect()
    }

    /// Elements commuting with `s`, by enumeration. Always contains the
    /// center and the cyclic subgroup generated by `s`.
    pub fn centralizer(&self, s: GroupElement) -> Vec<GroupElement> {
        self.elements().filter(|&t| self.commutes(s, t)).collect()
    }

    /// `{ s^k : k >= 0 }` in canonical order; its size is the order of `s`.
    pub fn cyclic_subgroup(&self, s: GroupElement) -> Vec<GroupElement> {
        let mut members = vec![self.identity()];
        let mut acc = s;
        while acc != self.identity() {
            members.push(acc);
            acc = self.multiply(acc, s);
        }
        members.sort();
        members
    }

    /// Closure of `generators` under multiplication, in canonical order.
    pub fn closure(&self, generators: &[GroupElement]) -> Vec<GroupElement> {
        let mut seen = vec![false; self.order as usize];
        seen[self.ordinal(self.identity())] = true;
        let mut frontier = vec![self.identity()];
        while let Some(u) = frontier.pop() {
            for &g in generators {
                let v = self.multiply(u, g);
                if !seen[self.ordinal(v)] {
                    seen[self.ordinal(v)] = true;
                    frontier.push(v);
                }
            }
        }
        self.elements().filter(|&e| seen[self.ordinal(e)]).collect()
    }

    /// True iff the subgroup generated by `s` and `t` is cyclic, i.e. the
    /// closure of `{s, t}` contains an element whose order equals the
    /// closure's size.
    pub fn generates_cyclic(&self, s: GroupElement, t: GroupElement) -> bool {
        let subgroup = self.closure(&[s, t]);
        let size = subgroup.len() as u32;
        subgroup.into_iter().any(|u| self.element_order(u) == size)
    }

    /// True iff the group has a subgroup isomorphic to `C_p x C_q` for
    /// distinct primes `p`, `q` — equivalently, some element whose order
    /// has two distinct prime factors.
    pub fn has_cyclic_pq_subgroup(&self) -> bool {
        self.elements()
            .any(|s| distinct_prime_factors(self.element_order(s)) >= 2)
    }

    /// True iff the group has a subgroup isomorphic to `C_p x C_p` for
    /// some prime `p`: two commuting elements of the same prime order
    /// that do not lie in a common cyclic subgroup.
    pub fn has_elementary_p_squared_subgroup(&self) -> bool {
        let elems: Vec<GroupElement> = self.elements().collect();
        let orders: Vec<u32> = elems.iter().map(|&s| self.element_order(s)).collect();
        let mut power_member = vec![vec![false; elems.len()]; elems.len()];
        for (si, &s) in elems.iter().enumerate() {
            for t in self.cyclic_subgroup(s) {
                power_member[si][self.ordinal(t)] = true;
            }
        }
        for (si, &s) in elems.iter().enumerate() {
            if !is_prime(orders[si]) {
                continue;
            }
            for (ti, &t) in elems.iter().enumerate() {
                if orders[ti] == orders[si]
                    && !power_member[si][ti]
                    && self.commutes(s, t)
                {
                    return true;
                }
            }
        }
        false
    }

    /// Canonical label: `g^i` (cyclic), `a^i` / `a^i*b` (dihedral),
    /// `h^i` / `h^i*x` (dicyclic).
    pub fn label(&self, e: GroupElement) -> String {
        debug_assert!(self.contains(e));
        let i = e.rotation_index;
        match (self.family, e.flip) {
            (GroupFamily::Cyclic, _) => format!("g^{i}"),
            (GroupFamily::Dihedral, false) => format!("a^{i}"),
            (GroupFamily::Dihedral, true) => format!("a^{i}*b"),
            (GroupFamily::Dicyclic, false) => format!("h^{i}"),
            (GroupFamily::Dicyclic, true) => format!("h^{i}*x"),
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn distinct_prime_factors(mut n: u32) -> u32 {
    let mut count = 0;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            count += 1;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        count += 1;
    }
    count
}
