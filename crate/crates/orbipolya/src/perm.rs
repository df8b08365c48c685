//! Permutations of `[m] = {1, ..., m}` and finite permutation groups with
//! fully enumerated elements, conjugacy classes, centralizers, and the
//! commuting-pair table that drives the orbicycle index.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Default cap on the number of enumerated group elements.
pub const DEFAULT_ELEMENT_BOUND: usize = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("point {point} out of range 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation near `{0}`")]
    Malformed(String),
    #[error("generator has degree {found}, expected {expected}")]
    GeneratorDegree { found: usize, expected: usize },
    #[error("group too large: more than {bound} elements")]
    GroupTooLarge { bound: usize },
    #[error("unsupported group family `{family}` for n = {n}")]
    UnsupportedFamily { family: String, n: usize },
    #[error("bad group spec `{spec}`: {reason}")]
    BadGroupSpec { spec: String, reason: String },
    #[error("representative is not a member of class {0}")]
    NotAClassMember(usize),
}

/// A permutation of `[m]`, stored as a 0-based image table.
///
/// All public points are 1-based; composition is the left action,
/// `(p * q)(x) = p(q(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree >= 1, "degree must be positive");
        Permutation {
            map: (0..degree).collect(),
        }
    }

    /// Build from a 1-based image table; validates that it is a bijection.
    pub fn from_one_line(images: Vec<usize>) -> Result<Self, PermError> {
        let degree = images.len();
        assert!(degree >= 1, "degree must be positive");
        let mut seen = vec![false; degree];
        let mut map = Vec::with_capacity(degree);
        for &img in &images {
            if img < 1 || img > degree {
                return Err(PermError::PointOutOfRange {
                    point: img,
                    degree,
                });
            }
            if seen[img - 1] {
                return Err(PermError::RepeatedPoint(img));
            }
            seen[img - 1] = true;
            map.push(img - 1);
        }
        Ok(Permutation { map })
    }

    /// Parse whitespace-separated disjoint cycles such as `"(1 2 3)(4 5)"`.
    /// The empty string is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        assert!(degree >= 1, "degree must be positive");
        let mut perm = Permutation::identity(degree);
        let mut touched = vec![false; degree];
        let mut chars = text.chars().peekable();
        loop {
            while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                chars.next();
            }
            match chars.next() {
                None => break,
                Some('(') => {}
                Some(c) => return Err(PermError::Malformed(c.to_string())),
            }
            let mut cycle = Vec::new();
            loop {
                while matches!(chars.peek(), Some(c) if c.is_whitespace()) {
                    chars.next();
                }
                match chars.peek() {
                    Some(')') => {
                        chars.next();
                        break;
                    }
                    Some(c) if c.is_ascii_digit() => {
                        let mut num = String::new();
                        while matches!(chars.peek(), Some(c) if c.is_ascii_digit()) {
                            num.push(chars.next().unwrap());
                        }
                        let point: usize = num
                            .parse()
                            .map_err(|_| PermError::Malformed(num.clone()))?;
                        if point < 1 || point > degree {
                            return Err(PermError::PointOutOfRange { point, degree });
                        }
                        if touched[point - 1] {
                            return Err(PermError::RepeatedPoint(point));
                        }
                        touched[point - 1] = true;
                        cycle.push(point - 1);
                    }
                    Some(&c) => return Err(PermError::Malformed(c.to_string())),
                    None => return Err(PermError::Malformed("(".to_string())),
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                perm.map[p] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(perm)
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.map[point - 1] + 1
    }

    /// The 1-based image table.
    pub fn one_line(&self) -> Vec<usize> {
        self.map.iter().map(|&i| i + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &img)| i == img)
    }

    /// Left-action composition: apply `other` first, then `self`.
    /// Panics on degree mismatch.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree(),
            other.degree(),
            "compose: degree mismatch ({} vs {})",
            self.degree(),
            other.degree()
        );
        Permutation {
            map: other.map.iter().map(|&i| self.map[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut map = vec![0; self.map.len()];
        for (i, &img) in self.map.iter().enumerate() {
            map[img] = i;
        }
        Permutation { map }
    }

    /// `k * self * k^{-1}`.
    pub fn conjugate_by(&self, k: &Self) -> Self {
        k.compose(self).compose(&k.inverse())
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Orbits of the generated cyclic group on `[m]`, as sorted 1-based
    /// cycles ordered by least element. Fixed points are included.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                orbit.push(p + 1);
                p = self.map[p];
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    /// Cycle counts by length: `cycle_counts()[i]` is the number of cycles
    /// of length `i + 1`.
    pub fn cycle_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.degree()];
        for orbit in self.orbits() {
            counts[orbit.len() - 1] += 1;
        }
        counts
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        let mut seen = vec![false; self.degree()];
        for start in 0..self.degree() {
            if seen[start] || self.map[start] == start {
                seen[start] = true;
                continue;
            }
            write!(f, "(")?;
            let mut p = start;
            let mut first = true;
            while !seen[p] {
                seen[p] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
                first = false;
                p = self.map[p];
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Family label attached to built-in constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Trivial,
    Cyclic,
    Dihedral,
    Symmetric,
    Custom,
}

/// A conjugacy class with its canonical representative (the member whose
/// image table is lexicographically smallest) and the centralizer of that
/// representative.
#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: Permutation,
    pub members: Vec<Permutation>,
    pub centralizer: Vec<Permutation>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// One row of the commuting-pair table: a class representative together
/// with one element of its centralizer.
#[derive(Debug, Clone)]
pub struct PairEntry {
    pub class_index: usize,
    pub class_size: usize,
    pub base: Permutation,
    pub companion: Permutation,
}

/// All pairs (class, h) with h in the centralizer of the class
/// representative.
#[derive(Debug, Clone)]
pub struct CommutingPairTable {
    pub entries: Vec<PairEntry>,
}

impl CommutingPairTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ over entries of the class size; equals |C(G)|·|G|.
    pub fn weighted_len(&self) -> usize {
        self.entries.iter().map(|e| e.class_size).sum()
    }
}

/// A fully enumerated permutation group with conjugacy data computed
/// eagerly at construction. Immutable afterwards.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    degree: usize,
    family: Family,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl PermutationGroup {
    /// Enumerate the closure of `generators` under composition, capped at
    /// `DEFAULT_ELEMENT_BOUND` elements.
    pub fn generate(generators: Vec<Permutation>, degree: usize) -> Result<Self, PermError> {
        Self::generate_bounded(generators, degree, DEFAULT_ELEMENT_BOUND)
    }

    pub fn generate_bounded(
        generators: Vec<Permutation>,
        degree: usize,
        bound: usize,
    ) -> Result<Self, PermError> {
        Self::build(generators, degree, bound, Family::Custom)
    }

    fn build(
        generators: Vec<Permutation>,
        degree: usize,
        bound: usize,
        family: Family,
    ) -> Result<Self, PermError> {
        assert!(degree >= 1, "degree must be positive");
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::GeneratorDegree {
                    found: g.degree(),
                    expected: degree,
                });
            }
        }

        // Breadth-first closure starting from the identity.
        let identity = Permutation::identity(degree);
        let mut index = HashMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut frontier = vec![0usize];
        while let Some(i) = frontier.pop() {
            let current = elements[i].clone();
            for g in &generators {
                let next = g.compose(&current);
                if !index.contains_key(&next) {
                    if elements.len() >= bound {
                        return Err(PermError::GroupTooLarge { bound });
                    }
                    index.insert(next.clone(), elements.len());
                    frontier.push(elements.len());
                    elements.push(next);
                }
            }
        }

        elements.sort_unstable();
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();

        // Conjugacy classes by direct conjugation sweep. Iterating in
        // ascending element order makes every first-unvisited element the
        // lexicographically smallest member of its class.
        let mut class_of = vec![usize::MAX; elements.len()];
        let mut classes = Vec::new();
        for i in 0..elements.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let rep = elements[i].clone();
            let mut member_ids: Vec<usize> = elements
                .iter()
                .map(|k| index[&rep.conjugate_by(k)])
                .collect();
            member_ids.sort_unstable();
            member_ids.dedup();
            let class_index = classes.len();
            for &m in &member_ids {
                class_of[m] = class_index;
            }
            let members: Vec<Permutation> =
                member_ids.iter().map(|&m| elements[m].clone()).collect();
            let centralizer = elements
                .iter()
                .filter(|h| h.commutes_with(&rep))
                .cloned()
                .collect();
            classes.push(ConjugacyClass {
                representative: rep,
                members,
                centralizer,
            });
        }

        Ok(PermutationGroup {
            degree,
            family,
            generators,
            elements,
            index,
            classes,
            class_of,
        })
    }

    /// The trivial group acting on `[m]`.
    pub fn trivial(degree: usize) -> Self {
        Self::build(Vec::new(), degree, DEFAULT_ELEMENT_BOUND, Family::Trivial)
            .expect("trivial group is within bounds")
    }

    /// The cyclic group generated by the n-cycle `(1 2 ... n)`.
    pub fn cyclic(n: usize) -> Result<Self, PermError> {
        Self::cyclic_bounded(n, DEFAULT_ELEMENT_BOUND)
    }

    pub fn cyclic_bounded(n: usize, bound: usize) -> Result<Self, PermError> {
        if n < 1 {
            return Err(PermError::UnsupportedFamily {
                family: "cyclic".into(),
                n,
            });
        }
        let rotation = rotation_of(n);
        Self::build(vec![rotation], n, bound, Family::Cyclic)
    }

    /// The dihedral group of order 2n on `[n]`: the rotation `(1 2 ... n)`
    /// together with the reflection `x -> n + 2 - x (mod n)`.
    pub fn dihedral(n: usize) -> Result<Self, PermError> {
        Self::dihedral_bounded(n, DEFAULT_ELEMENT_BOUND)
    }

    pub fn dihedral_bounded(n: usize, bound: usize) -> Result<Self, PermError> {
        if n < 3 {
            return Err(PermError::UnsupportedFamily {
                family: "dihedral".into(),
                n,
            });
        }
        let rotation = rotation_of(n);
        let reflection = Permutation {
            map: (0..n).map(|p| (n - p) % n).collect(),
        };
        Self::build(vec![rotation, reflection], n, bound, Family::Dihedral)
    }

    /// The full symmetric group on `[n]`, generated by `(1 2)` and the
    /// n-cycle.
    pub fn symmetric(n: usize) -> Result<Self, PermError> {
        Self::symmetric_bounded(n, DEFAULT_ELEMENT_BOUND)
    }

    pub fn symmetric_bounded(n: usize, bound: usize) -> Result<Self, PermError> {
        if n < 1 {
            return Err(PermError::UnsupportedFamily {
                family: "symmetric".into(),
                n,
            });
        }
        // Reject up front when n! would exceed the bound.
        let mut order = 1usize;
        for k in 2..=n {
            order = match order.checked_mul(k) {
                Some(o) if o <= bound => o,
                _ => return Err(PermError::GroupTooLarge { bound }),
            };
        }
        let mut generators = Vec::new();
        if n >= 2 {
            generators.push(Permutation::parse("(1 2)", n).unwrap());
            generators.push(rotation_of(n));
        }
        Self::build(generators, n, bound, Family::Symmetric)
    }

    /// Parse the group mini-language: `C:n`, `D:n`, `S:n`, `T:m`,
    /// `G:m:(1 2 3)(4 5),(1 2)`.
    pub fn parse_spec(spec: &str) -> Result<Self, PermError> {
        Self::parse_spec_bounded(spec, DEFAULT_ELEMENT_BOUND)
    }

    pub fn parse_spec_bounded(spec: &str, bound: usize) -> Result<Self, PermError> {
        let bad = |reason: &str| PermError::BadGroupSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = spec.splitn(3, ':');
        let tag = parts.next().ok_or_else(|| bad("empty spec"))?;
        let n: usize = parts
            .next()
            .ok_or_else(|| bad("missing size"))?
            .trim()
            .parse()
            .map_err(|_| bad("size is not a number"))?;
        match (tag, parts.next()) {
            ("C", None) => Self::cyclic_bounded(n, bound),
            ("D", None) => Self::dihedral_bounded(n, bound),
            ("S", None) => Self::symmetric_bounded(n, bound),
            ("T", None) => {
                if n < 1 {
                    return Err(bad("degree must be positive"));
                }
                Ok(Self::build(Vec::new(), n, bound, Family::Trivial)?)
            }
            ("G", Some(gens)) => {
                if n < 1 {
                    return Err(bad("degree must be positive"));
                }
                let mut generators = Vec::new();
                for chunk in gens.split(',') {
                    let chunk = chunk.trim();
                    if chunk.is_empty() {
                        continue;
                    }
                    generators.push(Permutation::parse(chunk, n)?);
                }
                Self::build(generators, n, bound, Family::Custom)
            }
            ("G", None) => Err(bad("custom spec needs `G:m:<generators>`")),
            _ => Err(bad("unknown family tag")),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements in ascending image-table order.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn identity_index(&self) -> usize {
        self.index[&Permutation::identity(self.degree)]
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Conjugacy class index of the element at `element_index`.
    pub fn class_of(&self, element_index: usize) -> usize {
        self.class_of[element_index]
    }

    /// Centralizer of an arbitrary element, by direct commutation test.
    pub fn centralizer_of(&self, g: &Permutation) -> Vec<Permutation> {
        self.elements
            .iter()
            .filter(|h| h.commutes_with(g))
            .cloned()
            .collect()
    }

    /// The commuting-pair table over the canonical class representatives.
    pub fn pair_table(&self) -> CommutingPairTable {
        let mut entries = Vec::new();
        for (class_index, class) in self.classes.iter().enumerate() {
            for h in &class.centralizer {
                entries.push(PairEntry {
                    class_index,
                    class_size: class.size(),
                    base: class.representative.clone(),
                    companion: h.clone(),
                });
            }
        }
        CommutingPairTable { entries }
    }

    /// The commuting-pair table rebuilt over caller-chosen class
    /// representatives; `reps[i]` must belong to class `i`.
    pub fn pair_table_with_reps(
        &self,
        reps: &[Permutation],
    ) -> Result<CommutingPairTable, PermError> {
        if reps.len() != self.classes.len() {
            return Err(PermError::NotAClassMember(reps.len()));
        }
        let mut entries = Vec::new();
        for (class_index, rep) in reps.iter().enumerate() {
            if !self.classes[class_index].members.contains(rep) {
                return Err(PermError::NotAClassMember(class_index));
            }
            let class_size = self.classes[class_index].size();
            for h in self.centralizer_of(rep) {
                entries.push(PairEntry {
                    class_index,
                    class_size,
                    base: rep.clone(),
                    companion: h,
                });
            }
        }
        Ok(CommutingPairTable { entries })
    }
}

fn rotation_of(n: usize) -> Permutation {
    Permutation {
        map: (0..n).map(|p| (p + 1) % n).collect(),
    }
}
