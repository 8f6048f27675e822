//! Weyl groups as groups of signed permutations.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Mul, Neg};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use super::{is_positive, reflection_images, Family, RootSystem};
use crate::error::{Error, Result};
use crate::exactpoly::{ExactPoly, LaurentPoly, Rational};

/// An element of `W` given by the signed images `w(e_i) = ±e_{|w(i)|}`.
#[derive(Clone)]
pub struct WeylElement {
    rs: RootSystem,
    images: Vec<i32>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rs == other.rs && self.images == other.images
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rs.hash(state);
        self.images.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by length, then lexicographically on the images.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.images.cmp(&other.images))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            rs: rs.clone(),
            images: (1..=rs.dim() as i32).collect(),
        }
    }

    /// Validates and wraps one-line signed images.
    pub fn from_images(rs: &RootSystem, images: Vec<i32>) -> Result<Self> {
        let bad = |why: &str| Error::InvalidElement(format!("{images:?}: {why}"));
        if images.len() != rs.dim() {
            return Err(Error::RankMismatch {
                expected: rs.dim(),
                found: images.len(),
            });
        }
        let mut seen = vec![false; rs.dim()];
        for &x in &images {
            let a = x.unsigned_abs() as usize;
            if a == 0 || a > rs.dim() || seen[a - 1] {
                return Err(bad("not a signed permutation"));
            }
            seen[a - 1] = true;
        }
        let negatives = images.iter().filter(|x| **x < 0).count();
        match rs.family() {
            Family::A if negatives > 0 => return Err(bad("type A admits no sign changes")),
            Family::D if negatives % 2 == 1 => {
                return Err(bad("type D needs an even number of sign changes"))
            }
            _ => {}
        }
        Ok(WeylElement {
            rs: rs.clone(),
            images,
        })
    }

    /// The simple reflection `s_i`, 1-based.
    pub fn simple(rs: &RootSystem, i: usize) -> Result<Self> {
        rs.check_index(i)?;
        Ok(WeylElement {
            rs: rs.clone(),
            images: rs.simple_reflection_images(i).to_vec(),
        })
    }

    /// `s_{i_1} s_{i_2} ⋯ s_{i_k}`.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rs);
        for &i in word {
            w = &w * &Self::simple(rs, i)?;
        }
        Ok(w)
    }

    /// The reflection in a root `β`.
    pub fn reflection(rs: &RootSystem, beta: &[i64]) -> Self {
        assert_eq!(beta.len(), rs.dim());
        WeylElement {
            rs: rs.clone(),
            images: reflection_images(beta),
        }
    }

    /// Parses either signed images `[2,-1,3]` or a word `s2 s1` (`e` for
    /// the identity).
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let s = s.trim();
        let perr = |msg: String| Error::Parse { pos: 0, msg };
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            let images = inner
                .split(',')
                .map(|x| x.trim().parse::<i32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| perr(format!("bad image list {s:?}: {e}")))?;
            return Self::from_images(rs, images);
        }
        if s == "e" || s.is_empty() {
            return Ok(Self::identity(rs));
        }
        let word = s
            .split(|c: char| c.is_whitespace() || c == '*' || c == '·')
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.strip_prefix('s')
                    .and_then(|d| d.parse::<usize>().ok())
                    .ok_or_else(|| perr(format!("bad simple reflection {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_word(rs, &word)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, x)| *x == i as i32 + 1)
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.rs != other.rs {
            return Err(Error::RankMismatch {
                expected: self.rs.dim(),
                found: other.rs.dim(),
            });
        }
        // (uv)(i) = u(v(i))
        let images = other
            .images
            .iter()
            .map(|&v| {
                let u = self.images[v.unsigned_abs() as usize - 1];
                if v < 0 {
                    -u
                } else {
                    u
                }
            })
            .collect();
        Ok(WeylElement {
            rs: self.rs.clone(),
            images,
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            let target = x.unsigned_abs() as usize - 1;
            images[target] = (i as i32 + 1) * x.signum();
        }
        WeylElement {
            rs: self.rs.clone(),
            images,
        }
    }

    /// `w·v` for a coordinate vector.
    pub fn apply_coords<T: Clone + Neg<Output = T>>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.images.len());
        let mut out: Vec<T> = v.to_vec();
        for (i, &x) in self.images.iter().enumerate() {
            let k = x.unsigned_abs() as usize - 1;
            out[k] = if x < 0 { -v[i].clone() } else { v[i].clone() };
        }
        out
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.rs
            .positive_roots()
            .iter()
            .filter(|b| !is_positive(&self.apply_coords(b)))
            .count()
    }

    /// True when `w(α_i) < 0`, i.e. `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        !is_positive(&self.apply_coords(self.rs.simple_root(i)))
    }

    /// True when `ℓ(s_i w) < ℓ(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    /// Lexicographically smallest reduced word.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::new();
        let mut w = self.clone();
        while !w.is_identity() {
            let i = (1..=self.rs.rank())
                .find(|&i| w.has_left_descent(i))
                .expect("a non-identity element has a left descent");
            word.push(i);
            w = &WeylElement::simple(&self.rs, i).unwrap() * &w;
        }
        word
    }

    /// Reduced word rendered as `s2 s1`, or `e`.
    pub fn word_string(&self) -> String {
        word_to_string(&self.reduced_word())
    }

    pub fn act<P: WeylAction>(&self, p: &P) -> Result<P> {
        p.act_by(self)
    }
}

pub(crate) fn word_to_string(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|i| format!("s{i}"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl Mul for &WeylElement {
    type Output = WeylElement;
    fn mul(self, rhs: &WeylElement) -> WeylElement {
        self.compose(rhs)
            .expect("elements of different Weyl groups")
    }
}

/// Things a Weyl group element acts on.
pub trait WeylAction: Sized {
    fn act_by(&self, w: &WeylElement) -> Result<Self>;
}

fn check_dim(w: &WeylElement, found: usize) -> Result<()> {
    if w.rs.dim() != found {
        return Err(Error::RankMismatch {
            expected: w.rs.dim(),
            found,
        });
    }
    Ok(())
}

/// `x_i ↦ ±x_{|w(i)|}`.
impl WeylAction for ExactPoly {
    fn act_by(&self, w: &WeylElement) -> Result<Self> {
        check_dim(w, self.nvars())?;
        Ok(self.map_monomials(self.nvars(), |e| {
            let mut out = vec![0u32; e.len()];
            let mut negative = false;
            for (i, &x) in w.images.iter().enumerate() {
                out[x.unsigned_abs() as usize - 1] = e[i];
                if x < 0 && e[i] % 2 == 1 {
                    negative = !negative;
                }
            }
            let c = if negative {
                -Rational::one()
            } else {
                Rational::one()
            };
            (out, c)
        }))
    }
}

/// `t_i ↦ t_{|w(i)|}^{±1}`.
impl WeylAction for LaurentPoly {
    fn act_by(&self, w: &WeylElement) -> Result<Self> {
        check_dim(w, self.nvars())?;
        Ok(self.map_monomials(self.nvars(), |e| {
            let mut out = vec![0i32; e.len()];
            for (i, &x) in w.images.iter().enumerate() {
                out[x.unsigned_abs() as usize - 1] = if x < 0 { -e[i] } else { e[i] };
            }
            (out, Rational::one())
        }))
    }
}

impl WeylAction for Vec<Rational> {
    fn act_by(&self, w: &WeylElement) -> Result<Self> {
        check_dim(w, self.len())?;
        Ok(w.apply_coords(self))
    }
}

impl WeylAction for Vec<i64> {
    fn act_by(&self, w: &WeylElement) -> Result<Self> {
        check_dim(w, self.len())?;
        Ok(w.apply_coords(self))
    }
}

pub fn apply<P: WeylAction>(w: &WeylElement, v: &P) -> Result<P> {
    v.act_by(w)
}

/// The fully enumerated Weyl group, sorted by length then images.
pub struct WeylGroup {
    rs: RootSystem,
    elements: Vec<WeylElement>,
    lengths: Vec<usize>,
    index: HashMap<Vec<i32>, usize>,
    // smallest left descent i and the index of s_i w
    left_step: Vec<Option<(usize, usize)>>,
    // offsets[d]..offsets[d+1] holds the elements of length d
    offsets: Vec<usize>,
}

type GroupCache = Mutex<HashMap<(Family, usize), Arc<WeylGroup>>>;

impl WeylGroup {
    pub(crate) fn of(rs: &RootSystem) -> Arc<WeylGroup> {
        static CACHE: OnceLock<GroupCache> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let key = (rs.family(), rs.rank());
        if let Some(g) = cache.lock().unwrap().get(&key) {
            return g.clone();
        }
        let g = Arc::new(Self::enumerate(rs));
        cache.lock().unwrap().entry(key).or_insert(g).clone()
    }

    fn enumerate(rs: &RootSystem) -> WeylGroup {
        let n = rs.rank();
        let gens: Vec<WeylElement> = (1..=n)
            .map(|i| WeylElement::simple(rs, i).unwrap())
            .collect();
        // breadth-first distance from the identity is the length
        let mut depth: HashMap<Vec<i32>, usize> = HashMap::new();
        let mut found: Vec<(usize, WeylElement)> = Vec::new();
        let mut queue = VecDeque::new();
        let e = WeylElement::identity(rs);
        depth.insert(e.images.clone(), 0);
        queue.push_back(e);
        while let Some(w) = queue.pop_front() {
            let d = depth[&w.images];
            for s in &gens {
                let v = s * &w;
                if !depth.contains_key(&v.images) {
                    depth.insert(v.images.clone(), d + 1);
                    queue.push_back(v);
                }
            }
            found.push((d, w));
        }
        found.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.images.cmp(&b.1.images)));
        let lengths: Vec<usize> = found.iter().map(|(d, _)| *d).collect();
        let elements: Vec<WeylElement> = found.into_iter().map(|(_, w)| w).collect();
        let index: HashMap<Vec<i32>, usize> = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.images.clone(), k))
            .collect();
        let left_step = elements
            .iter()
            .enumerate()
            .map(|(k, w)| {
                gens.iter().enumerate().find_map(|(i, s)| {
                    let j = index[&(s * w).images];
                    (lengths[j] < lengths[k]).then_some((i + 1, j))
                })
            })
            .collect();
        let maxlen = lengths.last().copied().unwrap_or(0);
        let mut offsets = vec![0; maxlen + 2];
        for d in 0..=maxlen + 1 {
            offsets[d] = lengths.partition_point(|&l| l < d);
        }
        WeylGroup {
            rs: rs.clone(),
            elements,
            lengths,
            index,
            left_step,
            offsets,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        if w.rs != self.rs {
            return None;
        }
        self.index.get(&w.images).copied()
    }

    pub fn length_of(&self, k: usize) -> usize {
        self.lengths[k]
    }

    pub fn max_length(&self) -> usize {
        self.lengths.last().copied().unwrap_or(0)
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().unwrap()
    }

    /// Indices of the elements of length `d`.
    pub fn of_length(&self, d: usize) -> std::ops::Range<usize> {
        if d + 1 >= self.offsets.len() {
            return self.len()..self.len();
        }
        self.offsets[d]..self.offsets[d + 1]
    }

    /// `(i, index of s_i w)` for the smallest left descent `i` of element `k`.
    pub fn left_step(&self, k: usize) -> Option<(usize, usize)> {
        self.left_step[k]
    }

    pub fn reduced_word_of(&self, k: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut k = k;
        while let Some((i, j)) = self.left_step[k] {
            word.push(i);
            k = j;
        }
        word
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::parse_poly;
    use crate::rootdata::build_root_system;
    use proptest::prelude::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        build_root_system(f, n).unwrap()
    }

    fn xp(s: &str, n: usize) -> ExactPoly {
        parse_poly(s, 'x', Some(n)).unwrap()
    }

    #[test]
    fn simple_reflections_on_coordinates() {
        let a2 = rs(Family::A, 2);
        let s1 = WeylElement::simple(&a2, 1).unwrap();
        assert_eq!(s1.act(&xp("x1", 3)).unwrap(), xp("x2", 3));
        let c3 = rs(Family::C, 3);
        let s3 = WeylElement::simple(&c3, 3).unwrap();
        assert_eq!(s3.act(&xp("x3", 3)).unwrap(), xp("-x3", 3));
        assert_eq!(s3.act(&xp("x1", 3)).unwrap(), xp("x1", 3));
        let d4 = rs(Family::D, 4);
        let s4 = WeylElement::simple(&d4, 4).unwrap();
        assert_eq!(s4.act(&xp("x3", 4)).unwrap(), xp("-x4", 4));
    }

    #[test]
    fn action_checks_dimensions() {
        let a2 = rs(Family::A, 2);
        let s1 = WeylElement::simple(&a2, 1).unwrap();
        assert!(matches!(
            s1.act(&xp("x1", 2)),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn lengths_and_words() {
        let a2 = rs(Family::A, 2);
        let e = WeylElement::identity(&a2);
        assert_eq!(e.length(), 0);
        assert!(e.reduced_word().is_empty());
        assert_eq!(e.word_string(), "e");
        let s1 = WeylElement::simple(&a2, 1).unwrap();
        assert_eq!(s1.length(), 1);
        let w = WeylElement::from_word(&a2, &[2, 1]).unwrap();
        assert_eq!(w.reduced_word(), vec![2, 1]);
        let g = a2.weyl_group();
        assert_eq!(g.longest().reduced_word(), vec![1, 2, 1]);
        let c2 = rs(Family::C, 2);
        assert_eq!(c2.weyl_group().longest().length(), 4);
    }

    #[test]
    fn group_orders() {
        assert_eq!(rs(Family::C, 2).weyl_group().len(), 8);
        assert_eq!(rs(Family::B, 3).weyl_group().len(), 48);
        assert_eq!(rs(Family::C, 3).weyl_group().len(), 48);
        assert_eq!(rs(Family::D, 4).weyl_group().len(), 192);
        assert_eq!(rs(Family::A, 3).weyl_group().len(), 24);
    }

    #[test]
    fn group_lengths_match_inversion_count() {
        for (f, n) in [(Family::B, 3), (Family::D, 4), (Family::A, 3)] {
            let g = rs(f, n).weyl_group();
            for k in 0..g.len() {
                let w = g.element(k);
                assert_eq!(g.length_of(k), w.length());
                let word = g.reduced_word_of(k);
                assert_eq!(word, w.reduced_word());
                assert_eq!(&WeylElement::from_word(g.root_system(), &word).unwrap(), w);
            }
        }
    }

    #[test]
    fn braid_relations() {
        for (f, n) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
        ] {
            let r = rs(f, n);
            for i in 1..=n {
                for j in 1..=n {
                    let si = WeylElement::simple(&r, i).unwrap();
                    let sj = WeylElement::simple(&r, j).unwrap();
                    let m = r.braid_order(i, j);
                    let p = &si * &sj;
                    let mut acc = WeylElement::identity(&r);
                    for k in 1..=m {
                        acc = &acc * &p;
                        assert_eq!(acc.is_identity(), k == m, "{r} s{i} s{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        let b3 = rs(Family::B, 3);
        let w = WeylElement::parse(&b3, "[2,-1,3]").unwrap();
        assert_eq!(w.to_string(), "[2,-1,3]");
        let v = WeylElement::parse(&b3, &w.word_string()).unwrap();
        assert_eq!(v, w);
        assert!(WeylElement::parse(&b3, "[1,1,2]").is_err());
        let d4 = rs(Family::D, 4);
        assert!(WeylElement::from_images(&d4, vec![-1, 2, 3, 4]).is_err());
        let a2 = rs(Family::A, 2);
        assert!(WeylElement::from_images(&a2, vec![-1, 2, 3]).is_err());
    }

    #[test]
    fn c2_invariant_in_cayley_coordinates() {
        let c2 = rs(Family::C, 2);
        let f: LaurentPoly = parse_poly("(t1 - t1^-1)^2 + (t2 - t2^-1)^2", 't', Some(2)).unwrap();
        let g = c2.weyl_group();
        assert!(crate::exactpoly::is_invariant(&f, g.elements()).unwrap());
        let a1 = rs(Family::A, 1);
        let sym = xp("x1 + x2", 2);
        assert!(crate::exactpoly::is_invariant(&sym, a1.weyl_group().elements()).unwrap());
        let s1 = WeylElement::simple(&a1, 1).unwrap();
        assert!(!crate::exactpoly::is_invariant(&xp("x1", 2), &[s1]).unwrap());
    }

    proptest! {
        #[test]
        fn simple_reflections_are_involutions(i in 1usize..=4, k in 0usize..4, f in 0usize..4) {
            let fam = [Family::A, Family::B, Family::C, Family::D][f];
            let r = rs(fam, 4);
            let s = WeylElement::simple(&r, i).unwrap();
            let mut v = vec![0i64; r.dim()];
            v[k] = 1;
            prop_assert_eq!(s.apply_coords(&s.apply_coords(&v)), v);
        }

        #[test]
        fn inverse_composes_to_identity(k in 0usize..192) {
            let g = rs(Family::D, 4).weyl_group();
            let w = g.element(k);
            prop_assert!((w * &w.inverse()).is_identity());
            prop_assert_eq!(w.inverse().length(), w.length());
        }
    }
}
