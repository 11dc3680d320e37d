//! The quantum coordinate ring `SL₂^q` on generators `a, b, c, d` with
//!
//! ```text
//! ba = qab   ca = qac   db = qbd   dc = qcd   bc = cb
//! ad - q⁻¹bc = da - qbc = 1
//! ```
//!
//! Elements are kept in the PBW basis `{a^i b^j c^k d^l : i·l = 0}`.
//! Multiplication appends one generator at a time on the right, using
//! closed forms for each generator; [`pbw_nf_word`] is an independent
//! rewriting of free words used to cross-check it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::qmatrix::Matrix2;
use crate::qscalar::QLaurent;
use crate::ring::{QAlgebra, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    A,
    B,
    C,
    D,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::B, Gen::C, Gen::D];

    pub fn from_char(ch: char) -> Option<Self> {
        match ch {
            'a' => Some(Gen::A),
            'b' => Some(Gen::B),
            'c' => Some(Gen::C),
            'd' => Some(Gen::D),
            _ => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::C => 'c',
            Gen::D => 'd',
        }
    }
}

/// `a^i b^j c^k d^l`; in canonical elements `i * l == 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PBWMonomial {
    pub i: u32,
    pub j: u32,
    pub k: u32,
    pub l: u32,
}

impl PBWMonomial {
    pub const ONE: PBWMonomial = PBWMonomial { i: 0, j: 0, k: 0, l: 0 };

    pub fn new(i: u32, j: u32, k: u32, l: u32) -> Self {
        Self { i, j, k, l }
    }

    pub fn gen(g: Gen) -> Self {
        let mut m = Self::ONE;
        match g {
            Gen::A => m.i = 1,
            Gen::B => m.j = 1,
            Gen::C => m.k = 1,
            Gen::D => m.l = 1,
        }
        m
    }

    pub fn is_normal(&self) -> bool {
        self.i == 0 || self.l == 0
    }

    /// Letters of the monomial in `a < b < c < d` order.
    pub fn letters(&self) -> impl Iterator<Item = Gen> {
        let reps = [(Gen::A, self.i), (Gen::B, self.j), (Gen::C, self.k), (Gen::D, self.l)];
        reps.into_iter()
            .flat_map(|(g, n)| std::iter::repeat_n(g, n as usize))
    }

    fn render(&self) -> String {
        [('a', self.i), ('b', self.j), ('c', self.k), ('d', self.l)]
            .iter()
            .filter(|(_, e)| *e > 0)
            .map(|(v, e)| format!("{v}^{e}"))
            .collect::<Vec<_>>()
            .join("*")
    }
}

type Terms = BTreeMap<PBWMonomial, QLaurent>;

fn add_term(terms: &mut Terms, m: PBWMonomial, c: QLaurent) {
    use std::collections::btree_map::Entry;
    match terms.entry(m) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &c;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Element of `SL₂^q` in PBW normal form, at generic `q`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SL2qElement {
    terms: Terms,
}

impl SL2qElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(PBWMonomial::ONE, QLaurent::one())
    }

    pub fn gen(g: Gen) -> Self {
        Self::monomial(PBWMonomial::gen(g), QLaurent::one())
    }

    pub fn a() -> Self {
        Self::gen(Gen::A)
    }
    pub fn b() -> Self {
        Self::gen(Gen::B)
    }
    pub fn c() -> Self {
        Self::gen(Gen::C)
    }
    pub fn d() -> Self {
        Self::gen(Gen::D)
    }

    /// A single basis monomial; a non-normal key (`i·l > 0`) is normalized by
    /// multiplying out its letters.
    pub fn monomial(m: PBWMonomial, c: QLaurent) -> Self {
        if !m.is_normal() {
            let word: Vec<Gen> = m.letters().collect();
            return word_fold(&word).scale(&c);
        }
        let mut terms = Terms::new();
        add_term(&mut terms, m, c);
        Self { terms }
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &PBWMonomial) -> QLaurent {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Right multiplication by one generator, in closed form.
    pub fn mul_gen(&self, g: Gen) -> Self {
        let mut out = Terms::new();
        for (m, c) in &self.terms {
            let PBWMonomial { i, j, k, l } = *m;
            match g {
                // d^l b = q^l b d^l
                Gen::B => add_term(&mut out, PBWMonomial::new(i, j + 1, k, l), c.shifted(l.into())),
                // d^l c = q^l c d^l
                Gen::C => add_term(&mut out, PBWMonomial::new(i, j, k + 1, l), c.shifted(l.into())),
                Gen::D if i == 0 => add_term(&mut out, PBWMonomial::new(0, j, k, l + 1), c.clone()),
                // l == 0 here: a^i b^j c^k d = a^{i-1} (a d) q^{-j-k} b^j c^k
                Gen::D => {
                    let s = -i64::from(j + k);
                    add_term(&mut out, PBWMonomial::new(i - 1, j, k, 0), c.shifted(s));
                    add_term(&mut out, PBWMonomial::new(i - 1, j + 1, k + 1, 0), c.shifted(s - 1));
                }
                // b^j c^k a = q^{j+k} a b^j c^k
                Gen::A if l == 0 => add_term(&mut out, PBWMonomial::new(i + 1, j, k, 0), c.shifted(i64::from(j + k))),
                // i == 0 here: d^l a = d^{l-1}(1 + q bc) = d^{l-1} + q^{2l-1} bc d^{l-1}
                Gen::A => {
                    add_term(&mut out, PBWMonomial::new(0, j, k, l - 1), c.clone());
                    add_term(&mut out, PBWMonomial::new(0, j + 1, k + 1, l - 1), c.shifted(2 * i64::from(l) - 1));
                }
            }
        }
        Self { terms: out }
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (n, (m, c)) in self.terms.iter().enumerate() {
            let mono = m.render();
            let term = if mono.is_empty() {
                if c.len() > 1 { format!("({c})") } else { c.to_string() }
            } else if c.is_one() {
                mono
            } else if c.negated().is_one() {
                format!("-{mono}")
            } else if c.len() > 1 {
                format!("({c})*{mono}")
            } else {
                format!("{c}*{mono}")
            };
            match (n, term.strip_prefix('-')) {
                (0, _) => out.push_str(&term),
                (_, Some(rest)) => {
                    out.push_str(" - ");
                    out.push_str(rest);
                }
                (_, None) => {
                    out.push_str(" + ");
                    out.push_str(&term);
                }
            }
        }
        out
    }
}

/// Product in `SL₂^q`, normalized to the PBW basis.
pub fn pbw_mul(x: &SL2qElement, y: &SL2qElement) -> SL2qElement {
    let mut out = Terms::new();
    for (m, c) in &y.terms {
        let part = m.letters().fold(x.clone(), |acc, g| acc.mul_gen(g));
        for (pm, pc) in part.terms {
            add_term(&mut out, pm, &pc * c);
        }
    }
    SL2qElement { terms: out }
}

/// Left fold of [`SL2qElement::mul_gen`] over a word.
pub fn word_fold(word: &[Gen]) -> SL2qElement {
    word.iter().fold(SL2qElement::one(), |acc, &g| acc.mul_gen(g))
}

/// Redex selection for the free-word rewriting oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOrder {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Copy, Debug)]
enum Redex {
    /// Adjacent inversion at `p, p+1`.
    Swap(usize),
    /// `a w d` with `w` a word in `b, c`, spanning `start..=end`.
    Det(usize, usize),
}

impl Redex {
    fn start(self) -> usize {
        match self {
            Redex::Swap(p) | Redex::Det(p, _) => p,
        }
    }
}

fn redexes(w: &[Gen]) -> Vec<Redex> {
    let mut out = Vec::new();
    for p in 0..w.len().saturating_sub(1) {
        if w[p] > w[p + 1] {
            out.push(Redex::Swap(p));
        }
    }
    for p in 0..w.len() {
        if w[p] != Gen::A {
            continue;
        }
        let mut r = p + 1;
        while r < w.len() && matches!(w[r], Gen::B | Gen::C) {
            r += 1;
        }
        if r < w.len() && w[r] == Gen::D {
            out.push(Redex::Det(p, r));
        }
    }
    out
}

/// One rewriting step: the words (with `q`-exponent and sign) replacing `w`.
fn rewrite(w: &[Gen], redex: Redex) -> Vec<(Vec<Gen>, i64)> {
    let splice = |lo: usize, hi: usize, mid: &[Gen]| -> Vec<Gen> {
        let mut v = w[..lo].to_vec();
        v.extend_from_slice(mid);
        v.extend_from_slice(&w[hi..]);
        v
    };
    use Gen::*;
    match redex {
        Redex::Swap(p) => match (w[p], w[p + 1]) {
            (B, A) => vec![(splice(p, p + 2, &[A, B]), 1)],
            (C, A) => vec![(splice(p, p + 2, &[A, C]), 1)],
            (D, A) => vec![(splice(p, p + 2, &[]), 0), (splice(p, p + 2, &[B, C]), 1)],
            (C, B) => vec![(splice(p, p + 2, &[B, C]), 0)],
            (D, B) => vec![(splice(p, p + 2, &[B, D]), 1)],
            (D, C) => vec![(splice(p, p + 2, &[C, D]), 1)],
            _ => unreachable!("not an inversion"),
        },
        Redex::Det(p, r) => {
            // Walk d leftwards: bd = q⁻¹db and cd = q⁻¹dc, then ad = 1 + q⁻¹bc.
            let inner = &w[p + 1..r];
            let s = -(inner.len() as i64);
            let mut with_bc = vec![B, C];
            with_bc.extend_from_slice(inner);
            vec![(splice(p, r + 1, inner), s), (splice(p, r + 1, &with_bc), s - 1)]
        }
    }
}

fn word_to_monomial(w: &[Gen]) -> PBWMonomial {
    let mut m = PBWMonomial::ONE;
    for g in w {
        match g {
            Gen::A => m.i += 1,
            Gen::B => m.j += 1,
            Gen::C => m.k += 1,
            Gen::D => m.l += 1,
        }
    }
    m
}

/// Normal form of a free word by rewriting with the defining relations
/// until no redex remains.
pub fn pbw_nf_word_with(word: &[Gen], order: ReductionOrder) -> SL2qElement {
    let mut pending: BTreeMap<Vec<Gen>, QLaurent> = BTreeMap::new();
    pending.insert(word.to_vec(), QLaurent::one());
    let mut done = Terms::new();
    while let Some((w, c)) = pending.pop_first() {
        let rs = redexes(&w);
        let chosen = match order {
            ReductionOrder::Leftmost => rs.iter().min_by_key(|r| r.start()),
            ReductionOrder::Rightmost => rs.iter().max_by_key(|r| r.start()),
        };
        match chosen {
            None => add_term(&mut done, word_to_monomial(&w), c),
            Some(&r) => {
                for (nw, e) in rewrite(&w, r) {
                    let nc = c.shifted(e);
                    let slot = pending.entry(nw).or_default();
                    *slot = &*slot + &nc;
                }
            }
        }
    }
    SL2qElement { terms: done }
}

/// Normal form of a free word, scanning for redexes left to right.
pub fn pbw_nf_word(word: &[Gen]) -> SL2qElement {
    pbw_nf_word_with(word, ReductionOrder::Leftmost)
}

/// Parses a word over `{a, b, c, d}`.
pub fn parse_word(s: &str) -> Option<Vec<Gen>> {
    s.chars().map(Gen::from_char).collect()
}

impl fmt::Display for SL2qElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for SL2qElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SL2q({})", self.render())
    }
}

impl Ring for SL2qElement {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn int_like(&self, c: &BigInt) -> Self {
        Self::monomial(PBWMonomial::ONE, QLaurent::one().int_like(c))
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            add_term(&mut terms, *m, c.clone());
        }
        Self { terms }
    }
    fn mul(&self, rhs: &Self) -> Self {
        pbw_mul(self, rhs)
    }
    fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c.negated())).collect(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl QAlgebra for SL2qElement {
    fn scale(&self, c: &QLaurent) -> Self {
        let mut terms = Terms::new();
        for (m, v) in &self.terms {
            add_term(&mut terms, *m, v * c);
        }
        Self { terms }
    }
}

/// The tautological point `(a b; c d)` of `SL₂^q` over itself.
pub fn tautological_point() -> Matrix2<SL2qElement> {
    Matrix2::new(SL2qElement::a(), SL2qElement::b(), SL2qElement::c(), SL2qElement::d())
}

/// Formal sums `Σ c · (left ⊗ right)` in `SL₂^q ⊗ SL₂^q`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct TensorSquare {
    terms: BTreeMap<(PBWMonomial, PBWMonomial), QLaurent>,
}

impl TensorSquare {
    pub fn one() -> Self {
        Self::pure(&SL2qElement::one(), &SL2qElement::one())
    }

    /// `x ⊗ y` expanded bilinearly.
    pub fn pure(x: &SL2qElement, y: &SL2qElement) -> Self {
        let mut out = Self::default();
        for (l, cl) in &x.terms {
            for (r, cr) in &y.terms {
                out.add_term(*l, *r, cl * cr);
            }
        }
        out
    }

    fn add_term(&mut self, l: PBWMonomial, r: PBWMonomial, c: QLaurent) {
        let slot = self.terms.entry((l, r)).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&(l, r));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(PBWMonomial, PBWMonomial), QLaurent> {
        &self.terms
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for ((l, r), c) in &rhs.terms {
            out.add_term(*l, *r, c.clone());
        }
        out
    }

    /// Componentwise product `(x ⊗ y)(x' ⊗ y') = xx' ⊗ yy'`.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &rhs.terms {
                let left = pbw_mul(&SL2qElement::monomial(*l1, QLaurent::one()), &SL2qElement::monomial(*l2, QLaurent::one()));
                let right = pbw_mul(&SL2qElement::monomial(*r1, QLaurent::one()), &SL2qElement::monomial(*r2, QLaurent::one()));
                let c = c1 * c2;
                out = out.add(&Self::pure(&left, &right.scale(&c)));
            }
        }
        out
    }

    /// `Σ f(left) · g(right)` collapsed through multiplication.
    pub fn contract(
        &self,
        f: impl Fn(&SL2qElement) -> SL2qElement,
        g: impl Fn(&SL2qElement) -> SL2qElement,
    ) -> SL2qElement {
        self.terms.iter().fold(SL2qElement::zero(), |acc, ((l, r), c)| {
            let lhs = f(&SL2qElement::monomial(*l, QLaurent::one()));
            let rhs = g(&SL2qElement::monomial(*r, QLaurent::one()));
            acc.add(&pbw_mul(&lhs, &rhs).scale(c))
        })
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|((l, r), c)| {
                let side = |m: &PBWMonomial| {
                    let s = m.render();
                    if s.is_empty() { "1".to_string() } else { s }
                };
                let pair = format!("{}⊗{}", side(l), side(r));
                if c.is_one() {
                    pair
                } else {
                    format!("({c})*{pair}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for TensorSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorSquare({})", self.render())
    }
}

fn gen_coproduct(g: Gen) -> TensorSquare {
    use Gen::*;
    let pairs: [(Gen, Gen); 2] = match g {
        A => [(A, A), (B, C)],
        B => [(A, B), (B, D)],
        C => [(C, A), (D, C)],
        D => [(C, B), (D, D)],
    };
    pairs.iter().fold(TensorSquare::default(), |acc, (l, r)| {
        acc.add(&TensorSquare::pure(&SL2qElement::gen(*l), &SL2qElement::gen(*r)))
    })
}

fn gen_antipode(g: Gen) -> SL2qElement {
    match g {
        Gen::A => SL2qElement::d(),
        Gen::B => SL2qElement::b().scale(&QLaurent::from_terms([(1, -1)])),
        Gen::C => SL2qElement::c().scale(&QLaurent::from_terms([(-1, -1)])),
        Gen::D => SL2qElement::a(),
    }
}

/// Counit: the algebra map with `ε(a) = ε(d) = 1`, `ε(b) = ε(c) = 0`.
pub fn counit(x: &SL2qElement) -> QLaurent {
    x.terms
        .iter()
        .filter(|(m, _)| m.j == 0 && m.k == 0)
        .fold(QLaurent::zero(), |acc, (_, c)| &acc + c)
}

/// Antipode: the algebra anti-homomorphism with `S(a) = d`, `S(b) = -qb`,
/// `S(c) = -q⁻¹c`, `S(d) = a`.
pub fn antipode(x: &SL2qElement) -> SL2qElement {
    x.terms.iter().fold(SL2qElement::zero(), |acc, (m, c)| {
        let letters: Vec<Gen> = m.letters().collect();
        let image = letters
            .iter()
            .rev()
            .fold(SL2qElement::one(), |p, &g| pbw_mul(&p, &gen_antipode(g)));
        acc.add(&image.scale(c))
    })
}

/// Coproduct: the algebra map `Δ(a) = a⊗a + b⊗c`, `Δ(b) = a⊗b + b⊗d`,
/// `Δ(c) = c⊗a + d⊗c`, `Δ(d) = c⊗b + d⊗d`.
pub fn coproduct(x: &SL2qElement) -> TensorSquare {
    x.terms.iter().fold(TensorSquare::default(), |acc, (m, c)| {
        let image = m
            .letters()
            .fold(TensorSquare::one(), |p, g| p.mul(&gen_coproduct(g)));
        let scaled = TensorSquare {
            terms: image
                .terms
                .into_iter()
                .map(|(key, v)| (key, &v * c))
                .collect(),
        };
        acc.add(&scaled)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfMap {
    Counit,
    Antipode,
    Coproduct,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HopfImage {
    Scalar(QLaurent),
    Element(SL2qElement),
    Tensor(TensorSquare),
}

pub fn hopf(x: &SL2qElement, which: HopfMap) -> HopfImage {
    match which {
        HopfMap::Counit => HopfImage::Scalar(counit(x)),
        HopfMap::Antipode => HopfImage::Element(antipode(x)),
        HopfMap::Coproduct => HopfImage::Tensor(coproduct(x)),
    }
}

impl SL2qElement {
    /// Scalar multiple of the unit.
    pub fn from_scalar(c: QLaurent) -> Self {
        Self::monomial(PBWMonomial::ONE, c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i64) -> QLaurent {
        QLaurent::q_pow(e)
    }

    fn bc() -> SL2qElement {
        SL2qElement::monomial(PBWMonomial::new(0, 1, 1, 0), QLaurent::one())
    }

    fn w(s: &str) -> Vec<Gen> {
        parse_word(s).unwrap()
    }

    #[test]
    fn mul_examples() {
        let (a, b, d) = (SL2qElement::a(), SL2qElement::b(), SL2qElement::d());
        assert_eq!(pbw_mul(&d, &a), SL2qElement::one().add(&bc().scale(&q(1))));
        assert_eq!(pbw_mul(&b, &a), pbw_mul(&a, &b).scale(&q(1)));
        assert_eq!(pbw_mul(&d, &b), pbw_mul(&b, &d).scale(&q(1)));
        assert_eq!(pbw_mul(&a, &d), SL2qElement::one().add(&bc().scale(&q(-1))));
    }

    #[test]
    fn word_oracle_examples() {
        assert_eq!(pbw_nf_word(&w("da")), SL2qElement::one().add(&bc().scale(&q(1))));
        assert_eq!(pbw_nf_word(&w("ad")), SL2qElement::one().add(&bc().scale(&q(-1))));
        let ab = pbw_mul(&SL2qElement::a(), &SL2qElement::b());
        let cd = pbw_mul(&SL2qElement::c(), &SL2qElement::d());
        assert_eq!(pbw_nf_word(&w("abcd")), pbw_mul(&ab, &cd));
    }

    #[test]
    fn six_relations_and_determinant() {
        let [a, b, c, d] = Gen::ALL.map(SL2qElement::gen);
        let m = |x: &SL2qElement, y: &SL2qElement| pbw_mul(x, y);
        assert_eq!(m(&b, &a), m(&a, &b).scale(&q(1)));
        assert_eq!(m(&d, &b), m(&b, &d).scale(&q(1)));
        assert_eq!(m(&b, &c), m(&c, &b));
        assert_eq!(m(&c, &a), m(&a, &c).scale(&q(1)));
        assert_eq!(m(&d, &c), m(&c, &d).scale(&q(1)));
        let lhs = m(&a, &d).sub(&m(&b, &c).scale(&q(-1)));
        let rhs = m(&d, &a).sub(&m(&b, &c).scale(&q(1)));
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, SL2qElement::one());
    }

    #[test]
    fn non_normal_monomial_is_normalized() {
        let x = SL2qElement::monomial(PBWMonomial::new(1, 0, 0, 1), QLaurent::one());
        assert_eq!(x, pbw_mul(&SL2qElement::a(), &SL2qElement::d()));
        assert!(x.terms().keys().all(PBWMonomial::is_normal));
    }

    #[test]
    fn reduction_orders_agree_on_long_words() {
        for s in ["dddaaa", "dcbadcba", "adadad", "cadbdacb", "ddbcaa"] {
            let l = pbw_nf_word_with(&w(s), ReductionOrder::Leftmost);
            let r = pbw_nf_word_with(&w(s), ReductionOrder::Rightmost);
            assert_eq!(l, r, "{s}");
            assert_eq!(l, word_fold(&w(s)), "{s}");
        }
    }

    #[test]
    fn hopf_examples() {
        assert_eq!(antipode(&SL2qElement::b()), SL2qElement::b().scale(&QLaurent::from_terms([(1, -1)])));
        let ab = pbw_mul(&SL2qElement::a(), &SL2qElement::b());
        let bd = pbw_mul(&SL2qElement::b(), &SL2qElement::d());
        assert_eq!(antipode(&ab), bd.scale(&QLaurent::from_terms([(1, -1)])));
        let expect = TensorSquare::pure(&SL2qElement::a(), &SL2qElement::a())
            .add(&TensorSquare::pure(&SL2qElement::b(), &SL2qElement::c()));
        assert_eq!(coproduct(&SL2qElement::a()), expect);
        assert_eq!(counit(&SL2qElement::a()), QLaurent::one());
        assert_eq!(counit(&SL2qElement::b()), QLaurent::zero());
        assert!(matches!(hopf(&SL2qElement::d(), HopfMap::Antipode), HopfImage::Element(e) if e == SL2qElement::a()));
    }

    #[test]
    fn counit_axiom_on_generators() {
        let eps = |x: &SL2qElement| SL2qElement::from_scalar(counit(x));
        for g in Gen::ALL {
            let x = SL2qElement::gen(g);
            let delta = coproduct(&x);
            assert_eq!(delta.contract(eps, |y| y.clone()), x, "{g:?} (ε⊗id)");
            assert_eq!(delta.contract(|y| y.clone(), eps), x, "{g:?} (id⊗ε)");
        }
    }

    #[test]
    fn antipode_axiom_on_generators() {
        for g in Gen::ALL {
            let x = SL2qElement::gen(g);
            let unit = SL2qElement::from_scalar(counit(&x));
            let delta = coproduct(&x);
            assert_eq!(delta.contract(antipode, |y| y.clone()), unit, "{g:?} S⊗id");
            assert_eq!(delta.contract(|y| y.clone(), antipode), unit, "{g:?} id⊗S");
        }
    }

    #[test]
    fn coproduct_and_counit_are_multiplicative() {
        let x = pbw_mul(&SL2qElement::d(), &SL2qElement::a()).add(&SL2qElement::b());
        let y = pbw_mul(&SL2qElement::c(), &SL2qElement::d());
        let xy = pbw_mul(&x, &y);
        assert_eq!(coproduct(&xy), coproduct(&x).mul(&coproduct(&y)));
        assert_eq!(counit(&xy), &counit(&x) * &counit(&y));
        assert_eq!(antipode(&xy), pbw_mul(&antipode(&y), &antipode(&x)));
    }

    #[test]
    fn rendering() {
        let x = SL2qElement::one().add(&bc().scale(&q(1)));
        assert_eq!(x.render(), "1 + q*b^1*c^1");
        assert_eq!(SL2qElement::zero().render(), "0");
    }
}
