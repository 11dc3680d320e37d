#![allow(dead_code)]

use qcancel::qmatrix::{build_word, word_product, WordSpec};
use qcancel::qplane::{rho_matrix, RhoMatrix};
use qcancel::sl2q::{pbw_nf_word_with, word_fold, Gen, ReductionOrder};
use qcancel::{CycloContext, QLaurent, Ring, TElement, TMonomial};
use rand::rngs::StdRng;
use rand::Rng as _;

pub fn random_laurent(rng: &mut StdRng) -> QLaurent {
    let n = rng.gen_range(0..=3);
    QLaurent::from_terms((0..n).map(|_| (rng.gen_range(-3..=3), rng.gen_range(-5..=5))))
}

pub fn random_telement(rng: &mut StdRng, k: usize, ctx: Option<&CycloContext>) -> TElement {
    let n = rng.gen_range(0..=4);
    (0..n).fold(TElement::zero(k, ctx.cloned()), |acc, _| {
        let alpha = (0..k).map(|_| rng.gen_range(-3..=3)).collect();
        let beta = (0..k).map(|_| rng.gen_range(0..=3)).collect();
        let mono = TMonomial::new(alpha, beta).unwrap();
        acc.add(&TElement::monomial(mono, random_laurent(rng), ctx.cloned()))
    })
}

/// Number of ring-axiom identities violated by `(x, y, z)`.
pub fn ring_axiom_failures<R: Ring>(x: &R, y: &R, z: &R) -> usize {
    let zero = x.zero_like();
    let one = x.one_like();
    [
        x.add(y) == y.add(x),
        x.add(y).add(z) == x.add(&y.add(z)),
        x.mul(y).mul(z) == x.mul(&y.mul(z)),
        x.mul(&y.add(z)) == x.mul(y).add(&x.mul(z)),
        x.add(y).mul(z) == x.mul(z).add(&y.mul(z)),
        x.add(&zero) == *x,
        x.mul(&one) == *x && one.mul(x) == *x,
        x.add(&x.neg()).is_zero(),
        x.mul(&zero).is_zero(),
    ]
    .iter()
    .filter(|ok| !**ok)
    .count()
}

pub fn random_word(rng: &mut StdRng, max_len: usize) -> Vec<Gen> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| Gen::ALL[rng.gen_range(0..4)]).collect()
}

/// Whether both reduction orders and the generator-by-generator fold agree.
pub fn pbw_confluent(word: &[Gen]) -> bool {
    let left = pbw_nf_word_with(word, ReductionOrder::Leftmost);
    let right = pbw_nf_word_with(word, ReductionOrder::Rightmost);
    left == right && left == word_fold(word)
}

/// Whether `ρ_n(A_1⋯A_k) = ρ_n(A_{j+1}⋯A_k) ∘ ρ_n(A_1⋯A_j)` for every split.
pub fn rho_antihom_holds(spec: &WordSpec, n: usize) -> bool {
    let word = build_word(spec, None);
    let full = rho_matrix(n, &word_product(&word).unwrap());
    (1..word.len()).all(|j| {
        let first = rho_matrix(n, &word_product(&word[..j]).unwrap());
        let second = rho_matrix(n, &word_product(&word[j..]).unwrap());
        RhoMatrix::compose(&second, &first) == full
    })
}

/// `T_n(t)` for an integer `t` by the three-term recurrence.
pub fn chebyshev_t_int(n: u32, t: i128) -> i128 {
    let (mut prev, mut cur) = (2i128, t);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = t * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}
