//! Polycyclic presentations of p-groups and their Cayley tables.
//!
//! A presentation has generators `g_1, .., g_c` where `g_i` has relative
//! order `p^{e_i}`. Every element has the unique normal form
//! `g_c^{l_c} ... g_1^{l_1}` with `0 <= l_u < p^{e_u}`, and words are stored
//! as exponent tuples `[l_1, .., l_c]`. The relations are
//!
//! * power: `g_i^{p^{e_i}} = w_i`, where `w_i` only uses `g_{i+1}, .., g_c`;
//! * conjugate: `g_i g_j = w_{ij} g_i` for `i < j`, with `w_{ij}` again in
//!   deeper generators.
//!
//! Collection is carried out level by level: the subgroup `N_i` generated by
//! `g_i, .., g_c` is a cyclic extension of `N_{i+1}` by `g_i`, so the product
//! `(n g_i^a)(m g_i^b)` rewrites to `n σ^a(m) [w_i] g_i^{a+b mod p^{e_i}}`
//! with `σ` the conjugation action of `g_i` on `N_{i+1}`. The table of
//! `N_{i+1}` is built first and the conjugation action is obtained by
//! collecting the images `w_{ij}` in it. The resulting table is then checked
//! exhaustively, so an inconsistent presentation is always rejected.

use crate::error::{Error, Result};
use crate::group::table::{CayleyTable, GroupLimits};
use crate::number::{compositions, is_prime};

pub type Word = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolycyclicPresentation {
    prime: u64,
    exponents: Vec<u32>,
    powers: Vec<Word>,
    conjugates: Vec<Word>,
}

/// Position of the pair `(i, j)`, `i < j < c`, in the conjugate list.
pub fn pair_index(c: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < c);
    i * (2 * c - i - 1) / 2 + (j - i - 1)
}

impl PolycyclicPresentation {
    /// Validates shapes and normal-form constraints of the relations.
    /// `conjugates` are listed in pair order `(0,1), (0,2), .., (1,2), ..`.
    pub fn new(prime: u64, exponents: Vec<u32>, powers: Vec<Word>, conjugates: Vec<Word>) -> Result<Self> {
        let c = exponents.len();
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        if !is_prime(prime) {
            return bad(format!("{prime} is not prime"));
        }
        if c == 0 {
            return bad("presentation needs at least one generator".into());
        }
        if exponents.iter().any(|&e| e == 0) {
            return bad("relative order exponents must be positive".into());
        }
        if powers.len() != c {
            return bad(format!("expected {c} power relations, got {}", powers.len()));
        }
        if conjugates.len() != c * (c - 1) / 2 {
            return bad(format!("expected {} conjugate relations, got {}", c * (c - 1) / 2, conjugates.len()));
        }
        let pres = PolycyclicPresentation { prime, exponents, powers, conjugates };
        for i in 0..c {
            pres.check_word(&pres.powers[i], i, &format!("power relation {}", i + 1))?;
            for j in i + 1..c {
                pres.check_word(pres.conjugate(i, j), i, &format!("conjugate relation ({}, {})", i + 1, j + 1))?;
            }
        }
        Ok(pres)
    }

    /// The presentation of `Z_{p^{e_1}} x .. x Z_{p^{e_c}}`: trivial powers
    /// and commuting generators.
    pub fn abelian(prime: u64, exponents: Vec<u32>) -> Result<Self> {
        let c = exponents.len();
        let powers = vec![vec![0; c]; c];
        let mut conjugates = Vec::new();
        for i in 0..c {
            for j in i + 1..c {
                let mut w = vec![0; c];
                w[j] = 1;
                conjugates.push(w);
            }
        }
        PolycyclicPresentation::new(prime, exponents, powers, conjugates)
    }

    fn check_word(&self, w: &Word, level: usize, what: &str) -> Result<()> {
        if w.len() != self.len() {
            return Err(Error::InvalidSpec(format!("{what}: word has length {}, expected {}", w.len(), self.len())));
        }
        for (u, &l) in w.iter().enumerate() {
            if u <= level && l != 0 {
                return Err(Error::InvalidSpec(format!("{what}: uses generator {} at or above its level", u + 1)));
            }
            if l as u64 >= self.relative_order(u) {
                return Err(Error::InvalidSpec(format!("{what}: exponent {l} of generator {} not reduced", u + 1)));
            }
        }
        Ok(())
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn powers(&self) -> &[Word] {
        &self.powers
    }

    pub fn conjugates(&self) -> &[Word] {
        &self.conjugates
    }

    pub fn power(&self, i: usize) -> &Word {
        &self.powers[i]
    }

    pub fn conjugate(&self, i: usize, j: usize) -> &Word {
        &self.conjugates[pair_index(self.len(), i, j)]
    }

    pub fn relative_order(&self, i: usize) -> u64 {
        self.prime.pow(self.exponents[i])
    }

    pub fn order(&self) -> u128 {
        self.exponents.iter().fold(1u128, |acc, &e| acc.saturating_mul((self.prime as u128).saturating_pow(e)))
    }

    /// Total number of exponent entries across all relations.
    pub fn encoded_len(&self) -> usize {
        self.len() * (self.powers.len() + self.conjugates.len())
    }
}

/// Cayley table of `N_i = <g_i, .., g_c>` with normal-form indexing.
#[derive(Clone)]
struct Level {
    order: usize,
    table: Vec<u32>,
}

impl Level {
    fn cyclic(r: usize) -> Self {
        let t = CayleyTable::cyclic(r);
        Level { order: r, table: t.rows().into_iter().flatten().map(|x| x as u32).collect() }
    }

    #[inline]
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    fn inverse(&self, x: usize) -> usize {
        (0..self.order).find(|&y| self.mul(x, y) == 0).expect("group element has an inverse")
    }
}

/// Strides of the mixed-radix normal-form index: `g_u` sits at `stride[u]`.
fn strides(radix: &[usize]) -> Vec<usize> {
    let mut s = vec![1usize; radix.len()];
    for u in (0..radix.len().saturating_sub(1)).rev() {
        s[u] = s[u + 1] * radix[u + 1];
    }
    s
}

fn word_index(w: &[u32], strides: &[usize]) -> usize {
    w.iter().zip(strides).map(|(&l, &s)| l as usize * s).sum()
}

fn index_word(mut x: usize, strides: &[usize], len: usize) -> Word {
    let mut w = vec![0u32; len];
    for (u, &s) in strides.iter().enumerate() {
        w[u] = (x / s) as u32;
        x %= s;
    }
    w
}

/// The endomorphism of `N` (level `i+1`) sending `g_j` to `images[j - i - 1]`,
/// evaluated on normal forms. `None` unless it is a bijective homomorphism.
fn conjugation_action(n: &Level, level: usize, images: &[usize], radix: &[usize], st: &[usize]) -> Option<Vec<u32>> {
    let c = radix.len();
    let mut sigma = vec![0u32; n.order];
    for (x, slot) in sigma.iter_mut().enumerate() {
        let mut acc = 0usize;
        for j in (level + 1..c).rev() {
            let l = (x / st[j]) % radix[j];
            let img = images[j - level - 1];
            for _ in 0..l {
                acc = n.mul(acc, img);
            }
        }
        *slot = acc as u32;
    }
    let mut seen = vec![false; n.order];
    for &y in &sigma {
        if std::mem::replace(&mut seen[y as usize], true) {
            return None;
        }
    }
    // Multiplicativity against the generators `g_j` suffices: every element
    // is a product of generators.
    for j in level + 1..c {
        let g = st[j];
        let sg = sigma[g] as usize;
        for a in 0..n.order {
            if sigma[n.mul(a, g)] as usize != n.mul(sigma[a] as usize, sg) {
                return None;
            }
        }
    }
    Some(sigma)
}

/// Extends `N` by a generator of relative order `r` acting by `sigma`, with
/// `g^r = z`. Returns `None` when the cyclic-extension conditions fail.
fn extend(n: &Level, sigma: &[u32], r: usize, z: usize) -> Option<Level> {
    if sigma[z] as usize != z {
        return None;
    }
    // powers[k] = sigma^k as a lookup table
    let mut powers: Vec<Vec<u32>> = Vec::with_capacity(r);
    powers.push((0..n.order as u32).collect());
    for k in 1..=r {
        let prev = &powers[k - 1];
        let next: Vec<u32> = prev.iter().map(|&y| sigma[y as usize]).collect();
        if k == r {
            let z_inv = n.inverse(z);
            let ok = (0..n.order).all(|m| next[m] as usize == n.mul(n.mul(z, m), z_inv));
            if !ok {
                return None;
            }
        } else {
            powers.push(next);
        }
    }
    let order = n.order * r;
    let mut table = vec![0u32; order * order];
    for a in 0..r {
        for x in 0..n.order {
            let row = (a * n.order + x) * order;
            for b in 0..r {
                for y in 0..n.order {
                    let mut t = n.mul(x, powers[a][y] as usize);
                    let mut s = a + b;
                    if s >= r {
                        t = n.mul(t, z);
                        s -= r;
                    }
                    table[row + b * n.order + y] = (s * n.order + t) as u32;
                }
            }
        }
    }
    Some(Level { order, table })
}

fn finish(level: Level, st: &[usize]) -> Result<CayleyTable> {
    let t = CayleyTable::from_flat(level.order, level.table, 0);
    t.verify_generated_by(st).map_err(|e| Error::InconsistentPresentation(e.to_string()))?;
    Ok(t)
}

/// Builds the Cayley table of a presentation; the element with normal form
/// `[l_1, .., l_c]` gets index `l_1 * |N_2| + .. + l_c`.
pub fn collect_presentation(pres: &PolycyclicPresentation, limits: &GroupLimits) -> Result<CayleyTable> {
    limits.check_order(pres.order())?;
    let c = pres.len();
    let radix: Vec<usize> = (0..c).map(|u| pres.relative_order(u) as usize).collect();
    let st = strides(&radix);
    let inconsistent = |what: String| Error::InconsistentPresentation(what);
    let deepest = c - 1;
    if word_index(pres.power(deepest), &st) != 0 {
        return Err(inconsistent(format!("power relation {} must be trivial", c)));
    }
    let mut level = Level::cyclic(radix[deepest]);
    for i in (0..deepest).rev() {
        let images: Vec<usize> = (i + 1..c).map(|j| word_index(pres.conjugate(i, j), &st)).collect();
        let sigma = conjugation_action(&level, i, &images, &radix, &st).ok_or_else(|| {
            inconsistent(format!("conjugation by g{} is not an automorphism", i + 1))
        })?;
        let z = word_index(pres.power(i), &st);
        level = extend(&level, &sigma, radix[i], z).ok_or_else(|| {
            inconsistent(format!("power relation of g{} is incompatible with its action", i + 1))
        })?;
    }
    finish(level, &st)
}

/// A presentation accepted by collection together with its table.
#[derive(Debug, Clone)]
pub struct PolycyclicCandidate {
    pub presentation: PolycyclicPresentation,
    pub table: CayleyTable,
}

/// Every consistent presentation of order `p^m` with at most `c` generators.
///
/// Splittings `e_1 + .. + e_j = m` are taken in descending lexicographic
/// order; within one splitting the relation words are enumerated from the
/// deepest level upwards, conjugate images before the power word, each in
/// increasing normal-form index. Isomorphic duplicates are kept.
pub fn enumerate_polycyclic_p_groups(p: u64, m: u32, c: usize, limits: &GroupLimits) -> Result<Vec<PolycyclicCandidate>> {
    if !is_prime(p) {
        return Err(Error::InvalidSpec(format!("{p} is not prime")));
    }
    let order = (p as u128).checked_pow(m).unwrap_or(u128::MAX);
    limits.check_order(order)?;
    let mut out = Vec::new();
    for split in compositions(m, c.max(1)) {
        let len = split.len();
        let radix: Vec<usize> = split.iter().map(|&e| p.pow(e) as usize).collect();
        let st = strides(&radix);
        let mut state = Partial {
            radix: &radix,
            st: &st,
            conj: vec![vec![0; len]; len * len.saturating_sub(1) / 2],
            powers: vec![vec![0; len]; len],
        };
        state.descend(len - 1, Level::cyclic(radix[len - 1]), &mut |pres_state, level| {
            let pres = PolycyclicPresentation::new(p, split.clone(), pres_state.powers.clone(), pres_state.conj.clone())?;
            if let Ok(table) = finish(level, &st) {
                out.push(PolycyclicCandidate { presentation: pres, table });
            }
            Ok(())
        })?;
    }
    Ok(out)
}

struct Partial<'a> {
    radix: &'a [usize],
    st: &'a [usize],
    conj: Vec<Word>,
    powers: Vec<Word>,
}

impl Partial<'_> {
    /// `level` is the table of `N_{top}`; tries every relation set for
    /// `g_{top-1}` and recurses.
    fn descend(
        &mut self,
        top: usize,
        level: Level,
        emit: &mut dyn FnMut(&Partial<'_>, Level) -> Result<()>,
    ) -> Result<()> {
        if top == 0 {
            return emit(self, level);
        }
        let i = top - 1;
        let c = self.radix.len();
        let k = c - top;
        let mut images = vec![0usize; k];
        loop {
            if let Some(sigma) = conjugation_action(&level, i, &images, self.radix, self.st) {
                for (off, j) in (top..c).enumerate() {
                    self.conj[pair_index(c, i, j)] = index_word(images[off], self.st, c);
                }
                for z in 0..level.order {
                    if let Some(next) = extend(&level, &sigma, self.radix[i], z) {
                        self.powers[i] = index_word(z, self.st, c);
                        self.descend(i, next, emit)?;
                    }
                }
            }
            // next image tuple, last coordinate fastest
            let mut pos = k;
            loop {
                if pos == 0 {
                    return Ok(());
                }
                pos -= 1;
                images[pos] += 1;
                if images[pos] < level.order {
                    break;
                }
                images[pos] = 0;
            }
        }
    }
}
