use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::number::{factorize, is_power_of};

/// Size limits applied when constructing explicit groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupLimits {
    /// Largest order a constructor will materialize.
    pub max_order: usize,
    /// Trusted constructors verify associativity only up to this order;
    /// raw tables and presentations are always verified.
    pub verify_up_to: usize,
}

impl Default for GroupLimits {
    fn default() -> Self {
        GroupLimits { max_order: 4096, verify_up_to: 512 }
    }
}

impl GroupLimits {
    pub fn check_order(&self, order: u128) -> Result<usize> {
        if order == 0 {
            return Err(Error::InvalidSpec("group order must be positive".into()));
        }
        if order > self.max_order as u128 {
            return Err(Error::OrderLimit { order, limit: self.max_order });
        }
        Ok(order as usize)
    }
}

/// An explicit finite group given by its multiplication table.
///
/// Elements are the indices `0..order`; `mul(a, b)` is the table entry.
#[derive(Clone, PartialEq, Eq)]
pub struct CayleyTable {
    order: usize,
    table: Vec<u32>,
    identity: usize,
}

impl std::fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CayleyTable")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .finish_non_exhaustive()
    }
}

/// Partition of a group into classes of elements generating the same
/// cyclic subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassPartition {
    pub classes: Vec<Vec<usize>>,
    pub class_order: Vec<usize>,
    pub class_of: Vec<usize>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Elements of `prime`-power order, a subgroup when the group is nilpotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SylowSubgroup {
    pub prime: u64,
    pub elements: Vec<usize>,
}

impl CayleyTable {
    /// Builds a table from explicit rows, verifying every group axiom.
    pub fn from_rows(rows: &[Vec<usize>], identity: usize) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut table = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= order {
                    return Err(Error::InvalidTable(format!("entry {x} out of range in row {i}")));
                }
                table.push(x as u32);
            }
        }
        if identity >= order {
            return Err(Error::InvalidTable(format!("identity index {identity} out of range")));
        }
        let t = CayleyTable { order, table, identity };
        t.verify(true)?;
        Ok(t)
    }

    pub(crate) fn from_flat(order: usize, table: Vec<u32>, identity: usize) -> Self {
        debug_assert_eq!(table.len(), order * order);
        CayleyTable { order, table, identity }
    }

    /// Checks the Latin-square and identity laws, and associativity when
    /// `associativity` is set (cubic in the order).
    pub fn verify(&self, associativity: bool) -> Result<()> {
        let n = self.order;
        let e = self.identity;
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let x = self.mul(a, b);
                if seen[x] == a {
                    return Err(Error::InvalidTable(format!("row {a} repeats element {x}")));
                }
                seen[x] = a;
            }
        }
        seen.iter_mut().for_each(|s| *s = usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let x = self.mul(a, b);
                if seen[x] == b {
                    return Err(Error::InvalidTable(format!("column {b} repeats element {x}")));
                }
                seen[x] = b;
            }
        }
        for x in 0..n {
            if self.mul(e, x) != x || self.mul(x, e) != x {
                return Err(Error::InvalidTable(format!("{e} is not an identity for {x}")));
            }
        }
        if associativity {
            for a in 0..n {
                let row_a = self.row(a);
                for b in 0..n {
                    let ab = row_a[b] as usize;
                    let row_ab = self.row(ab);
                    let row_b = self.row(b);
                    for c in 0..n {
                        if row_ab[c] != row_a[row_b[c] as usize] {
                            return Err(Error::NotAssociative(a, b, c));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Same verdict as `verify(true)` in `O(n^2 |gens|)` time: checks that
    /// `gens` generate the whole table under the operation and runs Light's
    /// associativity test over them.
    pub fn verify_generated_by(&self, gens: &[usize]) -> Result<()> {
        self.verify(false)?;
        let n = self.order;
        let mut member = vec![false; n];
        let mut elems = Vec::with_capacity(n);
        for &g in gens {
            if g >= n {
                return Err(Error::InvalidTable(format!("generator {g} out of range")));
            }
            if !member[g] {
                member[g] = true;
                elems.push(g);
            }
        }
        let mut next = 0;
        while next < elems.len() {
            let x = elems[next];
            next += 1;
            for k in 0..next {
                let y = elems[k];
                for z in [self.mul(x, y), self.mul(y, x)] {
                    if !member[z] {
                        member[z] = true;
                        elems.push(z);
                    }
                }
            }
        }
        if elems.len() != n && !(n == 1 && gens.is_empty()) {
            return Err(Error::InvalidTable(format!("generators span only {} of {n} elements", elems.len())));
        }
        for &s in gens {
            for x in 0..n {
                let xs = self.mul(x, s);
                for y in 0..n {
                    if self.mul(xs, y) != self.mul(x, self.mul(s, y)) {
                        return Err(Error::NotAssociative(x, s, y));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn row(&self, a: usize) -> &[u32] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).iter().map(|&x| x as usize).collect()).collect()
    }

    pub fn power(&self, x: usize, k: u64) -> usize {
        let mut acc = self.identity;
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn inverse(&self, x: usize) -> usize {
        self.row(x)
            .iter()
            .position(|&y| y as usize == self.identity)
            .expect("latin square rows contain the identity")
    }

    /// Least `k >= 1` with `x^k` equal to the identity.
    pub fn element_order(&self, x: usize) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// The set `{x^m : m >= 1}` in ascending index order.
    pub fn cyclic_subgroup(&self, x: usize) -> Vec<usize> {
        let mut out = vec![x];
        let mut y = x;
        while y != self.identity {
            y = self.mul(y, x);
            out.push(y);
        }
        out.sort_unstable();
        out
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|x| self.element_order(x)).collect()
    }

    /// Element order -> number of elements of that order.
    pub fn order_profile(&self) -> BTreeMap<usize, usize> {
        let mut profile = BTreeMap::new();
        for k in self.element_orders() {
            *profile.entry(k).or_insert(0) += 1;
        }
        profile
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|x| self.element_order(x) == self.order)
    }

    /// Classes of elements generating the same cyclic subgroup, ordered by
    /// their smallest member.
    pub fn generator_classes(&self) -> ClassPartition {
        let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut class_order = Vec::new();
        let mut class_of = vec![0; self.order];
        for x in 0..self.order {
            let sub = self.cyclic_subgroup(x);
            let len = sub.len();
            let id = *index.entry(sub).or_insert_with(|| {
                classes.push(Vec::new());
                class_order.push(len);
                classes.len() - 1
            });
            classes[id].push(x);
            class_of[x] = id;
        }
        ClassPartition { classes, class_order, class_of }
    }

    /// Splits the group into the sets of elements of `p`-power order, one per
    /// prime divisor of the order. Fails unless every set is a subgroup,
    /// which happens exactly when the group is nilpotent.
    pub fn sylow_decomposition(&self) -> Result<Vec<SylowSubgroup>> {
        let orders = self.element_orders();
        let mut out = Vec::new();
        for (p, _) in factorize(&(self.order as u64)) {
            let elements: Vec<usize> =
                (0..self.order).filter(|&x| is_power_of(orders[x] as u64, p)).collect();
            let mut member = vec![false; self.order];
            for &x in &elements {
                member[x] = true;
            }
            let closed = elements
                .iter()
                .all(|&a| elements.iter().all(|&b| member[self.mul(a, b)]));
            if !closed {
                return Err(Error::NotNilpotent { prime: p });
            }
            out.push(SylowSubgroup { prime: p, elements });
        }
        let product: usize = out.iter().map(|s| s.elements.len()).product();
        if product != self.order {
            let prime = out.first().map(|s| s.prime).unwrap_or(1);
            return Err(Error::NotNilpotent { prime });
        }
        Ok(out)
    }

    /// `Z_n` with `table[i][j] = (i + j) mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                table.push(((i + j) % n) as u32);
            }
        }
        CayleyTable { order: n, table, identity: 0 }
    }

    /// Componentwise product; element `(x_1, .., x_k)` has index
    /// `x_1 * (n_2 ... n_k) + ... + x_k`.
    pub fn direct_product(factors: &[&CayleyTable]) -> Self {
        let orders: Vec<usize> = factors.iter().map(|f| f.order).collect();
        let n: usize = orders.iter().product();
        let mut strides = vec![1usize; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * orders[i + 1];
        }
        let split = |mut x: usize| -> Vec<usize> {
            strides
                .iter()
                .map(|&s| {
                    let c = x / s;
                    x %= s;
                    c
                })
                .collect()
        };
        let comps: Vec<Vec<usize>> = (0..n).map(split).collect();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let idx: usize = factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.mul(comps[a][i], comps[b][i]) * strides[i])
                    .sum();
                table.push(idx as u32);
            }
        }
        let identity = factors.iter().enumerate().map(|(i, f)| f.identity * strides[i]).sum();
        CayleyTable { order: n, table, identity }
    }

    /// Unitriangular 3x3 matrices over `Z_p`; `(a, b, c)` is the matrix with
    /// `a` and `b` on the superdiagonal and `c` in the corner, index
    /// `a p^2 + b p + c`.
    pub fn heisenberg(p: usize) -> Self {
        let n = p * p * p;
        let decode = |x: usize| (x / (p * p), (x / p) % p, x % p);
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (a, b, c) = decode(x);
            for y in 0..n {
                let (a2, b2, c2) = decode(y);
                let na = (a + a2) % p;
                let nb = (b + b2) % p;
                let nc = (c + c2 + a * b2) % p;
                table.push((na * p * p + nb * p + nc) as u32);
            }
        }
        CayleyTable { order: n, table, identity: 0 }
    }

    /// Relabels elements so the identity sits at index 0 (swapping it with
    /// the element previously there).
    pub fn normalized(&self) -> Self {
        if self.identity == 0 {
            return self.clone();
        }
        let e = self.identity;
        let swap = |x: usize| if x == e { 0 } else if x == 0 { e } else { x };
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[swap(a) * n + swap(b)] = swap(self.mul(a, b)) as u32;
            }
        }
        CayleyTable { order: n, table, identity: 0 }
    }
}
