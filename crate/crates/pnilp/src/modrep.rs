//! Linear algebra over prime fields and modules for the cyclic group Z/q:
//! simple F_p[Z/q]-modules realized through an explicit field tower,
//! semidirect products V ⋊ Z/q as affine permutation groups, the averaging
//! (Maschke) splitting, simple-submodule extraction via kernels of
//! irreducible factors of x^{q-1} + ... + 1, and the conjugation action
//! induced on the Frattini quotient of a p-group.

use std::collections::HashMap;

use crate::arith::{is_prime, mod_inverse, multiplicative_order};
use crate::error::{Error, Result};
use crate::group::{close, element_cap, Group};
use crate::perm::Permutation;
use crate::structure::frattini;

/// A matrix over F_p, row-major, entries reduced mod p.
#[derive(Clone, PartialEq, Eq)]
pub struct MatFp {
    p: u64,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

impl std::fmt::Debug for MatFp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "MatFp(p={}, {}x{})", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.entries[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl MatFp {
    pub fn new(p: u64, rows: usize, cols: usize, entries: Vec<u64>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        let entries = entries.into_iter().map(|e| e % p).collect();
        Self { p, rows, cols, entries }
    }

    pub fn zero(p: u64, rows: usize, cols: usize) -> Self {
        Self { p, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zero(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.cols + j] = v % self.p;
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u64::from(i == j)))
    }

    pub fn mul(&self, other: &MatFp) -> MatFp {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols, other.rows);
        let mut out = MatFp::zero(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) + a * other.get(k, j)) % self.p;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &MatFp) -> MatFp {
        assert_eq!((self.rows, self.cols, self.p), (other.rows, other.cols, other.p));
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a + b) % self.p)
            .collect();
        MatFp { p: self.p, rows: self.rows, cols: self.cols, entries }
    }

    pub fn scale(&self, c: u64) -> MatFp {
        let c = c % self.p;
        let entries = self.entries.iter().map(|a| a * c % self.p).collect();
        MatFp { p: self.p, rows: self.rows, cols: self.cols, entries }
    }

    pub fn pow(&self, mut e: u64) -> MatFp {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = MatFp::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) * (v[j] % self.p) % self.p)
                    .sum::<u64>()
                    % self.p
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    /// Reduced row echelon form and the pivot column indices.
    pub fn rref(&self) -> (MatFp, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            let pivot_row = (row..m.rows).find(|&r| m.get(r, col) != 0);
            let Some(pr) = pivot_row else { continue };
            for j in 0..m.cols {
                let (a, b) = (m.get(row, j), m.get(pr, j));
                m.set(row, j, b);
                m.set(pr, j, a);
            }
            let inv = mod_inverse(m.get(row, col), m.p);
            for j in 0..m.cols {
                m.set(row, j, m.get(row, j) * inv % m.p);
            }
            for r in 0..m.rows {
                if r != row && m.get(r, col) != 0 {
                    let factor = m.get(r, col);
                    for j in 0..m.cols {
                        let v = (m.get(r, j) + (m.p - factor) * m.get(row, j)) % m.p;
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
            if row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of {v : Mv = 0}, one vector per free column.
    pub fn nullspace_basis(&self) -> Vec<Vec<u64>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![0u64; self.cols];
            vec[free] = 1;
            for (col, rowi) in pivot_set.iter().enumerate() {
                if let Some(row) = rowi {
                    vec[col] = (self.p - r.get(*row, free)) % self.p;
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// A basis of the column space: the pivot columns of the matrix.
    pub fn column_space_basis(&self) -> Vec<Vec<u64>> {
        let (_, pivots) = self.rref();
        pivots.into_iter().map(|j| self.column(j)).collect()
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<MatFp> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = MatFp::zero(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).copied().ne(0..n) {
            return None;
        }
        let mut out = MatFp::zero(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j));
            }
        }
        Some(out)
    }
}

/// A subspace of F_p^n held as a canonical (reduced row echelon) basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    p: u64,
    ambient: usize,
    basis: Vec<Vec<u64>>,
}

impl Subspace {
    pub fn from_spanning(p: u64, ambient: usize, vectors: &[Vec<u64>]) -> Self {
        if vectors.is_empty() {
            return Self { p, ambient, basis: Vec::new() };
        }
        let m = MatFp::new(p, vectors.len(), ambient, vectors.concat());
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len())
            .map(|i| (0..ambient).map(|j| r.get(i, j)).collect())
            .collect();
        Self { p, ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut v: Vec<u64> = v.iter().map(|x| x % self.p).collect();
        for b in &self.basis {
            let lead = b.iter().position(|&x| x != 0).expect("basis rows are nonzero");
            if v[lead] != 0 {
                let factor = v[lead] * mod_inverse(b[lead], self.p) % self.p;
                for j in 0..self.ambient {
                    v[j] = (v[j] + (self.p - factor) * b[j] % self.p) % self.p;
                }
            }
        }
        v.iter().all(|&x| x == 0)
    }

    pub fn is_invariant_under(&self, a: &MatFp) -> bool {
        self.basis.iter().all(|b| self.contains(&a.mul_vec(b)))
    }
}

/// An F_p-vector space with an action of Z/q given by the matrix image of a
/// fixed generator; the action matrix A always satisfies A^q = I.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicModule {
    p: u64,
    q: u64,
    dim: usize,
    action: MatFp,
}

impl CyclicModule {
    pub fn new(p: u64, q: u64, action: MatFp) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        if p == q {
            return Err(Error::SamePrime { p, q });
        }
        assert_eq!(action.modulus(), p, "action must be a matrix over F_p");
        assert_eq!(action.rows(), action.cols(), "action must be square");
        let dim = action.rows();
        if !action.pow(q).is_identity() {
            return Err(Error::Precondition(
                "the generator image must satisfy A^q = I".into(),
            ));
        }
        Ok(Self { p, q, dim, action })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &MatFp {
        &self.action
    }

    /// Non-trivial means the generator acts by something other than identity.
    pub fn is_trivial(&self) -> bool {
        self.action.is_identity()
    }
}

// ---- polynomial helpers over F_p (dense, low-to-high coefficients) ----

fn poly_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    poly_trim(out)
}

/// Remainder of `a` modulo the monic polynomial `b`.
fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = poly_trim(b.to_vec());
    debug_assert_eq!(*b.last().unwrap(), 1, "divisor must be monic");
    let mut r = poly_trim(a.to_vec());
    while r.len() >= b.len() {
        let lead = *r.last().unwrap();
        let shift = r.len() - b.len();
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - lead * c % p)) % p;
        }
        r = poly_trim(r);
    }
    r
}

/// Monic polynomials x^d + c_{d-1} x^{d-1} + ... + c_0, enumerated in a fixed
/// order (the c_i as base-p digits of a counter).
fn monic_polys(p: u64, d: usize) -> impl Iterator<Item = Vec<u64>> {
    let count = (p as u128).pow(d as u32);
    (0..count).map(move |k| {
        let mut f = Vec::with_capacity(d + 1);
        let mut k = k;
        for _ in 0..d {
            f.push((k % p as u128) as u64);
            k /= p as u128;
        }
        f.push(1);
        f
    })
}

/// Trial-division irreducibility over F_p.
fn poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let d = f.len() - 1;
    if d == 0 {
        return false;
    }
    for e in 1..=d / 2 {
        for g in monic_polys(p, e) {
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn find_irreducible(p: u64, d: usize) -> Vec<u64> {
    monic_polys(p, d)
        .find(|f| poly_is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Evaluates a polynomial at a square matrix (Horner).
fn poly_eval_matrix(f: &[u64], a: &MatFp) -> MatFp {
    let n = a.rows();
    let p = a.modulus();
    let mut acc = MatFp::zero(p, n, n);
    for &c in f.iter().rev() {
        acc = acc.mul(a).add(&MatFp::identity(p, n).scale(c));
    }
    acc
}

fn companion(f: &[u64], p: u64) -> MatFp {
    let d = f.len() - 1;
    let mut m = MatFp::zero(p, d, d);
    for j in 0..d.saturating_sub(1) {
        m.set(j + 1, j, 1);
    }
    for (i, &coeff) in f.iter().take(d).enumerate() {
        m.set(i, d - 1, (p - coeff % p) % p);
    }
    m
}

// ---- field tower F_{p^d} = F_p[x]/(f) ----

struct FieldExt {
    p: u64,
    modulus: Vec<u64>, // monic irreducible of degree d
    d: usize,
}

impl FieldExt {
    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut r = poly_rem(&poly_mul(a, b, self.p), &self.modulus, self.p);
        r.resize(self.d, 0);
        r
    }

    fn pow(&self, a: &[u64], mut e: u64) -> Vec<u64> {
        let mut base = a.to_vec();
        let mut acc = vec![0; self.d];
        acc[0] = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn is_one(&self, a: &[u64]) -> bool {
        a[0] == 1 && a[1..].iter().all(|&c| c == 0)
    }

    fn element(&self, mut index: u64) -> Vec<u64> {
        let mut v = Vec::with_capacity(self.d);
        for _ in 0..self.d {
            v.push(index % self.p);
            index /= self.p;
        }
        v
    }
}

/// The non-trivial simple F_p[Z/q]-module: dimension d = ord_q(p), with the
/// generator of Z/q acting as multiplication by a fixed element ζ of order q
/// in the field of p^d elements, written as a d×d matrix over F_p.
pub fn build_simple_module(p: u64, q: u64) -> Result<CyclicModule> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if p == q {
        // the generator would act as a p-element, forcing a trivial action
        return Err(Error::SamePrime { p, q });
    }
    let d = multiplicative_order(p % q, q) as usize;
    let modulus = find_irreducible(p, d);
    let field = FieldExt { p, modulus, d };
    let field_order = (p as u128).pow(d as u32) as u64;
    debug_assert_eq!((field_order - 1) % q, 0);
    let exponent = (field_order - 1) / q;
    let zeta = (1..field_order)
        .map(|k| field.pow(&field.element(k), exponent))
        .find(|z| !field.is_one(z))
        .expect("the multiplicative group contains elements of order q");
    // multiplication by ζ in the basis 1, x, .., x^{d-1}
    let mut action = MatFp::zero(p, d, d);
    for j in 0..d {
        let mut xj = vec![0u64; d];
        xj[j] = 1;
        let col = field.mul(&zeta, &xj);
        for (i, &c) in col.iter().enumerate() {
            action.set(i, j, c);
        }
    }
    CyclicModule::new(p, q, action)
}

/// V ⋊ Z/q as a permutation group on the p^dim vectors of V: translations by
/// the standard basis plus the linear action of the generator.
pub fn semidirect_product(module: &CyclicModule) -> Result<Group> {
    if module.is_trivial() {
        return Err(Error::TrivialAction(
            "refusing to build V ⋊ Z/q for a module with identity action",
        ));
    }
    let p = module.p();
    let dim = module.dim();
    let degree_u = (p as u128).pow(dim as u32);
    let expected = degree_u * module.q() as u128;
    if expected > element_cap() as u128 {
        return Err(Error::TooLarge { cap: element_cap() });
    }
    let degree = degree_u as usize;
    let to_vec = |mut idx: usize| -> Vec<u64> {
        let mut v = Vec::with_capacity(dim);
        for _ in 0..dim {
            v.push((idx % p as usize) as u64);
            idx /= p as usize;
        }
        v
    };
    let to_idx = |v: &[u64]| -> usize {
        v.iter()
            .rev()
            .fold(0usize, |acc, &c| acc * p as usize + c as usize)
    };
    let mut generators = Vec::with_capacity(dim + 1);
    for b in 0..dim {
        let images = (0..degree)
            .map(|i| {
                let mut v = to_vec(i);
                v[b] = (v[b] + 1) % p;
                to_idx(&v)
            })
            .collect();
        generators.push(Permutation::new(images).expect("translation is a bijection"));
    }
    let images = (0..degree)
        .map(|i| to_idx(&module.action().mul_vec(&to_vec(i))))
        .collect();
    generators.push(Permutation::new(images).expect("an invertible matrix permutes vectors"));
    let group = close(degree, generators)?;
    assert_eq!(
        group.order() as u128,
        expected,
        "|V ⋊ Z/q| must equal p^dim · q"
    );
    Ok(group)
}

/// Convenience composite: the group V ⋊ Z/q for the simple module V.
pub fn build_lemma1_group(p: u64, q: u64) -> Result<Group> {
    semidirect_product(&build_simple_module(p, q)?)
}

/// Outcome of the averaging splitting W = fixed ⊕ complement.
#[derive(Clone, Debug)]
pub struct MaschkeSplit {
    pub fixed: Subspace,
    pub complement: Subspace,
    pub projector: MatFp,
}

/// Splits W into the fixed subspace and an invariant complement using the
/// averaging projector π = q⁻¹ (I + A + ... + A^{q-1}).
pub fn maschke_split(module: &CyclicModule) -> MaschkeSplit {
    let p = module.p();
    let q = module.q();
    let dim = module.dim();
    let mut sum = MatFp::zero(p, dim, dim);
    let mut power = MatFp::identity(p, dim);
    for _ in 0..q {
        sum = sum.add(&power);
        power = power.mul(module.action());
    }
    let projector = sum.scale(mod_inverse(q % p, p));
    let fixed = Subspace::from_spanning(p, dim, &projector.column_space_basis());
    let complement = Subspace::from_spanning(p, dim, &projector.nullspace_basis());
    MaschkeSplit { fixed, complement, projector }
}

/// A simple submodule together with its embedding into the ambient module.
#[derive(Clone, Debug)]
pub struct SimpleSubmodule {
    pub module: CyclicModule,
    /// Vectors of the ambient module spanning the submodule; the restricted
    /// action in this basis is `module.action()`.
    pub basis: Vec<Vec<u64>>,
}

/// Finds a non-trivial simple submodule of W: some irreducible factor f of
/// x^{q-1} + ... + 1 has ker f(A) ≠ 0, and the cyclic subspace of any kernel
/// vector is simple with action the companion matrix of f.
pub fn find_simple_submodule(module: &CyclicModule) -> Result<SimpleSubmodule> {
    if module.is_trivial() {
        return Err(Error::TrivialAction(
            "module action is identity; every simple submodule is trivial",
        ));
    }
    let p = module.p();
    let q = module.q();
    let d = multiplicative_order(p % q, q) as usize;
    // x^{q-1} + ... + x + 1 factors into irreducibles of degree exactly d
    let quotient_cyclotomic = vec![1u64; q as usize];
    for f in monic_polys(p, d) {
        if !poly_rem(&quotient_cyclotomic, &f, p).is_empty() || !poly_is_irreducible(&f, p) {
            continue;
        }
        let evaluated = poly_eval_matrix(&f, module.action());
        let kernel = evaluated.nullspace_basis();
        let Some(v) = kernel.first() else { continue };
        let mut basis = Vec::with_capacity(d);
        let mut w = v.clone();
        for _ in 0..d {
            basis.push(w.clone());
            w = module.action().mul_vec(&w);
        }
        let span = Subspace::from_spanning(p, module.dim(), &basis);
        assert_eq!(span.dim(), d, "kernel vector of an irreducible factor is cyclic of degree d");
        let simple = CyclicModule::new(p, q, companion(&f, p))?;
        return Ok(SimpleSubmodule { module: simple, basis });
    }
    unreachable!("a non-identity action of order q has a kernel along some irreducible factor")
}

/// The action of conjugation-by-g on P/Φ(P), written in a greedily chosen
/// F_p-basis of the elementary abelian quotient.
pub fn induced_frattini_action(p_group: &Group, g: &Permutation) -> Result<CyclicModule> {
    if p_group.is_trivial() {
        return Err(Error::Precondition("P must be a non-trivial p-group".into()));
    }
    let p = p_group
        .p_group_prime()
        .ok_or(Error::NotAPGroup { order: p_group.order() })?;
    let q = g.order();
    if !is_prime(q) || q == p {
        return Err(Error::Precondition(format!(
            "o(g) = {q} must be a prime different from p = {p}"
        )));
    }
    if !p_group
        .generators()
        .iter()
        .all(|x| p_group.contains(&x.conjugate_by(g)))
    {
        return Err(Error::Precondition("g does not normalize P".into()));
    }
    let phi = frattini(p_group)?;
    let coset_key = |x: &Permutation| -> Permutation {
        phi.elements()
            .iter()
            .map(|f| x.compose(f))
            .min()
            .expect("Φ is nonempty")
    };
    // greedy basis: generator images span P/Φ(P)
    let mut basis: Vec<Permutation> = Vec::new();
    let mut current = phi.clone();
    for x in p_group.generators() {
        if current.contains(x) {
            continue;
        }
        basis.push(x.clone());
        let mut gens = current.generators().to_vec();
        gens.push(x.clone());
        current = close(p_group.degree(), gens).expect("stays inside P");
    }
    assert_eq!(&current, p_group, "generators span P over Φ(P)");
    let r = basis.len();
    let count = (p as u128).pow(r as u32) as usize;
    assert_eq!(
        phi.order() as u128 * count as u128,
        p_group.order() as u128,
        "basis must be independent modulo Φ(P)"
    );
    // coordinates for every coset: products over the basis powers
    let mut coords: HashMap<Permutation, Vec<u64>> = HashMap::with_capacity(count);
    for idx in 0..count {
        let mut c = Vec::with_capacity(r);
        let mut k = idx;
        let mut product = Permutation::identity(p_group.degree());
        for b in basis.iter() {
            let e = (k % p as usize) as u64;
            k /= p as usize;
            c.push(e);
            product = product.compose(&b.pow(e));
        }
        let prior = coords.insert(coset_key(&product), c);
        assert!(prior.is_none(), "distinct exponent tuples land in distinct cosets");
    }
    let mut action = MatFp::zero(p, r, r);
    for (j, b) in basis.iter().enumerate() {
        let image = coords
            .get(&coset_key(&b.conjugate_by(g)))
            .expect("conjugate of a basis element stays in P");
        for (i, &c) in image.iter().enumerate() {
            action.set(i, j, c);
        }
    }
    CyclicModule::new(p, q, action)
}
