//! Dense-semantics exact linear algebra on tensor-power spaces, stored
//! sparsely: composition, Kronecker products, the twist map, rank and kernel
//! computations and the splitting of idempotents into a surjection/injection
//! pair.
//!
//! Basis order is lexicographic with the LEFT factor most significant, fixed
//! globally. Every structure map in the crate is transcribed in that one
//! convention.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::scalar::{Field, Scalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("scalar field mismatch between maps")]
    DescriptorMismatch,
    #[error("map is not idempotent (first failing basis column {witness})")]
    NotIdempotent { witness: usize },
}

/// A tensor-power space: a dimension together with an ordered factorization.
///
/// Factors equal to 1 are dropped; the empty factor list is the ground field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Space {
    factors: Vec<usize>,
}

impl Space {
    pub fn new(factors: Vec<usize>) -> Space {
        let kept: Vec<usize> = factors.into_iter().filter(|&d| d != 1).collect();
        Space { factors: kept }
    }

    /// The ground field k.
    pub fn scalar() -> Space {
        Space { factors: vec![] }
    }

    /// A single unfactored space of dimension `d`.
    pub fn line(d: usize) -> Space {
        Space::new(vec![d])
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().product()
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    pub fn tensor(&self, other: &Space) -> Space {
        let mut f = self.factors.clone();
        f.extend_from_slice(&other.factors);
        Space::new(f)
    }

    /// n-fold tensor power.
    pub fn power(&self, n: usize) -> Space {
        let mut f = vec![];
        for _ in 0..n {
            f.extend_from_slice(&self.factors);
        }
        Space::new(f)
    }

    /// Decompose a flat index into per-factor coordinates.
    pub fn coords(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.factors.len()];
        for (i, &d) in self.factors.iter().enumerate().rev() {
            out[i] = index % d;
            index /= d;
        }
        out
    }

    /// Flatten per-factor coordinates back to an index.
    pub fn index(&self, coords: &[usize]) -> usize {
        assert_eq!(coords.len(), self.factors.len());
        let mut idx = 0;
        for (c, d) in coords.iter().zip(&self.factors) {
            debug_assert!(c < d);
            idx = idx * d + c;
        }
        idx
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "k");
        }
        let dims: Vec<String> = self.factors.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", dims.join("x"))
    }
}

/// Sparse column vector, sorted by row index, no explicit zeros.
pub type SparseVec = Vec<(usize, Scalar)>;

fn collect_sparse(acc: BTreeMap<usize, Scalar>) -> SparseVec {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn acc_add(acc: &mut BTreeMap<usize, Scalar>, row: usize, val: Scalar) {
    match acc.get_mut(&row) {
        Some(v) => *v = v.add(&val).expect("mixed fields in accumulation"),
        None => {
            acc.insert(row, val);
        }
    }
}

/// A linear map between tensor-power spaces over one exact field.
///
/// Column `j` holds the image of the j-th domain basis vector.
#[derive(Debug, Clone, PartialEq)]
pub struct LinMap {
    field: Field,
    domain: Space,
    codomain: Space,
    cols: Vec<SparseVec>,
}

impl LinMap {
    pub fn zero(field: Field, domain: Space, codomain: Space) -> LinMap {
        let cols = vec![vec![]; domain.dim()];
        LinMap {
            field,
            domain,
            codomain,
            cols,
        }
    }

    pub fn identity(field: Field, space: Space) -> LinMap {
        let mut m = LinMap::zero(field.clone(), space.clone(), space);
        for j in 0..m.cols.len() {
            m.cols[j] = vec![(j, field.one())];
        }
        m
    }

    /// Build from `(row, col, coefficient)` entries; duplicates accumulate.
    pub fn from_entries<I>(field: Field, domain: Space, codomain: Space, entries: I) -> LinMap
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); domain.dim()];
        let rows = codomain.dim();
        for (r, c, v) in entries {
            assert!(r < rows, "row {r} out of range");
            acc_add(&mut acc[c], r, v);
        }
        let cols = acc.into_iter().map(collect_sparse).collect();
        LinMap {
            field,
            domain,
            codomain,
            cols,
        }
    }

    pub fn from_dense_cols(
        field: Field,
        domain: Space,
        codomain: Space,
        cols: Vec<Vec<Scalar>>,
    ) -> LinMap {
        let entries = cols.into_iter().enumerate().flat_map(|(j, col)| {
            col.into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(i, v)| (i, j, v))
        });
        let entries: Vec<_> = entries.collect();
        LinMap::from_entries(field, domain, codomain, entries)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn domain(&self) -> &Space {
        &self.domain
    }

    pub fn codomain(&self) -> &Space {
        &self.codomain
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.len()).sum()
    }

    pub fn entry(&self, r: usize, c: usize) -> Scalar {
        match self.cols[c].binary_search_by_key(&r, |(i, _)| *i) {
            Ok(k) => self.cols[c][k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    pub fn dense_col(&self, j: usize) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.codomain.dim()];
        for (i, v) in &self.cols[j] {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.domain.dim() == self.codomain.dim()
            && self
                .cols
                .iter()
                .enumerate()
                .all(|(j, c)| c.len() == 1 && c[0].0 == j && c[0].1.is_one())
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = BTreeMap::new();
        for (j, x) in v {
            for (i, m) in &self.cols[*j] {
                acc_add(&mut acc, *i, m.mul(x).expect("mixed fields"));
            }
        }
        collect_sparse(acc)
    }

    /// Matrix composition `self . g` (apply `g` first).
    pub fn compose(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
        if self.field != g.field {
            return Err(LinalgError::DescriptorMismatch);
        }
        if self.domain.dim() != g.codomain.dim() {
            return Err(LinalgError::ShapeMismatch(format!(
                "compose: inner dims {} vs {}",
                self.domain.dim(),
                g.codomain.dim()
            )));
        }
        let cols = g.cols.iter().map(|c| self.apply(c)).collect();
        Ok(LinMap {
            field: self.field.clone(),
            domain: g.domain.clone(),
            codomain: self.codomain.clone(),
            cols,
        })
    }

    /// Kronecker product in lexicographic basis order; factor lists concatenate.
    pub fn tensor(&self, g: &LinMap) -> Result<LinMap, LinalgError> {
        if self.field != g.field {
            return Err(LinalgError::DescriptorMismatch);
        }
        let domain = self.domain.tensor(&g.domain);
        let codomain = self.codomain.tensor(&g.codomain);
        let gc = g.codomain.dim();
        let mut cols = Vec::with_capacity(domain.dim());
        for jf in 0..self.cols.len() {
            for jg in 0..g.cols.len() {
                let mut col = Vec::with_capacity(self.cols[jf].len() * g.cols[jg].len());
                for (rf, a) in &self.cols[jf] {
                    for (rg, b) in &g.cols[jg] {
                        col.push((rf * gc + rg, a.mul(b).expect("mixed fields")));
                    }
                }
                cols.push(col);
            }
        }
        Ok(LinMap {
            field: self.field.clone(),
            domain,
            codomain,
            cols,
        })
    }

    pub fn add(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::DescriptorMismatch);
        }
        if self.domain.dim() != other.domain.dim() || self.codomain.dim() != other.codomain.dim() {
            return Err(LinalgError::ShapeMismatch("add".into()));
        }
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut acc = BTreeMap::new();
                for (i, v) in a {
                    acc_add(&mut acc, *i, v.clone());
                }
                for (i, v) in b {
                    acc_add(&mut acc, *i, v.clone());
                }
                collect_sparse(acc)
            })
            .collect();
        Ok(LinMap {
            field: self.field.clone(),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            cols,
        })
    }

    pub fn sub(&self, other: &LinMap) -> Result<LinMap, LinalgError> {
        self.add(&other.scale(&self.field.integer(-1)))
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        let cols = self
            .cols
            .iter()
            .map(|c| {
                c.iter()
                    .map(|(i, v)| (*i, v.mul(s).expect("mixed fields")))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        LinMap {
            field: self.field.clone(),
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            cols,
        }
    }

    /// Transpose; domain and codomain swap wholesale.
    pub fn transpose(&self) -> LinMap {
        let mut cols: Vec<SparseVec> = vec![vec![]; self.codomain.dim()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                cols[*i].push((j, v.clone()));
            }
        }
        LinMap {
            field: self.field.clone(),
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            cols,
        }
    }

    /// The twist `X (x) Y -> Y (x) X`, basis `(i,j) |-> (j,i)`.
    pub fn twist(field: Field, x: &Space, y: &Space) -> LinMap {
        let domain = x.tensor(y);
        let codomain = y.tensor(x);
        let (dx, dy) = (x.dim(), y.dim());
        let mut m = LinMap::zero(field.clone(), domain, codomain);
        for i in 0..dx {
            for j in 0..dy {
                m.cols[i * dy + j] = vec![(j * dx + i, field.one())];
            }
        }
        m
    }

    /// Permutation of tensor factors: output factor `p` is input factor
    /// `perm[p]`. Takes raw dimensions so that trivial factors still count
    /// as positions.
    pub fn permutation(field: Field, dims: &[usize], perm: &[usize]) -> LinMap {
        assert_eq!(perm.len(), dims.len());
        let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
        let domain = Space::new(dims.to_vec());
        let codomain = Space::new(out_dims.clone());
        let decode = |mut idx: usize| {
            let mut c = vec![0; dims.len()];
            for (i, &d) in dims.iter().enumerate().rev() {
                c[i] = idx % d;
                idx /= d;
            }
            c
        };
        let mut m = LinMap::zero(field.clone(), domain.clone(), codomain);
        for j in 0..domain.dim() {
            let c = decode(j);
            let mut target = 0;
            for (&p, &d) in perm.iter().zip(&out_dims) {
                target = target * d + c[p];
            }
            m.cols[j] = vec![(target, field.one())];
        }
        m
    }

    pub fn trace(&self) -> Result<Scalar, LinalgError> {
        if self.domain.dim() != self.codomain.dim() {
            return Err(LinalgError::ShapeMismatch(
                "trace of a non-endomorphism".into(),
            ));
        }
        let mut acc = self.field.zero();
        for j in 0..self.cols.len() {
            acc = acc.add(&self.entry(j, j)).expect("mixed fields");
        }
        Ok(acc)
    }

    /// True iff all entries agree; otherwise the first differing basis column
    /// together with both images.
    pub fn equal_with_witness(&self, other: &LinMap) -> Result<Option<MapWitness>, LinalgError> {
        if self.field != other.field {
            return Err(LinalgError::DescriptorMismatch);
        }
        if self.domain.dim() != other.domain.dim() || self.codomain.dim() != other.codomain.dim() {
            return Err(LinalgError::ShapeMismatch(format!(
                "equal_maps: {}x{} vs {}x{}",
                self.codomain.dim(),
                self.domain.dim(),
                other.codomain.dim(),
                other.domain.dim()
            )));
        }
        for j in 0..self.cols.len() {
            if self.cols[j] != other.cols[j] {
                return Ok(Some(MapWitness {
                    column: j,
                    left: self.dense_col(j),
                    right: other.dense_col(j),
                }));
            }
        }
        Ok(None)
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Scalar>> {
        let mut rows = vec![vec![self.field.zero(); self.domain.dim()]; self.codomain.dim()];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in col {
                rows[*i][j] = v.clone();
            }
        }
        rows
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.to_dense_rows();
        rref(&self.field, &mut rows).len()
    }

    /// Matrix inverse of a bijective map, exact Gauss-Jordan.
    pub fn inverse(&self) -> Option<LinMap> {
        let n = self.domain.dim();
        if n != self.codomain.dim() {
            return None;
        }
        let mut rows = self.to_dense_rows();
        for (i, row) in rows.iter_mut().enumerate() {
            let mut aug = vec![self.field.zero(); n];
            aug[i] = self.field.one();
            row.extend(aug);
        }
        let pivots = rref(&self.field, &mut rows);
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &p)| p != k) {
            return None;
        }
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| (0..n).map(|i| rows[i][n + j].clone()).collect())
            .collect();
        Some(LinMap::from_dense_cols(
            self.field.clone(),
            self.codomain.clone(),
            self.domain.clone(),
            cols,
        ))
    }
}

/// First differing basis column of a failed map comparison.
#[derive(Debug, Clone, PartialEq)]
pub struct MapWitness {
    pub column: usize,
    pub left: Vec<Scalar>,
    pub right: Vec<Scalar>,
}

// ---------------------------------------------------------------------------
// dense elimination

/// Reduced row echelon form in place; returns pivot column indices.
///
/// Pivot selection prefers entries equal to +-1 to keep rational coefficient
/// growth down on the structure-constant matrices this crate produces.
#[allow(clippy::needless_range_loop)]
pub fn rref(field: &Field, rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let nrows = rows.len();
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = vec![];
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let mut pivot = None;
        for i in r..nrows {
            if !rows[i][c].is_zero() {
                let unit = rows[i][c].is_one() || rows[i][c].neg().is_one();
                if pivot.is_none() || unit {
                    pivot = Some(i);
                    if unit {
                        break;
                    }
                }
            }
        }
        let Some(p) = pivot else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for j in c..ncols {
            rows[r][j] = rows[r][j].mul(&inv).expect("field");
        }
        for i in 0..nrows {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..ncols {
                let t = rows[r][j].mul(&f).expect("field");
                rows[i][j] = rows[i][j].sub(&t).expect("field");
            }
        }
        pivots.push(c);
        r += 1;
    }
    let _ = field;
    pivots
}

/// Outcome of an exact linear solve.
#[derive(Debug, Clone, PartialEq)]
pub enum SolveOutcome {
    /// Particular solution with all free variables set to zero.
    Solution(Vec<Scalar>),
    Inconsistent {
        rank: usize,
        rank_augmented: usize,
    },
}

/// Solve `rows * x = rhs`; also returns a basis of the homogeneous nullspace.
pub fn solve_with_nullspace(
    field: &Field,
    rows: &[Vec<Scalar>],
    rhs: &[Scalar],
) -> (SolveOutcome, Vec<Vec<Scalar>>) {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Vec<Vec<Scalar>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let pivots = rref(field, &mut aug);
    let rank_augmented = pivots.len();
    let inconsistent = pivots.last().map(|&p| p == ncols).unwrap_or(false);
    let rank = if inconsistent {
        rank_augmented - 1
    } else {
        rank_augmented
    };

    let coeff_pivots: Vec<usize> = pivots.iter().copied().filter(|&p| p < ncols).collect();
    let pivot_of_col: BTreeMap<usize, usize> = coeff_pivots
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();

    let mut nullspace = vec![];
    for free in 0..ncols {
        if pivot_of_col.contains_key(&free) {
            continue;
        }
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (&pc, &pr) in &pivot_of_col {
            v[pc] = aug[pr][free].neg();
        }
        nullspace.push(v);
    }

    if inconsistent {
        return (
            SolveOutcome::Inconsistent {
                rank,
                rank_augmented,
            },
            nullspace,
        );
    }
    let mut x = vec![field.zero(); ncols];
    for (&pc, &pr) in &pivot_of_col {
        x[pc] = aug[pr][ncols].clone();
    }
    (SolveOutcome::Solution(x), nullspace)
}

// ---------------------------------------------------------------------------
// idempotent splitting

/// Split idempotent data: a section/retraction pair through the image.
#[derive(Debug, Clone)]
pub struct SplitIdempotent {
    pub map: LinMap,
    pub image: Space,
    /// Section: image -> ambient.
    pub include: LinMap,
    /// Retraction: ambient -> image.
    pub project: LinMap,
}

/// Split `e` through its image: the pivot columns of `e` (against the row
/// echelon form of `e`) form the deterministic image basis, the nonzero
/// echelon rows give the retraction. Exact rank factorization `e = i . p`
/// with `p . i = id`.
pub fn split_idempotent(e: &LinMap) -> Result<SplitIdempotent, LinalgError> {
    let n = e.domain().dim();
    if n != e.codomain().dim() {
        return Err(LinalgError::ShapeMismatch(
            "idempotent must be an endomorphism".into(),
        ));
    }
    let ee = e.compose(e)?;
    if let Some(w) = ee.equal_with_witness(e)? {
        return Err(LinalgError::NotIdempotent { witness: w.column });
    }
    let field = e.field().clone();
    let mut rows = e.to_dense_rows();
    let pivots = rref(&field, &mut rows);
    let rank = pivots.len();
    let image = Space::line(rank);

    let include_cols: Vec<Vec<Scalar>> = pivots.iter().map(|&j| e.dense_col(j)).collect();
    let include = LinMap::from_dense_cols(
        field.clone(),
        image.clone(),
        e.domain().clone(),
        include_cols,
    );

    let project_cols: Vec<Vec<Scalar>> = (0..n)
        .map(|j| (0..rank).map(|i| rows[i][j].clone()).collect())
        .collect();
    let project = LinMap::from_dense_cols(
        field.clone(),
        e.domain().clone(),
        image.clone(),
        project_cols,
    );

    let pi = project.compose(&include)?;
    assert!(
        pi.is_identity(),
        "retraction . section must be the identity"
    );
    let ip = include.compose(&project)?;
    assert!(
        ip.equal_with_witness(e)?.is_none(),
        "section . retraction must reproduce the idempotent"
    );
    Ok(SplitIdempotent {
        map: e.clone(),
        image,
        include,
        project,
    })
}

// ---------------------------------------------------------------------------
// path evaluation
//
// The wreath-product consistency checks compare composites that pass through
// spaces like (B (x) A)^(x)4; materializing those as matrices is hopeless but
// every composite is a chain of tensor products of small maps, so each step
// is applied blockwise to sparse columns instead.

/// One parallel leg of a composite step: either an identity on a space (never
/// materialized) or an actual map acting on a contiguous block of factors.
#[derive(Debug, Clone)]
pub enum Leg {
    Id(Space),
    Map(LinMap),
}

impl Leg {
    pub fn id(space: &Space) -> Leg {
        Leg::Id(space.clone())
    }

    pub fn map(m: &LinMap) -> Leg {
        Leg::Map(m.clone())
    }

    fn domain_dim(&self) -> usize {
        match self {
            Leg::Id(s) => s.dim(),
            Leg::Map(m) => m.domain().dim(),
        }
    }

    fn codomain_dim(&self) -> usize {
        match self {
            Leg::Id(s) => s.dim(),
            Leg::Map(m) => m.codomain().dim(),
        }
    }
}

/// A tensor product of legs, applied as one stage of a composite.
#[derive(Debug, Clone)]
pub struct Step {
    pub legs: Vec<Leg>,
}

impl Step {
    pub fn new(legs: Vec<Leg>) -> Step {
        Step { legs }
    }

    pub fn domain_dim(&self) -> usize {
        self.legs.iter().map(|l| l.domain_dim()).product()
    }

    pub fn codomain_dim(&self) -> usize {
        self.legs.iter().map(|l| l.codomain_dim()).product()
    }

    fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        for (k, leg) in self.legs.iter().enumerate() {
            let m = match leg {
                Leg::Id(_) => continue,
                Leg::Map(m) => m,
            };
            let left: usize = self.legs[..k].iter().map(|l| l.codomain_dim()).product();
            let right: usize = self.legs[k + 1..].iter().map(|l| l.domain_dim()).product();
            cur = apply_block(m, left, right, &cur);
        }
        cur
    }
}

fn apply_block(m: &LinMap, left: usize, right: usize, v: &SparseVec) -> SparseVec {
    let d = m.domain().dim();
    let c = m.codomain().dim();
    let mut acc = BTreeMap::new();
    for (idx, val) in v {
        let l = idx / (d * right);
        let rem = idx % (d * right);
        let mid = rem / right;
        let r = rem % right;
        debug_assert!(l < left);
        for (row, coeff) in m.col(mid) {
            acc_add(
                &mut acc,
                (l * c + row) * right + r,
                coeff.mul(val).expect("field"),
            );
        }
    }
    collect_sparse(acc)
}

/// A composite of steps, applied first to last.
#[derive(Debug, Clone)]
pub struct Path {
    pub steps: Vec<Step>,
}

impl Path {
    pub fn new(steps: Vec<Step>) -> Path {
        let p = Path { steps };
        p.check_chain();
        p
    }

    fn check_chain(&self) {
        for w in self.steps.windows(2) {
            assert_eq!(
                w[0].codomain_dim(),
                w[1].domain_dim(),
                "path steps do not chain"
            );
        }
    }

    pub fn domain_dim(&self) -> usize {
        self.steps.first().map(|s| s.domain_dim()).unwrap_or(1)
    }

    pub fn codomain_dim(&self) -> usize {
        self.steps.last().map(|s| s.codomain_dim()).unwrap_or(1)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        for s in &self.steps {
            cur = s.apply(&cur);
        }
        cur
    }

    /// Evaluate the whole composite into an explicit map. Only sensible when
    /// domain and codomain are small; intermediates stay sparse regardless.
    pub fn to_linmap(&self, field: &Field, domain: Space, codomain: Space) -> LinMap {
        assert_eq!(domain.dim(), self.domain_dim());
        assert_eq!(codomain.dim(), self.codomain_dim());
        let mut entries = vec![];
        for j in 0..domain.dim() {
            let img = self.apply(&vec![(j, field.one())]);
            for (i, v) in img {
                entries.push((i, j, v));
            }
        }
        LinMap::from_entries(field.clone(), domain, codomain, entries)
    }
}

/// Compare two composites column by column; `None` means they agree.
pub fn paths_agree(field: &Field, left: &Path, right: &Path) -> Option<MapWitness> {
    assert_eq!(left.domain_dim(), right.domain_dim(), "path domains differ");
    assert_eq!(
        left.codomain_dim(),
        right.codomain_dim(),
        "path codomains differ"
    );
    let n = left.domain_dim();
    let out = left.codomain_dim();
    for j in 0..n {
        let unit = vec![(j, field.one())];
        let a = left.apply(&unit);
        let b = right.apply(&unit);
        if a != b {
            let densify = |v: &SparseVec| {
                let mut d = vec![field.zero(); out];
                for (i, x) in v {
                    d[*i] = x.clone();
                }
                d
            };
            return Some(MapWitness {
                column: j,
                left: densify(&a),
                right: densify(&b),
            });
        }
    }
    None
}
