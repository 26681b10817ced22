//! Supercommutant solving and simultaneous eigenspace splitting.
//!
//! The degree-0 and degree-1 supercommutation conditions are solved
//! separately: f·g = (−1)^(deg f · deg g)·g·f for every generator g. For
//! monomial generators (exactly one nonzero per column — all the Clifford and
//! transposition images are) the conditions link matrix entries along orbits
//! and are solved by a potential-carrying union-find; remaining generators
//! are intersected by exact sparse elimination. Both paths produce the same
//! space; unit tests cross-check them at small sizes.

use std::collections::BTreeMap;

use crate::field::{nullspace_sparse, Cyclo8, FMatrix, SparseVec};
use crate::QdError;

use super::ops::GradedOperator;

/// (image row, coefficient) per column, for matrices with exactly one
/// nonzero per column and per row.
fn monomial_view(m: &FMatrix) -> Option<Vec<(usize, Cyclo8)>> {
    let n = m.rows();
    if n != m.cols() {
        return None;
    }
    let mut cols: Vec<Option<(usize, Cyclo8)>> = vec![None; n];
    let mut row_used = vec![false; n];
    for r in 0..n {
        for c in 0..n {
            let v = m.get(r, c);
            if v.is_zero() {
                continue;
            }
            if cols[c].is_some() || row_used[r] {
                return None;
            }
            cols[c] = Some((r, v.clone()));
            row_used[r] = true;
        }
    }
    cols.into_iter().collect()
}

/// Union-find with multiplicative potentials: value[x] = pot[x] · value[root].
struct PotentialForest {
    parent: Vec<usize>,
    pot: Vec<Cyclo8>,
    dead: Vec<bool>,
}

impl PotentialForest {
    fn new(n: usize) -> Self {
        PotentialForest {
            parent: (0..n).collect(),
            pot: vec![Cyclo8::one(); n],
            dead: vec![false; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, Cyclo8) {
        if self.parent[x] == x {
            return (x, self.pot[x].clone());
        }
        let (root, parent_pot) = self.find(self.parent[x]);
        self.pot[x] = &self.pot[x] * &parent_pot;
        self.parent[x] = root;
        (root, self.pot[x].clone())
    }

    /// Impose value[y] = ratio · value[x].
    fn relate(&mut self, x: usize, y: usize, ratio: &Cyclo8) {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            // Consistency: py must equal ratio·px, else the whole component
            // is forced to zero.
            if py != ratio * &px {
                self.dead[rx] = true;
            }
            return;
        }
        // value[y] = ratio·value[x] → value[ry] = py⁻¹·ratio·px·value[rx].
        let adj = &(ratio * &px) * &py.inv().expect("potentials are units");
        let dead = self.dead[rx] || self.dead[ry];
        // Deterministic: smaller index stays root.
        if rx < ry {
            self.parent[ry] = rx;
            self.pot[ry] = adj;
            self.dead[rx] = dead;
        } else {
            self.parent[rx] = ry;
            self.pot[rx] = adj.inv().expect("potentials are units");
            self.dead[ry] = dead;
        }
    }
}

/// Solve the supercommutation conditions for unknowns of fixed degree
/// `f_deg` against monomial generators; returns sparse basis vectors over
/// entry positions (row-major r·n + c), restricted to allowed positions.
fn orbit_solve(
    monomials: &[(Vec<(usize, Cyclo8)>, u8)],
    degs: &[u8],
    f_deg: u8,
) -> Vec<SparseVec> {
    let n = degs.len();
    let allowed = |r: usize, c: usize| degs[r] ^ degs[c] == f_deg;
    let mut forest = PotentialForest::new(n * n);
    for (view, g_deg) in monomials {
        // σ = (−1)^(f_deg·g_deg): f·g = σ·g·f links
        // f[π(a), π(d)] = (s_a / (σ·s_d)) · f[a, d].
        let sigma_neg = f_deg & g_deg == 1;
        for a in 0..n {
            let (pa, sa) = &view[a];
            for d in 0..n {
                if !allowed(a, d) {
                    continue;
                }
                let (pd, sd) = &view[d];
                let mut ratio = sa * &sd.inv().expect("monomial coefficients are units");
                if sigma_neg {
                    ratio = -ratio;
                }
                forest.relate(a * n + d, pa * n + pd, &ratio);
            }
        }
    }
    // Collect components rooted at allowed positions.
    let mut components: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for r in 0..n {
        for c in 0..n {
            if !allowed(r, c) {
                continue;
            }
            let x = r * n + c;
            let (root, pot) = forest.find(x);
            components.entry(root).or_default().push((x, pot));
        }
    }
    let mut basis = Vec::new();
    for (root, mut entries) in components {
        if forest.dead[root] {
            continue;
        }
        entries.sort_by_key(|(p, _)| *p);
        basis.push(entries);
    }
    basis
}

/// Multiply sparse operator data: out[r,c] accumulated from by-col/by-row
/// nonzero lists of g against a sparse matrix given by entries.
fn sparse_matrix(n: usize, entries: &SparseVec) -> BTreeMap<(usize, usize), Cyclo8> {
    entries
        .iter()
        .map(|(p, v)| ((p / n, p % n), v.clone()))
        .collect()
}

/// Constraint value C = g·F − σ·F·g for sparse F.
fn commutator_entries(
    g_by_col: &[Vec<(usize, Cyclo8)>],
    g_by_row: &[Vec<(usize, Cyclo8)>],
    n: usize,
    f: &SparseVec,
    sigma_neg: bool,
) -> BTreeMap<usize, Cyclo8> {
    let fm = sparse_matrix(n, f);
    let mut out: BTreeMap<usize, Cyclo8> = BTreeMap::new();
    for ((a, c), v) in &fm {
        // g·F: g[r, a]·F[a, c] lands at (r, c).
        for (r, gv) in &g_by_col[*a] {
            let e = out.entry(r * n + c).or_insert_with(Cyclo8::zero);
            *e = &*e + &(gv * v);
        }
        // −σ·F·g: F[a, c]·g[c, b] lands at (a, b).
        for (b, gv) in &g_by_row[*c] {
            let e = out.entry(a * n + b).or_insert_with(Cyclo8::zero);
            let term = v * gv;
            *e = if sigma_neg { &*e + &term } else { &*e - &term };
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Intersect the span of `basis` (sparse entry vectors) with the
/// supercommutation condition for one generator; returns the new basis.
fn refine_with_generator(
    basis: Vec<SparseVec>,
    g: &FMatrix,
    g_deg: u8,
    f_deg: u8,
) -> Vec<SparseVec> {
    let n = g.rows();
    let mut g_by_col: Vec<Vec<(usize, Cyclo8)>> = vec![Vec::new(); n];
    let mut g_by_row: Vec<Vec<(usize, Cyclo8)>> = vec![Vec::new(); n];
    for r in 0..n {
        for c in 0..n {
            let v = g.get(r, c);
            if !v.is_zero() {
                g_by_col[c].push((r, v.clone()));
                g_by_row[r].push((c, v.clone()));
            }
        }
    }
    let sigma_neg = f_deg & g_deg == 1;
    // Rows of the coefficient system: position → Σ_t α_t·C_t[position].
    let mut rows: BTreeMap<usize, SparseVec> = BTreeMap::new();
    for (t, f) in basis.iter().enumerate() {
        let c_t = commutator_entries(&g_by_col, &g_by_row, n, f, sigma_neg);
        for (pos, v) in c_t {
            rows.entry(pos).or_default().push((t, v));
        }
    }
    let coeff_basis = nullspace_sparse(rows.into_values(), basis.len());
    coeff_basis
        .into_iter()
        .map(|alpha| {
            let mut acc: BTreeMap<usize, Cyclo8> = BTreeMap::new();
            for (t, a) in alpha {
                for (pos, v) in &basis[t] {
                    let e = acc.entry(*pos).or_insert_with(Cyclo8::zero);
                    *e = &*e + &(&a * v);
                }
            }
            acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
        })
        .collect()
}

fn to_matrices(n: usize, basis: Vec<SparseVec>) -> Vec<FMatrix> {
    basis
        .into_iter()
        .map(|f| {
            let mut m = FMatrix::zeros(n, n);
            for (pos, v) in f {
                m.set(pos / n, pos % n, v);
            }
            m
        })
        .collect()
}

/// Bases of the even and odd parts of the supercommutant of the given
/// homogeneous generators, on a space with the given index degrees.
///
/// Monomial generators are solved first via entry orbits, then the
/// remaining generators via exact elimination on the reduced span.
pub fn supercommutant(
    gens: &[GradedOperator],
    degs: &[u8],
) -> Result<(Vec<FMatrix>, Vec<FMatrix>), QdError> {
    let n = degs.len();
    let mut monomials = Vec::new();
    let mut general = Vec::new();
    for g in gens {
        let g_deg = g.degree.parity().ok_or_else(|| {
            QdError::InvalidInput("supercommutant needs homogeneous generators".into())
        })?;
        if g.mat.rows() != n || g.mat.cols() != n {
            return Err(QdError::DimensionMismatch(format!(
                "generator is {}x{}, space has dim {n}",
                g.mat.rows(),
                g.mat.cols()
            )));
        }
        match monomial_view(&g.mat) {
            Some(view) => monomials.push((view, g_deg)),
            None => general.push((g.mat.clone(), g_deg)),
        }
    }
    let mut out: Vec<Vec<FMatrix>> = Vec::with_capacity(2);
    for f_deg in [0u8, 1u8] {
        let mut basis = if monomials.is_empty() {
            // Start from all allowed entry positions.
            let mut b = Vec::new();
            for r in 0..n {
                for c in 0..n {
                    if degs[r] ^ degs[c] == f_deg {
                        b.push(vec![(r * n + c, Cyclo8::one())]);
                    }
                }
            }
            b
        } else {
            orbit_solve(&monomials, degs, f_deg)
        };
        for (g, g_deg) in &general {
            if basis.is_empty() {
                break;
            }
            basis = refine_with_generator(basis, g, *g_deg, f_deg);
        }
        out.push(to_matrices(n, basis));
    }
    let odd = out.pop().unwrap();
    let even = out.pop().unwrap();
    Ok((even, odd))
}

/// A simultaneous eigenspace of the commuting even involutions, with the
/// data needed to restrict commuting operators onto it.
pub struct SubspaceBasis {
    /// Ambient dimension.
    pub ambient_dim: usize,
    /// One representative ambient index per basis vector (coefficient 1).
    pub reps: Vec<usize>,
    /// Basis vectors as sparse ambient columns.
    pub vectors: Vec<SparseVec>,
    /// Degree of each basis vector.
    pub degs: Vec<u8>,
}

impl SubspaceBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Restrict an operator that preserves the subspace; exact, with a full
    /// reconstruction check (errors if the operator leaves the subspace).
    pub fn restrict(&self, m: &FMatrix) -> Result<FMatrix, QdError> {
        let mut rep_of: BTreeMap<usize, usize> = BTreeMap::new();
        for (j, &r) in self.reps.iter().enumerate() {
            rep_of.insert(r, j);
        }
        let dim = self.dim();
        let mut out = FMatrix::zeros(dim, dim);
        for (j, v) in self.vectors.iter().enumerate() {
            let image: SparseVec = m.apply_sparse(v);
            // Coordinates: read off at representatives.
            let mut coords: Vec<(usize, Cyclo8)> = Vec::new();
            for (pos, val) in &image {
                if let Some(&jj) = rep_of.get(pos) {
                    coords.push((jj, val.clone()));
                }
            }
            // Verify the image is exactly the claimed combination.
            let mut recon: BTreeMap<usize, Cyclo8> = BTreeMap::new();
            for (jj, val) in &coords {
                for (pos, bv) in &self.vectors[*jj] {
                    let e = recon.entry(*pos).or_insert_with(Cyclo8::zero);
                    *e = &*e + &(val * bv);
                }
            }
            recon.retain(|_, v| !v.is_zero());
            let image_map: BTreeMap<usize, Cyclo8> = image.into_iter().collect();
            if recon != image_map {
                return Err(QdError::InvalidInput(
                    "operator does not preserve the subspace".into(),
                ));
            }
            for (jj, val) in coords {
                out.set(jj, j, val);
            }
        }
        Ok(out)
    }

    /// Restrict a graded operator, reclassifying against the subspace grading.
    pub fn restrict_graded(&self, g: &GradedOperator) -> Result<GradedOperator, QdError> {
        let m = self.restrict(&g.mat)?;
        Ok(GradedOperator::classify(m, &self.degs))
    }
}

/// Build the simultaneous eigenspace of monomial commuting involutions
/// Z_1, …, Z_r for the sign pattern ε: vectors Π_i (1 + (−1)^(ε_i) Z_i)·e_rep,
/// one per orbit of the index action, normalized to coefficient 1 at the
/// smallest orbit index.
pub fn eigenspace_basis(
    zetas: &[GradedOperator],
    eps: &[u8],
    degs: &[u8],
) -> Result<SubspaceBasis, QdError> {
    if zetas.len() != eps.len() {
        return Err(QdError::DimensionMismatch(format!(
            "{} involutions vs {} sign bits",
            zetas.len(),
            eps.len()
        )));
    }
    let n = degs.len();
    let views: Vec<Vec<(usize, Cyclo8)>> = zetas
        .iter()
        .map(|z| {
            monomial_view(&z.mat)
                .ok_or_else(|| QdError::InvalidInput("involutions must be monomial".into()))
        })
        .collect::<Result<_, _>>()?;
    // Orbits of the group generated by the index permutations.
    let mut seen = vec![false; n];
    let mut reps = Vec::new();
    let mut vectors = Vec::new();
    let mut vdegs = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // BFS over the index orbit.
        let mut orbit = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for view in &views {
                let (y, _) = view[x];
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        // v = Π_i (1 + (−1)^(ε_i)·Z_i) e_start, built by repeated application.
        let mut v: BTreeMap<usize, Cyclo8> = BTreeMap::new();
        v.insert(start, Cyclo8::one());
        for (i, view) in views.iter().enumerate() {
            let mut next = v.clone();
            for (pos, val) in &v {
                let (y, s) = &view[*pos];
                let term = if eps[i] == 1 { -&(val * s) } else { val * s };
                let e = next.entry(*y).or_insert_with(Cyclo8::zero);
                *e = &*e + &term;
            }
            next.retain(|_, val| !val.is_zero());
            v = next;
        }
        if v.is_empty() {
            continue;
        }
        // Normalize to coefficient 1 at the smallest support index.
        let (&lead, lead_val) = v.iter().next().expect("nonempty");
        let inv = lead_val.inv()?;
        let vecd: SparseVec = v.iter().map(|(p, val)| (*p, val * &inv)).collect();
        reps.push(lead);
        vdegs.push(degs[lead]);
        vectors.push(vecd);
    }
    Ok(SubspaceBasis { ambient_dim: n, reps, vectors, degs: vdegs })
}
