//! Linear algebra over F_q^{2n} with the symplectic form
//! <(a|b),(a'|b')> = a.b' - b.a'.
//!
//! A code is the row space of a generator matrix H = (H_X|H_Z).
//! Supplied rows may be dependent; every derived quantity is computed
//! from a reduced row-echelon basis. The entanglement degree c comes
//! out of the Gram-matrix rank and is cross-checked against the
//! dimension of C intersect its symplectic dual.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::gf::{FieldElement, FieldError, FieldSpec};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SymplecticError {
    #[error("malformed matrix: {0}")]
    MalformedMatrix(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("length or field mismatch")]
    Mismatch,
    #[error("enumeration budget exceeded: {required} candidates > budget {budget}")]
    BudgetExceeded { required: BigUint, budget: u64 },
    #[error("detection not certified for dx={d_x}, dz={d_z}")]
    DetectionNotCertified { d_x: u64, d_z: u64 },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A vector (x|z) in F_q^{2n}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymplecticVector {
    pub n: usize,
    pub x: Vec<FieldElement>,
    pub z: Vec<FieldElement>,
}

impl SymplecticVector {
    pub fn from_concat(v: &[FieldElement]) -> Self {
        assert!(v.len() % 2 == 0);
        let n = v.len() / 2;
        SymplecticVector {
            n,
            x: v[..n].to_vec(),
            z: v[n..].to_vec(),
        }
    }

    pub fn concat(&self) -> Vec<FieldElement> {
        let mut out = self.x.clone();
        out.extend_from_slice(&self.z);
        out
    }
}

/// Symplectic product u.x * v.z - u.z * v.x; antisymmetric.
pub fn symp_product(
    field: &FieldSpec,
    u: &SymplecticVector,
    v: &SymplecticVector,
) -> Result<FieldElement, SymplecticError> {
    if u.n != v.n {
        return Err(SymplecticError::Mismatch);
    }
    let mut acc = 0u64;
    for i in 0..u.n {
        let t1 = field.mul(u.x[i], v.z[i]);
        let t2 = field.mul(u.z[i], v.x[i]);
        acc = field.add(acc, field.sub(t1, t2));
    }
    Ok(acc)
}

/// A matrix over GF(q) in reduced row-echelon form with pivot columns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Echelon {
    pub rows: Vec<Vec<FieldElement>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces v against the echelon rows; the residue is zero iff v
    /// lies in the row space.
    pub fn reduce(&self, field: &FieldSpec, v: &[FieldElement]) -> Vec<FieldElement> {
        let mut r = v.to_vec();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            if r[piv] != 0 {
                let factor = r[piv];
                for (ri, &mi) in r.iter_mut().zip(row) {
                    *ri = field.sub(*ri, field.mul(factor, mi));
                }
            }
        }
        r
    }

    pub fn contains(&self, field: &FieldSpec, v: &[FieldElement]) -> bool {
        self.reduce(field, v).iter().all(|&c| c == 0)
    }
}

fn validate_matrix(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> Result<(), SymplecticError> {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    for r in rows {
        if r.len() != width {
            return Err(SymplecticError::MalformedMatrix(
                "ragged rows".to_string(),
            ));
        }
        for &e in r {
            field.check_element(e)?;
        }
    }
    Ok(())
}

/// Gaussian elimination to reduced row-echelon form.
pub fn rref(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> Echelon {
    let mut m: Vec<Vec<FieldElement>> = rows.to_vec();
    let ncols = m.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = field.inv(m[rank][col]).expect("pivot is nonzero");
        for e in m[rank].iter_mut() {
            *e = field.mul(*e, inv);
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..ncols {
                    let t = field.mul(factor, m[rank][c]);
                    m[r][c] = field.sub(m[r][c], t);
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    m.truncate(rank);
    Echelon { rows: m, pivots }
}

/// Rank over GF(q).
pub fn rank_gf(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> Result<usize, SymplecticError> {
    validate_matrix(field, rows)?;
    Ok(rref(field, rows).rank())
}

/// Basis of the (right) kernel {v : M v = 0}.
pub fn kernel(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let ech = rref(field, rows);
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; ncols];
        for &p in &ech.pivots {
            s[p] = true;
        }
        s
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set[free] {
            continue;
        }
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (row, &piv) in ech.rows.iter().zip(&ech.pivots) {
            v[piv] = field.neg(row[free]);
        }
        basis.push(v);
    }
    basis
}

/// A code C in F_q^{2n} with its derived symplectic invariants.
#[derive(Debug, Clone, Serialize)]
pub struct CodeSpace {
    pub field: FieldSpec,
    pub n: usize,
    /// Generator rows as supplied (possibly dependent).
    pub generators: Vec<Vec<FieldElement>>,
    /// Echelon basis of C.
    pub basis: Echelon,
    pub ell: usize,
    pub c: usize,
    pub dim_intersection: usize,
}

impl CodeSpace {
    pub fn dual_dim(&self) -> usize {
        2 * self.n - self.ell
    }
}

/// Rows of the matrix whose kernel is C^perp_s: row (r_x|r_z) maps to
/// (-r_z|r_x), turning the symplectic condition into a plain dot
/// product.
fn symplectic_swap(field: &FieldSpec, rows: &[Vec<FieldElement>], n: usize) -> Vec<Vec<FieldElement>> {
    rows.iter()
        .map(|r| {
            let mut out = Vec::with_capacity(2 * n);
            for i in 0..n {
                out.push(field.neg(r[n + i]));
            }
            out.extend_from_slice(&r[..n]);
            out
        })
        .collect()
}

/// Basis of C^perp_s given an echelon basis of C. The dual of the zero
/// code is the full space.
fn dual_basis(field: &FieldSpec, basis: &Echelon, n: usize) -> Vec<Vec<FieldElement>> {
    if basis.rows.is_empty() {
        return (0..2 * n)
            .map(|i| {
                let mut v = vec![0u64; 2 * n];
                v[i] = 1;
                v
            })
            .collect();
    }
    kernel(field, &symplectic_swap(field, &basis.rows, n))
}

/// The Gram matrix H_X H_Z^T - H_Z H_X^T of the symplectic form on the
/// given rows.
pub fn gram_matrix(field: &FieldSpec, rows: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    let vecs: Vec<SymplecticVector> = rows
        .iter()
        .map(|r| SymplecticVector::from_concat(r))
        .collect();
    vecs.iter()
        .map(|u| {
            vecs.iter()
                .map(|v| symp_product(field, u, v).expect("lengths equal"))
                .collect()
        })
        .collect()
}

/// Computes all derived dimensions of the row space of H.
pub fn analyze_code(
    field: &FieldSpec,
    n: usize,
    rows: &[Vec<FieldElement>],
) -> Result<CodeSpace, SymplecticError> {
    validate_matrix(field, rows)?;
    if let Some(r) = rows.first() {
        if r.len() != 2 * n {
            return Err(SymplecticError::MalformedMatrix(format!(
                "expected 2n = {} columns, got {}",
                2 * n,
                r.len()
            )));
        }
    }
    let basis = rref(field, rows);
    let ell = basis.rank();
    // Gram matrix on a row basis, so dependent input rows do not
    // distort c.
    let gram = gram_matrix(field, &basis.rows);
    let gram_rank = rref(field, &gram).rank();
    debug_assert_eq!(gram_rank % 2, 0, "antisymmetric forms have even rank");
    let c = gram_rank / 2;
    // Cross-check ell - 2c against a direct intersection computation:
    // dim(C ∩ D) = dim C + dim D - rank(C stacked on D).
    let dual = dual_basis(field, &basis, n);
    let mut stacked = basis.rows.clone();
    stacked.extend(dual.iter().cloned());
    let union_rank = rref(field, &stacked).rank();
    let dim_intersection = ell + dual.len() - union_rank;
    if dim_intersection != ell - 2 * c {
        return Err(SymplecticError::MalformedMatrix(format!(
            "internal inconsistency: dim(C ∩ C^⊥s) = {dim_intersection} but l - 2c = {}",
            ell as i64 - 2 * c as i64
        )));
    }
    Ok(CodeSpace {
        field: field.clone(),
        n,
        generators: rows.to_vec(),
        basis,
        ell,
        c,
        dim_intersection,
    })
}

/// The symplectic dual C^perp_s as a CodeSpace of dimension 2n - l.
pub fn symplectic_dual(cs: &CodeSpace) -> Result<CodeSpace, SymplecticError> {
    let dual = dual_basis(&cs.field, &cs.basis, cs.n);
    analyze_code(&cs.field, cs.n, &dual)
}

/// Result of an exhaustive detection-distance check.
#[derive(Debug, Clone, Serialize)]
pub struct DetectionResult {
    pub ok: bool,
    pub counterexample: Option<SymplecticVector>,
}

pub const DEFAULT_DETECTION_BUDGET: u64 = 10_000_000;

/// Enumerates vectors of F_q^n with Hamming weight <= max_w, as weight
/// ascending then lexicographic by digit vector.
fn low_weight_vectors(q: u64, n: usize, max_w: usize) -> Vec<Vec<FieldElement>> {
    let mut by_weight: Vec<Vec<Vec<FieldElement>>> = vec![Vec::new(); max_w + 1];
    // positions of nonzero entries chosen by combinations
    fn rec(
        n: usize,
        start: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        sink: &mut Vec<Vec<usize>>,
    ) {
        if remaining == 0 {
            sink.push(current.clone());
            return;
        }
        for pos in start..=n.saturating_sub(remaining) {
            current.push(pos);
            rec(n, pos + 1, remaining - 1, current, sink);
            current.pop();
        }
    }
    for w in 0..=max_w.min(n) {
        let mut supports = Vec::new();
        rec(n, 0, w, &mut Vec::new(), &mut supports);
        let assignments = (q - 1).pow(w as u32);
        for support in supports {
            // all assignments of nonzero values to the support, decoded
            // base q-1
            for idx in 0..assignments {
                let mut v = vec![0u64; n];
                let mut rest = idx;
                for &pos in &support {
                    v[pos] = 1 + rest % (q - 1);
                    rest /= q - 1;
                }
                by_weight[w].push(v);
            }
        }
    }
    let mut out = Vec::new();
    for mut group in by_weight {
        group.sort();
        out.append(&mut group);
    }
    out
}

/// Exhaustive check that no low-weight vector lies in
/// C^perp_s \ (C ∩ C^perp_s). The counterexample, if any, is the least
/// in (total weight, x, z) order.
pub fn detection_check(
    cs: &CodeSpace,
    d_x: u64,
    d_z: u64,
    budget: u64,
) -> Result<DetectionResult, SymplecticError> {
    assert!(d_x >= 1 && d_z >= 1);
    let n = cs.n as u64;
    let q = cs.field.q;
    let required =
        crate::bound::ball_sum(n, d_x.min(n + 1), q) * crate::bound::ball_sum(n, d_z.min(n + 1), q);
    if required > BigUint::from(budget) {
        return Err(SymplecticError::BudgetExceeded { required, budget });
    }
    let dual = dual_basis(&cs.field, &cs.basis, cs.n);
    let dual_ech = rref(&cs.field, &dual);
    let xs = low_weight_vectors(q, cs.n, (d_x - 1) as usize);
    let zs = low_weight_vectors(q, cs.n, (d_z - 1) as usize);
    let weight = |v: &[u64]| v.iter().filter(|&&e| e != 0).count();
    // total weight ascending, then lex by (x, z)
    let mut candidates: Vec<(usize, &Vec<u64>, &Vec<u64>)> = Vec::new();
    for x in &xs {
        let wx = weight(x);
        for z in &zs {
            candidates.push((wx + weight(z), x, z));
        }
    }
    candidates.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
    for (_, x, z) in candidates {
        let mut v = x.clone();
        v.extend_from_slice(z);
        if dual_ech.contains(&cs.field, &v) && !cs.basis.contains(&cs.field, &v) {
            return Ok(DetectionResult {
                ok: false,
                counterexample: Some(SymplecticVector::from_concat(&v)),
            });
        }
    }
    Ok(DetectionResult {
        ok: true,
        counterexample: None,
    })
}

/// The parameter tuple [[n, n - l + c, d_x/d_z; c]]_q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EaqeccParams {
    pub n: usize,
    pub k: usize,
    pub d_x: u64,
    pub d_z: u64,
    pub c: usize,
    pub q: u64,
}

/// Extracts code parameters once the detection property is certified.
pub fn eaqecc_params(
    cs: &CodeSpace,
    d_x: u64,
    d_z: u64,
    budget: u64,
) -> Result<EaqeccParams, SymplecticError> {
    let det = detection_check(cs, d_x, d_z, budget)?;
    if !det.ok {
        return Err(SymplecticError::DetectionNotCertified { d_x, d_z });
    }
    Ok(EaqeccParams {
        n: cs.n,
        k: cs.n - cs.ell + cs.c,
        d_x,
        d_z,
        c: cs.c,
        q: cs.field.q,
    })
}

/// Parses the text matrix format: header `q=<int> n=<int>
/// [poly=<c0,c1,...>]`, then one row of 2n entries per line; `#` starts
/// a comment.
pub fn parse_matrix_file(text: &str) -> Result<(FieldSpec, usize, Vec<Vec<FieldElement>>), SymplecticError> {
    let mut field: Option<FieldSpec> = None;
    let mut n = 0usize;
    let mut rows = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if field.is_none() {
            let mut q = None;
            let mut nn = None;
            let mut poly = None;
            for tok in line.split_whitespace() {
                let (key, val) = tok.split_once('=').ok_or(SymplecticError::Parse {
                    line: idx + 1,
                    msg: format!("expected key=value, got '{tok}'"),
                })?;
                match key {
                    "q" => {
                        q = Some(val.parse::<u64>().map_err(|e| SymplecticError::Parse {
                            line: idx + 1,
                            msg: e.to_string(),
                        })?)
                    }
                    "n" => {
                        nn = Some(val.parse::<usize>().map_err(|e| SymplecticError::Parse {
                            line: idx + 1,
                            msg: e.to_string(),
                        })?)
                    }
                    "poly" => {
                        let coeffs: Result<Vec<u64>, _> =
                            val.split(',').map(|c| c.trim().parse::<u64>()).collect();
                        poly = Some(coeffs.map_err(|e| SymplecticError::Parse {
                            line: idx + 1,
                            msg: e.to_string(),
                        })?);
                    }
                    other => {
                        return Err(SymplecticError::Parse {
                            line: idx + 1,
                            msg: format!("unknown header key '{other}'"),
                        })
                    }
                }
            }
            let q = q.ok_or(SymplecticError::Parse {
                line: idx + 1,
                msg: "missing q=".to_string(),
            })?;
            n = nn.ok_or(SymplecticError::Parse {
                line: idx + 1,
                msg: "missing n=".to_string(),
            })?;
            field = Some(crate::gf::make_field(q, poly).map_err(|e| SymplecticError::Parse {
                line: idx + 1,
                msg: e.to_string(),
            })?);
            continue;
        }
        let entries: Result<Vec<u64>, _> = line.split_whitespace().map(|t| t.parse::<u64>()).collect();
        let entries = entries.map_err(|e| SymplecticError::Parse {
            line: idx + 1,
            msg: e.to_string(),
        })?;
        if entries.len() != 2 * n {
            return Err(SymplecticError::Parse {
                line: idx + 1,
                msg: format!("expected {} entries, got {}", 2 * n, entries.len()),
            });
        }
        rows.push(entries);
    }
    let field = field.ok_or(SymplecticError::Parse {
        line: 0,
        msg: "missing header line".to_string(),
    })?;
    Ok((field, n, rows))
}

/// Renders a generator matrix in the text matrix format.
pub fn format_matrix_file(field: &FieldSpec, n: usize, rows: &[Vec<FieldElement>]) -> String {
    let mut out = String::new();
    if field.m > 1 {
        let coeffs: Vec<String> = field.modulus.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("q={} n={} poly={}\n", field.q, n, coeffs.join(",")));
    } else {
        out.push_str(&format!("q={} n={}\n", field.q, n));
    }
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn sv(x: &[u64], z: &[u64]) -> SymplecticVector {
        SymplecticVector {
            n: x.len(),
            x: x.to_vec(),
            z: z.to_vec(),
        }
    }

    #[test]
    fn symp_product_examples() {
        let f2 = make_field(2, None).unwrap();
        let u = sv(&[1, 0], &[0, 0]);
        assert_eq!(symp_product(&f2, &u, &u).unwrap(), 0);
        let v = sv(&[0, 0], &[1, 0]);
        assert_eq!(symp_product(&f2, &u, &v).unwrap(), 1);
        let f5 = make_field(5, None).unwrap();
        let u = sv(&[2], &[1]);
        let v = sv(&[3], &[4]);
        assert_eq!(symp_product(&f5, &u, &v).unwrap(), 0); // 2*4 - 1*3 = 5
    }

    #[test]
    fn symp_product_antisymmetric() {
        let f3 = make_field(3, None).unwrap();
        let u = sv(&[1, 2, 0], &[2, 1, 1]);
        let v = sv(&[0, 1, 2], &[1, 0, 2]);
        let uv = symp_product(&f3, &u, &v).unwrap();
        let vu = symp_product(&f3, &v, &u).unwrap();
        assert_eq!(uv, f3.neg(vu));
    }

    #[test]
    fn rank_examples() {
        let f2 = make_field(2, None).unwrap();
        let id: Vec<Vec<u64>> = (0..4)
            .map(|i| (0..4).map(|j| u64::from(i == j)).collect())
            .collect();
        assert_eq!(rank_gf(&f2, &id).unwrap(), 4);
        assert_eq!(rank_gf(&f2, &[vec![1, 1], vec![1, 1]]).unwrap(), 1);
        assert_eq!(rank_gf(&f2, &[vec![0, 1], vec![1, 0]]).unwrap(), 2);
    }

    #[test]
    fn kernel_dimension() {
        let f3 = make_field(3, None).unwrap();
        let m = vec![vec![1, 2, 0, 1], vec![0, 0, 1, 2]];
        let k = kernel(&f3, &m);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &m {
                let mut acc = 0u64;
                for (a, b) in row.iter().zip(v) {
                    acc = f3.add(acc, f3.mul(*a, *b));
                }
                assert_eq!(acc, 0);
            }
        }
    }

    #[test]
    fn analyze_code_examples() {
        let f2 = make_field(2, None).unwrap();
        let cs = analyze_code(&f2, 2, &[vec![1, 0, 0, 0], vec![0, 0, 1, 0]]).unwrap();
        assert_eq!((cs.ell, cs.c, cs.dim_intersection), (2, 1, 0));

        let cs = analyze_code(&f2, 2, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        assert_eq!((cs.ell, cs.c, cs.dim_intersection), (2, 0, 2));

        let f5 = make_field(5, None).unwrap();
        let cs = analyze_code(&f5, 2, &[vec![1, 2, 3, 4]]).unwrap();
        assert_eq!(cs.c, 0);
    }

    #[test]
    fn dependent_rows_do_not_distort() {
        let f2 = make_field(2, None).unwrap();
        let cs = analyze_code(
            &f2,
            2,
            &[vec![1, 0, 0, 0], vec![0, 0, 1, 0], vec![1, 0, 1, 0]],
        )
        .unwrap();
        assert_eq!((cs.ell, cs.c), (2, 1));
    }

    #[test]
    fn dual_examples() {
        let f2 = make_field(2, None).unwrap();
        // C = {0}
        let cs = analyze_code(&f2, 2, &[]).unwrap();
        let dual = symplectic_dual(&cs).unwrap();
        assert_eq!(dual.ell, 4);
        // single linear condition b1 = 0
        let cs = analyze_code(&f2, 2, &[vec![1, 0, 0, 0]]).unwrap();
        let dual = symplectic_dual(&cs).unwrap();
        assert_eq!(dual.ell, 3);
        for row in &dual.basis.rows {
            assert_eq!(row[2], 0, "z1 must vanish in the dual");
        }
    }

    #[test]
    fn dual_involution_random() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(42);
        for q in [2u64, 3, 4] {
            let f = make_field(q, None).unwrap();
            for _ in 0..170 {
                let n = rng.gen_range(1..=4usize);
                let nrows = rng.gen_range(0..=2 * n);
                let rows: Vec<Vec<u64>> = (0..nrows)
                    .map(|_| (0..2 * n).map(|_| rng.gen_range(0..q)).collect())
                    .collect();
                let cs = analyze_code(&f, n, &rows).unwrap();
                let dual = symplectic_dual(&cs).unwrap();
                assert_eq!(dual.ell, 2 * n - cs.ell);
                let bidual = symplectic_dual(&dual).unwrap();
                assert_eq!(bidual.ell, cs.ell);
                for row in &bidual.basis.rows {
                    assert!(cs.basis.contains(&f, row));
                }
                for row in &cs.basis.rows {
                    assert!(bidual.basis.contains(&f, row));
                }
            }
        }
    }

    #[test]
    fn detection_examples() {
        let f2 = make_field(2, None).unwrap();
        let cs = analyze_code(&f2, 2, &[vec![1, 0, 0, 0]]).unwrap();
        let det = detection_check(&cs, 1, 1, DEFAULT_DETECTION_BUDGET).unwrap();
        assert!(det.ok);

        let det = detection_check(&cs, 2, 1, DEFAULT_DETECTION_BUDGET).unwrap();
        assert!(!det.ok);
        assert_eq!(det.counterexample, Some(sv(&[0, 1], &[0, 0])));

        let cs = analyze_code(&f2, 2, &[vec![1, 0, 1, 0], vec![1, 1, 0, 1]]).unwrap();
        assert_eq!(cs.c, 1);
        let det = detection_check(&cs, 2, 1, DEFAULT_DETECTION_BUDGET).unwrap();
        assert!(det.ok);
    }

    #[test]
    fn detection_budget() {
        let f2 = make_field(2, None).unwrap();
        let cs = analyze_code(&f2, 2, &[vec![1, 0, 0, 0]]).unwrap();
        let err = detection_check(&cs, 3, 3, 2).unwrap_err();
        assert!(matches!(err, SymplecticError::BudgetExceeded { .. }));
    }

    #[test]
    fn eaqecc_params_examples() {
        let f2 = make_field(2, None).unwrap();
        let cs = analyze_code(&f2, 2, &[vec![1, 0, 1, 0], vec![1, 1, 0, 1]]).unwrap();
        let p = eaqecc_params(&cs, 2, 1, DEFAULT_DETECTION_BUDGET).unwrap();
        assert_eq!(
            p,
            EaqeccParams {
                n: 2,
                k: 1,
                d_x: 2,
                d_z: 1,
                c: 1,
                q: 2
            }
        );

        // C = {0}
        let cs = analyze_code(&f2, 3, &[]).unwrap();
        let p = eaqecc_params(&cs, 1, 1, DEFAULT_DETECTION_BUDGET).unwrap();
        assert_eq!((p.k, p.c), (3, 0));

        // C^perp_s = C: detection holds for every distance
        let cs = analyze_code(&f2, 2, &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]]).unwrap();
        let p = eaqecc_params(&cs, 3, 3, DEFAULT_DETECTION_BUDGET).unwrap();
        assert_eq!((p.k, p.c), (0, 0));

        // refusal when detection fails
        let cs = analyze_code(&f2, 2, &[vec![1, 0, 0, 0]]).unwrap();
        let err = eaqecc_params(&cs, 2, 1, DEFAULT_DETECTION_BUDGET).unwrap_err();
        assert!(matches!(err, SymplecticError::DetectionNotCertified { .. }));
    }

    #[test]
    fn matrix_file_round_trip() {
        let text = "# witness file\nq=4 n=2 poly=1,1,1\n1 0 2 0\n0 3 0 1\n";
        let (field, n, rows) = parse_matrix_file(text).unwrap();
        assert_eq!(field.q, 4);
        assert_eq!(n, 2);
        assert_eq!(rows, vec![vec![1, 0, 2, 0], vec![0, 3, 0, 1]]);
        let rendered = format_matrix_file(&field, n, &rows);
        let (f2, n2, r2) = parse_matrix_file(&rendered).unwrap();
        assert_eq!((f2.q, n2, r2), (4u64, n, rows));
    }

    #[test]
    fn matrix_file_errors() {
        assert!(matches!(
            parse_matrix_file("q=4 n=2\n1 0 2\n"),
            Err(SymplecticError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix_file(""),
            Err(SymplecticError::Parse { line: 0, .. })
        ));
        assert!(matches!(
            parse_matrix_file("q=6 n=2\n"),
            Err(SymplecticError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn low_weight_enumeration_counts() {
        // |{v : w(v) <= d-1}| must equal ball_sum
        for (q, n, d) in [(2u64, 4usize, 3u64), (3, 3, 2), (4, 2, 3)] {
            let vecs = low_weight_vectors(q, n, (d - 1) as usize);
            let expected = crate::bound::ball_sum(n as u64, d, q);
            assert_eq!(BigUint::from(vecs.len()), expected);
            // no duplicates
            let mut sorted = vecs.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), vecs.len());
        }
    }
}
