//! Desk-scale search for codes certifying the symplectic-space bound.
//!
//! When inequality (1) holds at small parameters an actual witness code
//! should exist. Random mode samples uniform l-dimensional subspaces
//! and filters on the entanglement degree; exhaustive mode walks every
//! subspace once via its canonical reduced row-echelon form. If the
//! bound is satisfied and an exhaustive run finds nothing, the report
//! flags a hard contradiction.

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bound::{check_new, BoundError, BoundParamsNew};
use crate::gf::{FieldElement, FieldSpec};
use crate::symplectic::{analyze_code, detection_check, CodeSpace, SymplecticError};

#[derive(Debug, Error)]
pub enum WitnessError {
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Symplectic(#[from] SymplecticError),
    #[error("exhaustive enumeration too large: {count} subspaces > cap {cap}")]
    EnumerationTooLarge { count: BigUint, cap: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchMode {
    Random,
    Exhaustive,
}

#[derive(Debug, Clone)]
pub struct SearchConfig {
    pub params: BoundParamsNew,
    pub mode: SearchMode,
    pub trials: u64,
    pub seed: u64,
    /// Detection-check enumeration budget.
    pub budget: u64,
    /// Max subspace count admitted in exhaustive mode.
    pub subspace_cap: u64,
}

impl SearchConfig {
    pub fn new(params: BoundParamsNew, mode: SearchMode) -> Self {
        SearchConfig {
            params,
            mode,
            trials: 10_000,
            seed: 0,
            budget: crate::symplectic::DEFAULT_DETECTION_BUDGET,
            subspace_cap: 1_000_000,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessReport {
    pub found: bool,
    pub witness: Option<Vec<Vec<FieldElement>>>,
    pub trials_used: u64,
    pub rejected_wrong_c: u64,
    pub rejected_detection: u64,
    pub bound_satisfied: bool,
    /// Exhaustive mode completed with the bound satisfied but no
    /// witness: contradicts the existence theorem.
    pub contradiction: bool,
}

/// Gaussian binomial [n choose k]_q: the number of k-dimensional
/// subspaces of F_q^n.
pub fn gaussian_binomial(n: u64, k: u64, q: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let qb = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= qb.pow((n - i) as u32) - BigUint::one();
        den *= qb.pow((i + 1) as u32) - BigUint::one();
    }
    num / den
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha12Rng {
    // splitmix64 finalizer mixes (seed, trial) into one stream key
    let mut z = seed ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^= z >> 31;
    ChaCha12Rng::seed_from_u64(z)
}

/// Draws a uniform l-dimensional subspace of F_q^{2n} by rejection on
/// the rank of an i.i.d. uniform l x 2n matrix.
pub fn sample_subspace(
    field: &FieldSpec,
    n: usize,
    ell: usize,
    rng: &mut impl Rng,
) -> Result<CodeSpace, SymplecticError> {
    assert!(ell <= 2 * n);
    loop {
        let rows: Vec<Vec<FieldElement>> = (0..ell)
            .map(|_| (0..2 * n).map(|_| rng.gen_range(0..field.q)).collect())
            .collect();
        let cs = analyze_code(field, n, &rows)?;
        if cs.ell == ell {
            return Ok(cs);
        }
    }
}

/// Iterates the canonical reduced row-echelon form of every
/// k-dimensional subspace of F_q^{ncols}, in lexicographic pivot order.
pub struct SubspaceIter {
    q: u64,
    ncols: usize,
    k: usize,
    pivots: Option<Vec<usize>>,
    free_positions: Vec<(usize, usize)>,
    assignment: u64,
    assignment_count: u64,
}

impl SubspaceIter {
    pub fn new(q: u64, ncols: usize, k: usize) -> Self {
        let mut it = SubspaceIter {
            q,
            ncols,
            k,
            pivots: None,
            free_positions: Vec::new(),
            assignment: 0,
            assignment_count: 0,
        };
        if k <= ncols {
            it.set_pivots((0..k).collect());
        }
        it
    }

    fn set_pivots(&mut self, pivots: Vec<usize>) {
        self.free_positions.clear();
        // free entries: row i, columns right of its pivot that are not
        // pivots themselves
        for (i, &p) in pivots.iter().enumerate() {
            for j in (p + 1)..self.ncols {
                if !pivots.contains(&j) {
                    self.free_positions.push((i, j));
                }
            }
        }
        self.assignment = 0;
        self.assignment_count = self.q.pow(self.free_positions.len() as u32);
        self.pivots = Some(pivots);
    }

    fn advance_pivots(&mut self) -> bool {
        let pivots = self.pivots.as_mut().expect("pivots set");
        // next k-combination of 0..ncols in lex order
        let k = self.k;
        if k == 0 {
            self.pivots = None;
            return false;
        }
        let mut i = k;
        loop {
            if i == 0 {
                self.pivots = None;
                return false;
            }
            i -= 1;
            if pivots[i] < self.ncols - (k - i) {
                pivots[i] += 1;
                for j in (i + 1)..k {
                    pivots[j] = pivots[j - 1] + 1;
                }
                let pv = pivots.clone();
                self.set_pivots(pv);
                return true;
            }
        }
    }
}

impl Iterator for SubspaceIter {
    type Item = Vec<Vec<FieldElement>>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let pivots = self.pivots.as_ref()?;
            if self.assignment < self.assignment_count {
                let mut rows = vec![vec![0u64; self.ncols]; self.k];
                for (i, &p) in pivots.iter().enumerate() {
                    rows[i][p] = 1;
                }
                let mut rest = self.assignment;
                for &(i, j) in &self.free_positions {
                    rows[i][j] = rest % self.q;
                    rest /= self.q;
                }
                self.assignment += 1;
                if self.k == 0 {
                    // the zero space has exactly one representative
                    self.pivots = None;
                }
                return Some(rows);
            }
            if !self.advance_pivots() {
                return None;
            }
        }
    }
}

/// Runs the configured search and reports the first witness in
/// deterministic order.
pub fn search_witness(cfg: &SearchConfig) -> Result<WitnessReport, WitnessError> {
    let p = cfg.params;
    p.validate()?;
    let (bound_satisfied, _) = check_new(&p)?;
    let field = crate::gf::make_field(p.q, None).map_err(SymplecticError::Field)?;
    let n = p.n as usize;
    let ell = p.ell as usize;
    let target_c = p.c as usize;

    let mut rejected_wrong_c = 0u64;
    let mut rejected_detection = 0u64;
    let mut trials_used = 0u64;

    let try_candidate = |cs: &CodeSpace,
                             rejected_wrong_c: &mut u64,
                             rejected_detection: &mut u64|
     -> Result<bool, WitnessError> {
        if cs.c != target_c {
            *rejected_wrong_c += 1;
            return Ok(false);
        }
        let det = detection_check(cs, p.d_x, p.d_z, cfg.budget)?;
        if det.ok {
            Ok(true)
        } else {
            *rejected_detection += 1;
            Ok(false)
        }
    };

    match cfg.mode {
        SearchMode::Exhaustive => {
            let count = gaussian_binomial(2 * p.n, p.ell, p.q);
            if count > BigUint::from(cfg.subspace_cap) {
                return Err(WitnessError::EnumerationTooLarge {
                    count,
                    cap: cfg.subspace_cap,
                });
            }
            for rows in SubspaceIter::new(p.q, 2 * n, ell) {
                trials_used += 1;
                let cs = analyze_code(&field, n, &rows)?;
                if try_candidate(&cs, &mut rejected_wrong_c, &mut rejected_detection)? {
                    return Ok(WitnessReport {
                        found: true,
                        witness: Some(cs.basis.rows.clone()),
                        trials_used,
                        rejected_wrong_c,
                        rejected_detection,
                        bound_satisfied,
                        contradiction: false,
                    });
                }
            }
            Ok(WitnessReport {
                found: false,
                witness: None,
                trials_used,
                rejected_wrong_c,
                rejected_detection,
                bound_satisfied,
                contradiction: bound_satisfied,
            })
        }
        SearchMode::Random => {
            for trial in 0..cfg.trials {
                trials_used += 1;
                let mut rng = trial_rng(cfg.seed, trial);
                let cs = sample_subspace(&field, n, ell, &mut rng)?;
                if try_candidate(&cs, &mut rejected_wrong_c, &mut rejected_detection)? {
                    return Ok(WitnessReport {
                        found: true,
                        witness: Some(cs.basis.rows.clone()),
                        trials_used,
                        rejected_wrong_c,
                        rejected_detection,
                        bound_satisfied,
                        contradiction: false,
                    });
                }
            }
            Ok(WitnessReport {
                found: false,
                witness: None,
                trials_used,
                rejected_wrong_c,
                rejected_detection,
                bound_satisfied,
                contradiction: false,
            })
        }
    }
}
