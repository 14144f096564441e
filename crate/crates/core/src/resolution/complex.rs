use crate::algebra::polynomial::Polynomial;
use crate::algebra::ring::RingRef;
use crate::error::{Error, Result};
use crate::groebner::syzygy_module;

use super::minors::{minor_ideal, rank};
use super::PolyMatrix;

/// Chain of free modules `E_N -> … -> E_1 -> E_0` given by its differentials
/// `f_1, …, f_N` with `f_k: E_k -> E_{k-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Complex {
    ring: RingRef,
    ranks: Vec<usize>,
    differentials: Vec<PolyMatrix>,
}

impl Complex {
    pub fn new(ring: &RingRef, rank0: usize, differentials: Vec<PolyMatrix>) -> Result<Self> {
        let mut ranks = vec![rank0];
        for f in &differentials {
            let prev = *ranks.last().expect("nonempty");
            if f.rows() != prev {
                return Err(Error::RankMismatch {
                    expected: prev,
                    found: f.rows(),
                });
            }
            crate::algebra::ring::check_same(ring, f.ring())?;
            ranks.push(f.cols());
        }
        Ok(Complex {
            ring: ring.clone(),
            ranks,
            differentials,
        })
    }

    pub fn from_differentials(differentials: Vec<PolyMatrix>) -> Result<Self> {
        let first = differentials
            .first()
            .ok_or_else(|| Error::Internal("complex needs at least one differential".into()))?;
        let ring = first.ring().clone();
        let rank0 = first.rows();
        Self::new(&ring, rank0, differentials)
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    /// Ranks of `E_0, …, E_N`.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.differentials
    }

    /// `f_k` for `1 <= k <= N`.
    pub fn differential(&self, k: usize) -> Option<&PolyMatrix> {
        if k == 0 {
            return None;
        }
        self.differentials.get(k - 1)
    }

    /// `f_k`, or the zero map for `k = N + 1` (and beyond).
    pub fn differential_or_zero(&self, k: usize) -> PolyMatrix {
        match self.differential(k) {
            Some(f) => f.clone(),
            None => {
                let rows = self.ranks.get(k - 1).copied().unwrap_or(0);
                PolyMatrix::zero(&self.ring, rows, 0)
            }
        }
    }

    /// Verifies `f_k · f_{k+1} = 0` for every k.
    pub fn check_complex(&self) -> Result<()> {
        for k in 1..self.differentials.len() {
            let prod = self.differentials[k - 1].mul(&self.differentials[k])?;
            if !prod.is_zero() {
                return Err(Error::NotAComplex { k });
            }
        }
        Ok(())
    }

    /// Removes the trivial summand `O --u--> O` carried by the constant entry
    /// `u = f_k[i][j]`.
    fn cancel_unit(&mut self, k: usize, i: usize, j: usize) {
        let nb = self.differentials[k - 1].eliminate_unit(i, j);
        self.differentials[k - 1] = nb;
        if k >= 2 {
            self.differentials[k - 2].remove_col(i);
        }
        if k < self.differentials.len() {
            self.differentials[k].remove_row(j);
        }
        self.ranks[k - 1] -= 1;
        self.ranks[k] -= 1;
        // trailing differentials with empty source are dropped
        while let Some(last) = self.differentials.last() {
            if last.cols() == 0 {
                self.differentials.pop();
                self.ranks.pop();
            } else {
                break;
            }
        }
    }

    /// Cancels constant entries until none remain, scanning differentials in
    /// order and each matrix row-major.
    fn prune(&mut self, from: usize) {
        loop {
            let hit = (from..=self.differentials.len()).find_map(|k| {
                self.differentials[k - 1].find_unit().map(|(i, j)| (k, i, j))
            });
            match hit {
                Some((k, i, j)) => self.cancel_unit(k, i, j),
                None => break,
            }
        }
    }

    /// Transposed differentials in reverse order: `E_0^* -> … -> E_N^*` read
    /// as a chain ending in `E_N^*`.
    pub fn dual(&self) -> Complex {
        let diffs: Vec<PolyMatrix> = self.differentials.iter().rev().map(|f| f.transpose()).collect();
        let mut ranks = self.ranks.clone();
        ranks.reverse();
        Complex {
            ring: self.ring.clone(),
            ranks,
            differentials: diffs,
        }
    }
}

/// A free resolution `… -> E_1 -> E_0 -> F -> 0` of `F = coker f_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeResolution {
    complex: Complex,
    minimal: bool,
}

impl FreeResolution {
    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn ring(&self) -> &RingRef {
        self.complex.ring()
    }

    /// True when no differential has a nonzero constant entry.
    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn betti(&self) -> Vec<usize> {
        self.complex.ranks().to_vec()
    }

    pub fn length(&self) -> usize {
        self.complex.length()
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        self.complex.differentials()
    }

    pub fn differential(&self, k: usize) -> Option<&PolyMatrix> {
        self.complex.differential(k)
    }

    pub fn from_complex(complex: Complex) -> Self {
        let minimal = complex.differentials().iter().all(|f| !f.has_unit_entry());
        FreeResolution { complex, minimal }
    }
}

/// Resolves `coker(presentation)` by iterated syzygies, cancelling constant
/// entries as they appear. With `raw` the syzygy chain is returned as
/// computed.
pub fn free_resolution_with(presentation: &PolyMatrix, raw: bool) -> Result<FreeResolution> {
    let ring = presentation.ring().clone();
    let max_steps = 2 * ring.nvars() + 4;
    let mut complex = Complex::new(&ring, presentation.rows(), vec![presentation.clone()])?;
    if presentation.cols() == 0 {
        complex = Complex::new(&ring, presentation.rows(), vec![])?;
    }
    if !raw && complex.length() > 0 {
        complex.prune(1);
    }
    let mut rounds = 0;
    while complex.length() > 0 {
        rounds += 1;
        if rounds > 4 * max_steps {
            return Err(Error::NonTermination(max_steps));
        }
        let last = complex.differentials.last().expect("nonempty");
        let syz = syzygy_module(last)?;
        if syz.cols() == 0 {
            break;
        }
        if complex.length() >= max_steps {
            return Err(Error::NonTermination(max_steps));
        }
        complex.ranks.push(syz.cols());
        complex.differentials.push(syz);
        if !raw {
            let k = complex.length();
            complex.prune(k);
        }
    }
    if !raw {
        complex.prune(1);
    }
    Ok(FreeResolution::from_complex(complex))
}

/// Minimalized free resolution of `coker(presentation)`.
pub fn free_resolution(presentation: &PolyMatrix) -> Result<FreeResolution> {
    free_resolution_with(presentation, false)
}

/// Free resolution of `O/(gens)`.
pub fn resolve_ideal(ring: &RingRef, gens: &[Polynomial]) -> Result<FreeResolution> {
    free_resolution(&PolyMatrix::row_vector(ring, gens)?)
}

/// Cancels every trivial summand `O --unit--> O`; the result has no constant
/// entries and the same homology.
pub fn minimalize(resolution: &FreeResolution) -> Result<FreeResolution> {
    minimalize_complex(resolution.complex()).map(FreeResolution::from_complex)
}

pub fn minimalize_complex(complex: &Complex) -> Result<Complex> {
    complex.check_complex()?;
    let mut c = complex.clone();
    if c.length() > 0 {
        c.prune(1);
    }
    Ok(c)
}

/// `Hom(-, O)` of a complex: transposes, reverse order.
pub fn dualize(complex: &Complex) -> Complex {
    complex.dual()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepVerdict {
    Exact,
    FailsRank,
    FailsCodim,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessStep {
    pub k: usize,
    pub rank_fk: usize,
    pub rank_next: usize,
    pub rank_ek: usize,
    /// Codimension of `I_{rank f_k}(f_k)`; `n + 1` for the unit ideal.
    pub codim: usize,
    pub verdict: StepVerdict,
}

/// Buchsbaum–Eisenbud criterion at each `k >= 1`: the complex is exact
/// (a resolution of `coker f_1`) iff `rank f_k + rank f_{k+1} = rank E_k`
/// and `codim I_{rank f_k}(f_k) >= k` for every k.
pub fn be_exactness(complex: &Complex) -> Result<Vec<ExactnessStep>> {
    complex.check_complex()?;
    let n = complex.length();
    let ranks: Vec<usize> = complex.differentials().iter().map(rank).collect();
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let rank_fk = ranks[k - 1];
        let rank_next = if k < n { ranks[k] } else { 0 };
        let rank_ek = complex.ranks()[k];
        let f = complex.differential(k).expect("in range");
        let codim = minor_ideal(f, rank_fk)?.codim();
        let verdict = if rank_fk + rank_next != rank_ek {
            StepVerdict::FailsRank
        } else if codim < k {
            StepVerdict::FailsCodim
        } else {
            StepVerdict::Exact
        };
        out.push(ExactnessStep {
            k,
            rank_fk,
            rank_next,
            rank_ek,
            codim,
            verdict,
        });
    }
    Ok(out)
}

pub fn is_exact(complex: &Complex) -> Result<bool> {
    Ok(be_exactness(complex)?
        .iter()
        .all(|s| s.verdict == StepVerdict::Exact))
}

/// Rank data for `f_k`: the expected rank from alternating sums, the ideal of
/// minors of that size, and the codimension of the locus `Z_k` it cuts out.
#[derive(Clone, Debug)]
pub struct RankData {
    pub k: usize,
    pub expected_rank: usize,
    pub minor_ideal: Vec<Polynomial>,
    /// `n + 1` when `Z_k` is empty.
    pub codim: usize,
}

impl RankData {
    pub fn is_empty_locus(&self, nvars: usize) -> bool {
        self.codim == nvars + 1
    }
}

pub fn expected_ranks(ranks: &[usize]) -> Vec<usize> {
    // r_k = Σ_{i >= k} (-1)^{i-k} rank E_i, for k = 1..=N
    let n = ranks.len() - 1;
    let mut out = vec![0usize; n + 2];
    for k in (1..=n).rev() {
        out[k] = ranks[k].saturating_sub(out[k + 1]);
    }
    out
}

/// Rank loci `Z_k` for `k = 1..=N`.
pub fn rank_loci(resolution: &FreeResolution) -> Result<Vec<RankData>> {
    let complex = resolution.complex();
    let expected = expected_ranks(complex.ranks());
    let mut out = Vec::new();
    for k in 1..=complex.length() {
        let f = complex.differential(k).expect("in range");
        let gb = minor_ideal(f, expected[k])?;
        out.push(RankData {
            k,
            expected_rank: expected[k],
            minor_ideal: gb.polynomials(),
            codim: gb.codim(),
        });
    }
    Ok(out)
}

/// `Z_k` beyond the length of the resolution is empty; codim `n + 1`.
pub fn codim_z(loci: &[RankData], k: usize, nvars: usize) -> usize {
    loci.iter()
        .find(|d| d.k == k)
        .map_or(nvars + 1, |d| d.codim)
}
