//! `Ext^k(F, O)` as the homology of the dual of a free resolution, support
//! codimensions via Fitting ideals, and the purity / Cohen–Macaulay tests.

use crate::algebra::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, radical_membership, syzygy_module, FreeModuleElement, GroebnerBasis, ModuleOrder};
use crate::resolution::minors::minor_ideal;
use crate::resolution::{codim_z, rank_loci, FreeResolution, PolyMatrix, RankData};

/// `Ext^k(F, O) = ker f_{k+1}^T / im f_k^T`, presented as the cokernel of
/// `presentation` on the kernel generators.
#[derive(Clone, Debug)]
pub struct ExtModule {
    pub k: usize,
    /// Kernel generators, as columns in `E_k^*`.
    pub generators: PolyMatrix,
    /// Relations among the generators after cancelling unit entries.
    pub presentation: PolyMatrix,
    /// Reduced basis of `Fitt_0` of the presentation.
    pub fitting_ideal: Vec<Polynomial>,
    pub support_codim: usize,
}

impl ExtModule {
    pub fn is_zero(&self) -> bool {
        self.presentation.rows() == 0
    }
}

/// Drops unit entries (each kills one generator and one relation) and zero
/// relations.
fn prune_presentation(mut a: PolyMatrix) -> PolyMatrix {
    while let Some((i, j)) = a.find_unit() {
        a = a.eliminate_unit(i, j);
    }
    let keep: Vec<usize> = (0..a.cols())
        .filter(|&j| a.column(j).iter().any(|p| !p.is_zero()))
        .collect();
    a.select_columns(&keep)
}

/// Reduced basis of `Fitt_0(coker a)`: the maximal minors when `a` has at
/// least as many columns as rows, `(0)` otherwise and `(1)` with no rows.
pub fn fitting_ideal(a: &PolyMatrix) -> Result<GroebnerBasis> {
    minor_ideal(a, a.rows())
}

fn is_in_image(columns: &[Vec<Polynomial>], image: &PolyMatrix) -> Result<bool> {
    let ring = image.ring();
    let rank = image.rows();
    let gens: Vec<FreeModuleElement> = image
        .columns()
        .into_iter()
        .map(|c| FreeModuleElement::new(ring, c))
        .collect::<Result<_>>()?;
    let gb = buchberger(ring, rank, &gens, ModuleOrder::TermOverPosition)?;
    for c in columns {
        if !gb.contains(&FreeModuleElement::new(ring, c.clone())?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn ext_module(resolution: &FreeResolution, k: usize) -> Result<ExtModule> {
    let complex = resolution.complex();
    let ring = complex.ring();
    let n = complex.length();
    if k > n {
        return Err(Error::Internal(format!("Ext^{k} requested beyond length {n}")));
    }
    let rank_k = complex.ranks()[k];
    let kernel = if k == n {
        PolyMatrix::identity(ring, rank_k)
    } else {
        syzygy_module(&complex.differential(k + 1).expect("in range").transpose())?
    };
    let image = if k == 0 {
        PolyMatrix::zero(ring, rank_k, 0)
    } else {
        complex.differential(k).expect("in range").transpose()
    };
    let s = kernel.cols();
    let relations = if image.cols() == 0 {
        // only the relations among the kernel generators themselves
        syzygy_module(&kernel)?
    } else {
        let full = syzygy_module(&kernel.hconcat(&image)?)?;
        full.select_rows(&(0..s).collect::<Vec<_>>())
    };
    let presentation = prune_presentation(relations);
    let fitt = fitting_ideal(&presentation)?;
    let zero_by_fitting = fitt.is_unit_ideal();
    let zero_by_reduction = is_in_image(&kernel.columns(), &image)?;
    if zero_by_fitting != zero_by_reduction {
        return Err(Error::Internal(format!(
            "Ext^{k}: Fitting ideal and normal-form vanishing tests disagree"
        )));
    }
    Ok(ExtModule {
        k,
        generators: kernel,
        support_codim: fitt.codim(),
        fitting_ideal: fitt.polynomials(),
        presentation,
    })
}

/// Codimension of `supp M`; `n + 1` for the zero module.
pub fn support_codim(m: &ExtModule) -> usize {
    m.support_codim
}

/// `Ext^0, …, Ext^N`.
pub fn ext_modules(resolution: &FreeResolution) -> Result<Vec<ExtModule>> {
    (0..=resolution.length())
        .map(|k| ext_module(resolution, k))
        .collect()
}

/// Codimension of `F = coker f_1`, read from `Fitt_0(f_1)`.
pub fn module_codim(resolution: &FreeResolution) -> Result<usize> {
    let complex = resolution.complex();
    let nvars = complex.ring().nvars();
    match complex.differential(1) {
        Some(f1) => Ok(fitting_ideal(f1)?.codim()),
        None if complex.ranks()[0] == 0 => Ok(nvars + 1),
        None => Ok(0),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PurityVerdict {
    Pure,
    Impure,
    CohenMacaulay,
}

impl PurityVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            PurityVerdict::Pure => "pure",
            PurityVerdict::Impure => "impure",
            PurityVerdict::CohenMacaulay => "cohen-macaulay",
        }
    }

    pub fn is_pure(&self) -> bool {
        !matches!(self, PurityVerdict::Impure)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurityEvidence {
    pub k: usize,
    pub codim_z: usize,
    pub codim_supp_ext: usize,
}

#[derive(Clone, Debug)]
pub struct PurityReport {
    pub p: usize,
    pub nvars: usize,
    pub verdict: PurityVerdict,
    /// Verdict from the rank loci: `codim Z_k >= k + 1` for all `k > p`.
    pub pure_by_rank_loci: bool,
    /// Verdict from the Ext supports: `codim supp Ext^k >= k + 1` for all `k > p`.
    pub pure_by_ext_support: bool,
    pub routes_agree: bool,
    pub per_k: Vec<PurityEvidence>,
    /// `Ext^k = 0` for `k < p` and `Ext^p != 0`.
    pub ext_vanishing_ok: bool,
    pub length: usize,
}

/// Both purity criteria on a free resolution of `F`, together with the
/// Cohen–Macaulay test `Z_k = ∅` for all `k > p`.
pub fn purity_check(resolution: &FreeResolution) -> Result<PurityReport> {
    let nvars = resolution.ring().nvars();
    let p = module_codim(resolution)?;
    if p == 0 {
        return Err(Error::CodimZero);
    }
    if p > nvars {
        return Err(Error::ZeroModule);
    }
    let loci = rank_loci(resolution)?;
    let exts = ext_modules(resolution)?;
    let len = resolution.length();
    let ext_codim = |k: usize| exts.get(k).map_or(nvars + 1, |e| e.support_codim);

    let mut per_k = Vec::new();
    for k in 1..=len {
        per_k.push(PurityEvidence {
            k,
            codim_z: codim_z(&loci, k, nvars),
            codim_supp_ext: ext_codim(k),
        });
    }
    let beyond = |e: &&PurityEvidence| e.k > p;
    let pure_a = per_k.iter().filter(beyond).all(|e| e.codim_z > e.k);
    let pure_b = per_k.iter().filter(beyond).all(|e| e.codim_supp_ext > e.k);
    let cm = per_k.iter().filter(beyond).all(|e| e.codim_z == nvars + 1);
    let verdict = match (pure_a, cm) {
        (true, true) => PurityVerdict::CohenMacaulay,
        (true, false) => PurityVerdict::Pure,
        _ => PurityVerdict::Impure,
    };
    let ext_vanishing_ok =
        (0..p.min(len + 1)).all(|k| exts[k].is_zero()) && exts.get(p).is_some_and(|e| !e.is_zero());
    Ok(PurityReport {
        p,
        nvars,
        verdict,
        pure_by_rank_loci: pure_a,
        pure_by_ext_support: pure_b,
        routes_agree: pure_a == pure_b,
        per_k,
        ext_vanishing_ok,
        length: len,
    })
}

/// `supp Ext^k ⊆ Z_k` for `k = 1..=N`: every generator of `I_{r_k}(f_k)`
/// lies in `√Fitt_0(Ext^k)`.
pub fn puma_containment(resolution: &FreeResolution) -> Result<Vec<(usize, bool)>> {
    let loci = rank_loci(resolution)?;
    let mut out = Vec::new();
    for RankData { k, minor_ideal, .. } in loci {
        let ext = ext_module(resolution, k)?;
        let mut ok = true;
        for g in &minor_ideal {
            if !radical_membership(g, &ext.fitting_ideal)? {
                ok = false;
                break;
            }
        }
        out.push((k, ok));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::{Ring, RingRef};
    use crate::resolution::resolve_ideal;

    fn res(r: &RingRef, gens: &[&str]) -> FreeResolution {
        let gens: Vec<Polynomial> = gens.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect();
        resolve_ideal(r, &gens).unwrap()
    }

    #[test]
    fn ext_of_complete_intersection() {
        let r = Ring::grevlex(&["x", "y"]);
        let f = res(&r, &["x", "y"]);
        let e: Vec<ExtModule> = ext_modules(&f).unwrap();
        assert!(e[0].is_zero() && e[1].is_zero());
        assert_eq!(e[2].support_codim, 2);
        assert_eq!(e[1].support_codim, 3);
        assert_eq!(e[2].fitting_ideal.iter().map(|p| p.to_string()).collect::<Vec<_>>(), ["y", "x"]);
    }

    #[test]
    fn ext_of_embedded_point() {
        let r = Ring::grevlex(&["x", "y"]);
        let f = res(&r, &["x^2", "x*y"]);
        let e = ext_modules(&f).unwrap();
        assert!(e[0].is_zero());
        assert_eq!(e[1].support_codim, 1);
        assert_eq!(e[2].support_codim, 2);
    }

    #[test]
    fn ext_of_hypersurface() {
        let r = Ring::grevlex(&["x", "y"]);
        let f = res(&r, &["x"]);
        let e = ext_modules(&f).unwrap();
        assert!(e[0].is_zero());
        assert_eq!(e[1].support_codim, 1);
        assert_eq!(e[1].fitting_ideal[0].to_string(), "x");
    }

    #[test]
    fn purity_examples() {
        let r = Ring::grevlex(&["x", "y", "z"]);
        let ci = purity_check(&res(&r, &["x", "y"])).unwrap();
        assert_eq!((ci.p, ci.verdict), (2, PurityVerdict::CohenMacaulay));

        let mixed = purity_check(&res(&r, &["x*z", "y*z"])).unwrap();
        assert_eq!((mixed.p, mixed.verdict), (1, PurityVerdict::Impure));
        assert_eq!(mixed.per_k[1].codim_z, 2);
        assert!(mixed.routes_agree);

        let r2 = Ring::grevlex(&["x", "y"]);
        let emb = purity_check(&res(&r2, &["x^2", "x*y"])).unwrap();
        assert_eq!(emb.verdict, PurityVerdict::Impure);
        assert!(emb.routes_agree && emb.ext_vanishing_ok);
    }

    #[test]
    fn pure_not_cohen_macaulay() {
        let r = Ring::grevlex(&["x", "y", "z", "w"]);
        let f = res(&r, &["x*z", "x*w", "y*z", "y*w"]);
        assert_eq!(f.length(), 3);
        let rep = purity_check(&f).unwrap();
        assert_eq!((rep.p, rep.verdict), (2, PurityVerdict::Pure));
        assert_eq!(rep.per_k[2].codim_z, 4);
        assert!(rep.routes_agree && rep.ext_vanishing_ok);
    }

    #[test]
    fn codim_zero_rejected() {
        let r = Ring::grevlex(&["x", "y"]);
        let zero = crate::resolution::free_resolution(&PolyMatrix::zero(&r, 1, 0)).unwrap();
        assert_eq!(purity_check(&zero).unwrap_err(), Error::CodimZero);
        let unit = res(&r, &["1"]);
        assert_eq!(purity_check(&unit).unwrap_err(), Error::ZeroModule);
    }

    #[test]
    fn containment() {
        let r = Ring::grevlex(&["x", "y"]);
        for gens in [&["x", "y"][..], &["x^2", "x*y"], &["x"]] {
            let f = res(&r, gens);
            assert!(puma_containment(&f).unwrap().iter().all(|(_, ok)| *ok), "{gens:?}");
        }
    }
}
