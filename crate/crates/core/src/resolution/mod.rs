//! Free resolutions and general complexes of free modules: construction,
//! minimalization, dualization, rank loci and the Buchsbaum–Eisenbud
//! exactness test.

mod complex;
mod matrix;
pub mod minors;

pub use complex::{
    be_exactness, codim_z, dualize, expected_ranks, free_resolution, free_resolution_with,
    is_exact, minimalize, minimalize_complex, rank_loci, resolve_ideal, Complex, ExactnessStep,
    FreeResolution, RankData, StepVerdict,
};
pub use matrix::PolyMatrix;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::polynomial::Polynomial;
    use crate::algebra::ring::{Ring, RingRef};

    fn ideal(r: &RingRef, gens: &[&str]) -> Vec<Polynomial> {
        gens.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect()
    }

    fn mat(r: &RingRef, rows: &[&[&str]]) -> PolyMatrix {
        let entries: Vec<Vec<Polynomial>> = rows
            .iter()
            .map(|row| row.iter().map(|s| Polynomial::parse(r, s).unwrap()).collect())
            .collect();
        PolyMatrix::new(r, rows.len(), rows[0].len(), entries).unwrap()
    }

    fn assert_complex(res: &FreeResolution) {
        res.complex().check_complex().unwrap();
    }

    #[test]
    fn koszul_three() {
        let r = Ring::grevlex(&["x", "y", "z"]);
        let res = resolve_ideal(&r, &ideal(&r, &["x", "y", "z"])).unwrap();
        assert_complex(&res);
        assert_eq!(res.betti(), vec![1, 3, 3, 1]);
        assert!(res.is_minimal());
    }

    #[test]
    fn small_resolutions() {
        let r = Ring::grevlex(&["x", "y"]);
        let res = resolve_ideal(&r, &ideal(&r, &["x^2", "x*y"])).unwrap();
        assert_complex(&res);
        assert_eq!(res.betti(), vec![1, 2, 1]);
        let res = resolve_ideal(&r, &ideal(&r, &["x"])).unwrap();
        assert_eq!(res.betti(), vec![1, 1]);
    }

    #[test]
    fn minimalize_strips_redundancy() {
        let r = Ring::grevlex(&["x", "y"]);
        let pres = PolyMatrix::row_vector(&r, &ideal(&r, &["x^2", "x*y", "x^2 + x*y"])).unwrap();
        let raw = free_resolution_with(&pres, true).unwrap();
        assert_complex(&raw);
        assert!(!raw.is_minimal());
        let min = minimalize(&raw).unwrap();
        assert_complex(&min);
        assert_eq!(min.betti(), vec![1, 2, 1]);
        assert!(min.is_minimal());
    }

    #[test]
    fn minimalize_identity_padding() {
        let r = Ring::grevlex(&["x", "y"]);
        // O^2 <- O^3 <- O with f_1 = [[x, y, 0], [0, 0, 1]], f_2 = (y, -x, 0)^T
        let f1 = mat(&r, &[&["x", "y", "0"], &["0", "0", "1"]]);
        let f2 = mat(&r, &[&["y"], &["-x"], &["0"]]);
        let c = Complex::from_differentials(vec![f1, f2]).unwrap();
        let m = minimalize_complex(&c).unwrap();
        assert_eq!(m.ranks(), &[1, 2, 1]);
        assert_eq!(m.differentials()[0].to_strings(), vec![vec!["x", "y"]]);
        // already minimal input is unchanged
        let k = resolve_ideal(&r, &ideal(&r, &["x", "y"])).unwrap();
        assert_eq!(minimalize(&k).unwrap(), k);
    }

    #[test]
    fn minimalize_rejects_non_complex() {
        let r = Ring::grevlex(&["x", "y"]);
        let c = Complex::from_differentials(vec![mat(&r, &[&["x", "y"]]), mat(&r, &[&["1"], &["0"]])]).unwrap();
        assert_eq!(minimalize_complex(&c), Err(crate::Error::NotAComplex { k: 1 }));
    }

    #[test]
    fn dualize_is_involution() {
        let r = Ring::grevlex(&["x", "y"]);
        let res = resolve_ideal(&r, &ideal(&r, &["x^2", "x*y"])).unwrap();
        let d = dualize(res.complex());
        assert_eq!(d.ranks(), &[1, 2, 1]);
        assert_eq!(d.differentials()[0], res.differentials()[1].transpose());
        assert_eq!(&dualize(&d), res.complex());
        let single = Complex::from_differentials(vec![mat(&r, &[&["x"]])]).unwrap();
        assert_eq!(dualize(&single).differentials()[0].to_strings(), vec![vec!["x"]]);
    }

    #[test]
    fn be_examples() {
        let r = Ring::grevlex(&["x", "y", "z"]);
        let k3 = resolve_ideal(&r, &ideal(&r, &["x", "y", "z"])).unwrap();
        assert!(is_exact(k3.complex()).unwrap());

        let r2 = Ring::grevlex(&["x", "y"]);
        let broken = Complex::from_differentials(vec![
            mat(&r2, &[&["x", "y"]]),
            mat(&r2, &[&["y^2"], &["-x*y"]]),
        ])
        .unwrap();
        let steps = be_exactness(&broken).unwrap();
        assert_eq!(steps[0].verdict, StepVerdict::Exact);
        assert_eq!(steps[1].verdict, StepVerdict::FailsCodim);
        assert_eq!(steps[1].codim, 1);

        let k2 = resolve_ideal(&r2, &ideal(&r2, &["x", "y"])).unwrap();
        assert!(is_exact(&dualize(k2.complex())).unwrap());
    }

    #[test]
    fn rank_loci_examples() {
        let r2 = Ring::grevlex(&["x", "y"]);
        let k2 = resolve_ideal(&r2, &ideal(&r2, &["x", "y"])).unwrap();
        let loci = rank_loci(&k2).unwrap();
        assert_eq!(loci[0].codim, 2);
        assert_eq!(loci[1].codim, 2);
        assert_eq!(codim_z(&loci, 3, 2), 3);

        let r3 = Ring::grevlex(&["x", "y", "z"]);
        let res = resolve_ideal(&r3, &ideal(&r3, &["x*z", "y*z"])).unwrap();
        let loci = rank_loci(&res).unwrap();
        assert_eq!((loci[0].codim, loci[1].codim), (1, 2));

        let res = resolve_ideal(&r2, &ideal(&r2, &["x^2", "x*y"])).unwrap();
        assert_eq!(rank_loci(&res).unwrap()[1].codim, 2);
    }

    #[test]
    fn expected_rank_alternating_sum() {
        assert_eq!(expected_ranks(&[1, 3, 3, 1])[1..4], [1, 2, 1]);
    }
}
