use super::{smith_normal_form, OracleError, SimplicialComplex};

/// Integer homology of a simplicial complex, dimension by dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homology {
    /// `β_k` for `k = 0..=dimension`.
    pub betti: Vec<u64>,
    /// Torsion coefficients of `H_k`: invariant factors of `∂_{k+1}` that
    /// exceed one.
    pub torsion: Vec<Vec<u64>>,
}

impl Homology {
    /// `Σ (-1)^k β_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.betti
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

/// Computes `β_k = f_k - rank ∂_k - rank ∂_{k+1}` and the torsion of every
/// `H_k` from the Smith normal forms of the boundary matrices.
pub fn homology(c: &SimplicialComplex) -> Result<Homology, OracleError> {
    let dim = c.dimension();
    let f = c.f_vector();
    // snfs[k] belongs to ∂_k for k in 1..=dim
    let mut ranks = vec![0usize; dim + 2];
    let mut factors = vec![Vec::new(); dim + 2];
    for k in 1..=dim {
        let snf = smith_normal_form(&c.boundary_matrix(k)?)?;
        ranks[k] = snf.rank;
        factors[k] = snf.torsion();
    }
    let betti = (0..=dim)
        .map(|k| (f[k] - ranks[k] - ranks[k + 1]) as u64)
        .collect();
    let torsion = (0..=dim)
        .map(|k| std::mem::take(&mut factors[k + 1]))
        .collect();
    Ok(Homology { betti, torsion })
}

pub fn betti_numbers(c: &SimplicialComplex) -> Result<Vec<u64>, OracleError> {
    homology(c).map(|h| h.betti)
}

pub fn chi_by_betti(c: &SimplicialComplex) -> Result<i64, OracleError> {
    homology(c).map(|h| h.euler_characteristic())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(s: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::close_and_validate(s.iter().copied()).unwrap()
    }

    #[test]
    fn circle() {
        let c = complex(&[&[0, 1], &[1, 2], &[0, 2]]);
        assert_eq!(betti_numbers(&c).unwrap(), vec![1, 1]);
        assert_eq!(chi_by_betti(&c).unwrap(), 0);
    }

    #[test]
    fn two_sphere() {
        let c = complex(&[&[0, 1, 2], &[0, 1, 3], &[0, 2, 3], &[1, 2, 3]]);
        let h = homology(&c).unwrap();
        assert_eq!(h.betti, vec![1, 0, 1]);
        assert!(h.torsion.iter().all(Vec::is_empty));
        assert_eq!(h.euler_characteristic(), 2);
    }

    #[test]
    fn two_points() {
        let c = complex(&[&[0], &[5]]);
        assert_eq!(betti_numbers(&c).unwrap(), vec![2]);
    }

    #[test]
    fn solid_triangle_is_acyclic() {
        let c = complex(&[&[0, 1, 2]]);
        assert_eq!(betti_numbers(&c).unwrap(), vec![1, 0, 0]);
    }
}
