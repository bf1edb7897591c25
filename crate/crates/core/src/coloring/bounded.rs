//! r-bounded colourings: every class has at most `r` vertices.

use serde::{Deserialize, Serialize};

use super::{for_each_partition, min_coloring, Coloring, Guards};
use crate::graph::{bit, clique_number, for_each_clique_of_size, Bits, Graph};
use crate::{Error, Result};

/// χ_r, M_r and ι_r with witnesses. The two maxima range over the same set
/// of optimal r-bounded colourings but are attained independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundedStats {
    pub r: usize,
    pub chi_r: usize,
    pub m_r: usize,
    pub iota_r: usize,
    pub m_r_witness: Coloring,
    pub iota_r_witness: Coloring,
}

fn check_r(r: usize) -> Result<()> {
    if r == 0 {
        Err(Error::InvalidParam(
            "class-size cap r must be at least 1".into(),
        ))
    } else {
        Ok(())
    }
}

pub fn bounded_chromatic_number(g: &Graph, r: usize) -> Result<usize> {
    check_r(r)?;
    Ok(min_coloring(g, Some(r)).0)
}

/// Visits every r-bounded colouring with exactly χ_r(G) classes.
pub fn for_each_optimal_bounded_coloring(
    g: &Graph,
    r: usize,
    guards: &Guards,
    f: &mut dyn FnMut(Coloring) -> bool,
) -> Result<usize> {
    check_r(r)?;
    guards.check_optimal(g, "optimal r-bounded colouring enumeration")?;
    let chi_r = min_coloring(g, Some(r)).0;
    for_each_partition(g, chi_r, r, &mut |cls| {
        f(Coloring::from_classes_unchecked(g.n(), cls.to_vec()))
    });
    Ok(chi_r)
}

pub fn optimal_bounded_colorings(g: &Graph, r: usize, guards: &Guards) -> Result<Vec<Coloring>> {
    let mut out = Vec::new();
    for_each_optimal_bounded_coloring(g, r, guards, &mut |c| {
        out.push(c);
        true
    })?;
    Ok(out)
}

/// M_r counts classes of size exactly `r`; on r-bounded colourings this is
/// the length of the frame suffix starting at `r`.
pub fn bounded_stats(g: &Graph, r: usize, guards: &Guards) -> Result<BoundedStats> {
    let mut best_m: Option<Coloring> = None;
    let mut best_iota: Option<Coloring> = None;
    let chi_r = for_each_optimal_bounded_coloring(g, r, guards, &mut |c| {
        if best_m
            .as_ref()
            .is_none_or(|b| c.count_of_size(r) > b.count_of_size(r))
        {
            best_m = Some(c.clone());
        }
        if best_iota
            .as_ref()
            .is_none_or(|b| c.singleton_count() > b.singleton_count())
        {
            best_iota = Some(c);
        }
        true
    })?;
    let m_r_witness = best_m.unwrap_or_else(|| Coloring::discrete(0));
    let iota_r_witness = best_iota.unwrap_or_else(|| Coloring::discrete(0));
    Ok(BoundedStats {
        r,
        chi_r,
        m_r: m_r_witness.count_of_size(r),
        iota_r: iota_r_witness.singleton_count(),
        m_r_witness,
        iota_r_witness,
    })
}

/// ι_r without enumeration. For r ≥ 2 two singleton classes of an optimal
/// r-bounded colouring are adjacent (else they merge into a doubleton), so
/// ι_r is the largest `s` such that some `s`-clique `S` leaves `G ∖ S`
/// r-colourable with χ_r − s classes. For r = 1 every class is a singleton.
pub fn bounded_stinginess_by_clique_search(g: &Graph, r: usize) -> Result<(usize, Coloring)> {
    check_r(r)?;
    if r == 1 {
        return Ok((g.n(), Coloring::discrete(g.n())));
    }
    let chi_r = min_coloring(g, Some(r)).0;
    let top = clique_number(g).min(chi_r);
    for s in (0..=top).rev() {
        let mut found = None;
        for_each_clique_of_size(g, s, &mut |clique| {
            let (k, sub) = min_coloring(&g.without(clique), Some(r));
            if k + s <= chi_r {
                let singles: Vec<u64> = Bits(clique).map(bit).collect();
                found = Some(Coloring::lift(g.n(), clique, sub.classes(), &singles));
                false
            } else {
                true
            }
        });
        if let Some(c) = found {
            return Ok((s, c));
        }
    }
    unreachable!("s = 0 always succeeds")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    fn fam(f: Family) -> Graph {
        generate(&f).unwrap()
    }

    fn triple(s: &BoundedStats) -> (usize, usize, usize) {
        (s.chi_r, s.m_r, s.iota_r)
    }

    #[test]
    fn spec_examples() {
        let guards = Guards::default();
        let c5 = fam(Family::Cycle(5));
        assert_eq!(triple(&bounded_stats(&c5, 2, &guards).unwrap()), (3, 2, 1));
        let c6 = fam(Family::Cycle(6));
        let s = bounded_stats(&c6, 3, &guards).unwrap();
        assert_eq!(triple(&s), (2, 2, 0));
        assert_eq!(
            s.m_r_witness,
            Coloring::from_sets(6, &[&[0, 2, 4], &[1, 3, 5]]).unwrap()
        );
        let k4 = fam(Family::Complete(4));
        for r in 1..6 {
            let expected_m = if r == 1 { 4 } else { 0 };
            assert_eq!(
                triple(&bounded_stats(&k4, r, &guards).unwrap()),
                (4, expected_m, 4)
            );
        }
    }

    #[test]
    fn witnesses_respect_their_invariants() {
        let guards = Guards::default();
        for seed in 0..150u64 {
            let n = (seed % 9) as usize;
            let g = fam(Family::ErRandom { n, p: 0.4, seed });
            for r in 1..5 {
                let s = bounded_stats(&g, r, &guards).unwrap();
                for w in [&s.m_r_witness, &s.iota_r_witness] {
                    assert!(w.is_proper(&g).unwrap());
                    assert!(w.max_class_size() <= r);
                    assert_eq!(w.len(), s.chi_r);
                }
                assert_eq!(s.m_r_witness.count_of_size(r), s.m_r);
                assert_eq!(s.iota_r_witness.singleton_count(), s.iota_r);
                let (iota, w) = bounded_stinginess_by_clique_search(&g, r).unwrap();
                assert_eq!(iota, s.iota_r, "{g:?} r={r}");
                assert!(w.is_proper(&g).unwrap() && w.max_class_size() <= r && w.len() == s.chi_r);
            }
        }
    }

    #[test]
    fn r_zero_is_rejected() {
        let g = fam(Family::Cycle(5));
        assert!(bounded_stats(&g, 0, &Guards::default()).is_err());
        assert!(bounded_chromatic_number(&g, 0).is_err());
    }
}
