//! Small standard matroids used as fixtures and CLI families.

use crate::error::{domain, Result};
use crate::ground::GroundSet;
use crate::matroid::Matroid;
use crate::set::ElementSet;

/// `U_{r,n}` on elements `0..n`.
pub fn uniform(r: usize, n: usize) -> Matroid {
    try_uniform(r, n).expect("r <= n")
}

pub fn try_uniform(r: usize, n: usize) -> Result<Matroid> {
    if r > n || n > 64 {
        return domain(format!("U_{{{r},{n}}} needs r <= n <= 64"));
    }
    let g = GroundSet::indexed(n);
    let full = g.full();
    if r == n {
        return Matroid::from_flats(g, [(ElementSet::EMPTY, 0)]);
    }
    if r == 0 {
        return Matroid::from_flats(g, [(full, 0)]);
    }
    Matroid::from_flats(g, [(ElementSet::EMPTY, 0), (full, r)])
}

/// The free matroid on `n` elements.
pub fn free(n: usize) -> Matroid {
    uniform(n, n)
}

/// `M(K_4)` on `a..f`, drawn with the three-point lines `acd`, `aef`, `bce`, `bdf`.
///
/// `{a,b,c}` and `{d,e,f}` are bases whose exchange digraph is the 4-cycle
/// `a → d → b → e → a`.
pub fn mk4() -> Matroid {
    let g = GroundSet::from_strs(&["a", "b", "c", "d", "e", "f"]).unwrap();
    let line = |s: &[usize]| (ElementSet::from_indices(s.iter().copied()), 2);
    Matroid::from_flats(
        g,
        [
            (ElementSet::EMPTY, 0),
            line(&[0, 2, 3]),
            line(&[0, 4, 5]),
            line(&[1, 2, 4]),
            line(&[1, 3, 5]),
            (ElementSet::full(6), 3),
        ],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_uniforms() {
        assert_eq!(uniform(0, 3).loops().len(), 3);
        assert_eq!(free(3).coloops().len(), 3);
        assert_eq!(uniform(3, 3).bases().count(), 1);
        assert!(try_uniform(4, 3).is_err());
    }
}
