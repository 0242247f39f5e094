use num_integer::Integer;

use crate::exact::Rat;

pub(crate) const DEFAULT_SAMPLES: usize = 25;

const Y_BASE: [(i64, i64); 13] = [
    (0, 1),
    (1, 1),
    (2, 1),
    (1, 2),
    (1, 3),
    (2, 3),
    (3, 7),
    (5, 2),
    (3, 1),
    (1, 4),
    (3, 4),
    (7, 5),
    (7, 3),
];

const LAMBDA_BASE: [(i64, i64); 13] = [
    (0, 1),
    (2, 1),
    (1, 2),
    (1, 3),
    (2, 3),
    (3, 7),
    (5, 2),
    (3, 1),
    (1, 4),
    (3, 4),
    (7, 5),
    (7, 3),
    (4, 1),
];

fn signed(base: &[(i64, i64)]) -> Vec<Rat> {
    let mut out = Vec::with_capacity(2 * base.len());
    for &(p, q) in base {
        out.push(Rat::frac(p, q));
        if p != 0 {
            out.push(Rat::frac(-p, q));
        }
    }
    out
}

/// First `count` points of `base`, continued past its end by `±p/q` in order of
/// increasing `q`, then `p`, skipping duplicates and excluded values.
fn extend(mut pts: Vec<Rat>, count: usize, excluded: &[Rat]) -> Vec<Rat> {
    if count <= pts.len() {
        pts.truncate(count);
        return pts;
    }
    'outer: for q in 1i64.. {
        for p in 1..=4 * q {
            if p.gcd(&q) != 1 {
                continue;
            }
            for r in [Rat::frac(p, q), Rat::frac(-p, q)] {
                if pts.len() == count {
                    break 'outer;
                }
                if !pts.contains(&r) && !excluded.contains(&r) {
                    pts.push(r);
                }
            }
        }
    }
    pts
}

/// Rational sample points for `y`. The first 25 are the fixed default grid.
pub fn y_grid(count: usize) -> Vec<Rat> {
    extend(signed(&Y_BASE), count, &[])
}

/// Rational sample points for `λ`, never `±1`.
pub fn lambda_grid(count: usize) -> Vec<Rat> {
    extend(
        signed(&LAMBDA_BASE),
        count,
        &[Rat::frac(1, 1), Rat::frac(-1, 1)],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grids_have_25_distinct_points() {
        for g in [y_grid(DEFAULT_SAMPLES), lambda_grid(DEFAULT_SAMPLES)] {
            assert_eq!(g.len(), 25);
            let mut s = g.clone();
            s.sort();
            s.dedup();
            assert_eq!(s.len(), 25);
        }
        assert!(y_grid(25).contains(&Rat::frac(-1, 2)));
        assert!(!lambda_grid(25).contains(&Rat::frac(1, 1)));
    }

    #[test]
    fn extension_is_deterministic_and_avoids_exclusions() {
        let g = lambda_grid(60);
        assert_eq!(g, lambda_grid(60));
        assert_eq!(&g[..25], &lambda_grid(25)[..]);
        assert!(!g.contains(&Rat::frac(-1, 1)));
        let mut s = g.clone();
        s.sort();
        s.dedup();
        assert_eq!(s.len(), 60);
        assert_eq!(y_grid(3).len(), 3);
    }
}
