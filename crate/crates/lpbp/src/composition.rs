//! Weak compositions, their boundaries, cyclic shifts, and dominance.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{LatticePath, LatticePoint, Step};

/// A weak `m`-part composition `(a_0, ..., a_{m-1})` of `n`.
///
/// It defines the piecewise-linear boundary from `(0,0)` to `(n,m)` whose
/// x-value at integer height `y` is the prefix sum `a_0 + ... + a_{y-1}`.
/// Index access is cyclic: `a_j` means `a_{j mod m}` for any integer `j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition {
    parts: Vec<u64>,
    total: u64,
}

impl Composition {
    /// Requires at least one part.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        let total = parts.iter().sum();
        Ok(Composition { parts, total })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of parts `m`.
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    /// Sum of the parts `n`.
    pub fn total(&self) -> u64 {
        self.total
    }

    /// Cyclic part access: `a_j` for any integer `j`.
    pub fn part(&self, j: i64) -> u64 {
        let m = self.parts.len() as i64;
        self.parts[j.rem_euclid(m) as usize]
    }

    /// The `j`-th cyclic shift `(a_{-j}, a_{-j+1}, ..., a_{-j+m-1})`.
    pub fn shift(&self, j: i64) -> Composition {
        let m = self.parts.len() as i64;
        let parts = (0..m).map(|i| self.part(i - j)).collect();
        Composition {
            parts,
            total: self.total,
        }
    }

    /// Least `d >= 1` with `shift(d)` equal to `self`; always divides `m`.
    pub fn period(&self) -> usize {
        let m = self.parts.len();
        (1..=m)
            .find(|d| (0..m).all(|i| self.parts[i] == self.parts[(i + d) % m]))
            .expect("the full rotation fixes every composition")
    }

    /// Boundary x-value `a_0 + ... + a_{y-1}` at integer height `y in 0..=m`.
    pub fn boundary_x(&self, y: i64) -> Result<u64> {
        if y < 0 || y > self.parts.len() as i64 {
            return Err(Error::HeightOutOfRange {
                y,
                m: self.parts.len(),
            });
        }
        Ok(self.parts[..y as usize].iter().sum())
    }

    /// Horizontal displacement of the `j`-th point shift:
    /// `a_{-1} + ... + a_{-j}` for `j >= 0`, minus the forward prefix for `j < 0`.
    pub fn shift_displacement(&self, j: i64) -> i64 {
        if j >= 0 {
            (1..=j).map(|t| self.part(-t) as i64).sum()
        } else {
            -(0..-j).map(|t| self.part(t) as i64).sum::<i64>()
        }
    }

    /// Reduce an x-coordinate into `{0, ..., n-1}`. Requires `n >= 1`.
    pub(crate) fn wrap_x(&self, x: i64) -> i64 {
        debug_assert!(self.total >= 1);
        x.rem_euclid(self.total as i64)
    }

    /// Reduce a y-coordinate into `{1, ..., m}`.
    pub(crate) fn wrap_y(&self, y: i64) -> i64 {
        (y - 1).rem_euclid(self.parts.len() as i64) + 1
    }

    /// The `j`-th shift of an interior point: x moves by the displacement and
    /// wraps mod `n`, y moves by `j` and wraps into `{1,...,m}`.
    ///
    /// The domain is `0 <= x < n`, `1 <= y <= m`; empty when `n = 0`.
    pub fn point_shift(&self, p: LatticePoint, j: i64) -> Result<LatticePoint> {
        if self.total == 0 || p.x < 0 || p.x >= self.total as i64 || p.y < 1 || p.y > self.parts.len() as i64
        {
            return Err(Error::PointOutOfDomain {
                x: p.x,
                y: p.y,
                n: self.total,
                m: self.parts.len(),
            });
        }
        Ok(LatticePoint::new(
            self.wrap_x(p.x + self.shift_displacement(j)),
            self.wrap_y(p.y + j),
        ))
    }

    fn check_path(&self, path: &LatticePath) -> Result<()> {
        let o = path.origin();
        if o != LatticePoint::new(0, 0) {
            return Err(Error::WrongOrigin { x: 0, y: 0 });
        }
        let ups = path.ups();
        if ups > self.parts.len() {
            return Err(Error::TooManyUpSteps {
                ups,
                m: self.parts.len(),
            });
        }
        Ok(())
    }

    /// True iff every point `(x,y)` the path visits satisfies
    /// `x >= boundary_x(y)`, i.e. the path lies weakly under the boundary.
    ///
    /// The path must originate at `(0,0)` and take at most `m` up steps.
    pub fn dominates(&self, path: &LatticePath) -> Result<bool> {
        Ok(self.first_bad_step(path)?.is_none())
    }

    /// Index and landing point of the first step crossing the boundary,
    /// absent when the path is dominated. The landing is always an up step's.
    pub fn first_bad_step(&self, path: &LatticePath) -> Result<Option<(usize, LatticePoint)>> {
        self.check_path(path)?;
        let (mut x, mut y) = (0i64, 0i64);
        let mut f = 0u64; // boundary_x(y), maintained incrementally
        for (idx, step) in path.steps().iter().enumerate() {
            match step {
                Step::Right => x += 1,
                Step::Up => {
                    y += 1;
                    f += self.parts[y as usize - 1];
                }
            }
            if x < f as i64 {
                return Ok(Some((idx, LatticePoint::new(x, y))));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

/// All weak `m`-part compositions of `n`, in lexicographic part order.
pub fn all_compositions(n: u64, m: usize) -> Vec<Composition> {
    assert!(m >= 1);
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(m);
    fn rec(rem: u64, slots: usize, parts: &mut Vec<u64>, out: &mut Vec<Composition>) {
        if slots == 1 {
            parts.push(rem);
            out.push(Composition::new(parts.clone()).unwrap());
            parts.pop();
            return;
        }
        for v in 0..=rem {
            parts.push(v);
            rec(rem - v, slots - 1, parts, out);
            parts.pop();
        }
    }
    rec(n, m, &mut parts, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn path(word: &str) -> LatticePath {
        LatticePath::from_word(LatticePoint::new(0, 0), word).unwrap()
    }

    #[test]
    fn shift_examples() {
        assert_eq!(comp(&[1, 2, 3]).shift(1), comp(&[3, 1, 2]));
        assert_eq!(comp(&[1, 2, 3]).shift(0), comp(&[1, 2, 3]));
        assert_eq!(comp(&[2, 2, 2]).shift(2), comp(&[2, 2, 2]));
        assert_eq!(comp(&[1, 2, 3]).shift(-1), comp(&[2, 3, 1]));
        assert_eq!(comp(&[1, 2, 3]).shift(4), comp(&[3, 1, 2]));
    }

    #[test]
    fn period_examples() {
        assert_eq!(comp(&[3, 1, 2, 3, 1, 2]).period(), 3);
        assert_eq!(comp(&[2, 2, 2]).period(), 1);
        assert_eq!(comp(&[1, 2, 3, 2]).period(), 4);
        for (parts, want) in [(&[0u64, 1, 0, 1][..], 2), (&[5][..], 1)] {
            let c = comp(parts);
            assert_eq!(c.period(), want);
            assert_eq!(c.part_count() % c.period(), 0);
        }
    }

    #[test]
    fn boundary_examples() {
        let a = comp(&[1, 2, 3, 2]);
        assert_eq!(a.boundary_x(3).unwrap(), 6);
        assert_eq!(a.boundary_x(0).unwrap(), 0);
        assert_eq!(a.boundary_x(4).unwrap(), 8);
        assert!(a.boundary_x(5).is_err());
        assert!(a.boundary_x(-1).is_err());
    }

    #[test]
    fn point_shift_examples() {
        let a = comp(&[1, 2, 3, 2]);
        let p = LatticePoint::new(4, 3);
        assert_eq!(a.point_shift(p, 2).unwrap(), LatticePoint::new(1, 1));
        assert_eq!(a.point_shift(p, 0).unwrap(), p);
        assert_eq!(a.point_shift(p, 4).unwrap(), p);
        assert_eq!(a.point_shift(p, -2).unwrap(), LatticePoint::new(1, 1));
        assert!(a.point_shift(LatticePoint::new(8, 3), 1).is_err());
        assert!(a.point_shift(LatticePoint::new(0, 0), 1).is_err());
        assert!(comp(&[0, 0])
            .point_shift(LatticePoint::new(0, 1), 1)
            .is_err());
    }

    #[test]
    fn dominance_examples() {
        let a = comp(&[1, 1]);
        assert!(a.dominates(&path("RURU")).unwrap());
        assert!(!a.dominates(&path("URRU")).unwrap());
        assert!(a.dominates(&path("")).unwrap());
        assert!(matches!(
            a.dominates(&path("UUU")),
            Err(Error::TooManyUpSteps { ups: 3, m: 2 })
        ));
        let off = LatticePath::from_word(LatticePoint::new(-1, 1), "RU").unwrap();
        assert!(a.dominates(&off).is_err());
    }

    #[test]
    fn first_bad_step_examples() {
        let a = comp(&[1, 1]);
        assert_eq!(
            a.first_bad_step(&path("URRU")).unwrap(),
            Some((0, LatticePoint::new(0, 1)))
        );
        assert_eq!(a.first_bad_step(&path("RURU")).unwrap(), None);
        assert_eq!(
            comp(&[2, 2]).first_bad_step(&path("RUUR")).unwrap(),
            Some((1, LatticePoint::new(1, 1)))
        );
    }

    #[test]
    fn composition_generator_counts() {
        // C(n+m-1, m-1) weak m-part compositions of n.
        assert_eq!(all_compositions(6, 3).len(), 28);
        assert_eq!(all_compositions(0, 4).len(), 1);
        let all = all_compositions(3, 2);
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|a| a.total() == 3 && a.part_count() == 2));
    }

    #[test]
    fn empty_composition_rejected() {
        assert!(matches!(
            Composition::new(vec![]),
            Err(Error::EmptyComposition)
        ));
    }
}
