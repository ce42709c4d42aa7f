//! Brute-force ground truth: dynamic-programming and exhaustive-enumeration
//! counters for dominated paths, good and bad pairs, and corner statistics.

use num_traits::Zero;

use crate::bijection::classify_bad;
use crate::composition::Composition;
use crate::count::{binomial, BigCount};
use crate::error::{Error, Result};
use crate::lattice::{LatticePath, LatticePoint, Step};

/// A lattice path boundary pair `(P, (a, j))`.
///
/// The pair is good when the path is dominated by the `j`-th cyclic shift of
/// the composition, bad otherwise.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lpbp {
    path: LatticePath,
    composition: Composition,
    shift_index: usize,
}

impl Lpbp {
    /// The path must originate at `(0,0)` and take at most `m` up steps.
    /// Any integer shift index is accepted and reduced mod `m`.
    pub fn new(path: LatticePath, composition: Composition, shift_index: i64) -> Result<Self> {
        if path.origin() != LatticePoint::new(0, 0) {
            return Err(Error::WrongOrigin { x: 0, y: 0 });
        }
        let m = composition.part_count();
        if path.ups() > m {
            return Err(Error::TooManyUpSteps { ups: path.ups(), m });
        }
        let shift_index = shift_index.rem_euclid(m as i64) as usize;
        Ok(Lpbp {
            path,
            composition,
            shift_index,
        })
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    pub fn composition(&self) -> &Composition {
        &self.composition
    }

    pub fn shift_index(&self) -> usize {
        self.shift_index
    }

    /// The boundary this pair is judged against.
    pub fn shifted_composition(&self) -> Composition {
        self.composition.shift(self.shift_index as i64)
    }

    pub fn is_good(&self) -> bool {
        // Construction validated the path, so dominance cannot fail.
        self.shifted_composition().dominates(&self.path).unwrap()
    }
}

/// Exact counts of all, bad, and good pairs terminating at a point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountReport {
    pub terminus: LatticePoint,
    pub all: BigCount,
    pub bad: BigCount,
    pub good: BigCount,
}

/// Default refusal threshold for exhaustive path enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

fn check_terminus(a: &Composition, t: LatticePoint) -> Result<(usize, usize)> {
    if t.x < 0 || t.x > a.total() as i64 || t.y < 0 || t.y > a.part_count() as i64 {
        return Err(Error::TerminusOutsideGrid {
            x: t.x,
            y: t.y,
            n: a.total(),
            m: a.part_count(),
        });
    }
    Ok((t.x as usize, t.y as usize))
}

/// `D(a,t)`: the number of paths `(0,0) -> t` dominated by `a`, by dynamic
/// programming over the grid. Cells left of the boundary hold zero.
pub fn count_dominated(a: &Composition, t: LatticePoint) -> Result<BigCount> {
    let (k, l) = check_terminus(a, t)?;
    let f: Vec<u64> = (0..=l as i64).map(|y| a.boundary_x(y).unwrap()).collect();
    let mut row: Vec<BigCount> = vec![BigCount::zero(); k + 1];
    for y in 0..=l {
        let mut next = vec![BigCount::zero(); k + 1];
        for x in 0..=k {
            if (x as u64) < f[y] {
                continue;
            }
            if x == 0 && y == 0 {
                next[x] = BigCount::from(1u32);
                continue;
            }
            let mut v = BigCount::zero();
            if x > 0 {
                v += &next[x - 1];
            }
            if y > 0 {
                v += &row[x];
            }
            next[x] = v;
        }
        row = next;
    }
    Ok(row[k].clone())
}

/// Counts over all `m` shifts: `all = m * C(k+l, l)`, `good` summed from the
/// per-shift dominated counts, `bad` their difference.
pub fn count_lpbp(a: &Composition, t: LatticePoint) -> Result<CountReport> {
    check_terminus(a, t)?;
    let m = a.part_count();
    let all = binomial(t.x + t.y, t.y) * BigCount::from(m as u64);
    let mut good = BigCount::zero();
    for j in 0..m {
        good += count_dominated(&a.shift(j as i64), t)?;
    }
    let bad = all.clone() - &good;
    Ok(CountReport {
        terminus: t,
        all,
        bad,
        good,
    })
}

fn check_cap(t: LatticePoint, cap: u64) -> Result<()> {
    if binomial(t.x + t.y, t.y) > BigCount::from(cap) {
        return Err(Error::EnumerationCapExceeded { cap });
    }
    Ok(())
}

fn walk_paths(t: LatticePoint, mut visit: impl FnMut(&[Step])) {
    // Depth-first with Right before Up yields lexicographic word order.
    fn rec(x: i64, y: i64, t: LatticePoint, acc: &mut Vec<Step>, visit: &mut impl FnMut(&[Step])) {
        if x == t.x && y == t.y {
            visit(acc);
            return;
        }
        if x < t.x {
            acc.push(Step::Right);
            rec(x + 1, y, t, acc, visit);
            acc.pop();
        }
        if y < t.y {
            acc.push(Step::Up);
            rec(x, y + 1, t, acc, visit);
            acc.pop();
        }
    }
    let mut acc = Vec::with_capacity((t.x + t.y).max(0) as usize);
    rec(0, 0, t, &mut acc, &mut visit);
}

/// All monotone paths `(0,0) -> t` in lexicographic word order, refusing to
/// materialize more than `cap` paths.
pub fn enumerate_paths(t: LatticePoint, cap: u64) -> Result<Vec<LatticePath>> {
    if t.x < 0 || t.y < 0 {
        return Err(Error::InvalidParameter(format!(
            "terminus {} has a negative coordinate",
            t
        )));
    }
    check_cap(t, cap)?;
    let origin = LatticePoint::new(0, 0);
    let mut out = Vec::new();
    walk_paths(t, |steps| out.push(LatticePath::new(origin, steps.to_vec())));
    Ok(out)
}

/// All paths `(0,0) -> t` dominated by `a`, in lexicographic word order,
/// under [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_dominated_paths(a: &Composition, t: LatticePoint) -> Result<Vec<LatticePath>> {
    enumerate_dominated_paths_capped(a, t, DEFAULT_ENUMERATION_CAP)
}

/// As [`enumerate_dominated_paths`] with an explicit cap. The cap applies to
/// the total number of monotone paths to `t`, refused before enumeration.
pub fn enumerate_dominated_paths_capped(
    a: &Composition,
    t: LatticePoint,
    cap: u64,
) -> Result<Vec<LatticePath>> {
    check_terminus(a, t)?;
    check_cap(t, cap)?;
    let origin = LatticePoint::new(0, 0);
    let mut out = Vec::new();
    walk_paths(t, |steps| {
        let path = LatticePath::new(origin, steps.to_vec());
        if a.dominates(&path).unwrap() {
            out.push(path);
        }
    });
    Ok(out)
}

fn count_good_by_corners(
    a: &Composition,
    t: LatticePoint,
    c: u64,
    stat: impl Fn(&LatticePath) -> usize,
) -> Result<BigCount> {
    check_terminus(a, t)?;
    let mut total = 0u64;
    for j in 0..a.part_count() {
        let shifted = a.shift(j as i64);
        for p in enumerate_dominated_paths(&shifted, t)? {
            if stat(&p) as u64 == c {
                total += 1;
            }
        }
    }
    Ok(BigCount::from(total))
}

/// Good pairs at `t` whose path has exactly `c` up-right corners, by
/// exhaustive enumeration over every shift.
pub fn count_good_by_upright_corners(
    a: &Composition,
    t: LatticePoint,
    c: u64,
) -> Result<BigCount> {
    count_good_by_corners(a, t, c, LatticePath::upright_corners)
}

/// Good pairs at `t` whose path has exactly `c` right-up corners (a leading
/// up step counts as one), by exhaustive enumeration over every shift.
pub fn count_good_by_rightup_corners(
    a: &Composition,
    t: LatticePoint,
    c: u64,
) -> Result<BigCount> {
    count_good_by_corners(a, t, c, LatticePath::rightup_corners)
}

/// Bad pairs at `t` whose first bad step lands in the column-`i` ladder, by
/// exhaustive enumeration. With `n = 0` there are no bad pairs at all.
pub fn count_bad_by_bucket(a: &Composition, t: LatticePoint, i: u64) -> Result<BigCount> {
    check_terminus(a, t)?;
    let n = a.total();
    if n == 0 {
        return Ok(BigCount::zero());
    }
    if i >= n {
        return Err(Error::ColumnOutOfRange { i, n });
    }
    let mut total = 0u64;
    for path in enumerate_paths(t, DEFAULT_ENUMERATION_CAP)? {
        for j in 0..a.part_count() {
            let pair = Lpbp::new(path.clone(), a.clone(), j as i64)?;
            if pair.is_good() {
                continue;
            }
            if classify_bad(&pair)?.column == i {
                total += 1;
            }
        }
    }
    Ok(BigCount::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn at(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn big(v: u64) -> BigCount {
        BigCount::from(v)
    }

    #[test]
    fn count_dominated_examples() {
        assert_eq!(count_dominated(&comp(&[1, 1]), at(2, 2)).unwrap(), big(2));
        assert_eq!(count_dominated(&comp(&[0, 0]), at(0, 2)).unwrap(), big(1));
        // Frozen from the exhaustive-enumeration cross-check.
        assert_eq!(count_dominated(&comp(&[1, 2, 3]), at(6, 3)).unwrap(), big(18));
        assert!(count_dominated(&comp(&[1, 1]), at(3, 1)).is_err());
        assert!(count_dominated(&comp(&[1, 1]), at(1, 3)).is_err());
    }

    #[test]
    fn count_lpbp_examples() {
        let r = count_lpbp(&comp(&[1, 2, 3]), at(6, 3)).unwrap();
        assert_eq!((r.all, r.bad, r.good), (big(252), big(216), big(36)));
        let r = count_lpbp(&comp(&[0, 0, 0]), at(0, 3)).unwrap();
        assert_eq!((r.all, r.bad, r.good), (big(3), big(0), big(3)));
        let r = count_lpbp(&comp(&[2, 0, 4]), at(6, 3)).unwrap();
        assert_eq!(r.good, big(36));
    }

    #[test]
    fn corner_count_examples() {
        let a = comp(&[1, 1]);
        for (c, want) in [(0, 2), (1, 2), (2, 0)] {
            assert_eq!(
                count_good_by_upright_corners(&a, at(2, 2), c).unwrap(),
                big(want)
            );
        }
        for (c, want) in [(0, 0), (1, 2), (2, 2)] {
            assert_eq!(
                count_good_by_rightup_corners(&a, at(2, 2), c).unwrap(),
                big(want)
            );
        }
    }

    #[test]
    fn bucket_count_examples() {
        let a = comp(&[1, 1]);
        assert_eq!(count_bad_by_bucket(&a, at(2, 2), 0).unwrap(), big(4));
        assert_eq!(count_bad_by_bucket(&a, at(2, 2), 1).unwrap(), big(4));
        assert_eq!(count_bad_by_bucket(&comp(&[0, 0]), at(0, 2), 0).unwrap(), big(0));
        assert!(count_bad_by_bucket(&a, at(2, 2), 2).is_err());
    }

    #[test]
    fn enumeration_examples() {
        let paths = enumerate_dominated_paths(&comp(&[1, 1]), at(2, 2)).unwrap();
        let words: Vec<_> = paths.iter().map(|p| p.word()).collect();
        assert_eq!(words, vec!["RRUU", "RURU"]);
        assert_eq!(
            enumerate_dominated_paths(&comp(&[0, 0]), at(0, 1)).unwrap()[0].word(),
            "U"
        );
        assert!(enumerate_dominated_paths(&comp(&[2, 2]), at(1, 1))
            .unwrap()
            .is_empty());
        assert!(matches!(
            enumerate_dominated_paths_capped(&comp(&[1, 1]), at(2, 2), 1),
            Err(Error::EnumerationCapExceeded { cap: 1 })
        ));
    }

    #[test]
    fn lpbp_classification() {
        let p = LatticePath::from_word(at(0, 0), "RURU").unwrap();
        let pair = Lpbp::new(p.clone(), comp(&[1, 1]), 0).unwrap();
        assert!(pair.is_good());
        let pair = Lpbp::new(p, comp(&[2, 0]), 0).unwrap();
        assert!(!pair.is_good());
        // Shift indices reduce mod m.
        let p = LatticePath::from_word(at(0, 0), "RU").unwrap();
        assert_eq!(Lpbp::new(p, comp(&[1, 1]), -3).unwrap().shift_index(), 1);
    }
}
