//! Constructive bijections: the reflection pair psi/phi on bad pairs, the
//! corner-data bijection onto bad pairs with a prescribed corner count, and
//! the cycle-lemma map omega with its inverse.

use crate::composition::Composition;
use crate::error::{Error, Result};
use crate::lattice::{LatticePath, LatticePoint, Step};
use crate::oracle::Lpbp;

/// Derived data attached to a boundary column `i`: the lowest point of the
/// column strictly above the boundary, and the ladder of its shifts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BadStepContext {
    column: usize,
    lowest_above: LatticePoint,
    base_shift: usize,
    ladder: Vec<LatticePoint>,
    ladder_base: LatticePoint,
}

impl BadStepContext {
    /// Column index `i`.
    pub fn column(&self) -> usize {
        self.column
    }

    /// The lowest point `(i, y)` lying strictly above the boundary.
    pub fn lowest_above(&self) -> LatticePoint {
        self.lowest_above
    }

    /// The shift count `m + 1 - y` that lands [`Self::lowest_above`] at
    /// height 1; rung `j` of the ladder is its `(base_shift + j)`-th shift.
    pub fn base_shift(&self) -> usize {
        self.base_shift
    }

    /// The m ladder points; rung `j` has height `j + 1` and the x-coordinates
    /// are nondecreasing.
    pub fn ladder(&self) -> &[LatticePoint] {
        &self.ladder
    }

    /// Rung `j` of the ladder.
    pub fn rung(&self, j: usize) -> LatticePoint {
        self.ladder[j]
    }

    /// The height-0 anchor one boundary part left of rung 0; its x-coordinate
    /// may be negative.
    pub fn ladder_base(&self) -> LatticePoint {
        self.ladder_base
    }

    /// True iff the rung at the terminus height sits weakly left of `t`.
    /// Vacuously true at height 0. Requires `0 <= t.y <= m`.
    pub fn is_complete(&self, t: LatticePoint) -> bool {
        assert!(t.y >= 0 && t.y as usize <= self.ladder.len());
        t.y == 0 || self.ladder[t.y as usize - 1].x <= t.x
    }

    /// As [`Self::is_complete`] with strict inequality.
    pub fn is_strongly_complete(&self, t: LatticePoint) -> bool {
        assert!(t.y >= 0 && t.y as usize <= self.ladder.len());
        t.y == 0 || self.ladder[t.y as usize - 1].x < t.x
    }
}

/// Build the ladder context for column `i`. Requires `0 <= i < n`.
pub fn bad_step_context(a: &Composition, i: u64) -> Result<BadStepContext> {
    let n = a.total();
    if i >= n {
        return Err(Error::ColumnOutOfRange { i, n });
    }
    let m = a.part_count();
    // f(m) = n > i, so the search always terminates.
    let y = (1..=m as i64)
        .find(|&y| a.boundary_x(y).unwrap() > i)
        .unwrap();
    let lowest_above = LatticePoint::new(i as i64, y);
    let base_shift = (m as i64 + 1 - y) as usize;
    let ladder: Vec<LatticePoint> = (0..m)
        .map(|j| {
            a.point_shift(lowest_above, (base_shift + j) as i64)
                .unwrap()
        })
        .collect();
    for (j, pt) in ladder.iter().enumerate() {
        debug_assert_eq!(pt.y, j as i64 + 1);
        debug_assert!(j == 0 || ladder[j - 1].x <= pt.x);
    }
    let ladder_base = LatticePoint::new(ladder[0].x - a.part(-(base_shift as i64)) as i64, 0);
    Ok(BadStepContext {
        column: i as usize,
        lowest_above,
        base_shift,
        ladder,
        ladder_base,
    })
}

/// Where a bad pair's first bad step lands, resolved to its ladder position.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BadLanding {
    /// Index of the bad step in the path.
    pub step_index: usize,
    /// Its landing point.
    pub landing: LatticePoint,
    /// Ladder column `i`: the landing is a shift of column i's lowest point.
    pub column: u64,
    /// Rung `j` with `landing = ladder[j]`.
    pub rung: usize,
}

/// Resolve the first bad step of a bad pair to its unique (column, rung).
pub fn classify_bad(pair: &Lpbp) -> Result<BadLanding> {
    let a = pair.composition();
    let jsh = pair.shift_index() as i64;
    let (step_index, landing) = pair
        .shifted_composition()
        .first_bad_step(pair.path())?
        .ok_or(Error::NotBad)?;
    // A bad step exists only right of at least one boundary part, so n >= 1.
    let column = wrap_to_column(a, landing.x - a.shift_displacement(jsh));
    let ctx = bad_step_context(a, column)?;
    let m = a.part_count() as i64;
    let rung = (jsh - ctx.base_shift() as i64).rem_euclid(m) as usize;
    assert_eq!(ctx.rung(rung), landing, "landing must sit on its ladder");
    Ok(BadLanding {
        step_index,
        landing,
        column,
        rung,
    })
}

fn wrap_to_column(a: &Composition, x: i64) -> u64 {
    x.rem_euclid(a.total() as i64) as u64
}

/// Reflect a bad pair into a path from `(-1,1)` to `t`: the prefix before the
/// bad step is reversed, the bad up step becomes the right step entering the
/// landing rung, and the suffix is kept.
///
/// The output avoids every rung below the landing one and enters the landing
/// rung horizontally.
pub fn psi(pair: &Lpbp, t: LatticePoint) -> Result<LatticePath> {
    if pair.path().terminus() != t {
        return Err(Error::InvalidParameter(format!(
            "path terminates at {}, not at {}",
            pair.path().terminus(),
            t
        )));
    }
    let landing = classify_bad(pair)?;
    let steps = pair.path().steps();
    let mut out: Vec<Step> = steps[..landing.step_index].to_vec();
    out.reverse();
    out.push(Step::Right);
    out.extend_from_slice(&steps[landing.step_index + 1..]);
    let reflected = LatticePath::new(LatticePoint::new(-1, 1), out);
    debug_assert_eq!(reflected.terminus(), t);
    Ok(reflected)
}

/// Invert [`psi`]: given a path from `(-1,1)` to `t` whose first meeting with
/// rungs `0..=j` of column i's ladder is rung `j`, entered horizontally,
/// rebuild the bad pair whose first bad step lands on that rung.
pub fn phi(path: &LatticePath, a: &Composition, i: u64, j: u64, t: LatticePoint) -> Result<Lpbp> {
    if path.origin() != LatticePoint::new(-1, 1) {
        return Err(Error::WrongOrigin { x: -1, y: 1 });
    }
    if path.terminus() != t {
        return Err(Error::InvalidParameter(format!(
            "path terminates at {}, not at {}",
            path.terminus(),
            t
        )));
    }
    let ctx = bad_step_context(a, i)?;
    let m = a.part_count();
    if j as usize >= m {
        return Err(Error::InvalidParameter(format!(
            "rung {} is outside 0..{}",
            j, m
        )));
    }
    let j = j as usize;
    let target = ctx.rung(j);
    let lower = &ctx.ladder()[..=j];
    let points: Vec<LatticePoint> = path.points().collect();
    let meet = points
        .iter()
        .position(|p| lower.contains(p))
        .ok_or_else(|| Error::NotInImage(format!("path never meets rung {} at {}", j, target)))?;
    if points[meet] != target {
        return Err(Error::NotInImage(format!(
            "path meets {} before rung {} at {}",
            points[meet], j, target
        )));
    }
    // The origin has x = -1 < 0 <= rung x, so the meeting point has a
    // predecessor.
    if points[meet - 1] != LatticePoint::new(target.x - 1, target.y) {
        return Err(Error::NotInImage(format!(
            "path enters rung {} at {} vertically",
            j, target
        )));
    }
    let steps = path.steps();
    let mut rebuilt: Vec<Step> = steps[..meet - 1].to_vec();
    rebuilt.reverse();
    rebuilt.push(Step::Up);
    rebuilt.extend_from_slice(&steps[meet..]);
    let jsh = (ctx.base_shift() + j) % m;
    let pair = Lpbp::new(
        LatticePath::new(LatticePoint::new(0, 0), rebuilt),
        a.clone(),
        jsh as i64,
    )?;
    debug_assert_eq!(
        pair.shifted_composition()
            .first_bad_step(pair.path())
            .unwrap()
            .map(|(_, p)| p),
        Some(target)
    );
    Ok(pair)
}

/// Build the bad pair in column `i` with prescribed corner data.
///
/// `xs` (length `c >= 1`) and `ys` (length `c + 1`) must satisfy
/// `0 <= xs[0] < ... < xs[c-1] = k - 1` and `1 <= ys[0] < ... < ys[c] <= l + 1`,
/// and the column's ladder must be strongly complete with respect to `t`.
/// The resulting pair's path has exactly `c` up-right corners, and the map is
/// a bijection onto the column's bad pairs with `c` up-right corners.
pub fn corner_data_to_bad_lpbp(
    a: &Composition,
    i: u64,
    t: LatticePoint,
    xs: &[u64],
    ys: &[u64],
) -> Result<Lpbp> {
    let (k, l) = (t.x, t.y);
    let c = xs.len();
    if c == 0 {
        return Err(Error::InvalidParameter(
            "corner data needs at least one x-value".into(),
        ));
    }
    if ys.len() != c + 1 {
        return Err(Error::InvalidParameter(format!(
            "want {} y-values for {} x-values, got {}",
            c + 1,
            c,
            ys.len()
        )));
    }
    if !xs.windows(2).all(|w| w[0] < w[1]) || xs[c - 1] as i64 != k - 1 {
        return Err(Error::InvalidParameter(
            "x-values must strictly increase and end at k - 1".into(),
        ));
    }
    if !ys.windows(2).all(|w| w[0] < w[1]) || ys[0] < 1 || ys[c] as i64 > l + 1 {
        return Err(Error::InvalidParameter(
            "y-values must strictly increase within 1..=l+1".into(),
        ));
    }
    let ctx = bad_step_context(a, i)?;
    if !ctx.is_strongly_complete(t) {
        return Err(Error::HypothesisNotMet(
            "ladder must be strongly complete with respect to the terminus",
        ));
    }
    // Smallest r whose rung at height ys[r-1] sits weakly left of xs[r-1];
    // strong completeness guarantees r = c works.
    let r = (1..=c)
        .find(|&r| ctx.rung(ys[r - 1] as usize - 1).x <= xs[r - 1] as i64)
        .expect("strong completeness admits r = c");
    let j = ys[r - 1] as usize - 1;
    let xb = ctx.rung(j).x;

    let mut w: Vec<Step> = Vec::new();
    let (mut cx, mut cy) = (-1i64, 1i64);
    let run = |w: &mut Vec<Step>, step: Step, count: i64| {
        assert!(count >= 0, "corner chain is monotone");
        w.extend(std::iter::repeat(step).take(count as usize));
    };
    // Right-up corners at (xs[s-1], ys[s-1]) for s below r.
    for s in 1..r {
        run(&mut w, Step::Up, ys[s - 1] as i64 - cy);
        run(&mut w, Step::Right, xs[s - 1] as i64 - cx);
        cx = xs[s - 1] as i64;
        cy = ys[s - 1] as i64;
    }
    // Enter rung j horizontally, then rise to just under the next y-value.
    run(&mut w, Step::Up, ys[r - 1] as i64 - cy);
    run(&mut w, Step::Right, xb - cx);
    cx = xb;
    run(&mut w, Step::Up, (ys[r] as i64 - 1) - (ys[r - 1] as i64));
    cy = ys[r] as i64 - 1;
    // Up-right corners at (xs[s-1] + 1, ys[s+1] - 1) for s from r on.
    for s in r..c {
        run(&mut w, Step::Right, (xs[s - 1] as i64 + 1) - cx);
        run(&mut w, Step::Up, (ys[s + 1] as i64 - 1) - cy);
        cx = xs[s - 1] as i64 + 1;
        cy = ys[s + 1] as i64 - 1;
    }
    run(&mut w, Step::Right, k - cx);
    run(&mut w, Step::Up, l - cy);

    let pair = phi(&LatticePath::new(LatticePoint::new(-1, 1), w), a, i, j as u64, t)?;
    debug_assert_eq!(pair.path().upright_corners(), c);
    Ok(pair)
}

/// Offsets `r` such that rotating the sequence left by `r` makes every prefix
/// sum positive. Entries must be at most 1; the number of such offsets equals
/// the sequence sum `k`, which must be at least 1.
pub fn positive_shifts(u: &[i64]) -> Result<Vec<usize>> {
    if u.iter().any(|&e| e > 1) {
        return Err(Error::InvalidParameter(
            "sequence entries must be at most 1".into(),
        ));
    }
    let k: i64 = u.iter().sum();
    if k < 1 {
        return Err(Error::InvalidParameter(format!(
            "sequence sum {} must be positive",
            k
        )));
    }
    let mut out = Vec::new();
    for r in 0..u.len() {
        let mut ps = 0i64;
        let mut ok = true;
        for idx in 0..u.len() {
            ps += u[(r + idx) % u.len()];
            if ps < 1 {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(r);
        }
    }
    assert_eq!(out.len(), k as usize, "exactly k rotations are positive");
    Ok(out)
}

/// Split a word into per-part blocks: block `i` is empty when `a_i = 0` and
/// otherwise ends exactly at its `a_i`-th right step. The split is unique and
/// must consume the whole word.
pub fn parse_blocks(a: &Composition, w: &[Step]) -> Result<Vec<Vec<Step>>> {
    let mut blocks = Vec::with_capacity(a.part_count());
    let mut pos = 0usize;
    for &ai in a.parts() {
        if ai == 0 {
            blocks.push(Vec::new());
            continue;
        }
        let start = pos;
        let mut rights = 0u64;
        while rights < ai {
            let Some(step) = w.get(pos) else {
                return Err(Error::MalformedWord(
                    "word ran out before filling every block".into(),
                ));
            };
            if *step == Step::Right {
                rights += 1;
            }
            pos += 1;
        }
        blocks.push(w[start..pos].to_vec());
    }
    if pos != w.len() {
        return Err(Error::MalformedWord(format!(
            "unconsumed suffix of {} steps",
            w.len() - pos
        )));
    }
    Ok(blocks)
}

/// The cycle-lemma map: send a word with `l` up steps and `n` right steps
/// ending in a right step, plus a rank `k` in `1..=m-l`, to a good pair
/// terminating at `(n, l)` with a right step.
///
/// The word splits into per-part blocks; the `k`-th smallest block rotation
/// whose prefix-sum sequence stays positive selects where the path starts.
pub fn omega(a: &Composition, l: u64, w: &[Step], k: u64) -> Result<Lpbp> {
    let (n, m) = (a.total(), a.part_count() as u64);
    if l >= m {
        return Err(Error::InvalidParameter(format!(
            "height {} must be below the part count {}",
            l, m
        )));
    }
    let ups = w.iter().filter(|s| **s == Step::Up).count() as u64;
    let rights = w.len() as u64 - ups;
    if ups != l || rights != n {
        return Err(Error::MalformedWord(format!(
            "want {} up and {} right steps, got {} and {}",
            l, n, ups, rights
        )));
    }
    if w.last() != Some(&Step::Right) {
        return Err(Error::MalformedWord("word must end with a right step".into()));
    }
    if k < 1 || k > m - l {
        return Err(Error::InvalidParameter(format!(
            "rank {} is outside 1..={}",
            k,
            m - l
        )));
    }
    let blocks = parse_blocks(a, w)?;
    let u = block_profile(&blocks);
    let rotations = positive_shifts(&u)?;
    // Positive rotations always align with block starts.
    debug_assert!(rotations.iter().all(|r| r % 2 == 0));
    let j = rotations[k as usize - 1] / 2;
    let mut steps = Vec::with_capacity(w.len());
    for t in 0..blocks.len() {
        steps.extend_from_slice(&blocks[(j + t) % blocks.len()]);
    }
    let pair = Lpbp::new(
        LatticePath::new(LatticePoint::new(0, 0), steps),
        a.clone(),
        -(j as i64),
    )?;
    debug_assert!(pair.is_good());
    Ok(pair)
}

/// Alternating profile (1, -u_0, 1, -u_1, ...) where u_i counts the up steps
/// of block i.
pub fn block_profile(blocks: &[Vec<Step>]) -> Vec<i64> {
    let mut u = Vec::with_capacity(2 * blocks.len());
    for b in blocks {
        u.push(1);
        u.push(-(b.iter().filter(|s| **s == Step::Up).count() as i64));
    }
    u
}

/// Invert [`omega`]: recover the word and the rank from a good pair that
/// terminates on the right edge with a right step.
pub fn omega_inverse(pair: &Lpbp) -> Result<(Vec<Step>, u64)> {
    let a = pair.composition();
    let m = a.part_count();
    if !pair.is_good() {
        return Err(Error::NotGood);
    }
    let t = pair.path().terminus();
    if t.x != a.total() as i64 || t.y >= m as i64 {
        return Err(Error::InvalidParameter(format!(
            "pair must terminate on the right edge below height {}, got {}",
            m, t
        )));
    }
    if pair.path().steps().last() != Some(&Step::Right) {
        return Err(Error::InvalidParameter(
            "path must end with a right step".into(),
        ));
    }
    let jsh = pair.shift_index();
    let j = (m - jsh) % m;
    let rotated = parse_blocks(&pair.shifted_composition(), pair.path().steps())?;
    let blocks: Vec<Vec<Step>> = (0..m)
        .map(|idx| rotated[(idx + m - j) % m].clone())
        .collect();
    let mut w = Vec::with_capacity(pair.path().len());
    for b in &blocks {
        w.extend_from_slice(b);
    }
    let u = block_profile(&blocks);
    let rotations = positive_shifts(&u)?;
    let k = rotations
        .iter()
        .position(|&r| r / 2 == j)
        .expect("a good right-ended pair's rotation is positive");
    Ok((w, k as u64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{parse_word, word_of};

    fn comp(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn at(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    fn pair(word: &str, parts: &[u64], jsh: i64) -> Lpbp {
        Lpbp::new(
            LatticePath::from_word(at(0, 0), word).unwrap(),
            comp(parts),
            jsh,
        )
        .unwrap()
    }

    #[test]
    fn context_examples() {
        let a = comp(&[1, 2, 3, 2]);
        let c1 = bad_step_context(&a, 1).unwrap();
        assert_eq!(c1.lowest_above(), at(1, 2));
        assert_eq!(c1.base_shift(), 3);
        let c4 = bad_step_context(&a, 4).unwrap();
        assert_eq!(c4.lowest_above(), at(4, 3));
        assert_eq!(c4.base_shift(), 2);
        assert_eq!(c4.ladder(), &[at(1, 1), at(3, 2), at(4, 3), at(6, 4)]);
        assert_eq!(c4.ladder_base(), at(-2, 0));
        assert_eq!(c1.ladder(), &[at(0, 1), at(1, 2), at(3, 3), at(6, 4)]);
        assert_eq!(c1.ladder_base(), at(-2, 0));

        let c0 = bad_step_context(&comp(&[1, 1]), 0).unwrap();
        assert_eq!(c0.lowest_above(), at(0, 1));
        assert_eq!(c0.base_shift(), 2);
        assert_eq!(c0.ladder(), &[at(0, 1), at(1, 2)]);

        assert!(bad_step_context(&a, 8).is_err());
        assert!(bad_step_context(&comp(&[0, 0]), 0).is_err());
    }

    #[test]
    fn completeness_examples() {
        let a = comp(&[1, 2, 3, 2]);
        let c1 = bad_step_context(&a, 1).unwrap();
        let c4 = bad_step_context(&a, 4).unwrap();
        assert!(c1.is_complete(at(3, 3)));
        assert!(!c4.is_complete(at(3, 3)));
        assert!(c4.is_complete(at(8, 4)));
        // Rung at height 3 of column 1 is (3,3), not strictly left of (3,3).
        assert!(!c1.is_strongly_complete(at(3, 3)));
        assert!(c1.is_complete(at(0, 0)) && c1.is_strongly_complete(at(0, 0)));
        let c0 = bad_step_context(&comp(&[1, 1]), 0).unwrap();
        assert!(c0.is_strongly_complete(at(2, 2)));
    }

    #[test]
    fn classify_examples() {
        let landing = classify_bad(&pair("UURR", &[1, 1], 0)).unwrap();
        assert_eq!(landing.step_index, 0);
        assert_eq!(landing.landing, at(0, 1));
        assert_eq!((landing.column, landing.rung), (0, 0));
        assert!(matches!(
            classify_bad(&pair("RURU", &[1, 1], 0)),
            Err(Error::NotBad)
        ));
    }

    #[test]
    fn psi_examples() {
        let out = psi(&pair("UURR", &[1, 1], 0), at(2, 2)).unwrap();
        assert_eq!(out.origin(), at(-1, 1));
        assert_eq!(out.word(), "RURR");
        let out = psi(&pair("URRU", &[1, 1], 0), at(2, 2)).unwrap();
        assert_eq!(out.word(), "RRRU");
        assert!(psi(&pair("RURU", &[1, 1], 0), at(2, 2)).is_err());
        assert!(psi(&pair("UURR", &[1, 1], 0), at(3, 2)).is_err());
    }

    #[test]
    fn phi_examples() {
        let p = LatticePath::from_word(at(-1, 1), "RURR").unwrap();
        let back = phi(&p, &comp(&[1, 1]), 0, 0, at(2, 2)).unwrap();
        assert_eq!(back.path().word(), "UURR");
        assert_eq!(back.shift_index(), 0);
        // Meets rung 0 at (0,1) before rung 1, so j = 1 is rejected.
        assert!(phi(&p, &comp(&[1, 1]), 0, 1, at(2, 2)).is_err());
        let wrong_origin = LatticePath::from_word(at(0, 0), "RURR").unwrap();
        assert!(phi(&wrong_origin, &comp(&[1, 1]), 0, 0, at(3, 2)).is_err());
    }

    #[test]
    fn corner_data_count_example() {
        // Valid (xs, ys) pairs for c = 1 number C(1,0) * C(3,2) = 3 and map
        // to distinct bad pairs with one up-right corner each.
        let a = comp(&[1, 1]);
        let t = at(2, 2);
        let mut seen = std::collections::HashSet::new();
        for ys in [[1, 2], [1, 3], [2, 3]] {
            let got = corner_data_to_bad_lpbp(&a, 0, t, &[1], &ys).unwrap();
            assert_eq!(got.path().upright_corners(), 1);
            assert!(seen.insert((got.path().word(), got.shift_index())));
        }
        assert_eq!(seen.len(), 3);
        assert!(corner_data_to_bad_lpbp(&a, 0, t, &[], &[1]).is_err());
        assert!(corner_data_to_bad_lpbp(&a, 0, t, &[0], &[1, 2]).is_err());
    }

    #[test]
    fn positive_shifts_examples() {
        let u = [1, 0, 1, -1, 1, 0, 1, 0, 1, -1, 1, 0, 1, -2];
        assert_eq!(positive_shifts(&u).unwrap(), vec![0, 4, 6]);
        assert_eq!(positive_shifts(&[1]).unwrap(), vec![0]);
        assert_eq!(positive_shifts(&[1, -1, 1, 0]).unwrap().len(), 1);
        assert!(positive_shifts(&[1, -1]).is_err());
        assert!(positive_shifts(&[2, 1]).is_err());
    }

    #[test]
    fn omega_worked_example() {
        let a = comp(&[1, 3, 0, 2, 4, 0, 2]);
        let w = parse_word("RRRURRRRRURRUURR").unwrap();
        let out = omega(&a, 4, &w, 3).unwrap();
        assert_eq!(out.path().word(), "RRRRURRUURRRRRUR");
        assert_eq!(out.shift_index(), 4);
        assert_eq!(
            out.shifted_composition(),
            comp(&[2, 4, 0, 2, 1, 3, 0])
        );
        let (back, k) = omega_inverse(&out).unwrap();
        assert_eq!((word_of(&back), k), ("RRRURRRRRURRUURR".to_string(), 3));
    }

    #[test]
    fn omega_small_examples() {
        let a = comp(&[1, 1]);
        let out = omega(&a, 1, &parse_word("RUR").unwrap(), 1).unwrap();
        assert_eq!((out.path().word(), out.shift_index()), ("RUR".into(), 0));
        let out = omega(&a, 1, &parse_word("URR").unwrap(), 1).unwrap();
        assert_eq!((out.path().word(), out.shift_index()), ("RUR".into(), 1));
        assert_eq!(omega_inverse(&out).unwrap(), (parse_word("URR").unwrap(), 1));

        assert!(omega(&a, 1, &parse_word("RU").unwrap(), 1).is_err());
        assert!(omega(&a, 1, &parse_word("RUR").unwrap(), 2).is_err());
        assert!(omega(&a, 2, &parse_word("RURU").unwrap(), 1).is_err());
        assert!(omega_inverse(&pair("UR", &[1, 1], 1)).is_err());
    }
}
