//! Points of the integer lattice and monotone paths over them.

use std::fmt;

use crate::error::{Error, Result};

/// A point of the integer lattice. Coordinates may be negative.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// Both coordinates weakly increase.
    pub fn le(&self, q: &LatticePoint) -> bool {
        self.x <= q.x && self.y <= q.y
    }

    /// `x` weakly increases, `y` strictly.
    pub fn lesssim(&self, q: &LatticePoint) -> bool {
        self.x <= q.x && self.y < q.y
    }

    /// Both coordinates strictly increase.
    pub fn lt(&self, q: &LatticePoint) -> bool {
        self.x < q.x && self.y < q.y
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// One unit step of a monotone path.
///
/// `Right` sorts before `Up`, so word order equals lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Step {
    Right,
    Up,
}

impl Step {
    pub fn to_char(self) -> char {
        match self {
            Step::Right => 'R',
            Step::Up => 'U',
        }
    }

    pub fn from_char(ch: char) -> Result<Step> {
        match ch {
            'R' => Ok(Step::Right),
            'U' => Ok(Step::Up),
            other => Err(Error::MalformedWord(format!(
                "unexpected character {:?}, want R or U",
                other
            ))),
        }
    }

    /// Displacement (dx, dy) of this step.
    pub fn offset(self) -> (i64, i64) {
        match self {
            Step::Right => (1, 0),
            Step::Up => (0, 1),
        }
    }
}

/// Parse a word over the alphabet {R, U} into a step sequence.
pub fn parse_word(word: &str) -> Result<Vec<Step>> {
    word.chars().map(Step::from_char).collect()
}

/// Render a step sequence as its word.
pub fn word_of(steps: &[Step]) -> String {
    steps.iter().map(|s| s.to_char()).collect()
}

/// A monotone lattice path: an origin plus unit steps up and to the right.
///
/// Round-trips losslessly with its word form over {R, U}.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticePath {
    origin: LatticePoint,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(origin: LatticePoint, steps: Vec<Step>) -> Self {
        LatticePath { origin, steps }
    }

    pub fn from_word(origin: LatticePoint, word: &str) -> Result<Self> {
        Ok(LatticePath::new(origin, parse_word(word)?))
    }

    pub fn origin(&self) -> LatticePoint {
        self.origin
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn word(&self) -> String {
        word_of(&self.steps)
    }

    /// Number of right steps.
    pub fn rights(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::Right).count()
    }

    /// Number of up steps.
    pub fn ups(&self) -> usize {
        self.steps.iter().filter(|s| **s == Step::Up).count()
    }

    /// Terminus = origin + (rights, ups).
    pub fn terminus(&self) -> LatticePoint {
        LatticePoint::new(
            self.origin.x + self.rights() as i64,
            self.origin.y + self.ups() as i64,
        )
    }

    /// Every visited point, origin first, terminus last.
    pub fn points(&self) -> impl Iterator<Item = LatticePoint> + '_ {
        let mut cur = self.origin;
        std::iter::once(self.origin).chain(self.steps.iter().map(move |s| {
            let (dx, dy) = s.offset();
            cur = LatticePoint::new(cur.x + dx, cur.y + dy);
            cur
        }))
    }

    /// Number of points where an up step is immediately followed by a right step.
    pub fn upright_corners(&self) -> usize {
        self.steps
            .windows(2)
            .filter(|w| w[0] == Step::Up && w[1] == Step::Right)
            .count()
    }

    /// Number of points where a right step is immediately followed by an up
    /// step, counting a leading up step as one virtual corner.
    pub fn rightup_corners(&self) -> usize {
        let pairs = self
            .steps
            .windows(2)
            .filter(|w| w[0] == Step::Right && w[1] == Step::Up)
            .count();
        let virtual_corner = matches!(self.steps.first(), Some(Step::Up)) as usize;
        pairs + virtual_corner
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(word: &str) -> LatticePath {
        LatticePath::from_word(LatticePoint::new(0, 0), word).unwrap()
    }

    #[test]
    fn comparison_relations() {
        let p = LatticePoint::new(1, 2);
        let q = LatticePoint::new(1, 3);
        let r = LatticePoint::new(2, 3);
        assert!(p.le(&p) && p.le(&q) && p.le(&r));
        assert!(p.lesssim(&q) && p.lesssim(&r) && !p.lesssim(&p));
        assert!(p.lt(&r) && !p.lt(&q) && !p.lt(&p));
    }

    #[test]
    fn word_round_trip() {
        for w in ["", "R", "U", "RURU", "UURRRUU"] {
            assert_eq!(path(w).word(), w);
        }
        assert!(LatticePath::from_word(LatticePoint::new(0, 0), "RUX").is_err());
    }

    #[test]
    fn terminus_and_points() {
        let p = path("RURU");
        assert_eq!(p.terminus(), LatticePoint::new(2, 2));
        let pts: Vec<_> = p.points().collect();
        assert_eq!(
            pts,
            vec![
                LatticePoint::new(0, 0),
                LatticePoint::new(1, 0),
                LatticePoint::new(1, 1),
                LatticePoint::new(2, 1),
                LatticePoint::new(2, 2),
            ]
        );
        let off = LatticePath::from_word(LatticePoint::new(-1, 1), "RU").unwrap();
        assert_eq!(off.terminus(), LatticePoint::new(0, 2));
    }

    #[test]
    fn corner_statistics() {
        for (w, upright, rightup) in [
            ("", 0, 0),
            ("RRUU", 0, 1),
            ("RURU", 1, 2),
            ("URRU", 1, 2),
            ("UURR", 1, 1),
            ("R", 0, 0),
            ("U", 0, 1),
        ] {
            assert_eq!(path(w).upright_corners(), upright, "upright of {w:?}");
            assert_eq!(path(w).rightup_corners(), rightup, "rightup of {w:?}");
        }
    }
}
