//! Closed-form evaluators, each validated against the brute-force oracle in
//! this crate's test suites. Formula preconditions are enforced: outside its
//! hypothesis a closed form is provably wrong, so the call is rejected.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::composition::Composition;
use crate::count::{binomial, catalan, exact_div, BigCount};
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::oracle::CountReport;

fn signed(c: BigCount) -> BigInt {
    BigInt::from(c)
}

fn unsigned(v: BigInt) -> BigCount {
    v.to_biguint().expect("count must be nonnegative")
}

fn ratio(num: BigCount, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

fn whole(v: &BigRational) -> BigCount {
    assert!(v.is_integer(), "count must be an integer: {}", v);
    assert!(!v.is_negative(), "count must be nonnegative: {}", v);
    v.to_integer().to_biguint().unwrap()
}

/// True when `p` lies weakly right of the boundary at its height, i.e.
/// `p.x >= boundary_x(p.y)`.
pub fn weakly_right_of_boundary(a: &Composition, p: LatticePoint) -> Result<bool> {
    Ok(p.x >= a.boundary_x(p.y)? as i64)
}

/// True when `p` lies weakly right of every cyclic shift's boundary.
pub fn weakly_right_of_all_boundaries(a: &Composition, p: LatticePoint) -> Result<bool> {
    for j in 0..a.part_count() {
        if !weakly_right_of_boundary(&a.shift(j as i64), p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Closed-form pair counts at `t = (k,l)`:
/// `all = m C(k+l,l)`, `bad = n C(k+l,l-1)`,
/// `good = ((m(k+1) - nl) / (k+1)) C(k+l,l)`.
///
/// Requires `(k+1, l)` weakly right of every shifted boundary. The good
/// count is also checked against `all - bad` before returning.
pub fn lpbp_counts_formula(a: &Composition, t: LatticePoint) -> Result<CountReport> {
    let (k, l) = (t.x, t.y);
    if k < 0 || l < 0 || l > a.part_count() as i64 {
        return Err(Error::TerminusOutsideGrid {
            x: k,
            y: l,
            n: a.total(),
            m: a.part_count(),
        });
    }
    if !weakly_right_of_all_boundaries(a, LatticePoint::new(k + 1, l))? {
        return Err(Error::HypothesisNotMet(
            "(k+1, l) must lie weakly right of every shifted boundary",
        ));
    }
    let (n, m) = (a.total() as i64, a.part_count() as i64);
    let choose = binomial(k + l, l);
    let all = choose.clone() * BigCount::from(m as u64);
    let bad = binomial(k + l, l - 1) * BigCount::from(n as u64);
    let numer = BigInt::from(m) * BigInt::from(k + 1) - BigInt::from(n) * BigInt::from(l);
    assert!(!numer.is_negative(), "good count is nonnegative under the hypothesis");
    let good = exact_div(
        unsigned(numer) * choose,
        &BigCount::from((k + 1) as u64),
    );
    assert_eq!(good, all.clone() - &bad, "closed form must match the difference");
    Ok(CountReport {
        terminus: t,
        all,
        bad,
        good,
    })
}

/// `C(n+m, m-1)`: the sum of dominated-path counts over all `m` shifts of any
/// weak `m`-part composition of `n`, independent of the composition.
pub fn total_over_shifts(n: u64, m: u64) -> Result<BigCount> {
    if m < 1 {
        return Err(Error::InvalidParameter("need at least one part".into()));
    }
    Ok(binomial((n + m) as i64, m as i64 - 1))
}

/// `((k - al + 1) / (k+1)) C(k+l, l)`: paths to `(k,l)` weakly below the
/// line `x = a y`. Requires `k >= a l`.
pub fn ballot_count(a: u64, k: u64, l: u64) -> Result<BigCount> {
    let al = a
        .checked_mul(l)
        .ok_or_else(|| Error::InvalidParameter("slope times height overflows".into()))?;
    if k < al {
        return Err(Error::HypothesisNotMet("terminus must satisfy k >= a l"));
    }
    Ok(exact_div(
        binomial((k + l) as i64, l as i64) * BigCount::from(k - al + 1),
        &BigCount::from(k + 1),
    ))
}

/// `(1 / ((a+1)m + 1)) C((a+1)m + 1, m)`: paths to `(am, m)` weakly below
/// the line `x = a y`. Requires `m >= 1`.
pub fn generalized_catalan(a: u64, m: u64) -> Result<BigCount> {
    if m < 1 {
        return Err(Error::InvalidParameter("need at least one up step".into()));
    }
    let top = (a + 1) * m + 1;
    Ok(exact_div(
        binomial(top as i64, m as i64),
        &BigCount::from(top),
    ))
}

fn corner_difference(pos: BigCount, neg: BigCount) -> BigCount {
    let v = signed(pos) - signed(neg);
    assert!(!v.is_negative(), "corner count is nonnegative under the hypothesis");
    unsigned(v)
}

/// `m C(k,c) C(l,c) - n C(k-1,c-1) C(l+1,c+1)`: good pairs at `t = (k,l)`
/// whose path has exactly `c` up-right corners. Requires `t` weakly right of
/// every shifted boundary.
pub fn upright_corners_formula(a: &Composition, t: LatticePoint, c: u64) -> Result<BigCount> {
    require_all_shifts(a, t)?;
    let (k, l) = (t.x, t.y);
    let (n, m) = (a.total(), a.part_count() as u64);
    let c = c as i64;
    Ok(corner_difference(
        binomial(k, c) * binomial(l, c) * BigCount::from(m),
        binomial(k - 1, c - 1) * binomial(l + 1, c + 1) * BigCount::from(n),
    ))
}

/// `m C(k+1,c) C(l-1,c-1) - n C(k,c-1) C(l,c)`: good pairs at `t = (k,l)`
/// whose path has exactly `c` right-up corners (leading up step counted).
/// Requires `t` weakly right of every shifted boundary, and `l >= 1`: the
/// virtual-corner pairing needs an up step, and at `l = 0` the closed form
/// undercounts the corner-free paths.
pub fn rightup_corners_formula(a: &Composition, t: LatticePoint, c: u64) -> Result<BigCount> {
    require_all_shifts(a, t)?;
    if t.y < 1 {
        return Err(Error::HypothesisNotMet(
            "right-up corner counting needs at least one up step",
        ));
    }
    let (k, l) = (t.x, t.y);
    let (n, m) = (a.total(), a.part_count() as u64);
    let c = c as i64;
    Ok(corner_difference(
        binomial(k + 1, c) * binomial(l - 1, c - 1) * BigCount::from(m),
        binomial(k, c - 1) * binomial(l, c) * BigCount::from(n),
    ))
}

fn require_all_shifts(a: &Composition, t: LatticePoint) -> Result<()> {
    if t.x < 0 || t.y < 0 || t.y > a.part_count() as i64 {
        return Err(Error::TerminusOutsideGrid {
            x: t.x,
            y: t.y,
            n: a.total(),
            m: a.part_count(),
        });
    }
    if !weakly_right_of_all_boundaries(a, t)? {
        return Err(Error::HypothesisNotMet(
            "terminus must lie weakly right of every shifted boundary",
        ));
    }
    Ok(())
}

/// `C(n, c-1) C(m, c)`: at the full terminus `(n,m)` this equals both the
/// right-up count at `c` and the up-right count at `c - 1`, for every weak
/// `m`-part composition of `n`. Requires `n, m, c >= 1`.
pub fn corners_at_full_terminus(n: u64, m: u64, c: u64) -> Result<BigCount> {
    if n < 1 || m < 1 || c < 1 {
        return Err(Error::InvalidParameter(
            "full-terminus corner count needs n, m, c >= 1".into(),
        ));
    }
    Ok(binomial(n as i64, c as i64 - 1) * binomial(m as i64, c as i64))
}

/// `m C(n+l,l) - n C(n+l,l-1)`: good pairs terminating at the right-edge
/// point `(n,l)`. Also evaluates the summand form
/// `sum_{i=0..l} (m-i) C(n+i-1,i)` and asserts both agree (for `n >= 1`;
/// at `n = 0` the summand form degenerates).
pub fn good_at_right_edge(a: &Composition, l: u64) -> Result<BigCount> {
    let (n, m) = (a.total(), a.part_count() as u64);
    if l > m {
        return Err(Error::HeightOutOfRange {
            y: l as i64,
            m: m as usize,
        });
    }
    let diff = signed(binomial((n + l) as i64, l as i64) * BigCount::from(m))
        - signed(binomial((n + l) as i64, l as i64 - 1) * BigCount::from(n));
    assert!(!diff.is_negative());
    let diff = unsigned(diff);
    if n >= 1 {
        let mut sum = BigCount::zero();
        for i in 0..=l {
            sum += binomial((n + i) as i64 - 1, i as i64) * BigCount::from(m - i);
        }
        assert_eq!(diff, sum, "difference and summand forms must agree");
    }
    Ok(diff)
}

/// `C(n+l-1, l) (m-l)`: good pairs at `(n,l)` whose path ends with a right
/// step, for every weak `m`-part composition of `n`. Requires `n >= 1` and
/// `0 <= l < m`.
pub fn gstar_count(n: u64, m: u64, l: u64) -> Result<BigCount> {
    if n < 1 {
        return Err(Error::InvalidParameter("need n >= 1".into()));
    }
    if l >= m {
        return Err(Error::InvalidParameter(format!(
            "height {} must be below the part count {}",
            l, m
        )));
    }
    Ok(binomial((n + l) as i64 - 1, l as i64) * BigCount::from(m - l))
}

/// Counts for the 2-periodic alternating boundary with parts `a < b`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PeriodicSpec {
    a: u64,
    b: u64,
    n: u64,
}

/// The four path counts of a [`PeriodicSpec`]: to the even and odd reference
/// points, under the alternating boundary and under its reversal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PeriodicCounts {
    /// Paths to the odd point under the `(a,b)` boundary.
    pub q_ab: BigCount,
    /// Paths to the odd point under the `(b,a)` boundary; always zero.
    pub q_ba: BigCount,
    /// Paths to the even point under the `(a,b)` boundary.
    pub p_ab: BigCount,
    /// Paths to the even point under the `(b,a)` boundary.
    pub p_ba: BigCount,
}

impl PeriodicSpec {
    /// Requires `0 <= a < b`.
    pub fn new(a: u64, b: u64, n: u64) -> Result<Self> {
        if a >= b {
            return Err(Error::InvalidParameter(format!(
                "periodic parts need a < b, got {} >= {}",
                a, b
            )));
        }
        Ok(PeriodicSpec { a, b, n })
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// Period sum `c = a + b`.
    pub fn c(&self) -> u64 {
        self.a + self.b
    }

    /// Even reference point `(cn + b - a - 1, 2n)`.
    pub fn even_point(&self) -> LatticePoint {
        LatticePoint::new((self.c() * self.n + self.b - self.a - 1) as i64, 2 * self.n as i64)
    }

    /// Odd reference point `(cn + b - 1, 2n + 1)`.
    pub fn odd_point(&self) -> LatticePoint {
        LatticePoint::new((self.c() * self.n + self.b - 1) as i64, 2 * self.n as i64 + 1)
    }

    /// `(a, b)` repeated `n + 1` times: enough boundary to reach both
    /// reference points.
    pub fn alternating_boundary(&self) -> Composition {
        let mut parts = Vec::with_capacity(2 * (self.n as usize + 1));
        for _ in 0..=self.n {
            parts.push(self.a);
            parts.push(self.b);
        }
        Composition::new(parts).unwrap()
    }

    /// `(b, a)` repeated `n + 1` times.
    pub fn reversed_boundary(&self) -> Composition {
        let mut parts = Vec::with_capacity(2 * (self.n as usize + 1));
        for _ in 0..=self.n {
            parts.push(self.b);
            parts.push(self.a);
        }
        Composition::new(parts).unwrap()
    }

    /// `M_n = ((b-a) / (cn+b)) C((c+2)n + b, 2n + 1)`, always an integer.
    pub fn m_count(&self) -> BigCount {
        let (c, n, b, a) = (self.c(), self.n, self.b, self.a);
        exact_div(
            binomial(((c + 2) * n + b) as i64, 2 * n as i64 + 1) * BigCount::from(b - a),
            &BigCount::from(c * n + b),
        )
    }

    /// `N_n = ((b-a) / (cn+b-a)) C((c+2)n + b - a - 1, 2n)`; may be a
    /// half-integer, so it is returned as an exact rational.
    pub fn n_value(&self) -> BigRational {
        let (c, n, b, a) = (self.c(), self.n, self.b, self.a);
        ratio(
            binomial(((c + 2) * n + b - a - 1) as i64, 2 * n as i64) * BigCount::from(b - a),
            c * n + b - a,
        )
    }

    /// Convolution `sum_{i<n} M_i M_{n-1-i}`.
    fn m_convolution(&self) -> BigCount {
        let mut conv = BigCount::zero();
        for i in 0..self.n {
            let left = PeriodicSpec { n: i, ..*self }.m_count();
            let right = PeriodicSpec {
                n: self.n - 1 - i,
                ..*self
            }
            .m_count();
            conv += left * right;
        }
        conv
    }

    /// The four counts: `q_ab = M_n`, `q_ba = 0`,
    /// `p_ab = N_n + conv/2`, `p_ba = N_n - conv/2`, where
    /// `conv = sum_{i<n} M_i M_{n-1-i}`. Each result is asserted integral.
    pub fn counts(&self) -> PeriodicCounts {
        let half_conv = ratio(self.m_convolution(), 2);
        let n_val = self.n_value();
        PeriodicCounts {
            q_ab: self.m_count(),
            q_ba: BigCount::zero(),
            p_ab: whole(&(n_val.clone() + half_conv.clone())),
            p_ba: whole(&(n_val - half_conv)),
        }
    }
}

/// Paths from `(0,0)` to `(cn, 2n)` weakly below the line of half-integer
/// slope `c/2`, for odd `c`: the reversed-boundary count of the periodic
/// family with parts `((c-1)/2, (c+1)/2)`. The printed closed form
/// `(1/(cn+1)) C((c+2)n, 2n) - (1/2) sum M'_i M'_{n-1-i}` with
/// `M'_i = (1/(2i+1)) C((c+2)i + (c+1)/2, 2i)` is evaluated alongside and
/// asserted equal.
pub fn half_slope_formula(c: u64, n: u64) -> Result<BigCount> {
    if c % 2 == 0 {
        return Err(Error::InvalidParameter(format!(
            "slope numerator {} must be odd",
            c
        )));
    }
    let spec = PeriodicSpec::new((c - 1) / 2, (c + 1) / 2, n)?;
    let value = spec.counts().p_ba;

    let m_alt = |i: u64| ratio(binomial(((c + 2) * i + (c + 1) / 2) as i64, 2 * i as i64), 2 * i + 1);
    let mut conv = BigRational::zero();
    for i in 0..n {
        conv += m_alt(i) * m_alt(n - 1 - i);
    }
    let alt = ratio(binomial(((c + 2) * n) as i64, 2 * n as i64), c * n + 1)
        - conv / BigRational::from(BigInt::from(2));
    assert_eq!(whole(&alt), value, "printed form must match the periodic route");
    Ok(value)
}

/// The three staircase-boundary Catalan counts at scale `n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatalanStaircase {
    /// Paths to `(2n+1, 2n+1)`: `2 C_{2n+1}`.
    pub to_odd: BigCount,
    /// Paths to `(2n, 2n)`: `2^{2n+1} C_n - C_{2n+1}`.
    pub to_even: BigCount,
    /// Paths to `(2n-1, 2n)` under the two-up-two-right staircase; equals
    /// `to_even`, absent at `n = 0`.
    pub under_uurr: Option<BigCount>,
}

/// Closed forms for paths under the alternating `(0,2)` staircase boundary.
pub fn catalan_staircase_counts(n: u64) -> CatalanStaircase {
    let to_odd = catalan(2 * n + 1) * BigCount::from(2u32);
    let pow = BigCount::from(2u32).pow(2 * n as u32 + 1);
    let to_even = unsigned(signed(pow * catalan(n)) - signed(catalan(2 * n + 1)));
    let under_uurr = (n >= 1).then(|| to_even.clone());
    CatalanStaircase {
        to_odd,
        to_even,
        under_uurr,
    }
}

/// Whether `sum_{i<n} C_{2i+1} C_{2n-2i-1} = C_{2n+1} - 4^n C_n` holds.
/// It always does; the check exercises the arithmetic. Requires `n >= 1`.
pub fn convolution_identity_holds(n: u64) -> bool {
    assert!(n >= 1);
    let mut lhs = BigCount::zero();
    for i in 0..n {
        lhs += catalan(2 * i + 1) * catalan(2 * n - 2 * i - 1);
    }
    let rhs = signed(catalan(2 * n + 1)) - signed(BigCount::from(4u32).pow(n as u32) * catalan(n));
    signed(lhs) == rhs
}

/// The boundary `(0^{t-1}, s)` repeated `n` times. Requires `s, t, n >= 1`.
pub fn staircase_composition(s: u64, t: u64, n: u64) -> Result<Composition> {
    if s < 1 || t < 1 || n < 1 {
        return Err(Error::InvalidParameter("staircase needs s, t, n >= 1".into()));
    }
    let mut parts = Vec::with_capacity((t * n) as usize);
    for _ in 0..n {
        parts.extend(std::iter::repeat(0).take(t as usize - 1));
        parts.push(s);
    }
    Composition::new(parts)
}

/// `(1/n) C((s+t)n - 2, tn - 1)`: paths to `(sn - 1, tn - 1)` dominated by
/// the staircase composition. Requires `s, t, n >= 1`.
pub fn staircase_count(s: u64, t: u64, n: u64) -> Result<BigCount> {
    if s < 1 || t < 1 || n < 1 {
        return Err(Error::InvalidParameter("staircase needs s, t, n >= 1".into()));
    }
    Ok(exact_div(
        binomial(((s + t) * n) as i64 - 2, (t * n) as i64 - 1),
        &BigCount::from(n),
    ))
}

/// `k C_{nk-1}`; equals [`staircase_count`]`(k, k, n)`. Requires `n, k >= 1`.
pub fn k_catalan(n: u64, k: u64) -> Result<BigCount> {
    if n < 1 || k < 1 {
        return Err(Error::InvalidParameter("need n, k >= 1".into()));
    }
    Ok(catalan(n * k - 1) * BigCount::from(k))
}

/// `(1/n) C((s+t)n, tn - 1)`: paths to `(sn + 1, tn)` strictly below the
/// staircase, which equals the dominated counts to `(sn, tn)` summed over
/// the backward shifts `0..t`. Requires `s, t, n >= 1`.
pub fn staircase_avoidance_count(s: u64, t: u64, n: u64) -> Result<BigCount> {
    if s < 1 || t < 1 || n < 1 {
        return Err(Error::InvalidParameter("staircase needs s, t, n >= 1".into()));
    }
    Ok(exact_div(
        binomial(((s + t) * n) as i64, (t * n) as i64 - 1),
        &BigCount::from(n),
    ))
}

/// `t C(sn,c-1) C(tn,c-1) - s C(sn-1,c-2) C(tn+1,c)`: staircase-avoiding
/// paths with exactly `c` up-right corners. Requires `s, t, n, c >= 1`.
pub fn staircase_avoidance_corners(s: u64, t: u64, n: u64, c: u64) -> Result<BigCount> {
    if s < 1 || t < 1 || n < 1 {
        return Err(Error::InvalidParameter("staircase needs s, t, n >= 1".into()));
    }
    if c < 1 {
        return Err(Error::InvalidParameter("corner count must be positive".into()));
    }
    let (sn, tn, c) = ((s * n) as i64, (t * n) as i64, c as i64);
    Ok(corner_difference(
        binomial(sn, c - 1) * binomial(tn, c - 1) * BigCount::from(t),
        binomial(sn - 1, c - 2) * binomial(tn + 1, c) * BigCount::from(s),
    ))
}
