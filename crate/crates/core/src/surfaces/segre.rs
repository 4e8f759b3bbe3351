//! The 64 lines on the Segre-Schur quartic
//! x0(x0^3 - x1^3) - x2(x2^3 - x3^3) = 0, built from exact cyclotomic line
//! equations, and their 64x64 intersection matrix.
//!
//! Sixteen lines of the first type join the zeros of x(x^3 - y^3) on the two
//! coordinate lines; forty-eight lines of the second type come from the
//! twelve automorphisms Z^k T_j of the tetrahedral group together with four
//! scale factors lambda_m each. Two distinct lines meet iff the determinant
//! of their stacked 2x4 coefficient matrices vanishes — tested exactly in
//! Q(zeta_12), no tolerance. The determinant criterion is authoritative for
//! the matrix entries; the closed-form delta expressions are implemented
//! separately as a redundant cross-check that reports (never reconciles)
//! disagreements.
//!
//! Row/column order of the matrix: indices 1..16 are first-type lines
//! L_{s,t} with s outer and t inner; indices 17..64 are second-type lines
//! L_{Z^k T_j, lambda_m} with k outer, m middle, j inner.

use crate::cyclotomic::CyclotomicNumber as Cyc;
use crate::matrix::SymmetricIntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LineTag {
    /// L_{s,t}, s and t in 1..=4.
    First { s: usize, t: usize },
    /// L_{Z^k T_j, lambda_m}, k in 0..=2, j in 1..=4, m in 0..=3.
    Second { k: usize, j: usize, m: usize },
}

/// A line in P^3 as two independent linear forms with cyclotomic
/// coefficients: the rows of the 2x4 coefficient matrix.
#[derive(Debug, Clone)]
pub struct LineInP3 {
    pub rows: [[Cyc; 4]; 2],
    pub tag: LineTag,
}

/// One element Z^k T_j of the tetrahedral group with its lambda family:
/// lambda_m = i^m * lambda_base.
#[derive(Debug, Clone)]
pub struct Automorphism {
    pub k: usize,
    pub j: usize,
    pub matrix: [[Cyc; 2]; 2],
    pub lambda_base: Cyc,
}

fn t_matrix(j: usize) -> [[Cyc; 2]; 2] {
    let xi = Cyc::xi();
    match j {
        1 => [
            [Cyc::one(), Cyc::zero()],
            [Cyc::zero(), Cyc::one()],
        ],
        2 => [
            [Cyc::from_int(-1), xi.clone()],
            [Cyc::xi_pow(2).scaled_int(2), Cyc::one()],
        ],
        3 => [
            [Cyc::from_int(-1), Cyc::xi_pow(2)],
            [xi.scaled_int(2), Cyc::one()],
        ],
        4 => [
            [Cyc::from_int(-1), Cyc::one()],
            [Cyc::from_int(2), Cyc::one()],
        ],
        _ => unreachable!("j ranges over 1..=4"),
    }
}

/// Z^k T_j as an exact 2x2 cyclotomic matrix; Z = diag(xi, 1).
fn group_element(k: usize, j: usize) -> [[Cyc; 2]; 2] {
    let t = t_matrix(j);
    let zk = Cyc::xi_pow(k as i64);
    [
        [&zk * &t[0][0], &zk * &t[0][1]],
        [t[1][0].clone(), t[1][1].clone()],
    ]
}

/// lambda_0 for Z^k T_j; the identity family carries no eta factor.
fn lambda_base(k: usize, j: usize) -> Cyc {
    let xi2k = Cyc::xi_pow(2 * k as i64);
    if j == 1 {
        xi2k
    } else {
        &xi2k * &Cyc::eta()
    }
}

/// The twelve tetrahedral automorphisms with their lambda families.
pub fn automorphism_table() -> Vec<Automorphism> {
    let mut out = Vec::with_capacity(12);
    for j in 1..=4 {
        for k in 0..=2 {
            out.push(Automorphism {
                k,
                j,
                matrix: group_element(k, j),
                lambda_base: lambda_base(k, j),
            });
        }
    }
    out
}

/// Entries of the tuple a = (0, 1, xi, xi^2), 1-based.
fn first_type_coefficient(i: usize) -> Cyc {
    match i {
        1 => Cyc::zero(),
        2 => Cyc::one(),
        3 => Cyc::xi(),
        4 => Cyc::xi_pow(2),
        _ => unreachable!("first-type indices range over 1..=4"),
    }
}

fn first_type_line(s: usize, t: usize) -> LineInP3 {
    let minus_one = Cyc::from_int(-1);
    LineInP3 {
        rows: [
            [
                minus_one.clone(),
                first_type_coefficient(s),
                Cyc::zero(),
                Cyc::zero(),
            ],
            [
                Cyc::zero(),
                Cyc::zero(),
                minus_one,
                first_type_coefficient(t),
            ],
        ],
        tag: LineTag::First { s, t },
    }
}

fn second_type_line(k: usize, j: usize, m: usize) -> LineInP3 {
    let gamma = group_element(k, j);
    let lambda = &Cyc::i_pow(m as i64) * &lambda_base(k, j);
    let minus_one = Cyc::from_int(-1);
    LineInP3 {
        rows: [
            [
                &lambda * &gamma[0][0],
                &lambda * &gamma[0][1],
                minus_one.clone(),
                Cyc::zero(),
            ],
            [
                &lambda * &gamma[1][0],
                &lambda * &gamma[1][1],
                Cyc::zero(),
                minus_one,
            ],
        ],
        tag: LineTag::Second { k, j, m },
    }
}

/// All 64 lines in matrix order.
pub fn build_segre_lines() -> Vec<LineInP3> {
    let mut lines = Vec::with_capacity(64);
    for s in 1..=4 {
        for t in 1..=4 {
            lines.push(first_type_line(s, t));
        }
    }
    for k in 0..=2 {
        for m in 0..=3 {
            for j in 1..=4 {
                lines.push(second_type_line(k, j, m));
            }
        }
    }
    lines
}

/// 1-based matrix index of a line tag.
pub fn line_index(tag: LineTag) -> usize {
    match tag {
        LineTag::First { s, t } => (s - 1) * 4 + t,
        LineTag::Second { k, j, m } => 16 + k * 16 + m * 4 + j,
    }
}

fn tag_of(index: usize) -> LineTag {
    assert!((1..=64).contains(&index));
    if index <= 16 {
        LineTag::First {
            s: (index - 1) / 4 + 1,
            t: (index - 1) % 4 + 1,
        }
    } else {
        let off = index - 17;
        LineTag::Second {
            k: off / 16,
            m: (off % 16) / 4,
            j: off % 4 + 1,
        }
    }
}

fn det2(a: &Cyc, b: &Cyc, c: &Cyc, d: &Cyc) -> Cyc {
    &(a * d) - &(b * c)
}

fn det3(m: &[[Cyc; 3]; 3]) -> Cyc {
    let c0 = &m[0][0] * &det2(&m[1][1], &m[1][2], &m[2][1], &m[2][2]);
    let c1 = &m[0][1] * &det2(&m[1][0], &m[1][2], &m[2][0], &m[2][2]);
    let c2 = &m[0][2] * &det2(&m[1][0], &m[1][1], &m[2][0], &m[2][1]);
    &(&c0 - &c1) + &c2
}

fn det4(m: &[[Cyc; 4]; 4]) -> Cyc {
    let mut acc = Cyc::zero();
    for col in 0..4 {
        if m[0][col].is_zero() {
            continue;
        }
        let mut minor = [
            [Cyc::zero(), Cyc::zero(), Cyc::zero()],
            [Cyc::zero(), Cyc::zero(), Cyc::zero()],
            [Cyc::zero(), Cyc::zero(), Cyc::zero()],
        ];
        for r in 1..4 {
            let mut cc = 0;
            for c in 0..4 {
                if c == col {
                    continue;
                }
                minor[r - 1][cc] = m[r][c].clone();
                cc += 1;
            }
        }
        let term = &m[0][col] * &det3(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Determinant of the stacked 2x4 coefficient matrices; the two lines meet
/// iff it vanishes.
pub fn intersection_determinant(l1: &LineInP3, l2: &LineInP3) -> Cyc {
    let stacked = [
        l1.rows[0].clone(),
        l1.rows[1].clone(),
        l2.rows[0].clone(),
        l2.rows[1].clone(),
    ];
    det4(&stacked)
}

/// Whether two lines share the same row space, i.e. are the same line.
pub fn same_line(l1: &LineInP3, l2: &LineInP3) -> bool {
    let rows = [
        l1.rows[0].clone(),
        l1.rows[1].clone(),
        l2.rows[0].clone(),
        l2.rows[1].clone(),
    ];
    rank_of_rows(&rows) == 2
}

/// Rank by division-free elimination; valid over an integral domain.
fn rank_of_rows(rows: &[[Cyc; 4]]) -> usize {
    let mut w: Vec<Vec<Cyc>> = rows.iter().map(|r| r.to_vec()).collect();
    let nrows = w.len();
    let mut rank = 0;
    for col in 0..4 {
        let Some(pivot) = (rank..nrows).find(|&r| !w[r][col].is_zero()) else {
            continue;
        };
        w.swap(rank, pivot);
        let (pivot_row, rest) = {
            let (head, tail) = w.split_at_mut(rank + 1);
            (&head[rank], tail)
        };
        for row in rest {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for c in 0..4 {
                row[c] = &(&row[c] * &pivot_row[col]) - &(&pivot_row[c] * &factor);
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Intersection number (0 or 1) of two distinct lines via the determinant
/// criterion. Distinctness is a precondition.
pub fn lines_intersect(l1: &LineInP3, l2: &LineInP3) -> i64 {
    debug_assert!(
        !same_line(l1, l2),
        "lines_intersect requires distinct lines: {:?} and {:?}",
        l1.tag,
        l2.tag
    );
    intersection_determinant(l1, l2).is_zero() as i64
}

/// Intersection matrix of the 64 lines: diagonal -2 (lines on a quartic K3
/// are (-2)-curves), off-diagonal entries from the determinant criterion.
pub fn build_segre_matrix() -> SymmetricIntMatrix {
    let lines = build_segre_lines();
    let n = lines.len();
    let mut rows = vec![vec![0i64; n]; n];
    for p in 0..n {
        rows[p][p] = -2;
        for q in p + 1..n {
            let e = lines_intersect(&lines[p], &lines[q]);
            rows[p][q] = e;
            rows[q][p] = e;
        }
    }
    SymmetricIntMatrix::from_rows(rows).expect("construction is symmetric")
}

fn delta_int(x: i64) -> i64 {
    (x == 0) as i64
}

fn delta_mod3(x: i64) -> i64 {
    (x.rem_euclid(3) == 0) as i64
}

fn delta_cyc(x: &Cyc) -> i64 {
    x.is_zero() as i64
}

/// The closed-form delta expressions for the entry at (p, q), evaluated in
/// exact cyclotomic arithmetic. Implemented independently of the determinant
/// test as a cross-check.
pub fn segre_entry_closed_form(p: usize, q: usize) -> i64 {
    assert_ne!(p, q, "closed form applies to distinct lines");
    let (tp, tq) = (tag_of(p), tag_of(q));
    match (tp, tq) {
        (LineTag::First { s, t }, LineTag::First { s: s2, t: t2 }) => {
            delta_int(s as i64 - s2 as i64) + delta_int(t as i64 - t2 as i64)
        }
        (LineTag::First { s, t }, LineTag::Second { k, j, m })
        | (LineTag::Second { k, j, m }, LineTag::First { s, t }) => {
            first_second_closed_form(s as i64, t as i64, k as i64, j as i64, m as i64)
        }
        (LineTag::Second { k, j, m }, LineTag::Second { k: k2, j: j2, m: m2 }) => {
            second_second_closed_form(
                k as i64, j as i64, m as i64, k2 as i64, j2 as i64, m2 as i64,
            )
        }
    }
}

fn first_second_closed_form(s: i64, t: i64, k: i64, j: i64, _m: i64) -> i64 {
    if j != 1 && s != 1 && t != 1 {
        let expr = &(&(&-&Cyc::xi_pow(2 * k + t - 1) + &Cyc::xi_pow(j)) - &Cyc::xi_pow(s - 1))
            - &Cyc::xi_pow(s + t + 2 * k - j - 2).scaled_int(2);
        delta_cyc(&expr)
    } else if j != 1 && t != 1 && s == 1 {
        delta_mod3(t + 2 * k - j - 1)
    } else if j != 1 && s != 1 && t == 1 {
        delta_mod3(s - 1 - j)
    } else if j == 1 && s != 1 && t != 1 {
        delta_mod3(s + k - t)
    } else {
        delta_int(s - 1) * delta_int(j - 1) * delta_int(t - 1)
    }
}

fn second_second_closed_form(k: i64, j: i64, m: i64, k2: i64, j2: i64, m2: i64) -> i64 {
    if j != 1 && j2 != 1 {
        let w = Cyc::i_pow(m2 - m);
        let term1 = &(&w - &Cyc::from_int(3)) * &Cyc::xi_pow(2 * k);
        let term2 = &(&w * &(&Cyc::one() - &w.scaled_int(3))) * &Cyc::xi_pow(2 * k2);
        let bracket = &Cyc::xi_pow(2 * k - j + j2) + &Cyc::xi_pow(2 * k2 - j2 + j);
        let term3 = &w.scaled_int(2) * &bracket;
        delta_cyc(&(&(&term1 + &term2) + &term3))
    } else if j == 1 && j2 != 1 {
        let eta = Cyc::eta();
        let term1 = &Cyc::i_pow(2 * m) * &Cyc::xi_pow(2 * k);
        let term2 = &(&(&Cyc::i_pow(m) * &Cyc::i_pow(m2)) * &Cyc::xi_pow(2 * k2)) * &eta;
        let term3 = &(&(&Cyc::i_pow(m2) * &eta) * &Cyc::i_pow(m)) * &Cyc::xi_pow(2 * k);
        let term4 = (&(&Cyc::i_pow(2 * m2) * &eta.pow(2)) * &Cyc::xi_pow(2 * k2)).scaled_int(3);
        delta_cyc(&(&term1 - &term2 + &term3 - &term4))
    } else if j != 1 && j2 == 1 {
        second_second_closed_form(k2, j2, m2, k, j, m)
    } else {
        delta_int(m - m2)
    }
}

/// One disagreement between the determinant criterion and the closed-form
/// expressions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaDiscrepancy {
    pub p: usize,
    pub q: usize,
    pub determinant_entry: i64,
    pub closed_form_entry: i64,
}

/// Compare the closed-form expression against the determinant criterion on
/// all unordered pairs; any disagreements are reported, with the determinant
/// entry remaining authoritative.
pub fn closed_form_discrepancies(lines: &[LineInP3]) -> Vec<FormulaDiscrepancy> {
    let mut out = Vec::new();
    for p in 1..=lines.len() {
        for q in p + 1..=lines.len() {
            let det_entry = lines_intersect(&lines[p - 1], &lines[q - 1]);
            let formula_entry = segre_entry_closed_form(p, q);
            if det_entry != formula_entry {
                out.push(FormulaDiscrepancy {
                    p,
                    q,
                    determinant_entry: det_entry,
                    closed_form_entry: formula_entry,
                });
            }
        }
    }
    out
}

/// Two points spanning the line: a basis of the null space of the 2x4
/// coefficient matrix, computed division-free from 2x2 minors.
fn parametrize(line: &LineInP3) -> ([Cyc; 4], [Cyc; 4]) {
    let r1 = &line.rows[0];
    let r2 = &line.rows[1];
    let minor = |a: usize, b: usize| det2(&r1[a], &r1[b], &r2[a], &r2[b]);
    let mut pivots = None;
    'outer: for c1 in 0..4 {
        for c2 in c1 + 1..4 {
            if !minor(c1, c2).is_zero() {
                pivots = Some((c1, c2));
                break 'outer;
            }
        }
    }
    let (c1, c2) = pivots.expect("line rows are independent");
    let d = minor(c1, c2);
    let free: Vec<usize> = (0..4).filter(|&c| c != c1 && c != c2).collect();
    let mut points = Vec::with_capacity(2);
    for &f in &free {
        let mut v = [Cyc::zero(), Cyc::zero(), Cyc::zero(), Cyc::zero()];
        v[f] = d.clone();
        v[c1] = &(&r1[c2] * &r2[f]) - &(&r1[f] * &r2[c2]);
        v[c2] = &(&r1[f] * &r2[c1]) - &(&r1[c1] * &r2[f]);
        points.push(v);
    }
    let q = points.pop().expect("two free columns");
    let p = points.pop().expect("two free columns");
    (p, q)
}

/// Homogeneous polynomial in (u, v) with cyclotomic coefficients; index is
/// the power of u.
#[derive(Clone)]
struct HomogeneousPoly {
    coeffs: Vec<Cyc>,
}

impl HomogeneousPoly {
    fn linear(pu: &Cyc, pv: &Cyc) -> Self {
        Self {
            coeffs: vec![pv.clone(), pu.clone()],
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut coeffs = vec![Cyc::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Self { coeffs }
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self {
            coeffs: vec![Cyc::one()],
        };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let get = |p: &Self, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(Cyc::zero);
        Self {
            coeffs: (0..len)
                .map(|i| {
                    let (a, b) = (get(self, i), get(other, i));
                    if negate {
                        &a - &b
                    } else {
                        &a + &b
                    }
                })
                .collect(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Cyc::is_zero)
    }
}

/// Substitute a parametrization of the line into
/// x0(x0^3 - x1^3) - x2(x2^3 - x3^3) and test for the zero polynomial.
pub fn line_on_quartic(line: &LineInP3) -> bool {
    let (p, q) = parametrize(line);
    let x: Vec<HomogeneousPoly> = (0..4).map(|i| HomogeneousPoly::linear(&p[i], &q[i])).collect();
    // x0^4 - x0 x1^3 - x2^4 + x2 x3^3
    x[0].pow(4)
        .sub(&x[0].mul(&x[1].pow(3)))
        .sub(&x[2].pow(4))
        .add(&x[2].mul(&x[3].pow(3)))
        .is_zero()
}

/// The twenty named lines spanning the Neron-Severi lattice: ten of the
/// first type and ten of the second, in the order they are usually listed.
pub fn segre_named_sublattice() -> Vec<usize> {
    let mut v = Vec::with_capacity(20);
    for t in 1..=4 {
        v.push(line_index(LineTag::First { s: 1, t }));
    }
    for t in 1..=3 {
        v.push(line_index(LineTag::First { s: 2, t }));
    }
    for t in 1..=3 {
        v.push(line_index(LineTag::First { s: 3, t }));
    }
    for (k, j, m) in [
        (1, 1, 0),
        (2, 1, 0),
        (1, 2, 0),
        (2, 2, 0),
        (1, 3, 0),
        (2, 3, 0),
        (1, 1, 1),
        (2, 1, 1),
        (1, 2, 1),
        (2, 2, 1),
    ] {
        v.push(line_index(LineTag::Second { k, j, m }));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_one_is_the_two_coordinate_planes() {
        let lines = build_segre_lines();
        let l1 = &lines[0];
        assert_eq!(l1.tag, LineTag::First { s: 1, t: 1 });
        let minus_one = Cyc::from_int(-1);
        assert_eq!(l1.rows[0], [minus_one.clone(), Cyc::zero(), Cyc::zero(), Cyc::zero()]);
        assert_eq!(l1.rows[1], [Cyc::zero(), Cyc::zero(), minus_one, Cyc::zero()]);
    }

    #[test]
    fn index_and_tag_are_inverse() {
        for idx in 1..=64 {
            assert_eq!(line_index(tag_of(idx)), idx);
        }
        let lines = build_segre_lines();
        for (pos, line) in lines.iter().enumerate() {
            assert_eq!(line_index(line.tag), pos + 1);
        }
    }

    #[test]
    fn lambda_families_satisfy_the_quartic_condition() {
        // lambda^4 * phi(a, c) = phi(1, 0) = 1 with phi(x, y) = x^4 - x y^3,
        // for every automorphism and every member i^m lambda_0 of its family.
        for auto in automorphism_table() {
            let a = &auto.matrix[0][0];
            let c = &auto.matrix[1][0];
            let phi = &a.pow(4) - &(a * &c.pow(3));
            for m in 0..4 {
                let lambda = &Cyc::i_pow(m) * &auto.lambda_base;
                assert_eq!(
                    &lambda.pow(4) * &phi,
                    Cyc::one(),
                    "Z^{}T_{} m={m}",
                    auto.k,
                    auto.j
                );
            }
        }
    }

    #[test]
    fn automorphisms_are_pairwise_non_proportional() {
        let table = automorphism_table();
        let flat: Vec<[Cyc; 4]> = table
            .iter()
            .map(|a| {
                [
                    a.matrix[0][0].clone(),
                    a.matrix[0][1].clone(),
                    a.matrix[1][0].clone(),
                    a.matrix[1][1].clone(),
                ]
            })
            .collect();
        for x in 0..flat.len() {
            for y in x + 1..flat.len() {
                let proportional = (0..4).all(|i| {
                    (i + 1..4).all(|j| {
                        (&(&flat[x][i] * &flat[y][j]) - &(&flat[x][j] * &flat[y][i])).is_zero()
                    })
                });
                assert!(!proportional, "{x} vs {y}");
            }
        }
    }

    #[test]
    fn second_type_rows_match_their_reduced_form() {
        // For j != 1 the line L_{Z^k T_j, lambda_m} has rows
        // (-i^m eta, i^m eta xi^{j-1}, -1, 0) and
        // (2 i^m eta xi^{2k+1-j}, i^m eta xi^{2k}, 0, -1).
        for k in 0..=2i64 {
            for j in 2..=4i64 {
                for m in 0..=3i64 {
                    let line = second_type_line(k as usize, j as usize, m as usize);
                    let im_eta = &Cyc::i_pow(m) * &Cyc::eta();
                    let expect0 = [
                        -&im_eta,
                        &im_eta * &Cyc::xi_pow(j - 1),
                        Cyc::from_int(-1),
                        Cyc::zero(),
                    ];
                    let expect1 = [
                        (&im_eta * &Cyc::xi_pow(2 * k + 1 - j)).scaled_int(2),
                        &im_eta * &Cyc::xi_pow(2 * k),
                        Cyc::zero(),
                        Cyc::from_int(-1),
                    ];
                    assert_eq!(line.rows[0], expect0, "k={k} j={j} m={m} row 0");
                    assert_eq!(line.rows[1], expect1, "k={k} j={j} m={m} row 1");
                }
            }
        }
    }

    #[test]
    fn worked_determinant_example() {
        // det of L_{1,t} stacked over L_{Z^k T_j, lambda_m} (t, j != 1)
        // equals i^m eta (xi^{j-1} - xi^{2k+t-2}).
        for t in 2..=4i64 {
            for k in 0..=2i64 {
                for j in 2..=4i64 {
                    for m in 0..=3i64 {
                        let f = first_type_line(1, t as usize);
                        let s = second_type_line(k as usize, j as usize, m as usize);
                        let det = intersection_determinant(&f, &s);
                        let expect = &(&Cyc::i_pow(m) * &Cyc::eta())
                            * &(&Cyc::xi_pow(j - 1) - &Cyc::xi_pow(2 * k + t - 2));
                        assert_eq!(det, expect, "t={t} k={k} j={j} m={m}");
                        // vanishing iff t + 2k - j - 1 = 0 mod 3
                        assert_eq!(
                            det.is_zero(),
                            (t + 2 * k - j - 1).rem_euclid(3) == 0
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn first_type_intersections_share_an_index() {
        let l12 = first_type_line(1, 2);
        let l13 = first_type_line(1, 3);
        let l34 = first_type_line(3, 4);
        assert_eq!(lines_intersect(&l12, &l13), 1);
        assert_eq!(lines_intersect(&l12, &l34), 0);
    }

    #[test]
    fn all_lines_lie_on_the_quartic() {
        for line in build_segre_lines() {
            assert!(line_on_quartic(&line), "{:?}", line.tag);
        }
    }

    #[test]
    fn all_lines_are_pairwise_distinct() {
        let lines = build_segre_lines();
        for p in 0..lines.len() {
            for q in p + 1..lines.len() {
                assert!(!same_line(&lines[p], &lines[q]), "{:?} vs {:?}", lines[p].tag, lines[q].tag);
            }
        }
    }

    #[test]
    fn matrix_shape_diagonal_and_entries() {
        let m = build_segre_matrix();
        assert_eq!(m.dim(), 64);
        for i in 1..=64 {
            assert_eq!(m.get(i, i), -2);
            for j in 1..=64 {
                if i != j {
                    assert!(m.get(i, j) == 0 || m.get(i, j) == 1);
                }
            }
        }
    }

    #[test]
    fn matrix_rank_is_twenty() {
        let m = build_segre_matrix();
        assert_eq!(crate::bareiss::rank_exact::<i64>(m.as_square()).unwrap(), 20);
    }

    #[test]
    fn named_sublattice_has_discriminant_minus_48() {
        let m = build_segre_matrix();
        let basis = segre_named_sublattice();
        assert_eq!(basis.len(), 20);
        let gram = m.principal(&basis).unwrap();
        assert_eq!(
            crate::bareiss::det_fraction_free::<i64>(&gram).unwrap(),
            -48
        );
        let inv = crate::bareiss::lattice_invariants::<i64>(&m, &basis).unwrap();
        assert_eq!(inv.rank, 20);
        assert_eq!(inv.dimension, 64);
        assert_eq!(inv.discriminant, Some(-48));
        // basis of the wrong size carries no discriminant
        let partial = crate::bareiss::lattice_invariants::<i64>(&m, &basis[..10]).unwrap();
        assert_eq!(partial.discriminant, None);
    }

    #[test]
    fn closed_form_agrees_with_the_determinant_criterion() {
        let lines = build_segre_lines();
        let discrepancies = closed_form_discrepancies(&lines);
        assert!(
            discrepancies.is_empty(),
            "{} disagreements, first: {:?}",
            discrepancies.len(),
            discrepancies.first()
        );
    }
}
