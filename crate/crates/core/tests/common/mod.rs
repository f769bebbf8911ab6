//! Independent oracles shared by the integration tests. None of these call
//! into the rectangle scanner, the strand builder or the rank routines.

#![allow(dead_code)]

use gridfloer::{GridDiagram, HalfInt, LaurentPolynomial};

pub fn unknot2() -> GridDiagram {
    GridDiagram::new(2, &[0, 1], &[1, 0]).unwrap()
}

pub fn trefoil() -> GridDiagram {
    GridDiagram::new(5, &[0, 1, 2, 3, 4], &[2, 3, 4, 0, 1]).unwrap()
}

pub fn figure_eight() -> GridDiagram {
    GridDiagram::new(6, &[3, 2, 0, 1, 4, 5], &[1, 4, 3, 5, 0, 2]).unwrap()
}

/// The twist knot 5_2.
pub fn five_two() -> GridDiagram {
    GridDiagram::new(7, &[1, 3, 4, 2, 5, 6, 0], &[4, 5, 0, 6, 1, 3, 2]).unwrap()
}

/// The (2, 5) torus knot.
pub fn torus_2_5() -> GridDiagram {
    GridDiagram::new(7, &[0, 1, 2, 3, 4, 5, 6], &[2, 3, 4, 5, 6, 0, 1]).unwrap()
}

pub fn two_component() -> GridDiagram {
    GridDiagram::new(4, &[0, 1, 2, 3], &[1, 0, 3, 2]).unwrap()
}

/// Every valid diagram of size `n`.
pub fn all_grids(n: usize) -> Vec<GridDiagram> {
    let perms: Vec<Vec<usize>> = permutations(n);
    let mut out = Vec::new();
    for o in &perms {
        for x in &perms {
            if (0..n).all(|c| o[c] != x[c]) {
                out.push(GridDiagram::from_rows(o, x).unwrap());
            }
        }
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// One rectangle found by brute force over corners: lower-left lattice point,
/// width, height, emptiness and the marking counts inside.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct OracleRect {
    pub lower_left: (usize, usize),
    pub upper_right: (usize, usize),
    pub empty: bool,
    pub o_count: Vec<u8>,
    pub x_count: Vec<u8>,
}

/// All rectangles from `x` to `y`, found by trying every lower-left corner
/// and every width and height on the torus.
pub fn brute_force_rectangles(g: &GridDiagram, x: &[usize], y: &[usize]) -> Vec<OracleRect> {
    let n = g.size();
    let has = |p: &[usize], c: usize, r: usize| p[c % n] == r % n;
    let mut out = Vec::new();
    for c0 in 0..n {
        for r0 in 0..n {
            for w in 1..n {
                for h in 1..n {
                    let (c1, r1) = ((c0 + w) % n, (r0 + h) % n);
                    if !(has(x, c0, r0) && has(x, c1, r1) && has(y, c1, r0) && has(y, c0, r1)) {
                        continue;
                    }
                    if (0..n).any(|c| c != c0 && c != c1 && x[c] != y[c]) {
                        continue;
                    }
                    if x[c0] == y[c0] || x[c1] == y[c1] {
                        continue;
                    }
                    // interior lattice points are (c0+a, r0+b), 0<a<w, 0<b<h
                    let mut empty = true;
                    for a in 1..w {
                        for b in 1..h {
                            let (c, r) = ((c0 + a) % n, (r0 + b) % n);
                            if x[c] == r || y[c] == r {
                                empty = false;
                            }
                        }
                    }
                    let inside = |c: usize, r: usize| {
                        (c + n - c0) % n < w && (r + n - r0) % n < h
                    };
                    let o_count = (0..n).map(|c| inside(c, g.o_rows()[c]) as u8).collect();
                    let x_count = (0..n).map(|c| inside(c, g.x_rows()[c]) as u8).collect();
                    out.push(OracleRect {
                        lower_left: (c0, r0),
                        upper_right: (c1, r1),
                        empty,
                        o_count,
                        x_count,
                    });
                }
            }
        }
    }
    out.sort();
    out
}

/// Gradings straight from the J-formulas, in doubled coordinates.
pub fn oracle_gradings(g: &GridDiagram, x: &[usize]) -> (i64, HalfInt) {
    let n = g.size() as i64;
    let pts: Vec<(i64, i64)> = x.iter().enumerate().map(|(c, &r)| (2 * c as i64, 2 * r as i64)).collect();
    let mk = |rows: &[usize]| -> Vec<(i64, i64)> {
        rows.iter()
            .enumerate()
            .map(|(c, &r)| (2 * c as i64 + 1, 2 * r as i64 + 1))
            .collect()
    };
    let (os, xs) = (mk(g.o_rows()), mk(g.x_rows()));
    let i = |a: &[(i64, i64)], b: &[(i64, i64)]| -> i64 {
        a.iter()
            .map(|p| b.iter().filter(|q| p.0 < q.0 && p.1 < q.1).count() as i64)
            .sum()
    };
    // 2J
    let j2 = |a: &[(i64, i64)], b: &[(i64, i64)]| i(a, b) + i(b, a);
    let m2 = j2(&pts, &pts) - 2 * j2(&pts, &os) + j2(&os, &os) + 2;
    // 4A = 2*2J(x, X-O) - 2J(X+O, X-O) - 2(n-1)
    let a4 = 2 * (j2(&pts, &xs) - j2(&pts, &os)) - (j2(&xs, &xs) - j2(&os, &os)) - 2 * (n - 1);
    assert!(m2 % 2 == 0 && a4 % 2 == 0);
    (m2 / 2, HalfInt::from_doubled(a4 / 2))
}

/// Homology of C~ by dense elimination over the full n! x n! matrix built
/// from [`brute_force_rectangles`] on all generator pairs differing by a
/// transposition.
pub fn dense_tilde_homology(g: &GridDiagram) -> Vec<(i64, HalfInt, u64)> {
    let n = g.size();
    let gens = permutations(n);
    let index: std::collections::HashMap<Vec<usize>, usize> =
        gens.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let grades: Vec<(i64, HalfInt)> = gens.iter().map(|x| oracle_gradings(g, x)).collect();
    let total = gens.len();
    let mut matrix = vec![vec![false; total]; total];
    for (xi, x) in gens.iter().enumerate() {
        for a in 0..n {
            for b in a + 1..n {
                let mut y = x.clone();
                y.swap(a, b);
                let count = brute_force_rectangles(g, x, &y)
                    .iter()
                    .filter(|r| r.empty && r.o_count.iter().chain(&r.x_count).all(|&v| v == 0))
                    .count();
                if count % 2 == 1 {
                    matrix[index[&y]][xi] = true;
                }
            }
        }
    }
    // Rank of the restriction of d to columns of each bigrading.
    let mut bigradings: Vec<(i64, HalfInt)> = grades.clone();
    bigradings.sort();
    bigradings.dedup();
    let rank_of_columns = |cols: &[usize]| -> usize {
        let mut rows: Vec<Vec<bool>> = (0..total)
            .map(|r| cols.iter().map(|&c| matrix[r][c]).collect())
            .collect();
        dense_rank(&mut rows, cols.len())
    };
    let mut out = Vec::new();
    for &(m, s) in &bigradings {
        let here: Vec<usize> = (0..total).filter(|&i| grades[i] == (m, s)).collect();
        let above: Vec<usize> = (0..total).filter(|&i| grades[i] == (m + 1, s)).collect();
        let h = here.len() - rank_of_columns(&here) - rank_of_columns(&above);
        if h > 0 {
            out.push((m, s, h as u64));
        }
    }
    out
}

pub fn dense_rank(rows: &mut [Vec<bool>], cols: usize) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        if let Some(p) = (rank..rows.len()).find(|&r| rows[r][c]) {
            rows.swap(rank, p);
            for r in 0..rows.len() {
                if r != rank && rows[r][c] {
                    let pivot = rows[rank].clone();
                    for (a, b) in rows[r].iter_mut().zip(pivot) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Number of components found by walking the diagram square by square:
/// along a column from its O to its X, then along that row to its O.
pub fn traced_components(g: &GridDiagram) -> usize {
    let n = g.size();
    let (o, x) = (g.o_rows(), g.x_rows());
    let mut visited = vec![false; n];
    let mut comps = 0;
    for start in 0..n {
        if visited[start] {
            continue;
        }
        comps += 1;
        let mut c = start;
        loop {
            visited[c] = true;
            let mut r = o[c];
            while r != x[c] {
                r = if x[c] > r { r + 1 } else { r - 1 };
            }
            let target = (0..n).find(|&d| o[d] == r).unwrap();
            while c != target {
                c = if target > c { c + 1 } else { c - 1 };
            }
            if c == start {
                break;
            }
        }
    }
    comps
}

/// Winding number of the oriented diagram around the lattice point (i, j),
/// counted by vertical segments crossing the rightward ray from it.
fn winding(g: &GridDiagram, i: usize, j: usize) -> i64 {
    let mut w = 0;
    for c in i..g.size() {
        let (o, x) = (g.o_rows()[c], g.x_rows()[c]);
        if o.min(x) < j && j <= o.max(x) {
            w += if x > o { 1 } else { -1 };
        }
    }
    w
}

type Poly = Vec<i128>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn pmul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn psub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(out)
}

/// Exact division in Z[t]; panics if the remainder is nonzero.
fn pdiv(a: &Poly, b: &Poly) -> Poly {
    let a = trim(a.clone());
    let b = trim(b.clone());
    if a.is_empty() {
        return vec![];
    }
    assert!(!b.is_empty());
    let mut rem = a;
    let mut q = vec![0; rem.len().saturating_sub(b.len()) + 1];
    while rem.len() >= b.len() && !rem.is_empty() {
        let shift = rem.len() - b.len();
        let lead = *rem.last().unwrap();
        let bl = *b.last().unwrap();
        assert_eq!(lead % bl, 0, "inexact division");
        let f = lead / bl;
        q[shift] = f;
        let mut sub = vec![0; shift];
        sub.extend(b.iter().map(|v| v * f));
        rem = psub(&rem, &sub);
    }
    assert!(rem.is_empty(), "nonzero remainder");
    trim(q)
}

/// Alexander polynomial from the determinant of `t^(-winding)` over the
/// `n x n` lattice points, divided by `(1 - t)^(n-1)`, via fraction-free
/// elimination over Z[t].
pub fn winding_alexander(g: &GridDiagram) -> LaurentPolynomial {
    let n = g.size();
    let w: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| winding(g, i, j)).collect()).collect();
    let top = w.iter().flatten().copied().max().unwrap();
    let mut m: Vec<Vec<Poly>> = w
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| {
                    let mut p = vec![0; (top - v) as usize + 1];
                    p[(top - v) as usize] = 1;
                    p
                })
                .collect()
        })
        .collect();
    let mut sign = 1i128;
    let mut prev: Poly = vec![1];
    let mut det: Poly = vec![];
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_empty()) else {
            det = vec![];
            break;
        };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = psub(&pmul(&m[i][j], &m[k][k]), &pmul(&m[i][k], &m[k][j]));
                m[i][j] = pdiv(&num, &prev);
            }
        }
        prev = m[k][k].clone();
        det = m[k][k].clone();
    }
    let det: Poly = det.iter().map(|v| v * sign).collect();
    let mut one_minus_t: Poly = vec![1];
    for _ in 0..n - 1 {
        one_minus_t = pmul(&one_minus_t, &vec![1, -1]);
    }
    let quotient = pdiv(&det, &one_minus_t);
    LaurentPolynomial::from_terms(
        quotient
            .iter()
            .enumerate()
            .map(|(e, &c)| (e as i64, i64::try_from(c).unwrap())),
    )
    .symmetrized()
}
