//! A2 multiplicities from Kostant's formula, independent of the library.
#![allow(dead_code)]

/// The six elements of W(A2) on fundamental-weight coordinates, with signs.
pub fn a2_group() -> Vec<(i64, [[i64; 2]; 2])> {
    let s1 = [[-1, 0], [1, 1]];
    let s2 = [[1, 1], [0, -1]];
    let mul = |a: [[i64; 2]; 2], b: [[i64; 2]; 2]| {
        let mut c = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = (0..2).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        c
    };
    let id = [[1, 0], [0, 1]];
    vec![
        (1, id),
        (-1, s1),
        (-1, s2),
        (1, mul(s1, s2)),
        (1, mul(s2, s1)),
        (-1, mul(s1, mul(s2, s1))),
    ]
}

/// Kostant partition function of A2 at `aα₁ + bα₂`.
pub fn partition(a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 {
        0
    } else {
        a.min(b) + 1
    }
}

/// Kostant's multiplicity formula; weights in fundamental coordinates.
pub fn kostant_multiplicity(mu: [i64; 2], nu: [i64; 2]) -> i64 {
    a2_group()
        .into_iter()
        .map(|(sign, m)| {
            let v = [mu[0] + 1, mu[1] + 1];
            let w = [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]];
            let d = [w[0] - nu[0] - 1, w[1] - nu[1] - 1];
            // fundamental → root coordinates: ((2x+y)/3, (x+2y)/3)
            let (x, y) = (2 * d[0] + d[1], d[0] + 2 * d[1]);
            if x % 3 != 0 || y % 3 != 0 {
                return 0;
            }
            sign * partition(x / 3, y / 3)
        })
        .sum()
}

/// `Σ_ν m(ν)²` over the bounding box of `V^{(a,b)}`.
pub fn fiber_dimension_oracle(a: i64, b: i64) -> i64 {
    let mut total = 0;
    for x in -(a + 2 * b) - 2..=(2 * a + b) + 2 {
        for y in -(2 * a + b) - 2..=(a + 2 * b) + 2 {
            let m = kostant_multiplicity([a, b], [x, y]);
            total += m * m;
        }
    }
    total
}
