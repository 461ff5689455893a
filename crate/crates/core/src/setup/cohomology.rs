//! The two tables of `(𝔤,K)`-cohomology dimensions in degrees `d−1, d, d+1`
//! attached to the short exact sequences `0 → D → I₊ → J → 0` and
//! `0 → J → I₋ → D → 0`, where `D = D₊ ⊕ D₋`.

/// Rows `(h^q(D), h^q(I₊), h^q(J))` for `q = d−1, d, d+1`.
pub const LEFT_TABLE: [[u32; 3]; 3] = [[0, 0, 1], [2, 1, 0], [0, 1, 1]];
/// Rows `(h^q(J), h^q(I₋), h^q(D))` for `q = d−1, d, d+1`.
pub const RIGHT_TABLE: [[u32; 3]; 3] = [[1, 1, 0], [0, 1, 2], [1, 0, 0]];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResidualDegrees {
    pub nonvanishing_image: usize,
    pub vanishing_image: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohTable {
    pub d: usize,
    pub left: [[u32; 3]; 3],
    pub right: [[u32; 3]; 3],
    /// `h^d(D₊) = h^d(D₋)`.
    pub per_summand_middle: u32,
}

impl CohTable {
    pub fn new(d: usize) -> Self {
        Self {
            d,
            left: LEFT_TABLE,
            right: RIGHT_TABLE,
            per_summand_middle: 1,
        }
    }

    /// The degrees `q` labelling the rows.
    pub fn degrees(&self) -> [usize; 3] {
        [self.d - 1, self.d, self.d + 1]
    }

    pub fn residual_degrees(&self) -> ResidualDegrees {
        ResidualDegrees {
            nonvanishing_image: self.d - 1,
            vanishing_image: self.d + 1,
        }
    }
}

/// Both tables have zero alternating sum and both admit the rank
/// assignment of an exact sequence.
pub fn les_consistency(table: &CohTable) -> bool {
    [&table.left, &table.right]
        .into_iter()
        .all(|rows| euler_sum(table.d, rows) == 0 && forced_ranks_close(rows))
}

fn euler_sum(d: usize, rows: &[[u32; 3]; 3]) -> i64 {
    rows.iter()
        .enumerate()
        .map(|(k, [a, b, c])| {
            let term = *a as i64 - *b as i64 + *c as i64;
            if (d - 1 + k) % 2 == 0 {
                term
            } else {
                -term
            }
        })
        .sum()
}

/// In `0 → V₀ → V₁ → … → V_m → 0` the rank of each map is forced:
/// `r_i = dim V_i − r_{i−1}`.
fn forced_ranks_close(rows: &[[u32; 3]; 3]) -> bool {
    let mut incoming: i64 = 0;
    for dim in rows.iter().flatten() {
        let outgoing = *dim as i64 - incoming;
        if outgoing < 0 {
            return false;
        }
        incoming = outgoing;
    }
    incoming == 0
}
