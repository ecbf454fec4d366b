//! Bundled root-system data driving the generic Weyl-sum engine.
//!
//! Each system is stored in integer "enumeration coordinates" (x₁, x₂):
//!
//! - A1⊕A1 lives in R² with orthogonal roots (1,1) and (1,-1);
//! - A2 and G2 live in the sum-zero plane of R³, with a point recorded by
//!   its first two Euclidean coordinates;
//! - B2 lives in R² with simple roots (-1,1) (long) and (1,0) (short); its
//!   shifted lattice has half-integer coordinates, so enumeration works in
//!   doubled coordinates u = 2x.
//!
//! For a point x the engine emits, for each Weyl element g with sign
//! sn(g) = det(g), the monomial sn(g)·w^{a·(α·gx) + b·(β·gx)} where w =
//! ζ^{1/2} and the rows α, β translate Euclidean (or doubled) coordinates
//! into twice the simple-root coordinates c₁, c₂ of gx (so that the ζ
//! exponent is a·c₁ + b·c₂, matching the specialization z₁ = az, z₂ = bz).

/// A 2×2 integer matrix acting on enumeration coordinates, with its
/// determinant recorded as the Weyl sign.
pub type WeylElement = ([[i64; 2]; 2], i64);

#[derive(Clone, Copy, Debug)]
pub struct RootSystemData {
    pub name: &'static str,
    /// Character exponent h of the matching theta block (6, 8, 10, 14).
    pub block_h: i64,
    /// The normalization 𝔥 = (1/n) Σ_{r ∈ R⁺} (r, r).
    pub coxeter_h: i64,
    /// Root vectors in enumeration coordinates (for sanity checks).
    pub roots: &'static [[i64; 2]],
    pub weyl: &'static [WeylElement],
    /// Quadratic form coefficients (c₁, c₁₂, c₂): Q(x) = c₁x₁² + c₁₂x₁x₂ + c₂x₂².
    pub quad: (i64, i64, i64),
    /// Stripped q-exponent of a point x is (Q(x) - min_norm) / den.
    pub den: i64,
    pub min_norm: i64,
    /// Membership predicate for the shifted lattice w + W_{R,ev}.
    pub membership: fn(i64, i64) -> bool,
    /// w-exponent contribution rows: exponent = a·(α·y) + b·(β·y).
    pub a_row: [i64; 2],
    pub b_row: [i64; 2],
}

impl RootSystemData {
    pub fn quad_at(&self, x1: i64, x2: i64) -> i64 {
        self.quad.0 * x1 * x1 + self.quad.1 * x1 * x2 + self.quad.2 * x2 * x2
    }
}

fn member_a1a1(x1: i64, x2: i64) -> bool {
    // w + W_ev = (1,0) + 2Z²
    x1.rem_euclid(2) == 1 && x2.rem_euclid(2) == 0
}

fn member_a2(x1: i64, x2: i64) -> bool {
    // w + W_ev: x₁ ≡ x₂ + 1 (mod 3)
    (x1 - x2).rem_euclid(3) == 1
}

fn member_b2(u1: i64, u2: i64) -> bool {
    // In doubled coordinates u = 2x: x ∈ (1/2, 3/2) + {3y : y₁ ≡ y₂ (mod 2)}
    u1.rem_euclid(6) == 1 && u2.rem_euclid(6) == 3 && (u2 - u1).rem_euclid(12) == 2
}

fn member_g2(x1: i64, x2: i64) -> bool {
    // w + W_ev: x₁ ≡ 2 (mod 4), x₂ ≡ 1 (mod 4), x₁ ≡ x₂ + 1 (mod 3)
    x1.rem_euclid(4) == 2 && x2.rem_euclid(4) == 1 && (x1 - x2).rem_euclid(3) == 1
}

/// S3 acting on sum-zero triples recorded by their first two coordinates.
const S3_MATRICES: [WeylElement; 6] = [
    ([[1, 0], [0, 1]], 1),     // Id
    ([[0, 1], [1, 0]], -1),    // (12)
    ([[-1, -1], [0, 1]], -1),  // (13)
    ([[1, 0], [-1, -1]], -1),  // (23)
    ([[-1, -1], [1, 0]], 1),   // (123)
    ([[0, 1], [-1, -1]], 1),   // (132)
];

const A1A1_WEYL: [WeylElement; 4] = [
    ([[1, 0], [0, 1]], 1),
    ([[0, -1], [-1, 0]], -1),  // reflection in the root (1,1)
    ([[0, 1], [1, 0]], -1),    // reflection in the root (1,-1)
    ([[-1, 0], [0, -1]], 1),
];

const B2_WEYL: [WeylElement; 8] = [
    ([[1, 0], [0, 1]], 1),
    ([[-1, 0], [0, 1]], -1),
    ([[1, 0], [0, -1]], -1),
    ([[-1, 0], [0, -1]], 1),
    ([[0, 1], [1, 0]], -1),
    ([[0, -1], [1, 0]], 1),
    ([[0, 1], [-1, 0]], 1),
    ([[0, -1], [-1, 0]], -1),
];

/// D6 on the sum-zero plane is {±σ : σ ∈ S3}; negation in 2D has det +1,
/// so the sign of ±σ is the parity of σ.
const G2_WEYL: [WeylElement; 12] = [
    ([[1, 0], [0, 1]], 1),
    ([[0, 1], [1, 0]], -1),
    ([[-1, -1], [0, 1]], -1),
    ([[1, 0], [-1, -1]], -1),
    ([[-1, -1], [1, 0]], 1),
    ([[0, 1], [-1, -1]], 1),
    ([[-1, 0], [0, -1]], 1),
    ([[0, -1], [-1, 0]], -1),
    ([[1, 1], [0, -1]], -1),
    ([[-1, 0], [1, 1]], -1),
    ([[1, 1], [-1, 0]], 1),
    ([[0, -1], [1, 1]], 1),
];

pub const A1A1_DATA: RootSystemData = RootSystemData {
    name: "A1A1-6",
    block_h: 6,
    coxeter_h: 2,
    roots: &[[1, 1], [1, -1], [-1, -1], [-1, 1]],
    weyl: &A1A1_WEYL,
    quad: (1, 0, 1),
    den: 4,
    min_norm: 1,
    membership: member_a1a1,
    a_row: [1, 1],
    b_row: [1, -1],
};

pub const A2_DATA: RootSystemData = RootSystemData {
    name: "A2",
    block_h: 8,
    coxeter_h: 3,
    roots: &[[1, -1], [0, 1], [1, 0], [-1, 1], [0, -1], [-1, 0]],
    weyl: &S3_MATRICES,
    quad: (1, 1, 1),
    den: 3,
    min_norm: 1,
    membership: member_a2,
    a_row: [2, 0],
    b_row: [2, 2],
};

pub const B2_DATA: RootSystemData = RootSystemData {
    name: "B2",
    block_h: 10,
    coxeter_h: 3,
    // doubled coordinates: roots 2·{(-1,1), (1,0), (0,1), (1,1)} and negatives
    roots: &[[-2, 2], [2, 0], [0, 2], [2, 2], [2, -2], [-2, 0], [0, -2], [-2, -2]],
    weyl: &B2_WEYL,
    quad: (1, 0, 1),
    den: 24,
    min_norm: 10,
    membership: member_b2,
    a_row: [0, 1],
    b_row: [1, 1],
};

pub const G2_DATA: RootSystemData = RootSystemData {
    name: "G2",
    block_h: 14,
    coxeter_h: 12,
    roots: &[
        [1, -1], [-1, 2], [0, 1], [1, 0], [2, -1], [1, 1],
        [-1, 1], [1, -2], [0, -1], [-1, 0], [-2, 1], [-1, -1],
    ],
    weyl: &G2_WEYL,
    quad: (1, 1, 1),
    den: 12,
    min_norm: 7,
    membership: member_g2,
    a_row: [4, 2],
    b_row: [2, 2],
};

pub const ALL_ROOT_SYSTEMS: [&RootSystemData; 4] = [&A1A1_DATA, &A2_DATA, &B2_DATA, &G2_DATA];

pub fn root_system(name: &str) -> Option<&'static RootSystemData> {
    ALL_ROOT_SYSTEMS.iter().copied().find(|d| d.name == name)
}
