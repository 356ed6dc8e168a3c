//! Symplectic images of the order-6 genus-2 normalizer generators, on the
//! homology basis `[ab], [bc], [de], [ef]`.

use serde::Serialize;
use serde_json::Value;

use crate::arith_perm::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// A relation of the final presentation.
    Relation,
    /// Preservation of the intersection form.
    Symplectic,
    /// An alternative reading of a lifted-relation exponent.
    AlternativeReading,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixCheck {
    pub relation: String,
    pub kind: CheckKind,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixVerification {
    pub checks: Vec<MatrixCheck>,
}

impl MatrixVerification {
    /// Every relation and symplectic check holds.
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.kind != CheckKind::AlternativeReading)
            .all(|c| c.holds)
    }

    pub fn check(&self, relation: &str) -> Option<&MatrixCheck> {
        self.checks.iter().find(|c| c.relation == relation)
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({ "passed": self.passed(), "checks": self.checks })
    }
}

fn m(rows: [[i64; 4]; 4]) -> IntMatrix {
    IntMatrix::from_rows(&rows.map(Vec::from)).expect("square")
}

pub fn psi_f() -> IntMatrix {
    m([[0, -1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, -1, 0]])
}

pub fn psi_g1() -> IntMatrix {
    m([[0, -2, -2, -1], [2, 2, 1, 2], [-2, -1, 0, -2], [1, 2, 2, 2]])
}

pub fn psi_g2() -> IntMatrix {
    m([[0, -1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
}

/// The handle swap `G` with `G3 = G1 G`.
pub fn psi_g() -> IntMatrix {
    m([[0, 0, -1, 0], [0, 0, 0, -1], [-1, 0, 0, 0], [0, -1, 0, 0]])
}

pub fn psi_g3() -> IntMatrix {
    m([
        [2, 1, 0, 2],
        [-1, -2, -2, -2],
        [0, 2, 2, 1],
        [-2, -2, -1, -2],
    ])
}

/// The intersection form on the basis.
pub fn skew_form() -> IntMatrix {
    m([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
}

fn pow(a: &IntMatrix, e: i64) -> IntMatrix {
    let base = if e < 0 {
        a.inverse_unimodular().expect("invertible")
    } else {
        a.clone()
    };
    base.pow(e.unsigned_abs() as u32)
}

/// Checks the relations of the genus-2 normalizer presentation on the
/// matrices, together with symplecticity and the alternative exponents
/// `G1² G3⁻² = F` and `[G1, G3] = F`.
pub fn verify_doubled_matrices() -> MatrixVerification {
    let (f, g1, g2, g, g3) = (psi_f(), psi_g1(), psi_g2(), psi_g(), psi_g3());
    let id = IntMatrix::identity(4);
    let inv = |a: &IntMatrix| pow(a, -1);
    let mul = |xs: &[&IntMatrix]| xs.iter().fold(id.clone(), |acc, x| acc.mul(x));
    let comm = |a: &IntMatrix, b: &IntMatrix| mul(&[a, b, &inv(a), &inv(b)]);

    let mut checks = Vec::new();
    let mut push = |relation: &str, kind, holds| {
        checks.push(MatrixCheck {
            relation: relation.into(),
            kind,
            holds,
        })
    };
    use CheckKind::*;
    push("F^6 = 1", Relation, pow(&f, 6) == id);
    push("G1*F = F*G1", Relation, mul(&[&g1, &f]) == mul(&[&f, &g1]));
    push("G2*F = F*G2", Relation, mul(&[&g2, &f]) == mul(&[&f, &g2]));
    push(
        "G3*F*G3^-1 = F^-1",
        Relation,
        mul(&[&g3, &f, &inv(&g3)]) == inv(&f),
    );
    push("G3 = G1*G", Relation, g3 == mul(&[&g1, &g]));
    push("G1^2 = G3^2", Relation, pow(&g1, 2) == pow(&g3, 2));
    push(
        "G1*G3 = G3*G1",
        Relation,
        mul(&[&g1, &g3]) == mul(&[&g3, &g1]),
    );
    push(
        "(G1*G2)^2 = F^4",
        Relation,
        pow(&mul(&[&g1, &g2]), 2) == pow(&f, 4),
    );
    push(
        "(G3*G2)^2 = F^3",
        Relation,
        pow(&mul(&[&g3, &g2]), 2) == pow(&f, 3),
    );
    let j = skew_form();
    for (name, a) in [("F", &f), ("G1", &g1), ("G2", &g2), ("G", &g), ("G3", &g3)] {
        push(
            &format!("{name} symplectic"),
            Symplectic,
            mul(&[&a.transpose(), &j, a]) == j,
        );
    }
    push(
        "G1^2*G3^-2 = F",
        AlternativeReading,
        mul(&[&pow(&g1, 2), &pow(&g3, -2)]) == f,
    );
    push("[G1,G3] = F", AlternativeReading, comm(&g1, &g3) == f);
    MatrixVerification { checks }
}
