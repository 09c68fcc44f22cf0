//! Algebras that ship with the library.

use crate::error::{Error, Result};
use crate::quiver::{build_bound_algebra, parse_algebra_with, BoundAlgebra};

/// The dual numbers `K[x]/(x^2)`.
pub const KX2: &str = "\
algebra kx2 field Q
vertices 1
arrow x: 1 -> 1
relations:
x*x
";

/// A path algebra of a tree with six vertices (no relations).
pub const EX54: &str = "\
algebra ex54 field Q
vertices 6
arrow alpha: 1 -> 2
arrow beta: 1 -> 3
arrow gamma: 1 -> 4
arrow eps: 3 -> 5
arrow eta: 4 -> 6
relations:
";

/// A quasihereditary algebra (order 1 < 2 < 3 < 4) whose `δ(P_3)` is not
/// `Δ`-semisimple.
pub const EX36: &str = "\
algebra ex36 field Q
vertices 4
arrow alpha: 2 -> 1
arrow eps: 2 -> 1
arrow beta: 3 -> 2
arrow delta: 4 -> 1
arrow g1: 4 -> 3
arrow g0: 3 -> 4
relations:
eps*beta - delta*g0
g0*g1
";

/// The family `A(n)` whose ADR algebra breaks the descending Loewy length
/// condition for `n >= 4`.
pub const A_N: &str = "\
algebra an field Q param n=5
vertices 3
arrow eps: 1 -> 1
arrow a1: 1 -> 2
arrow b1: 2 -> 1
arrow a2: 2 -> 3
arrow b2: 3 -> 2
relations:
a2*a1
b1*b2
b2*a2 - a1*b1
eps*b1
a1*eps
eps^n
";

pub const NAMES: [&str; 4] = ["kx2", "ex54", "ex36", "an"];

pub fn text(name: &str) -> Option<&'static str> {
    match name {
        "kx2" => Some(KX2),
        "ex54" => Some(EX54),
        "ex36" => Some(EX36),
        "an" => Some(A_N),
        _ => None,
    }
}

/// Builds a shipped algebra; `n` overrides the parameter of `an`.
pub fn algebra(name: &str, n: Option<i64>) -> Result<BoundAlgebra> {
    let src = text(name).ok_or_else(|| Error::Input(format!("no built-in algebra '{name}'")))?;
    let overrides: Vec<(String, i64)> = match (name, n) {
        ("an", Some(n)) => {
            if n < 2 {
                return Err(Error::Input(format!("A(n) needs n >= 2, got {n}")));
            }
            vec![("n".to_string(), n)]
        }
        (_, Some(_)) => return Err(Error::Input(format!("algebra '{name}' has no parameter n"))),
        _ => Vec::new(),
    };
    build_bound_algebra(&parse_algebra_with(src, &overrides, None)?)
}

/// `A(n)`.
pub fn a_n(n: i64) -> Result<BoundAlgebra> {
    algebra("an", Some(n))
}
