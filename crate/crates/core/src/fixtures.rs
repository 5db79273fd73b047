//! Hand-written presentations of the tame representatives and of the wild
//! four-vertex block algebra.

use crate::presentation::BoundQuiverPresentation;
use crate::quiver::Quiver;

fn build(
    vertices: &[&str],
    arrows: &[(&str, &str, &str, u32)],
    rels: &[&str],
    bound: usize,
) -> BoundQuiverPresentation {
    let q = Quiver::from_spec(vertices, arrows).expect("fixture quiver");
    BoundQuiverPresentation::from_strs(q, rels, bound).expect("fixture presentation")
}

const TWO_LOOPS: [(&str, &str, &str, u32); 4] = [
    ("alpha", "1", "1", 1),
    ("beta", "2", "2", 1),
    ("mu", "1", "2", 1),
    ("nu", "2", "1", 1),
];

/// Brauer line with multiplicities (2,2,2).
pub fn a222() -> BoundQuiverPresentation {
    build(
        &["1", "2"],
        &TWO_LOOPS,
        &[
            "alpha*mu = 0",
            "mu*beta = 0",
            "beta*nu = 0",
            "nu*alpha = 0",
            "alpha*alpha = mu*nu*mu*nu",
            "beta*beta = nu*mu*nu*mu",
        ],
        7,
    )
}

/// Brauer line with multiplicities (2,2,1).
pub fn a221() -> BoundQuiverPresentation {
    build(
        &["1", "2"],
        &[
            ("alpha", "1", "1", 1),
            ("mu", "1", "2", 1),
            ("nu", "2", "1", 1),
        ],
        &[
            "alpha*mu = 0",
            "mu*nu*mu*nu*mu = 0",
            "nu*mu*nu*mu*nu = 0",
            "nu*alpha = 0",
            "alpha*alpha = mu*nu*mu*nu",
        ],
        7,
    )
}

/// Brauer line with multiplicities (2,1,2).
pub fn a212() -> BoundQuiverPresentation {
    build(
        &["1", "2"],
        &TWO_LOOPS,
        &[
            "alpha*mu = 0",
            "mu*beta = 0",
            "beta*nu = 0",
            "nu*alpha = 0",
            "alpha*alpha = mu*nu",
            "beta*beta = nu*mu",
        ],
        5,
    )
}

/// Symmetric Kronecker algebra `K[X,Y]/(X^2, Y^2)`.
pub fn kronecker() -> BoundQuiverPresentation {
    build(
        &["1"],
        &[("X", "1", "1", 1), ("Y", "1", "1", 1)],
        &["X*X = 0", "Y*Y = 0", "X*Y = Y*X"],
        5,
    )
}

/// The four-vertex wild block; all arrows of degree one, paths of length
/// five and more vanish.
pub fn wild() -> BoundQuiverPresentation {
    build(
        &["1", "2", "3", "4"],
        &[
            ("alpha1", "1", "2", 1),
            ("alpha2", "2", "3", 1),
            ("alpha3", "3", "4", 1),
            ("beta1", "2", "1", 1),
            ("beta2", "3", "2", 1),
            ("beta3", "4", "3", 1),
        ],
        &[
            "alpha1*alpha2*alpha3 = 0",
            "beta3*beta2*beta1 = 0",
            "beta1*alpha1*alpha2 = alpha2*alpha3*beta3",
            "beta2*beta1*alpha1 = alpha3*beta3*beta2",
            "alpha1*beta1*alpha1 = alpha1*alpha2*beta2",
            "beta1*alpha1*beta1 = alpha2*beta2*beta1",
            "alpha2*beta2*alpha2 = 0",
            "beta2*alpha2*beta2 = 0",
            "alpha3*beta3*alpha3 = beta2*alpha2*alpha3",
            "beta3*alpha3*beta3 = beta3*beta2*alpha2",
        ],
        5,
    )
}

/// One vertex, no arrows.
pub fn point() -> BoundQuiverPresentation {
    build(&["1"], &[], &[], 1)
}

/// `n` vertices, no arrows.
pub fn semisimple(n: usize) -> BoundQuiverPresentation {
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    build(&refs, &[], &[], 1)
}

/// Looks up a hand-written presentation by name.
pub fn by_name(name: &str) -> Option<BoundQuiverPresentation> {
    Some(match name {
        "A(2,2,2)" | "a222" => a222(),
        "A(2,2,1)" | "a221" => a221(),
        "A(2,1,2)" | "a212" => a212(),
        "kronecker" => kronecker(),
        "wild" => wild(),
        "point" => point(),
        _ => return None,
    })
}

pub const NAMES: [&str; 6] = [
    "A(2,2,2)",
    "A(2,2,1)",
    "A(2,1,2)",
    "kronecker",
    "wild",
    "point",
];
