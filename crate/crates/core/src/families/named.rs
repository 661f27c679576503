use num_traits::{One, Zero};

use super::{monomial_term, params, precondition, xyz, Expected, FamilyMember, FamilySpec, FamilyTag, Part};
use crate::error::Result;
use crate::modsyz::BettiData;
use crate::poly::{homogenize, parse_poly, Polynomial, Rational};

pub const NAMED_TAGS: [&str; 13] = [
    "conic_line",
    "arr1",
    "arr2",
    "sextic",
    "cn1",
    "cn1_homogenized",
    "cn2",
    "cn2_homogenized",
    "smooth_conic",
    "cuspidal_cubic",
    "nodal_cubic",
    "line",
    "cayley",
];

const CN1: &str = "256*z^3 - 128*x^2*z^2 + 16*x^4*z + 144*x*y^2*z - 4*x^3*y^2 - 27*y^4";
const CN2: &str = "x*y*(x+y)*(x+y*z)";

fn named(text: &str, tag: &str, expected: Expected) -> Result<FamilyMember> {
    let f = parse_poly(text, &xyz())?;
    named_poly(f, tag, expected)
}

fn named_poly(f: Polynomial, tag: &str, expected: Expected) -> Result<FamilyMember> {
    let spec = FamilySpec { tag: FamilyTag::Named, params: params([("name", tag.to_string())]), expected };
    Ok(FamilyMember { polynomial: f, spec, parts: Vec::new() })
}

fn homogenized(text: &str, tag: &str, expected: Expected) -> Result<FamilyMember> {
    let f = parse_poly(text, &xyz())?;
    let big = homogenize(&f, "t")?;
    let mut m = named_poly(big, tag, expected)?;
    m.parts.push(Part { name: "affine".into(), polynomial: f, expected: Expected::default() });
    Ok(m)
}

/// `x^6 + alpha x^3 y^3 + beta x^2 y^4 + gamma y^5 z` with nonzero parameters: a non-saturated
/// gradient ideal with `indeg(I^sat/I) = 6` that is not syzygetic.
pub fn sextic(alpha: &Rational, beta: &Rational, gamma: &Rational) -> Result<FamilyMember> {
    if alpha.is_zero() || beta.is_zero() || gamma.is_zero() {
        return precondition("sextic parameters must be nonzero");
    }
    let r = xyz();
    let f = [
        monomial_term(&r, &[6, 0, 0], Rational::one()),
        monomial_term(&r, &[3, 3, 0], alpha.clone()),
        monomial_term(&r, &[2, 4, 0], beta.clone()),
        monomial_term(&r, &[0, 5, 1], gamma.clone()),
    ]
    .iter()
    .fold(Polynomial::zero(&r), |acc, t| &acc + t);
    let expected = Expected {
        linear_type: Some(false),
        syzygetic: Some(false),
        indeg: Some(6),
        betti: Some(BettiData::from_shifts(&[vec![5; 3], vec![8; 3], vec![9]])),
        ..Default::default()
    };
    let mut m = named_poly(f, "sextic", expected)?;
    m.spec.params.insert("alpha".into(), alpha.to_string());
    m.spec.params.insert("beta".into(), beta.to_string());
    m.spec.params.insert("gamma".into(), gamma.to_string());
    Ok(m)
}

/// A named worked example with the outcomes recorded for it.
pub fn named_example(tag: &str) -> Result<FamilyMember> {
    let one = Rational::one();
    match tag {
        "conic_line" => named(
            "x*(x^2+y*z)",
            tag,
            Expected { regularity: Some(2), st: Some(2), indeg: Some(1), ..Default::default() },
        ),
        "arr1" => named(
            "x*y*z*(x+y+z)",
            tag,
            Expected {
                linear_type: Some(true),
                regularity: Some(3),
                st: Some(1),
                betti: Some(BettiData::from_shifts(&[vec![3; 3], vec![5; 3], vec![6]])),
                ..Default::default()
            },
        ),
        "arr2" => named(
            "x*y*z*(x+y)*(x+z)*(y+z)",
            tag,
            Expected {
                linear_type: Some(true),
                regularity: Some(6),
                st: Some(1),
                indeg: Some(6),
                betti: Some(BettiData::from_shifts(&[vec![5; 3], vec![8; 3], vec![9]])),
                ..Default::default()
            },
        ),
        "sextic" => sextic(&one, &one, &one),
        "cn1" => named(CN1, tag, Expected { linear_type: Some(true), ..Default::default() }),
        "cn1_homogenized" => {
            homogenized(CN1, tag, Expected { free: Some(false), linear_type: Some(true), ..Default::default() })
        }
        "cn2" => named(
            CN2,
            tag,
            Expected {
                free: Some(true),
                linear_type: Some(false),
                syzygetic: Some(false),
                koszul_free: Some(false),
                ..Default::default()
            },
        ),
        "cn2_homogenized" => homogenized(
            CN2,
            tag,
            Expected { free: Some(true), syzygetic: Some(false), koszul_free: Some(false), ..Default::default() },
        ),
        "smooth_conic" => named("x^2+y*z", tag, Expected { free: Some(false), ..Default::default() }),
        "cuspidal_cubic" => named("y^2*z-x^3", tag, Expected { free: Some(false), ..Default::default() }),
        "nodal_cubic" => named("y^2*z-x^2*(x+z)", tag, Expected { free: Some(false), ..Default::default() }),
        "line" => named("x+2*y-3*z", tag, Expected { free: Some(true), ..Default::default() }),
        "cayley" => precondition("the Cayley sextic family has no defining polynomial available here"),
        other => precondition(format!("unknown example '{other}'; known: {}", NAMED_TAGS.join(", "))),
    }
}
