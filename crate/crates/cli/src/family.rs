use clap::Args;
use freediv::divisor::{analyze, AnalyzeOptions};
use freediv::families::{
    addition, addition2, addition2_boundary_preset, binary_wh, compare, cone_of_binary_wh, cusp_with_tangent,
    named_example, quintic_plus, sextic, unchecked, BinaryCoefficients, FamilyMember, Strength, NAMED_TAGS,
};
use freediv::poly::parse_rational;
use freediv::{parse_poly, Error, Rational, Ring};
use serde_json::json;

use crate::{render, to_json, Output};

pub const FAMILIES: [&str; 8] =
    ["quintic_plus", "addition", "addition2", "addition2_preset", "binary_wh", "cone_binary_wh", "cusp_with_tangent", "sextic"];

#[derive(Args, Clone, Default)]
pub struct FamilyArgs {
    /// Degree (quintic_plus, addition2, cusp_with_tangent).
    #[arg(long)]
    d: Option<u32>,
    /// Coefficients a1,a2,a3,a4 of quintic_plus.
    #[arg(long)]
    a: Option<String>,
    /// Number of variables (addition, addition2).
    #[arg(long)]
    n: Option<usize>,
    /// Exponents r1,..,r(n-1) (addition) or the single exponent r (cusp_with_tangent).
    #[arg(long)]
    r: Option<String>,
    /// 1-based indices of the n-2 chosen variables (addition).
    #[arg(long)]
    subset: Option<String>,
    /// Exponent m of addition2.
    #[arg(long)]
    m: Option<u32>,
    /// The form h of addition2, in variables x1..x(n-2).
    #[arg(long)]
    h: Option<String>,
    /// Weights and multiplicity of a binary weighted homogeneous polynomial.
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    s: Option<u32>,
    /// Binary coefficients cx,cy,c1,..,c(s-1); defaults to all ones.
    #[arg(long)]
    coeffs: Option<String>,
    /// Draw the binary middle coefficients from --seed instead.
    #[arg(long)]
    random: bool,
    /// Sextic parameters (default 1).
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    beta: Option<String>,
    #[arg(long)]
    gamma: Option<String>,
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T, Error> {
    v.ok_or_else(|| Error::Precondition(format!("{family} needs --{flag}")))
}

fn list<T: std::str::FromStr>(text: &str, flag: &str) -> Result<Vec<T>, Error> {
    text.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Precondition(format!("cannot read --{flag} entry '{t}'"))))
        .collect()
}

fn rationals(text: &str) -> Result<Vec<Rational>, Error> {
    text.split(',').map(|t| Ok(parse_rational(t.trim())?)).collect()
}

fn rational_or_one(text: &Option<String>) -> Result<Rational, Error> {
    Ok(match text {
        Some(t) => parse_rational(t)?,
        None => Rational::from_integer(1.into()),
    })
}

fn binary_coefficients(args: &FamilyArgs, s: u32, seed: u64) -> Result<BinaryCoefficients, Error> {
    if args.random {
        return Ok(BinaryCoefficients::random(s, seed));
    }
    let Some(text) = &args.coeffs else { return Ok(BinaryCoefficients::ones(s)) };
    let mut c = rationals(text)?;
    if c.len() != s as usize + 1 {
        return Err(Error::Precondition(format!("--coeffs needs cx, cy and {} middle coefficients", s - 1)));
    }
    let middle = c.split_off(2);
    let cy = c.pop().expect("two entries");
    let cx = c.pop().expect("one entry");
    Ok(BinaryCoefficients { cx, cy, middle })
}

pub fn build(name: &str, args: &FamilyArgs, seed: u64) -> Result<FamilyMember, Error> {
    match name {
        "quintic_plus" => {
            let d = need(args.d, "d", name)?;
            let a = rationals(args.a.as_deref().unwrap_or("1,1,1,1"))?;
            let a: [Rational; 4] =
                a.try_into().map_err(|_| Error::Precondition("--a needs four coefficients".into()))?;
            quintic_plus(d, &a)
        }
        "addition" => {
            let n = need(args.n, "n", name)?;
            let r = list::<u32>(args.r.as_deref().ok_or_else(|| Error::Precondition("addition needs --r".into()))?, "r")?;
            let subset =
                list::<usize>(args.subset.as_deref().ok_or_else(|| Error::Precondition("addition needs --subset".into()))?, "subset")?;
            addition(n, &r, &subset)
        }
        "addition2" => {
            let n = need(args.n, "n", name)?;
            let d = need(args.d, "d", name)?;
            let m = need(args.m, "m", name)?;
            let text = args.h.as_deref().ok_or_else(|| Error::Precondition("addition2 needs --h".into()))?;
            if n < 3 {
                return Err(Error::Precondition("addition2 needs n >= 3".into()));
            }
            let ring = Ring::degrevlex((1..=n - 2).map(|i| format!("x{i}")))?;
            addition2(n, d, m, &parse_poly(text, &ring)?)
        }
        "addition2_preset" => addition2_boundary_preset(),
        "binary_wh" | "cone_binary_wh" => {
            let p = need(args.p, "p", name)?;
            let q = need(args.q, "q", name)?;
            let s = need(args.s, "s", name)?;
            let c = binary_coefficients(args, s, seed)?;
            if name == "binary_wh" {
                binary_wh(p, q, s, &c)
            } else {
                cone_of_binary_wh(p, q, s, &c)
            }
        }
        "cusp_with_tangent" => {
            let r = list::<u32>(args.r.as_deref().ok_or_else(|| Error::Precondition("cusp_with_tangent needs --r".into()))?, "r")?;
            let [r] = r[..] else { return Err(Error::Precondition("cusp_with_tangent takes a single --r".into())) };
            cusp_with_tangent(r, need(args.d, "d", name)?)
        }
        "sextic" => sextic(&rational_or_one(&args.alpha)?, &rational_or_one(&args.beta)?, &rational_or_one(&args.gamma)?),
        tag if NAMED_TAGS.contains(&tag) => named_example(tag),
        other => Err(Error::Precondition(format!(
            "unknown family '{other}'; families: {}; named examples: {}",
            FAMILIES.join(", "),
            NAMED_TAGS.join(", ")
        ))),
    }
}

pub fn run(name: &str, args: &FamilyArgs, options: AnalyzeOptions) -> Result<Output, Error> {
    let member = build(name, args, options.seed)?;
    let report = analyze(&member.polynomial, options)?;
    let discrepancies = compare(&member.spec.expected, &report);
    let undecided = unchecked(&member.spec.expected, &report);
    let parts: Vec<_> =
        member.parts.iter().map(|p| json!({"name": p.name, "polynomial": p.polynomial.to_string()})).collect();
    let mut text = format!("family: {name}\npolynomial: {}\n", member.polynomial);
    for (k, v) in &member.spec.params {
        text.push_str(&format!("  {k} = {v}\n"));
    }
    for p in &member.parts {
        text.push_str(&format!("  part {}: {}\n", p.name, p.polynomial));
    }
    text.push_str(&render::report(&report));
    if discrepancies.is_empty() {
        text.push_str(if undecided.is_empty() { "\nexpectations: all met" } else { "\nexpectations: all decided ones met" });
    }
    for d in &discrepancies {
        text.push_str(&format!("\nmismatch in {}: expected {}, computed {}", d.field, d.expected, d.computed));
    }
    if !undecided.is_empty() {
        text.push_str(&format!("\nnot decided here (try --rees or --extend-n): {}", undecided.join(", ")));
    }
    let failed = discrepancies.iter().any(|d| d.strength == Strength::Theorem);
    Ok(Output {
        json: json!({
            "family": name,
            "polynomial": member.polynomial.to_string(),
            "spec": to_json(&member.spec),
            "parts": parts,
            "report": to_json(&report),
            "discrepancies": discrepancies,
            "unchecked": undecided,
        }),
        text,
        failed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_coefficient_flags() {
        let args = FamilyArgs { coeffs: Some("2,-1,1/2".into()), ..Default::default() };
        let c = binary_coefficients(&args, 2, 0).unwrap();
        assert_eq!(c.cx, Rational::from_integer(2.into()));
        assert_eq!(c.middle, vec![Rational::new(1.into(), 2.into())]);
        assert!(binary_coefficients(&args, 3, 0).is_err());
        assert_eq!(binary_coefficients(&FamilyArgs::default(), 2, 0).unwrap(), BinaryCoefficients::ones(2));
    }

    #[test]
    fn unknown_names_are_refused() {
        assert!(matches!(build("nope", &FamilyArgs::default(), 0), Err(Error::Precondition(_))));
        assert!(matches!(build("addition", &FamilyArgs::default(), 0), Err(Error::Precondition(_))));
        assert!(build("arr1", &FamilyArgs::default(), 0).is_ok());
    }
}
