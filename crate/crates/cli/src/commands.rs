use std::io::Write;

use levixi::exactpoly::parse_poly;
use levixi::repring::{springer_torus_sl, weight_system_fundamental};
use levixi::schubert::{cup_product_checked, cup_product_chevalley};
use levixi::{
    borel_expand, build_root_system, character, cup_product, poly_membership,
    springer_torus_general, tensor_decompose, xi, Character, Error, ExactPoly, Family, LaurentPoly,
    ParabolicSubset, Rational, Result, RootSystem, SchubertCombination, XiContext,
};
use serde_json::{json, Value};

use crate::{verify, Cli, Command, Failure, Format, GroupArgs, ProductMethod};

pub fn root_system(family: &str, rank: usize) -> Result<RootSystem> {
    build_root_system(family.parse::<Family>()?, rank)
}

/// Accepts the parabolic grammar plus a bare comma list of Levi nodes.
pub fn parabolic(spec: &str, rank: usize) -> Result<ParabolicSubset> {
    let s = spec.trim();
    let bare = !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_digit() || c == ',' || c == ' ');
    if bare {
        ParabolicSubset::parse(&format!("levi:{s}"), rank)
    } else {
        ParabolicSubset::parse(s, rank)
    }
}

fn group(g: &GroupArgs) -> Result<(RootSystem, ParabolicSubset)> {
    let rs = root_system(&g.family, g.rank)?;
    let p = parabolic(&g.parabolic, g.rank)?;
    Ok((rs, p))
}

fn group_inputs(g: &GroupArgs) -> Value {
    json!({"family": g.family, "rank": g.rank, "parabolic": g.parabolic})
}

pub fn parse_coeffs(s: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(i, t)| {
            t.parse::<i64>().map_err(|_| Error::Parse {
                pos: i,
                msg: format!("expected an integer coefficient, got {t:?}"),
            })
        })
        .collect()
}

fn weight(rs: &RootSystem, s: &str) -> Result<Vec<Rational>> {
    rs.weight_from_fundamental(&parse_coeffs(s)?)
}

fn fundamental_string(rs: &RootSystem, ambient: &[i64]) -> String {
    let v: Vec<Rational> = ambient
        .iter()
        .map(|x| Rational::from_integer((*x).into()))
        .collect();
    let parts: Vec<String> = rs
        .to_fundamental(&v)
        .iter()
        .map(|c| c.to_string())
        .collect();
    parts.join(",")
}

/// Prints the result as text or as `{command, inputs, result, claims?}`.
pub fn emit(
    cli: &Cli,
    command: &str,
    inputs: Value,
    result: Value,
    text: &str,
    claims: Option<Value>,
) {
    let body = match cli.format {
        Format::Text => text.trim_end_matches('\n').to_string(),
        Format::Json => {
            let mut out = json!({"command": command, "inputs": inputs, "result": result});
            if let Some(c) = claims {
                out["claims"] = c;
            }
            serde_json::to_string_pretty(&out).expect("JSON values serialize")
        }
    };
    let _ = writeln!(std::io::stdout().lock(), "{body}");
}

fn emit_combination(cli: &Cli, command: &str, inputs: Value, c: &SchubertCombination) {
    emit(cli, command, inputs, c.to_json(), &c.render(), None);
}

pub fn run(cli: &Cli) -> std::result::Result<(), Failure> {
    match &cli.command {
        Command::Expand { group: g, poly } => {
            let (rs, p) = group(g)?;
            let f: ExactPoly = parse_poly(poly, 'x', Some(rs.dim()))?;
            let c = borel_expand(&f, &rs, &p)?;
            let mut inputs = group_inputs(g);
            inputs["poly"] = json!(poly);
            emit_combination(cli, "expand", inputs, &c);
        }
        Command::Xi {
            group: g,
            character: s,
        } => {
            let (rs, p) = group(g)?;
            let ctx = XiContext::new(&rs, &p)?;
            let chi = ctx.character(parse_poly(s, 't', Some(rs.dim()))?)?;
            let c = xi(&ctx, &chi)?;
            let mut inputs = group_inputs(g);
            inputs["char"] = json!(s);
            emit_combination(cli, "xi", inputs, &c);
        }
        Command::Product {
            group: g,
            a,
            b,
            method,
        } => {
            let (rs, p) = group(g)?;
            let x = SchubertCombination::parse(&rs, &p, a)?;
            let y = SchubertCombination::parse(&rs, &p, b)?;
            let c = match method {
                ProductMethod::DividedDifference => cup_product(&x, &y)?,
                ProductMethod::Chevalley => cup_product_chevalley(&x, &y)?,
                ProductMethod::Both => cup_product_checked(&x, &y)?,
            };
            let mut inputs = group_inputs(g);
            inputs["a"] = json!(a);
            inputs["b"] = json!(b);
            emit_combination(cli, "product", inputs, &c);
        }
        Command::Membership {
            group: g,
            character: s,
        } => {
            let (rs, p) = group(g)?;
            let chi = Character::new(&rs, &p, parse_poly(s, 't', Some(rs.dim()))?)?;
            let m = poly_membership(&chi);
            let show = |v: &Option<ExactPoly>| v.as_ref().map(|f| f.to_string());
            let mut text = format!("member: {}\n", m.member);
            for (label, v) in [
                ("preimage", show(&m.preimage)),
                ("P_f", show(&m.p_f)),
                ("Q_f", show(&m.q_f)),
            ] {
                if let Some(v) = v {
                    text.push_str(&format!("{label}: {v}\n"));
                }
            }
            if let Some(w) = &m.witness {
                text.push_str(&format!("witness: {w}\n"));
            }
            if m.member {
                text.push_str(&format!("integral: {}\n", m.integral));
            }
            let mut inputs = group_inputs(g);
            inputs["char"] = json!(s);
            let result = serde_json::to_value(&m).expect("membership result serializes");
            emit(cli, "membership", inputs, result, &text, None);
        }
        Command::Character {
            family,
            rank,
            weight: w,
        } => {
            let rs = root_system(family, *rank)?;
            let ws = weight_system_fundamental(&rs, &parse_coeffs(w)?)?;
            let chi = character(&ws);
            let text = format!("dimension: {}\ncharacter: {}\n", ws.dimension(), chi);
            let inputs = json!({"family": family, "rank": rank, "weight": w});
            let result = json!({"dimension": ws.dimension(), "character": chi.to_string()});
            emit(cli, "character", inputs, result, &text, None);
        }
        Command::Tensor {
            family,
            rank,
            lambda,
            mu,
        } => {
            let rs = root_system(family, *rank)?;
            let parts = tensor_decompose(&rs, &weight(&rs, lambda)?, &weight(&rs, mu)?)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (nu, m) in parts.iter().rev() {
                let f = fundamental_string(&rs, nu);
                text.push_str(&format!("{m} × V({f})\n"));
                rows.push(json!({"weight": f, "multiplicity": m}));
            }
            let inputs = json!({"family": family, "rank": rank, "lambda": lambda, "mu": mu});
            emit(cli, "tensor", inputs, Value::Array(rows), &text, None);
        }
        Command::Springer {
            family,
            rank,
            weight: w,
            sl,
        } => {
            let rs = root_system(family, *rank)?;
            let lambda = weight(&rs, w)?;
            let h: Vec<LaurentPoly> = if *sl {
                springer_torus_sl(&rs, &lambda)?
            } else {
                springer_torus_general(&rs, &lambda)?
            };
            let text: String = h
                .iter()
                .enumerate()
                .map(|(i, p)| format!("h{} = {p}\n", i + 1))
                .collect();
            let inputs = json!({"family": family, "rank": rank, "weight": w, "sl": sl});
            let result = Value::Array(h.iter().map(|p| json!(p.to_string())).collect());
            emit(cli, "springer", inputs, result, &text, None);
        }
        Command::Verify(args) => verify::run(cli, args)?,
    }
    Ok(())
}
