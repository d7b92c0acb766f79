use clap::ValueEnum;
use dgroup::families::{
    affine_group, central_product_example, dihedral_quotient_family, frobenius_complement_example, pgammal_28,
    semilinear_example, unit_multiplier, wreath_product_action, wreath_product_imprimitive, CentralProduct,
};
use dgroup::gf::FieldSpec;
use dgroup::matgrp::io::{parse_matrix_group, write_matrix_group};
use dgroup::matgrp::{named, MatrixGroup};
use dgroup::permgrp::io::write_perm_group;
use dgroup::permgrp::{standard, PermGroup};
use dgroup::util::prime_power;
use dgroup::{Error, Result};

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    /// `x -> a x^s + c` on GF(q^2): q
    Semilinear,
    /// PGammaL(2,8) on 28 points
    Pgammal28,
    /// AGL(1,q): q
    Agl1,
    /// GF(q)^2 : GF(q)*, imprimitive: q
    ScalarAffine,
    /// X o Y in GL(4,q) with dihedral quotient of order q+1: q
    DihedralFamily,
    /// Named central product: klein | a4 | a5
    CentralProduct,
    /// Z_m^q : (C_h x C_q) in product action: m h q
    FrobeniusComplement,
    /// S_m wr C_k in product action: m k
    Wreath,
    /// S_m wr S_k in imprimitive action: m k
    WreathImprimitive,
    /// V : H for a matrix group file: path
    Affine,
}

pub enum Built {
    Perm(PermGroup),
    Mat(MatrixGroup),
}

impl Built {
    pub fn to_text(&self) -> String {
        match self {
            Built::Perm(g) => write_perm_group(g),
            Built::Mat(h) => write_matrix_group(h),
        }
    }
}

fn arity(params: &[String], names: &[&str]) -> Result<()> {
    if params.len() != names.len() {
        let expected = if names.is_empty() { "no parameters".to_string() } else { names.join(" ") };
        return Err(Error::ConstraintViolated(format!("expected {expected}, got {} parameter(s)", params.len())));
    }
    Ok(())
}

fn int(params: &[String], i: usize, name: &str) -> Result<u64> {
    params[i].parse().map_err(|_| Error::ConstraintViolated(format!("{name} must be a non-negative integer, got {:?}", params[i])))
}

fn prime_power_param(params: &[String], i: usize) -> Result<(u64, u32)> {
    let q = int(params, i, "q")?;
    prime_power(q).ok_or_else(|| Error::ConstraintViolated(format!("q = {q} must be a prime power")))
}

fn degree_param(params: &[String], i: usize, name: &str) -> Result<usize> {
    let m = int(params, i, name)?;
    if !(1..=12).contains(&m) {
        return Err(Error::ConstraintViolated(format!("{name} = {m} must lie in 1..=12")));
    }
    Ok(m as usize)
}

pub fn build(family: Family, params: &[String], max_degree: u64) -> Result<Built> {
    let built = match family {
        Family::Semilinear => {
            arity(params, &["q"])?;
            prime_power_param(params, 0)?;
            Built::Perm(semilinear_example(int(params, 0, "q")?)?)
        }
        Family::Pgammal28 => {
            arity(params, &[])?;
            Built::Perm(pgammal_28()?)
        }
        Family::Agl1 => {
            arity(params, &["q"])?;
            let (p, f) = prime_power_param(params, 0)?;
            Built::Perm(affine_group(&named::general_linear(&FieldSpec::new(p, f)?, 1))?)
        }
        Family::ScalarAffine => {
            arity(params, &["q"])?;
            let (p, f) = prime_power_param(params, 0)?;
            Built::Perm(affine_group(&named::scalars(&FieldSpec::new(p, f)?, 2))?)
        }
        Family::DihedralFamily => {
            arity(params, &["q"])?;
            Built::Mat(dihedral_quotient_family(int(params, 0, "q")?)?)
        }
        Family::CentralProduct => {
            arity(params, &["klein|a4|a5"])?;
            let which = CentralProduct::parse(&params[0]).ok_or_else(|| {
                Error::ConstraintViolated(format!("central product must be klein, a4 or a5, got {:?}", params[0]))
            })?;
            Built::Mat(central_product_example(which)?)
        }
        Family::FrobeniusComplement => {
            arity(params, &["m", "h", "q"])?;
            let (m, h, q) = (int(params, 0, "m")?, int(params, 1, "h")?, int(params, 2, "q")?);
            if m < 2 {
                return Err(Error::ConstraintViolated(format!("m = {m} must be at least 2")));
            }
            Built::Perm(frobenius_complement_example(m, &unit_multiplier(m, h)?, q)?)
        }
        Family::Wreath => {
            arity(params, &["m", "k"])?;
            let (m, k) = (degree_param(params, 0, "m")?, degree_param(params, 1, "k")?);
            Built::Perm(wreath_product_action(&standard::symmetric(m), k as u32)?)
        }
        Family::WreathImprimitive => {
            arity(params, &["m", "k"])?;
            let (m, k) = (degree_param(params, 0, "m")?, degree_param(params, 1, "k")?);
            Built::Perm(wreath_product_imprimitive(&standard::symmetric(m), &standard::symmetric(k))?)
        }
        Family::Affine => {
            arity(params, &["path"])?;
            let text = std::fs::read_to_string(&params[0])
                .map_err(|e| Error::Parse { line: 0, msg: format!("cannot read {}: {e}", params[0]) })?;
            Built::Perm(affine_group(&parse_matrix_group(&text)?)?)
        }
    };
    if let Built::Perm(g) = &built {
        if g.degree() as u64 > max_degree {
            return Err(Error::DegreeTooLarge { degree: g.degree() as u64, cap: max_degree });
        }
    }
    Ok(built)
}
