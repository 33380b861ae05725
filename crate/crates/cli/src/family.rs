//! Frame-construction flags shared by `build` and `analyze`.

use clap::{Args, ValueEnum};
use groupframe::baselines::{BaselineKind, BaselineSpec};
use groupframe::frame::{
    build_abelian_frame, build_cyclic_frame, build_dihedral_frame, build_prime_group_frame, parse_exponent_list,
    AbelianFrameSpec, CyclicFrameSpec, DihedralFrameSpec,
};
use groupframe::numtheory::{find_generator, subgroup_of_order};
use groupframe::FrameMatrix;

use crate::Failure;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    PrimeCyclic,
    Cyclic,
    Abelian,
    Dihedral,
    Gaussian,
    RandomFourier,
}

#[derive(Args, Debug, Default)]
pub struct FrameArgs {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Group order (prime for prime-cyclic and dihedral).
    #[arg(long)]
    pub n: Option<u64>,
    /// Subgroup order, or the row count for random baselines.
    #[arg(long)]
    pub m: Option<u64>,
    /// Comma-separated exponents; for abelian frames, one list per factor separated by `;`.
    #[arg(long)]
    pub exponents: Option<String>,
    /// Dihedral twist r_t, coprime to n.
    #[arg(long)]
    pub twist: Option<u64>,
    /// Expected order of the twist; checked when given.
    #[arg(long = "d")]
    pub order: Option<u64>,
    /// Factor orders of an abelian group, e.g. `2,2`.
    #[arg(long)]
    pub orders: Option<String>,
    /// Seed for random baselines.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

fn need<T: Copy>(value: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    value.ok_or_else(|| Failure::Input(format!("--{flag} is required for --family {family}")))
}

fn exponents(raw: &Option<String>, family: &str) -> Result<Vec<u64>, Failure> {
    let raw = raw.as_deref().ok_or_else(|| Failure::Input(format!("--exponents is required for --family {family}")))?;
    Ok(parse_exponent_list(raw)?)
}

impl FrameArgs {
    pub fn build(&self) -> Result<FrameMatrix, Failure> {
        let family = self.family.ok_or_else(|| Failure::Input("--family is required".into()))?;
        match family {
            Family::PrimeCyclic => {
                let n = need(self.n, "n", "prime-cyclic")?;
                let m = need(self.m, "m", "prime-cyclic")?;
                Ok(build_prime_group_frame(n, m)?)
            }
            Family::Cyclic => {
                let n = need(self.n, "n", "cyclic")?;
                Ok(build_cyclic_frame(&CyclicFrameSpec::new(n, exponents(&self.exponents, "cyclic")?)?))
            }
            Family::Abelian => {
                let orders = parse_exponent_list(
                    self.orders.as_deref().ok_or_else(|| Failure::Input("--orders is required for --family abelian".into()))?,
                )?;
                let raw = self
                    .exponents
                    .as_deref()
                    .ok_or_else(|| Failure::Input("--exponents is required for --family abelian".into()))?;
                let lists = raw.split(';').map(parse_exponent_list).collect::<Result<Vec<_>, _>>()?;
                Ok(build_abelian_frame(&AbelianFrameSpec::new(orders, lists)?))
            }
            Family::Dihedral => {
                let n = need(self.n, "n", "dihedral")?;
                let twist = need(self.twist, "twist", "dihedral")?;
                let ks = match (self.m, &self.exponents) {
                    (Some(m), None) => subgroup_of_order(&find_generator(n)?, m)?.elements().to_vec(),
                    (None, Some(_)) => exponents(&self.exponents, "dihedral")?,
                    _ => return Err(Failure::Input("--family dihedral needs exactly one of --m or --exponents".into())),
                };
                let spec = match self.order {
                    Some(d) => DihedralFrameSpec::with_order(n, twist, d, ks)?,
                    None => DihedralFrameSpec::new(n, twist, ks)?,
                };
                let mut frame = build_dihedral_frame(&spec);
                if self.m.is_some() {
                    frame.metadata_mut().set("generator", find_generator(n)?.generator());
                }
                Ok(frame)
            }
            Family::Gaussian | Family::RandomFourier => {
                let name = if family == Family::Gaussian { "gaussian" } else { "random-fourier" };
                let n = need(self.n, "n", name)? as usize;
                let m = need(self.m, "m", name)? as usize;
                let kind = if family == Family::Gaussian { BaselineKind::Gaussian } else { BaselineKind::RandomFourier };
                Ok(BaselineSpec::new(kind, n, m, self.seed)?.build()?)
            }
        }
    }
}
