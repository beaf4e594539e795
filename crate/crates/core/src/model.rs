//! The verified objects shared by every computation, built once per process.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::reps::{spin_rep, standard_rep, Representation};
use crate::so7::isotropy::build_verified_case;
use crate::so7::subalgebra::so7_basis;
use crate::so7::{
    build_g2_subalgebra, build_so7_chevalley, verify_chevalley, Case, ChevalleyBasis,
    ChevalleyReport, G2Subalgebra, IsotropyCase, SubalgebraBasis,
};
use crate::spectra::{compute_components, ComponentData};

#[derive(Debug)]
pub struct Model {
    pub basis: ChevalleyBasis,
    pub chevalley: ChevalleyReport,
    pub so7: SubalgebraBasis,
    pub g2: G2Subalgebra,
    pub gr27: IsotropyCase,
    pub gr38: IsotropyCase,
    pub standard: Representation,
    pub spin: Representation,
    /// standard ⊗ spin
    pub tensor: Representation,
    pub sym2_standard: Representation,
    pub sym2_spin: Representation,
    pub so7_adjoint: Representation,
    /// The standard module restricted to the embedded G2.
    pub g2_standard: Representation,
    pub g2_adjoint: Representation,
    components: [OnceLock<Result<Vec<ComponentData>>>; 2],
}

impl Model {
    pub fn build() -> Result<Model> {
        let basis = build_so7_chevalley()?;
        let chevalley = verify_chevalley(&basis);
        let so7 = so7_basis(&basis)?;
        let g2 = build_g2_subalgebra(&basis)?;
        let gr27 = build_verified_case(Case::Gr27, &basis, &g2)?;
        let gr38 = build_verified_case(Case::Gr38, &basis, &g2)?;
        let standard = standard_rep(&basis)?;
        let spin = spin_rep(&basis)?;
        let tensor = standard.tensor(&spin)?;
        let sym2_standard = standard.sym2()?;
        let sym2_spin = spin.sym2()?;
        let so7_adjoint = Representation::adjoint("adjoint", &so7)?;
        let g2_standard = standard.restrict(&g2.basis)?;
        let g2_adjoint = Representation::adjoint("g2 adjoint", &g2.basis)?;
        Ok(Model {
            basis,
            chevalley,
            so7,
            g2,
            gr27,
            gr38,
            standard,
            spin,
            tensor,
            sym2_standard,
            sym2_spin,
            so7_adjoint,
            g2_standard,
            g2_adjoint,
            components: [OnceLock::new(), OnceLock::new()],
        })
    }

    pub fn case(&self, case: Case) -> &IsotropyCase {
        match case {
            Case::Gr27 => &self.gr27,
            Case::Gr38 => &self.gr38,
        }
    }

    /// Spherical components of a case, computed on first use.
    pub fn components(&self, case: Case) -> Result<&[ComponentData]> {
        let slot = &self.components[case as usize];
        slot.get_or_init(|| compute_components(self, case))
            .as_deref()
            .map_err(Clone::clone)
    }

    /// Representations by CLI name.
    pub fn rep(&self, name: &str) -> Result<&Representation> {
        Ok(match name.replace('_', "-").as_str() {
            "standard" => &self.standard,
            "spin" => &self.spin,
            "tensor" => &self.tensor,
            "sym2-standard" => &self.sym2_standard,
            "sym2-spin" => &self.sym2_spin,
            "adjoint" => &self.so7_adjoint,
            "g2-standard" => &self.g2_standard,
            "g2-adjoint" => &self.g2_adjoint,
            _ => {
                return Err(Error::Parse(format!(
                    "unknown representation {name:?} (expected one of {})",
                    REP_NAMES.join(", ")
                )))
            }
        })
    }
}

pub const REP_NAMES: [&str; 8] = [
    "standard",
    "spin",
    "tensor",
    "sym2-standard",
    "sym2-spin",
    "adjoint",
    "g2-standard",
    "g2-adjoint",
];

static MODEL: OnceLock<std::result::Result<Model, Error>> = OnceLock::new();

/// The process-wide model; construction runs once and its failure is sticky.
pub fn model() -> Result<&'static Model> {
    MODEL
        .get_or_init(Model::build)
        .as_ref()
        .map_err(Clone::clone)
}
