use serde::Serialize;

/// The law a structure table failed to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Associativity,
    Unit,
    Coassociativity,
    Counit,
    ComultiplicationMultiplicative,
    ComultiplicationUnital,
    CounitMultiplicative,
    CounitUnital,
    Antipode,
    CoactionCoassociativity,
    CoactionCounit,
    CoactionMultiplicative,
    CoactionUnital,
    CocycleCondition,
    CocycleNormalization,
    ConvolutionInverse,
}

/// One failed instance of an axiom, located by the basis labels involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub at: Vec<String>,
}

impl Violation {
    pub fn new(axiom: Axiom, at: &[&str]) -> Self {
        Self {
            axiom,
            at: at.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// True if some violation names `axiom`.
pub fn mentions(report: &[Violation], axiom: Axiom) -> bool {
    report.iter().any(|v| v.axiom == axiom)
}
