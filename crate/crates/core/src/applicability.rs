//! Structural-intent filter for useful variants.

use serde::{Deserialize, Serialize};

use crate::cpat::{Cpat, CpatError};
use crate::syntax::{self, Ast};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FailedRule {
    ControlNodes,
    Declarations,
    NodeCountSign,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApplicabilityVerdict {
    pub passed: bool,
    pub failed_rules: Vec<FailedRule>,
}

/// How control nodes are compared. Multiset is the default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Containment {
    #[default]
    Multiset,
    Set,
}

pub fn check_control_nodes(variant: &Ast, cpat_lhs: &Ast) -> bool {
    check_control_nodes_with(variant, cpat_lhs, Containment::Multiset)
}

pub fn check_control_nodes_with(variant: &Ast, cpat_lhs: &Ast, mode: Containment) -> bool {
    let want = syntax::control_nodes(cpat_lhs);
    let have = syntax::control_nodes(variant);
    match mode {
        Containment::Multiset => want.is_submultiset_of(&have),
        Containment::Set => want.is_subset_of(&have),
    }
}

pub fn check_declarations(variant: &Ast, cpat_lhs: &Ast) -> bool {
    syntax::collect_declarations(variant).is_subset(&syntax::collect_declarations(cpat_lhs))
}

/// `(V - RHS) * (LHS - RHS) > 0` over node counts.
pub fn node_count_sign(variant: usize, lhs: usize, rhs: usize) -> bool {
    let d1 = variant as i64 - rhs as i64;
    let d2 = lhs as i64 - rhs as i64;
    d1 * d2 > 0
}

pub fn check_node_count_sign(variant: &Ast, cpat: &Cpat) -> Result<bool, CpatError> {
    Ok(node_count_sign(
        syntax::count_nodes(variant),
        syntax::count_nodes(&cpat.lhs_ast()?),
        syntax::count_nodes(&cpat.rhs_ast()?),
    ))
}

pub fn is_applicable(variant: &Ast, cpat: &Cpat) -> Result<ApplicabilityVerdict, CpatError> {
    is_applicable_with(variant, cpat, Containment::Multiset)
}

pub fn is_applicable_with(
    variant: &Ast,
    cpat: &Cpat,
    mode: Containment,
) -> Result<ApplicabilityVerdict, CpatError> {
    let lhs = cpat.lhs_ast()?;
    let mut failed_rules = Vec::new();
    if !check_control_nodes_with(variant, &lhs, mode) {
        failed_rules.push(FailedRule::ControlNodes);
    }
    if !check_declarations(variant, &lhs) {
        failed_rules.push(FailedRule::Declarations);
    }
    if !check_node_count_sign(variant, cpat)? {
        failed_rules.push(FailedRule::NodeCountSign);
    }
    Ok(ApplicabilityVerdict {
        passed: failed_rules.is_empty(),
        failed_rules,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Ast {
        syntax::parse_fragment(s).unwrap()
    }

    #[test]
    fn count_sign_boundary() {
        assert!(!node_count_sign(5, 9, 5));
        assert!(node_count_sign(6, 9, 5));
        assert!(node_count_sign(3, 2, 5));
        assert!(!node_count_sign(9, 2, 5));
    }

    #[test]
    fn multiset_vs_set() {
        let lhs = p("for a in b:\n    for c in a:\n        x = c");
        let v = p("for a in b:\n    x = a");
        assert!(!check_control_nodes(&v, &lhs));
        assert!(check_control_nodes_with(&v, &lhs, Containment::Set));
    }
}
