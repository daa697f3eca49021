//! Divisibility posets on assemblies and the incidence form of the coproduct.
//!
//! `a₁ ⪯ a₂` when some assembly `a′` on the blocks of `a₁` has
//! `η̄(a₁, a′) = a₂`. Left cancellation makes `a′ = a₂/a₁` unique, and the
//! type of that quotient labels the interval `[a₁, a₂]`.

use std::fmt::Write as _;

use crate::algebra::{rat, Monomial, Tensor2};
use crate::error::{Error, Result};
use crate::operads::{all_assemblies, eta_bar, Assembly, Operad};
use crate::structures::{Label, Structure};

/// Default bound on the ground set.
pub const POSET_CAP: usize = 4;

/// The quotient `a₂/a₁` when `a₁` divides `a₂`.
pub fn divides(op: &dyn Operad, a1: &Assembly, a2: &Assembly) -> Result<Option<Assembly>> {
    if a1.labels() != a2.labels() {
        return Err(Error::LabelMismatch("assemblies live on different label sets".into()));
    }
    let mut outers = vec![];
    for (block, piece) in a2.blocks().iter().zip(a2.pieces()) {
        // Indices of the a₁ blocks inside this block; they must cover it.
        let inside: Vec<usize> = (0..a1.len()).filter(|&i| block.binary_search(&a1.blocks()[i][0]).is_ok()).collect();
        let covered: usize = inside.iter().map(|&i| a1.blocks()[i].len()).sum();
        if covered != block.len()
            || inside.iter().any(|&i| a1.blocks()[i].iter().any(|u| block.binary_search(u).is_err()))
        {
            return Ok(None);
        }
        let sub = Assembly::new(inside.iter().map(|&i| a1.pieces()[i].clone()).collect())?;
        let Some(outer) = op.solve_outer(&sub, piece) else {
            return Ok(None);
        };
        outers.push(outer.relabel(&|pos| inside[pos as usize] as Label));
    }
    Ok(Some(Assembly::new(outers)?))
}

/// Every `a′` with `η̄(a₁, a′) = a₂`, by exhaustive search. Left
/// cancellation says there is at most one.
pub fn all_quotients(op: &dyn Operad, a1: &Assembly, a2: &Assembly) -> Result<Vec<Assembly>> {
    let mut out = vec![];
    for b in all_assemblies(op, &a1.index_labels())? {
        if eta_bar(op, a1, &b)? == *a2 {
            out.push(b);
        }
    }
    Ok(out)
}

/// `P_M[U]`: all assemblies on `U` with the divisibility matrix.
pub struct AssemblyPoset {
    ground: Vec<Assembly>,
    /// `relation[i][j]` is the quotient when `ground[i] ⪯ ground[j]`.
    relation: Vec<Vec<Option<Assembly>>>,
}

impl AssemblyPoset {
    pub fn ground(&self) -> &[Assembly] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        self.relation[i][j].is_some()
    }

    pub fn quotient(&self, i: usize, j: usize) -> Option<&Assembly> {
        self.relation[i][j].as_ref()
    }

    pub fn index_of(&self, a: &Assembly) -> Option<usize> {
        self.ground.iter().position(|g| g == a)
    }

    /// The label of `[i, j]` under the natural relation: the type of `a_j/a_i`.
    pub fn interval_type(&self, i: usize, j: usize) -> Option<Monomial> {
        self.quotient(i, j).map(Assembly::monomial)
    }

    /// Pairs `(i, j)` where `j` covers `i`.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = vec![];
        for i in 0..n {
            for j in 0..n {
                if i != j && self.le(i, j) && !(0..n).any(|k| k != i && k != j && self.le(i, k) && self.le(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// First violation of reflexivity, antisymmetry or transitivity.
    pub fn partial_order_violation(&self) -> Option<String> {
        let n = self.len();
        for i in 0..n {
            if !self.le(i, i) {
                return Some(format!("{:?} does not divide itself", self.ground[i]));
            }
            for j in 0..n {
                if i != j && self.le(i, j) && self.le(j, i) {
                    return Some(format!("{:?} and {:?} divide each other", self.ground[i], self.ground[j]));
                }
                for k in 0..n {
                    if self.le(i, j) && self.le(j, k) && !self.le(i, k) {
                        return Some(format!("transitivity fails at {i} ⪯ {j} ⪯ {k}"));
                    }
                }
            }
        }
        None
    }

    /// Graphviz rendering of the Hasse diagram, nodes named by `label`.
    pub fn to_dot(&self, label: &dyn Fn(&Assembly) -> String) -> String {
        let mut s = String::from("digraph poset {\n  rankdir=BT;\n");
        for (i, a) in self.ground.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", label(a).replace('"', "'"));
        }
        for (i, j) in self.hasse_edges() {
            let _ = writeln!(s, "  n{i} -> n{j};");
        }
        s.push_str("}\n");
        s
    }
}

/// Builds `P_M[U]`, refusing ground sets larger than `cap`.
pub fn build_poset(op: &dyn Operad, labels: &[Label], cap: usize) -> Result<AssemblyPoset> {
    if labels.len() > cap {
        return Err(Error::SizeCapExceeded { size: labels.len(), cap });
    }
    let ground = all_assemblies(op, labels)?;
    let relation = ground
        .iter()
        .map(|a| ground.iter().map(|b| divides(op, a, b)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    Ok(AssemblyPoset { ground, relation })
}

/// `Δ(t_{τ(m)}) = Σ_{0̂ ⪯ a ⪯ {m}} [0̂, a]~ ⊗ [a, {m}]~`, read off the
/// divisibility order.
pub fn incidence_coproduct(op: &dyn Operad, m: &Structure, cap: usize) -> Result<Tensor2> {
    let labels = m.labels();
    if labels.len() > cap {
        return Err(Error::SizeCapExceeded { size: labels.len(), cap });
    }
    let bottom = Assembly::singletons(op.species(), &labels);
    let top = Assembly::new(vec![m.clone()])?;
    let mut out = Tensor2::zero();
    for a in all_assemblies(op, &labels)? {
        let (Some(low), Some(high)) = (divides(op, &bottom, &a)?, divides(op, &a, &top)?) else {
            continue;
        };
        out.add_term(low.monomial(), high.monomial(), rat(1));
    }
    Ok(out)
}
