use itertools::Itertools;

use super::{check_eta_input, Assembly, Factorization, Operad};
use crate::error::{Error, Result};
use crate::structures::{partitions, Label, PartitionFilter, Species, Structure};

/// E₊: the product of a partition is its union.
pub struct EPlus;

/// E•: the point of the product is the point of the distinguished block.
pub struct EPointed;

impl Operad for EPlus {
    fn name(&self) -> &'static str {
        "e+"
    }

    fn species(&self) -> Species {
        Species::Set
    }

    fn description(&self) -> &'static str {
        "non-empty sets; the Faà di Bruno Hopf algebra"
    }

    fn eta(&self, a: &Assembly, outer: &Structure) -> Result<Structure> {
        check_eta_input(self, a, outer)?;
        Ok(Structure::set(a.labels()))
    }

    fn outer_candidate(&self, a: &Assembly, _m: &Structure) -> Option<Structure> {
        Some(Structure::set(a.index_labels()))
    }

    fn fast_factorizations(&self, m: &Structure) -> Option<Vec<Factorization>> {
        Some(
            partitions(&m.labels(), PartitionFilter::default())
                .map(|p| {
                    let k = p.len() as Label;
                    Factorization {
                        assembly: Assembly::new(p.into_iter().map(Structure::Set).collect()).expect("partition"),
                        outer: Structure::set(0..k),
                    }
                })
                .collect(),
        )
    }
}

impl Operad for EPointed {
    fn name(&self) -> &'static str {
        "e-pointed"
    }

    fn species(&self) -> Species {
        Species::PointedSet
    }

    fn description(&self) -> &'static str {
        "pointed sets; the pointed Faà di Bruno Hopf algebra"
    }

    fn eta(&self, a: &Assembly, outer: &Structure) -> Result<Structure> {
        check_eta_input(self, a, outer)?;
        let b = outer.point().expect("pointed outer") as usize;
        let p = a.pieces()[b].point().ok_or_else(|| Error::InvalidStructure("piece without a point".into()))?;
        Ok(Structure::pointed_set(a.labels(), p))
    }

    fn outer_candidate(&self, a: &Assembly, m: &Structure) -> Option<Structure> {
        let b = a.block_of(m.point()?)?;
        Some(Structure::pointed_set(a.index_labels(), b as Label))
    }

    fn fast_factorizations(&self, m: &Structure) -> Option<Vec<Factorization>> {
        let point = m.point()?;
        let mut out = vec![];
        for p in partitions(&m.labels(), PartitionFilter::default()) {
            let b0 = p.iter().position(|b| b.contains(&point)).expect("cover");
            let choices: Vec<Vec<Label>> =
                p.iter().enumerate().map(|(i, b)| if i == b0 { vec![point] } else { b.clone() }).collect();
            for points in choices.iter().map(|c| c.iter().copied()).multi_cartesian_product() {
                let pieces = p.iter().zip(points).map(|(b, q)| Structure::PointedSet(b.clone(), q)).collect();
                out.push(Factorization {
                    assembly: Assembly::new(pieces).expect("partition"),
                    outer: Structure::pointed_set(0..p.len() as Label, b0 as Label),
                });
            }
        }
        Some(out)
    }
}
