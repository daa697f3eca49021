use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use operad_hopf::algebra::{rat, Polynomial};
use operad_hopf::hopf::HopfContext;
use operad_hopf::operads::{factorizations, operad_by_name, FactorFilter};
use operad_hopf::schroeder::{
    admissible_colorings, antipode_colorings, antipode_schroeder, biconnected_components, coloring_of_tree,
    enumerate_schroeder, eta_hat, graph_modules_and_quotient, is_module, parse_schroeder, phi, phi_inv,
    schroeder_from_coloring, ColoredTree, SchroederTree,
};
use operad_hopf::structures::{
    enumerate_structures, parse_graph, parse_tree, partitions, Caps, Graph, Label, PartitionFilter, Species, Structure,
    TreeKind,
};

fn labels(n: u32) -> Vec<Label> {
    (1..=n).collect()
}

fn t(s: &Structure) -> Polynomial {
    Polynomial::generator(s.key())
}

fn k2() -> Structure {
    parse_graph("n=2; 1 2").unwrap()
}

fn p3() -> Structure {
    parse_graph("n=3; 1 2; 2 3").unwrap()
}

fn k4_minus_e() -> Structure {
    parse_graph("n=4; 1 2;1 3;1 4;2 3;2 4").unwrap()
}

#[test]
fn k4_minus_e_antipode_by_every_method() {
    let ctx = HopfContext::new(operad_by_name("gr").unwrap(), Caps::default());
    let key = k4_minus_e().key();
    let expected = -t(&k4_minus_e()) + (t(&p3()) * t(&k2())).scale(&rat(3));
    assert_eq!(ctx.antipode_recursive(&key).unwrap(), expected);
    assert_eq!(antipode_schroeder(&ctx, &key).unwrap(), expected);
    assert_eq!(antipode_colorings(&ctx, &key).unwrap(), expected);
    assert_eq!(admissible_colorings(&k4_minus_e()).unwrap().len(), 4);
}

#[test]
fn planar_comb_antipode() {
    let ctx = HopfContext::new(operad_by_name("arb-l").unwrap(), Caps::default());
    let planar = |s: &str| parse_tree(s, TreeKind::Planar).unwrap();
    let comb = planar("1(2(4),3)");
    let (l2, l3, cherry) = (planar("1(2)"), planar("1(2(3))"), planar("1(2,3)"));
    let expected = -t(&l2).pow(3) + t(&l3) * t(&l2) + t(&l2) * t(&cherry) - t(&comb);
    assert_eq!(antipode_colorings(&ctx, &comb.key()).unwrap(), expected);
    assert_eq!(antipode_schroeder(&ctx, &comb.key()).unwrap(), expected);
    assert_eq!(ctx.antipode_recursive(&comb.key()).unwrap(), expected);
}

#[test]
fn grp_bowtie_antipode() {
    let ctx = HopfContext::new(operad_by_name("grp").unwrap(), Caps::default());
    let bowtie = parse_graph("n=5; p=1; 1 2; 1 3; 2 3; 1 4; 1 5; 4 5").unwrap();
    let tri = parse_graph("n=3; p=1; 1 2; 1 3; 2 3").unwrap();
    let expected = -t(&bowtie) + t(&tri).pow(2).scale(&rat(2));
    assert_eq!(antipode_colorings(&ctx, &bowtie.key()).unwrap(), expected);
    assert_eq!(ctx.antipode_recursive(&bowtie.key()).unwrap(), expected);
}

#[test]
fn schroeder_matches_recursive_everywhere() {
    for name in ["e+", "e-pointed", "gr", "grp", "arb", "arb-l", "arb-e"] {
        let op = operad_by_name(name).unwrap();
        let ctx = HopfContext::new(op.clone(), Caps::default());
        let top = if op.species().is_graph() { 4 } else { 5 };
        for n in 1..=top {
            for key in ctx.types(n).unwrap() {
                let s = antipode_schroeder(&ctx, &key).unwrap();
                assert_eq!(s, ctx.antipode_recursive(&key).unwrap(), "{name} {key}");
            }
        }
    }
}

#[test]
fn colorings_match_schroeder() {
    let start = Instant::now();
    for (name, top) in [("arb", 6), ("arb-l", 6), ("arb-e", 6), ("gr", 4), ("grp", 4)] {
        let ctx = HopfContext::new(operad_by_name(name).unwrap(), Caps::default());
        for n in 1..=top {
            for key in ctx.types(n).unwrap() {
                assert_eq!(
                    antipode_colorings(&ctx, &key).unwrap(),
                    antipode_schroeder(&ctx, &key).unwrap(),
                    "{name} {key}"
                );
            }
        }
    }
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn colorings_are_exactly_the_depth_colorings_of_schroeder_trees() {
    for (name, top) in [("arb", 5), ("arb-l", 5), ("gr", 4), ("grp", 4)] {
        let op = operad_by_name(name).unwrap();
        for n in 1..=top {
            for m in op.enumerate(&labels(n), &Caps::default()).unwrap() {
                let trees = enumerate_schroeder(op.as_ref(), &m, &Caps::default()).unwrap();
                let mut from_trees = BTreeSet::new();
                for tr in &trees {
                    let (s, c) = coloring_of_tree(op.as_ref(), tr).unwrap();
                    assert_eq!(s, m);
                    assert!(from_trees.insert(c), "{name}: two trees share a coloring");
                }
                let admissible = admissible_colorings(&m).unwrap();
                assert_eq!(admissible.iter().cloned().collect::<BTreeSet<_>>(), from_trees, "{name} {m:?}");
                for c in &admissible {
                    let tr = schroeder_from_coloring(op.as_ref(), &m, c).unwrap();
                    assert_eq!(eta_hat(op.as_ref(), &tr).unwrap(), m);
                    assert_eq!(&coloring_of_tree(op.as_ref(), &tr).unwrap().1, c);
                }
            }
        }
    }
}

#[test]
fn set_schroeder_counts() {
    let ep = operad_by_name("e+").unwrap();
    let trees = enumerate_schroeder(ep.as_ref(), &Structure::set(1..=3), &Caps::default()).unwrap();
    assert_eq!(trees.len(), 4);
    let counts: Vec<usize> = (1..=5)
        .map(|n| enumerate_schroeder(ep.as_ref(), &Structure::set(1..=n), &Caps::default()).unwrap().len())
        .collect();
    // Total phylogenetic trees with n labelled leaves.
    assert_eq!(counts, vec![1, 1, 4, 26, 236]);
}

#[test]
fn schroeder_trees_by_internal_vertices_match_partition_counts() {
    let ep = operad_by_name("e+").unwrap();
    for n in 1..=6u32 {
        let trees = enumerate_schroeder(ep.as_ref(), &Structure::set(1..=n), &Caps::default()).unwrap();
        for k in 1..=4usize {
            let left = trees.iter().filter(|t| t.internal_vertices() == k).count();
            let filter = PartitionFilter { min_blocks: Some(k), max_blocks: Some(k), block_min_size: Some(2) };
            let right = partitions(&labels(n + k as u32 - 1), filter).count();
            assert_eq!(left, right, "n={n} k={k}");
        }
    }
}

#[test]
fn phi_round_trips_on_pointed_sets() {
    let ep = operad_by_name("e-pointed").unwrap();
    for n in 1..=4 {
        for m in ep.enumerate(&labels(n), &Caps::default()).unwrap() {
            for tr in enumerate_schroeder(ep.as_ref(), &m, &Caps::default()).unwrap() {
                let ct = phi(ep.as_ref(), &tr).unwrap();
                assert_eq!(ct.root(), m.point().unwrap());
                assert_eq!(phi_inv(ep.as_ref(), &ct).unwrap(), tr);
            }
        }
    }
}

#[test]
fn phi_diagrams_commute_on_trees() {
    for name in ["arb", "arb-e", "arb-l"] {
        let op = operad_by_name(name).unwrap();
        let Species::Tree(kind) = op.species() else { unreachable!() };
        for n in 1..=4 {
            for m in op.enumerate(&labels(n), &Caps::default()).unwrap() {
                for tr in enumerate_schroeder(op.as_ref(), &m, &Caps::default()).unwrap() {
                    let ct = phi(op.as_ref(), &tr).unwrap();
                    let evaluated = eta_hat(op.as_ref(), &tr).unwrap();
                    if name == "arb" {
                        assert_eq!(ct.erase_colors(), evaluated);
                    }
                    assert_eq!(ct.nu_hat(kind).unwrap(), evaluated, "{name} {tr}");
                    assert_eq!(phi_inv(op.as_ref(), &ct).unwrap(), tr);
                    // Colors of φ(T) are the depths that created each edge.
                    assert_eq!(ct.coloring(), coloring_of_tree(op.as_ref(), &tr).unwrap().1);
                }
            }
        }
    }
}

#[test]
fn phi_inverse_accepts_exactly_admissible_tree_colorings() {
    let arb = operad_by_name("arb").unwrap();
    for m in arb.enumerate(&labels(4), &Caps::default()).unwrap() {
        let tree = m.as_tree().unwrap();
        for c in admissible_colorings(&m).unwrap() {
            let ct = ColoredTree::from_coloring(tree, false, &c).unwrap();
            let tr = phi_inv(arb.as_ref(), &ct).unwrap();
            assert_eq!(phi(arb.as_ref(), &tr).unwrap(), ct);
        }
    }
}

#[test]
fn phi_rejects_shapeless_decorations() {
    let gr = operad_by_name("gr").unwrap();
    let tr = parse_schroeder("[(0-1) 1 2]", Species::Graph).unwrap();
    assert!(matches!(phi(gr.as_ref(), &tr), Err(operad_hopf::Error::ShapeMismatch(_))));
}

#[test]
fn schroeder_text_round_trips() {
    for name in ["e+", "e-pointed", "gr", "grp", "arb-l"] {
        let op = operad_by_name(name).unwrap();
        for m in op.enumerate(&labels(4), &Caps::default()).unwrap().into_iter().take(20) {
            for tr in enumerate_schroeder(op.as_ref(), &m, &Caps::default()).unwrap() {
                assert_eq!(parse_schroeder(&tr.to_string(), op.species()).unwrap(), tr);
            }
        }
    }
}

/// Blocks as maximal vertex sets inducing a biconnected subgraph.
fn brute_blocks(g: &Graph) -> BTreeSet<Vec<(Label, Label)>> {
    let vs = g.labels().to_vec();
    let biconnected = |s: &[Label]| {
        let h = g.induced(s);
        h.is_connected()
            && (s.len() == 2
                || s.iter()
                    .all(|&x| g.induced(&s.iter().copied().filter(|&y| y != x).collect::<Vec<_>>()).is_connected()))
    };
    let mut sets: Vec<Vec<Label>> = vec![];
    for mask in 1u32..1 << vs.len() {
        let s: Vec<Label> = vs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
        if s.len() >= 2 && biconnected(&s) {
            sets.push(s);
        }
    }
    let maximal = sets.iter().filter(|s| !sets.iter().any(|o| o.len() > s.len() && s.iter().all(|x| o.contains(x))));
    maximal.map(|s| g.induced(s).edges().to_vec()).collect()
}

#[test]
fn biconnected_components_match_brute_force() {
    for n in 1..=5 {
        for s in enumerate_structures(Species::Graph, &labels(n), &Caps::default()).unwrap() {
            let g = s.graph().unwrap();
            let bc = biconnected_components(g);
            assert_eq!(bc.blocks.iter().cloned().collect::<BTreeSet<_>>(), brute_blocks(g), "{g:?}");
            let cut: Vec<Label> = g
                .labels()
                .iter()
                .copied()
                .filter(|&v| {
                    g.labels().len() > 1
                        && !g
                            .induced(&g.labels().iter().copied().filter(|&u| u != v).collect::<Vec<_>>())
                            .is_connected()
                })
                .collect();
            assert_eq!(bc.cutpoints, cut);
        }
    }
}

#[test]
fn modules_are_the_one_block_factorizations() {
    let gr = operad_by_name("gr").unwrap();
    for n in 2..=5 {
        for m in gr.enumerate(&labels(n), &Caps::default()).unwrap() {
            let g = m.graph().unwrap();
            let fs = factorizations(gr.as_ref(), &m, FactorFilter::default(), &Caps::default()).unwrap();
            let one_big: BTreeMap<Vec<Label>, Structure> = fs
                .iter()
                .filter(|f| f.assembly.blocks().iter().filter(|b| b.len() > 1).count() == 1)
                .map(|f| (f.assembly.blocks().iter().find(|b| b.len() > 1).unwrap().clone(), f.outer.clone()))
                .collect();
            for mask in 1u32..1 << n {
                let b: Vec<Label> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                if b.len() < 2 || b.len() == n as usize {
                    continue;
                }
                let mq = graph_modules_and_quotient(g, &b);
                assert_eq!(mq.is_module, one_big.contains_key(&b), "{g:?} {b:?}");
                assert_eq!(is_module(g, &b), mq.is_module);
                if let Some(outer) = one_big.get(&b) {
                    assert_eq!(outer.graph().unwrap(), &mq.quotient);
                }
            }
        }
    }
}

#[test]
fn eta_hat_examples() {
    let ep = operad_by_name("e+").unwrap();
    let tr = parse_schroeder("[() [() 1 2] [() 3 4]]", Species::Set).unwrap();
    assert_eq!(eta_hat(ep.as_ref(), &tr).unwrap(), Structure::set(1..=4));
    let gr = operad_by_name("gr").unwrap();
    assert_eq!(
        eta_hat(gr.as_ref(), &parse_schroeder("7", Species::Graph).unwrap()).unwrap(),
        Species::Graph.singleton(7)
    );
    let m = k4_minus_e();
    let depth_one = SchroederTree::node(m.relabel(&|u| u - 1), (1..=4).map(SchroederTree::Leaf).collect()).unwrap();
    assert_eq!(eta_hat(gr.as_ref(), &depth_one).unwrap(), m);
}
