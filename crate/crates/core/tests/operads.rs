use std::collections::BTreeMap;

use operad_hopf::operads::{
    all_assemblies, assemblies_on, baseline_factorizations, eta_bar, factorization_table, factorizations, is_prime,
    nu_bar, operad_by_name, Assembly, FactorFilter, ListMonoid, Operad, OperadRegistry, SetMonoid,
};
use operad_hopf::structures::{
    parse_graph, parse_tree, partitions, Caps, Graph, Label, PartitionFilter, Structure, Tree, TreeKind,
};

fn labels(n: u32) -> Vec<Label> {
    (1..=n).collect()
}

fn all_ops() -> Vec<std::sync::Arc<dyn Operad>> {
    let r = OperadRegistry::standard();
    r.names().into_iter().map(|n| r.get(n).unwrap()).collect()
}

fn max_size(op: &dyn Operad, small: usize, big: usize) -> usize {
    if op.species().is_graph() {
        small
    } else {
        big
    }
}

#[test]
fn gr_product_closes_a_triangle() {
    let gr = operad_by_name("gr").unwrap();
    let edge = Structure::Graph(Graph::new(vec![1, 2], vec![(1, 2)]).unwrap());
    let a = Assembly::new(vec![edge, Structure::Graph(Graph::new(vec![3], vec![]).unwrap())]).unwrap();
    let outer = Structure::Graph(Graph::new(vec![0, 1], vec![(0, 1)]).unwrap());
    let k3 = parse_graph("n=3; 1 2; 1 3; 2 3").unwrap();
    assert_eq!(gr.eta(&a, &outer).unwrap(), k3);
}

#[test]
fn arb_product_grafts_roots() {
    let arb = operad_by_name("arb").unwrap();
    let a =
        Assembly::new(vec![parse_tree("1(2)", TreeKind::Rooted).unwrap(), parse_tree("3", TreeKind::Rooted).unwrap()])
            .unwrap();
    let outer = parse_tree("0(1)", TreeKind::Rooted).unwrap();
    assert_eq!(arb.eta(&a, &outer).unwrap(), parse_tree("1(2,3)", TreeKind::Rooted).unwrap());
}

#[test]
fn pointed_set_product_keeps_the_distinguished_point() {
    let ep = operad_by_name("e-pointed").unwrap();
    let a = Assembly::new(vec![Structure::pointed_set([1, 2], 2), Structure::pointed_set([3], 3)]).unwrap();
    let got = ep.eta(&a, &Structure::pointed_set([0, 1], 0)).unwrap();
    assert_eq!(got, Structure::pointed_set([1, 2, 3], 2));
}

#[test]
fn planar_product_puts_inner_children_first() {
    let arb_l = operad_by_name("arb-l").unwrap();
    let a =
        Assembly::new(vec![parse_tree("1(2)", TreeKind::Planar).unwrap(), parse_tree("3", TreeKind::Planar).unwrap()])
            .unwrap();
    let outer = parse_tree("0(1)", TreeKind::Planar).unwrap();
    assert_eq!(arb_l.eta(&a, &outer).unwrap(), parse_tree("1(2,3)", TreeKind::Planar).unwrap());
}

#[test]
fn eta_rejects_mismatched_outer() {
    let gr = operad_by_name("gr").unwrap();
    let a = Assembly::singletons(gr.species(), &[1, 2]);
    let outer = Structure::Graph(Graph::new(vec![0, 1, 2], vec![(0, 1), (1, 2)]).unwrap());
    assert!(gr.eta(&a, &outer).is_err());
}

#[test]
fn set_factorizations_follow_bell_numbers() {
    let ep = operad_by_name("e+").unwrap();
    let f = factorizations(ep.as_ref(), &Structure::set([1, 2, 3]), FactorFilter::default(), &Caps::default()).unwrap();
    assert_eq!(f.len(), 5);
}

#[test]
fn discrete_partition_gives_one_copy_of_m() {
    for op in all_ops() {
        for m in op.enumerate(&labels(3), &Caps::default()).unwrap() {
            let f = factorizations(op.as_ref(), &m, FactorFilter::default(), &Caps::default()).unwrap();
            let discrete: Vec<_> = f.iter().filter(|f| f.blocks() == 3).collect();
            assert_eq!(discrete.len(), 1, "{} {m:?}", op.name());
            assert_eq!(discrete[0].outer.key(), m.key());
        }
    }
}

#[test]
fn k4_minus_e_factorization_multiset() {
    let gr = operad_by_name("gr").unwrap();
    let m = parse_graph("n=4; 1 2;1 3;1 4;2 3;2 4").unwrap();
    let f = factorizations(gr.as_ref(), &m, FactorFilter::default(), &Caps::default()).unwrap();
    let mut counts: BTreeMap<(String, String), usize> = BTreeMap::new();
    for x in &f {
        *counts.entry((format!("{:?}", x.assembly.monomial()), x.outer.key().wire())).or_default() += 1;
    }
    let mut values: Vec<usize> = counts.values().copied().collect();
    values.sort_unstable();
    assert_eq!(values, vec![1, 1, 1, 2]);
}

#[test]
fn primes() {
    let grp = operad_by_name("grp").unwrap();
    let caps = Caps::default();
    for p in 1..=3 {
        let tri = parse_graph(&format!("n=3; p={p}; 1 2; 1 3; 2 3")).unwrap();
        assert!(is_prime(grp.as_ref(), &tri, &caps).unwrap());
    }
    let path = parse_graph("n=3; p=1; 1 2; 2 3").unwrap();
    assert!(!is_prime(grp.as_ref(), &path, &caps).unwrap());
    let ep = operad_by_name("e+").unwrap();
    for n in 3..=5 {
        assert!(!is_prime(ep.as_ref(), &Structure::set(1..=n), &caps).unwrap());
    }
    assert!(is_prime(ep.as_ref(), &Structure::set([1, 2]), &caps).unwrap());
}

#[test]
fn nu_bar_examples() {
    assert_eq!(nu_bar(&SetMonoid, &[vec![1, 2], vec![3]]).unwrap(), vec![1, 2, 3]);
    assert_eq!(nu_bar(&ListMonoid, &[vec![1, 2], vec![3]]).unwrap(), vec![1, 2, 3]);
    assert_eq!(nu_bar(&ListMonoid, &[vec![2, 1]]).unwrap(), vec![2, 1]);
}

#[test]
fn identity_axioms() {
    for op in all_ops() {
        for n in 1..=max_size(op.as_ref(), 4, 4) as u32 {
            for m in op.enumerate(&labels(n), &Caps::default()).unwrap() {
                let ones = Assembly::singletons(op.species(), &m.labels());
                let on_indices = m.relabel(&|u| u - 1);
                assert_eq!(op.eta(&ones, &on_indices).unwrap(), m, "{}", op.name());
                let whole = Assembly::new(vec![m.clone()]).unwrap();
                assert_eq!(op.eta(&whole, &op.species().singleton(0)).unwrap(), m, "{}", op.name());
            }
        }
    }
}

#[test]
fn associativity() {
    for op in all_ops() {
        let n = max_size(op.as_ref(), 4, 4) as u32;
        for a in all_assemblies(op.as_ref(), &labels(n)).unwrap() {
            let k = a.len() as Label;
            for b in all_assemblies(op.as_ref(), &(0..k).collect::<Vec<_>>()).unwrap() {
                let l = b.len() as Label;
                for c in op.enumerate(&(0..l).collect::<Vec<_>>(), &Caps::default()).unwrap() {
                    let left = op.eta(&eta_bar(op.as_ref(), &a, &b).unwrap(), &c).unwrap();
                    let right = op.eta(&a, &op.eta(&b, &c).unwrap()).unwrap();
                    assert_eq!(left, right, "{}", op.name());
                }
            }
        }
    }
}

#[test]
fn left_cancellation() {
    for op in all_ops() {
        let n = max_size(op.as_ref(), 4, 4) as u32;
        for p in partitions(&labels(n), PartitionFilter::default()) {
            let outers = op.enumerate(&(0..p.len() as Label).collect::<Vec<_>>(), &Caps::default()).unwrap();
            for a in assemblies_on(op.as_ref(), &p).unwrap() {
                let mut seen = BTreeMap::new();
                for o in &outers {
                    let m = op.eta(&a, o).unwrap();
                    assert!(seen.insert(m, o.clone()).is_none(), "{} is not cancellative", op.name());
                }
            }
        }
    }
}

#[test]
fn fast_factorizers_match_the_baseline() {
    for op in all_ops() {
        let caps = Caps::default();
        for n in 1..=max_size(op.as_ref(), 5, 5) as u32 {
            let table = factorization_table(op.as_ref(), &labels(n), &caps).unwrap();
            for m in op.enumerate(&labels(n), &caps).unwrap() {
                let mut fast = op.fast_factorizations(&m).expect("every instance has a fast path");
                let mut slow = table.get(&m).cloned().unwrap_or_default();
                fast.sort();
                slow.sort();
                assert_eq!(fast, slow, "{} on {m:?}", op.name());
            }
        }
    }
}

#[test]
fn table_agrees_with_per_structure_baseline() {
    let arb = operad_by_name("arb").unwrap();
    let caps = Caps::default();
    let table = factorization_table(arb.as_ref(), &labels(3), &caps).unwrap();
    for m in arb.enumerate(&labels(3), &caps).unwrap() {
        let mut base = baseline_factorizations(arb.as_ref(), &m, &caps).unwrap();
        let mut t = table[&m].clone();
        base.sort();
        t.sort();
        assert_eq!(base, t);
    }
}

#[test]
fn enriched_and_plain_trees_have_the_same_product() {
    let arb = operad_by_name("arb").unwrap();
    let arb_e = operad_by_name("arb-e").unwrap();
    let to_e = |s: &Structure| Structure::tree(TreeKind::Enriched, s.as_tree().unwrap().clone());
    for p in partitions(&labels(4), PartitionFilter::default()) {
        let outers = arb.enumerate(&(0..p.len() as Label).collect::<Vec<_>>(), &Caps::default()).unwrap();
        for a in assemblies_on(arb.as_ref(), &p).unwrap() {
            let ae = Assembly::new(a.pieces().iter().map(to_e).collect()).unwrap();
            for o in &outers {
                let plain = arb.eta(&a, o).unwrap();
                let enriched = arb_e.eta(&ae, &to_e(o)).unwrap();
                assert_eq!(to_e(&plain), enriched);
            }
        }
    }
}

#[test]
fn planar_products_forget_to_rooted_products() {
    let arb = operad_by_name("arb").unwrap();
    let arb_l = operad_by_name("arb-l").unwrap();
    let forget = |s: &Structure| Structure::tree(TreeKind::Rooted, s.as_tree().unwrap().clone());
    for p in partitions(&labels(4), PartitionFilter::default()) {
        let outers = arb_l.enumerate(&(0..p.len() as Label).collect::<Vec<_>>(), &Caps::default()).unwrap();
        for a in assemblies_on(arb_l.as_ref(), &p).unwrap() {
            let plain = Assembly::new(a.pieces().iter().map(forget).collect()).unwrap();
            for o in &outers {
                let m = arb_l.eta(&a, o).unwrap();
                assert!(m.validate().is_ok());
                assert_eq!(forget(&m), arb.eta(&plain, &forget(o)).unwrap());
            }
        }
    }
}

#[test]
fn solve_outer_inverts_eta() {
    for op in all_ops() {
        let n = 3;
        let table = factorization_table(op.as_ref(), &labels(n), &Caps::default()).unwrap();
        for (m, fs) in &table {
            for f in fs {
                assert_eq!(op.solve_outer(&f.assembly, m).as_ref(), Some(&f.outer), "{}", op.name());
            }
        }
    }
}

#[test]
fn tree_structures_keep_fibers() {
    let t = Tree::from_children(1, BTreeMap::from([(1, vec![3, 2])]));
    let s = Structure::tree(TreeKind::Planar, t);
    assert_eq!(s.as_tree().unwrap().children(1), &[3, 2]);
}
