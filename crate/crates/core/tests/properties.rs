use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::sample::Index;

use operad_hopf::algebra::{frac, rat, Monomial, Polynomial};
use operad_hopf::hopf::{HopfContext, Weight};
use operad_hopf::operads::operad_by_name;
use operad_hopf::series::{m_series, PowerSeries};
use operad_hopf::structures::{format_tree, parse_tree, Caps, Graph, Label, Structure, Tree, TreeKind};

/// A rooted tree on `1..=n`: label `i + 2` hangs below one of `1..=i + 1`.
fn tree_strategy(max: usize) -> impl Strategy<Value = Tree> {
    prop::collection::vec(any::<Index>(), 0..max).prop_map(|picks| {
        let parents: BTreeMap<Label, Label> =
            picks.iter().enumerate().map(|(i, ix)| (i as Label + 2, ix.index(i + 1) as Label + 1)).collect();
        Tree::from_parents(1, &parents)
    })
}

/// A connected graph on `1..=n`: a random spanning tree plus extra edges.
fn graph_strategy(max: usize) -> impl Strategy<Value = Graph> {
    (tree_strategy(max), prop::collection::vec((any::<Index>(), any::<Index>()), 0..6)).prop_map(|(t, extra)| {
        let n = t.len();
        let mut edges = t.edges();
        for (a, b) in extra {
            let (a, b) = (a.index(n) as Label + 1, b.index(n) as Label + 1);
            if a != b {
                edges.push((a.min(b), a.max(b)));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Graph::new((1..=n as Label).collect(), edges).expect("connected by construction")
    })
}

fn permuted(n: usize) -> impl Strategy<Value = Vec<Label>> {
    Just((1..=n as Label).collect::<Vec<_>>()).prop_shuffle()
}

fn set_poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-4i64..=4, prop::collection::vec(2u32..=4, 0..3)), 0..4).prop_map(|terms| {
        let mut p = Polynomial::zero();
        for (c, sizes) in terms {
            let m = Monomial::from_keys(sizes.iter().map(|&k| Structure::set(1..=k).key()));
            p += Polynomial::term(rat(c), m);
        }
        p
    })
}

fn delta_series(order: usize) -> impl Strategy<Value = PowerSeries> {
    prop::collection::vec((-5i64..=5, 1i64..=4), order - 1).prop_map(move |cs| {
        let mut coeffs = vec![Polynomial::zero(), Polynomial::one()];
        coeffs.extend(cs.iter().map(|&(p, q)| Polynomial::constant(frac(p, q))));
        PowerSeries::from_coeffs(coeffs, order)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn tree_types_ignore_labels((t, perm) in tree_strategy(7).prop_flat_map(|t| {
        let n = t.len();
        (Just(t), permuted(n))
    })) {
        let s = Structure::tree(TreeKind::Rooted, t.clone());
        let moved = s.relabel(&|u| perm[u as usize - 1]);
        prop_assert_eq!(s.key(), moved.key());
        prop_assert_eq!(parse_tree(&format_tree(&t), TreeKind::Rooted).unwrap(), s);
    }

    #[test]
    fn graph_types_ignore_labels((g, perm) in graph_strategy(6).prop_flat_map(|g| {
        let n = g.len();
        (Just(g), permuted(n))
    })) {
        let s = Structure::Graph(g.clone());
        let moved = Structure::Graph(g.relabel(&|u| perm[u as usize - 1]));
        prop_assert_eq!(s.key(), moved.key());
        let pointed = Structure::PointedGraph(g.clone(), 1);
        let moved = Structure::PointedGraph(g.relabel(&|u| perm[u as usize - 1]), perm[0]);
        prop_assert_eq!(pointed.key(), moved.key());
    }

    #[test]
    fn coproduct_is_an_algebra_map(a in set_poly(), b in set_poly()) {
        let ctx = HopfContext::new(operad_by_name("e+").unwrap(), Caps::default());
        let product = ctx.coproduct_poly(&a).unwrap().mul(&ctx.coproduct_poly(&b).unwrap());
        prop_assert_eq!(ctx.coproduct_poly(&(a.clone() * b.clone())).unwrap(), product);
        let s = Weight::antipode(ctx.clone());
        prop_assert_eq!(s.eval_poly(&(a.clone() * b.clone())).unwrap(), s.eval_poly(&a).unwrap() * s.eval_poly(&b).unwrap());
    }

    #[test]
    fn rooted_trees_satisfy_the_axioms(t in tree_strategy(6)) {
        let ctx = HopfContext::new(operad_by_name("arb").unwrap(), Caps::default());
        let key = Structure::tree(TreeKind::Rooted, t).key();
        let (l, r) = ctx.coassociativity_sides(&key).unwrap();
        prop_assert_eq!(l, r);
        let s = Weight::antipode(ctx.clone());
        prop_assert_eq!(s.after(&s).eval(&key).unwrap(), Polynomial::generator(key.clone()));
    }

    #[test]
    fn reversion_is_an_involution(f in delta_series(6)) {
        let g = f.reversion().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), PowerSeries::x(6));
        prop_assert_eq!(g.compose(&f).unwrap(), PowerSeries::x(6));
        prop_assert_eq!(g.reversion().unwrap(), f);
    }

    #[test]
    fn substitution_matches_convolution(s1 in any::<u64>(), s2 in any::<u64>()) {
        let ctx = HopfContext::new(operad_by_name("e-pointed").unwrap(), Caps::default());
        let (w1, w2) = (Weight::random(&ctx, 5, s1).unwrap(), Weight::random(&ctx, 5, s2).unwrap());
        let composed = m_series(&ctx, &w1, 5).unwrap().compose(&m_series(&ctx, &w2, 5).unwrap()).unwrap();
        prop_assert_eq!(composed, m_series(&ctx, &w2.convolution(&w1, ctx.clone()), 5).unwrap());
    }
}
