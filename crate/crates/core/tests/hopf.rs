use std::collections::BTreeMap;

use operad_hopf::algebra::{rat, Monomial, Polynomial, Tensor2};
use operad_hopf::hopf::{convolve, counit, counit_poly, HopfContext, Weight};
use operad_hopf::operads::{is_prime, operad_by_name};
use operad_hopf::structures::{
    parse_graph, parse_tree, partitions, Caps, Label, PartitionFilter, Structure, Tree, TreeKind,
};

fn mono(parts: &[&Structure]) -> Monomial {
    Monomial::from_keys(parts.iter().map(|s| s.key()))
}

fn tensor(terms: &[(i64, &[&Structure], &[&Structure])]) -> Tensor2 {
    let mut t = Tensor2::zero();
    for (c, l, r) in terms {
        t.add_term(mono(l), mono(r), rat(*c));
    }
    t
}

fn rooted(s: &str) -> Structure {
    parse_tree(s, TreeKind::Rooted).unwrap()
}

fn planar(s: &str) -> Structure {
    parse_tree(s, TreeKind::Planar).unwrap()
}

#[test]
fn k4_minus_e_coproduct() {
    let ctx = HopfContext::new(operad_by_name("gr").unwrap(), Caps::default());
    let g = parse_graph("n=4; 1 2;1 3;1 4;2 3;2 4").unwrap();
    let p3 = parse_graph("n=3; 1 2; 2 3").unwrap();
    let k2 = parse_graph("n=2; 1 2").unwrap();
    let expected = tensor(&[(1, &[&g], &[]), (2, &[&p3], &[&k2]), (1, &[&k2], &[&p3]), (1, &[], &[&g])]);
    assert_eq!(ctx.coproduct(&g.key()).unwrap(), expected);
}

#[test]
fn rooted_tree_coproduct_has_six_terms() {
    let ctx = HopfContext::new(operad_by_name("arb").unwrap(), Caps::default());
    let t = rooted("1(2,3(4))");
    let (t2, t3, cherry) = (rooted("1(2)"), rooted("1(2(3))"), rooted("1(2,3)"));
    let expected = tensor(&[
        (1, &[], &[&t]),
        (1, &[&t2], &[&cherry]),
        (1, &[&t3], &[&t2]),
        (1, &[&t2], &[&t3]),
        (1, &[&t2, &t2], &[&t2]),
        (1, &[&t], &[]),
    ]);
    let got = ctx.coproduct(&t.key()).unwrap();
    assert_eq!(got.len(), 6);
    assert_eq!(got, expected);
}

#[test]
fn planar_tree_coproducts() {
    let ctx = HopfContext::new(operad_by_name("arb-l").unwrap(), Caps::default());
    let (t2, t3, cherry) = (planar("1(2)"), planar("1(2(3))"), planar("1(2,3)"));
    let right = planar("1(2,3(4))");
    let left = planar("1(2(4),3)");
    let expected_right = tensor(&[
        (1, &[&right], &[]),
        (1, &[&t2], &[&cherry]),
        (1, &[&t2], &[&t3]),
        (1, &[&t2, &t2], &[&t2]),
        (1, &[], &[&right]),
    ]);
    let expected_left = tensor(&[(1, &[&left], &[]), (1, &[&t2], &[&cherry]), (1, &[&t3], &[&t2]), (1, &[], &[&left])]);
    assert_eq!(ctx.coproduct(&right.key()).unwrap(), expected_right);
    assert_eq!(ctx.coproduct(&left.key()).unwrap(), expected_left);
}

#[test]
fn bowtie_coproduct() {
    let ctx = HopfContext::new(operad_by_name("grp").unwrap(), Caps::default());
    let bowtie = parse_graph("n=5; p=1; 1 2; 1 3; 2 3; 1 4; 1 5; 4 5").unwrap();
    let tri = parse_graph("n=3; p=1; 1 2; 1 3; 2 3").unwrap();
    let expected = tensor(&[(1, &[&bowtie], &[]), (2, &[&tri], &[&tri]), (1, &[], &[&bowtie])]);
    assert_eq!(ctx.coproduct(&bowtie.key()).unwrap(), expected);
}

#[test]
fn set_coproduct_matches_partition_oracle() {
    let ctx = HopfContext::new(operad_by_name("e+").unwrap(), Caps::default());
    for n in 1..=6u32 {
        let labels: Vec<Label> = (1..=n).collect();
        let mut oracle = Tensor2::zero();
        for p in partitions(&labels, PartitionFilter::default()) {
            let left = Monomial::from_keys(p.iter().map(|b| Structure::set(b.iter().copied()).key()));
            let right = Monomial::from_keys([Structure::set(1..=p.len() as Label).key()]);
            oracle.add_term(left, right, rat(1));
        }
        assert_eq!(ctx.coproduct(&Structure::set(1..=n).key()).unwrap(), oracle, "n={n}");
    }
}

/// Coproduct of a rooted tree from its edge bicolorings: color-1 edges form a
/// subtree at the root, color-2 edges give the forest on the left.
fn bicoloring_coproduct(t: &Tree) -> Tensor2 {
    let edges = t.edges();
    let parents = t.parents();
    let mut out = Tensor2::zero();
    for mask in 0u32..1 << edges.len() {
        let outer: Vec<_> = edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
        let rooted_at_top = outer.iter().all(|&(p, _)| p == t.root() || outer.iter().any(|&(_, c)| c == p));
        if !rooted_at_top {
            continue;
        }
        let inner: BTreeMap<Label, Vec<Label>> = t
            .labels()
            .into_iter()
            .map(|u| (u, t.children(u).iter().copied().filter(|c| !outer.contains(&(u, *c))).collect()))
            .collect();
        let tops = t.labels().into_iter().filter(|u| parents.get(u).is_none_or(|p| outer.contains(&(*p, *u))));
        let forest = tops.map(|top| {
            let mut ch = BTreeMap::new();
            let mut stack = vec![top];
            while let Some(u) = stack.pop() {
                stack.extend(inner[&u].iter().copied());
                ch.insert(u, inner[&u].clone());
            }
            Structure::tree(TreeKind::Rooted, Tree::from_children(top, ch)).key()
        });
        let mut och: BTreeMap<Label, Vec<Label>> = BTreeMap::from([(t.root(), vec![])]);
        for &(p, c) in &outer {
            och.entry(p).or_default().push(c);
            och.entry(c).or_default();
        }
        let right = Structure::tree(TreeKind::Rooted, Tree::from_children(t.root(), och)).key();
        out.add_term(Monomial::from_keys(forest), Monomial::from_keys([right]), rat(1));
    }
    out
}

#[test]
fn rooted_coproduct_matches_bicoloring_oracle() {
    let op = operad_by_name("arb").unwrap();
    let ctx = HopfContext::new(op.clone(), Caps::default());
    for n in 1..=5 {
        for key in ctx.types(n).unwrap() {
            let m = ctx.representative(&key).unwrap();
            assert_eq!(ctx.coproduct(&key).unwrap(), bicoloring_coproduct(m.as_tree().unwrap()), "{key}");
        }
    }
}

const SIX: [(&str, usize); 6] = [("e+", 5), ("e-pointed", 5), ("arb", 5), ("arb-l", 5), ("gr", 4), ("grp", 4)];

#[test]
fn coassociativity_and_counit() {
    for (name, top) in SIX {
        let ctx = HopfContext::new(operad_by_name(name).unwrap(), Caps::default());
        for n in 1..=top {
            for key in ctx.types(n).unwrap() {
                let (l, r) = ctx.coassociativity_sides(&key).unwrap();
                assert_eq!(l, r, "{name} {key}");
                let (a, b) = ctx.counit_sides(&key).unwrap();
                let t = Polynomial::generator(key.clone());
                assert_eq!(a, t, "{name} {key}");
                assert_eq!(b, t, "{name} {key}");
            }
        }
    }
}

#[test]
fn antipode_is_convolution_inverse() {
    for (name, top) in SIX {
        let ctx = HopfContext::new(operad_by_name(name).unwrap(), Caps::default());
        let s = Weight::antipode(ctx.clone());
        let id = Weight::identity();
        for n in 1..=top {
            for key in ctx.types(n).unwrap() {
                let unit = Polynomial::constant(counit(&key));
                assert_eq!(convolve(&ctx, &s, &id, &key).unwrap(), unit, "{name} {key}");
                assert_eq!(convolve(&ctx, &id, &s, &key).unwrap(), unit, "{name} {key}");
            }
        }
    }
}

#[test]
fn coproduct_is_independent_of_the_representative() {
    for (name, top) in SIX {
        let op = operad_by_name(name).unwrap();
        let ctx = HopfContext::new(op.clone(), Caps::default());
        let top = top.min(4);
        for n in 1..=top as u32 {
            let labels: Vec<Label> = (1..=n).collect();
            for m in op.enumerate(&labels, &Caps::default()).unwrap() {
                let key = ctx.key_of(&m).unwrap();
                assert_eq!(ctx.coproduct_of(&m).unwrap(), ctx.coproduct(&key).unwrap(), "{name} {m:?}");
            }
        }
    }
}

#[test]
fn primitive_exactly_when_prime() {
    for (name, top) in SIX {
        let ctx = HopfContext::new(operad_by_name(name).unwrap(), Caps::default());
        for n in 2..=top.min(4) {
            for key in ctx.types(n).unwrap() {
                let m = ctx.representative(&key).unwrap();
                assert_eq!(ctx.is_primitive(&key).unwrap(), is_prime(ctx.operad(), &m, &Caps::default()).unwrap());
            }
        }
    }
    let gr = HopfContext::new(operad_by_name("gr").unwrap(), Caps::default());
    assert!(gr.is_primitive(&parse_graph("n=4; 1 2; 2 3; 3 4").unwrap().key()).unwrap());
    assert!(gr.is_primitive(&parse_graph("n=3; 1 2; 2 3").unwrap().key()).unwrap());
    assert!(!gr.is_primitive(&parse_graph("n=4; 1 2;1 3;1 4;2 3;2 4").unwrap().key()).unwrap());
}

#[test]
fn convolution_identities() {
    let ctx = HopfContext::new(operad_by_name("e+").unwrap(), Caps::default());
    let t3 = Structure::set(1..=3).key();
    let (s, id, u) = (Weight::antipode(ctx.clone()), Weight::identity(), Weight::counit());
    assert!(convolve(&ctx, &s, &id, &t3).unwrap().is_zero());
    assert_eq!(convolve(&ctx, &id, &u, &t3).unwrap(), Polynomial::generator(t3.clone()));
    assert_eq!(convolve(&ctx, &u, &u, &t3).unwrap(), u.eval(&t3).unwrap());
    assert_eq!(
        counit_poly(&(Polynomial::generator(t3.clone()) * Polynomial::generator(Structure::set(1..=2).key()))),
        rat(0)
    );
    // S∘S = id on a commutative Hopf algebra.
    let twice = s.after(&s);
    for n in 2..=5 {
        let k = Structure::set(1..=n).key();
        assert_eq!(twice.eval(&k).unwrap(), Polynomial::generator(k));
    }
}

#[test]
fn coproduct_is_multiplicative() {
    let ctx = HopfContext::new(operad_by_name("e+").unwrap(), Caps::default());
    let (t2, t3) = (Structure::set(1..=2).key(), Structure::set(1..=3).key());
    let p = Polynomial::generator(t2.clone()) * Polynomial::generator(t3.clone());
    let product = ctx.coproduct(&t2).unwrap().mul(&ctx.coproduct(&t3).unwrap());
    assert_eq!(ctx.coproduct_poly(&p).unwrap(), product);
}
