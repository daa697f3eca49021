use operad_hopf::hopf::HopfContext;
use operad_hopf::operads::operad_by_name;
use operad_hopf::posets::{all_quotients, build_poset, divides, incidence_coproduct, POSET_CAP};
use operad_hopf::structures::{Caps, Label};

const ALL: [&str; 7] = ["e+", "e-pointed", "arb", "arb-l", "arb-e", "gr", "grp"];

fn labels(n: u32) -> Vec<Label> {
    (1..=n).collect()
}

#[test]
fn incidence_coproduct_is_the_coproduct() {
    for name in ALL {
        let op = operad_by_name(name).unwrap();
        let ctx = HopfContext::new(op.clone(), Caps::default());
        let top = if op.species().is_graph() { 3 } else { 4 };
        for n in 1..=top {
            for key in ctx.types(n).unwrap() {
                let m = ctx.representative(&key).unwrap();
                assert_eq!(
                    incidence_coproduct(op.as_ref(), &m, POSET_CAP).unwrap(),
                    ctx.coproduct(&key).unwrap(),
                    "{name} {m:?}"
                );
            }
        }
    }
}

#[test]
fn divisibility_is_a_partial_order_with_unique_quotients() {
    for name in ALL {
        let op = operad_by_name(name).unwrap();
        for n in 1..=3 {
            let p = build_poset(op.as_ref(), &labels(n), POSET_CAP).unwrap();
            assert_eq!(p.partial_order_violation(), None, "{name} n={n}");
            for (i, a) in p.ground().iter().enumerate() {
                for (j, b) in p.ground().iter().enumerate() {
                    let found = all_quotients(op.as_ref(), a, b).unwrap();
                    assert!(found.len() <= 1, "{name}: two quotients for {a:?} ⪯ {b:?}");
                    assert_eq!(found.first(), p.quotient(i, j), "{name}");
                }
            }
        }
    }
}

#[test]
fn set_poset_is_the_partition_lattice() {
    let ep = operad_by_name("e+").unwrap();
    for n in 1..=4 {
        let p = build_poset(ep.as_ref(), &labels(n), POSET_CAP).unwrap();
        assert_eq!(p.len(), [1, 2, 5, 15][n as usize - 1]);
        for (i, a) in p.ground().iter().enumerate() {
            for (j, b) in p.ground().iter().enumerate() {
                let refines = a.blocks().iter().all(|x| b.blocks().iter().any(|y| x.iter().all(|u| y.contains(u))));
                assert_eq!(p.le(i, j), refines);
            }
        }
    }
}

#[test]
fn rooted_trees_on_two_labels() {
    // Forest {1},{2} below the two trees 1→2 and 2→1, which are incomparable.
    let arb = operad_by_name("arb").unwrap();
    let p = build_poset(arb.as_ref(), &labels(2), POSET_CAP).unwrap();
    assert_eq!(p.len(), 3);
    let mut edges = p.hasse_edges();
    edges.sort();
    let bottom = p.ground().iter().position(|a| a.len() == 2).unwrap();
    assert_eq!(edges.len(), 2);
    assert!(edges.iter().all(|&(i, _)| i == bottom));
    for a in p.ground() {
        assert!(divides(arb.as_ref(), a, a).unwrap().is_some());
    }
}
