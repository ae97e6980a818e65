use proptest::prelude::*;

use polyldc::cli::{eval, parse, print, Expr};
use polyldc::monoidal::{substitute, substitute_map, tensor, tensor_map};
use polyldc::polycore::{enumerate_homs, hom_count, Labels, Mor};
use polyldc::{PolyMap, Polynomial};

fn poly(max_pos: usize, max_dir: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(0..=max_dir, 0..=max_pos).prop_map(Polynomial::new)
}

fn small() -> impl Strategy<Value = Polynomial> {
    poly(2, 2)
}

/// Some map `p → q`, chosen by `pick`, if any exists.
fn hom(p: &Polynomial, q: &Polynomial, pick: usize) -> Option<PolyMap> {
    let all = enumerate_homs(p, q).unwrap();
    (!all.is_empty()).then(|| all[pick % all.len()].clone())
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        poly(3, 3).prop_map(Expr::Poly),
        (0..4usize).prop_map(Expr::Lin),
        (0..4usize).prop_map(Expr::Rep),
        Just(Expr::Var("p".into())),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let pair = (inner.clone(), inner.clone());
        prop_oneof![
            pair.clone().prop_map(|(a, b)| Expr::Sum(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Expr::Tensor(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Expr::Sub(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Expr::Close(Box::new(a), Box::new(b))),
            pair.clone().prop_map(|(a, b)| Expr::Coclose(Box::new(a), Box::new(b))),
            pair.prop_map(|(a, b)| Expr::Let("p".into(), Box::new(a), Box::new(b))),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn parse_inverts_print_on_normal_forms(p in poly(5, 6)) {
        prop_assert_eq!(parse(&p.notation()).unwrap(), Expr::Poly(p.clone()));
        prop_assert_eq!(eval(&parse(&p.notation()).unwrap()).unwrap(), p);
    }

    // Parsing folds `+` chains of literals, so printed forms stabilize after
    // one round trip rather than immediately.
    #[test]
    fn printing_stabilizes_under_parsing(e in expr()) {
        let once = print(&e, false);
        let reparsed = parse(&once).unwrap();
        let twice = print(&reparsed, false);
        prop_assert_eq!(print(&parse(&twice).unwrap(), false), twice.clone());
        let wrapped = |x: &Expr| eval(&Expr::Let("p".into(), Box::new(Expr::Poly(Polynomial::y())), Box::new(x.clone())));
        prop_assert_eq!(wrapped(&e).ok(), wrapped(&reparsed).ok());
    }

    #[test]
    fn adjacent_literals_fold(p in poly(3, 3), q in poly(3, 3)) {
        let text = format!("{} + {}", p.notation(), q.notation());
        prop_assert_eq!(parse(&text).unwrap(), Expr::Poly(p.sum(&q)));
    }

    #[test]
    fn composition_is_associative_and_unital(
        ps in prop::collection::vec(small(), 4),
        picks in prop::collection::vec(any::<usize>(), 3),
    ) {
        let f = hom(&ps[0], &ps[1], picks[0]);
        let g = hom(&ps[1], &ps[2], picks[1]);
        let h = hom(&ps[2], &ps[3], picks[2]);
        if let Some(f) = &f {
            prop_assert_eq!(&PolyMap::identity(&ps[0]).then(f).unwrap(), f);
            prop_assert_eq!(&f.then(&PolyMap::identity(&ps[1])).unwrap(), f);
        }
        if let (Some(f), Some(g), Some(h)) = (f, g, h) {
            let left = f.then(&g).unwrap().then(&h).unwrap();
            let right = f.then(&g.then(&h).unwrap()).unwrap();
            prop_assert_eq!(&left, &right);
            let lazy = Mor::from_map(&f).then(&Mor::from_map(&g)).unwrap().then(&Mor::from_map(&h)).unwrap();
            prop_assert_eq!(lazy.tabulate().unwrap(), left);
        }
    }

    #[test]
    fn products_are_functorial(
        ps in prop::collection::vec(small(), 6),
        picks in prop::collection::vec(any::<usize>(), 4),
    ) {
        let maps = (
            hom(&ps[0], &ps[1], picks[0]),
            hom(&ps[1], &ps[2], picks[1]),
            hom(&ps[3], &ps[4], picks[2]),
            hom(&ps[4], &ps[5], picks[3]),
        );
        if let (Some(f), Some(g), Some(f2), Some(g2)) = maps {
            let (fg, fg2) = (f.then(&g).unwrap(), f2.then(&g2).unwrap());
            prop_assert_eq!(
                tensor_map(&fg, &fg2).unwrap(),
                tensor_map(&f, &f2).unwrap().then(&tensor_map(&g, &g2).unwrap()).unwrap()
            );
            prop_assert_eq!(
                substitute_map(&fg, &fg2).unwrap(),
                substitute_map(&f, &f2).unwrap().then(&substitute_map(&g, &g2).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn product_sizes(p in poly(3, 3), q in poly(3, 3)) {
        let t = tensor(&p, &q).unwrap();
        prop_assert_eq!(t.num_positions(), p.num_positions() * q.num_positions());
        prop_assert_eq!(t.total_directions(), p.total_directions() * q.total_directions());
        let s = substitute(&p, &q).unwrap();
        prop_assert_eq!(s.num_positions() as u128, p.eval_count(q.num_positions() as u128).unwrap());
    }

    #[test]
    fn labels_never_change_results(p in small(), q in small(), tag in "[a-z]{1,4}") {
        let labels = Labels {
            positions: (0..p.num_positions()).map(|i| format!("{tag}{i}")).collect(),
            directions: p.cards().iter().map(|&c| (0..c).map(|d| format!("{tag}.{d}")).collect()).collect(),
        };
        let named = p.clone().with_labels(labels);
        prop_assert_eq!(&named, &p);
        prop_assert_eq!(named.notation(), p.notation());
        prop_assert_eq!(hom_count(&named, &q).unwrap(), hom_count(&p, &q).unwrap());
        prop_assert_eq!(tensor(&named, &q).unwrap(), tensor(&p, &q).unwrap());
        prop_assert_eq!(substitute(&q, &named).unwrap(), substitute(&q, &p).unwrap());
    }
}
