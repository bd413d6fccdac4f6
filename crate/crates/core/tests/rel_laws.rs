use frobrel::Rel;
use proptest::prelude::*;

fn arb_rel(dom: usize, cod: usize) -> impl Strategy<Value = Rel> {
    proptest::collection::vec(any::<bool>(), dom * cod).prop_map(move |bits| {
        let pairs = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| (i / cod, i % cod));
        Rel::from_pairs(dom, cod, pairs).unwrap()
    })
}

fn sized_rel() -> impl Strategy<Value = Rel> {
    (0usize..5, 0usize..5).prop_flat_map(|(d, c)| arb_rel(d, c))
}

/// Composable chain `A -r-> B -s-> C -t-> D`.
fn chain3() -> impl Strategy<Value = (Rel, Rel, Rel)> {
    (0usize..5, 0usize..5, 0usize..5, 0usize..5)
        .prop_flat_map(|(a, b, c, d)| (arb_rel(a, b), arb_rel(b, c), arb_rel(c, d)))
}

/// Membership of `(x, z)` in `r;s`, straight from the definition.
fn composed(r: &Rel, s: &Rel, x: usize, z: usize) -> bool {
    (0..r.cod()).any(|y| r.contains(x, y) && s.contains(y, z))
}

proptest! {
    #[test]
    fn converse_is_an_involution(r in sized_rel()) {
        prop_assert_eq!(r.converse().converse(), r);
    }

    #[test]
    fn composition_matches_definition((r, s, _) in chain3()) {
        let rs = r.compose(&s).unwrap();
        for x in 0..r.dom() {
            for z in 0..s.cod() {
                prop_assert_eq!(rs.contains(x, z), composed(&r, &s, x, z));
            }
        }
    }

    #[test]
    fn composition_is_associative((r, s, t) in chain3()) {
        let left = r.compose(&s).unwrap().compose(&t).unwrap();
        let right = r.compose(&s.compose(&t).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identities_are_neutral(r in sized_rel()) {
        prop_assert_eq!(Rel::identity(r.dom()).compose(&r).unwrap(), r.clone());
        prop_assert_eq!(r.compose(&Rel::identity(r.cod())).unwrap(), r);
    }

    #[test]
    fn converse_reverses_composition((r, s, _) in chain3()) {
        let lhs = r.compose(&s).unwrap().converse();
        let rhs = s.converse().compose(&r.converse()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn converse_preserves_tensor(r in sized_rel(), s in sized_rel()) {
        prop_assert_eq!(r.tensor(&s).converse(), r.converse().tensor(&s.converse()));
    }

    #[test]
    fn tensor_matches_definition(r in sized_rel(), s in sized_rel()) {
        let rs = r.tensor(&s);
        for a in 0..r.dom() {
            for c in 0..s.dom() {
                for b in 0..r.cod() {
                    for d in 0..s.cod() {
                        prop_assert_eq!(
                            rs.contains(a * s.dom() + c, b * s.cod() + d),
                            r.contains(a, b) && s.contains(c, d)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_is_strictly_associative(r in sized_rel(), s in sized_rel(), t in sized_rel()) {
        prop_assert_eq!(r.tensor(&s).tensor(&t), r.tensor(&s.tensor(&t)));
    }

    #[test]
    fn interchange_law(
        (r, t) in (0usize..4, 0usize..4, 0usize..4).prop_flat_map(|(a, b, c)| (arb_rel(a, b), arb_rel(b, c))),
        (s, u) in (0usize..4, 0usize..4, 0usize..4).prop_flat_map(|(a, b, c)| (arb_rel(a, b), arb_rel(b, c))),
    ) {
        let lhs = r.tensor(&s).compose(&t.tensor(&u)).unwrap();
        // elementwise oracle for (r;t) ⊗ (s;u)
        let (sd, uc) = (s.dom(), u.cod());
        for a in 0..r.dom() {
            for c in 0..sd {
                for b in 0..t.cod() {
                    for d in 0..uc {
                        let expect = composed(&r, &t, a, b) && composed(&s, &u, c, d);
                        prop_assert_eq!(lhs.contains(a * sd + c, b * uc + d), expect);
                    }
                }
            }
        }
        prop_assert_eq!(lhs, r.compose(&t).unwrap().tensor(&s.compose(&u).unwrap()));
    }

    #[test]
    fn symmetry_is_unitary(a in 0usize..6, b in 0usize..6) {
        let s = Rel::swap(a, b);
        prop_assert_eq!(s.compose(&s.converse()).unwrap(), Rel::identity(a * b));
        prop_assert_eq!(s.converse().compose(&s).unwrap(), Rel::identity(a * b));
    }

    #[test]
    fn symmetry_is_natural(r in sized_rel(), s in sized_rel()) {
        let lhs = r.tensor(&s).compose(&Rel::swap(r.cod(), s.cod())).unwrap();
        let rhs = Rel::swap(r.dom(), s.dom()).compose(&s.tensor(&r)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mono_matches_powerset_oracle(r in (0usize..5, 0usize..4).prop_flat_map(|(d, c)| arb_rel(d, c))) {
        let images: Vec<Vec<usize>> = (0..1usize << r.dom())
            .map(|mask| {
                let set: Vec<usize> = (0..r.dom()).filter(|i| mask >> i & 1 == 1).collect();
                r.image(&set).into_iter().collect()
            })
            .collect();
        let mut sorted = images.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(r.is_mono().unwrap(), sorted.len() == images.len());
    }
}

#[test]
fn empty_carriers_satisfy_the_laws() {
    let e = Rel::identity(0);
    assert_eq!(e.compose(&e).unwrap(), e);
    assert_eq!(e.tensor(&Rel::identity(3)), Rel::identity(0));
    assert_eq!(
        Rel::swap(0, 4).compose(&Rel::swap(4, 0)).unwrap(),
        Rel::identity(0)
    );
    assert!(e.is_mono().unwrap());
}
