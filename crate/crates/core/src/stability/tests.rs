use proptest::prelude::*;

use super::*;
use crate::combinat::multisets;
use crate::poly::parse_poly;
use crate::tableaux::{enumerate_syt, ssyt_decompose, Decomposition};

fn ssyt(rows: &[&[usize]]) -> SemiStandardTableau {
    SemiStandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn ms(e: &[usize], n: usize) -> BoundedMultiset {
    BoundedMultiset::new(e.to_vec(), n).unwrap()
}

fn plain(rows: &[&[usize]]) -> RepLabel {
    RepLabel::plain(ssyt(rows))
}

fn key(rows: &[&[usize]], h: &[usize]) -> (SemiStandardTableau, HVector) {
    (ssyt(rows), HVector::from_indices(h.iter().copied()))
}

fn keys(mut v: Vec<(SemiStandardTableau, HVector)>) -> Vec<(SemiStandardTableau, HVector)> {
    v.sort();
    v
}

fn assert_pass(r: &StabilityReport) {
    let why: Vec<String> = r.failures().iter().map(|c| format!("{}: {} vs {}", c.name, c.expected, c.actual)).collect();
    assert!(r.passed(), "{} {} failed: {why:?}", r.operator, r.source);
}

const U0: &[&[usize]] = &[&[0, 0, 0]];
const U1: &[&[usize]] = &[&[0, 0], &[1]];
const U2: &[&[usize]] = &[&[0, 1], &[1]];
const U3: &[&[usize]] = &[&[0], &[1], &[2]];

#[test]
fn operator_examples() {
    assert_eq!(apply(Operator::Le, &plain(&[&[0, 0, 0, 0]])).unwrap(), vec![plain(&[&[0, 1, 1, 1], &[1]])]);
    assert_eq!(apply(Operator::Ext, &plain(&[&[0, 4]])).unwrap(), vec![plain(&[&[0, 0, 4]])]);

    let ext = apply(Operator::Ext, &plain(&[&[0, 1, 1], &[1]])).unwrap();
    assert_eq!(ext.len(), 2);
    assert!(ext.contains(&RepLabel::plain(hat_iota(&ssyt(&[&[0, 1, 1], &[1]])))));
    assert!(ext.contains(&plain(&[&[0, 0, 1], &[1, 1]])));

    let plus = plain(&[&[0, 0]]);
    let minus = plain(&[&[0], &[1]]);
    assert_eq!(apply(Operator::Ext, &plus).unwrap(), vec![plain(U0)]);
    assert_eq!(apply(Operator::Ext, &minus).unwrap(), vec![plain(U1)]);
    assert_eq!(apply(Operator::Le, &plus).unwrap(), vec![plain(U2)]);
    assert_eq!(apply(Operator::Le, &minus).unwrap(), vec![plain(U3)]);

    let ind = apply(Operator::Ind(2), &plus).unwrap();
    assert_eq!(
        label_keys(&ind),
        keys(vec![key(U0, &[2]), key(U2, &[])])
    );
    assert!(apply(Operator::Ind(4), &plus).is_err());
    assert!(apply(Operator::Ind(1), &plain(&[&[0, 2]])).is_err());
}

#[test]
fn images_partition_by_delta() {
    for n in 1..=4 {
        for lam in partitions(n) {
            for m in enumerate_ssyt(&lam, 3) {
                let l = RepLabel::plain(m.clone());
                let all = images(&l).unwrap();
                assert_eq!(all.len(), external_corners(&lam).len());
                let ext = apply(Operator::Ext, &l).unwrap();
                let le = apply(Operator::Le, &l).unwrap();
                assert_eq!(ext.len() + le.len(), all.len());
                assert_eq!(all.iter().filter(|i| i.delta == 1).count(), ext.len());
                assert!(ext.iter().all(|t| t.degree() == m.entry_sum()));
                assert!(le.iter().all(|t| t.degree() == m.entry_sum() + n));
                for im in &all {
                    match ssyt_decompose(&im.target.tableau).unwrap() {
                        Decomposition::Hat { m: back, v, delta } => {
                            assert_eq!((back, v, delta), (m.clone(), im.corner, im.delta));
                        }
                        Decomposition::Plus(_) => panic!("{} came from {m}", im.target),
                    }
                }
            }
        }
    }
}

#[test]
fn ext_of_top_and_le_of_next() {
    let mut labels = apply_all(Operator::Ext, &hom_nks_labels(2, 4, 1).unwrap()).unwrap();
    labels.extend(apply_all(Operator::Le, &hom_nks_labels(2, 3, 1).unwrap()).unwrap());
    let expected = vec![
        key(U0, &[1, 2, 2]),
        key(U1, &[2, 2]),
        key(U0, &[1, 1, 2]),
        key(U1, &[1, 2]),
        key(U0, &[1, 1, 1]),
        key(U1, &[1, 1]),
        key(U2, &[1, 2]),
        key(U3, &[2]),
        key(U2, &[1, 1]),
        key(U3, &[1]),
        key(U0, &[2, 2, 2]),
        key(U2, &[2, 2]),
    ];
    assert_eq!(label_keys(&labels), keys(expected));
    let spans = ext_of(&hom_nks_labels(2, 4, 1).unwrap()[0]).unwrap();
    assert!(spans.iter().all(|s| s.basis.iter().all(|f| f.nvars() == 3)));
}

#[test]
fn three_variables_degree_four() {
    let r = verify_opers_vm(2, 4, None).unwrap();
    assert_pass(&r);
    assert_eq!(r.parts.get("ext"), Some(&5));
    assert_eq!(r.parts.get("le"), Some(&3));
    assert_eq!(r.parts.get("e_{n+1}"), Some(&2));
    let ext = apply_all(Operator::Ext, &all_ssyt(2, 4, None)).unwrap();
    let want: Vec<RepLabel> =
        [&[&[0, 0, 4][..]][..], &[&[0, 0], &[4]], &[&[0, 1, 3]], &[&[0, 1], &[3]], &[&[0, 2, 2]]].iter().map(|r| plain(r)).collect();
    assert_eq!(label_keys(&ext), label_keys(&want));
    let le = apply_all(Operator::Le, &all_ssyt(2, 2, None)).unwrap();
    let want: Vec<RepLabel> = [&[&[0, 3][..], &[1]][..], &[&[0], &[1], &[3]], &[&[0, 2], &[2]]].iter().map(|r| plain(r)).collect();
    assert_eq!(label_keys(&le), label_keys(&want));

    // summing the homogeneous pieces for every multi-set of positive entries with sum 4
    let mut hom = Vec::new();
    for i in [vec![1, 1, 1, 1], vec![1, 1, 2], vec![2, 2], vec![1, 3]] {
        hom.extend(r_ni_hom_labels(&ms(&i, 3)).unwrap());
    }
    let expected = vec![
        key(U0, &[1, 1, 1, 1]),
        key(U1, &[1, 1, 1]),
        key(U0, &[1, 1, 2]),
        key(U2, &[1, 1]),
        key(U1, &[1, 2]),
        key(U3, &[1]),
        key(U0, &[2, 2]),
        key(U2, &[2]),
        key(U0, &[1, 3]),
        key(U1, &[3]),
    ];
    assert_eq!(label_keys(&hom), keys(expected));
}

#[test]
fn five_variables_degree_two() {
    let mut hom5 = Vec::new();
    let mut hom4 = Vec::new();
    for i in [vec![1, 1], vec![2]] {
        hom5.extend(r_ni_hom_labels(&ms(&i, 5)).unwrap());
        hom4.extend(r_ni_hom_labels(&ms(&i, 4)).unwrap());
    }
    let t5 = &[&[0, 0, 0, 0, 0][..]][..];
    let expected = vec![
        key(t5, &[1, 1]),
        key(&[&[0, 0, 0, 0], &[1]], &[1]),
        key(t5, &[2]),
        key(&[&[0, 0, 0, 1], &[1]], &[]),
        key(&[&[0, 0, 0], &[1, 1]], &[]),
    ];
    assert_eq!(label_keys(&hom5), keys(expected));
    let ext = apply_all(Operator::Ext, &hom4).unwrap();
    assert_eq!(label_keys(&ext), label_keys(&hom5));
    for l in &hom4 {
        let img = apply(Operator::Ext, l).unwrap();
        assert_eq!(img.len(), 1);
        assert_eq!(img[0].tableau, hat_iota(&l.tableau));
    }
}

#[test]
fn two_part_sets_at_n5() {
    let t5 = &[&[0, 0, 0, 0, 0][..]][..];
    let expected = vec![
        key(&[&[0, 0, 0, 0], &[1]], &[]),
        key(&[&[0, 0, 0, 1], &[1]], &[]),
        key(&[&[0, 0, 0], &[1, 1]], &[]),
        key(&[&[0, 0, 1], &[1, 1]], &[]),
        key(&[&[0, 0, 1, 1], &[1]], &[]),
        key(&[&[0, 1, 1, 1], &[1]], &[]),
        key(t5, &[1]),
        key(t5, &[2]),
        key(t5, &[3]),
        key(t5, &[4]),
    ];
    assert_eq!(label_keys(&hom_nks_labels(5, 2, 2).unwrap()), keys(expected));
    assert_pass(&verify_homdecom(4, 1, 2).unwrap());
}

#[test]
fn multisets_containing_n() {
    let i = ms(&[0, 3], 3);
    assert_eq!(label_keys(&r_ni_labels(&i).unwrap()), vec![key(&[&[0, 0, 0]], &[2, 3])]);
    assert_eq!(label_keys(&r_ni_hom_labels(&i).unwrap()), vec![key(&[&[0, 0, 0]], &[3])]);
    let j = ms(&[0, 3, 3], 3);
    assert_eq!(label_keys(&r_ni_labels(&j).unwrap()), vec![key(&[&[0, 0, 0]], &[2, 2, 3])]);
    assert_eq!(label_keys(&r_ni_hom_labels(&j).unwrap()), vec![key(&[&[0, 0, 0]], &[3, 3])]);
    assert_eq!(label_keys(&shift_remainders(&i).unwrap()), vec![key(&[&[0, 0, 0]], &[3, 4])]);
    assert_pass(&verify_mapsmulti(3, &i).unwrap());
    assert_pass(&verify_mapsmulti_plain(3, &i).unwrap());
}

#[test]
fn adding_elements_to_a_pair() {
    let i = ms(&[2, 2], 3);
    for l in 0..=3 {
        let r = verify_inc_i(3, &i, l).unwrap();
        assert_pass(&r);
    }
    let r = verify_inc_i(3, &i, 2).unwrap();
    assert_eq!(
        label_keys(&r.labels),
        keys(vec![key(U0, &[1, 2, 2]), key(U2, &[2, 2])])
    );
}

#[test]
fn multiset_maps_exhaustive() {
    for n in 1..=4 {
        for size in 0..=3 {
            for e in multisets(size, 0, n) {
                let i = ms(&e, n);
                assert_pass(&verify_mapsmulti(n, &i).unwrap());
                assert_pass(&verify_mapsmulti_plain(n, &i).unwrap());
            }
        }
    }
}

#[test]
fn homogeneous_pieces_decompose() {
    for n in 1..=3 {
        for k in 0..=3 {
            for s in 0..=(k + 1).min(n + 1) {
                if s <= (n + 1).min(k) || s == k + 1 {
                    assert_pass(&verify_homdecom(n, k, s).unwrap());
                } else {
                    assert!(verify_homdecom(n, k, s).is_err());
                }
            }
        }
    }
    assert!(verify_homdecom(1, 3, 4).is_err());
}

#[test]
fn three_way_split_of_polynomial_rings() {
    for n in 1..=3 {
        for d in 0..=5 {
            let r = verify_opers_vm(n, d, None).unwrap();
            assert_pass(&r);
            for eta in contents(n + 1, d) {
                let r = verify_opers_vm(n, d, Some(&eta)).unwrap();
                assert_pass(&r);
                let zeros = eta.values().iter().filter(|&&x| x == 0).count();
                assert_eq!(r.parts.contains_key("ext"), zeros >= 1);
                assert_eq!(r.parts.contains_key("le"), zeros == 1);
                assert_eq!(r.parts.contains_key("e_{n+1}"), zeros == 0);
            }
        }
    }
    assert!(verify_opers_vm(2, 3, Some(&Content::new(vec![0, 3]))).is_err());
}

#[test]
fn extension_alone_in_low_degree() {
    for n in 1..=5 {
        for d in 0..n.min(4) {
            assert_pass(&verify_extvmlim(n, d).unwrap());
        }
    }
    let r = verify_extvmlim(4, 2).unwrap();
    assert!(r.checks.iter().any(|c| c.name.contains("hat-iota")));
    let r = verify_extvmlim(3, 2).unwrap();
    assert!(!r.checks.iter().any(|c| c.name.contains("hat-iota")));
    assert!(verify_extvmlim(2, 2).is_err());
}

#[test]
fn enlarging_the_multiset() {
    for n in 1..=4 {
        for size in 0..=3 {
            if n == 4 && size == 3 {
                continue;
            }
            for e in multisets(size, 0, n) {
                let i = ms(&e, n);
                for l in 0..=n {
                    assert_pass(&verify_inc_i(n, &i, l).unwrap());
                }
            }
        }
    }
}

#[test]
fn lifting_specht_polynomials() {
    for n in 1..=3 {
        for lam in partitions(n) {
            for d in 0..=4 {
                for m in enumerate_ssyt(&lam, d) {
                    for t in enumerate_syt(&lam) {
                        assert!(verify_forstab(&m, t.tableau()).unwrap(), "{m} {t}");
                    }
                }
            }
        }
    }
    let m = ssyt(&[&[2, 4, 5], &[4]]);
    let t = Tableau::new(vec![vec![1, 3, 4], vec![2]]).unwrap();
    assert_eq!(hat_iota(&m), ssyt(&[&[0, 2, 4, 5], &[4]]));
    assert_eq!(iota(&t), Tableau::new(vec![vec![1, 3, 4, 5], vec![2]]).unwrap());
    assert_eq!(monomial_from_pair(&hat_iota(&m), &iota(&t)).unwrap().0, vec![0, 4, 2, 4, 5]);
    assert!(verify_forstab(&m, &t).unwrap());
    let lifted = specht_polynomial(&hat_iota(&m), &iota(&t)).unwrap();
    let expected = parse_poly(
        "(x2^4 - x1^4)*(x3^2*x4^4*x5^5 + x3^2*x4^5*x5^4 + x3^4*x4^2*x5^5 + x3^4*x4^5*x5^2 + x3^5*x4^2*x5^4 + x3^5*x4^4*x5^2) \
         + (x2^4*x1^2 - x2^2*x1^4)*(x3^4*x4^5 + x3^5*x4^4 + x3^4*x5^5 + x3^5*x5^4 + x4^4*x5^5 + x4^5*x5^4) \
         - (x2^5*x1^4 - x2^4*x1^5)*(x3^2*x4^4 + x3^4*x4^2 + x3^2*x5^4 + x3^4*x5^2 + x4^2*x5^4 + x4^4*x5^2)",
        5,
    )
    .unwrap();
    assert_eq!(lifted, expected);
    assert!(verify_forstab(&m, &Tableau::new(vec![vec![1, 2, 3]]).unwrap()).is_err());
}

#[test]
fn report_serializes() {
    let r = verify_homdecom(2, 2, 1).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["operator"], "homdecom");
    assert!(v["correspondence"].as_array().unwrap().iter().any(|c| c["operator"] == "le"));
    assert_eq!(v["summands"].as_array().unwrap().len(), r.labels.len());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ind_is_ext_times_e_plus_le(n in 1usize..=4, d in 0usize..=4, pick in 0usize..64, t in 0usize..=5) {
        let cs = crate::reps::all_cocharge(n);
        let c = &cs[pick % cs.len()];
        let l = RepLabel::plain(c.ssyt().clone());
        prop_assume!(t <= n + 1 && c.entry_sum() <= d);
        let ind = apply(Operator::Ind(t), &l).unwrap();
        let ext = apply(Operator::Ext, &l).unwrap();
        let le = apply(Operator::Le, &l).unwrap();
        let mut expect: Vec<RepLabel> = ext
            .into_iter()
            .map(|x| RepLabel { hvec: Some(x.h().plus_unit(t)), ..x })
            .chain(le)
            .collect();
        expect.sort();
        let mut got = ind;
        got.sort();
        prop_assert_eq!(label_keys(&got), label_keys(&expect));
    }

    #[test]
    fn substitution_recovers_specht(n in 1usize..=4, d in 0usize..=4, pick in 0usize..512) {
        let lams = partitions(n);
        let lam = &lams[pick % lams.len()];
        let ms = enumerate_ssyt(lam, d);
        prop_assume!(!ms.is_empty());
        let m = &ms[pick % ms.len()];
        let ts = enumerate_syt(lam);
        let t = &ts[(pick / 7) % ts.len()];
        prop_assert!(verify_forstab(m, t.tableau()).unwrap());
    }
}

#[test]
fn homogeneous_pieces_stabilize() {
    for i_max in 0..=2 {
        for size in 0..=3 {
            for e in multisets(size, 0, i_max) {
                if size > 0 && !e.contains(&i_max) {
                    continue;
                }
                for n in (2 * i_max + 1)..=6 {
                    let lower = r_ni_hom_labels(&ms(&e, n)).unwrap();
                    let upper = r_ni_hom_labels(&ms(&e, n + 1)).unwrap();
                    let iotas: Vec<RepLabel> =
                        lower.iter().map(|l| RepLabel { tableau: hat_iota(&l.tableau), ..l.clone() }).collect();
                    assert_eq!(label_keys(&upper), label_keys(&iotas), "I={e:?} n={n}");
                }
            }
        }
    }
}

#[test]
fn new_summands_when_adding_one() {
    let i = ms(&[2, 2], 3);
    let hom = r_ni_hom_labels(&i).unwrap();
    let times = |r: usize| -> Vec<RepLabel> {
        hom.iter().map(|l| RepLabel { hvec: Some(l.h().plus_unit(r)), ..l.clone() }).collect()
    };
    assert_eq!(label_keys(&r_ni_hom_labels(&ms(&[2, 2, 3], 3)).unwrap()), label_keys(&times(3)));
    let mut expected = times(1);
    expected.push(RepLabel { hvec: Some(HVector::from_indices([2, 2])), ..plain(U1) });
    expected.push(RepLabel { hvec: Some(HVector::from_indices([2])), ..plain(U3) });
    assert_eq!(label_keys(&r_ni_hom_labels(&ms(&[1, 2, 2], 3)).unwrap()), label_keys(&expected));
}
