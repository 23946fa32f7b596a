use std::collections::BTreeSet;
use std::fmt::Debug;

use serde::Serialize;

use crate::combinat::{
    comp_from_multiset, content_of_comp, multiset_from_comp, multisets_with_sum, BoundedMultiset, Partition,
    WeakComposition,
};
use crate::error::Result;
use crate::poly::{column_degree, cmp_t, monomial_from_pair, parse_poly, rational, Monomial, MultiPoly};
use crate::reps::{
    adlambda_pairs, all_cocharge, hvec_to_multiset, lift_labels, multiset_to_hvec, qxnd_cocharge, qxnd_full,
    r_ni_hom_labels, r_ni_labels, verify_direct_sum, verify_rnks_dim, Check, Grouping, HVariant, RepLabel,
    SpanBuilder,
};
use crate::specht::{
    asp_r_sequence, augmented, r_index, row_symmetrized, specht_polynomial, specht_quotient, straighten,
    straightening_residual, strictly_below, AugmentedVariant, HVector, IndexCopy,
};
use crate::stability::{
    apply, apply_all, verify_extvmlim, verify_forstab, verify_homdecom, verify_inc_i, verify_mapsmulti,
    verify_opers_vm, Operator,
};
use crate::tableaux::{
    delta, descent_set, destandardize, dsp_c, enumerate_ssyt, evacuation, external_corners, hat_add, hat_iota,
    iota, is_cocharge, plus_one, ssyt_decompose, CochargeTableau, Decomposition, SemiStandardTableau,
    StandardTableau, Tableau,
};

#[derive(Debug, Clone, Serialize)]
pub struct GoldenCase {
    pub name: String,
    pub checks: Vec<Check>,
    pub error: Option<String>,
    pub pass: bool,
}

type Case = fn() -> Result<Vec<Check>>;

const CASES: &[(&str, Case)] = &[
    ("weak compositions and contents", compositions),
    ("hat decomposition of multi-sets", hat_parts),
    ("multi-sets with prescribed sum", sums),
    ("one-row tableaux of degree 2", one_row),
    ("descents and destandardization", destandardizing),
    ("complemented descent multi-sets", dsp),
    ("minimal cocharge tableaux", minimal_cocharge),
    ("evacuation", evacuating),
    ("external corners and hat addition", hat_addition),
    ("decomposing a tableau back", decomposing),
    ("monomials of pairs", monomials),
    ("column degree order", column_order),
    ("row sums", row_sums),
    ("specht polynomials and quotients", specht),
    ("lifting to one more variable", lifting),
    ("straightening", straightening),
    ("r-indices", r_indices),
    ("h-vectors of the running example", running_example),
    ("augmented polynomials with zero and repeats", augmented_polys),
    ("multi-set representations at n=4", small_multisets),
    ("three variables, four parts", three_variables),
    ("admissible pairs", pairs),
    ("degree-2 part in four variables", degree_two),
    ("sets of size two at n=4", two_sets),
    ("extension and lower extension", operators),
    ("induction from a multi-set containing n", induction),
    ("degree-2 part in five variables", five_variables),
    ("degree-4 part in three variables", three_way),
    ("extension of the top homogeneous pieces", top_pieces),
    ("enlarging a multi-set", enlarging),
];

pub fn case_names() -> Vec<&'static str> {
    CASES.iter().map(|c| c.0).collect()
}

pub fn selftest() -> Vec<GoldenCase> {
    CASES
        .iter()
        .map(|(name, f)| match f() {
            Ok(checks) => {
                let pass = !checks.is_empty() && checks.iter().all(|c| c.pass);
                GoldenCase { name: name.to_string(), checks, error: None, pass }
            }
            Err(e) => GoldenCase { name: name.to_string(), checks: Vec::new(), error: Some(e.to_string()), pass: false },
        })
        .collect()
}

fn same<T: Debug + PartialEq>(name: &str, expected: T, actual: T) -> Check {
    Check { name: name.into(), pass: expected == actual, expected: format!("{expected:?}"), actual: format!("{actual:?}") }
}

fn shown<T: std::fmt::Display + PartialEq>(name: &str, expected: T, actual: T) -> Check {
    Check { name: name.into(), pass: expected == actual, expected: expected.to_string(), actual: actual.to_string() }
}

fn ssyt(rows: &[&[usize]]) -> Result<SemiStandardTableau> {
    SemiStandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

fn syt(rows: &[&[usize]]) -> Result<StandardTableau> {
    StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect())
}

fn tab(rows: &[&[usize]]) -> Result<Tableau> {
    Tableau::new(rows.iter().map(|r| r.to_vec()).collect())
}

fn ms(e: &[usize], n: usize) -> Result<BoundedMultiset> {
    BoundedMultiset::new(e.to_vec(), n)
}

fn poly(s: &str, n: usize) -> Result<MultiPoly> {
    parse_poly(s, n)
}

fn label(rows: &[&[usize]], h: &[usize]) -> Result<RepLabel> {
    Ok(RepLabel { tableau: ssyt(rows)?, hvec: Some(HVector::from_indices(h.iter().copied())), multiset: None })
}

/// Sorted printable summand names, ignoring multi-set annotations.
fn names(labels: &[RepLabel]) -> Vec<String> {
    let mut v: Vec<String> = labels
        .iter()
        .map(|l| RepLabel { multiset: None, hvec: Some(l.h()), ..l.clone() }.to_string())
        .collect();
    v.sort();
    v
}

fn expect(spec: &[(&[&[usize]], &[usize])]) -> Result<Vec<String>> {
    let labels = spec.iter().map(|(r, h)| label(r, h)).collect::<Result<Vec<_>>>()?;
    Ok(names(&labels))
}

const T0000: &[&[usize]] = &[&[0, 0, 0, 0]];
const U0: &[&[usize]] = &[&[0, 0, 0]];
const U1: &[&[usize]] = &[&[0, 0], &[1]];
const U2: &[&[usize]] = &[&[0, 1], &[1]];
const U3: &[&[usize]] = &[&[0], &[1], &[2]];
const UP: &[&[usize]] = &[&[0, 0]];
const UM: &[&[usize]] = &[&[0], &[1]];

fn compositions() -> Result<Vec<Check>> {
    let a = WeakComposition::new(vec![1, 0, 3, 0]);
    let b = WeakComposition::new(vec![0, 0, 1, 0, 2, 1]);
    Ok(vec![
        same("comp of {1,1,4}", a.clone(), comp_from_multiset(&[1, 1, 4], 4)?),
        same("comp of {0,0,1,1,3}", b.clone(), comp_from_multiset(&[0, 0, 1, 1, 3], 4)?),
        same("multi-set of 1030", ms(&[1, 1, 4], 4)?, multiset_from_comp(&a)),
        same("multi-set of 001021", ms(&[0, 0, 1, 1, 3], 4)?, multiset_from_comp(&b)),
        same("content of 1030", vec![0, 2, 2, 2], content_of_comp(&a).values().to_vec()),
        same("content of 001021", vec![2, 4, 4, 5], content_of_comp(&b).values().to_vec()),
    ])
}

fn hat_parts() -> Result<Vec<Check>> {
    let h = ms(&[0, 3, 3], 4)?.hat_decompose();
    let g = ms(&[2, 3, 5, 5, 6, 7, 7], 8)?.hat_decompose();
    Ok(vec![
        same("hat of {0,3,3}", (BTreeSet::from([3]), 2, ms(&[0, 3], 4)?), (h.hat_set, h.k_hat, h.remainder)),
        same(
            "hat of {2,3,5,5,6,7,7}",
            (BTreeSet::from([2, 3, 5, 6, 7]), 6, ms(&[5, 7], 8)?),
            (g.hat_set, g.k_hat, g.remainder),
        ),
    ])
}

fn sums() -> Result<Vec<Check>> {
    Ok(vec![same("positive entries up to 3 with sum 2", vec![vec![1, 1], vec![2]], multisets_with_sum(2, 1, 3))])
}

fn one_row() -> Result<Vec<Check>> {
    let got = enumerate_ssyt(&Partition::new(vec![4])?, 2);
    Ok(vec![same("SSYT((4)) of sum 2", vec![ssyt(&[&[0, 0, 0, 2]])?, ssyt(&[&[0, 0, 1, 1]])?], got)])
}

fn destandardizing() -> Result<Vec<Check>> {
    let s = syt(&[&[1, 3, 4], &[2]])?;
    Ok(vec![
        same("descent set", BTreeSet::from([1]), descent_set(&s)),
        same("ct with {1,1,4}", ssyt(&[&[0, 2, 2], &[2]])?, destandardize(&s, &ms(&[1, 1, 4], 4)?)?),
        same("ct with {0,0,1,1,3}", ssyt(&[&[2, 4, 5], &[4]])?, destandardize(&s, &ms(&[0, 0, 1, 1, 3], 4)?)?),
    ])
}

fn dsp() -> Result<Vec<Check>> {
    let a = ssyt(&[&[0, 2, 2], &[2]])?;
    let b = ssyt(&[&[2, 4, 5], &[4]])?;
    Ok(vec![
        same("multi-set of 022/2", (ms(&[3, 3], 4)?, 6), (dsp_c(&a), a.entry_sum())),
        same("multi-set of 245/4", (ms(&[1, 3, 3, 4, 4], 4)?, 15), (dsp_c(&b), b.entry_sum())),
        same("sum law", dsp_c(&b).sum(), b.entry_sum()),
    ])
}

fn minimal_cocharge() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for parts in [vec![3, 2, 2, 1], vec![4], vec![1, 1, 1]] {
        let lam = Partition::new(parts)?;
        let c = CochargeTableau::minimal(&lam);
        let rows_ok = c.rows().iter().enumerate().all(|(i, r)| r.iter().all(|&x| x == i));
        out.push(Check::flag(format!("C0 of {lam} is cocharge with row i filled by i-1"), rows_ok && is_cocharge(c.ssyt())));
    }
    Ok(out)
}

fn evacuating() -> Result<Vec<Check>> {
    let s = syt(&[&[1, 3, 4, 8], &[2, 5, 6], &[7]])?;
    Ok(vec![same("ev S", syt(&[&[1, 2, 4, 7], &[3, 6, 8], &[5]])?, evacuation(&s))])
}

fn hat_addition() -> Result<Vec<Check>> {
    let m = ssyt(&[&[0, 1, 2, 7], &[1, 4, 4], &[6]])?;
    let ec = external_corners(m.shape());
    let v = ec[2];
    Ok(vec![
        same("|EC(4,3,1)|", 4, ec.len()),
        same("third corner row", 2, v.row),
        same("δ at the third-row corner", 0, delta(&m, v)?),
        same("M hat-plus v", ssyt(&[&[0, 2, 3, 8], &[1, 5, 5], &[2, 7]])?, hat_add(&m, v)?),
        same("hat-iota of 245/4", ssyt(&[&[0, 2, 4, 5], &[4]])?, hat_iota(&ssyt(&[&[2, 4, 5], &[4]])?)),
    ])
}

fn decomposing() -> Result<Vec<Check>> {
    let m = ssyt(&[&[0, 1, 2, 7], &[1, 4, 4], &[6]])?;
    let first = external_corners(m.shape())[0];
    Ok(vec![
        same("M_+ decomposes as plus", Decomposition::Plus(m.clone()), ssyt_decompose(&plus_one(&m))?),
        same(
            "hat-iota M decomposes as hat",
            Decomposition::Hat { m: m.clone(), v: first, delta: 1 },
            ssyt_decompose(&hat_iota(&m))?,
        ),
    ])
}

fn monomials() -> Result<Vec<Check>> {
    let m = ssyt(&[&[2, 4, 5], &[4]])?;
    let t = tab(&[&[1, 3, 4], &[2]])?;
    Ok(vec![
        same("p_{M,T}", Monomial(vec![2, 4, 4, 5]), monomial_from_pair(&m, &t)?),
        same("p of the lifted pair", Monomial(vec![0, 4, 2, 4, 5]), monomial_from_pair(&hat_iota(&m), &iota(&t))?),
    ])
}

fn column_order() -> Result<Vec<Check>> {
    let t = tab(&[&[1, 3, 4], &[2]])?;
    let a = Monomial(vec![1, 0, 1, 3]);
    let b = Monomial(vec![0, 3, 1, 1]);
    Ok(vec![
        same("column degree of x1x3x4^3", vec![1, 1, 3], column_degree(&a, &t)),
        same("column degree of x2^3x3x4", vec![3, 1, 1], column_degree(&b, &t)),
        same("311 below 113", std::cmp::Ordering::Less, cmp_t(&b, &a, &t)),
    ])
}

fn row_sums() -> Result<Vec<Check>> {
    let t = tab(&[&[1, 3, 4], &[2]])?;
    let (p, s) = row_symmetrized(&tab(&[&[0, 2, 2], &[2]])?, &t)?;
    let (q, r) = row_symmetrized(&tab(&[&[2, 4, 5], &[4]])?, &t)?;
    let six = poly(
        "x2^4*(x1^2*x3^4*x4^5 + x1^2*x3^5*x4^4 + x1^4*x3^2*x4^5 + x1^4*x3^5*x4^2 + x1^5*x3^2*x4^4 + x1^5*x3^4*x4^2)",
        4,
    )?;
    Ok(vec![
        shown("row sum for 022/2", poly("x2^2*(x1^2*x3^2 + x1^2*x4^2 + x3^2*x4^2)", 4)?, p),
        same("stabilizer for 022/2", 2, s),
        shown("row sum for 245/4", six.clone(), q),
        same("six terms", 6, six.len()),
        same("stabilizer for 245/4", 1, r),
    ])
}

fn specht() -> Result<Vec<Check>> {
    let t = tab(&[&[1, 3, 4], &[2]])?;
    let a = ssyt(&[&[0, 2, 2], &[2]])?;
    let b = ssyt(&[&[2, 4, 5], &[4]])?;
    let fa = specht_polynomial(&a, &t)?;
    Ok(vec![
        shown("F for 022/2", poly("(x2^2 - x1^2)*x3^2*x4^2", 4)?, fa.clone()),
        same("factored F", "(x2^2 - x1^2)*x3^2*x4^2".to_string(), fa.factored()),
        shown("quotient for 022/2", poly("(x1 + x2)*x3^2*x4^2", 4)?, specht_quotient(&a, &t)?),
        shown("division by x2 - x1", poly("(x1 + x2)*x3^2*x4^2", 4)?, fa.divide_exact(&poly("x2 - x1", 4)?)?),
        shown(
            "F for 245/4",
            poly("(x2^4*x1^2 - x2^2*x1^4)*(x3^4*x4^5 + x3^5*x4^4) - (x2^5*x1^4 - x2^4*x1^5)*(x3^2*x4^4 + x3^4*x4^2)", 4)?,
            specht_polynomial(&b, &t)?,
        ),
        shown(
            "quotient for 245/4",
            poly("(x2^2*x1^3 + x2^3*x1^2)*(x3^4*x4^5 + x3^5*x4^4) - x1^4*x2^4*(x3^2*x4^4 + x3^4*x4^2)", 4)?,
            specht_quotient(&b, &t)?,
        ),
    ])
}

fn lifting() -> Result<Vec<Check>> {
    let m = ssyt(&[&[2, 4, 5], &[4]])?;
    let t = tab(&[&[1, 3, 4], &[2]])?;
    let lifted = specht_polynomial(&hat_iota(&m), &iota(&t))?;
    let expected = poly(
        "(x2^4 - x1^4)*(x3^2*x4^4*x5^5 + x3^2*x4^5*x5^4 + x3^4*x4^2*x5^5 + x3^4*x4^5*x5^2 + x3^5*x4^2*x5^4 + x3^5*x4^4*x5^2) \
         + (x2^4*x1^2 - x2^2*x1^4)*(x3^4*x4^5 + x3^5*x4^4 + x3^4*x5^5 + x3^5*x5^4 + x4^4*x5^5 + x4^5*x5^4) \
         - (x2^5*x1^4 - x2^4*x1^5)*(x3^2*x4^4 + x3^4*x4^2 + x3^2*x5^4 + x3^4*x5^2 + x4^2*x5^4 + x4^4*x5^2)",
        5,
    )?;
    Ok(vec![
        same("iota T", tab(&[&[1, 3, 4, 5], &[2]])?, iota(&t)),
        shown("F of the lifted pair", expected, lifted.clone()),
        shown("x5 = 0 gives F_{M,T}", specht_polynomial(&m, &t)?, lifted.substitute_last_zero()),
        Check::flag("lifting identities hold", verify_forstab(&m, &t)?),
        Check::flag("all-zero M lifts trivially", verify_forstab(&ssyt(&[&[0, 0, 0]])?, &tab(&[&[1, 2, 3]])?)?),
    ])
}

fn straightening() -> Result<Vec<Check>> {
    let h = tab(&[&[1, 1, 3], &[0]])?;
    let t = tab(&[&[1, 3, 4], &[2]])?;
    let st = straighten(&h, &t)?;
    let residual = straightening_residual(&h, &t, &st)?;
    Ok(vec![
        same("straightened tableau", Some(ssyt(&[&[0, 1, 3], &[1]])?), st.tableau.clone()),
        shown("coefficient", rational(-2), st.coefficient.clone()),
        Check::flag("residual strictly below 113", strictly_below(&residual, &h, &t)?),
    ])
}

fn r_indices() -> Result<Vec<Check>> {
    let i = ms(&[0, 3, 3], 4)?;
    let j = ms(&[2, 3, 5, 5, 6, 7, 7], 8)?;
    let seq: Vec<usize> = asp_r_sequence(&BTreeSet::from([2, 5, 6]), &j)?.iter().map(|s| s.2).collect();
    Ok(vec![
        same("hat copy of 3", 2, r_index(3, &i, IndexCopy::Hat)?),
        same("remainder copy of 3", 3, r_index(3, &i, IndexCopy::Remainder)?),
        same("index of 0", 4, r_index(0, &i, IndexCopy::Remainder)?),
        same("sequence of the running example", vec![1, 2, 3, 5], seq),
    ])
}

fn cocharge_with(n: usize, d: &[usize]) -> Option<CochargeTableau> {
    let want: BTreeSet<usize> = d.iter().copied().collect();
    all_cocharge(n).into_iter().find(|c| c.dsp_c_set() == want)
}

fn running_example() -> Result<Vec<Check>> {
    let Some(c) = cocharge_with(8, &[2, 5, 6]) else {
        return Ok(vec![Check::flag("cocharge tableau with descents {2,5,6} exists", false)]);
    };
    let i = ms(&[2, 3, 5, 5, 6, 7, 7], 8)?;
    let ib = ms(&[0, 2, 5, 5, 5, 6, 8], 8)?;
    let seq = HVector::from_indices([4, 6, 6, 8]);
    Ok(vec![
        shown("h(C,I)", HVector::from_indices([3, 5, 7, 7]), multiset_to_hvec(&c, &i)?.1),
        shown("plain h-vector of I_b", seq.clone(), multiset_to_hvec(&c, &ib)?.0),
        same("I_b from 4668", ib.clone(), hvec_to_multiset(&c, &seq, 8, HVariant::Plain)?),
        same("k-hat of I_b", 4, ib.hat_decompose().k_hat),
    ])
}

fn augmented_polys() -> Result<Vec<Check>> {
    let triv = CochargeTableau::minimal(&Partition::new(vec![4])?);
    let t = tab(&[&[1, 2, 3, 4]])?;
    let i = ms(&[0, 3, 3], 4)?;
    let e2 = poly("x1*x2 + x1*x3 + x1*x4 + x2*x3 + x2*x4 + x3*x4", 4)?;
    let e3 = poly("x1*x2*x3 + x1*x2*x4 + x1*x3*x4 + x2*x3*x4", 4)?;
    let e4 = poly("x1*x2*x3*x4", 4)?;
    Ok(vec![
        shown("F^I", &(&e2 * &e3) * &e4, augmented(&triv, &t, &i, AugmentedVariant::Plain)?),
        shown("F^{I,hom}", &e3 * &e3, augmented(&triv, &t, &i, AugmentedVariant::Homogeneous)?),
    ])
}

fn small_multisets() -> Result<Vec<Check>> {
    let two = r_ni_labels(&ms(&[2], 4)?)?;
    let dim: usize = two.iter().map(RepLabel::dimension).sum();
    let mut out = vec![
        same("R_{4,{2}}", expect(&[(T0000, &[1]), (&[&[0, 0, 1], &[1]], &[]), (&[&[0, 0], &[1, 1]], &[])])?, names(&two)),
        same("dimension of R_{4,{2}}", 6, dim),
        same(
            "R_{4,{0,3,3}}",
            expect(&[(T0000, &[2, 3, 4]), (&[&[0, 1, 1], &[1]], &[3, 4])])?,
            names(&r_ni_labels(&ms(&[0, 3, 3], 4)?)?),
        ),
    ];
    for n in 1..=4 {
        let zeros = vec![0; n];
        out.push(same(
            &format!("R_{{{n},∅}} is trivial"),
            expect(&[(&[&zeros], &[])])?,
            names(&r_ni_labels(&BoundedMultiset::empty(n))?),
        ));
    }
    Ok(out)
}

fn three_variables() -> Result<Vec<Check>> {
    type Side<'a> = Vec<(&'a [&'a [usize]], &'a [usize])>;
    let cases: Vec<(&[usize], Side, Side)> = vec![
        (&[1, 2, 3], vec![(U0, &[]), (U1, &[]), (U2, &[]), (U3, &[])], vec![(U0, &[1, 2, 3]), (U1, &[2, 3]), (U2, &[1, 3]), (U3, &[3])]),
        (&[1, 2, 2], vec![(U0, &[1]), (U1, &[1]), (U2, &[1]), (U3, &[1])], vec![(U0, &[1, 2, 2]), (U1, &[2, 2]), (U2, &[1, 2]), (U3, &[2])]),
        (&[1, 3, 3], vec![(U0, &[1, 1]), (U1, &[1, 1])], vec![(U0, &[1, 3, 3]), (U1, &[3, 3])]),
        (&[2, 3, 3], vec![(U0, &[1, 1, 1]), (U2, &[1, 1])], vec![(U0, &[2, 3, 3]), (U2, &[3, 3])]),
        (&[1, 1, 2], vec![(U0, &[2]), (U1, &[2]), (U2, &[2]), (U3, &[2])], vec![(U0, &[1, 1, 2]), (U1, &[1, 2]), (U2, &[1, 1]), (U3, &[1])]),
        (&[1, 1, 3], vec![(U0, &[1, 2]), (U1, &[1, 2])], vec![(U0, &[1, 1, 3]), (U1, &[1, 3])]),
        (&[1, 1, 1], vec![(U0, &[2, 2]), (U1, &[2, 2])], vec![(U0, &[1, 1, 1]), (U1, &[1, 1])]),
        (&[2, 2, 3], vec![(U0, &[1, 1, 2]), (U2, &[1, 2])], vec![(U0, &[2, 2, 3]), (U2, &[2, 3])]),
        (&[2, 2, 2], vec![(U0, &[1, 2, 2]), (U2, &[2, 2])], vec![(U0, &[2, 2, 2]), (U2, &[2, 2])]),
        (&[3, 3, 3], vec![(U0, &[2, 2, 2])], vec![(U0, &[3, 3, 3])]),
    ];
    let mut out = Vec::new();
    for (i, p, h) in cases {
        let set = ms(i, 3)?;
        out.push(same(&format!("R_{{3,{set}}}"), expect(&p)?, names(&r_ni_labels(&set)?)));
        out.push(same(&format!("R^hom_{{3,{set}}}"), expect(&h)?, names(&r_ni_hom_labels(&set)?)));
    }
    for s in 0..=3 {
        out.push(Check::flag(format!("dim R_{{3,4,{s}}}"), verify_rnks_dim(3, 4, s)?.passed()));
    }
    Ok(out)
}

fn pairs() -> Result<Vec<Check>> {
    let lam = Partition::new(vec![3, 1])?;
    let got = adlambda_pairs(&lam, 2);
    let want = vec![
        (CochargeTableau::new(ssyt(&[&[0, 0, 0], &[1]])?)?, ms(&[1, 1], 4)?),
        (CochargeTableau::new(ssyt(&[&[0, 0, 1], &[1]])?)?, ms(&[2], 4)?),
    ];
    let total: usize = crate::combinat::partitions(2).iter().map(|l| adlambda_pairs(l, 4).len()).sum();
    Ok(vec![
        same("pairs for (3,1), d=2", want, got),
        same("pairs for (4), d=2", 2, adlambda_pairs(&Partition::new(vec![4])?, 2).len()),
        same("pairs for n=2, d=4", 5, total),
    ])
}

fn degree_two() -> Result<Vec<Check>> {
    let full = qxnd_full(4, 2, Grouping::ByContent)?;
    let coch = qxnd_cocharge(4, 2)?;
    let parts = SpanBuilder::new().spans(&full.labels)?;
    let small = qxnd_cocharge(2, 4)?;
    Ok(vec![
        same(
            "full decomposition",
            expect(&[(&[&[0, 0, 0, 2]], &[]), (&[&[0, 0, 0], &[2]], &[]), (&[&[0, 0, 1, 1]], &[]), (&[&[0, 0, 1], &[1]], &[]), (&[&[0, 0], &[1, 1]], &[])])?,
            names(&full.labels),
        ),
        same("rank of the full decomposition", 10, full.rank),
        same(
            "cocharge decomposition",
            expect(&[(T0000, &[1, 1]), (&[&[0, 0, 0], &[1]], &[1]), (T0000, &[2]), (&[&[0, 0, 1], &[1]], &[]), (&[&[0, 0], &[1, 1]], &[])])?,
            names(&coch.labels),
        ),
        same("rank of the cocharge decomposition", 10, coch.rank),
        Check::flag("five summands form a direct sum of dimension 10", verify_direct_sum(&parts, 10).passed()),
        same(
            "cocharge decomposition at n=2, d=4",
            expect(&[(UP, &[1, 1, 1, 1]), (UM, &[1, 1, 1]), (UP, &[1, 1, 2]), (UM, &[1, 2]), (UP, &[2, 2])])?,
            names(&small.labels),
        ),
    ])
}

fn two_sets() -> Result<Vec<Check>> {
    let mut union = Vec::new();
    for i in [[1, 2], [1, 3], [2, 3]] {
        union.extend(r_ni_labels(&ms(&i, 4)?)?);
    }
    Ok(vec![
        same(
            "R_{4,{1,2}}",
            expect(&[(T0000, &[]), (&[&[0, 0, 0], &[1]], &[]), (&[&[0, 0, 1], &[1]], &[]), (&[&[0, 0], &[1, 1]], &[]), (&[&[0, 0], &[1], &[2]], &[])])?,
            names(&r_ni_labels(&ms(&[1, 2], 4)?)?),
        ),
        same("lift at s=3 is the union over {1,2},{1,3},{2,3}", names(&union), names(&lift_labels(4, 3, 3)?)),
        Check::flag("dim R_{4,3,3}", verify_rnks_dim(4, 3, 3)?.passed()),
    ])
}

fn operators() -> Result<Vec<Check>> {
    let up = label(UP, &[])?;
    let um = label(UM, &[])?;
    Ok(vec![
        same("Ext U+", expect(&[(U0, &[])])?, names(&apply(Operator::Ext, &up)?)),
        same("Ext U-", expect(&[(U1, &[])])?, names(&apply(Operator::Ext, &um)?)),
        same("LE U+", expect(&[(U2, &[])])?, names(&apply(Operator::Le, &up)?)),
        same("LE U-", expect(&[(U3, &[])])?, names(&apply(Operator::Le, &um)?)),
        same("Ext V04", expect(&[(&[&[0, 0, 4]], &[])])?, names(&apply(Operator::Ext, &label(&[&[0, 4]], &[])?)?)),
        same("LE V0000", expect(&[(&[&[0, 1, 1, 1], &[1]], &[])])?, names(&apply(Operator::Le, &label(T0000, &[])?)?)),
    ])
}

fn induction() -> Result<Vec<Check>> {
    let i = ms(&[0, 3], 3)?;
    let hom = r_ni_hom_labels(&i)?;
    Ok(vec![
        same("R_{3,{0,3}}", expect(&[(U0, &[2, 3])])?, names(&r_ni_labels(&i)?)),
        same("R^hom_{3,{0,3}}", expect(&[(U0, &[3])])?, names(&hom)),
        same(
            "Ind_3 gives R^hom_{4,{0,3,3}}",
            names(&r_ni_hom_labels(&ms(&[0, 3, 3], 4)?)?),
            names(&apply_all(Operator::Ind(3), &hom)?),
        ),
        Check::flag("multi-set maps hold", verify_mapsmulti(3, &i)?.passed()),
        Check::flag("empty multi-set maps hold", verify_mapsmulti(3, &BoundedMultiset::empty(3))?.passed()),
    ])
}

fn five_variables() -> Result<Vec<Check>> {
    let mut hom4 = Vec::new();
    let mut hom5 = Vec::new();
    for i in [vec![1, 1], vec![2]] {
        hom4.extend(r_ni_hom_labels(&ms(&i, 4)?)?);
        hom5.extend(r_ni_hom_labels(&ms(&i, 5)?)?);
    }
    let t5: &[&[usize]] = &[&[0, 0, 0, 0, 0]];
    let iotas: Vec<RepLabel> = hom4.iter().map(|l| RepLabel { tableau: hat_iota(&l.tableau), ..l.clone() }).collect();
    let mut out = vec![
        same(
            "degree-2 summands in five variables",
            expect(&[(t5, &[1, 1]), (&[&[0, 0, 0, 0], &[1]], &[1]), (t5, &[2]), (&[&[0, 0, 0, 1], &[1]], &[]), (&[&[0, 0, 0], &[1, 1]], &[])])?,
            names(&hom5),
        ),
        same("Ext images", names(&hom5), names(&apply_all(Operator::Ext, &hom4)?)),
        same("hat-iota images", names(&hom5), names(&iotas)),
    ];
    let r = verify_extvmlim(4, 2)?;
    out.push(Check::flag("extension alone at n=4, d=2", r.passed()));
    Ok(out)
}

fn three_way() -> Result<Vec<Check>> {
    let r = verify_opers_vm(2, 4, None)?;
    let count = |k: &str| r.parts.get(k).copied().unwrap_or(0);
    let corr = |op: &str| -> Vec<String> {
        let mut v: Vec<String> = r.correspondence.iter().filter(|c| c.operator == op).flat_map(|c| c.targets.clone()).collect();
        v.sort();
        v
    };
    let plain = |rows: &[&[&[usize]]]| -> Result<Vec<String>> {
        let mut v = rows.iter().map(|r| Ok(RepLabel::plain(ssyt(r)?).to_string())).collect::<Result<Vec<_>>>()?;
        v.sort();
        Ok(v)
    };
    Ok(vec![
        Check::flag("three-part decomposition", r.passed()),
        same("ext / le / e parts", (5, 3, 2), (count("ext"), count("le"), count("e_{n+1}"))),
        same("ext summands", plain(&[&[&[0, 0, 4]], &[&[0, 0], &[4]], &[&[0, 1, 3]], &[&[0, 1], &[3]], &[&[0, 2, 2]]])?, corr("ext")),
        same("le summands", plain(&[&[&[0, 3], &[1]], &[&[0], &[1], &[3]], &[&[0, 2], &[2]]])?, corr("le")),
        same("e summands", plain(&[&[&[1, 1, 2]], &[&[1, 1], &[2]]])?, corr("e_{n+1}")),
    ])
}

fn top_pieces() -> Result<Vec<Check>> {
    let mut labels = apply_all(Operator::Ext, &crate::reps::hom_nks_labels(2, 4, 1)?)?;
    labels.extend(apply_all(Operator::Le, &crate::reps::hom_nks_labels(2, 3, 1)?)?);
    Ok(vec![
        same(
            "Ext of k=4 and LE of k=3",
            expect(&[
                (U0, &[1, 2, 2]),
                (U1, &[2, 2]),
                (U0, &[1, 1, 2]),
                (U1, &[1, 2]),
                (U0, &[1, 1, 1]),
                (U1, &[1, 1]),
                (U2, &[1, 2]),
                (U3, &[2]),
                (U2, &[1, 1]),
                (U3, &[1]),
                (U0, &[2, 2, 2]),
                (U2, &[2, 2]),
            ])?,
            names(&labels),
        ),
        Check::flag("homogeneous decomposition at n=2, k=3, s=1", verify_homdecom(2, 3, 1)?.passed()),
        Check::flag("homogeneous decomposition at n=2, k=3, s=2", verify_homdecom(2, 3, 2)?.passed()),
    ])
}

fn enlarging() -> Result<Vec<Check>> {
    let i = ms(&[2, 2], 3)?;
    let hom = r_ni_hom_labels(&i)?;
    let shifted = |r: usize| -> Vec<RepLabel> {
        hom.iter().map(|l| RepLabel { hvec: Some(l.h().plus_unit(r)), ..l.clone() }).collect()
    };
    let mut with_one = shifted(1);
    with_one.extend(vec![label(U1, &[2, 2])?, label(U3, &[2])?]);
    let mut out = vec![
        same("adding 3 multiplies by e3", names(&shifted(3)), names(&r_ni_hom_labels(&ms(&[2, 2, 3], 3)?)?)),
        same("adding 1 brings U1 e2^2 and U3 e2", names(&with_one), names(&r_ni_hom_labels(&ms(&[1, 2, 2], 3)?)?)),
    ];
    for l in 0..=3 {
        out.push(Check::flag(format!("adding {l}"), verify_inc_i(3, &i, l)?.passed()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_golden_case_passes() {
        let results = selftest();
        assert_eq!(results.len(), case_names().len());
        for r in &results {
            let bad: Vec<_> = r.checks.iter().filter(|c| !c.pass).collect();
            assert!(r.pass, "{}: {:?} {:?}", r.name, r.error, bad);
        }
    }
}
