//! The named check suites behind `verify`.
//!
//! Every suite returns a [`SuiteReport`] whose items carry an
//! expectation: most identities must hold, while the documented
//! negative results (the adjoint failure for the annihilation symbol,
//! the star-symmetry and morphism failures on the mixed monomial, the
//! coproduct intertwining failure of the projection) must fail exactly
//! as recorded. A suite is satisfied when observation matches
//! expectation item by item, so `verify all` is green precisely when
//! the engine reproduces the positive and the negative findings alike.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use serde_json::{json, Value};

use cotoeplitz::coalgebra::checks::{
    check_duality_evaluation, check_form_symmetry_condition, check_projection_comorphism,
    check_quantization_morphism, check_star_symmetry,
};
use cotoeplitz::coalgebra::{cosymbol_eval, CoSymbol, GroupLikeInstance, Suq2Instance};
use cotoeplitz::linear::{Element, TensorElement};
use cotoeplitz::operators::{
    adjoint_check, associated_classical, check_relation, classify_relation, hbar_deform,
    matrix_of_cosymbol, matrix_of_symbol, matrix_of_symbol_closed_form, NCPoly, OperatorMatrix,
    RelationClass, RelationVerdict,
};
use cotoeplitz::report::{CheckItem, Expectation, SuiteReport};
use cotoeplitz::sample;
use cotoeplitz::scalar::{qbinomial, QScalar};
use cotoeplitz::suq2::{
    aa_star_expansion, comultiply, comultiply_left_leg, comultiply_right_leg, counit, multiply,
    normal_order, normal_order_with, project_p, project_p_via_form, star, star_tensor,
    tensor_mul, BasisMonomial, Letter, Subspace, Word,
};

use crate::RunConfig;

pub const SUITE_NAMES: [&str; 12] = [
    "rewrite",
    "coalgebra-axioms",
    "projection",
    "qbinomial",
    "identity-9-6",
    "theorem-9-1",
    "special-cases",
    "cosymbols",
    "duality-5-1",
    "symmetry-6-2",
    "ccr",
    "all",
];

type SuiteFn = fn(&RunConfig) -> SuiteReport;

const SUITES: [(&str, SuiteFn); 11] = [
    ("rewrite", s_rewrite),
    ("coalgebra-axioms", s_coalgebra_axioms),
    ("projection", s_projection),
    ("qbinomial", s_qbinomial),
    ("identity-9-6", s_identity_9_6),
    ("theorem-9-1", s_theorem_9_1),
    ("special-cases", s_special_cases),
    ("cosymbols", s_cosymbols),
    ("duality-5-1", s_duality_5_1),
    ("symmetry-6-2", s_symmetry_6_2),
    ("ccr", s_ccr),
];

pub fn run_verify(config: &RunConfig, suite: &str) -> Result<(Value, bool), String> {
    let reports: Vec<SuiteReport> = if suite == "all" {
        SUITES.iter().map(|(_, f)| f(config)).collect()
    } else {
        let f = SUITES
            .iter()
            .find(|(name, _)| *name == suite)
            .map(|(_, f)| f)
            .ok_or_else(|| {
                format!("unknown suite {suite:?}; expected one of {}", SUITE_NAMES.join(", "))
            })?;
        vec![f(config)]
    };
    let all_satisfied = reports.iter().all(SuiteReport::ok);
    let value = json!({
        "config": config.to_json(),
        "suites": reports.iter().map(suite_json).collect::<Vec<_>>(),
        "all_satisfied": all_satisfied,
    });
    Ok((value, all_satisfied))
}

fn suite_json(report: &SuiteReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|item| {
            json!({
                "name": item.name,
                "expectation": match item.expectation {
                    Expectation::Hold => "hold",
                    Expectation::FailAsDocumented => "fail-as-documented",
                },
                "observed_pass": item.observed_pass,
                "satisfied": item.satisfied(),
                "witness": item.witness,
            })
        })
        .collect();
    json!({
        "suite": report.suite,
        "satisfied": report.ok(),
        "checks": checks,
    })
}

fn mono(k: i64, l: u32, m: u32) -> BasisMonomial {
    BasisMonomial::new(k, l, m)
}

fn s_rewrite(config: &RunConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("rewrite");

    let mut routes_ok = true;
    let mut idem_ok = true;
    let mut seen = BTreeSet::new();
    let mut step = 0usize;
    let mut count = 0usize;
    for len in 0usize..=5 {
        for code in 0..4usize.pow(len as u32) {
            let letters: Vec<Letter> =
                (0..len).map(|i| Letter::ALL[(code >> (2 * i)) & 3]).collect();
            let w = Word(letters);
            let leftmost = normal_order(&w);
            let rightmost = normal_order_with(&w, |_, rs| *rs.last().unwrap());
            let cycling = normal_order_with(&w, |_, rs| {
                step += 1;
                rs[step % rs.len()]
            });
            routes_ok &= leftmost == rightmost && leftmost == cycling;
            for (l, _) in leftmost.iter() {
                if seen.insert(*l) {
                    idem_ok &= normal_order(&l.word()) == Element::basis(*l);
                }
            }
            count += 1;
        }
    }
    suite.push(CheckItem::holds(
        "every redex-choice route yields the same normal form (exhaustive to length 5)",
        routes_ok,
        format!("{count} words, three routes each"),
    ));
    suite.push(CheckItem::holds(
        "normal forms are rewrite fixed points",
        idem_ok,
        format!("{} distinct monomials re-ordered", seen.len()),
    ));

    let mut rng = sample::rng(config.seed);
    let mut seeded_ok = true;
    for _ in 0..200 {
        let w = sample::random_word(&mut rng, 8);
        seeded_ok &= normal_order(&w) == normal_order_with(&w, |_, rs| *rs.last().unwrap());
    }
    suite.push(CheckItem::holds(
        "route invariance on seeded words of length up to 8",
        seeded_ok,
        "200 samples",
    ));

    let mut mult_ok = true;
    for _ in 0..100 {
        let u = sample::random_word(&mut rng, 4);
        let v = sample::random_word(&mut rng, 4);
        let mut uv = u.0.clone();
        uv.extend_from_slice(&v.0);
        mult_ok &= normal_order(&Word(uv)) == multiply(&normal_order(&u), &normal_order(&v));
    }
    suite.push(CheckItem::holds(
        "normal ordering is multiplicative on concatenation",
        mult_ok,
        "100 seeded pairs",
    ));
    suite
}

fn s_coalgebra_axioms(_config: &RunConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("coalgebra-axioms");
    let mut coassoc = true;
    let mut counit_ok = true;
    let mut star_ok = true;
    let mut count = 0usize;
    for k in -2i64..=2 {
        for l in 0u32..=2 {
            for m in 0u32..=2 {
                let x = Element::basis(mono(k, l, m));
                let d = comultiply(&x);
                coassoc &= comultiply_left_leg(&d) == comultiply_right_leg(&d);

                let mut left = Element::zero();
                let mut right = Element::zero();
                for ((u, v), c) in d.iter() {
                    left.add_term(v, &c.mul(&counit(&Element::basis(*u))));
                    right.add_term(u, &c.mul(&counit(&Element::basis(*v))));
                }
                counit_ok &= left == x && right == x;

                star_ok &= comultiply(&star(&x)) == star_tensor(&d);
                star_ok &= counit(&star(&x)) == counit(&x).conj();
                count += 1;
            }
        }
    }
    let witness = format!("{count} basis monomials");
    suite.push(CheckItem::holds("coproduct is coassociative", coassoc, witness.clone()));
    suite.push(CheckItem::holds("counit laws hold on both legs", counit_ok, witness.clone()));
    suite.push(CheckItem::holds("coproduct and counit commute with star", star_ok, witness));
    suite
}

fn s_projection(config: &RunConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("projection");

    let bound = config.trunc.min(5);
    let mut routes_ok = true;
    let mut count = 0usize;
    for k in -(bound as i64)..=bound as i64 {
        for l in 0..=bound {
            for m in 0..=bound {
                let x = Element::basis(mono(k, l, m));
                routes_ok &= project_p_via_form(&x, &config.weight) == project_p(&x);
                count += 1;
            }
        }
    }
    suite.push(CheckItem::holds(
        "closed projection rule matches the pairing route",
        routes_ok,
        format!("{count} monomials, configured weight"),
    ));

    let mut rng = sample::rng(config.seed);
    let mut killed = true;
    for _ in 0..200 {
        let w = sample::starred_excess_word(&mut rng, 8);
        killed &= project_p(&normal_order(&w)).is_zero();
    }
    suite.push(CheckItem::holds(
        "projection annihilates words with excess starred letters",
        killed,
        "200 seeded words of length up to 8",
    ));

    let inst = Suq2Instance::with_weight(config.weight.clone());
    let holds_on = [mono(3, 0, 0), mono(0, 3, 0), mono(2, 0, 2), mono(-1, 2, 0), mono(0, 1, 2)];
    let mut plain_ok = true;
    for x in holds_on {
        plain_ok &= check_projection_comorphism(&inst, &Element::basis(x))
            .map(|cmp| cmp.agree())
            .unwrap_or(false);
    }
    suite.push(CheckItem::holds(
        "coproduct intertwines the projection on pure powers and annihilated monomials",
        plain_ok,
        format!("{} probes", holds_on.len()),
    ));

    let mixed = [mono(1, 1, 0), mono(0, 1, 1), mono(1, 1, 1)];
    let mut all_agree = true;
    let mut witness = String::new();
    for x in mixed {
        match check_projection_comorphism(&inst, &Element::basis(x)) {
            Ok(cmp) => {
                let agree = cmp.agree();
                all_agree &= agree;
                if !agree && witness.is_empty() {
                    witness = format!("x = {x}: lhs - rhs = {}", cmp.lhs.sub(&cmp.rhs));
                }
            }
            Err(_) => all_agree = false,
        }
    }
    suite.push(CheckItem::documented_failure(
        "coproduct intertwines the projection on mixed monomials (as stated)",
        all_agree,
        witness,
    ));
    suite
}

fn s_qbinomial(_config: &RunConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("qbinomial");

    let mut base_ok = qbinomial(4, 0, -2).unwrap() == QScalar::one();
    base_ok &= qbinomial(4, 4, -2).unwrap() == QScalar::one();
    let expect = QScalar::one().add(&QScalar::q_pow(-2));
    base_ok &= qbinomial(2, 1, -2).unwrap() == expect;
    suite.push(CheckItem::holds(
        "recurrence boundaries and the first interior value",
        base_ok,
        "base -2",
    ));

    let mut classical = true;
    for n in 0u32..=12 {
        let mut choose = 1u64;
        for k in 0..=n {
            let q1 = num::BigRational::from_integer(1.into());
            let got = qbinomial(n, k, -2).unwrap().specialize(&q1).unwrap();
            classical &= got.im == num::BigRational::from_integer(0.into())
                && got.re == num::BigRational::from_integer(choose.into());
            choose = choose * u64::from(n - k) / u64::from(k + 1);
        }
    }
    suite.push(CheckItem::holds(
        "specialization at q = 1 gives the binomial coefficients",
        classical,
        "all n up to 12",
    ));

    let mut symmetric = true;
    for n in 0u32..=10 {
        for k in 0..=n {
            symmetric &= qbinomial(n, k, -2).unwrap() == qbinomial(n, n - k, -2).unwrap();
        }
    }
    suite.push(CheckItem::holds("column symmetry", symmetric, "all n up to 10"));

    let v = TensorElement::basis(mono(1, 0, 0), mono(1, 0, 0));
    let mut w = TensorElement::zero();
    w.add_term(&mono(0, 0, 1), &mono(0, 1, 0), &QScalar::q_pow(1).neg());
    let mut theorem = tensor_mul(&v, &w) == tensor_mul(&w, &v).scaled(&QScalar::q_pow(2));
    let unit = TensorElement::basis(mono(0, 0, 0), mono(0, 0, 0));
    let pow = |x: &TensorElement<BasisMonomial>, n: u32| {
        let mut acc = unit.clone();
        for _ in 0..n {
            acc = tensor_mul(&acc, x);
        }
        acc
    };
    let sum = v.add(&w);
    for n in 0u32..=5 {
        let lhs = pow(&sum, n);
        let mut rhs = TensorElement::zero();
        for k in 0..=n {
            let coeff = qbinomial(n, k, -2).unwrap();
            rhs = rhs.add(&tensor_mul(&pow(&v, k), &pow(&w, n - k)).scaled(&coeff));
        }
        theorem &= lhs == rhs;
    }
    suite.push(CheckItem::holds(
        "q-binomial theorem for the q-commuting coproduct legs",
        theorem,
        "powers up to 5, legs satisfy vw = q^2 wv",
    ));
    suite
}

fn s_identity_9_6(_config: &RunConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("identity-9-6");
    let mut pass = true;
    for m in 0u32..=8 {
        let mut letters = vec![Letter::A; m as usize];
        letters.extend(vec![Letter::AStar; m as usize]);
        pass &= aa_star_expansion(m) == normal_order(&Word(letters));
    }
    suite.push(CheckItem::holds(
        "closed expansion of a^m (a*)^m matches normal ordering",
        pass,
        "powers up to 8",
    ));
    suite
}

fn s_theorem_9_1(config: &RunConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("theorem-9-1");
    let inst = Suq2Instance::with_weight(config.weight.clone());
    let t = config.truncation();
    let mut equal = true;
    let mut support = true;
    let mut count = 0usize;
    for k in -4i64..=4 {
        for l in 0u32..=3 {
            for m in 0u32..=3 {
                let sym = mono(k, l, m);
                let g = Element::basis(sym);
                let pipeline = matrix_of_symbol(&inst, &g, &t);
                equal &= pipeline == matrix_of_symbol_closed_form(&g, &t, &config.weight);

                let d = sym.l as i64 - sym.m as i64;
                for (row, col, _) in pipeline.entries() {
                    support &= col.k + col.l as i64 - sym.k == d;
                    support &= row.k == col.k - d && row.l as i64 == col.l as i64 - d;
                }
                count += 1;
            }
        }
    }
    suite.push(CheckItem::holds(
        "pipeline matrices equal the single-shift closed form",
        equal,
        format!("{count} symbols at the configured truncation and weight"),
    ));
    suite.push(CheckItem::holds(
        "support lies on the predicted diagonal shift",
        support,
        "degree constraint and (d, d) shift",
    ));
    suite
}

fn s_special_cases(config: &RunConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("special-cases");
    let inst = Suq2Instance::with_weight(config.weight.clone());
    let t = config.truncation();

    let cstar = matrix_of_symbol(&inst, &Element::basis(mono(0, 0, 1)), &t);
    suite.push(CheckItem::holds("the symbol c* gives the zero operator", cstar.is_zero(), ""));

    let astar = matrix_of_symbol(&inst, &Element::basis(mono(-1, 0, 0)), &t);
    suite.push(CheckItem::holds("the symbol a* gives the zero operator", astar.is_zero(), ""));

    let mut starred_zero = true;
    for k in 0i64..=3 {
        for m in 1u32..=3 {
            starred_zero &= matrix_of_symbol(&inst, &Element::basis(mono(-k, 0, m)), &t).is_zero();
        }
    }
    suite.push(CheckItem::holds(
        "starred monomial symbols give the zero operator",
        starred_zero,
        "(a*)^k (c*)^m for k up to 3, m up to 3",
    ));

    let mut diagonal = true;
    for k in -2i64..=3 {
        for l in 0u32..=2 {
            let m = matrix_of_symbol(&inst, &Element::basis(mono(k, l, l)), &t);
            for (row, col, _) in m.entries() {
                diagonal &= row == col;
            }
        }
    }
    suite.push(CheckItem::holds(
        "balanced symbols give preservation (diagonal) operators",
        diagonal,
        "k from -2 to 3, l up to 2",
    ));

    let a_matrix = matrix_of_symbol(&inst, &Element::basis(mono(1, 0, 0)), &t);
    let c_matrix = matrix_of_symbol(&inst, &Element::basis(mono(0, 1, 0)), &t);
    let mut agrees = a_matrix
        == matrix_of_symbol_closed_form(&Element::basis(mono(1, 0, 0)), &t, &config.weight);
    agrees &= c_matrix
        == matrix_of_symbol_closed_form(&Element::basis(mono(0, 1, 0)), &t, &config.weight);
    suite.push(CheckItem::holds(
        "the operators of a and c match the closed form",
        agrees,
        "acceptance bar is route agreement",
    ));

    suite.push(CheckItem::documented_failure(
        "the symbol a acts as a nonzero multiple of the identity (as stated)",
        scalar_multiple_of_identity(&a_matrix),
        "computed operator is supported on the total-degree-1 slice only",
    ));
    suite.push(CheckItem::documented_failure(
        "the symbol c lowers degree with a nonzero factor (as stated)",
        !c_matrix.is_zero(),
        "computed operator is zero",
    ));

    let q_value = config.adjoint_q();
    let adjoint = adjoint_check(&inst, &Element::basis(mono(1, 0, 0)), &t, &q_value)
        .expect("positive rational q");
    let witness = adjoint
        .witnesses
        .first()
        .map(|w| format!("at q = {q_value}: row {}, col {}: {} vs {}", w.row, w.col, w.lhs, w.rhs))
        .unwrap_or_default();
    suite.push(CheckItem::documented_failure(
        "the operators of a and of a* are mutually adjoint (as stated)",
        adjoint.holds,
        witness,
    ));
    suite
}

fn scalar_multiple_of_identity(m: &OperatorMatrix<BasisMonomial>) -> bool {
    let labels = m.labels().to_vec();
    let Some(first) = labels.first() else {
        return true;
    };
    let c = m.entry(first, first);
    if c.is_zero() {
        return false;
    }
    *m == OperatorMatrix::identity(m.max_degree, m.mode, labels).scaled(&c)
}

fn s_cosymbols(config: &RunConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("cosymbols");
    let t = config.truncation();

    let mut identity_ok = true;
    for subspace in [Subspace::P, Subspace::PPrime] {
        let inst = Suq2Instance::new(config.weight.clone(), subspace);
        let m = matrix_of_cosymbol(&inst, &CoSymbol::counit(), &t);
        identity_ok &= m == OperatorMatrix::identity(t.max_degree, m.mode, m.labels().to_vec());
        identity_ok &= m.escaped().is_empty();
    }
    suite.push(CheckItem::holds(
        "the counit co-symbol acts as the identity on both subspaces",
        identity_ok,
        "configured truncation and weight",
    ));

    let inst = Suq2Instance::with_weight(config.weight.clone());
    let mut bridge_ok = true;
    for g in [
        Element::basis(mono(1, 0, 0)),
        Element::basis(mono(0, 1, 0)),
        Element::basis(mono(1, 1, 0)),
        Element::basis(mono(0, 1, 1)),
        Element::basis(mono(2, 1, 0)).scaled(&QScalar::i()),
    ] {
        bridge_ok &= matrix_of_cosymbol(&inst, &CoSymbol::eg(g.clone()), &t)
            == matrix_of_symbol(&inst, &g, &t);
    }
    suite.push(CheckItem::holds(
        "evaluation co-symbols reproduce the symbol operators",
        bridge_ok,
        "five sample symbols",
    ));

    let dim = 4usize;
    let group = GroupLikeInstance::new(dim, (0..dim).collect()).expect("indices in range");
    let mut rng = sample::rng(config.seed);
    let mut star_ok = true;
    for trial in 0..20 {
        let g = if trial < dim {
            Element::basis(trial)
        } else {
            let mut g = Element::zero();
            for _ in 0..2 {
                g.add_term(&rng.gen_range(0..dim), &sample::random_scalar(&mut rng));
            }
            g
        };
        let mut conj = Element::zero();
        for (l, c) in g.iter() {
            conj.add_term(l, &c.conj());
        }
        let starred = CoSymbol::star(CoSymbol::eg(g));
        let direct = CoSymbol::eg(conj);
        for x in 0..dim {
            star_ok &= cosymbol_eval(&group, &starred, &Element::basis(x))
                == cosymbol_eval(&group, &direct, &Element::basis(x));
        }
    }
    suite.push(CheckItem::holds(
        "starred evaluation functionals agree on the group-like instance",
        star_ok,
        "20 seeded symbols over dimension 4",
    ));

    let mut morphism_ok = true;
    for dim in 2usize..=4 {
        let group = GroupLikeInstance::new(dim, (0..dim).collect()).expect("indices in range");
        for _ in 0..10 {
            let mut leaf = |r: &mut dyn rand::RngCore| {
                let mut g = Element::zero();
                for _ in 0..2 {
                    let label = r.gen_range(0..dim);
                    g.add_term(&label, &sample::random_scalar(r));
                }
                g
            };
            let lam = sample::random_cosymbol(&mut rng, 2, &mut leaf);
            let mu = sample::random_cosymbol(&mut rng, 2, &mut leaf);
            let phi = Element::basis(rng.gen_range(0..dim));
            morphism_ok &= check_quantization_morphism(&group, &lam, &mu, &phi)
                .map(|cmp| cmp.agree())
                .unwrap_or(false);
        }
    }
    suite.push(CheckItem::holds(
        "operator composition matches the product co-symbol on group-like instances",
        morphism_ok,
        "30 seeded pairs over dimensions 2 to 4",
    ));

    let e110 = Element::basis(mono(1, 1, 0));
    let star_witness = check_star_symmetry(&inst, &e110, &e110);
    suite.push(CheckItem::documented_failure(
        "the form is star-symmetric on the mixed monomial (as stated)",
        star_witness.agree(),
        format!("{star_witness}"),
    ));

    let lam = CoSymbol::eg(Element::basis(mono(0, 0, 0)));
    let mu = CoSymbol::eg(e110.clone());
    let morphism_witness = check_quantization_morphism(&inst, &lam, &mu, &e110)
        .expect("probe inside the holomorphic subspace");
    suite.push(CheckItem::documented_failure(
        "operator composition matches the product co-symbol here (as stated)",
        morphism_witness.agree(),
        format!("{morphism_witness}"),
    ));
    suite
}

fn s_duality_5_1(config: &RunConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("duality-5-1");
    let inst = Suq2Instance::with_weight(config.weight.clone());
    let mut rng = sample::rng(config.seed);
    let mut pass = true;
    for _ in 0..100 {
        let mut leaf = |r: &mut dyn rand::RngCore| sample::random_element(r, 2, 2, 2, 2);
        let lam = sample::random_cosymbol(&mut rng, 2, &mut leaf);
        let g = sample::random_element(&mut rng, 2, 2, 2, 2);
        let phi = sample::random_p_element(&mut rng, 2, 2, 2);
        pass &= check_duality_evaluation(&inst, &lam, &g, &phi)
            .map(|cmp| cmp.agree())
            .unwrap_or(false);
    }
    suite.push(CheckItem::holds(
        "functional evaluation of the operator equals the coaction pairing",
        pass,
        "100 seeded triples",
    ));
    suite
}

fn s_symmetry_6_2(config: &RunConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("symmetry-6-2");
    let inst = Suq2Instance::with_weight(config.weight.clone());
    let a = Element::basis(mono(1, 0, 0));

    let cmp = check_form_symmetry_condition(&inst, &a, &a, &a);
    suite.push(CheckItem::documented_failure(
        "the adjoint symmetry holds on the annihilation triple (as stated)",
        cmp.agree(),
        format!("{cmp}"),
    ));

    let q_value = config.adjoint_q();
    let t = config.truncation();
    let preserved = adjoint_check(&inst, &Element::basis(mono(0, 1, 1)), &t, &q_value)
        .expect("positive rational q");
    suite.push(CheckItem::holds(
        "the balanced preservation symbol is self-adjoint",
        preserved.holds,
        format!("at q = {q_value}"),
    ));

    let adjoint = adjoint_check(&inst, &a, &t, &q_value).expect("positive rational q");
    let witness = adjoint
        .witnesses
        .first()
        .map(|w| format!("at q = {q_value}: row {}, col {}: {} vs {}", w.row, w.col, w.lhs, w.rhs))
        .unwrap_or_default();
    suite.push(CheckItem::documented_failure(
        "the operators of a and of a* are mutually adjoint (as stated)",
        adjoint.holds,
        witness,
    ));
    suite
}

fn s_ccr(config: &RunConfig) -> SuiteReport {
    let mut suite = SuiteReport::new("ccr");
    let inst = Suq2Instance::with_weight(config.weight.clone());
    let t = config.truncation();

    let cstar_rel = NCPoly::generator(mono(0, 0, 1));
    let assignment: BTreeMap<_, _> =
        [(mono(0, 0, 1), matrix_of_symbol(&inst, &Element::basis(mono(0, 0, 1)), &t))]
            .into_iter()
            .collect();
    let candidate = matches!(
        check_relation(&cstar_rel, &assignment),
        Ok(RelationVerdict::Candidate)
    );
    let classical = classify_relation(&cstar_rel)
        .map(|c| c == RelationClass::Classical)
        .unwrap_or(false)
        && cstar_rel.degree() == Some(1);
    suite.push(CheckItem::holds(
        "the single starred generator is a degree-1 classical candidate relation",
        candidate && classical,
        "its operator vanishes",
    ));

    let ga = NCPoly::generator(mono(1, 0, 0));
    let gc = NCPoly::generator(mono(0, 1, 0));
    let ccr = ga.mul(&gc).sub(&gc.mul(&ga)).sub(&NCPoly::one());
    let quantum = classify_relation(&ccr).map(|c| c == RelationClass::Quantum).unwrap_or(false)
        && associated_classical(&ccr).ok() == Some(ga.mul(&gc).sub(&gc.mul(&ga)));
    suite.push(CheckItem::holds(
        "the commutator relation is quantum with the commutator as classical part",
        quantum,
        "",
    ));

    let ccr_assignment: BTreeMap<_, _> = [
        (mono(1, 0, 0), matrix_of_symbol(&inst, &Element::basis(mono(1, 0, 0)), &t)),
        (mono(0, 1, 0), matrix_of_symbol(&inst, &Element::basis(mono(0, 1, 0)), &t)),
    ]
    .into_iter()
    .collect();
    let violated = matches!(
        check_relation(&ccr, &ccr_assignment),
        Ok(RelationVerdict::Violated { .. })
    );
    suite.push(CheckItem::holds(
        "the computed operators do not satisfy the commutator relation",
        violated,
        "the constant term survives",
    ));

    let mut rng = sample::rng(config.seed);
    let zero = num::BigRational::from_integer(0.into());
    let one = num::BigRational::from_integer(1.into());
    let mut endpoints = true;
    for _ in 0..100 {
        let rel = sample::random_ncpoly(&mut rng, 3, 3, 2, 2, 2);
        endpoints &= hbar_deform(&rel, &zero).ok() == associated_classical(&rel).ok();
        endpoints &= hbar_deform(&rel, &one).ok().as_ref() == Some(&rel);
    }
    suite.push(CheckItem::holds(
        "deformation interpolates between the relation and its classical part",
        endpoints,
        "100 seeded relations; endpoints at 0 and 1",
    ));
    suite
}
