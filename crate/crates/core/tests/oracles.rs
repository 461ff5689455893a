//! Independent re-derivations of computed values, written without the
//! library's own helpers wherever possible.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{random_rational, w};
use eiscoh::lshape::dual_nilradical_buckets;
use eiscoh::realform::wedge_weights;
use eiscoh::rootsys::SignChamber;
use eiscoh::scalar::{half, int, ratio};
use eiscoh::setup::{compute_s0, derive_package, enumerate_data, validate_datum, ParabolicClass};
use eiscoh::sl2::{casimir, constant_term_d1c, intertwining_coefficient, PSElement, SpectralParam};
use eiscoh::{QRationalFunction, QWeight, Rational, SymbolField};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type V = Vec<i64>;

/// `Cₙ` roots as integer vectors, built by hand.
fn roots(n: usize) -> Vec<V> {
    let mut out = Vec::new();
    for i in 0..n {
        for s in [1, -1] {
            let mut r = vec![0; n];
            r[i] = 2 * s;
            out.push(r);
        }
        for j in (i + 1)..n {
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut r = vec![0; n];
                r[i] = a;
                r[j] = b;
                out.push(r);
            }
        }
    }
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `β ∈ Δ^ε` iff the first nonzero coordinate of `εβ` is positive.
fn positive(eps: &[i64], beta: &[i64]) -> bool {
    beta.iter()
        .zip(eps)
        .map(|(b, e)| b * e)
        .find(|c| *c != 0)
        .is_some_and(|c| c > 0)
}

fn compact(beta: &[i64]) -> bool {
    let nz: Vec<i64> = beta.iter().copied().filter(|c| *c != 0).collect();
    nz.len() == 2 && nz[0] == -nz[1]
}

/// Twice the half-sum of the selected positive roots.
fn two_half_sum(n: usize, eps: &[i64], keep: impl Fn(&[i64]) -> bool) -> V {
    let mut acc = vec![0; n];
    for r in roots(n).iter().filter(|r| positive(eps, r) && keep(r)) {
        for (a, c) in acc.iter_mut().zip(r) {
            *a += c;
        }
    }
    acc
}

struct Oracle {
    s0: Rational,
    blattner_plus: QWeight,
    blattner_minus: QWeight,
    j: QWeight,
    e: QWeight,
    d: usize,
}

fn oracle(eps: &[i64], alpha0: &[i64], lambda: &[i64]) -> Oracle {
    let n = lambda.len();
    let rho_c2 = two_half_sum(n, eps, compact);
    let rho_n2 = two_half_sum(n, eps, |r| !compact(r));
    let rho2 = two_half_sum(n, eps, |_| true);
    let halve = |v: V| QWeight::new(v.into_iter().map(|c| ratio(c, 2)).collect());
    let bp: V = (0..n).map(|i| 2 * lambda[i] - rho_c2[i] + rho_n2[i]).collect();
    let bm: V = (0..n).map(|i| bp[i] - 4 * alpha0[i]).collect();
    let j: V = (0..n).map(|i| bp[i] - 2 * alpha0[i]).collect();
    let e: V = (0..n).map(|i| 2 * lambda[i] - rho2[i]).collect();
    let aa = dot(alpha0, alpha0);
    let total: i64 = roots(n)
        .iter()
        .map(|b| 2 * dot(b, alpha0))
        .filter(|p| *p > 0)
        .sum();
    Oracle {
        s0: ratio(aa, total),
        blattner_plus: halve(bp),
        blattner_minus: halve(bm),
        j: halve(j),
        e: halve(e),
        d: n * (n + 1) / 2,
    }
}

fn to_ints(w: &QWeight) -> V {
    w.coords().iter().map(|c| eiscoh::scalar::to_i64(c).unwrap()).collect()
}

#[test]
fn worked_instance_by_hand() {
    let o = oracle(&[1, -1], &[1, 1], &[3, -2]);
    assert_eq!(o.s0, ratio(1, 6));
    assert_eq!(o.blattner_plus, w(&[4, -2]));
    assert_eq!(o.blattner_minus, w(&[2, -4]));
    assert_eq!(o.j, w(&[3, -3]));
    assert_eq!(o.e, w(&[1, -1]));
    assert_eq!(o.d, 3);
}

#[test]
fn packages_agree_with_oracle() {
    for n in 1..=4 {
        for d in enumerate_data(n, 6).unwrap() {
            let eps: V = d.eps().signs().iter().map(|s| *s as i64).collect();
            let o = oracle(&eps, &to_ints(d.alpha0()), &to_ints(d.lambda()));
            let p = derive_package(&d).unwrap();
            assert_eq!(p.s0, o.s0, "{}", d.lambda());
            assert_eq!(compute_s0(&d), o.s0);
            assert_eq!(p.blattner_plus, o.blattner_plus);
            assert_eq!(p.blattner_minus, o.blattner_minus);
            assert_eq!(p.j_lowest_ktype, o.j);
            assert_eq!(p.e_highest_weight, o.e);
            assert_eq!(p.d, o.d);
        }
    }
}

/// Naive admissibility in integer arithmetic.
fn naive_valid(eps: &[i64], alpha0: &[i64], lambda: &[i64]) -> bool {
    let n = lambda.len();
    let decreasing = (0..n).all(|i| lambda[i] * eps[i] > 0) && (1..n).all(|i| lambda[i - 1].abs() > lambda[i].abs());
    let nz: Vec<usize> = (0..n).filter(|i| alpha0[*i] != 0).collect();
    let simple_noncompact = match nz.as_slice() {
        [i] => *i == n - 1 && alpha0[*i] == 2 * eps[*i],
        [i, j] => *j == i + 1 && eps[*i] != eps[*j] && alpha0[*i] == eps[*i] && alpha0[*j] == -eps[*j],
        _ => false,
    };
    decreasing && simple_noncompact && 2 * dot(lambda, alpha0) == dot(alpha0, alpha0)
}

#[test]
fn double_enumeration() {
    for (n, bound) in [(1usize, 3i64), (2, 3), (3, 4)] {
        let library: BTreeSet<(String, QWeight, QWeight)> = enumerate_data(n, bound as u64)
            .unwrap()
            .into_iter()
            .map(|d| (d.eps().to_string(), d.alpha0().clone(), d.lambda().clone()))
            .collect();
        let mut naive = BTreeSet::new();
        let mut revalidated = BTreeSet::new();
        let range: Vec<i64> = (-bound..=bound).collect();
        let mut lambdas: Vec<V> = vec![vec![]];
        for _ in 0..n {
            lambdas = lambdas
                .into_iter()
                .flat_map(|p| range.iter().map(move |x| [p.clone(), vec![*x]].concat()))
                .collect();
        }
        for eps in SignChamber::all(n) {
            let e: V = eps.signs().iter().map(|s| *s as i64).collect();
            for alpha0 in roots(n) {
                for lambda in &lambdas {
                    let key = (eps.to_string(), w(&alpha0), w(lambda));
                    if naive_valid(&e, &alpha0, lambda) {
                        naive.insert(key.clone());
                    }
                    if n <= 2 && validate_datum(n, &eps, &w(&alpha0), &w(lambda)).is_ok() {
                        revalidated.insert(key);
                    }
                }
            }
        }
        assert_eq!(library, naive, "rank {n}");
        if n <= 2 {
            assert_eq!(library, revalidated, "rank {n}");
        }
    }
}

#[test]
fn rank_one_bound_one_has_two_data() {
    assert_eq!(enumerate_data(1, 1).unwrap().len(), 2);
}

#[test]
fn wedge_weights_by_subsets() {
    let n = 2;
    let p: Vec<V> = roots(n).into_iter().filter(|r| !compact(r)).collect();
    assert_eq!(p.len(), 6);
    for q in 0..=6 {
        let mut counts: BTreeMap<V, u64> = BTreeMap::new();
        for mask in 0u32..64 {
            if mask.count_ones() as usize == q {
                let mut s = vec![0; n];
                for (i, r) in p.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        s[0] += r[0];
                        s[1] += r[1];
                    }
                }
                *counts.entry(s).or_default() += 1;
            }
        }
        let lib = wedge_weights::<Rational>(n, q).unwrap();
        let lib: BTreeMap<V, u64> = lib.iter().map(|(w, m)| (to_ints(w), m)).collect();
        assert_eq!(lib, counts, "degree {q}");
    }
}

#[test]
fn dual_buckets_from_listed_coroots() {
    for n in 2..=8usize {
        let mut p2: Vec<V> = Vec::new();
        let e = |i: usize, c: i64| {
            let mut v = vec![0; n];
            v[i] = c;
            v
        };
        let add = |a: V, b: V| a.iter().zip(&b).map(|(x, y)| x + y).collect::<V>();
        p2.push(e(0, 1));
        p2.push(e(1, 1));
        p2.push(add(e(0, 1), e(1, 1)));
        for i in 2..n {
            for s in [1, -1] {
                p2.push(add(e(0, 1), e(i, s)));
                p2.push(add(e(1, 1), e(i, s)));
            }
        }
        let tilde = add(e(0, 1), e(1, 1));
        let mut levels: BTreeMap<i64, usize> = BTreeMap::new();
        for g in &p2 {
            *levels.entry(dot(g, &tilde)).or_default() += 1;
        }
        let lib: BTreeMap<i64, usize> = dual_nilradical_buckets(n, ParabolicClass::P2)
            .unwrap()
            .iter()
            .map(|b| (b.level, b.dim))
            .collect();
        assert_eq!(lib, levels, "P2 n={n}");

        let mut p1: Vec<V> = vec![e(0, 1)];
        for i in 1..n {
            for s in [1, -1] {
                p1.push(add(e(0, 1), e(i, s)));
            }
        }
        let tilde = e(0, 2);
        let mut levels: BTreeMap<i64, usize> = BTreeMap::new();
        for g in &p1 {
            *levels.entry(dot(g, &tilde)).or_default() += 1;
        }
        let lib: BTreeMap<i64, usize> = dual_nilradical_buckets(n, ParabolicClass::P1)
            .unwrap()
            .iter()
            .map(|b| (b.level, b.dim))
            .collect();
        assert_eq!(lib, levels, "P1 n={n}");
    }
}

/// `a + b·i` over `ℚ`.
#[derive(Clone, Debug, PartialEq)]
struct Gauss(Rational, Rational);

impl Gauss {
    fn re(a: Rational) -> Self {
        Gauss(a, int(0))
    }
    fn add(&self, o: &Self) -> Self {
        Gauss(&self.0 + &o.0, &self.1 + &o.1)
    }
    fn sub(&self, o: &Self) -> Self {
        Gauss(&self.0 - &o.0, &self.1 - &o.1)
    }
    fn mul(&self, o: &Self) -> Self {
        Gauss(&self.0 * &o.0 - &self.1 * &o.1, &self.0 * &o.1 + &self.1 * &o.0)
    }
    fn div(&self, o: &Self) -> Self {
        let n = &o.0 * &o.0 + &o.1 * &o.1;
        let conj = Gauss(o.0.clone(), -o.1.clone());
        let p = self.mul(&conj);
        Gauss(p.0 / &n, p.1 / &n)
    }
}

type M = [[Gauss; 2]; 2];

fn g(re: Rational, im: Rational) -> Gauss {
    Gauss(re, im)
}

/// `Z = α·diag(1,−1) + β·H + γ·E₁₂` with `H = i(0 −1; 1 0)`, solved entrywise.
fn decompose(z: &M) -> (Gauss, Gauss, Gauss) {
    let i = g(int(0), int(1));
    let alpha = z[0][0].clone();
    let beta = z[1][0].div(&i);
    let gamma = z[0][1].add(&i.mul(&beta));
    assert_eq!(z[1][1], Gauss::re(int(0)).sub(&alpha), "trace zero");
    (alpha, beta, gamma)
}

#[test]
fn raising_and_lowering_from_iwasawa_derivative() {
    let h = half();
    let x_plus: M = [[g(h.clone(), int(0)), g(int(0), h.clone())], [g(int(0), h.clone()), g(-h.clone(), int(0))]];
    let x_minus: M = [[g(h.clone(), int(0)), g(int(0), -h.clone())], [g(int(0), -h.clone()), g(-h.clone(), int(0))]];
    for (matrix, dir) in [(&x_plus, 1i64), (&x_minus, -1i64)] {
        let (alpha, beta, _gamma) = decompose(matrix);
        for k in -6..=6i64 {
            // d/dt φ(diag(e^t, e^{−t})) = 2(s+½), H acts by 2k, N-derivative is 0
            let slope = alpha.mul(&Gauss::re(int(2)));
            let offset = alpha.mul(&Gauss::re(int(1))).add(&beta.mul(&Gauss::re(int(2 * k))));
            assert_eq!(slope.1, int(0));
            assert_eq!(offset.1, int(0));
            let expected = QRationalFunction::linear(slope.0.clone(), offset.0.clone());
            let phi = PSElement::basis(SpectralParam::s(), 2 * k, QRationalFunction::constant(int(1))).unwrap();
            let moved = if dir == 1 { phi.act_raise() } else { phi.act_lower() };
            assert_eq!(moved.coefficient(2 * k + 2 * dir), Some(&expected), "k={k} dir={dir}");
        }
    }
}

fn c1_by_hand(s: &Rational) -> Rational {
    (half() - s) / (half() + s)
}

#[test]
fn second_coefficient_by_one_recurrence_step() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 20 {
        let s = random_rational(&mut rng, 40);
        if s == half() || s == -half() || s == ratio(-3, 2) {
            continue;
        }
        // (s+½+1)c₂ = (−s+½+1)c₁
        let c2 = (-&s + ratio(3, 2)) * c1_by_hand(&s) / (&s + ratio(3, 2));
        let product = (half() - &s) * (ratio(3, 2) - &s) / ((half() + &s) * (ratio(3, 2) + &s));
        assert_eq!(c2, product);
        assert_eq!(intertwining_coefficient(2).eval(&s), Some(c2));
        checked += 1;
    }
}

#[test]
fn casimir_closed_form_at_random_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for k in -10..=10i64 {
        let phi = PSElement::basis(SpectralParam::s(), 2 * k, QRationalFunction::constant(int(1))).unwrap();
        let omega = casimir(&phi).unwrap();
        for _ in 0..5 {
            let s = random_rational(&mut rng, 30);
            let kk = int(k);
            let by_hand = ratio(1, 2) * int(4 * k * k)
                + (&s + half() - &kk) * (&s - half() + &kk)
                + (&s + half() + &kk) * (&s - half() - &kk);
            assert_eq!(omega.eval(&s), Some(by_hand));
        }
    }
}

#[test]
fn constant_term_by_difference_quotient() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..20 {
        let a_plus = random_rational(&mut rng, 9);
        let a_minus = random_rational(&mut rng, 9);
        let mut s = random_rational(&mut rng, 50);
        while s == half() || s == -half() {
            s = random_rational(&mut rng, 50);
        }
        // c(X∓) = a∓ c_{∓1}(s) φ^{(∓2)}_{−s}; X± then contributes (−s−½)
        let d1c = (&a_minus * c1_by_hand(&s) - &a_plus * c1_by_hand(&s)) * (-&s - half());
        assert_eq!(d1c / (&s - half()), &a_minus - &a_plus);
        let ct = constant_term_d1c(&a_plus, &a_minus).unwrap();
        let expected = SymbolField::constant(&a_minus - &a_plus) * SymbolField::var();
        assert_eq!(ct.coefficient(), expected);
    }
}
