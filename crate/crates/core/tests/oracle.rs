//! Cross-checks against a deliberately naive implementation: polynomials are
//! maps from `String` words to rationals, products are plain concatenation,
//! powers are computed by repeated full multiplication, and brackets are
//! expanded literally. None of it shares code with the library.

use std::collections::BTreeMap;

use bchkit_core::algebra::{Alphabet, NcPoly, Rational, Word};
use bchkit_core::bch::{bch_recurrence, recurrence_rhs};
use bchkit_core::lie::rmap;
use bchkit_core::series::bch_direct;
use num_bigint::BigInt;
use num_traits::{One, Zero};

type Naive = BTreeMap<String, Rational>;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn add_into(acc: &mut Naive, p: &Naive, factor: &Rational) {
    for (w, c) in p {
        let e = acc.entry(w.clone()).or_insert_with(Rational::zero);
        *e += c * factor;
    }
    acc.retain(|_, c| !c.is_zero());
}

fn mul(p: &Naive, r: &Naive, max_len: usize) -> Naive {
    let mut out = Naive::new();
    for (u, a) in p {
        for (v, b) in r {
            if u.len() + v.len() <= max_len {
                let w = format!("{u}{v}");
                *out.entry(w).or_insert_with(Rational::zero) += a * b;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn bracket(p: &Naive, r: &Naive) -> Naive {
    let mut out = mul(p, r, usize::MAX);
    add_into(&mut out, &mul(r, p, usize::MAX), &q(-1, 1));
    out
}

fn letter(c: char) -> Naive {
    Naive::from([(c.to_string(), q(1, 1))])
}

fn naive_r_word(w: &str) -> Naive {
    let chars: Vec<char> = w.chars().collect();
    let mut acc = letter(*chars.last().unwrap());
    for &c in chars[..chars.len() - 1].iter().rev() {
        acc = bracket(&letter(c), &acc);
    }
    acc
}

fn fact(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// log(e^A e^B) up to degree `n`, all terms.
fn naive_bch(n: usize) -> Naive {
    // e^A e^B - 1 = Σ_{i+j≥1} A^i B^j / (i! j!)
    let mut y = Naive::new();
    for i in 0..=n {
        for j in 0..=n - i {
            if i + j == 0 {
                continue;
            }
            let w = "A".repeat(i) + &"B".repeat(j);
            y.insert(w, Rational::new(BigInt::one(), fact(i) * fact(j)));
        }
    }
    let mut out = Naive::new();
    let mut power = y.clone();
    for k in 1..=n {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        add_into(&mut out, &power, &q(sign, k as i64));
        power = mul(&power, &y, n);
    }
    out
}

fn naive_component(p: &Naive, n: usize) -> Naive {
    p.iter()
        .filter(|(w, _)| w.len() == n)
        .map(|(w, c)| (w.clone(), c.clone()))
        .collect()
}

fn to_naive(p: &NcPoly) -> Naive {
    p.terms()
        .map(|(w, c)| (w.render(p.alphabet()), c.clone()))
        .collect()
}

fn from_naive(al: &std::sync::Arc<Alphabet>, p: &Naive) -> NcPoly {
    NcPoly::from_terms(
        al,
        p.iter().map(|(w, c)| (Word::parse(w, al).unwrap(), c.clone())),
    )
}

/// `[B, C_n]` right-hand side by enumerating every ordered composition.
fn naive_rhs(n: usize, comps: &[Naive]) -> Naive {
    fn walk(remaining: usize, depth: usize, n: usize, v: Naive, comps: &[Naive], out: &mut Naive) {
        if remaining == 0 {
            if depth >= 2 {
                add_into(out, &v, &Rational::new(BigInt::one(), fact(depth)));
            }
            return;
        }
        for k in 1..=remaining {
            if depth == 0 && k == n {
                continue;
            }
            let next = bracket(&comps[k - 1], &v);
            walk(remaining - k, depth + 1, n, next, comps, out);
        }
    }
    let mut out = Naive::new();
    walk(n, 0, n, letter('B'), comps, &mut out);
    let mut ad = letter('B');
    for _ in 0..n {
        ad = bracket(&letter('A'), &ad);
    }
    add_into(&mut out, &ad, &-Rational::new(BigInt::one(), fact(n)));
    out
}

#[test]
fn direct_expansion_matches_naive_oracle() {
    let n = 8;
    let oracle = naive_bch(n);
    let direct = bch_direct(n).unwrap();
    for (i, c) in direct.iter().enumerate() {
        assert_eq!(to_naive(c), naive_component(&oracle, i + 1), "degree {}", i + 1);
    }
}

#[test]
fn recurrence_matches_naive_oracle() {
    let n = 8;
    let oracle = naive_bch(n);
    let rec = bch_recurrence(n).unwrap();
    for (i, c) in rec.components.iter().enumerate() {
        assert_eq!(to_naive(c), naive_component(&oracle, i + 1), "degree {}", i + 1);
    }
}

#[test]
fn low_degree_values_by_hand() {
    let oracle = naive_bch(4);
    // C_2 = 1/2 [A,B]
    assert_eq!(
        naive_component(&oracle, 2),
        Naive::from([("AB".into(), q(1, 2)), ("BA".into(), q(-1, 2))])
    );
    // C_3 = 1/12 [A,[A,B]] + 1/12 [B,[B,A]]
    let mut c3 = Naive::new();
    add_into(&mut c3, &naive_r_word("AAB"), &q(1, 12));
    add_into(&mut c3, &naive_r_word("BBA"), &q(1, 12));
    assert_eq!(
        c3,
        Naive::from([
            ("AAB".into(), q(1, 12)),
            ("ABA".into(), q(-1, 6)),
            ("ABB".into(), q(1, 12)),
            ("BAA".into(), q(1, 12)),
            ("BAB".into(), q(-1, 6)),
            ("BBA".into(), q(1, 12)),
        ])
    );
    assert_eq!(naive_component(&oracle, 3), c3);
    // C_4 = -1/24 [B,[A,[A,B]]]
    let mut c4 = Naive::new();
    add_into(&mut c4, &naive_r_word("BAAB"), &q(-1, 24));
    assert_eq!(naive_component(&oracle, 4), c4);
}

#[test]
fn commutator_and_ad_examples_match_concatenation() {
    let al = Alphabet::ab();
    let a = NcPoly::var(&al, "A");
    let b = NcPoly::var(&al, "B");
    let ba = b.commutator(&a).unwrap();
    assert_eq!(
        to_naive(&a.commutator(&ba).unwrap()),
        bracket(&letter('A'), &bracket(&letter('B'), &letter('A')))
    );
    assert_eq!(
        to_naive(&a.ad_pow(2, &b).unwrap()),
        bracket(&letter('A'), &bracket(&letter('A'), &letter('B')))
    );
}

#[test]
fn rmap_matches_literal_brackets_on_every_word() {
    let al = Alphabet::latin(3).unwrap();
    let letters = ['A', 'B', 'C'];
    let mut words = vec![String::new()];
    for _ in 0..5 {
        words = words
            .iter()
            .flat_map(|w| letters.iter().map(move |c| format!("{w}{c}")))
            .collect();
        for w in &words {
            let p = NcPoly::monomial(&al, q(1, 1), Word::parse(w, &al).unwrap());
            assert_eq!(to_naive(&rmap(&p).unwrap()), naive_r_word(w), "word {w}");
        }
    }
}

#[test]
fn recurrence_rhs_matches_composition_enumeration() {
    let al = Alphabet::ab();
    let n_max = 8;
    let oracle = naive_bch(n_max);
    let comps: Vec<Naive> = (1..=n_max).map(|n| naive_component(&oracle, n)).collect();
    let lib_comps: Vec<NcPoly> = comps.iter().map(|c| from_naive(&al, c)).collect();
    let b = letter('B');
    for n in 2..=n_max {
        let expected = naive_rhs(n, &comps);
        assert_eq!(to_naive(&recurrence_rhs(n, &lib_comps).unwrap()), expected, "n = {n}");
        // and the identity itself: [B, C_n] equals the right-hand side
        assert_eq!(bracket(&b, &comps[n - 1]), expected, "n = {n}");
    }
}
