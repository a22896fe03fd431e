use proptest::prelude::*;
use semilinear_ast::gf::conway::{conway_polynomial, tabulated};
use semilinear_ast::gf::{is_prime, FieldTower};

/// Every `(p, alpha)` with `p^alpha <= limit`.
fn small_fields(limit: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for p in (2..=limit).filter(|&p| is_prime(p)) {
        let mut n = p;
        let mut alpha = 1;
        while n <= limit {
            out.push((p, alpha));
            n *= p;
            alpha += 1;
        }
    }
    out
}

#[test]
fn field_axioms_exhaustive_up_to_256() {
    for (p, alpha) in small_fields(256) {
        let t = FieldTower::new(p, alpha, 1).unwrap();
        let n = t.order();
        for a in 0..n {
            assert_eq!(t.add(a, 0), a);
            assert_eq!(t.mul(a, 1), a);
            assert_eq!(t.add(a, t.neg(a)), 0);
            if a != 0 {
                assert_eq!(t.mul(a, t.inv(a).unwrap()), 1, "GF({n}) inverse of {a}");
            }
            for b in 0..n {
                assert_eq!(t.add(a, b), t.add(b, a));
                assert_eq!(t.mul(a, b), t.mul(b, a));
                assert_eq!(t.sub(t.add(a, b), b), a);
            }
        }
        // Distributivity and associativity on a stride through the field.
        let step = (n / 16).max(1);
        for a in (0..n).step_by(step as usize) {
            for b in (0..n).step_by(step as usize) {
                for c in 0..n {
                    assert_eq!(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
                    assert_eq!(t.mul(a, t.mul(b, c)), t.mul(t.mul(a, b), c));
                    assert_eq!(t.add(a, t.add(b, c)), t.add(t.add(a, b), c));
                }
            }
        }
    }
}

#[test]
fn frobenius_is_an_automorphism_fixing_the_subfield() {
    for (p, alpha) in small_fields(256) {
        for omega in (1..=alpha).filter(|w| alpha % w == 0) {
            let t = FieldTower::new(p, alpha, omega).unwrap();
            let q = t.subfield_order();
            let fixed = t.elements().filter(|&a| t.h_orbit(a).len() == 1).count();
            assert_eq!(fixed as u32, q, "GF({}) over GF({q})", t.order());
            for e in t.galois_subgroup().exponents() {
                for a in t.elements() {
                    for b in [0, 1, t.generator(), a] {
                        let f = |x| t.frobenius(e, x);
                        assert_eq!(f(t.add(a, b)), t.add(f(a), f(b)));
                        assert_eq!(f(t.mul(a, b)), t.mul(f(a), f(b)));
                    }
                }
            }
        }
    }
}

#[test]
fn burnside_count_equals_orbit_count() {
    for (p, alpha) in small_fields(1 << 12) {
        for omega in (1..=alpha).filter(|w| alpha % w == 0) {
            let t = FieldTower::new(p, alpha, omega).unwrap();
            let orbits = t.h_orbit_transversal().len() as u64 + 1;
            assert_eq!(t.burnside_orbit_count(), orbits);
            let sizes: u64 = t
                .h_orbit_transversal()
                .iter()
                .map(|a| t.h_orbit(a).len() as u64)
                .sum();
            assert_eq!(sizes + 1, u64::from(t.order()));
        }
    }
}

/// Polynomial arithmetic modulo a monic `f` over GF(p), independent of the
/// table-driven field.
struct Quotient<'a> {
    p: u64,
    f: &'a [u32],
}

impl Quotient<'_> {
    fn degree(&self) -> usize {
        self.f.len() - 1
    }

    fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let d = self.degree();
        let mut prod = vec![0u64; 2 * d];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        for top in (d..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &fi) in self.f.iter().enumerate() {
                let idx = top - d + i;
                prod[idx] = (prod[idx] + self.p * self.p - c * u64::from(fi) % self.p) % self.p;
            }
        }
        prod.truncate(d);
        prod
    }

    fn pow(&self, base: &[u64], mut e: u64) -> Vec<u64> {
        let mut acc = self.one();
        let mut b = base.to_vec();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        acc
    }

    fn one(&self) -> Vec<u64> {
        let mut v = vec![0; self.degree()];
        v[0] = 1;
        v
    }

    fn x(&self) -> Vec<u64> {
        let mut v = vec![0; self.degree()];
        if self.degree() == 1 {
            v[0] = (self.p - u64::from(self.f[0])) % self.p;
        } else {
            v[1] = 1;
        }
        v
    }

    /// Evaluates the GF(p)-polynomial `g` at `point`.
    fn eval(&self, g: &[u32], point: &[u64]) -> Vec<u64> {
        let mut acc = vec![0; self.degree()];
        for &c in g.iter().rev() {
            acc = self.mul(&acc, point);
            acc[0] = (acc[0] + u64::from(c)) % self.p;
        }
        acc
    }
}

fn prime_divisors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            out.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn is_primitive(q: &Quotient) -> bool {
    let order = (q.p).pow(q.degree() as u32) - 1;
    let x = q.x();
    q.pow(&x, order) == q.one()
        && prime_divisors(order)
            .into_iter()
            .all(|r| q.pow(&x, order / r) != q.one())
}

fn is_compatible(q: &Quotient, p: u32) -> bool {
    let d = q.degree() as u32;
    let big = u64::from(p).pow(d) - 1;
    (1..d).filter(|e| d % e == 0).all(|e| {
        let small = u64::from(p).pow(e) - 1;
        let point = q.pow(&q.x(), big / small);
        let g = conway_polynomial(p, e).unwrap();
        q.eval(&g, &point).iter().all(|&c| c == 0)
    })
}

#[test]
fn tabulated_polynomials_are_primitive_and_compatible() {
    let mut count = 0;
    for (p, d) in tabulated() {
        let f = conway_polynomial(p, d).unwrap();
        assert_eq!(f.len() as u32, d + 1);
        assert_eq!(*f.last().unwrap(), 1);
        let q = Quotient {
            p: u64::from(p),
            f: &f,
        };
        assert!(is_primitive(&q), "({p}, {d}) is not primitive");
        assert!(is_compatible(&q, p), "({p}, {d}) is not compatible");
        count += 1;
    }
    assert!(count >= 90);
}

/// Candidates of degree `d` in the order defining Conway polynomials: the
/// coefficient of `x^(d-i)`, signed by `(-1)^i`, compared from `i = 1` on.
fn conway_order_candidates(p: u32, d: u32) -> impl Iterator<Item = Vec<u32>> {
    let total = u64::from(p).pow(d);
    (0..total).map(move |rank| {
        let mut f = vec![0u32; d as usize + 1];
        f[d as usize] = 1;
        let mut r = rank;
        for i in (1..=d).rev() {
            let digit = (r % u64::from(p)) as u32;
            r /= u64::from(p);
            let coeff = if i % 2 == 0 { digit } else { (p - digit) % p };
            f[(d - i) as usize] = coeff;
        }
        f
    })
}

#[test]
fn tabulated_polynomials_are_least_in_conway_order() {
    for (p, d) in tabulated().filter(|&(p, d)| u64::from(p).pow(d) <= 1024) {
        let expected = conway_polynomial(p, d).unwrap();
        let first = conway_order_candidates(p, d)
            .find(|f| {
                let q = Quotient { p: u64::from(p), f };
                is_primitive(&q) && is_compatible(&q, p)
            })
            .unwrap();
        assert_eq!(first, expected, "({p}, {d})");
    }
}

#[test]
fn known_polynomials() {
    assert_eq!(conway_polynomial(2, 2).unwrap(), [1, 1, 1]);
    assert_eq!(conway_polynomial(2, 3).unwrap(), [1, 1, 0, 1]);
    assert_eq!(conway_polynomial(2, 4).unwrap(), [1, 1, 0, 0, 1]);
    assert_eq!(conway_polynomial(3, 2).unwrap(), [2, 2, 1]);
    assert_eq!(conway_polynomial(5, 2).unwrap(), [2, 4, 1]);
    assert_eq!(conway_polynomial(7, 1).unwrap(), [4, 1]);
    assert_eq!(
        conway_polynomial(2, 8).unwrap(),
        [1, 0, 1, 1, 1, 0, 0, 0, 1]
    );
}

fn big_fields() -> impl Strategy<Value = FieldTower> {
    prop::sample::select(vec![
        (2u32, 16u32),
        (3, 10),
        (5, 6),
        (7, 5),
        (251, 2),
        (65521, 1),
    ])
    .prop_map(|(p, a)| FieldTower::new(p, a, 1).unwrap())
}

proptest! {
    #[test]
    fn large_field_ring_laws(t in big_fields(), a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let n = t.order();
        let (a, b, c) = (a % n, b % n, c % n);
        prop_assert_eq!(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c)));
        prop_assert_eq!(t.mul(a, t.mul(b, c)), t.mul(t.mul(a, b), c));
        prop_assert_eq!(t.add(a, t.add(b, c)), t.add(t.add(a, b), c));
        if b != 0 {
            prop_assert_eq!(t.mul(t.div(a, b).unwrap(), b), a);
        }
        prop_assert_eq!(t.frobenius(t.alpha(), a), a);
        prop_assert_eq!(t.pow(a, u64::from(n)), a);
    }
}
