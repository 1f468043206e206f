//! Independent oracle for fake degrees: a brute-force Molien sum over all
//! group elements, with det(1 - wt) computed straight from each matrix and
//! inverted as a power series. No class sums, no stored eigenvalue data.
//! The class-summed implementation must reproduce it coefficient for
//! coefficient.

use std::path::Path;

use cmfam::bundles;
use cmfam::exact::rational::Rational;
use cmfam::exact::Cyclotomic;
use num_traits::Zero;

#[test]
fn g4_fake_degrees_match_element_wise_molien_sum() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/bundles");
    let (g, table) = bundles::load_group_and_table(&dir, "G4").unwrap();
    let conductor = table.conductor;
    let n_poly: usize = g.degrees.iter().map(|&d| (d - 1) as usize).sum();
    let d_sum: usize = g.degrees.iter().map(|&d| d as usize).sum();
    let len = n_poly + d_sum + 1;

    // Series of 1/det(1 - w t) per element, from the 2x2 determinant
    // 1 - tr(w) t + det(w) t^2.
    let inv_det_series: Vec<Vec<Cyclotomic>> = g
        .elements
        .iter()
        .map(|w| {
            let tr = w.trace().embed(conductor);
            let det = w
                .entry(0, 0)
                .mul(w.entry(1, 1))
                .sub(&w.entry(0, 1).mul(w.entry(1, 0)))
                .embed(conductor);
            let den = [Cyclotomic::one(conductor), tr.neg(), det];
            let mut s = vec![Cyclotomic::zero(conductor); len];
            s[0] = Cyclotomic::one(conductor);
            for i in 1..len {
                let mut acc = Cyclotomic::zero(conductor);
                for (j, dj) in den.iter().enumerate().skip(1) {
                    if j <= i {
                        acc = acc.add(&dj.mul(&s[i - j]));
                    }
                }
                s[i] = acc.neg();
            }
            s
        })
        .collect();

    // Expanded product of (1 - t^{d_i}).
    let mut vanishing = vec![Rational::zero(); len];
    vanishing[0] = Rational::from_integer(1.into());
    for &d in &g.degrees {
        let mut next = vec![Rational::zero(); len];
        for (i, c) in vanishing.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[i] += c;
            if i + d as usize > len - 1 {
                continue;
            }
            next[i + d as usize] -= c;
        }
        vanishing = next;
    }

    let inv_order = Rational::new(1.into(), (g.order as i64).into());
    for (row, rec) in table.fake.iter().enumerate() {
        // Sum over elements of conj(lambda(w)) / det(1 - w t).
        let mut sum = vec![Cyclotomic::zero(conductor); len];
        for (e, series) in inv_det_series.iter().enumerate() {
            let weight = table.value(row, g.class_of[e]).conj();
            if weight.is_zero() {
                continue;
            }
            for (i, c) in series.iter().enumerate() {
                sum[i] = sum[i].add(&c.mul(&weight));
            }
        }
        // Multiply by the vanishing product and 1/|W|.
        let mut out = vec![Rational::zero(); len];
        for (i, v) in vanishing.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (j, c) in sum.iter().enumerate() {
                if i + j >= len {
                    break;
                }
                let term = c.scale(&(v * &inv_order));
                out[i + j] += term.as_rational().expect("rational coefficient");
            }
        }
        for (i, c) in out.iter().enumerate() {
            let expect = if i <= n_poly {
                rec.f.coeff(i).cloned().unwrap_or_else(Rational::zero)
            } else {
                Rational::zero()
            };
            assert_eq!(
                *c, expect,
                "row {row} ({}): coefficient of t^{i}",
                table.labels[row]
            );
        }
        // The brute-force series also pins b and d.
        assert_eq!(rec.f.trailing_degree().unwrap(), rec.b);
        assert_eq!(
            rec.f.eval(&Rational::from_integer(1.into())),
            Rational::from_integer(rec.d.into())
        );
    }
}
