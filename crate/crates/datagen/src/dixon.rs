//! Character tables by the Dixon-Schneider method: simultaneous
//! eigenvectors of the class-constant matrices over a prime field F_p with
//! p = 1 mod exponent(W), lifted exactly to cyclotomic values through the
//! power maps. The caller re-validates the lifted table with exact
//! orthogonality, so any failure here is loud.

use cmfam::error::{Error, Result};
use cmfam::exact::cyclotomic::Cyclotomic;
use cmfam::group::GroupData;
use cmfam::sampling::SeededStream;

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime p = 1 (mod e) with p > lower.
fn find_prime(e: u64, lower: u64) -> u64 {
    let mut k = lower / e + 1;
    loop {
        let cand = k * e + 1;
        if cand > lower && is_prime(cand) {
            return cand;
        }
        k += 1;
    }
}

fn primitive_root_of_unity(e: u64, p: u64) -> u64 {
    // Find a generator of F_p^* by trial, then raise to (p-1)/e.
    'outer: for g in 2..p {
        let mut m = p - 1;
        let mut factors = Vec::new();
        let mut q = 2;
        while q * q <= m {
            if m % q == 0 {
                factors.push(q);
                while m % q == 0 {
                    m /= q;
                }
            }
            q += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        for f in factors {
            if powmod(g, (p - 1) / f, p) == 1 {
                continue 'outer;
            }
        }
        return powmod(g, (p - 1) / e, p);
    }
    unreachable!("F_p^* is cyclic");
}

/// Monic characteristic polynomial by Faddeev-LeVerrier; index = degree.
fn charpoly(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = m.len();
    let mut coeffs = vec![0u64; n + 1];
    coeffs[n] = 1;
    // a_k = A (a_{k-1} - c_{k-1} I), c_k = tr(a_k)/k
    let mut ak: Vec<Vec<u64>> = m.to_vec();
    for k in 1..=n {
        let trace = (0..n).fold(0u64, |acc, i| (acc + ak[i][i]) % p);
        let ck = mulmod(trace, invmod(k as u64 % p, p), p);
        coeffs[n - k] = (p - ck) % p;
        if k == n {
            break;
        }
        // ak <- m * (ak - ck I)
        let mut shifted = ak.clone();
        for i in 0..n {
            shifted[i][i] = (shifted[i][i] + p - ck) % p;
        }
        let mut next = vec![vec![0u64; n]; n];
        for i in 0..n {
            for l in 0..n {
                let a = m[i][l];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] = (next[i][j] + mulmod(a, shifted[l][j], p)) % p;
                }
            }
        }
        ak = next;
    }
    coeffs
}

fn poly_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = invmod(b[db], p);
    while r.len() > db {
        let d = r.len() - 1;
        let c = mulmod(*r.last().unwrap(), lead_inv, p);
        if c != 0 {
            for j in 0..=db {
                let idx = d - db + j;
                r[idx] = (r[idx] + p - mulmod(c, b[j], p)) % p;
            }
        }
        r.pop();
        while r.last() == Some(&0) && r.len() > 1 {
            r.pop();
        }
        if r.iter().all(|&c| c == 0) {
            return vec![0];
        }
    }
    r
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    while !(r1.len() == 1 && r1[0] == 0) {
        let r = poly_mod(&r0, &r1, p);
        r0 = r1;
        r1 = r;
    }
    // Make monic.
    let lead = *r0.last().unwrap();
    let inv = invmod(lead, p);
    r0.iter().map(|&c| mulmod(c, inv, p)).collect()
}

fn poly_powmod(base: &[u64], mut e: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = poly_mod(base, modulus, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mod(&poly_mul(&acc, &b, p), modulus, p);
        }
        b = poly_mod(&poly_mul(&b, &b, p), modulus, p);
        e >>= 1;
    }
    acc
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    out
}

/// All roots of a squarefree, fully split polynomial, by Cantor-Zassenhaus
/// splitting with deterministic seeded shifts.
fn split_roots(f: &[u64], p: u64, rng: &mut SeededStream) -> Option<Vec<u64>> {
    // Check full splitting: x^p - x = 0 mod f.
    let xp = poly_powmod(&[0, 1], p, f, p);
    let mut xp_minus_x = xp;
    if xp_minus_x.len() < 2 {
        xp_minus_x.resize(2, 0);
    }
    xp_minus_x[1] = (xp_minus_x[1] + p - 1) % p;
    while xp_minus_x.last() == Some(&0) && xp_minus_x.len() > 1 {
        xp_minus_x.pop();
    }
    if !(xp_minus_x.len() == 1 && xp_minus_x[0] == 0) {
        return None;
    }
    let mut stack = vec![f.to_vec()];
    let mut roots = Vec::new();
    while let Some(g) = stack.pop() {
        let d = g.len() - 1;
        if d == 0 {
            continue;
        }
        if d == 1 {
            // g = c0 + x
            let root = (p - g[0] % p) % p;
            roots.push(root);
            continue;
        }
        // gcd((x + delta)^((p-1)/2) - 1, g)
        let delta = rng.next_u64() % p;
        let mut h = poly_powmod(&[delta, 1], (p - 1) / 2, &g, p);
        h[0] = (h[0] + p - 1) % p;
        while h.last() == Some(&0) && h.len() > 1 {
            h.pop();
        }
        if h.iter().all(|&c| c == 0) {
            stack.push(g);
            continue;
        }
        let a = poly_gcd(&g, &h, p);
        if a.len() == 1 || a.len() == g.len() {
            stack.push(g);
            continue;
        }
        let (q, r) = poly_divrem(&g, &a, p);
        debug_assert!(r.iter().all(|&c| c == 0));
        stack.push(a);
        stack.push(q);
    }
    Some(roots)
}

fn poly_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (vec![0], rem);
    }
    let lead_inv = invmod(b[db], p);
    let mut quot = vec![0u64; rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = mulmod(rem[i + db], lead_inv, p);
        if c != 0 {
            quot[i] = c;
            for j in 0..=db {
                rem[i + j] = (rem[i + j] + p - mulmod(c, b[j], p)) % p;
            }
        }
    }
    while rem.last() == Some(&0) && rem.len() > 1 {
        rem.pop();
    }
    (quot, rem)
}

/// One vector spanning the kernel of m (requires nullity exactly 1).
fn kernel_vector(mut m: Vec<Vec<u64>>, p: u64) -> Option<Vec<u64>> {
    let n = m.len();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if let Some(pr) = (r..n).find(|&i| m[i][c] != 0) {
            m.swap(r, pr);
            let inv = invmod(m[r][c], p);
            for j in 0..n {
                m[r][j] = mulmod(m[r][j], inv, p);
            }
            for i in 0..n {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..n {
                        m[i][j] = (m[i][j] + p - mulmod(f, m[r][j], p)) % p;
                    }
                }
            }
            pivot_col_of_row.push(c);
            r += 1;
        }
    }
    if r != n - 1 {
        return None;
    }
    let free_col = (0..n)
        .find(|c| !pivot_col_of_row.contains(c))
        .expect("one free column");
    let mut v = vec![0u64; n];
    v[free_col] = 1;
    for (row, &pc) in pivot_col_of_row.iter().enumerate() {
        v[pc] = (p - m[row][free_col]) % p;
    }
    Some(v)
}

/// The exact character table of the enumerated group, rows in no particular
/// order, columns in canonical class order, values over Q(zeta_exponent).
pub fn character_table(g: &GroupData) -> Result<Vec<Vec<Cyclotomic>>> {
    let r = g.classes.len();
    let e = g.exponent() as u64;
    let p = find_prime(e, (2 * g.order as u64).max(64));
    let zeta = primitive_root_of_unity(e, p);

    // Class-constant matrices: a[i][j][k] = #{(x,y) in C_i x C_j : xy = z_k}.
    let mut a = vec![vec![vec![0u64; r]; r]; r];
    for k in 0..r {
        let zk = &g.elements[g.classes[k].rep];
        for x in 0..g.order {
            let i = g.class_of[x];
            let y = g.elements[g.inverse[x]].mul(zk);
            let j = g.class_of[g.element_index(&y).expect("closed")];
            a[i][j][k] += 1;
        }
    }

    // Simultaneous eigenvectors from a random linear combination.
    let mut rng = SeededStream::new(0x00d1_7c0f_f1ce_u64);
    let idc = g.identity_class();
    let mut omegas: Option<Vec<Vec<u64>>> = None;
    'attempt: for _ in 0..64 {
        let coeffs: Vec<u64> = (0..r).map(|_| rng.next_u64() % p).collect();
        let mut m = vec![vec![0u64; r]; r];
        for i in 0..r {
            if coeffs[i] == 0 {
                continue;
            }
            for jj in 0..r {
                for k in 0..r {
                    m[jj][k] = (m[jj][k] + mulmod(coeffs[i], a[i][jj][k], p)) % p;
                }
            }
        }
        let f = charpoly(&m, p);
        // Squarefree check via gcd(f, f').
        let fd: Vec<u64> = (1..f.len())
            .map(|i| mulmod(f[i], i as u64 % p, p))
            .collect();
        if fd.iter().all(|&c| c == 0) {
            continue;
        }
        let gcd = poly_gcd(&f, &fd, p);
        if gcd.len() != 1 {
            continue;
        }
        let Some(roots) = split_roots(&f, p, &mut rng) else {
            continue;
        };
        if roots.len() != r {
            continue;
        }
        let mut vecs = Vec::with_capacity(r);
        for &root in &roots {
            let mut shifted = m.clone();
            for i in 0..r {
                shifted[i][i] = (shifted[i][i] + p - root) % p;
            }
            let Some(v) = kernel_vector(shifted, p) else {
                continue 'attempt;
            };
            vecs.push(v);
        }
        // Extract per-class eigenvalues and verify simultaneity.
        let mut all = Vec::with_capacity(r);
        for v in vecs {
            let pivot = (0..r).find(|&j| v[j] != 0).expect("nonzero");
            let vinv = invmod(v[pivot], p);
            let mut omega = vec![0u64; r];
            for i in 0..r {
                let mut w = vec![0u64; r];
                for jj in 0..r {
                    for k in 0..r {
                        if a[i][jj][k] != 0 && v[k] != 0 {
                            w[jj] = (w[jj] + mulmod(a[i][jj][k], v[k], p)) % p;
                        }
                    }
                }
                let val = mulmod(w[pivot], vinv, p);
                for jj in 0..r {
                    if w[jj] != mulmod(val, v[jj], p) {
                        continue 'attempt;
                    }
                }
                omega[i] = val;
            }
            // Normalize so the identity coordinate is 1 (it always is).
            if omega[idc] != 1 {
                continue 'attempt;
            }
            all.push(omega);
        }
        omegas = Some(all);
        break;
    }
    let omegas = omegas.ok_or_else(|| {
        Error::Validation("class-matrix eigen decomposition did not converge".into())
    })?;

    // Degrees and values mod p, then exact lift through power maps.
    let inv_sizes: Vec<u64> = (0..r)
        .map(|k| invmod(g.classes[k].size as u64 % p, p))
        .collect();
    let inv_class: Vec<usize> = (0..r).map(|k| g.inverse_class(k)).collect();
    let worder = g.order as u64 % p;

    let mut table = Vec::with_capacity(r);
    for omega in &omegas {
        let mut s = 0u64;
        for k in 0..r {
            s = (s + mulmod(mulmod(omega[k], omega[inv_class[k]], p), inv_sizes[k], p)) % p;
        }
        let dsq = mulmod(worder, invmod(s, p), p);
        let d = (1..=g.order as u64)
            .find(|&d| d * d == dsq)
            .ok_or_else(|| Error::Validation(format!("degree^2 = {dsq} is not a square")))?;

        let chi_mod: Vec<u64> = (0..r)
            .map(|k| mulmod(mulmod(d % p, omega[k], p), inv_sizes[k], p))
            .collect();

        // Lift each value: chi(g) = sum a_j zeta_m^j with
        // a_j = (1/m) sum_t chi(g^t) zeta_m^{-jt}, a_j in [0, d].
        let mut row = Vec::with_capacity(r);
        for k in 0..r {
            let m = g.classes[k].element_order as u64;
            let zm = powmod(zeta, e / m, p);
            let chi_on_powers: Vec<u64> =
                (0..m).map(|t| chi_mod[g.class_of_power(k, t as u32)]).collect();
            let minv = invmod(m % p, p);
            let mut terms = Vec::new();
            for j in 0..m {
                let mut acc = 0u64;
                for (t, &c) in chi_on_powers.iter().enumerate() {
                    let expnt = (m - (j * t as u64) % m) % m;
                    acc = (acc + mulmod(c, powmod(zm, expnt, p), p)) % p;
                }
                let aj = mulmod(acc, minv, p);
                if aj > d {
                    return Err(Error::Validation(format!(
                        "eigenvalue multiplicity {aj} exceeds degree {d} in the lift"
                    )));
                }
                if aj != 0 {
                    terms.push((j as u32, cmfam::exact::Rational::from_integer(aj.into())));
                }
            }
            let value = Cyclotomic::from_power_terms(m as u32, &terms).embed(e as u32);
            row.push(value);
        }
        table.push(row);
    }
    Ok(table)
}
