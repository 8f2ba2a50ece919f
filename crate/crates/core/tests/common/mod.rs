#![allow(dead_code)]

use homolog::bracket::{
    bracket_membership, direct_filtration, enumerate_indecomposables, filtration_by_lattice,
    verify_syzygy_bracket, BracketAnswer, BracketCaps, BracketQuery, ChainDirection,
};
use homolog::corpus::corpus;
use homolog::io::parse_document;
use homolog::rep::{
    decompose, is_isomorphic, radical_series, random_module, regular_module, simple, Algebra,
    DecomposeConfig,
};
use homolog::syzygy::{
    cosyzygy, horseshoe, minimal_resolution, remove_projective_summands, syzygy, syzygy_step,
    ExactSequence, ShortExactSequence,
};
use homolog::torsion::{
    algebra_layer_length, in_filtration_class, t_layer_length, torsion_radical, SimpleSet,
};
use homolog::{Field, Matrix, PrimeField, Representation, Submodule};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Alg = Algebra<PrimeField>;
pub type Rep = Representation<PrimeField>;

pub fn build(p: u32, vertices: &[&str], arrows: &[&str], relations: &[&str]) -> Alg {
    let mut text = format!("field F {p}\nquiver\n");
    for v in vertices {
        text.push_str(&format!("  vertex {v}\n"));
    }
    for a in arrows {
        text.push_str(&format!("  arrow {a}\n"));
    }
    text.push_str("relations\n");
    for r in relations {
        text.push_str(&format!("  {r}\n"));
    }
    parse_document(&text)
        .unwrap()
        .build_algebra(PrimeField::new(p).unwrap())
        .unwrap()
}

pub fn a2(p: u32) -> Alg {
    build(p, &["1", "2"], &["a 1 2"], &[])
}

pub fn kronecker(p: u32) -> Alg {
    build(p, &["1", "2"], &["a 1 2", "b 1 2"], &[])
}

pub fn truncated(p: u32, n: usize) -> Alg {
    let rel = vec!["x"; n].join(".");
    build(p, &["1"], &["x 1 1"], &[&rel])
}

pub fn exterior2(p: u32) -> Alg {
    build(p, &["1"], &["x 1 1", "y 1 1"], &["x.x", "y.y", "x.y + y.x"])
}

pub fn corpus_algebras() -> Vec<(String, Alg)> {
    corpus()
        .into_iter()
        .map(|e| (e.name.to_string(), e.algebra().unwrap()))
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn mat(f: &PrimeField, rows: usize, cols: usize, data: &[u64]) -> Matrix<PrimeField> {
    Matrix::from_rows(f, rows, cols, data.iter().map(|&x| f.element(x)).collect())
}

fn rep(alg: &Alg, dims: Vec<usize>, maps: Vec<Matrix<PrimeField>>) -> Rep {
    Representation::new(alg.clone(), dims, maps).unwrap()
}

/// Companion matrix of the monic polynomial with lower coefficients `c`.
fn companion(f: &PrimeField, c: &[u64]) -> Matrix<PrimeField> {
    let n = c.len();
    let mut m = Matrix::zeros(f, n, n);
    for i in 1..n {
        m.set(i, i - 1, f.one());
    }
    for (i, &x) in c.iter().enumerate() {
        m.set(i, n - 1, f.neg(&f.element(x)));
    }
    m
}

/// Indecomposables of total dimension at most 6 over `F_2`: `A_2`.
pub fn a2_indecomposables(alg: &Alg) -> Vec<Rep> {
    let f = alg.field();
    vec![
        rep(alg, vec![1, 0], vec![mat(f, 0, 1, &[])]),
        rep(alg, vec![0, 1], vec![mat(f, 1, 0, &[])]),
        rep(alg, vec![1, 1], vec![mat(f, 1, 1, &[1])]),
    ]
}

/// Jordan blocks of `x` up to size `n - 1` over `k[x]/x^n`.
pub fn truncated_indecomposables(alg: &Alg, n: usize) -> Vec<Rep> {
    let f = alg.field();
    (1..=n)
        .map(|k| {
            let mut j = Matrix::zeros(f, k, k);
            for i in 1..k {
                j.set(i, i - 1, f.one());
            }
            rep(alg, vec![k], vec![j])
        })
        .collect()
}

/// Kronecker indecomposables over `F_2` of total dimension at most 6:
/// preprojective, preinjective and regular at every closed point.
pub fn kronecker_indecomposables(alg: &Alg) -> Vec<Rep> {
    let f = alg.field();
    let mut out = Vec::new();
    for n in 0..=2usize {
        let mut a = Matrix::zeros(f, n + 1, n);
        let mut b = Matrix::zeros(f, n + 1, n);
        for i in 0..n {
            a.set(i, i, f.one());
            b.set(i + 1, i, f.one());
        }
        out.push(rep(alg, vec![n, n + 1], vec![a.clone(), b.clone()]));
        out.push(rep(alg, vec![n + 1, n], vec![a.transpose(), b.transpose()]));
    }
    // Powers of irreducible polynomials with degree times exponent at most 3.
    let polys: Vec<Vec<u64>> = vec![
        vec![0],
        vec![1],
        vec![0, 0],
        vec![1, 0],
        vec![1, 1],
        vec![0, 0, 0],
        vec![1, 1, 1],
        vec![1, 1, 0],
        vec![1, 0, 1],
    ];
    for c in polys {
        let k = c.len();
        out.push(rep(
            alg,
            vec![k, k],
            vec![Matrix::identity(f, k), companion(f, &c)],
        ));
    }
    for k in 1..=3 {
        out.push(rep(
            alg,
            vec![k, k],
            vec![companion(f, &vec![0; k]), Matrix::identity(f, k)],
        ));
    }
    out
}

/// All direct sums of members of `inds` with total dimension at most `cap`.
pub fn sums_up_to(alg: &Alg, inds: &[Rep], cap: usize) -> Vec<Rep> {
    fn rec(
        alg: &Alg,
        inds: &[Rep],
        start: usize,
        cur: &mut Vec<Rep>,
        dim: usize,
        cap: usize,
        out: &mut Vec<Rep>,
    ) {
        if !cur.is_empty() {
            out.push(Representation::direct_sum_all(alg, cur));
        }
        for i in start..inds.len() {
            let d = dim + inds[i].total_dim();
            if d <= cap {
                cur.push(inds[i].clone());
                rec(alg, inds, i, cur, d, cap, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(alg, inds, 0, &mut Vec::new(), 0, cap, &mut out);
    out
}

pub fn random_vertex_set(n: usize, r: &mut ChaCha8Rng) -> SimpleSet {
    SimpleSet::new((0..n).filter(|_| r.gen_bool(0.5)))
}

/// The submodule generated by `k` random vectors.
pub fn random_submodule(m: &Rep, r: &mut ChaCha8Rng, k: usize) -> Submodule<PrimeField> {
    let f = m.field();
    let q = f.order().unwrap();
    let mut gens: Vec<Matrix<PrimeField>> =
        m.dims().iter().map(|&d| Matrix::zeros(f, d, 0)).collect();
    let live: Vec<usize> = (0..m.dims().len()).filter(|&v| m.dim(v) > 0).collect();
    if live.is_empty() {
        return Submodule::zero(m);
    }
    for _ in 0..k {
        let v = live[r.gen_range(0..live.len())];
        let col: Vec<_> = (0..m.dim(v))
            .map(|_| f.element(r.gen_range(0..q)))
            .collect();
        gens[v] = gens[v].hstack(&Matrix::from_columns(f, m.dim(v), &[col]));
    }
    Submodule::generated_by(m, &gens)
}

fn pad(v: Option<&Vec<usize>>, n: usize) -> Vec<usize> {
    v.cloned().unwrap_or_else(|| vec![0; n])
}

/// Every structural property on one module, with `other` as a second
/// summand and `v` as the simple set.
pub fn check_module(m: &Rep, other: &Rep, v: &SimpleSet, r: &mut ChaCha8Rng) -> Result<(), String> {
    let nv = m.dims().len();
    let res = minimal_resolution(m, 4);
    if !res.is_exact() || !res.is_minimal() {
        return Err(format!(
            "minimal resolution of {:?} is not exact and minimal",
            m.dims()
        ));
    }

    let u = random_submodule(m, r, 1);
    let (a, incl) = u.to_module(m);
    let (c, proj) = u.quotient(m);
    let ses = ShortExactSequence::new(incl, proj).map_err(|e| e.to_string())?;
    let hs = horseshoe(&ses, 3).map_err(|e| e.to_string())?;
    let ra = minimal_resolution(&a, 3);
    let rc = minimal_resolution(&c, 3);
    if !hs.is_exact() {
        return Err(format!(
            "horseshoe resolution of {:?} is not exact",
            m.dims()
        ));
    }
    for i in 0..hs.length().max(ra.length()).max(rc.length()) {
        let sum: Vec<usize> = pad(ra.multiplicities.get(i), nv)
            .iter()
            .zip(pad(rc.multiplicities.get(i), nv))
            .map(|(x, y)| x + y)
            .collect();
        if pad(hs.multiplicities.get(i), nv) != sum {
            return Err(format!(
                "horseshoe term {i} of {:?} is not the sum of the outer terms",
                m.dims()
            ));
        }
    }

    let (t, tm, _) = torsion_radical(m, v);
    let (t2, _, _) = torsion_radical(&tm, v);
    if t2.dims() != t.dims() {
        return Err(format!("t_V is not idempotent on {:?}", m.dims()));
    }
    if !in_filtration_class(&t.quotient(m).0, v) {
        return Err(format!("M / t_V(M) is not in F(V) for {:?}", m.dims()));
    }
    if t_layer_length(m, &SimpleSet::empty()).value != radical_series(m).loewy_length() {
        return Err(format!(
            "layer length for the empty set differs from Loewy length on {:?}",
            m.dims()
        ));
    }
    let (ts, _, _) = torsion_radical(&m.direct_sum(other), v);
    let (to, _, _) = torsion_radical(other, v);
    let expect: Vec<usize> = t.dims().iter().zip(to.dims()).map(|(x, y)| x + y).collect();
    if ts.dims() != expect {
        return Err(format!(
            "t_V is not additive on {:?} and {:?}",
            m.dims(),
            other.dims()
        ));
    }

    let d = decompose(m, &DecomposeConfig::default()).map_err(|e| e.to_string())?;
    if !d.witness().is_isomorphism() {
        return Err(format!(
            "decomposition witness of {:?} is not invertible",
            m.dims()
        ));
    }
    Ok(())
}

fn max_dim_for(alg: &Alg) -> usize {
    if alg.dimension() > 40 {
        10
    } else {
        12
    }
}

/// Runs the structural checks on `count` seeded random modules of every
/// corpus algebra; returns the number of modules checked.
pub fn structural_suite(count: u64, seed: u64) -> Result<usize, String> {
    let mut checked = 0;
    for (name, alg) in corpus_algebras() {
        if algebra_layer_length(&alg, &SimpleSet::empty()) != alg.loewy_length() {
            return Err(format!(
                "{name}: layer length of the regular module differs from LL"
            ));
        }
        let cap = max_dim_for(&alg);
        for i in 0..count {
            let mut r = rng(seed.wrapping_mul(1_000_003).wrapping_add(i));
            let m = random_module(&alg, &mut r, 2, cap);
            let other = random_module(&alg, &mut r, 1, cap / 2);
            let v = random_vertex_set(alg.num_vertices(), &mut r);
            check_module(&m, &other, &v, &mut r).map_err(|e| format!("{name} sample {i}: {e}"))?;
            checked += 1;
        }
    }
    Ok(checked)
}

/// `M ≅ Ω^{-m} Ω^m M` up to projective summands for every module in
/// `universe` and `m ≤ max_m`; returns the number of pairs checked.
pub fn selfinjective_law(universe: &[Rep], max_m: usize) -> Result<usize, String> {
    let cfg = DecomposeConfig::default();
    let mut checked = 0;
    for x in universe {
        let lhs = remove_projective_summands(x, &cfg).map_err(|e| e.to_string())?;
        for m in 0..=max_m {
            let back = cosyzygy(&syzygy(x, m), m);
            let rhs = remove_projective_summands(&back, &cfg).map_err(|e| e.to_string())?;
            if !is_isomorphic(&lhs, &rhs, &cfg).map_err(|e| e.to_string())? {
                return Err(format!(
                    "{:?} differs from its {m}-fold syzygy round trip",
                    x.dims()
                ));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

/// Indecomposables of `k[x]/x^4` and a finite family for `∧(k²)`: all of
/// dimension at most 2, the syzygies and cosyzygies of the simple, and `Λ`.
pub fn selfinjective_universes() -> Vec<(String, Vec<Rep>)> {
    let t = truncated(2, 4);
    let e = exterior2(3);
    let mut ext = enumerate_indecomposables(&e, 2, 1 << 16, &DecomposeConfig::default()).unwrap();
    let s = simple(&e, 0);
    for i in 1..=3 {
        ext.push(syzygy(&s, i));
        ext.push(cosyzygy(&s, i));
    }
    ext.push(regular_module(&e));
    vec![
        ("k[x]/x^4".into(), truncated_indecomposables(&t, 4)),
        ("exterior-2".into(), ext),
    ]
}

/// Generators tried against each module in the lattice comparison.
fn generators(alg: &Alg, inds: &[Rep]) -> Vec<Rep> {
    let n = alg.num_vertices();
    let mut gens: Vec<Rep> = (0..n).map(|v| simple(alg, v)).collect();
    gens.push(regular_module(alg));
    gens.push(Representation::direct_sum_all(alg, &gens[..n]));
    gens.extend(inds.iter().filter(|x| x.total_dim() == 2).take(2).cloned());
    gens
}

/// Direct filtration against the lattice oracle on every module of
/// dimension at most `cap`; returns the number of comparisons.
pub fn lattice_comparison(
    name: &str,
    alg: &Alg,
    inds: &[Rep],
    cap: usize,
    max_level: usize,
) -> Result<usize, String> {
    let caps = BracketCaps {
        dim_cap: cap,
        ..Default::default()
    };
    let gens = generators(alg, inds);
    let mut n = 0;
    for m in sums_up_to(alg, inds, cap) {
        for g in &gens {
            for level in 1..=max_level {
                let layers = vec![g.clone(); level];
                let fast = direct_filtration(&m, &layers, &caps).map_err(|e| e.to_string())?;
                let slow =
                    filtration_by_lattice(&m, &layers, 1 << 14).map_err(|e| e.to_string())?;
                if fast.is_some() != slow {
                    return Err(format!(
                        "{name}: {:?} in [{:?}]_{level}: direct {} lattice {slow}",
                        m.dims(),
                        g.dims(),
                        fast.is_some()
                    ));
                }
                if let Some(w) = fast {
                    w.validate(&m).map_err(|e| e.to_string())?;
                }
                n += 1;
            }
        }
    }
    Ok(n)
}

pub fn spot_algebras() -> Vec<Alg> {
    vec![a2(2), kronecker(2), truncated(2, 3)]
}

/// `M ∈ [T_1]_m • [T_1]_n` forces `M ∈ [T_1 ⊕ T_2]_{m+n}`, with
/// `T_1 = U ⊕ M/U` for a random submodule `U`.
pub fn extension_spot_check(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    let algs = spot_algebras();
    let alg = &algs[r.gen_range(0..algs.len())];
    let m = random_module(alg, &mut r, 2, 5);
    let u = random_submodule(&m, &mut r, 1);
    let t1 = u.to_module(&m).0.direct_sum(&u.quotient(&m).0);
    let t2 = random_module(alg, &mut r, 1, 3);
    let (a, b) = (r.gen_range(1..=2), r.gen_range(1..=2));
    let caps = BracketCaps {
        dim_cap: 16,
        ..Default::default()
    };
    let premise =
        direct_filtration(&m, &vec![t1.clone(); a + b], &caps).map_err(|e| e.to_string())?;
    if premise.is_none() {
        return Err(format!(
            "seed {seed}: {:?} not filtered by U and M/U",
            m.dims()
        ));
    }
    let q = BracketQuery {
        target: m.clone(),
        generator: t1.direct_sum(&t2),
        level: a + b,
        caps,
    };
    match bracket_membership(&q).map_err(|e| e.to_string())? {
        BracketAnswer::Yes(w) => w.validate(&m).map_err(|e| e.to_string()),
        _ => Err(format!(
            "seed {seed}: {:?} not in [T1 + T2]_{}",
            m.dims(),
            a + b
        )),
    }
}

/// `[X]_1 ⊆ [Y]_m` forces `[Ω^{-p} X]_m ⊆ [Ω^{-p} Y]_m`, with `Y = U ⊕ X/U`
/// and `m = 2`.
pub fn cosyzygy_spot_check(seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    let algs = spot_algebras();
    let alg = &algs[r.gen_range(0..algs.len())];
    let x = random_module(alg, &mut r, 2, 4);
    let u = random_submodule(&x, &mut r, 1);
    let y = u.to_module(&x).0.direct_sum(&u.quotient(&x).0);
    let direct = BracketCaps {
        dim_cap: 16,
        ..Default::default()
    };
    if direct_filtration(&x, &[y.clone(), y.clone()], &direct)
        .map_err(|e| e.to_string())?
        .is_none()
    {
        return Err(format!("seed {seed}: premise fails for {:?}", x.dims()));
    }
    let caps = BracketCaps {
        dim_cap: 16,
        ..BracketCaps::summand_closed()
    };
    for p in 0..=2 {
        let (xp, yp) = (cosyzygy(&x, p), cosyzygy(&y, p));
        if xp.is_zero() {
            continue;
        }
        let q = BracketQuery {
            target: xp.clone(),
            generator: yp,
            level: 2,
            caps,
        };
        match bracket_membership(&q).map_err(|e| e.to_string())? {
            BracketAnswer::Yes(w) => w.validate(&xp).map_err(|e| e.to_string())?,
            other => {
                let label = if let BracketAnswer::Unknown(s) = other {
                    s
                } else {
                    "no".into()
                };
                return Err(format!(
                    "seed {seed}: cosyzygy {p} of {:?}: {label}",
                    x.dims()
                ));
            }
        }
    }
    Ok(())
}

/// Checks `M ∈ [P_0]_1 • [Ω^{-1}(Ω M)]_1` from `0 -> Ω M -> P_0 -> M -> 0`
/// for every non-projective member of `universe`; returns the numbers
/// verified and beyond the caps.
pub fn syzygy_witnesses(universe: &[Rep]) -> (usize, usize) {
    let caps = BracketCaps {
        dim_cap: 8,
        ..Default::default()
    };
    let (mut verified, mut beyond) = (0, 0);
    for m in universe {
        let (omega, incl, cover) = syzygy_step(m);
        if omega.is_zero() {
            continue;
        }
        let chain = ExactSequence::new(vec![incl, cover.epi]).unwrap();
        for (direction, target) in [
            (ChainDirection::Coresolution, m),
            (ChainDirection::Resolution, &omega),
        ] {
            match verify_syzygy_bracket(&chain, direction, &caps) {
                Ok(w) => {
                    for s in &w.steps {
                        s.validate(s.ambient.inclusion.source()).unwrap();
                    }
                    w.witness.validate(target).unwrap();
                    verified += 1;
                }
                Err(homolog::Error::CapExceeded(_)) => beyond += 1,
                Err(e) => panic!("{:?}: {e}", m.dims()),
            }
        }
    }
    (verified, beyond)
}
