use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::rep::{projective_cover, Morphism, Representation, Submodule};

use super::{is_projective, Resolution};

/// `0 -> X_0 -> X_1 -> ... -> X_k -> 0` given by its maps `X_i -> X_{i+1}`.
#[derive(Debug, Clone)]
pub struct ExactSequence<F: Field> {
    pub maps: Vec<Morphism<F>>,
}

impl<F: Field> ExactSequence<F> {
    /// Validates exactness at every term.
    pub fn new(maps: Vec<Morphism<F>>) -> Result<Self> {
        let s = ExactSequence { maps };
        s.check()?;
        Ok(s)
    }

    pub fn terms(&self) -> Vec<&Representation<F>> {
        let mut out: Vec<&Representation<F>> = self.maps.iter().map(|m| m.source()).collect();
        if let Some(last) = self.maps.last() {
            out.push(last.target());
        }
        out
    }

    pub fn first(&self) -> &Representation<F> {
        self.maps[0].source()
    }

    pub fn last(&self) -> &Representation<F> {
        self.maps.last().unwrap().target()
    }

    pub fn check(&self) -> Result<()> {
        let maps = &self.maps;
        if maps.is_empty() {
            return Err(Error::NotExact("empty sequence".into()));
        }
        for w in maps.windows(2) {
            if w[0].target().dims() != w[1].source().dims() {
                return Err(Error::NotExact("consecutive maps do not compose".into()));
            }
        }
        if !maps[0].is_injective() {
            return Err(Error::NotExact("first map is not injective".into()));
        }
        if !maps.last().unwrap().is_surjective() {
            return Err(Error::NotExact("last map is not surjective".into()));
        }
        for (i, w) in maps.windows(2).enumerate() {
            if !w[0].then(&w[1]).is_zero() {
                return Err(Error::NotExact(format!(
                    "composite at position {} is nonzero",
                    i + 1
                )));
            }
            let ker = w[1].source().total_dim() - w[1].rank();
            if ker != w[0].rank() {
                return Err(Error::NotExact(format!("homology at position {}", i + 1)));
            }
        }
        Ok(())
    }
}

/// `0 -> A --f--> B --g--> C -> 0`.
#[derive(Debug, Clone)]
pub struct ShortExactSequence<F: Field> {
    pub f: Morphism<F>,
    pub g: Morphism<F>,
}

impl<F: Field> ShortExactSequence<F> {
    pub fn new(f: Morphism<F>, g: Morphism<F>) -> Result<Self> {
        ExactSequence::new(vec![f.clone(), g.clone()])?;
        Ok(ShortExactSequence { f, g })
    }
}

fn column_inclusions<F: Field>(
    a: &Representation<F>,
    c: &Representation<F>,
) -> (Vec<Matrix<F>>, Vec<Matrix<F>>) {
    let f = a.field();
    let first = (0..a.dims().len())
        .map(|v| Matrix::identity(f, a.dim(v)).vstack(&Matrix::zeros(f, c.dim(v), a.dim(v))))
        .collect();
    let second = (0..a.dims().len())
        .map(|v| Matrix::zeros(f, c.dim(v), a.dim(v)).hstack(&Matrix::identity(f, c.dim(v))))
        .collect();
    (first, second)
}

/// Horseshoe resolution of the middle term: term `i` is `P_i(A) ⊕ P_i(C)`.
pub fn horseshoe<F: Field>(ses: &ShortExactSequence<F>, max_terms: usize) -> Result<Resolution<F>> {
    ShortExactSequence::new(ses.f.clone(), ses.g.clone())?;
    let b0 = ses.f.target().clone();
    let nv = b0.dims().len();
    let fld = b0.field().clone();
    let (mut f, mut g) = (ses.f.clone(), ses.g.clone());
    let mut terms = Vec::new();
    let mut multiplicities = Vec::new();
    let mut differentials: Vec<Morphism<F>> = Vec::new();
    let mut prev_incl: Option<Morphism<F>> = None;
    while terms.len() < max_terms && !f.target().is_zero() {
        let (a, b, c) = (f.source().clone(), f.target().clone(), g.target().clone());
        let cover_a = projective_cover(&a);
        let cover_c = projective_cover(&c);
        let paths_b = b.basis_path_matrices();
        let lifts: Vec<Vec<F::Elem>> = cover_c
            .generators
            .iter()
            .map(|(v, x)| {
                let col = Matrix::from_columns(&fld, c.dim(*v), &[x.clone()]);
                g.map(*v).solve(&col).expect("g is surjective").column(0)
            })
            .collect();
        let lambda = cover_c.layout.map_to(&cover_c.module, &b, &paths_b, &lifts);
        let eps_b = cover_a.epi.then(&f).copair(&lambda);
        let p = eps_b.source().clone();

        let mut mult = vec![0; nv];
        for &v in cover_a.layout.gens.iter().chain(&cover_c.layout.gens) {
            mult[v] += 1;
        }
        terms.push(p.clone());
        multiplicities.push(mult);
        differentials.push(match &prev_incl {
            None => eps_b.clone(),
            Some(i) => eps_b.then(i),
        });

        let kernel = |e: &Morphism<F>| {
            let s =
                Submodule::from_bases_unchecked((0..nv).map(|v| e.map(v).nullspace()).collect());
            s.to_module(e.source())
        };
        let (ka, ia) = kernel(&cover_a.epi);
        let (kb, ib) = kernel(&eps_b);
        let (kc, ic) = kernel(&cover_c.epi);
        let (first, second) = column_inclusions(&cover_a.module, &cover_c.module);
        let f_maps = (0..nv)
            .map(|v| {
                ib.map(v)
                    .solve(&first[v].mul(ia.map(v)))
                    .expect("A-kernel lies in B-kernel")
            })
            .collect();
        let g_maps = (0..nv)
            .map(|v| {
                ic.map(v)
                    .solve(&second[v].mul(ib.map(v)))
                    .expect("B-kernel maps to C-kernel")
            })
            .collect();
        f = Morphism::from_parts(ka, kb.clone(), f_maps);
        g = Morphism::from_parts(kb, kc, g_maps);
        prev_incl = Some(ib);
    }
    Ok(Resolution {
        module: b0,
        terms,
        multiplicities,
        differentials,
        truncated: !f.target().is_zero(),
    })
}

/// Split decomposition `X = M ⊕ P` of the last term of a sequence.
#[derive(Debug, Clone)]
pub struct ProjectiveSplitting<F: Field> {
    pub m_inclusion: Morphism<F>,
    pub m_projection: Morphism<F>,
    pub p_inclusion: Morphism<F>,
    pub p_projection: Morphism<F>,
}

impl<F: Field> ProjectiveSplitting<F> {
    /// The canonical splitting of `M ⊕ P`.
    pub fn direct_sum(m: &Representation<F>, p: &Representation<F>) -> Self {
        let x = m.direct_sum(p);
        let (first, second) = column_inclusions(m, p);
        let proj_m = first.iter().map(|e| e.transpose()).collect();
        let incl_p = second.iter().map(|e| e.transpose()).collect();
        ProjectiveSplitting {
            m_inclusion: Morphism::from_parts(m.clone(), x.clone(), first),
            m_projection: Morphism::from_parts(x.clone(), m.clone(), proj_m),
            p_inclusion: Morphism::from_parts(p.clone(), x.clone(), incl_p),
            p_projection: Morphism::from_parts(x, p.clone(), second),
        }
    }

    fn check(&self) -> Result<()> {
        let bad = |s: &str| Err(Error::NotSplitSummand(s.into()));
        let m = self.m_inclusion.source();
        let p = self.p_inclusion.source();
        if !is_projective(p) {
            return bad("designated summand is not projective");
        }
        let id_m = self.m_inclusion.then(&self.m_projection);
        let id_p = self.p_inclusion.then(&self.p_projection);
        if !id_m
            .maps()
            .iter()
            .zip(Morphism::identity(m).maps())
            .all(|(a, b)| a == b)
            || !id_p
                .maps()
                .iter()
                .zip(Morphism::identity(p).maps())
                .all(|(a, b)| a == b)
        {
            return bad("inclusions and projections do not compose to identities");
        }
        let sum = self
            .m_projection
            .then(&self.m_inclusion)
            .add(&self.p_projection.then(&self.p_inclusion));
        let x = self.m_inclusion.target();
        if !sum
            .maps()
            .iter()
            .zip(Morphism::identity(x).maps())
            .all(|(a, b)| a == b)
        {
            return bad("idempotents do not sum to the identity");
        }
        Ok(())
    }
}

/// Moves a projective summand `P` of the last term into degree 1:
/// `0 -> M_n -> … -> M_0 -> M ⊕ P -> 0` becomes
/// `0 -> M_n -> … -> M_1 ⊕ P -> M_0 -> M -> 0`.
///
/// `P -> M_0` lifts the inclusion of `P` through the surjection onto
/// `M ⊕ P`. Terms are not cancelled, so the output may contain a
/// contractible part.
pub fn strip_projective<F: Field>(
    seq: &ExactSequence<F>,
    split: &ProjectiveSplitting<F>,
) -> Result<ExactSequence<F>> {
    seq.check()?;
    split.check()?;
    let d0 = seq.maps.last().unwrap();
    if d0.target().dims() != split.m_inclusion.target().dims() {
        return Err(Error::NotSplitSummand(
            "splitting is not of the last term".into(),
        ));
    }
    let p = split.p_inclusion.source();
    let m0 = d0.source();
    let fld = m0.field().clone();

    let cover = projective_cover(p);
    let x_paths = m0.basis_path_matrices();
    let lifts: Vec<Vec<F::Elem>> = cover
        .generators
        .iter()
        .map(|(v, y)| {
            let x = split.p_inclusion.map(*v).mul_vec(y);
            let col = Matrix::from_columns(&fld, x.len(), &[x]);
            d0.map(*v)
                .solve(&col)
                .expect("last map is surjective")
                .column(0)
        })
        .collect();
    let lambda = cover.layout.map_to(&cover.module, m0, &x_paths, &lifts);
    let cover_inv = cover
        .epi
        .inverse()
        .expect("cover of a projective is an isomorphism");
    let s = cover_inv.then(&lambda);
    let to_m = d0.then(&split.m_projection);

    let k = seq.maps.len();
    let mut maps: Vec<Morphism<F>> = Vec::with_capacity(k + 1);
    if k == 1 {
        maps.push(s);
    } else {
        maps.extend(seq.maps[..k - 2].iter().cloned());
        let d1 = &seq.maps[k - 2];
        if k >= 3 {
            let d2 = maps.pop().unwrap();
            maps.push(d2.pair(&Morphism::zero(d2.source(), p)));
        }
        maps.push(d1.copair(&s));
    }
    maps.push(to_m);
    ExactSequence::new(maps)
}
