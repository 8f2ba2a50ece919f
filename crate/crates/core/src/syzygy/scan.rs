use crate::error::{Error, Result};
use crate::field::Field;
use crate::io::ReportValue;
use crate::rep::{
    self, decompose, is_isomorphic_indecomposable, Algebra, DecomposeConfig, Representation,
};

use super::{is_projective, syzygy_step};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanConfig {
    pub depth: usize,
    /// Largest total dimension of a module the scan will decompose.
    pub dim_cap: usize,
    pub decompose: DecomposeConfig,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            depth: 8,
            dim_cap: 256,
            decompose: DecomposeConfig::default(),
        }
    }
}

/// Indecomposable non-projective summands of `Ω^k` of the seeds, by depth.
///
/// The stabilization depth is the least `n < depth` such that every class
/// at depth `n` reappears at some depth in `(n, depth]`, that is, the
/// union of catalogs from depth `n` on stops shrinking. It is evidence for
/// `n`-syzygy-finiteness, not a proof: only the seeds' syzygies are seen.
#[derive(Debug, Clone)]
pub struct SyzygyCatalog<F: Field> {
    /// Distinct isomorphism classes, in order of discovery.
    pub classes: Vec<Representation<F>>,
    /// `levels[k]` lists the classes occurring as summands of `Ω^k(seed)`.
    pub levels: Vec<Vec<usize>>,
    pub stabilization: Option<usize>,
}

impl<F: Field> SyzygyCatalog<F> {
    /// Classes occurring at the stabilization depth or later.
    pub fn stable_catalog(&self) -> Vec<usize> {
        let Some(n) = self.stabilization else {
            return Vec::new();
        };
        let mut out: Vec<usize> = self.levels[n..].iter().flatten().copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn to_report(&self) -> ReportValue {
        let dims = |ids: &[usize]| {
            ReportValue::List(
                ids.iter()
                    .map(|&i| {
                        ReportValue::Vector(
                            self.classes[i].dims().iter().map(|&d| d as i64).collect(),
                        )
                    })
                    .collect(),
            )
        };
        ReportValue::record(vec![
            (
                "stabilization",
                match self.stabilization {
                    Some(n) => ReportValue::Int(n as i64),
                    None => ReportValue::Text("not within depth".into()),
                },
            ),
            ("stable_catalog", dims(&self.stable_catalog())),
            (
                "levels",
                ReportValue::List(self.levels.iter().map(|l| dims(l)).collect()),
            ),
            (
                "kind",
                ReportValue::Text("certificate search over seed syzygies".into()),
            ),
        ])
    }
}

/// Iterates `Ω` from the seeds (all simples when `seeds` is empty).
pub fn syzygy_scan<F: Field>(
    alg: &Algebra<F>,
    seeds: &[Representation<F>],
    cfg: &ScanConfig,
) -> Result<SyzygyCatalog<F>> {
    if alg.field().order().is_none() {
        return Err(Error::RationalFieldUnsupported);
    }
    let seeds: Vec<Representation<F>> = if seeds.is_empty() {
        (0..alg.num_vertices())
            .map(|v| rep::simple(alg, v))
            .collect()
    } else {
        seeds.to_vec()
    };
    let mut classes: Vec<Representation<F>> = Vec::new();
    let mut levels: Vec<Vec<usize>> = Vec::new();

    let add_summands = |m: &Representation<F>,
                        level: &mut Vec<usize>,
                        classes: &mut Vec<Representation<F>>|
     -> Result<()> {
        if m.total_dim() > cfg.dim_cap {
            return Err(Error::CapExceeded(format!(
                "syzygy of dimension {} exceeds cap {}",
                m.total_dim(),
                cfg.dim_cap
            )));
        }
        let d = decompose(m, &cfg.decompose)?;
        for c in &d.classes {
            let x = &d.summands[c.representative()].module;
            if is_projective(x) {
                continue;
            }
            let id = match classes
                .iter()
                .position(|y| y.dims() == x.dims() && is_isomorphic_indecomposable(y, x))
            {
                Some(i) => i,
                None => {
                    classes.push(x.clone());
                    classes.len() - 1
                }
            };
            if !level.contains(&id) {
                level.push(id);
            }
        }
        Ok(())
    };

    let mut level0 = Vec::new();
    for s in &seeds {
        add_summands(s, &mut level0, &mut classes)?;
    }
    levels.push(level0);
    for _ in 0..cfg.depth {
        let prev = levels.last().unwrap().clone();
        let mut next = Vec::new();
        for id in prev {
            let omega = syzygy_step(&classes[id].clone()).0;
            add_summands(&omega, &mut next, &mut classes)?;
        }
        next.sort_unstable();
        levels.push(next);
    }
    for l in levels.iter_mut() {
        l.sort_unstable();
    }

    let stabilization = (0..cfg.depth).find(|&n| {
        levels[n]
            .iter()
            .all(|id| levels[n + 1..].iter().any(|l| l.contains(id)))
    });
    Ok(SyzygyCatalog {
        classes,
        levels,
        stabilization,
    })
}
