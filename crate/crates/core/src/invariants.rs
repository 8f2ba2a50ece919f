//! Assembles the invariant report of an algebra.

use crate::bounds::BoundContext;
use crate::bracket::{extdim_bounds, ExtdimCaps};
use crate::field::Field;
use crate::io::{AlgebraIdentity, InvariantReport, ReportValue};
use crate::rep::{Algebra, DecomposeConfig};
use crate::syzygy::{
    self_injectivity_and_gorenstein, syzygy_scan, HomDim, HomologyConfig, ScanConfig,
};
use crate::torsion::{algebra_layer_length, SimpleSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantOptions {
    pub cutoff: usize,
    pub seed: u64,
    /// The set `V` for `pd V`, `ℓℓ^{t_V}` and the bounds.
    pub v: Option<SimpleSet>,
    pub scan: Option<ScanConfig>,
    pub injective_dimensions: bool,
    pub extdim: Option<ExtdimCaps>,
}

impl Default for InvariantOptions {
    fn default() -> Self {
        InvariantOptions {
            cutoff: crate::syzygy::DEFAULT_CUTOFF,
            seed: 0,
            v: None,
            scan: None,
            injective_dimensions: false,
            extdim: None,
        }
    }
}

impl InvariantOptions {
    pub fn homology(&self) -> HomologyConfig {
        HomologyConfig {
            cutoff: self.cutoff,
            decompose: DecomposeConfig {
                seed: self.seed,
                ..Default::default()
            },
            ..Default::default()
        }
    }
}

fn dim_with_certificate(report: &mut InvariantReport, key: &str, d: HomDim, cutoff: usize) {
    report.set(key, d.to_report(cutoff));
    if let Some(c) = d.certificate() {
        report.set(&format!("{key}_certificate"), c.to_string());
    }
}

pub fn compute_invariants<F: Field>(
    alg: &Algebra<F>,
    name: &str,
    opts: &InvariantOptions,
) -> InvariantReport {
    let cfg = opts.homology();
    let mut r = InvariantReport::new(AlgebraIdentity {
        name: name.to_string(),
        dimension: alg.dimension(),
        field: alg.field_spec().to_string(),
    });
    r.set("dimension", alg.dimension() as i64);
    r.set("num_vertices", alg.num_vertices() as i64);
    r.set("loewy_length", alg.loewy_length() as i64);
    let ctx = BoundContext::new(alg, &cfg);
    r.set(
        "simple_pds",
        ReportValue::List(
            ctx.simple_pds
                .iter()
                .map(|d| d.to_report(opts.cutoff))
                .collect(),
        ),
    );
    dim_with_certificate(&mut r, "gldim", ctx.gldim, opts.cutoff);
    r.set("selfinjective", crate::syzygy::is_selfinjective(alg));
    if opts.injective_dimensions {
        let g = self_injectivity_and_gorenstein(alg, &cfg);
        dim_with_certificate(&mut r, "left_id", g.left_id, opts.cutoff);
        dim_with_certificate(&mut r, "right_id", g.right_id, opts.cutoff);
    }
    if let Some(v) = &opts.v {
        let names = alg.quiver().vertices();
        r.set(
            "V",
            ReportValue::List(
                v.iter()
                    .map(|i| ReportValue::Text(names[i].clone()))
                    .collect(),
            ),
        );
        let report = ctx.report(v);
        r.set("pd_V", report.inputs.pd_v.to_report(opts.cutoff));
        r.set("ll_tV", report.inputs.ll as i64);
        r.set(
            "ll_empty",
            algebra_layer_length(alg, &SimpleSet::empty()) as i64,
        );
        r.set(
            "itdim_upper",
            crate::bounds::itdim_upper_from_ll(report.inputs.ll) as i64,
        );
        r.set("bounds", report.to_report(opts.cutoff));
    }
    if let Some(scan) = &opts.scan {
        let mut scan = *scan;
        scan.decompose.seed = opts.seed;
        match syzygy_scan(alg, &[], &scan) {
            Ok(c) => r.set("syzygy_scan", c.to_report()),
            Err(e) => r.set("syzygy_scan", format!("n/a({e})")),
        }
    }
    if let Some(caps) = &opts.extdim {
        let mut caps = *caps;
        caps.bracket.decompose.seed = opts.seed;
        match extdim_bounds(alg, &caps) {
            Ok(b) => r.set(
                "extdim",
                ReportValue::record(vec![
                    ("lower", ReportValue::Int(b.lower as i64)),
                    (
                        "upper",
                        b.upper.map_or(ReportValue::Text("unknown".into()), |u| {
                            ReportValue::Int(u as i64)
                        }),
                    ),
                    (
                        "witness_dims",
                        b.witness.map_or(ReportValue::Text("none".into()), |w| {
                            ReportValue::Vector(w.dims().iter().map(|&d| d as i64).collect())
                        }),
                    ),
                    ("indecomposables", ReportValue::Int(b.universe.len() as i64)),
                    (
                        "scope",
                        ReportValue::Text(format!("within dimension cap {}", b.dim_cap)),
                    ),
                ]),
            ),
            Err(e) => r.set("extdim", format!("n/a({e})")),
        }
    }
    r
}
