//! Building truncations, coradicals and window rings from command-line descriptors.

use std::sync::Arc;

use coalgebra_core::{coradical, Coalgebra, Coradical, Exec};
use fusion::{fusion_ring_from_coalgebra, star_from_antipode, BasedRing};
use hopf_presentations::{parse_descriptor, truncate_coalgebra, Family, PresentedHopf, Truncation, TruncationSpec};
use quiver_reptype::{build_qmn, link_quiver_from_coalgebra, link_quiver_from_fusion, Quiver};

use crate::CliError;

pub const DEFAULT_N: i64 = 3;
pub const DEFAULT_WINDOW: i64 = 2;

/// What a descriptor names: a presented Hopf algebra or the group quiver Q(m, n).
pub enum Source {
    Hopf(PresentedHopf),
    Qmn { m: i64, n: i64, radius: i64 },
}

pub fn parse_source(s: &str) -> Result<Source, CliError> {
    if let Some(rest) = s.strip_prefix("Qmn:").or_else(|| (s == "Qmn").then_some("")) {
        let (mut m, mut n, mut radius) = (None, None, 2);
        for part in rest.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| CliError(format!("expected key=value, got `{part}`")))?;
            let v: i64 = v.trim().parse().map_err(|_| CliError(format!("bad integer for `{k}`: {v}")))?;
            match k.trim() {
                "m" => m = Some(v),
                "n" => n = Some(v),
                "r" => radius = v,
                other => return Err(CliError(format!("unknown parameter `{other}`"))),
            }
        }
        let m = m.ok_or_else(|| CliError("missing parameter `m`".into()))?;
        let n = n.ok_or_else(|| CliError("missing parameter `n`".into()))?;
        return Ok(Source::Qmn { m, n, radius });
    }
    Ok(Source::Hopf(PresentedHopf::new(parse_descriptor(s)?)))
}

/// H^N for H(e±,f±,u,v), the whole algebra for finite families, a group window otherwise.
pub fn default_spec(h: &PresentedHopf, n: Option<i64>, window: i64) -> TruncationSpec {
    match h.family() {
        Family::Hefuv => TruncationSpec::Hefuv(n.unwrap_or(DEFAULT_N)),
        f if f.is_finite() => TruncationSpec::Full,
        _ => TruncationSpec::GroupWindow { lo: -window, hi: window },
    }
}

pub struct Instance {
    pub truncation: Truncation,
    pub coalgebra: Arc<Coalgebra>,
    pub coradical: Coradical,
    pub labels: Vec<String>,
    pub unit: usize,
}

impl Instance {
    pub fn new(h: &PresentedHopf, spec: &TruncationSpec, exec: Exec) -> Result<Instance, CliError> {
        let truncation = truncate_coalgebra(h, spec)?;
        let coalgebra = Arc::new(truncation.coalgebra.clone());
        let coradical = coradical(&coalgebra, exec)?;
        let labels: Vec<String> = coradical.blocks.iter().map(|b| truncation.block_name(&b.space)).collect();
        let one = truncation.vec_of(&h.one()).map_err(|e| CliError(format!("1 is not in the truncation: {}", e.0)))?;
        let unit = coradical.block_of(&one).ok_or_else(|| CliError("1 spans no simple block".into()))?;
        Ok(Instance { truncation, coalgebra, coradical, labels, unit })
    }

    pub fn link_quiver(&self, exec: Exec) -> Result<Quiver, CliError> {
        Ok(link_quiver_from_coalgebra(&self.coalgebra, &self.coradical, &self.labels, exec)?)
    }

    pub fn ring(&self, exec: Exec) -> Result<BasedRing, CliError> {
        let t = &self.truncation;
        let star = star_from_antipode(&self.coradical, &|v| t.antipode_vec(v))?;
        Ok(fusion_ring_from_coalgebra(
            &self.coalgebra,
            &self.coradical,
            t,
            self.labels.clone(),
            self.unit,
            star,
            exec,
        )?)
    }
}

/// The truncation whose coradical carries the fusion ring: a cosemisimple window for
/// H(e±,f±,u,v), the same truncation as the link quiver otherwise.
pub fn ring_spec(h: &PresentedHopf, window: i64, n: Option<i64>) -> TruncationSpec {
    match h.family() {
        Family::Hefuv => TruncationSpec::Cosemisimple(window),
        _ => default_spec(h, n, window),
    }
}

/// The link quiver from the wedge, or the grid quiver for Q(m, n).
pub fn quiver_of(src: &Source, n: Option<i64>, window: i64, exec: Exec) -> Result<(Quiver, Option<Instance>), CliError> {
    match src {
        Source::Qmn { m, n, radius } => Ok((build_qmn(*m, *n, *radius)?, None)),
        Source::Hopf(h) => {
            let inst = Instance::new(h, &default_spec(h, n, window), exec)?;
            Ok((inst.link_quiver(exec)?, Some(inst)))
        }
    }
}

/// Rebuilds the link quiver from fusion coefficients and compares. `None` when the
/// truncation is a group window whose boundary products have no window ring.
pub fn cross_validate(h: &PresentedHopf, q: &Quiver, n: Option<i64>, exec: Exec) -> Result<Option<bool>, CliError> {
    let spec = match h.family() {
        Family::Hefuv => TruncationSpec::Cosemisimple(n.unwrap_or(DEFAULT_N) + 2),
        f if f.is_finite() => TruncationSpec::Full,
        _ => return Ok(None),
    };
    let w = Instance::new(h, &spec, exec)?;
    let r = w.ring(exec)?;
    let unit = q.index("1")?;
    let one_s = q
        .predecessors(unit)
        .into_iter()
        .map(|v| Ok((r.index(q.label(v))?, q.multiplicity(v, unit))))
        .collect::<Result<Vec<_>, CliError>>()?;
    let within = q.vertices().iter().map(|v| r.index(&v.label)).collect::<Result<Vec<_>, _>>()?;
    let f = link_quiver_from_fusion(&r, &one_s, Some(&within))?;
    Ok(Some(f.same_as(q)))
}
