//! Partially completed star-graphs: a centre `0` joined to every ring vertex
//! `1..=n`, plus a proper subset of the ring edges `{i, i+1}`.
//!
//! The ring edges decompose into bands of `k_i >= 2` adjacent triangles,
//! isolated triangles, and tadpoles (ring vertices touching no ring edge).
//! Everything here is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::bias::triangle_bias_total;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::rational::{frac, int, Rational};

/// Symbolic description `G(t, k~, {k_i})` of a partially completed star-graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PcsSpec {
    tadpoles: usize,
    isolated: usize,
    /// Band widths, each `>= 2`, sorted ascending.
    bands: Vec<usize>,
}

impl PcsSpec {
    /// Validates and normalises a spec. Width-1 bands become isolated triangles.
    pub fn new(tadpoles: usize, isolated: usize, bands: Vec<usize>) -> Result<PcsSpec> {
        let mut isolated = isolated;
        let mut kept = Vec::with_capacity(bands.len());
        for w in bands {
            match w {
                0 => return Err(Error::Input("band width must be at least 1".into())),
                1 => {
                    log::warn!("band of width 1 is an isolated triangle; normalising");
                    isolated += 1;
                }
                _ => kept.push(w),
            }
        }
        kept.sort_unstable();
        let spec = PcsSpec {
            tadpoles,
            isolated,
            bands: kept,
        };
        if spec.triangles() == 0 {
            return Err(Error::Input(
                "a partially completed star-graph needs at least one triangle".into(),
            ));
        }
        Ok(spec)
    }

    pub fn tadpoles(&self) -> usize {
        self.tadpoles
    }

    pub fn isolated(&self) -> usize {
        self.isolated
    }

    pub fn bands(&self) -> &[usize] {
        &self.bands
    }

    /// Total number of triangles `k`.
    pub fn triangles(&self) -> usize {
        self.isolated + self.bands.iter().sum::<usize>()
    }

    /// Number of ring (non-centre) vertices `n`.
    pub fn ring_size(&self) -> usize {
        2 * self.isolated + self.bands.iter().map(|w| w + 1).sum::<usize>() + self.tadpoles
    }

    /// Vertex count including the centre.
    pub fn total_vertices(&self) -> usize {
        self.ring_size() + 1
    }

    /// The conventional label, e.g. `G(1,1,{5})`.
    pub fn label(&self) -> String {
        let bands = if self.bands.is_empty() {
            "\u{2205}".to_string()
        } else {
            let widths: Vec<String> = self.bands.iter().map(ToString::to_string).collect();
            format!("{{{}}}", widths.join(","))
        };
        format!("G({},{},{bands})", self.tadpoles, self.isolated)
    }
}

impl fmt::Display for PcsSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pcs:t={},iso={}", self.tadpoles, self.isolated)?;
        if !self.bands.is_empty() {
            let bands: Vec<String> = self.bands.iter().map(ToString::to_string).collect();
            write!(f, ",bands={}", bands.join("+"))?;
        }
        Ok(())
    }
}

impl FromStr for PcsSpec {
    type Err = Error;

    /// Parses `pcs:t=<int>,iso=<int>[,bands=<k1>+<k2>+...]`.
    fn from_str(s: &str) -> Result<PcsSpec> {
        let bad = |why: &str| Error::Input(format!("invalid pcs spec {s:?}: {why}"));
        let body = s.trim().strip_prefix("pcs:").ok_or_else(|| bad("missing `pcs:` prefix"))?;
        let (mut t, mut iso, mut bands) = (None, None, Vec::new());
        for part in body.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let num = |v: &str| v.trim().parse::<usize>().map_err(|_| bad("expected an integer"));
            match key.trim() {
                "t" => t = Some(num(value)?),
                "iso" => iso = Some(num(value)?),
                "bands" => {
                    bands = value.split('+').map(num).collect::<Result<Vec<_>>>()?;
                }
                other => return Err(bad(&format!("unknown key {other:?}"))),
            }
        }
        PcsSpec::new(
            t.ok_or_else(|| bad("missing t"))?,
            iso.ok_or_else(|| bad("missing iso"))?,
            bands,
        )
    }
}

/// One of the ring structures of a PCS.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    Band(usize),
    Isolated,
    Tadpole,
}

/// Ring positions of every structure in a concrete realisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcsLayout {
    pub ring_size: usize,
    /// Vertex ids of each band, in the spec's (ascending) band order.
    pub bands: Vec<Vec<usize>>,
    pub isolated: Vec<[usize; 2]>,
    pub tadpoles: Vec<usize>,
}

impl PcsLayout {
    /// Canonical placement: bands, then isolated triangles, then tadpoles.
    pub fn canonical(spec: &PcsSpec) -> PcsLayout {
        let mut order: Vec<Structure> = spec.bands.iter().map(|&w| Structure::Band(w)).collect();
        order.extend(std::iter::repeat_n(Structure::Isolated, spec.isolated));
        order.extend(std::iter::repeat_n(Structure::Tadpole, spec.tadpoles));
        PcsLayout::from_order(&order)
    }

    /// Places structures consecutively around the ring in the given order,
    /// leaving the ring edge between consecutive structures absent.
    pub fn from_order(order: &[Structure]) -> PcsLayout {
        let mut next = 1;
        let mut layout = PcsLayout {
            ring_size: 0,
            bands: Vec::new(),
            isolated: Vec::new(),
            tadpoles: Vec::new(),
        };
        for s in order {
            match *s {
                Structure::Band(w) => {
                    layout.bands.push((next..next + w + 1).collect());
                    next += w + 1;
                }
                Structure::Isolated => {
                    layout.isolated.push([next, next + 1]);
                    next += 2;
                }
                Structure::Tadpole => {
                    layout.tadpoles.push(next);
                    next += 1;
                }
            }
        }
        layout.ring_size = next - 1;
        layout
    }

    pub fn ring_edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .bands
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect();
        edges.extend(self.isolated.iter().map(|&[a, b]| (a, b)));
        edges
    }

    pub fn to_graph(&self) -> Multigraph {
        let spokes = (1..=self.ring_size).map(|i| (0, i));
        Multigraph::from_edges(self.ring_size + 1, spokes.chain(self.ring_edges()))
            .expect("layout ids are in range")
    }
}

/// Realises a spec with the canonical layout; vertex 0 is the centre.
pub fn build_pcs(spec: &PcsSpec) -> Multigraph {
    PcsLayout::canonical(spec).to_graph()
}

/// Closed-form bias of a PCS: the summed bias over all vertices and its average.
#[derive(Debug, Clone, PartialEq)]
pub struct PcsBias {
    pub total: Rational,
    pub average: Rational,
}

/// Bias of the centre, `2k/n - k`.
pub fn centre_term(k: usize, n: usize) -> Rational {
    frac(2 * k as i64, n as i64) - int(k as i64)
}

/// Summed bias over the ring vertices of one band of width `w`.
pub fn band_term(k: usize, w: usize) -> Rational {
    frac((k * (w + 2)) as i64, 3) - frac(2 * w as i64, 3)
}

/// Summed bias over the two ring vertices of one isolated triangle.
pub fn isolated_term(k: usize) -> Rational {
    int(k as i64 - 1)
}

/// Bias of a tadpole tip.
pub fn tadpole_term(k: usize) -> Rational {
    int(k as i64)
}

pub fn pcs_closed_form(spec: &PcsSpec) -> PcsBias {
    let k = spec.triangles();
    let n = spec.ring_size();
    let mut total = centre_term(k, n);
    for &w in &spec.bands {
        total += band_term(k, w);
    }
    total += isolated_term(k) * BigInt::from(spec.isolated);
    total += tadpole_term(k) * BigInt::from(spec.tadpoles);
    let average = &total / BigInt::from(n + 1);
    PcsBias { total, average }
}

/// Glues two PCS realisations at non-centre vertices (centre is vertex 0 in both).
///
/// The result keeps the ids of `g1`; the vertices of `g2` other than `v2` follow.
pub fn glue_pcs(g1: &Multigraph, v1: usize, g2: &Multigraph, v2: usize) -> Result<Multigraph> {
    if v1 == 0 || v2 == 0 {
        return Err(Error::Hypothesis(
            "gluing at the centre vertex is not allowed; pick a ring vertex".into(),
        ));
    }
    g1.glue(v1, g2, v2)
}

/// Vertex selector for gluing, resolved against the canonical layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GluePoint {
    /// Ring vertex id.
    Vertex(usize),
    /// First vertex of band `b`.
    End(usize),
    /// Vertex at position `w / 2` of band `b` (width `w`).
    Mid(usize),
    /// Vertex at `position` of band `b`.
    BandPosition(usize, usize),
    Tadpole(usize),
    /// First vertex of isolated triangle `i`.
    Isolated(usize),
}

impl FromStr for GluePoint {
    type Err = Error;

    /// `end|mid|tadpole|iso` with optional `:<index>`, `band:<b>:<pos>`, or a ring vertex id.
    fn from_str(s: &str) -> Result<GluePoint> {
        let bad = || Error::Input(format!("invalid gluing selector {s:?}"));
        let s = s.trim();
        if let Ok(v) = s.parse::<usize>() {
            return Ok(GluePoint::Vertex(v));
        }
        let mut parts = s.split(':');
        let head = parts.next().ok_or_else(bad)?;
        let idx: Vec<usize> = parts
            .map(|p| p.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let one = |idx: &[usize]| match idx {
            [] => Ok(0),
            [i] => Ok(*i),
            _ => Err(bad()),
        };
        match head {
            "end" => Ok(GluePoint::End(one(&idx)?)),
            "mid" => Ok(GluePoint::Mid(one(&idx)?)),
            "tadpole" => Ok(GluePoint::Tadpole(one(&idx)?)),
            "iso" => Ok(GluePoint::Isolated(one(&idx)?)),
            "band" => match idx[..] {
                [b, p] => Ok(GluePoint::BandPosition(b, p)),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }
}

impl GluePoint {
    pub fn resolve(&self, spec: &PcsSpec) -> Result<usize> {
        let layout = PcsLayout::canonical(spec);
        let missing = || Error::Input(format!("selector {self:?} does not exist in {}", spec.label()));
        let v = match *self {
            GluePoint::Vertex(0) => {
                return Err(Error::Hypothesis(
                    "gluing at the centre vertex is not allowed; pick a ring vertex".into(),
                ))
            }
            GluePoint::Vertex(v) if v <= layout.ring_size => v,
            GluePoint::Vertex(_) => return Err(missing()),
            GluePoint::End(b) => *layout.bands.get(b).ok_or_else(missing)?.first().unwrap(),
            GluePoint::Mid(b) => {
                let band = layout.bands.get(b).ok_or_else(missing)?;
                band[(band.len() - 1) / 2]
            }
            GluePoint::BandPosition(b, p) => {
                *layout.bands.get(b).and_then(|band| band.get(p)).ok_or_else(missing)?
            }
            GluePoint::Tadpole(i) => *layout.tadpoles.get(i).ok_or_else(missing)?,
            GluePoint::Isolated(i) => layout.isolated.get(i).ok_or_else(missing)?[0],
        };
        Ok(v)
    }
}

/// Terms of the decomposition `NB = OB1 + OB2 + I + II + III` of the glued total bias.
#[derive(Debug, Clone, PartialEq)]
pub struct NbDecomposition {
    pub ob1: Rational,
    pub ob2: Rational,
    pub i: Rational,
    pub ii: Rational,
    pub iii: Rational,
    pub nb: Rational,
    /// Ring neighbours of the gluing vertex in each graph.
    pub c1: usize,
    pub c2: usize,
    /// Triangle counts of those ring neighbours (0 where undefined).
    pub a1: usize,
    pub a2: usize,
    pub b1: usize,
    pub b2: usize,
    pub k1: usize,
    pub k2: usize,
    pub n1: usize,
    pub n2: usize,
}

impl NbDecomposition {
    /// Case-wise lower bound on `NB` in terms of `OB1 + OB2`.
    pub fn lower_bound(&self) -> Rational {
        let k = int(self.k1.max(self.k2) as i64);
        let base = &self.ob1 + &self.ob2;
        let r1 = frac(self.c1 as i64, self.n2 as i64);
        let r2 = frac(self.c2 as i64, self.n1 as i64);
        match (self.c1 > 0, self.c2 > 0) {
            (false, false) => base - k,
            (true, true) => base + r1 + r2 - k / BigInt::from(2) - frac(1, 3),
            _ => base + r1.max(r2) - k * frac(5, 6) - frac(1, 3),
        }
    }

    /// Lower bound on `II` for this case.
    pub fn ii_bound(&self) -> Rational {
        let k = int(self.k1.max(self.k2) as i64);
        match (self.c1 > 0, self.c2 > 0) {
            (false, false) => -k,
            (true, true) => -k / BigInt::from(2),
            _ => -k * frac(5, 6),
        }
    }

    /// Lower bound on `III` for this case.
    pub fn iii_bound(&self) -> Rational {
        if self.c1 == 0 && self.c2 == 0 {
            int(0)
        } else {
            frac(-1, 3)
        }
    }
}

struct GlueSide {
    c: usize,
    a: [usize; 2],
}

fn glue_side(g: &Multigraph, v: usize) -> GlueSide {
    let ring: Vec<usize> = g
        .neighbors(v)
        .iter()
        .map(|&(u, _)| u)
        .filter(|&u| u != 0)
        .collect();
    let mut a = [0, 0];
    for (slot, &u) in a.iter_mut().zip(&ring) {
        // a ring vertex lies in one triangle per ring neighbour
        *slot = g.neighbors(u).iter().filter(|&&(w, _)| w != 0).count();
    }
    GlueSide { c: ring.len(), a }
}

/// A spec together with its canonical realisation and closed-form bias,
/// so repeated gluings do not rebuild them.
#[derive(Debug, Clone)]
pub struct PcsInstance {
    pub spec: PcsSpec,
    pub graph: Multigraph,
    pub bias: PcsBias,
}

impl PcsInstance {
    pub fn new(spec: PcsSpec) -> PcsInstance {
        PcsInstance {
            graph: build_pcs(&spec),
            bias: pcs_closed_form(&spec),
            spec,
        }
    }

    fn check_ring_vertex(&self, v: usize) -> Result<()> {
        if v == 0 {
            return Err(Error::Hypothesis(
                "gluing at the centre vertex is not allowed; pick a ring vertex".into(),
            ));
        }
        if v > self.spec.ring_size() {
            return Err(Error::Input(format!(
                "vertex {v} is not a ring vertex of {}",
                self.spec.label()
            )));
        }
        Ok(())
    }
}

/// Decomposes the total bias of `G1` glued to `G2` at ring vertices `v1`, `v2`
/// (ids in the canonical layouts).
pub fn nb_decomposition(
    spec1: &PcsSpec,
    v1: usize,
    spec2: &PcsSpec,
    v2: usize,
) -> Result<NbDecomposition> {
    nb_decompose(&PcsInstance::new(spec1.clone()), v1, &PcsInstance::new(spec2.clone()), v2)
}

pub fn nb_decompose(
    first: &PcsInstance,
    v1: usize,
    second: &PcsInstance,
    v2: usize,
) -> Result<NbDecomposition> {
    first.check_ring_vertex(v1)?;
    second.check_ring_vertex(v2)?;
    let s1 = glue_side(&first.graph, v1);
    let s2 = glue_side(&second.graph, v2);
    let (k1, k2) = (first.spec.triangles(), second.spec.triangles());
    let (n1, n2) = (first.spec.ring_size(), second.spec.ring_size());
    let (c1, c2) = (s1.c, s2.c);

    let i = frac(c2 as i64, n1 as i64) + frac(c1 as i64, n2 as i64);
    let s = (c1 + c2 + 2) as i64;
    // weight of a unit of triangles seen from each side of the glued vertex
    let w1 = frac((c2 + 1) as i64, (c1 as i64 + 1) * s);
    let w2 = frac((c1 + 1) as i64, (c2 as i64 + 1) * s);
    let ii = -(&w1 * BigInt::from(k1) + &w2 * BigInt::from(k2));

    let mut iii = Rational::zero();
    for (idx, &a) in s1.a.iter().enumerate() {
        if c1 > idx {
            iii += frac(c2 as i64, a as i64 + 1) - &w1 * BigInt::from(a);
        }
    }
    for (idx, &b) in s2.a.iter().enumerate() {
        if c2 > idx {
            iii += frac(c1 as i64, b as i64 + 1) - &w2 * BigInt::from(b);
        }
    }

    let ob1 = first.bias.total.clone();
    let ob2 = second.bias.total.clone();
    let nb = &ob1 + &ob2 + &i + &ii + &iii;
    Ok(NbDecomposition {
        ob1,
        ob2,
        i,
        ii,
        iii,
        nb,
        c1,
        c2,
        a1: s1.a[0],
        a2: s1.a[1],
        b1: s2.a[0],
        b2: s2.a[1],
        k1,
        k2,
        n1,
        n2,
    })
}

/// Every valid spec with at most `max_total_vertices` vertices (centre included),
/// each exactly once, ordered by ring size.
pub fn enumerate_pcs(max_total_vertices: usize) -> impl Iterator<Item = PcsSpec> {
    let mut out = Vec::new();
    for n in 2..max_total_vertices {
        for band_budget in 0..=n {
            for parts in partitions_min_part(band_budget, 3) {
                let rest = n - band_budget;
                for isolated in 0..=rest / 2 {
                    let tadpoles = rest - 2 * isolated;
                    let bands: Vec<usize> = parts.iter().map(|p| p - 1).collect();
                    if isolated + bands.iter().sum::<usize>() == 0 {
                        continue;
                    }
                    out.push(PcsSpec {
                        tadpoles,
                        isolated,
                        bands,
                    });
                }
            }
        }
    }
    out.into_iter()
}

/// Partitions of `total` into parts `>= min`, each listed ascending.
fn partitions_min_part(total: usize, min: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for p in lo..=rem {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, min.max(1), &mut Vec::new(), &mut out);
    out
}

/// Specs whose summed bias is strictly below `3/2`.
pub fn small_bias_catalogue(max_total_vertices: usize) -> Vec<(PcsSpec, Rational)> {
    let bound = frac(3, 2);
    enumerate_pcs(max_total_vertices)
        .map(|s| {
            let total = pcs_closed_form(&s).total;
            (s, total)
        })
        .filter(|(_, total)| *total < bound)
        .collect()
}

/// Direct (graph-based) summed triangle bias of a spec's canonical realisation.
pub fn pcs_direct_total(spec: &PcsSpec) -> Rational {
    triangle_bias_total(&build_pcs(spec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bias::{triangle_bias, triangle_counts};
    use crate::graph::complete;

    fn spec(t: usize, iso: usize, bands: &[usize]) -> PcsSpec {
        PcsSpec::new(t, iso, bands.to_vec()).unwrap()
    }

    #[test]
    fn smallest_pcs_is_a_triangle() {
        let g = build_pcs(&spec(0, 1, &[]));
        assert_eq!(g, complete(3));
    }

    #[test]
    fn two_bands_two_isolated_two_tadpoles() {
        let s = spec(2, 2, &[2, 4]);
        assert_eq!(s.total_vertices(), 15);
        let g = build_pcs(&s);
        assert_eq!(g.n(), 15);
        assert_eq!(g.edge_count(), 14 + 2 + 4 + 2);
        let t = triangle_counts(&g);
        assert_eq!(t[0], 8);
        assert_eq!(t.iter().sum::<u64>(), 3 * 8);
        // closed form and direct agree
        assert_eq!(pcs_closed_form(&s).average, frac(962, 315));
        assert_eq!(triangle_bias(&g).average, frac(962, 315));
        assert_eq!(pcs_closed_form(&spec(2, 2, &[2, 5])).average, frac(409, 120));
    }

    #[test]
    fn band_of_five_with_isolated_and_tadpole() {
        let s = spec(1, 1, &[5]);
        assert_eq!(s.total_vertices(), 10);
        let cf = pcs_closed_form(&s);
        assert_eq!(cf.total, int(17));
        assert_eq!(cf.average, frac(17, 10));
        assert_eq!(triangle_bias(&build_pcs(&s)).average, frac(17, 10));
    }

    #[test]
    fn three_isolated_and_band_of_two() {
        assert_eq!(pcs_closed_form(&spec(0, 3, &[2])).average, frac(121, 90));
    }

    #[test]
    fn small_totals() {
        assert_eq!(pcs_closed_form(&spec(0, 1, &[])).total, int(0));
        assert_eq!(pcs_closed_form(&spec(1, 1, &[])).total, frac(2, 3));
        assert_eq!(pcs_closed_form(&spec(0, 0, &[2])).total, frac(2, 3));
        assert_eq!(pcs_closed_form(&spec(0, 2, &[])).total, int(1));
        assert_eq!(pcs_closed_form(&spec(2, 1, &[])).total, frac(3, 2));
    }

    #[test]
    fn spec_validation() {
        assert!(PcsSpec::new(3, 0, vec![]).is_err());
        assert!(PcsSpec::new(0, 0, vec![0]).is_err());
        assert_eq!(PcsSpec::new(0, 0, vec![1, 3]).unwrap(), spec(0, 1, &[3]));
        assert_eq!(PcsSpec::new(0, 0, vec![4, 2]).unwrap().bands(), &[2, 4]);
    }

    #[test]
    fn spec_text_round_trip() {
        let s: PcsSpec = "pcs:t=1,iso=1,bands=5".parse().unwrap();
        assert_eq!(s, spec(1, 1, &[5]));
        assert_eq!(s.to_string(), "pcs:t=1,iso=1,bands=5");
        let s: PcsSpec = "pcs:t=0,iso=2".parse().unwrap();
        assert_eq!(s.to_string(), "pcs:t=0,iso=2");
        assert_eq!(s.label(), "G(0,2,\u{2205})");
        assert_eq!(spec(2, 2, &[4, 2]).to_string(), "pcs:t=2,iso=2,bands=2+4");
        for bad in ["t=1,iso=1", "pcs:t=1", "pcs:t=x,iso=1", "pcs:t=1,iso=0", "pcs:t=1,iso=1,foo=2"] {
            assert!(bad.parse::<PcsSpec>().is_err(), "{bad}");
        }
    }

    #[test]
    fn selectors_resolve() {
        let s = spec(1, 1, &[5]);
        assert_eq!(GluePoint::Mid(0).resolve(&s).unwrap(), 3);
        assert_eq!(GluePoint::End(0).resolve(&s).unwrap(), 1);
        assert_eq!("iso".parse::<GluePoint>().unwrap().resolve(&s).unwrap(), 7);
        assert_eq!("tadpole:0".parse::<GluePoint>().unwrap().resolve(&s).unwrap(), 9);
        assert_eq!("band:0:5".parse::<GluePoint>().unwrap().resolve(&s).unwrap(), 6);
        assert!("tadpole:1".parse::<GluePoint>().unwrap().resolve(&s).is_err());
        assert!(matches!(
            GluePoint::Vertex(0).resolve(&s),
            Err(Error::Hypothesis(_))
        ));
        assert!("middle".parse::<GluePoint>().is_err());
        assert!("band:1".parse::<GluePoint>().is_err());
    }

    #[test]
    fn gluing_band_middle_to_band_end() {
        let s1 = spec(1, 1, &[5]);
        let s2 = spec(0, 3, &[2]);
        // middle vertex of the width-5 band, first vertex of the width-2 band
        let v1 = GluePoint::BandPosition(0, 2).resolve(&s1).unwrap();
        let v2 = GluePoint::End(0).resolve(&s2).unwrap();
        let g = glue_pcs(&build_pcs(&s1), v1, &build_pcs(&s2), v2).unwrap();
        assert_eq!(g.n(), 19);
        let r = triangle_bias(&g);
        assert_eq!(r.average, frac(2581, 1710));
        let nb = nb_decomposition(&s1, v1, &s2, v2).unwrap();
        assert_eq!(nb.nb, r.total());
        assert_eq!(nb.nb, frac(2581, 90));
    }

    #[test]
    fn centre_gluing_rejected() {
        let g = build_pcs(&spec(0, 1, &[]));
        assert!(matches!(glue_pcs(&g, 0, &g, 1), Err(Error::Hypothesis(_))));
        let s = spec(0, 1, &[]);
        assert!(nb_decomposition(&s, 1, &s, 0).is_err());
        assert!(nb_decomposition(&s, 3, &s, 1).is_err());
    }

    #[test]
    fn tadpole_tip_gluing_has_no_extra_terms() {
        let s = spec(1, 1, &[]);
        let v = PcsLayout::canonical(&s).tadpoles[0];
        let nb = nb_decomposition(&s, v, &s, v).unwrap();
        assert_eq!((nb.c1, nb.c2), (0, 0));
        assert_eq!(nb.i, int(0));
        assert_eq!(nb.iii, int(0));
        let g = build_pcs(&s);
        assert_eq!(nb.nb, triangle_bias_total(&glue_pcs(&g, v, &g, v).unwrap()));
    }

    #[test]
    fn two_triangles_glued_non_negative() {
        let g = complete(3);
        let glued = glue_pcs(&g, 1, &g, 2).unwrap();
        assert!(triangle_bias(&glued).average >= int(0));
    }

    #[test]
    fn enumeration_small_cases() {
        let at = |m| enumerate_pcs(m).collect::<Vec<_>>();
        assert_eq!(at(3), vec![spec(0, 1, &[])]);
        let four = at(4);
        assert_eq!(four.len(), 3);
        assert!(four.contains(&spec(1, 1, &[])));
        assert!(four.contains(&spec(0, 0, &[2])));
        let five = at(5);
        for s in [spec(2, 1, &[]), spec(0, 2, &[]), spec(1, 0, &[2]), spec(0, 0, &[3])] {
            assert!(five.contains(&s));
        }
        assert_eq!(five.len(), 7);
    }

    #[test]
    fn catalogue_tiny() {
        assert_eq!(small_bias_catalogue(3), vec![(spec(0, 1, &[]), int(0))]);
    }

    #[test]
    fn structure_order_does_not_change_bias() {
        use Structure::*;
        let s = spec(2, 2, &[2, 4]);
        let canonical = triangle_bias(&build_pcs(&s)).average;
        let shuffled = PcsLayout::from_order(&[Tadpole, Band(4), Isolated, Tadpole, Band(2), Isolated]);
        assert_eq!(triangle_bias(&shuffled.to_graph()).average, canonical);
    }
}
