//! Aggregated bounds for one tessellation, with JSON, CSV and text output.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::*;
use crate::catalog::{self, linear_series_of, CatalogKey, Kind};
use crate::grammar::{algebraic_system, system_radius};
use crate::series::roots::rational_from_f64;
use crate::series::smallest_positive_root;
use crate::tessellation::build_ball;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EntryKind {
    AlphaLower,
    AlphaUpper,
    MuLower,
    MuUpper,
}

impl EntryKind {
    fn as_str(self) -> &'static str {
        match self {
            EntryKind::AlphaLower => "alpha_lower",
            EntryKind::AlphaUpper => "alpha_upper",
            EntryKind::MuLower => "mu_lower",
            EntryKind::MuUpper => "mu_upper",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Computed,
    Cited,
}

/// One bound; `lo`/`hi` bracket its numerical value and are both absent when
/// it could not be computed with the given options.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Entry {
    pub name: String,
    pub lo: Option<f64>,
    pub hi: Option<f64>,
    pub kind: EntryKind,
    pub provenance: Provenance,
    #[serde(rename = "ref")]
    pub reference: String,
}

impl Entry {
    fn computed(name: &str, lo: f64, hi: f64, kind: EntryKind, reference: &str) -> Entry {
        Entry {
            name: name.into(),
            lo: Some(lo),
            hi: Some(hi),
            kind,
            provenance: Provenance::Computed,
            reference: reference.into(),
        }
    }

    fn exact(name: &str, v: f64, kind: EntryKind, reference: &str) -> Entry {
        Entry::computed(name, v, v, kind, reference)
    }

    fn cited(name: &str, v: f64, kind: EntryKind, reference: &str) -> Entry {
        Entry { provenance: Provenance::Cited, ..Entry::exact(name, v, kind, reference) }
    }

    fn absent(name: &str, kind: EntryKind, reference: &str) -> Entry {
        Entry { lo: None, hi: None, ..Entry::exact(name, 0.0, kind, reference) }
    }

    pub fn mid(&self) -> Option<f64> {
        Some(0.5 * (self.lo? + self.hi?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Key {
    pub l: u32,
    pub m: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub key: Key,
    pub d: u32,
    pub entries: Vec<Entry>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct BoundsOptions {
    /// Ball radius for return probabilities; walks up to length `2 * depth`.
    pub depth: u32,
    /// Largest `n` of the `p^(2n)` samples.
    pub fekete_max: u32,
    /// Width of the radius brackets.
    pub tol: f64,
    pub holly: bool,
    /// Worker threads for the independent parts; output does not depend on it.
    pub threads: usize,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        BoundsOptions { depth: 6, fekete_max: 6, tol: 1e-12, holly: true, threads: 1 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Format, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(format!("unknown format {s:?} (expected json, csv or text)")),
        }
    }
}

fn mu_bracket(alpha: (f64, f64), d: u32) -> Result<(f64, f64), BoundsError> {
    Ok((grigorchuk_mu(alpha.0, d)?, grigorchuk_mu(alpha.1, d)?))
}

/// Cogrowth bracket from the pole of the pair series.
fn pair_alpha(l: u32, m: u32, tol: f64) -> Result<Option<(f64, f64)>, BoundsError> {
    let f = linear_series_of(Kind::Pairs, l, m)?;
    let Some(r) = smallest_positive_root(f.denominator(), &rational_from_f64(tol)) else {
        return Ok(None);
    };
    Ok(Some((alpha_from_halflength_radius(r.hi_f64())?, alpha_from_halflength_radius(r.lo_f64())?)))
}

/// Cogrowth bracket from the radius of the holly-tree system.
fn holly_alpha(l: u32, m: u32, tol: f64) -> Result<Option<(f64, f64)>, BoundsError> {
    let g = catalog::grammar(CatalogKey::new(l, m, Kind::Holly)?)?;
    let sys = algebraic_system(&g)?;
    let Some(r) = system_radius(&sys, tol)? else {
        return Ok(None);
    };
    Ok(Some((alpha_from_halflength_radius(r.hi)?, alpha_from_halflength_radius(r.lo)?)))
}

fn series_entries(label: &str, alpha: Option<(f64, f64)>, d: u32, reference: &str) -> Result<Vec<Entry>, BoundsError> {
    let Some(a) = alpha else {
        return Ok(vec![
            Entry::absent(&format!("alpha_{label}"), EntryKind::AlphaLower, reference),
            Entry::absent(&format!("mu_{label}"), EntryKind::MuLower, reference),
        ]);
    };
    let mu = mu_bracket(a, d)?;
    Ok(vec![
        Entry::computed(&format!("alpha_{label}"), a.0, a.1, EntryKind::AlphaLower, reference),
        Entry::computed(&format!("mu_{label}"), mu.0, mu.1, EntryKind::MuLower, "grigorchuk formula"),
    ])
}

fn fekete_entries(l: u32, m: u32, opts: &BoundsOptions, notes: &mut Vec<String>) -> Vec<Entry> {
    let name = |n: u32| format!("fekete_{}", 2 * n);
    let reference = "p^(2n)(*,*)^(1/2n)";
    let absent = |from: u32| (from..=opts.fekete_max).map(|n| Entry::absent(&name(n), EntryKind::MuLower, reference));
    let reach = opts.depth.min(opts.fekete_max);
    if reach == 0 {
        return absent(1).collect();
    }
    let ball = match build_ball(l, m, reach) {
        Ok(b) => b,
        Err(e) => {
            notes.push(format!("return probabilities skipped: {e}"));
            return absent(1).collect();
        }
    };
    let mut out = Vec::new();
    for n in 1..=reach {
        match fekete_lower(&ball, n) {
            Ok(s) => out.push(Entry::exact(&name(n), s.root, EntryKind::MuLower, reference)),
            Err(_) => out.push(Entry::absent(&name(n), EntryKind::MuLower, reference)),
        }
    }
    if opts.depth < opts.fekete_max {
        notes.push(format!("return probabilities beyond length {} need depth >= n", 2 * opts.depth));
        out.extend(absent(reach + 1));
    }
    out
}

/// Every bound available for `X(l, m)` under `opts`.
pub fn bounds_report(l: u32, m: u32, opts: &BoundsOptions) -> Result<BoundsReport, BoundsError> {
    crate::tessellation::check_parameters(l, m)?;
    let d = l;
    let hyperbolic = (l - 2) * (m - 2) > 4;
    let mut notes = Vec::new();
    let mut entries = vec![
        Entry::exact("kesten", kesten_lower(d)?, EntryKind::MuLower, "2*sqrt(d-1)/d"),
        Entry::exact("trivial_mu", 1.0, EntryKind::MuUpper, "mu <= 1"),
        Entry::exact("loop_family", kesten_loop_family_alpha(l, m, 0)?.alpha, EntryKind::AlphaLower, "sqrt(l-1)"),
        Entry::exact("trivial_alpha", f64::from(d - 1), EntryKind::AlphaUpper, "alpha <= d-1"),
    ];
    let iota = isoperimetric_constant(l, m)?;
    let (lo, hi) = iso_mu_bounds(iota.value(), d)?;
    notes.push(format!("isoperimetric constant {iota} = {:.12}", iota.value()));
    entries.push(Entry::exact("iso_lower", lo, EntryKind::MuLower, "1-((d-1)/d^2)*iota"));
    entries.push(Entry::exact("iso_upper", hi, EntryKind::MuUpper, "sqrt(1-(iota/d)^2)"));

    let want_holly = hyperbolic && opts.holly && m.is_multiple_of(2);
    let (pairs, holly, fekete) = if opts.threads > 1 {
        std::thread::scope(|s| {
            let p = s.spawn(|| hyperbolic.then(|| pair_alpha(l, m, opts.tol)).transpose());
            let h = s.spawn(|| want_holly.then(|| holly_alpha(l, m, opts.tol)).transpose());
            let mut fnotes = Vec::new();
            let f = fekete_entries(l, m, opts, &mut fnotes);
            (p.join().expect("pair radius"), h.join().expect("holly radius"), (f, fnotes))
        })
    } else {
        let p = hyperbolic.then(|| pair_alpha(l, m, opts.tol)).transpose();
        let h = want_holly.then(|| holly_alpha(l, m, opts.tol)).transpose();
        let mut fnotes = Vec::new();
        let f = fekete_entries(l, m, opts, &mut fnotes);
        (p, h, (f, fnotes))
    };
    if let Some(a) = pairs? {
        entries.extend(series_entries("pairs", a, d, "pole of the pair series")?);
    }
    if let Some(a) = holly? {
        entries.extend(series_entries("holly", a, d, "radius of the holly-tree system")?);
    }
    entries.extend(fekete.0);
    notes.extend(fekete.1);
    if hyperbolic {
        notes.push("mu from cogrowth uses the increasing branch for alpha > sqrt(d-1)".into());
    }
    if (l, m) == (8, 8) {
        entries.push(Entry::cited("cited_upper_growth", 0.7374, EntryKind::MuUpper, "upper bound via growth series"));
        entries.push(Entry::cited("cited_upper_best", 0.6629, EntryKind::MuUpper, "best known upper bound"));
        entries.push(Entry::cited("cited_lower_norm", 0.6616, EntryKind::MuLower, "operator-norm lower bound"));
    }
    Ok(BoundsReport { key: Key { l, m }, d, entries, notes })
}

impl BoundsReport {
    pub fn entry(&self, name: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Largest lower bound and smallest upper bound of one quantity.
    pub fn envelope(&self, alpha: bool) -> (f64, f64) {
        let (lk, uk) = if alpha {
            (EntryKind::AlphaLower, EntryKind::AlphaUpper)
        } else {
            (EntryKind::MuLower, EntryKind::MuUpper)
        };
        let best_lower = self.entries.iter().filter(|e| e.kind == lk).filter_map(|e| e.hi).fold(f64::MIN, f64::max);
        let best_upper = self.entries.iter().filter(|e| e.kind == uk).filter_map(|e| e.lo).fold(f64::MAX, f64::min);
        (best_lower, best_upper)
    }

    /// Every lower bound is at most every upper bound, for both quantities.
    pub fn consistent(&self) -> bool {
        [true, false].iter().all(|&a| {
            let (lo, hi) = self.envelope(a);
            lo <= hi
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for e in &self.entries {
                    w.serialize(e).expect("entry serializes");
                }
                String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
            }
            Format::Text => {
                let mut s = format!("X({}, {}), d = {}\n", self.key.l, self.key.m, self.d);
                for e in &self.entries {
                    let tag = if e.provenance == Provenance::Cited { " (cited)" } else { "" };
                    let _ = match (e.lo, e.hi, e.mid()) {
                        (Some(lo), Some(hi), Some(v)) => {
                            writeln!(s, "{:<20} {:<12} {v:.6} ∈ [{lo:.6}, {hi:.6}]{tag}", e.name, e.kind.as_str())
                        }
                        _ => writeln!(s, "{:<20} {:<12} absent", e.name, e.kind.as_str()),
                    };
                }
                for n in &self.notes {
                    let _ = writeln!(s, "note: {n}");
                }
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> BoundsOptions {
        BoundsOptions { depth: 3, fekete_max: 3, ..BoundsOptions::default() }
    }

    #[test]
    fn report_8_8() {
        let r = bounds_report(8, 8, &quick()).unwrap();
        assert!(r.consistent());
        let mu = r.entry("mu_pairs").unwrap();
        assert!((mu.mid().unwrap() - 0.66144).abs() < 5e-4);
        let mu = r.entry("mu_holly").unwrap();
        assert!((mu.mid().unwrap() - 0.6623).abs() < 1e-3);
        assert!(r.entry("cited_upper_best").is_some());
    }

    #[test]
    fn euclidean_report() {
        let r = bounds_report(4, 4, &quick()).unwrap();
        assert_eq!(r.entry("iso_lower").unwrap().lo, Some(1.0));
        assert_eq!(r.entry("iso_upper").unwrap().hi, Some(1.0));
        assert!(r.entry("alpha_pairs").is_none());
        assert!(r.entry("alpha_holly").is_none());
        assert!(r.consistent());
    }

    #[test]
    fn shallow_depth_marks_fekete_absent() {
        let opts = BoundsOptions { depth: 1, fekete_max: 3, holly: false, ..BoundsOptions::default() };
        let r = bounds_report(8, 8, &opts).unwrap();
        assert!(r.entry("fekete_2").unwrap().lo.is_some());
        assert!(r.entry("fekete_6").unwrap().lo.is_none());
        assert!(r.render(Format::Text).contains("absent"));
    }

    #[test]
    fn threads_do_not_change_output() {
        let a = bounds_report(6, 6, &quick()).unwrap();
        let b = bounds_report(6, 6, &BoundsOptions { threads: 3, ..quick() }).unwrap();
        assert_eq!(a.render(Format::Json), b.render(Format::Json));
    }

    #[test]
    fn formats() {
        let r = bounds_report(5, 6, &quick()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&r.render(Format::Json)).unwrap();
        assert_eq!(v["key"]["m"], 6);
        assert_eq!(v["entries"].as_array().unwrap().len(), r.entries.len());
        assert!(v["entries"][0]["ref"].is_string());
        let csv = r.render(Format::Csv);
        assert!(csv.starts_with("name,lo,hi,kind,provenance,ref\n"));
        assert_eq!(csv.lines().count(), r.entries.len() + 1);
        assert!(r.render(Format::Text).contains(" ∈ ["));
    }
}
