//! Text and JSON report rendering. The JSON output is schema-stable and
//! byte-deterministic under a fixed seed: all polynomial payloads use the
//! canonical text grammar and field order is fixed by the serde structs.

use serde::Serialize;

use triadec::chains::{rank_set, specializes_well, AscendingChain};
use triadec::decompose::Decomposition;
use triadec::error::Result;
use triadec::factor::FactorSet;
use triadec::oracle;
use triadec::sysfile::SystemFile;
use triadec::wrsd::WrsdResult;
use triadec::wu::WuDecomposition;

#[derive(Serialize)]
pub struct PointCheck {
    pub point: Vec<String>,
    pub system_matches_chains: bool,
    pub specializes_well: bool,
    pub rank_preserved: bool,
}

#[derive(Serialize)]
pub struct StableSampleChecks {
    pub samples: usize,
    pub seed: u64,
    pub height: i64,
    pub results: Vec<PointCheck>,
    pub all_pass: bool,
}

#[derive(Serialize)]
struct DecompositionReport {
    chains: Vec<Vec<String>>,
    rdu_factors: Vec<String>,
    stable_sample_checks: StableSampleChecks,
}

pub fn stable_sample_checks(
    sf: &SystemFile,
    d: &Decomposition,
    samples: usize,
    seed: u64,
    height: i64,
) -> Result<StableSampleChecks> {
    let points = oracle::sample_stable_points(&d.rdu_factors, &sf.ctx, samples, seed, height)?;
    let target = sf.ctx.parameter_free();
    let mut results = Vec::new();
    let mut all_pass = true;
    for a in &points {
        let spec: Vec<_> = sf
            .polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.specialize_into(a, &target))
            .collect();
        let direct = oracle::solve_system(&spec)?;
        let via = oracle::union_of_chain_solutions(&d.chains, a)?;
        let matches = oracle::sets_equal_tol(&direct, &via, oracle::MEMBERSHIP_TOL);
        let well = d.chains.iter().all(|t| specializes_well(t, a));
        let ranks = d
            .chains
            .iter()
            .all(|t| rank_set(&t.specialize(a)) == rank_set(t.polys()));
        all_pass &= matches && well && ranks;
        results.push(PointCheck {
            point: a.coords().iter().map(|c| c.to_string()).collect(),
            system_matches_chains: matches,
            specializes_well: well,
            rank_preserved: ranks,
        });
    }
    Ok(StableSampleChecks {
        samples,
        seed,
        height,
        results,
        all_pass,
    })
}

fn chains_as_strings(d: &Decomposition) -> Vec<Vec<String>> {
    d.chains
        .iter()
        .map(|t| t.polys().iter().map(|p| p.to_string()).collect())
        .collect()
}

fn factors_as_strings(f: &FactorSet) -> Vec<String> {
    f.iter().map(|p| p.to_string()).collect()
}

pub fn decomposition_text(d: &Decomposition, checks: &StableSampleChecks) -> String {
    let mut out = String::new();
    out.push_str(&format!("chains ({}):\n", d.chains.len()));
    for t in &d.chains {
        out.push_str(&format!("  {t}\n"));
    }
    out.push_str(&format!("rdu factors: {}\n", d.rdu_factors));
    out.push_str(&format!(
        "stable sample checks: {}/{} points pass (seed {})\n",
        checks.results.iter().filter(|r| {
            r.system_matches_chains && r.specializes_well && r.rank_preserved
        }).count(),
        checks.samples,
        checks.seed,
    ));
    out
}

pub fn decomposition_json(d: &Decomposition, checks: &StableSampleChecks) -> String {
    let report = DecompositionReport {
        chains: chains_as_strings(d),
        rdu_factors: factors_as_strings(&d.rdu_factors),
        stable_sample_checks: StableSampleChecks {
            samples: checks.samples,
            seed: checks.seed,
            height: checks.height,
            results: checks
                .results
                .iter()
                .map(|r| PointCheck {
                    point: r.point.clone(),
                    system_matches_chains: r.system_matches_chains,
                    specializes_well: r.specializes_well,
                    rank_preserved: r.rank_preserved,
                })
                .collect(),
            all_pass: checks.all_pass,
        },
    };
    serde_json::to_string_pretty(&report).expect("serialization cannot fail")
}

#[derive(Serialize)]
struct WuReport {
    chains: Vec<Vec<String>>,
    contradictory: Vec<String>,
}

fn wu_report(w: &WuDecomposition) -> WuReport {
    let mut chains = Vec::new();
    let mut contradictory = Vec::new();
    for b in &w.branches {
        match &b.chain {
            AscendingChain::Chain(t) => {
                chains.push(t.polys().iter().map(|p| p.to_string()).collect())
            }
            AscendingChain::Contradictory(p) => contradictory.push(p.to_string()),
        }
    }
    WuReport {
        chains,
        contradictory,
    }
}

pub fn wu_text(w: &WuDecomposition) -> String {
    let mut out = String::new();
    for (i, b) in w.branches.iter().enumerate() {
        out.push_str(&format!("C{} = {}\n", i + 1, b.chain));
    }
    out
}

pub fn wu_json(w: &WuDecomposition) -> String {
    serde_json::to_string_pretty(&wu_report(w)).expect("serialization cannot fail")
}

pub fn nonredundant_text(kept: &[AscendingChain], factors: &FactorSet) -> String {
    let mut out = String::new();
    out.push_str(&format!("chains ({}):\n", kept.len()));
    for c in kept {
        out.push_str(&format!("  {c}\n"));
    }
    out.push_str(&format!("rdu factors: {factors}\n"));
    out
}

#[derive(Serialize)]
struct NonredundantReport {
    chains: Vec<Vec<String>>,
    rdu_factors: Vec<String>,
}

pub fn nonredundant_json(kept: &[AscendingChain], factors: &FactorSet) -> String {
    let chains = kept
        .iter()
        .filter_map(|c| match c {
            AscendingChain::Chain(t) => {
                Some(t.polys().iter().map(|p| p.to_string()).collect())
            }
            AscendingChain::Contradictory(_) => None,
        })
        .collect();
    let report = NonredundantReport {
        chains,
        rdu_factors: factors_as_strings(factors),
    };
    serde_json::to_string_pretty(&report).expect("serialization cannot fail")
}

pub fn wrsd_text(w: &WrsdResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("H ({}):\n", w.h.len()));
    for t in &w.h {
        out.push_str(&format!("  {t}\n"));
    }
    out.push_str(&format!("G ({}):\n", w.g.len()));
    for t in &w.g {
        out.push_str(&format!("  {t}\n"));
    }
    out.push_str(&format!("F: {}\n", w.f));
    out
}

#[derive(Serialize)]
struct WrsdReport {
    h: Vec<Vec<String>>,
    g: Vec<Vec<String>>,
    f: Vec<String>,
}

pub fn wrsd_json(w: &WrsdResult) -> String {
    let report = WrsdReport {
        h: w.h
            .iter()
            .map(|t| t.polys().iter().map(|p| p.to_string()).collect())
            .collect(),
        g: w.g
            .iter()
            .map(|t| t.polys().iter().map(|p| p.to_string()).collect())
            .collect(),
        f: factors_as_strings(&w.f),
    };
    serde_json::to_string_pretty(&report).expect("serialization cannot fail")
}
