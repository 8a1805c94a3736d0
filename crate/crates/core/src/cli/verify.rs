use std::io::Write;
use std::path::Path;

use crate::error::Result;
use crate::instance::{Constraint, InstanceFile};
use crate::matroid::verify_matroid_axioms;
use crate::properties::{check_monotone, check_normal, check_submodular, total_curvature, CheckMode, N_MAX_EXHAUSTIVE};
use crate::IndependenceOracle;

use super::RunSettings;

const VERIFY_SAMPLES: u64 = 20_000;

/// Prints one report per property; returns whether all of them hold.
/// Beyond exhaustive range the function checks are sampled and the matroid
/// check is skipped for constraints that are matroids by construction.
pub fn verify(path: &Path, settings: RunSettings, out: &mut dyn Write) -> Result<bool> {
    let file = InstanceFile::load(path)?;
    let inst = file.build()?;
    let f = &*inst.oracle;
    let n = inst.ground_size();
    let mode = if n <= N_MAX_EXHAUSTIVE {
        CheckMode::Exhaustive
    } else {
        CheckMode::Sampled { samples: VERIFY_SAMPLES, seed: settings.seed }
    };
    writeln!(out, "instance {} ({}, n = {n}, {} constraint)", inst.name, f.name(), inst.constraint.kind())?;
    let reports = [check_normal(f), check_monotone(f, mode)?, check_submodular(f, mode)?];
    for r in &reports {
        writeln!(out, "{r}")?;
    }
    let mut ok = reports.iter().all(|r| r.holds);
    if ok && n <= N_MAX_EXHAUSTIVE {
        writeln!(out, "curvature: c = {}", total_curvature(f)?.c)?;
    }
    if n <= N_MAX_EXHAUSTIVE {
        let report = verify_matroid_axioms(&inst.constraint)?;
        writeln!(out, "{report}")?;
        ok &= report.holds;
    } else {
        writeln!(out, "matroid: not checked (n > {N_MAX_EXHAUSTIVE})")?;
    }
    if !matches!(inst.constraint, Constraint::Explicit(_)) {
        writeln!(out, "rank: {}", inst.constraint.rank_ceiling())?;
    }
    writeln!(out, "{}", if ok { "all properties hold" } else { "property violated" })?;
    Ok(ok)
}
