//! Flat, key-sorted summaries of a family instance.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::codes::{
    four_cycle_report, is_dual_containing, is_self_dual, is_self_orthogonal, min_distance_exact,
    min_distance_search, quantum_params, CodeError, LinearCode, DEFAULT_EXHAUSTIVE_CAP, DEFAULT_SEED,
};
use crate::constructions::{search_witness, CodeFamilySpec, Duality, FamilyInstance, InnerProduct, Symmetry};

/// Distance settings: the exhaustive cap in enumeration bits and an
/// optional randomized-search budget used when the cap is exceeded.
#[derive(Debug, Clone, Copy)]
pub struct DistanceOptions {
    pub exhaustive_cap: u32,
    pub budget: Option<u64>,
    pub seed: u64,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
            budget: None,
            seed: DEFAULT_SEED,
        }
    }
}

/// Everything known about one instance. Optional fields stay `None` until
/// the corresponding analysis has run. Fields are declared in key order
/// so the JSON form is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub annihilates: bool,
    pub check_rank: usize,
    pub claim_status: String,
    pub claimed_distance: Option<usize>,
    pub contract_passed: bool,
    pub dimension: usize,
    pub distance: Option<usize>,
    pub distance_method: Option<String>,
    pub distance_upper: Option<usize>,
    pub dual_containing: bool,
    pub duality: String,
    pub duality_passed: bool,
    pub elapsed_ms: u64,
    pub exhaustive_cap: Option<u32>,
    pub expected_nilpotency: u64,
    pub expected_rank: usize,
    pub family: String,
    pub field: String,
    pub four_cycles: Option<u64>,
    pub group: String,
    pub inner_product: String,
    pub length: usize,
    pub min_row_gap: Option<usize>,
    pub nilpotency: Option<u64>,
    pub notes: Vec<String>,
    pub quantum: Option<String>,
    pub rank: usize,
    pub search_budget: Option<u64>,
    pub seed: Option<u64>,
    pub self_dual_euclidean: bool,
    pub self_dual_hermitian: Option<bool>,
    pub self_orthogonal: bool,
    pub spec: String,
    pub symmetric: bool,
    pub symmetry: String,
    pub witness_weight: Option<usize>,
}

impl CodeReport {
    /// Parameters, contract measurements and duality verdicts.
    pub fn new(inst: &FamilyInstance, code: &LinearCode) -> Result<Self, CodeError> {
        let started = Instant::now();
        let c = inst.contract();
        let ip = inst.inner_product();
        let claimed = inst.claimed();
        let self_dual_euclidean = is_self_dual(code, InnerProduct::Euclidean)?;
        let self_dual_hermitian = if code.field().is_gf4() {
            Some(is_self_dual(code, InnerProduct::Hermitian)?)
        } else {
            None
        };
        let dual_containing = is_dual_containing(code, ip)?;
        let self_orthogonal = is_self_orthogonal(code, ip)?;
        let duality_passed = match inst.duality() {
            Duality::SelfDual => is_self_dual(code, ip)?,
            Duality::DualContaining => dual_containing,
            Duality::SelfOrthogonal => self_orthogonal,
        };
        let mut notes = Vec::new();
        if inst.spec().family == crate::constructions::CodeFamily::GF4SelfDual {
            notes.push("self-dual under the euclidean inner product only".to_string());
        }
        let mut report = CodeReport {
            annihilates: c.annihilates,
            check_rank: c.check_rank,
            claim_status: claimed.status.to_string(),
            claimed_distance: claimed.d,
            contract_passed: c.passed(inst.length()),
            dimension: code.dimension(),
            distance: None,
            distance_method: None,
            distance_upper: None,
            dual_containing,
            duality: serde_json::to_value(inst.duality())
                .ok()
                .and_then(|v| v.as_str().map(str::to_string))
                .unwrap_or_default(),
            duality_passed,
            elapsed_ms: 0,
            exhaustive_cap: None,
            expected_nilpotency: c.expected.nilpotency,
            expected_rank: c.expected.rank,
            family: inst.spec().family.to_string(),
            field: inst.field().to_string(),
            four_cycles: None,
            group: inst.group().to_string(),
            inner_product: ip.to_string(),
            length: code.length(),
            min_row_gap: None,
            nilpotency: c.nilpotency,
            notes,
            quantum: None,
            rank: c.rank,
            search_budget: None,
            seed: None,
            self_dual_euclidean,
            self_dual_hermitian,
            self_orthogonal,
            spec: inst.spec().to_string(),
            symmetric: c.symmetric,
            symmetry: match c.expected.symmetry {
                Symmetry::Transpose => "transpose",
                Symmetry::Bar => "bar",
            }
            .to_string(),
            witness_weight: None,
        };
        report.add_elapsed(started);
        Ok(report)
    }

    fn add_elapsed(&mut self, started: Instant) {
        self.elapsed_ms += started.elapsed().as_millis() as u64;
    }

    pub fn passed(&self) -> bool {
        self.contract_passed && self.duality_passed
    }

    /// Exact distance when the code or its dual fits under the cap;
    /// otherwise an upper bound from randomized search if a budget is set.
    /// Without a budget the cap error is returned.
    pub fn measure_distance(&mut self, code: &LinearCode, opts: &DistanceOptions) -> Result<(), CodeError> {
        let started = Instant::now();
        self.exhaustive_cap = Some(opts.exhaustive_cap);
        match min_distance_exact(code, opts.exhaustive_cap) {
            Ok((d, method)) => {
                self.distance = Some(d);
                self.distance_upper = Some(d);
                self.distance_method = serde_json::to_value(method)
                    .ok()
                    .and_then(|v| v.as_str().map(str::to_string));
            }
            Err(CodeError::CapExceeded { .. }) if opts.budget.is_some() => {
                let budget = opts.budget.unwrap_or(0);
                let found = min_distance_search(code, budget, opts.seed);
                let upper = match self.witness_weight {
                    Some(w) => w.min(found.weight),
                    None => found.weight,
                };
                self.distance_upper = Some(upper);
                self.distance_method = Some("search".into());
                self.search_budget = Some(budget);
                self.seed = Some(opts.seed);
            }
            Err(e) => return Err(e),
        }
        self.note_claim_gap();
        self.add_elapsed(started);
        Ok(())
    }

    pub fn find_witness(&mut self, inst: &FamilyInstance) {
        let started = Instant::now();
        let w = search_witness(inst).weight;
        self.witness_weight = Some(w);
        if self.distance.is_none() {
            self.distance_upper = Some(self.distance_upper.map_or(w, |u| u.min(w)));
        }
        self.note_claim_gap();
        self.add_elapsed(started);
    }

    /// Records when a codeword lighter than the claimed distance is known.
    fn note_claim_gap(&mut self) {
        let (Some(claim), Some(upper)) = (self.claimed_distance, self.distance_upper) else {
            return;
        };
        let note = format!("codeword of weight {upper} is below the claimed distance {claim}");
        if upper < claim && !self.notes.contains(&note) {
            self.notes.push(note);
        }
    }

    /// Quantum parameters under the family's inner product, with the best
    /// known distance value.
    pub fn derive_quantum(&mut self, code: &LinearCode, inst: &FamilyInstance) -> Result<(), CodeError> {
        let d = self.distance.or(self.distance_upper);
        let q = quantum_params(code, inst.inner_product(), d)?;
        self.quantum = Some(q.to_string());
        Ok(())
    }

    pub fn count_cycles(&mut self, code: &LinearCode, spec: &CodeFamilySpec) {
        if let Some(h) = code.check() {
            let r = four_cycle_report(h, spec.n as usize);
            self.four_cycles = Some(r.cycles);
            self.min_row_gap = r.min_row_gap;
        }
    }

    pub fn to_json(&self) -> String {
        // serialize through a Value so keys come out sorted regardless of
        // field order
        let value = serde_json::to_value(self).expect("plain data");
        serde_json::to_string_pretty(&value).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}
