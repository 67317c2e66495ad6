//! The full invariant grid as named, machine-checkable results.
//!
//! Every closed-form table and identity the crate implements is exercised
//! here against an independent witness: character-theoretic computations
//! go through the exact cyclotomic oracle of [`crate::chars`], counting
//! statements against literal constants, and the multiplicity identities
//! against both of their defining routes. The CLI `selftest` subcommand
//! and the acceptance suite both consume [`run_all`].
//!
//! Checks never panic; a broken invariant comes back as a failed
//! [`CheckResult`] naming the first offending cases.

use crate::batch::map_collect_mode;
use crate::chars::BrauerTable;
use crate::congruence::{predict, NewformLocalData, Prediction, UnramifiedTwist};
use crate::groth::tensor_irreps;
use crate::irrep::{list_irreps, GammaIrrep};
use crate::mult::{
    multiplicity_ds, multiplicity_extended, mu_for, DeformationProblem, MuFunctional,
    RhoBarClass,
};
use crate::params::FieldParams;
use crate::sym::{sym_power, HodgeTateType};
use crate::types::{d_tau, sigma_gamma_reduction, InertialTypeDesc, Sign};
use serde::Serialize;

/// Outcome of one named invariant check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn summarize(name: &str, cases: usize, failures: Vec<String>) -> CheckResult {
    if failures.is_empty() {
        CheckResult {
            name: name.into(),
            passed: true,
            detail: format!("{cases} cases verified"),
        }
    } else {
        let shown = failures.iter().take(3).cloned().collect::<Vec<_>>().join("; ");
        CheckResult {
            name: name.into(),
            passed: false,
            detail: format!("{} of {cases} cases failed: {shown}", failures.len()),
        }
    }
}

fn params_for(q: u32) -> FieldParams {
    FieldParams::from_q(q).expect("check grids use valid prime powers")
}

/// Census of irreducibles for q ∈ {3, 5, 7, 9}: 2(q−1) one-dimensional
/// and (q²−q)/2 two-dimensional classes, with Σ dim² = 2(q²−1).
pub fn irrep_census() -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    for q in [3u32, 5, 7, 9] {
        cases += 1;
        let params = params_for(q);
        let irreps = list_irreps(&params);
        let one = irreps.iter().filter(|i| i.dim() == 1).count() as u32;
        let two = irreps.iter().filter(|i| i.dim() == 2).count() as u32;
        let sq: i64 = irreps.iter().map(|i| i.dim() * i.dim()).sum();
        if one != 2 * (q - 1) {
            failures.push(format!("q={q}: {one} one-dim classes"));
        }
        if two != (q * q - q) / 2 {
            failures.push(format!("q={q}: {two} two-dim classes"));
        }
        if sq != 2 * i64::from(q * q - 1) {
            failures.push(format!("q={q}: sum of squared dims is {sq}"));
        }
        let mut sorted = irreps.clone();
        sorted.sort();
        sorted.dedup();
        if sorted != irreps || irreps.iter().any(|i| !i.is_valid_for(&params)) {
            failures.push(format!("q={q}: list is not canonical"));
        }
    }
    summarize("irrep_census", cases, failures)
}

/// Fibers of the central character for q ∈ {3, 5, 7}: an odd exponent
/// carries (q+1)/2 two-dimensional classes and no one-dimensional ones,
/// an even exponent carries (q−1)/2 and exactly 4.
pub fn central_character_fibers() -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    for q in [3u32, 5, 7] {
        let params = params_for(q);
        let irreps = list_irreps(&params);
        for c in 0..q - 1 {
            cases += 1;
            let fiber: Vec<&GammaIrrep> =
                irreps.iter().filter(|i| i.central_character(&params) == c).collect();
            let one = fiber.iter().filter(|i| i.dim() == 1).count() as u32;
            let two = fiber.iter().filter(|i| i.dim() == 2).count() as u32;
            let (want_one, want_two) =
                if c % 2 == 1 { (0, (q + 1) / 2) } else { (4, (q - 1) / 2) };
            if (one, two) != (want_one, want_two) {
                failures.push(format!(
                    "q={q} c={c}: got {one} one-dim and {two} two-dim, want {want_one} and {want_two}"
                ));
            }
        }
    }
    summarize("central_character_fibers", cases, failures)
}

/// Dimension of the reduction of a ramified-induction type: always
/// q^{level−1}(q+1), and the class is effective, for q ∈ {3, 5, 7} and
/// level up to 3.
pub fn ramified_reduction_dimensions() -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    for q in [3u32, 5, 7] {
        let params = params_for(q);
        for n in 0..q - 1 {
            for alpha in [0u8, 1] {
                for level in 1u32..=3 {
                    for sign in [Sign::Plus, Sign::Minus] {
                        cases += 1;
                        let desc = InertialTypeDesc::IrrRamified { n, alpha, level };
                        let want =
                            i64::from(q).pow(level - 1) * i64::from(q + 1);
                        match sigma_gamma_reduction(&params, &desc, sign) {
                            Err(e) => failures.push(format!(
                                "q={q} n={n} alpha={alpha} level={level} {sign}: {e}"
                            )),
                            Ok(red) => {
                                if red.dim() != want {
                                    failures.push(format!(
                                        "q={q} n={n} alpha={alpha} level={level} {sign}: dim {} want {want}",
                                        red.dim()
                                    ));
                                }
                                if !red.is_effective() {
                                    failures.push(format!(
                                        "q={q} n={n} alpha={alpha} level={level} {sign}: not effective"
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    summarize("ramified_reduction_dimensions", cases, failures)
}

fn sym_oracle_failures(params: FieldParams, max_n: u32, sequential: bool) -> Vec<String> {
    let table = BrauerTable::new(params);
    let results = map_collect_mode(
        (0..=max_n).collect::<Vec<u32>>(),
        sequential,
        |n| -> Option<String> {
            let values = table.sym_lift_character(n);
            let via_oracle = match table.decompose(&values) {
                Ok(e) => e,
                Err(e) => return Some(format!("p={} N={n}: oracle: {e}", params.p())),
            };
            let closed_form = match sym_power(&params, n) {
                Ok(e) => e,
                Err(e) => return Some(format!("p={} N={n}: {e}", params.p())),
            };
            if via_oracle != closed_form {
                return Some(format!(
                    "p={} N={n}: oracle {via_oracle} versus closed form {closed_form}",
                    params.p()
                ));
            }
            None
        },
    );
    results.into_iter().flatten().collect()
}

/// Closed-form symmetric power reductions versus the character oracle,
/// p ∈ {5, 7}, N ≤ 12.
pub fn sym_reduction_oracle() -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    for p in [5u32, 7] {
        cases += 13;
        failures.extend(sym_oracle_failures(params_for(p), 12, false));
    }
    summarize("sym_reduction_oracle", cases, failures)
}

/// Sequential twin of the symmetric power oracle comparison, for the
/// bench suite. Returns the number of cases on success, the first
/// failure message otherwise.
pub fn sym_oracle_cases(
    params: FieldParams,
    max_n: u32,
    sequential: bool,
) -> std::result::Result<usize, String> {
    let failures = sym_oracle_failures(params, max_n, sequential);
    match failures.into_iter().next() {
        None => Ok(max_n as usize + 1),
        Some(f) => Err(f),
    }
}

fn tensor_oracle_failures(params: FieldParams, sequential: bool) -> (usize, Vec<String>) {
    let table = BrauerTable::new(params);
    let irreps = list_irreps(&params);
    let mut pairs = Vec::new();
    for (i, left) in irreps.iter().enumerate() {
        for right in &irreps[i..] {
            pairs.push((*left, *right));
        }
    }
    let cases = pairs.len();
    let results = map_collect_mode(pairs, sequential, |(left, right)| -> Option<String> {
        let run = || -> crate::error::Result<Option<String>> {
            let product =
                table.product(table.char_of_irrep(&left)?, table.char_of_irrep(&right)?);
            let via_oracle = table.decompose(&product)?;
            let structural = tensor_irreps(&params, &left, &right);
            if via_oracle != structural {
                return Ok(Some(format!(
                    "q={} {left} ⊗ {right}: oracle {via_oracle} versus rules {structural}",
                    params.q()
                )));
            }
            Ok(None)
        };
        match run() {
            Ok(v) => v,
            Err(e) => Some(format!("q={} {left} ⊗ {right}: {e}", params.q())),
        }
    });
    (cases, results.into_iter().flatten().collect())
}

/// Structural tensor product rules versus the character oracle over all
/// unordered pairs of irreducibles, q ∈ {3, 5, 7}.
pub fn tensor_oracle() -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    for q in [3u32, 5, 7] {
        let (n, f) = tensor_oracle_failures(params_for(q), false);
        cases += n;
        failures.extend(f);
    }
    summarize("tensor_oracle", cases, failures)
}

/// Tensor-versus-oracle comparison over one field, with a sequential
/// switch, for the bench suite.
pub fn tensor_oracle_cases(
    params: FieldParams,
    sequential: bool,
) -> std::result::Result<usize, String> {
    let (cases, failures) = tensor_oracle_failures(params, sequential);
    match failures.into_iter().next() {
        None => Ok(cases),
        Some(f) => Err(f),
    }
}

/// The multiplicity tables of the three built-in classes against frozen
/// literals for p ∈ {5, 7}, every twist exponent.
pub fn mu_tables() -> CheckResult {
    // (p, n, xi twist of the one-dim weight, canonical two-dim index)
    let frozen: &[(u32, u32, bool, u32)] = &[
        (5, 0, false, 4),
        (5, 1, true, 2),
        (5, 2, false, 8),
        (5, 3, true, 14),
        (7, 0, false, 6),
        (7, 1, true, 2),
        (7, 2, false, 10),
        (7, 3, true, 18),
        (7, 4, false, 26),
        (7, 5, true, 34),
    ];
    let mut failures = Vec::new();
    let mut cases = 0;
    for &(p, n, xi, r_index) in frozen {
        let params = params_for(p);
        let one = GammaIrrep::OneDim { a: n, xi };
        let two = GammaIrrep::TwoDim { a: r_index };
        let classes = [
            (RhoBarClass::TresRamifie { n }, vec![(one, 1)]),
            (RhoBarClass::PeuRamifieNonzero { n }, vec![(one, 1), (two, 2)]),
            (RhoBarClass::Split { n }, vec![(one, 1), (two, 4)]),
        ];
        for (rho, entries) in classes {
            cases += 1;
            let want = MuFunctional::from_entries(params, entries)
                .expect("frozen labels are canonical");
            match mu_for(&params, &rho) {
                Err(e) => failures.push(format!("p={p} n={n} {rho:?}: {e}")),
                Ok(mu) => {
                    if mu != want {
                        failures.push(format!("p={p} n={n} {rho:?}: table {mu} want {want}"));
                    }
                }
            }
        }
    }
    summarize("mu_tables", cases, failures)
}

fn tau_grid(params: &FieldParams) -> Vec<InertialTypeDesc> {
    let q = params.q();
    let mut taus = Vec::new();
    for n in 0..q - 1 {
        taus.push(InertialTypeDesc::ScalTame { n });
    }
    for irrep in list_irreps(params) {
        if let GammaIrrep::TwoDim { a } = irrep {
            taus.push(InertialTypeDesc::RedTame { a });
        }
    }
    for n in 0..q - 1 {
        for alpha in [0u8, 1] {
            for level in 1u32..=2 {
                taus.push(InertialTypeDesc::IrrRamified { n, alpha, level });
            }
        }
    }
    taus
}

fn weight_grid(max_n: u32) -> Vec<HodgeTateType> {
    let mut ws = Vec::new();
    for n in 0..=max_n {
        for m in 0..3 {
            ws.push(HodgeTateType::new(n, i64::from(m)));
        }
    }
    ws
}

fn sum_rule_failures(
    params: FieldParams,
    rhos: &[RhoBarClass],
    check_equal_signs: bool,
) -> (usize, Vec<String>) {
    let mut items = Vec::new();
    for rho in rhos {
        for tau in tau_grid(&params) {
            for w in weight_grid(10) {
                items.push((rho.clone(), tau, w));
            }
        }
    }
    let cases = items.len();
    let results = map_collect_mode(items, false, |(rho, tau, w)| -> Option<String> {
        let pb = DeformationProblem { rho, tau, w };
        let label =
            |pb: &DeformationProblem| format!("p={} {:?} {:?} w=({},{})", params.p(), pb.rho, pb.tau, pb.w.n, pb.w.m);
        let run = || -> crate::error::Result<(u64, u64, u64, u32)> {
            Ok((
                multiplicity_extended(&params, &pb, Sign::Plus)?,
                multiplicity_extended(&params, &pb, Sign::Minus)?,
                multiplicity_ds(&params, &pb)?,
                d_tau(&pb.tau)?,
            ))
        };
        match run() {
            Err(e) => Some(format!("{}: {e}", label(&pb))),
            Ok((plus, minus, ds, d)) => {
                if plus + minus != u64::from(d) * ds {
                    Some(format!(
                        "{}: e(+)={plus} e(-)={minus} but d*ds={}",
                        label(&pb),
                        u64::from(d) * ds
                    ))
                } else if check_equal_signs && plus != minus {
                    Some(format!("{}: e(+)={plus} differs from e(-)={minus}", label(&pb)))
                } else {
                    None
                }
            }
        }
    });
    (cases, results.into_iter().flatten().collect())
}

/// The sum rule e(+1) + e(−1) = d_τ · e(ds) over the full grid of
/// built-in classes, supported type descriptors, and weights with n ≤ 10,
/// for p ∈ {5, 7}.
pub fn extension_sum_rule() -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    for p in [5u32, 7] {
        let mut rhos = Vec::new();
        for n in 0..p - 1 {
            rhos.push(RhoBarClass::TresRamifie { n });
            rhos.push(RhoBarClass::PeuRamifieNonzero { n });
            rhos.push(RhoBarClass::Split { n });
        }
        let (n, f) = sum_rule_failures(params_for(p), &rhos, false);
        cases += n;
        failures.extend(f);
    }
    summarize("extension_sum_rule", cases, failures)
}

/// e(+1) = e(−1) whenever the table charges no one-dimensional weight,
/// over the same type and weight grid. The built-in classes all charge
/// one, so the witnesses are custom tables supported on two-dimensional
/// classes only.
pub fn two_dim_support_sign_symmetry() -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    for p in [5u32, 7] {
        let params = params_for(p);
        let single = MuFunctional::from_entries(
            params,
            [(GammaIrrep::two_dim(&params, 1).expect("q+1 does not divide 1"), 1)],
        )
        .expect("valid table");
        let pair = MuFunctional::from_entries(
            params,
            [
                (GammaIrrep::two_dim(&params, 1).expect("valid"), 2),
                (GammaIrrep::two_dim(&params, i64::from(p) + 2).expect("valid"), 3),
            ],
        )
        .expect("valid table");
        let all = MuFunctional::from_entries(
            params,
            list_irreps(&params).into_iter().filter(|i| i.dim() == 2).map(|i| (i, 1)),
        )
        .expect("valid table");
        let rhos: Vec<RhoBarClass> = [single, pair, all]
            .into_iter()
            .map(|table| RhoBarClass::Custom { table, twist_of_cyclotomic_extension: false })
            .collect();
        let (n, f) = sum_rule_failures(params, &rhos, true);
        cases += n;
        failures.extend(f);
    }
    summarize("two_dim_support_sign_symmetry", cases, failures)
}

/// Forced-sign region of the sign oracle: p = 5, k ∈ {4, 6, 8, 10, 12},
/// très ramifié with the matching twist exponent. The predicted sign is
/// (−1)^{k/2−1}·x, the multiplicity engine gives zero on the rejected
/// branch and at least one on the kept branch.
pub fn forced_sign() -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    let p = 5u32;
    let params = params_for(p);
    for k in [4u32, 6, 8, 10, 12] {
        let n = (k / 2 - 1) % (p - 1);
        let rho = RhoBarClass::TresRamifie { n };
        let forced_branch = Sign::from_parity(i64::from(k) / 2 - 1);
        for x in [Sign::Plus, Sign::Minus] {
            cases += 1;
            let data = NewformLocalData {
                p,
                k,
                rho: rho.clone(),
                x: if x == Sign::Plus {
                    UnramifiedTwist::PlusOne
                } else {
                    UnramifiedTwist::MinusOne
                },
                globally_irreducible: false,
                ap_sign: None,
            };
            match predict(&data) {
                Err(e) => failures.push(format!("k={k} x={x}: {e}")),
                Ok(out) => {
                    let want = forced_branch.times(x);
                    if out.prediction != (Prediction::ForcedSign { sign: want }) {
                        failures
                            .push(format!("k={k} x={x}: {:?} want {want}", out.prediction));
                    }
                }
            }
        }
        cases += 1;
        let pb = DeformationProblem {
            rho,
            tau: InertialTypeDesc::ScalTame { n: 0 },
            w: HodgeTateType::new(k - 2, 0),
        };
        let engine = |sign| multiplicity_extended(&params, &pb, sign);
        match (engine(forced_branch), engine(forced_branch.flip())) {
            (Ok(kept), Ok(rejected)) => {
                if kept < 1 || rejected != 0 {
                    failures.push(format!("k={k}: engine kept={kept} rejected={rejected}"));
                }
            }
            (l, r) => failures.push(format!("k={k}: engine errors {l:?} {r:?}")),
        }
    }
    summarize("forced_sign", cases, failures)
}

/// Companion region of the sign oracle: p = 5 at k = 14 très ramifié and
/// k = 6 for the peu ramifié and split classes, with global
/// irreducibility attested, conclude a sign-flipped congruent newform
/// exists, and the engine gives positive multiplicity on both branches.
pub fn companion_existence() -> CheckResult {
    let mut failures = Vec::new();
    let mut cases = 0;
    let p = 5u32;
    let params = params_for(p);
    let instances = [
        (14u32, RhoBarClass::TresRamifie { n: 2 }),
        (6, RhoBarClass::PeuRamifieNonzero { n: 2 }),
        (6, RhoBarClass::Split { n: 2 }),
    ];
    for (k, rho) in instances {
        cases += 1;
        let data = NewformLocalData {
            p,
            k,
            rho: rho.clone(),
            x: UnramifiedTwist::PlusOne,
            globally_irreducible: true,
            ap_sign: None,
        };
        match predict(&data) {
            Err(e) => failures.push(format!("k={k} {rho:?}: {e}")),
            Ok(out) => {
                if out.prediction != Prediction::OppositeExists {
                    failures.push(format!("k={k} {rho:?}: {:?}", out.prediction));
                }
                if out.relied_on != vec!["globally_irreducible".to_string()] {
                    failures.push(format!("k={k} {rho:?}: relied on {:?}", out.relied_on));
                }
            }
        }
        let pb = DeformationProblem {
            rho: rho.clone(),
            tau: InertialTypeDesc::ScalTame { n: 0 },
            w: HodgeTateType::new(k - 2, 0),
        };
        match (
            multiplicity_extended(&params, &pb, Sign::Plus),
            multiplicity_extended(&params, &pb, Sign::Minus),
        ) {
            (Ok(plus), Ok(minus)) => {
                if plus < 1 || minus < 1 {
                    failures.push(format!("k={k} {rho:?}: engine e(+)={plus} e(-)={minus}"));
                }
            }
            (l, r) => failures.push(format!("k={k} {rho:?}: engine errors {l:?} {r:?}")),
        }
    }
    summarize("companion_existence", cases, failures)
}

/// Every check, in a stable order.
pub fn run_all() -> Vec<CheckResult> {
    vec![
        irrep_census(),
        central_character_fibers(),
        ramified_reduction_dimensions(),
        sym_reduction_oracle(),
        tensor_oracle(),
        mu_tables(),
        extension_sum_rule(),
        two_dim_support_sign_symmetry(),
        forced_sign(),
        companion_existence(),
    ]
}
