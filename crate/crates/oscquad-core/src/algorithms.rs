//! The quadrature algorithms, each with exact information accounting.
//!
//! * [`qmc`] — the equal-weight rule `(1/n) Σ_j f(j/n) e^{-2πikj/n}`,
//! * [`damped_qmc`] — the same rule scaled by a damping factor,
//! * [`modified_qmc`] — the hybrid `A*_n`: zero algorithm for `n < 2|k|`,
//!   equispaced rule otherwise,
//! * [`algo_per`] — endpoint periodization by Bernoulli polynomials, then the
//!   hybrid rule on the periodic remainder,
//! * [`algo_tay_per`] — midpoint Taylor expansion for small budgets, falling
//!   back to periodization at `n ≥ 2s`,
//! * [`auto_dispatch`] — picks the branch with the smallest certified bound.
//!
//! Every run logs the information it consumed — `(derivative order, node,
//! value)` triples, deduplicated so node reuse is counted once — which is how
//! the budget claims (`≤ n` evaluations, orders `≤ s-1`) are asserted.

use crate::bernoulli::{self, osc_integral_bernoulli, osc_integral_centered_monomial};
use crate::error::{Error, Result};
use crate::error_analysis::{
    modified_qmc_error, per_error_bound, tay_per_error_bound,
};
use crate::oracle::{cis, Oracle, TrigPolynomial};
use crate::real;
use crate::sobolev::fourier_weight;
use crate::Smoothness;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;
use core::f64::consts::PI;
use num_complex::Complex64;

/// One oracle call: derivative order, node, and the value used.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogEntry {
    pub order: usize,
    pub node: f64,
    pub value: Complex64,
}

/// The information an algorithm run consumed.
#[derive(Clone, Debug, Default)]
pub struct EvaluationLog {
    pub entries: Vec<LogEntry>,
}

impl EvaluationLog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Highest derivative order consumed, if any information was used.
    pub fn max_order(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.order).max()
    }
}

/// Result of running an algorithm, with its information log and parameters.
#[derive(Clone, Debug)]
pub struct AlgorithmRun {
    pub value: Complex64,
    pub log: EvaluationLog,
    pub algorithm: String,
    pub n: usize,
    pub k: i64,
    pub s: Option<Smoothness>,
    pub damping: Option<f64>,
    /// Worst-case bound certified for this run, when the constructor had one
    /// in hand (the dispatcher always sets it).
    pub certified_bound: Option<f64>,
}

/// Memoizing wrapper: repeated requests for the same `(order, node)` are
/// served from the log, so reused nodes count once.
struct MemoOracle<'a> {
    inner: &'a Oracle,
    log: RefCell<Vec<LogEntry>>,
}

impl<'a> MemoOracle<'a> {
    fn new(inner: &'a Oracle) -> Self {
        MemoOracle {
            inner,
            log: RefCell::new(Vec::new()),
        }
    }

    fn eval(&self, order: usize, x: f64) -> Result<Complex64> {
        if let Some(e) = self
            .log
            .borrow()
            .iter()
            .find(|e| e.order == order && e.node.to_bits() == x.to_bits())
        {
            return Ok(e.value);
        }
        let value = self.inner.eval(order, x)?;
        self.log.borrow_mut().push(LogEntry {
            order,
            node: x,
            value,
        });
        Ok(value)
    }

    fn into_log(self) -> EvaluationLog {
        EvaluationLog {
            entries: self.log.into_inner(),
        }
    }
}

/// `A_n^QMC(f) = (1/n) Σ_{j=1}^n f(j/n) e^{-2πikj/n}`; exactly `n` order-0
/// evaluations at `j/n`.
pub fn qmc(f: &Oracle, n: usize, k: i64) -> Result<AlgorithmRun> {
    if n == 0 {
        return Err(Error::InvalidBudget {
            n,
            reason: "the equispaced rule needs n >= 1",
        });
    }
    let memo = MemoOracle::new(f);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 1..=n {
        let x = j as f64 / n as f64;
        acc += memo.eval(0, x)? * cis(-2.0 * PI * k as f64 * x);
    }
    Ok(AlgorithmRun {
        value: acc / n as f64,
        log: memo.into_log(),
        algorithm: String::from("qmc"),
        n,
        k,
        s: None,
        damping: None,
        certified_bound: None,
    })
}

/// `a · A_n^QMC(f)`; same information as the undamped rule.
pub fn damped_qmc(f: &Oracle, n: usize, k: i64, a: f64) -> Result<AlgorithmRun> {
    let mut run = qmc(f, n, k)?;
    run.value *= a;
    run.algorithm = String::from("damped");
    run.damping = Some(a);
    Ok(run)
}

/// The hybrid `A*_n`: zero (and no information) for `n = 0` or `n < 2|k|`,
/// the equispaced rule for `n ≥ max(1, 2|k|)`.
pub fn modified_qmc(f: &Oracle, n: usize, k: i64) -> Result<AlgorithmRun> {
    if n == 0 || (n as u64) < 2 * k.unsigned_abs() {
        return Ok(AlgorithmRun {
            value: Complex64::new(0.0, 0.0),
            log: EvaluationLog::default(),
            algorithm: String::from("star-zero"),
            n,
            k,
            s: None,
            damping: None,
            certified_bound: None,
        });
    }
    let mut run = qmc(f, n, k)?;
    run.algorithm = String::from("star-qmc");
    Ok(run)
}

/// The Bernoulli interpolant of endpoint derivative jumps:
/// `p_{f,j}(x) = Σ_{m<j} (f^(m)(1) - f^(m)(0)) B*_{m+1}(x)`.
#[derive(Clone, Debug)]
pub struct PeriodizerPolynomial {
    /// `d_m = f^(m)(1) - f^(m)(0)`, `m = 0..j-1`.
    pub jumps: Vec<Complex64>,
}

impl PeriodizerPolynomial {
    pub fn order(&self) -> usize {
        self.jumps.len()
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        self.jumps
            .iter()
            .enumerate()
            .map(|(m, &d)| d * bernoulli::eval(m + 1, x).expect("order within table"))
            .sum()
    }

    /// Derivative of the interpolant (used by remainder oracles).
    pub fn eval_derivative(&self, order: usize, x: f64) -> Complex64 {
        self.jumps
            .iter()
            .enumerate()
            .filter(|(m, _)| m + 1 >= order)
            .map(|(m, &d)| d * bernoulli::eval(m + 1 - order, x).expect("order within table"))
            .sum()
    }

    pub fn to_oracle(&self) -> Oracle {
        let parts = self
            .jumps
            .iter()
            .enumerate()
            .map(|(m, &d)| {
                crate::oracle::make_scaled(
                    d,
                    crate::oracle::make_bernoulli(m + 1).expect("order within table"),
                )
            })
            .collect();
        crate::oracle::make_sum(parts)
    }
}

fn periodizer_from_memo(memo: &MemoOracle<'_>, j: usize) -> Result<PeriodizerPolynomial> {
    let mut jumps = Vec::with_capacity(j);
    for m in 0..j {
        let hi = memo.eval(m, 1.0)?;
        let lo = memo.eval(m, 0.0)?;
        jumps.push(hi - lo);
    }
    Ok(PeriodizerPolynomial { jumps })
}

/// Computes `p_{f,j}` from `2j` endpoint evaluations (orders `0..j-1` at both
/// endpoints); `f - p_{f,j}` has matching endpoint derivatives through order
/// `j-1`.
pub fn periodizer(f: &Oracle, j: usize) -> Result<PeriodizerPolynomial> {
    let memo = MemoOracle::new(f);
    periodizer_from_memo(&memo, j)
}

/// Endpoint derivatives by one-sided finite differences instead of oracle
/// derivatives. No accuracy certification; the rounding/truncation trade-off
/// is the caller's.
pub fn periodizer_finite_difference(
    f: &Oracle,
    j: usize,
    step: f64,
) -> Result<PeriodizerPolynomial> {
    let mut jumps = Vec::with_capacity(j);
    for m in 0..j {
        let mut fwd = Complex64::new(0.0, 0.0);
        let mut bwd = Complex64::new(0.0, 0.0);
        let mut binom = 1.0_f64;
        for i in 0..=m {
            let sign = if (m - i) % 2 == 0 { 1.0 } else { -1.0 };
            fwd += f.eval(0, i as f64 * step)? * (sign * binom);
            bwd += f.eval(0, 1.0 - (m - i) as f64 * step)? * (sign * binom);
            binom = binom * (m - i) as f64 / (i + 1) as f64;
        }
        let scale = real::powi(step, m as i32);
        jumps.push((bwd - fwd) / scale);
    }
    Ok(PeriodizerPolynomial { jumps })
}

/// `I_k(p_{f,j})` in closed form: `0` for `k = 0`, else
/// `-Σ_{l<j} d_l/(2πik)^{l+1}`.
pub fn integral_of_periodizer(p: &PeriodizerPolynomial, k: i64) -> Complex64 {
    p.jumps
        .iter()
        .enumerate()
        .map(|(m, &d)| d * osc_integral_bernoulli(k, m + 1))
        .sum()
}

/// Taylor expansion of `f` at `1/2` of order `n-1`.
#[derive(Clone, Debug)]
pub struct TaylorPolynomial {
    /// `f^(l)(1/2)`, `l = 0..n-1`.
    pub derivs: Vec<Complex64>,
}

impl TaylorPolynomial {
    pub fn order(&self) -> usize {
        self.derivs.len()
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        let mut monom = 1.0;
        let mut fact = 1.0;
        for (l, &d) in self.derivs.iter().enumerate() {
            if l > 0 {
                monom *= x - 0.5;
                fact *= l as f64;
            }
            acc += d * (monom / fact);
        }
        acc
    }
}

/// Builds `T_{f,n}` from `n` midpoint evaluations (orders `0..n-1` at `1/2`).
pub fn taylor(f: &Oracle, n: usize) -> Result<TaylorPolynomial> {
    if n == 0 {
        return Err(Error::InvalidBudget {
            n,
            reason: "the Taylor rule needs n >= 1",
        });
    }
    let mut derivs = Vec::with_capacity(n);
    for l in 0..n {
        derivs.push(f.eval(l, 0.5)?);
    }
    Ok(TaylorPolynomial { derivs })
}

/// `I_k(T_{f,n})` exactly, through the centered-monomial integrals.
pub fn integral_of_taylor(t: &TaylorPolynomial, k: i64) -> Complex64 {
    t.derivs
        .iter()
        .enumerate()
        .map(|(l, &d)| d * osc_integral_centered_monomial(k, l))
        .sum()
}

/// Periodize, then run the hybrid rule on the remainder. Shared by
/// [`algo_per`] and the large-budget branch of [`algo_tay_per`]; accepts
/// `k = 0` (the interpolant integral then vanishes).
fn periodize_then_hybrid(f: &Oracle, n: usize, k: i64, s: u32) -> Result<AlgorithmRun> {
    let two_s = 2 * s as usize;
    let memo = MemoOracle::new(f);
    let (value, label) = if n >= 2 && n % 2 == 0 && n < two_s {
        let p = periodizer_from_memo(&memo, n / 2)?;
        (integral_of_periodizer(&p, k), "per-interpolant")
    } else if n >= two_s {
        let l = n - two_s; // extra budget beyond the 2s endpoint values
        let p = periodizer_from_memo(&memo, s as usize)?;
        let mut value = integral_of_periodizer(&p, k);
        let nodes = l + 1;
        if nodes as u64 >= (2 * k.unsigned_abs()).max(1) {
            // hybrid rule on f - p at j/(l+1); the j = l+1 node is x = 1,
            // already in the log
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..=nodes {
                let x = j as f64 / nodes as f64;
                let fx = memo.eval(0, x)?;
                acc += (fx - p.eval(x)) * cis(-2.0 * PI * k as f64 * x);
            }
            value += acc / nodes as f64;
            return Ok(AlgorithmRun {
                value,
                log: memo.into_log(),
                algorithm: String::from("per-hybrid"),
                n,
                k,
                s: Some(Smoothness::Finite(s)),
                damping: None,
                certified_bound: None,
});
        }
        (value, "per-zero-tail")
    } else {
        return Err(Error::InvalidBudget {
            n,
            reason: "periodization rule is defined for even n in [2,2s) and n >= 2s",
        });
    };
    Ok(AlgorithmRun {
        value,
        log: memo.into_log(),
        algorithm: String::from(label),
        n,
        k,
        s: Some(Smoothness::Finite(s)),
        damping: None,
        certified_bound: None,
    })
}

/// The periodization rule `A_n^Per` for `k ≠ 0`: for even `n ∈ [2, 2s)` the
/// exact integral of `p_{f,n/2}`; for `n = 2s + l` the interpolant integral
/// plus the hybrid rule on the remainder. Total evaluations never exceed `n`.
pub fn algo_per(f: &Oracle, n: usize, k: i64, s: u32) -> Result<AlgorithmRun> {
    if k == 0 {
        return Err(Error::ZeroWaveNumber);
    }
    periodize_then_hybrid(f, n, k, s)
}

/// `A_n^Tay-Per`: Taylor branch for `n ∈ [1, s]`, periodization for
/// `n ≥ 2s`; the budget gap `(s, 2s)` is undefined at finite `s`. At
/// `s = ∞` the branch with the smaller certified bound is taken.
pub fn algo_tay_per(f: &Oracle, n: usize, k: i64, s: Smoothness) -> Result<AlgorithmRun> {
    match s {
        Smoothness::Finite(sf) => {
            if n >= 1 && n <= sf as usize {
                let memo = MemoOracle::new(f);
                let mut derivs = Vec::with_capacity(n);
                for l in 0..n {
                    derivs.push(memo.eval(l, 0.5)?);
                }
                let t = TaylorPolynomial { derivs };
                Ok(AlgorithmRun {
                    value: integral_of_taylor(&t, k),
                    log: memo.into_log(),
                    algorithm: String::from("taylor"),
                    n,
                    k,
                    s: Some(s),
                    damping: None,
                    certified_bound: None,
})
            } else if n >= 2 * sf as usize {
                let mut run = periodize_then_hybrid(f, n, k, sf)?;
                run.s = Some(s);
                Ok(run)
            } else {
                Err(Error::UndefinedBudget { n, s: sf })
            }
        }
        Smoothness::Infinite => {
            if n == 0 {
                return Err(Error::InvalidBudget {
                    n,
                    reason: "need at least one evaluation",
                });
            }
            // pick the branch with the smaller certified bound
            let taylor_bound = tay_per_error_bound(n as u64, 0, Smoothness::Infinite)?;
            let use_power = k != 0
                && n >= 2
                && n % 2 == 0
                && real::powi(2.0 * PI * k.unsigned_abs() as f64, -((n / 2) as i32))
                    < taylor_bound;
            if use_power {
                // periodization at level n/2 (any level is admissible at s = ∞)
                let memo = MemoOracle::new(f);
                let p = periodizer_from_memo(&memo, n / 2)?;
                Ok(AlgorithmRun {
                    value: integral_of_periodizer(&p, k),
                    log: memo.into_log(),
                    algorithm: String::from("per-interpolant"),
                    n,
                    k,
                    s: Some(s),
                    damping: None,
                    certified_bound: None,
})
            } else {
                let memo = MemoOracle::new(f);
                let mut derivs = Vec::with_capacity(n);
                for l in 0..n {
                    derivs.push(memo.eval(l, 0.5)?);
                }
                let t = TaylorPolynomial { derivs };
                Ok(AlgorithmRun {
                    value: integral_of_taylor(&t, k),
                    log: memo.into_log(),
                    algorithm: String::from("taylor"),
                    n,
                    k,
                    s: Some(s),
                    damping: None,
                    certified_bound: None,
})
            }
        }
    }
}

/// Worst-case extremal input of the equispaced rule: the normalized aliasing
/// pile-up `c Σ_{0<|j|≤J} a_{k+jn}^{-1} e_{k+jn}` with unit periodic norm.
pub fn extremal_qmc_function(n: usize, k: i64, s: u32, j_max: usize) -> TrigPolynomial {
    let mut coeffs = Vec::with_capacity(2 * j_max);
    let mut sum_inv = 0.0;
    for j in 1..=j_max as i64 {
        for h in [k + j * n as i64, k - j * n as i64] {
            sum_inv += 1.0 / fourier_weight(h, s);
        }
    }
    let c = 1.0 / real::sqrt(sum_inv);
    for j in 1..=j_max as i64 {
        for h in [k + j * n as i64, k - j * n as i64] {
            coeffs.push((h, Complex64::new(c / fourier_weight(h, s), 0.0)));
        }
    }
    TrigPolynomial::new(coeffs)
}

/// Sum of the absolute weights of the periodization rule's closed form;
/// stays below an absolute constant (numerical stability).
pub fn algo_per_weight_abs_sum(n: usize, k: i64, s: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::ZeroWaveNumber);
    }
    let two_pi_k = 2.0 * PI * k.unsigned_abs() as f64;
    let two_s = 2 * s as usize;
    let endpoint_orders = if n >= 2 && n % 2 == 0 && n < two_s {
        n / 2
    } else if n >= two_s {
        s as usize
    } else {
        return Err(Error::InvalidBudget {
            n,
            reason: "periodization rule is defined for even n in [2,2s) and n >= 2s",
        });
    };
    let nodes = if n >= two_s {
        n - two_s + 1
    } else {
        0
    };
    let hybrid_active = nodes as u64 >= (2 * k.unsigned_abs()).max(1) && n >= two_s;

    if !hybrid_active {
        let mut total = 0.0;
        for m in 0..endpoint_orders {
            total += 2.0 * real::powi(two_pi_k, -(m as i32 + 1));
        }
        return Ok(total);
    }

    let l = nodes;
    // interior node weights e^{-2πikj/l}/l, j < l
    let mut total = (l - 1) as f64 / l as f64;
    for m in 0..endpoint_orders {
        let base = osc_integral_bernoulli(k, m + 1);
        let mut corr = Complex64::new(0.0, 0.0);
        for j in 1..=l {
            let x = j as f64 / l as f64;
            corr += Complex64::new(bernoulli::eval(m + 1, x).expect("in table"), 0.0)
                * cis(-2.0 * PI * k as f64 * x);
        }
        corr /= l as f64;
        let mut w_at_1 = base - corr;
        if m == 0 {
            // the j = l node coincides with the endpoint value f(1)
            w_at_1 += Complex64::new(1.0 / l as f64, 0.0) * cis(-2.0 * PI * k as f64);
        }
        let w_at_0 = -base + corr;
        total += w_at_1.norm() + w_at_0.norm();
    }
    Ok(total)
}

/// Picks the branch with the smallest certified worst-case bound among the
/// hybrid rule (periodic inputs), the periodization rule, and the
/// Taylor/periodization rule, then runs it.
pub fn auto_dispatch(f: &Oracle, n: usize, k: i64, s: Smoothness) -> Result<AlgorithmRun> {
    #[derive(Clone, Copy, PartialEq)]
    enum Choice {
        Star,
        Per(usize),
        TayPer(usize),
    }
    let mut best: Option<(f64, Choice)> = None;
    let mut consider = |bound: f64, choice: Choice| {
        if best.is_none_or(|(b, _)| bound < b) {
            best = Some((bound, choice));
        }
    };

    if let Smoothness::Finite(sf) = s {
        if f.periodic_in(sf) && n >= 1 {
            consider(modified_qmc_error(n as u64, k, sf).value, Choice::Star);
        }
        if k != 0 {
            // the spec'd odd-budget fallback: use n-1
            for cand in [n, n.saturating_sub(1)] {
                if let Ok(b) = per_error_bound(cand as u64, k, sf) {
                    consider(b, Choice::Per(cand));
                    break;
                }
            }
        }
        // Taylor budget: largest admissible not exceeding n
        let in_gap = n > sf as usize && n < 2 * sf as usize;
        let tn = if in_gap { sf as usize } else { n };
        if tn >= 1 {
            if let Ok(b) = tay_per_error_bound(tn as u64, k, s) {
                consider(b, Choice::TayPer(tn));
            }
        }
    } else {
        if let Ok(b) = tay_per_error_bound(n as u64, k, s) {
            consider(b, Choice::TayPer(n));
        }
    }

    let (bound, choice) = best.ok_or(Error::InvalidBudget {
        n,
        reason: "no certified branch applies to this budget",
    })?;
    let mut run = match choice {
        Choice::Star => modified_qmc(f, n, k)?,
        Choice::Per(m) => algo_per(f, m, k, s.finite().expect("finite in this branch"))?,
        Choice::TayPer(m) => algo_tay_per(f, m, k, s)?,
    };
    run.algorithm = {
        use core::fmt::Write as _;
        let mut label = String::from("auto:");
        label.push_str(&run.algorithm);
        let _ = write!(label, " (bound {bound:.3e})");
        label
    };
    run.n = n;
    run.certified_bound = Some(bound);
    Ok(run)
}
