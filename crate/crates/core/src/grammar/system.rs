//! Polynomial systems `y_U = P_U(X, y)` of context-free grammars.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::model::WeightedGrammar;
use super::normalize::inline_chains;
use super::GrammarError;

/// `coeff * X^xdeg * prod y_v` over the multiset `vars` (sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monomial {
    pub coeff: BigInt,
    pub xdeg: u32,
    pub vars: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    pub names: Vec<String>,
    pub axiom: usize,
    pub equations: Vec<Vec<Monomial>>,
}

/// One equation per nonterminal; rules with the same degree and body
/// multiset merge into one monomial. Chain rules are substituted away so
/// the system stays proper; empty-word rules remain as constants.
pub fn algebraic_system(g: &WeightedGrammar) -> Result<PolySystem, GrammarError> {
    g.validate()?;
    let rules = inline_chains(&g.nonterminals, g.rules.clone())?;
    let idx = g.index();
    let mut eqs: Vec<BTreeMap<(u32, Vec<usize>), BigInt>> = vec![BTreeMap::new(); g.nonterminals.len()];
    for r in &rules {
        let mut vars: Vec<usize> = r.body.iter().map(|b| idx[b.as_str()]).collect();
        vars.sort_unstable();
        *eqs[idx[r.head.as_str()]].entry((r.degree, vars)).or_default() += 1;
    }
    Ok(PolySystem {
        names: g.nonterminals.clone(),
        axiom: idx[g.axiom.as_str()],
        equations: eqs
            .into_iter()
            .map(|eq| eq.into_iter().map(|((xdeg, vars), coeff)| Monomial { coeff, xdeg, vars }).collect())
            .collect(),
    })
}

impl PolySystem {
    pub fn var_count(&self) -> usize {
        self.names.len()
    }

    /// Variables the axiom depends on, the axiom included.
    pub fn reachable(&self) -> Vec<usize> {
        let mut seen = vec![false; self.var_count()];
        let mut stack = vec![self.axiom];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            for mono in &self.equations[v] {
                stack.extend(mono.vars.iter().copied());
            }
        }
        (0..self.var_count()).filter(|&v| seen[v]).collect()
    }

    /// Restriction to the variables reachable from the axiom.
    pub fn trimmed(&self) -> PolySystem {
        let keep = self.reachable();
        let mut remap = vec![usize::MAX; self.var_count()];
        for (i, &v) in keep.iter().enumerate() {
            remap[v] = i;
        }
        PolySystem {
            names: keep.iter().map(|&v| self.names[v].clone()).collect(),
            axiom: remap[self.axiom],
            equations: keep
                .iter()
                .map(|&v| {
                    self.equations[v]
                        .iter()
                        .map(|m| Monomial {
                            coeff: m.coeff.clone(),
                            xdeg: m.xdeg,
                            vars: m.vars.iter().map(|&u| remap[u]).collect(),
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn max_body_degree(&self) -> usize {
        self.equations.iter().flatten().map(|m| m.vars.len()).max().unwrap_or(0)
    }

    fn eval(&self, x: f64, y: &[f64]) -> Vec<f64> {
        self.equations
            .iter()
            .map(|eq| {
                eq.iter()
                    .map(|m| {
                        let c = m.coeff.to_f64().unwrap_or(f64::INFINITY);
                        c * x.powi(m.xdeg as i32) * m.vars.iter().map(|&v| y[v]).product::<f64>()
                    })
                    .sum()
            })
            .collect()
    }

    fn jacobian(&self, x: f64, y: &[f64]) -> Vec<Vec<f64>> {
        let n = self.var_count();
        let mut jac = vec![vec![0.0; n]; n];
        for (u, eq) in self.equations.iter().enumerate() {
            for m in eq {
                let c = m.coeff.to_f64().unwrap_or(f64::INFINITY) * x.powi(m.xdeg as i32);
                for (k, &v) in m.vars.iter().enumerate() {
                    let rest: f64 = m.vars.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &w)| y[w]).product();
                    jac[u][v] += c * rest;
                }
            }
        }
        jac
    }
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (u, eq) in self.equations.iter().enumerate() {
            write!(f, "{} =", self.names[u])?;
            if eq.is_empty() {
                write!(f, " 0")?;
            }
            for (i, m) in eq.iter().enumerate() {
                if i > 0 {
                    write!(f, " +")?;
                }
                let mut parts = Vec::new();
                if m.coeff != BigInt::from(1) || (m.xdeg == 0 && m.vars.is_empty()) {
                    parts.push(m.coeff.to_string());
                }
                match m.xdeg {
                    0 => {}
                    1 => parts.push("X".into()),
                    d => parts.push(format!("X^{d}")),
                }
                parts.extend(m.vars.iter().map(|&v| self.names[v].clone()));
                write!(f, " {}", parts.join("*"))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Coefficient of `X^n` in `prod_k s_k`, given series truncated at `n`.
fn product_coeff(series: &[&[BigInt]], n: usize) -> BigInt {
    match series.len() {
        0 => {
            if n == 0 {
                BigInt::from(1)
            } else {
                BigInt::zero()
            }
        }
        1 => series[0][n].clone(),
        2 => (0..=n).filter(|&i| !series[0][i].is_zero()).map(|i| &series[0][i] * &series[1][n - i]).sum(),
        _ => {
            let mut acc: Vec<BigInt> = series[0][..=n].to_vec();
            for s in &series[1..series.len() - 1] {
                let mut next = vec![BigInt::zero(); n + 1];
                for (i, a) in acc.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                    for j in 0..=n - i {
                        next[i + j] += a * &s[j];
                    }
                }
                acc = next;
            }
            let last = series[series.len() - 1];
            (0..=n).map(|i| &acc[i] * &last[n - i]).sum()
        }
    }
}

/// Exact coefficients `0..=n_max` of the axiom series, computed degree by
/// degree with a fixed-point iteration inside each degree.
pub fn system_coeffs(sys: &PolySystem, n_max: usize) -> Result<Vec<BigInt>, GrammarError> {
    Ok(system_coeffs_all(sys, n_max)?.swap_remove(sys.axiom))
}

/// Coefficients of every variable's series.
pub fn system_coeffs_all(sys: &PolySystem, n_max: usize) -> Result<Vec<Vec<BigInt>>, GrammarError> {
    let nv = sys.var_count();
    let mut c: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); n_max + 1]; nv];
    let has_degree_zero_vars = sys.equations.iter().flatten().any(|m| m.xdeg == 0 && !m.vars.is_empty());
    let max_rounds = if has_degree_zero_vars { nv + 2 } else { 2 };
    for n in 0..=n_max {
        let mut stable = false;
        for _ in 0..max_rounds {
            let mut changed = false;
            for u in 0..nv {
                let mut total = BigInt::zero();
                for m in &sys.equations[u] {
                    let d = m.xdeg as usize;
                    if d > n {
                        continue;
                    }
                    let series: Vec<&[BigInt]> = m.vars.iter().map(|&v| c[v].as_slice()).collect();
                    total += &m.coeff * product_coeff(&series, n - d);
                }
                if total != c[u][n] {
                    c[u][n] = total;
                    changed = true;
                }
            }
            if !changed {
                stable = true;
                break;
            }
        }
        if !stable {
            return Err(GrammarError::ImproperSystem(format!("coefficient of degree {n} does not stabilize")));
        }
    }
    Ok(c)
}

/// Bracket `[lo, hi]` on the radius of convergence.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RadiusBracket {
    pub lo: f64,
    pub hi: f64,
}

impl RadiusBracket {
    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Solves `A z = b` by Gaussian elimination with partial pivoting.
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if !(a[piv][col].abs() > 1e-300) {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                a[r][k] -= f * a[col][k];
            }
            b[r] -= f * b[col];
        }
    }
    let mut z = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|k| a[r][k] * z[k]).sum();
        z[r] = (b[r] - s) / a[r][r];
    }
    z.iter().all(|v| v.is_finite()).then_some(z)
}

fn i_minus(jac: &[Vec<f64>]) -> Vec<Vec<f64>> {
    jac.iter()
        .enumerate()
        .map(|(i, row)| row.iter().enumerate().map(|(j, &v)| if i == j { 1.0 - v } else { -v }).collect())
        .collect()
}

/// Least nonnegative solution of `y = P(x, y)` by Newton iteration from a
/// point below it, provided the solution is regular (`I - J` a nonsingular
/// M-matrix). `None` when x lies beyond the radius.
fn least_solution(sys: &PolySystem, x: f64, start: &[f64]) -> Option<Vec<f64>> {
    let mut y = start.to_vec();
    let mut best = f64::INFINITY;
    let mut stalled = 0;
    for _ in 0..300 {
        let p = sys.eval(x, &y);
        let r: Vec<f64> = p.iter().zip(&y).map(|(a, b)| a - b).collect();
        let step = solve_dense(i_minus(&sys.jacobian(x, &y)), r)?;
        // iterates increase monotonically towards the least solution
        if step.iter().any(|&s| s < -1e-6 * (1.0 + y.iter().cloned().fold(0.0, f64::max))) {
            return None;
        }
        let mut delta: f64 = 0.0;
        for (yi, s) in y.iter_mut().zip(&step) {
            *yi += s.max(0.0);
            delta = delta.max(s.abs() / (1.0 + yi.abs()));
        }
        if y.iter().any(|v| !v.is_finite() || *v > 1e150) {
            return None;
        }
        if delta < best {
            best = delta;
            stalled = 0;
        } else {
            stalled += 1;
        }
        if delta < 1e-15 || stalled >= 4 {
            break;
        }
    }
    // accept only a genuine regular solution
    let p = sys.eval(x, &y);
    let residual_ok = p.iter().zip(&y).all(|(a, b)| (a - b).abs() <= 1e-11 * (1.0 + a.abs() + b.abs()));
    if !residual_ok {
        return None;
    }
    let z = solve_dense(i_minus(&sys.jacobian(x, &y)), vec![1.0; y.len()])?;
    z.iter().all(|&v| v > 0.0).then_some(y)
}

/// Radius of convergence of the axiom series, bracketed by bisection on the
/// existence of a regular nonnegative solution. `Ok(None)` when the series
/// converges beyond `2^20` (for instance a polynomial).
pub fn system_radius(sys: &PolySystem, tol: f64) -> Result<Option<RadiusBracket>, GrammarError> {
    let sys = sys.trimmed();
    let n = sys.var_count();
    let zero = vec![0.0; n];
    let Some(mut y_lo) = least_solution(&sys, 0.0, &zero) else {
        return Err(GrammarError::ImproperSystem("no regular solution at X = 0".into()));
    };
    let mut lo = 0.0;
    let mut hi = 1.0;
    while let Some(y) = least_solution(&sys, hi, &y_lo) {
        lo = hi;
        y_lo = y;
        hi *= 2.0;
        if hi > (1u64 << 20) as f64 {
            return Ok(None);
        }
    }
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match least_solution(&sys, mid, &y_lo) {
            Some(y) => {
                lo = mid;
                y_lo = y;
            }
            None => hi = mid,
        }
    }
    Ok(Some(RadiusBracket { lo, hi }))
}

impl fmt::Display for RadiusBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}
