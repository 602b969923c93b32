use crate::elemset::ElemSet;
use crate::matroid::MatroidHandle;

use super::digraph::digraph_unchecked;
use super::tower::{approx, bit, members, Subset, Tower};

/// Structural facts every tower satisfies. Returns one message per failure;
/// empty when all hold.
///
/// For each `k` and nonempty `X` inside `[k-1]`: `J_{Xk}` is independent,
/// `{e_ik : i in X} + e_k` is independent, and `e_{Xk}` lies in the closures
/// of `J_{Xk}`, of `{e_X, e_k}` and of `{e_ik : i in X}`; the triple
/// `e_X, e_{Xk}, e_k` is a triangle or has `e_{Xk} ≈ e_X ≉ e_k`. Every
/// `J_X` is independent and spans `e_X`, the joints are a basis of `E(T)`,
/// every `k > 1` has an in-arc, and G(T) is connected.
pub fn tower_fact_failures(m: &MatroidHandle, t: &Tower) -> Vec<String> {
    let mut bad = Vec::new();
    let n = t.order();
    let ind = |s: &ElemSet| m.rk(s) == s.len();
    let spans = |s: &ElemSet, e: usize| m.rk(&s.with(e)) == m.rk(s);
    for k in 2..=n {
        for x in 1..bit(k) {
            let xk = x | bit(k);
            let jxk = t.joints_of(xk);
            let e_xk = t.get(xk);
            if !ind(&jxk) {
                bad.push(format!("J_{xk:#b} dependent"));
            }
            let arms: ElemSet = members(x).into_iter().map(|i| t.get(bit(i) | bit(k))).collect();
            let arms_k = arms.with(t.joint(k));
            if arms_k.len() != members(x).len() + 1 || !ind(&arms_k) {
                bad.push(format!("{{e_ik}} + e_k dependent for X={x:#b}, k={k}"));
            }
            if !spans(&jxk, e_xk) {
                bad.push(format!("e_{xk:#b} outside cl(J)"));
            }
            let pair: ElemSet = [t.get(x), t.joint(k)].into_iter().collect();
            if !spans(&pair, e_xk) {
                bad.push(format!("e_{xk:#b} outside cl(e_X, e_k)"));
            }
            if !spans(&arms, e_xk) {
                bad.push(format!("e_{xk:#b} outside cl(e_ik)"));
            }
            let (a, b, c) = (t.get(x), e_xk, t.joint(k));
            let tri = m.is_circuit_ids(&[a, b, c]);
            if !(tri || approx(m, b, a) && !approx(m, a, c)) {
                bad.push(format!("triangle dichotomy fails at X={x:#b}, k={k}"));
            }
        }
    }
    for x in 1..=t.full() {
        let j = t.joints_of(x as Subset);
        if !ind(&j) || !spans(&j, t.get(x)) {
            bad.push(format!("J_{x:#b} does not independently span e_X"));
        }
    }
    let joints = t.joints();
    let all = t.elements();
    if joints.len() != n || m.rk(&all) != n || m.rk(&joints) != n {
        bad.push("joints are not a basis of E(T)".into());
    }
    let g = digraph_unchecked(m, t);
    for k in 2..=n {
        if g.pi(k).is_none() {
            bad.push(format!("{k} has no in-arc"));
        }
    }
    if !g.is_connected() {
        bad.push("G(T) is disconnected".into());
    }
    bad
}
