//! Verification engines for the main congruence theorem, the dissection
//! divisibility lemma, the mod-23 classification, and the open conjectures.
//!
//! Proven claims that fail produce hard refutations; conjecture scans report
//! refutations as findings. Congruence scans run in Z/mZ end to end;
//! divisibility checks run over exact integers, where the statement is
//! strictly stronger.

use crate::gen::{a_mod, partial_sum_f, xi_mod};
use crate::report::{Status, VerificationReport};
use crate::residues::{
    is_prime, kronecker_symbol, member_of_r, residue_sets, RMembership, ResidueError,
};
use crate::ring::IntegerRing;
use crate::series::{pochhammer, PochhammerKind, Series};

/// xi(pn + i) = 0 (mod p) for every i in T(p) and 0 <= n <= n_max.
/// Vacuously verified with zero checks when T(p) is empty.
pub fn verify_theorem1(p: u64, n_max: u64) -> Result<VerificationReport, ResidueError> {
    let sets = residue_sets(p)?;
    let mut report = VerificationReport::new("theorem1")
        .with_param("p", p as i64)
        .with_param("n_max", n_max as i64);
    if sets.t_is_empty() {
        report.note(format!("T({p}) is empty; claim is vacuous"));
        return Ok(report.finalize());
    }
    let limit = (p * (n_max + 1) - 1) as usize;
    let xi = xi_mod(limit, p);
    for &i in &sets.t {
        for n in 0..=n_max {
            let idx = (p * n + i) as usize;
            report.checked_count += 1;
            if xi[idx] != 0 {
                report.push_counterexample(
                    &[("n", n as i64), ("i", i as i64)],
                    format!("xi({idx}) = {} (mod {p})", xi[idx]),
                );
            }
        }
    }
    Ok(report.finalize())
}

fn divisibility_report(
    claim_id: &str,
    p: u64,
    n: u64,
    divisor: Series<IntegerRing>,
    divisor_desc: &str,
    conjecture: bool,
) -> Result<VerificationReport, ResidueError> {
    let sets = residue_sets(p)?;
    let mut report = VerificationReport::new(claim_id)
        .with_param("p", p as i64)
        .with_param("n", n as i64);
    if conjecture {
        report = report.conjecture();
    }
    let big_n = (p * n - 1) as usize;
    let f = partial_sum_f(big_n, &IntegerRing);
    let table = f.dissect(p).expect("p >= 2 and exact input");
    for i in 0..p {
        if sets.s.contains(&i) {
            continue;
        }
        let component = table.component(i as usize);
        let (quotient, divides) = component
            .divide_exact(&divisor)
            .expect("exact nonzero divisor");
        report.checked_count += 1;
        if divides {
            report.note(format!(
                "A_{p}({big_n},{i},Q) / {divisor_desc} = {}",
                quotient.format_with("Q")
            ));
        } else {
            report.push_counterexample(
                &[("i", i as i64)],
                format!(
                    "{divisor_desc} does not divide A_{p}({big_n},{i},Q) = {}",
                    component.format_with("Q")
                ),
            );
        }
    }
    Ok(report.finalize())
}

/// (1-Q)^n divides A_p(pn-1, i, Q) for every i outside S(p), over Z.
/// The quotient alpha_p(n,i,Q) is recorded on success.
pub fn verify_lemma5(p: u64, n: u64) -> Result<VerificationReport, ResidueError> {
    assert!(n >= 1);
    let divisor = Series::from_i64_coeffs(IntegerRing, &[1, -1], crate::series::Mode::Exact)
        .pow(n as usize)
        .expect("same ring");
    divisibility_report("lemma5", p, n, divisor, &format!("(1-Q)^{n}"), false)
}

/// Conjectured strengthening: (Q;Q)_n divides A_p(pn-1, i, Q).
pub fn verify_strengthened_lemma5(p: u64, n: u64) -> Result<VerificationReport, ResidueError> {
    assert!(n >= 1);
    let divisor = pochhammer(&IntegerRing, PochhammerKind::QAscending, n as usize, None)
        .expect("exact kind");
    divisibility_report(
        "conj-qqn-divisibility",
        p,
        n,
        divisor,
        &format!("(Q;Q)_{n}"),
        true,
    )
}

/// Section-4 classification: for primes 5 <= p <= p_max, p != 23,
/// p mod 23 in R implies T(p) nonempty (proven), and empirically
/// T(p) nonempty iff (-23/p) = -1. Density of nonempty-T primes is recorded.
pub fn verify_classification(p_max: u64) -> VerificationReport {
    let mut report =
        VerificationReport::new("classification").with_param("p_max", p_max as i64);
    let mut primes_seen: i64 = 0;
    let mut t_nonempty: i64 = 0;
    for p in 5..=p_max {
        if !is_prime(p) {
            continue;
        }
        if p == 23 {
            report.note("p=23 excluded: discriminant prime".to_string());
            continue;
        }
        primes_seen += 1;
        let sets = residue_sets(p).expect("p is prime");
        let nonempty = !sets.t_is_empty();
        if nonempty {
            t_nonempty += 1;
        }
        report.checked_count += 1;
        if member_of_r(p).expect("p is prime") == RMembership::Member && !nonempty {
            report.push_counterexample(
                &[("p", p as i64)],
                "p mod 23 in R but T(p) is empty".to_string(),
            );
        }
        let symbol = kronecker_symbol(-23, p as i64);
        if nonempty != (symbol == -1) {
            report.push_counterexample(
                &[("p", p as i64)],
                format!("T(p) nonempty = {nonempty} but (-23/p) = {symbol}"),
            );
        }
    }
    report.parameters.insert("prime_count".to_string(), primes_seen);
    report
        .parameters
        .insert("t_nonempty_count".to_string(), t_nonempty);
    if primes_seen > 0 {
        report.note(format!(
            "density of nonempty-T primes: {t_nonempty}/{primes_seen}"
        ));
    }
    report.finalize()
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ScanError {
    #[error(transparent)]
    Residue(#[from] ResidueError),
    #[error("p^j = {0}^{1} does not fit below 2^63")]
    ModulusTooLarge(u64, u32),
}

/// Full-residue scan for xi(p^j n + b) = 0 (mod p^j): every b in [0, p^j - 1]
/// is tried for 0 <= n <= n_max; survivors are candidates, not proofs, so the
/// outcome is inconclusive unless nothing survives. Surviving b whose residue
/// mod p lies in T(p) are annotated.
pub fn scan_prime_power(p: u64, j: u32, n_max: u64) -> Result<VerificationReport, ScanError> {
    if !is_prime(p) {
        return Err(ResidueError::NotPrime(p).into());
    }
    let modulus = p
        .checked_pow(j)
        .filter(|&m| m < (1u64 << 63))
        .ok_or(ScanError::ModulusTooLarge(p, j))?;
    let mut report = VerificationReport::new("conj-prime-power")
        .with_param("p", p as i64)
        .with_param("j", j as i64)
        .with_param("n_max", n_max as i64)
        .conjecture();
    let limit = (modulus * (n_max + 1) - 1) as usize;
    let xi = xi_mod(limit, modulus);
    let sets = residue_sets(p)?;
    let mut survivors = Vec::new();
    for b in 0..modulus {
        let mut survives = true;
        for n in 0..=n_max {
            report.checked_count += 1;
            if xi[(modulus * n + b) as usize] != 0 {
                survives = false;
                break;
            }
        }
        if survives {
            survivors.push(b);
        }
    }
    report.note(format!(
        "scan depth n <= {n_max}; survivors are candidates only, completeness is never claimed"
    ));
    if survivors.is_empty() {
        report.note(format!(
            "no residue b survives: no congruence xi({modulus}n+b) = 0 (mod {modulus}) at this depth"
        ));
        report.status = Status::Verified;
    } else {
        let listed = survivors
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
            .join(",");
        report.note(format!("surviving residues b: {{{listed}}}"));
        let lifted: Vec<String> = survivors
            .iter()
            .filter(|&&b| sets.t.contains(&(b % p)))
            .map(|b| b.to_string())
            .collect();
        report.note(format!(
            "survivors with b mod {p} in T({p}): {{{}}}",
            lifted.join(",")
        ));
        report.status = Status::Inconclusive;
    }
    Ok(report)
}

/// a(5n + 4) = 0 (mod 5) for 0 <= n <= n_max (open conjecture).
pub fn verify_a_conjecture(n_max: u64) -> VerificationReport {
    let mut report = VerificationReport::new("conj-a-mod-5")
        .with_param("n_max", n_max as i64)
        .conjecture();
    let limit = (5 * n_max + 4) as usize;
    let a = a_mod(limit, 5);
    for n in 0..=n_max {
        let idx = (5 * n + 4) as usize;
        report.checked_count += 1;
        if a[idx] != 0 {
            report.push_counterexample(
                &[("n", n as i64)],
                format!("a({idx}) = {} (mod 5)", a[idx]),
            );
        }
    }
    report.finalize()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem1_p5_includes_known_instances() {
        let r = verify_theorem1(5, 1).unwrap();
        assert_eq!(r.status, Status::Verified);
        // i in {3,4}, n in {0,1}: xi(3)=5, xi(4)=15, xi(8)=5335, xi(9)=31240
        assert_eq!(r.checked_count, 4);
    }

    #[test]
    fn theorem1_p7_single_instance() {
        let r = verify_theorem1(7, 0).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.checked_count, 1); // xi(6) = 217 = 7*31
    }

    #[test]
    fn theorem1_vacuous_for_p13() {
        let r = verify_theorem1(13, 50).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.checked_count, 0);
    }

    #[test]
    fn lemma5_small_cases() {
        let r = verify_lemma5(5, 1).unwrap();
        assert_eq!(r.status, Status::Verified);
        // A_5(4,3,Q) = 1 - Q and A_5(4,4,Q) = 1 - Q, quotients recorded
        assert!(r.notes.iter().any(|n| n.contains("A_5(4,3,Q)")));
        assert!(r.notes.iter().any(|n| n.contains("A_5(4,4,Q)")));

        let r7 = verify_lemma5(7, 1).unwrap();
        assert_eq!(r7.status, Status::Verified);
        assert_eq!(r7.checked_count, 3); // i in {3,4,6}, complement of S(7)

        let r53 = verify_lemma5(5, 3).unwrap();
        assert_eq!(r53.status, Status::Verified);
    }

    #[test]
    fn strengthened_lemma5_small_cases() {
        let r = verify_strengthened_lemma5(5, 2).unwrap();
        assert_eq!(r.status, Status::Verified);
        assert!(r.conjecture);
        let r11 = verify_strengthened_lemma5(11, 2).unwrap();
        assert_eq!(r11.status, Status::Verified);
        assert_eq!(r11.checked_count, 5); // i in {3,6,8,9,10}
    }

    #[test]
    fn classification_to_23() {
        let r = verify_classification(23);
        assert_eq!(r.status, Status::Verified);
        // primes 5,7,11,13,17,19 counted; 23 excluded
        assert_eq!(r.parameters["prime_count"], 6);
        // T nonempty for 5,7,11,17,19; empty for 13
        assert_eq!(r.parameters["t_nonempty_count"], 5);
        assert!(r.notes.iter().any(|n| n.contains("discriminant")));
    }

    #[test]
    fn prime_power_scan_n0_trivial_survivors() {
        let r = scan_prime_power(5, 2, 0).unwrap();
        // at n_max = 0 every b with xi(b) = 0 (mod 25) survives
        let xi = xi_mod(24, 25);
        let expect: Vec<String> = (0..25u64)
            .filter(|&b| xi[b as usize] == 0)
            .map(|b| b.to_string())
            .collect();
        assert!(r
            .notes
            .iter()
            .any(|n| n.contains(&format!("{{{}}}", expect.join(",")))));
    }

    #[test]
    fn prime_power_scan_mod_25() {
        let r = scan_prime_power(5, 2, 20).unwrap();
        assert_eq!(r.status, Status::Inconclusive);
        // the known mod-25 candidates 23 and 24 must survive any depth we scan
        let survivors = r
            .notes
            .iter()
            .find(|n| n.starts_with("surviving residues"))
            .unwrap();
        assert!(survivors.contains("23"));
        assert!(survivors.contains("24"));
    }

    #[test]
    fn a_conjecture_small() {
        let r = verify_a_conjecture(1);
        assert_eq!(r.status, Status::Verified);
        assert_eq!(r.checked_count, 2); // a(4) = 5, a(9) = -7795
    }
}
