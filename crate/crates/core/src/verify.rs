//! Differential and identity checks over a range of indices.

use std::fmt;

use crate::fastfib::{
    binet_precision, fib_alternate, fib_binet_pow2, fib_golden, fib_rgolden, fib_takahashi,
    fib_threesquare, lucas_golden, OpCount,
};
use crate::numeric::{Arith, Nat, PrecisionPolicy};
use crate::sequences::{fib_table, general_linear, general_via_fib, SeqParams};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: u64,
    pub failed: u64,
    /// First failing index, if any.
    pub first_failure: Option<u64>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            passed: 0,
            failed: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, n: u64, ok: bool) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            self.first_failure.get_or_insert(n);
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> u64 {
        self.checks.iter().map(|c| c.passed).sum()
    }

    pub fn failed(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn ok(&self) -> bool {
        self.failed() == 0
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.failed == 0 { "PASS" } else { "FAIL" };
            write!(f, "{status} {:<22} passed={} failed={}", c.name, c.passed, c.failed)?;
            if let Some(n) = c.first_failure {
                write!(f, " first_failure={n}")?;
            }
            writeln!(f)?;
        }
        write!(f, "total passed={} failed={}", self.passed(), self.failed())
    }
}

fn add(a: &Nat, b: &Nat) -> Nat {
    a.plus(b).expect("natural arithmetic")
}

fn mul(a: &Nat, b: &Nat) -> Nat {
    a.times(b).expect("natural arithmetic")
}

/// Runs every fast algorithm against the linear oracle for `n ∈ [0, max_n]`
/// and checks the recurrence identities they rely on.
pub fn verify(max_n: u64) -> VerifyReport {
    // F_0 ..= F_{2·max_n + 2} covers every doubling identity up to k = max_n.
    let fib = fib_table(2 * max_n + 2);
    let f = |i: u64| &fib[i as usize];
    // F_{−1} = 1 extends the table downward by one for k = 1.
    let f_minus = |i: u64, back: u64| -> Nat {
        if i >= back {
            fib[(i - back) as usize].clone()
        } else {
            Nat::one()
        }
    };
    let adaptive = PrecisionPolicy::default();
    let mut checks = Vec::new();

    let mut alternate = Check::new("alternate");
    let mut threesquare = Check::new("threesquare");
    let mut takahashi = Check::new("takahashi");
    let mut golden = Check::new("golden");
    let mut rgolden = Check::new("rgolden");
    for n in 0..=max_n {
        let want = f(n);
        alternate.record(n, fib_alternate(n, &mut OpCount::new()) == *want);
        threesquare.record(n, fib_threesquare(n, &mut OpCount::new()) == *want);
        takahashi.record(n, fib_takahashi(n, &mut OpCount::new()) == *want);
        golden.record(n, fib_golden(n, adaptive, &mut OpCount::new()).as_ref() == Ok(want));
        rgolden.record(n, fib_rgolden(n, adaptive).as_ref() == Ok(want));
    }
    checks.extend([alternate, threesquare, takahashi, golden, rgolden]);

    let mut binet = Check::new("binet_pow2");
    let mut n = 1u64;
    while n <= max_n {
        binet.record(n, fib_binet_pow2(n, binet_precision(n)).as_ref() == Ok(f(n)));
        n *= 2;
    }
    checks.push(binet);

    let mut recurrence = Check::new("recurrence");
    for n in 2..=max_n {
        recurrence.record(n, *f(n) == add(f(n - 1), f(n - 2)));
    }
    checks.push(recurrence);

    let mut cassini = Check::new("cassini");
    for n in 1..=max_n {
        let lhs = mul(f(n + 1), f(n - 1));
        let sq = mul(f(n), f(n));
        let ok = if n % 2 == 0 {
            lhs == add(&sq, &Nat::one())
        } else {
            add(&lhs, &Nat::one()) == sq
        };
        cassini.record(n, ok);
    }
    checks.push(cassini);

    let mut doubling = Check::new("doubling_identities");
    for k in 1..=max_n {
        let fk = f(k);
        let fk1 = f(k + 1);
        let fkm1 = f_minus(k, 1);
        let fkm2 = f_minus(k, 2);
        let even = *f(2 * k) == mul(fk, &add(fk1, &fkm1));
        let even_lo = f_minus(2 * k, 2) == mul(&fkm1, &add(fk, &fkm2));
        let odd_hi = *f(2 * k + 1) == add(&mul(fk1, fk1), &mul(fk, fk));
        let odd_lo = *f(2 * k - 1) == add(&mul(fk, fk), &mul(&fkm1, &fkm1));
        doubling.record(k, even && even_lo && odd_hi && odd_lo);
    }
    checks.push(doubling);

    let mut lucas = Check::new("lucas_bridge");
    let (mut l_prev, mut l_cur) = (Nat::from(2), Nat::one());
    for n in 1..=max_n {
        // l_cur = L_n
        let ok = l_cur == add(f(n - 1), f(n + 1))
            && lucas_golden(n, adaptive).as_ref() == Ok(&l_cur);
        lucas.record(n, ok);
        let next = add(&l_prev, &l_cur);
        l_prev = std::mem::replace(&mut l_cur, next);
    }
    checks.push(lucas);

    let mut general = Check::new("general_via_fib");
    let params = [
        SeqParams::fibonacci(),
        SeqParams::lucas(),
        SeqParams::new(3u64, 4u64),
        SeqParams::new(1_000_000u64, 7u64),
        SeqParams::new(271_828u64, 314_159u64),
    ];
    let limit = max_n.min(500);
    for p in &params {
        for n in 1..=limit {
            let via = general_via_fib(p, n, |i| Ok(fib_alternate(i, &mut OpCount::new())));
            general.record(n, via == Ok(general_linear(p, n)));
        }
    }
    checks.push(general);

    VerifyReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range_passes() {
        let r = verify(300);
        assert!(r.ok(), "{r}");
        assert!(r.passed() > 2000);
        let text = r.to_string();
        assert!(text.contains("PASS alternate"));
        assert!(text.ends_with(&format!("total passed={} failed=0", r.passed())));
    }

    #[test]
    fn failures_are_counted() {
        let mut c = Check::new("x");
        c.record(3, true);
        c.record(5, false);
        c.record(9, false);
        assert_eq!((c.passed, c.failed, c.first_failure), (1, 2, Some(5)));
    }
}
