//! Exact modular arithmetic over `(Z/nZ)^×` for prime `n`.
//!
//! Everything here is integer arithmetic. Subgroups are the unique order-`m`
//! subgroup `K` of the cyclic group `(Z/nZ)^×`, and cosets are always listed in
//! the order `K, xK, x²K, …` for the smallest primitive root `x`, so coset
//! indices are reproducible across runs.

use crate::report::VerificationReport;
use crate::{Error, Result};

/// Bases that make Miller-Rabin deterministic for every 64-bit input.
const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

pub fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    if n == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Deterministic primality test, exact for all `u64`.
pub fn is_prime(n: u64) -> Result<bool> {
    if n < 2 {
        return Err(Error::TooSmall { name: "n", min: 2, got: n });
    }
    for &p in &MR_BASES {
        if n == p {
            return Ok(true);
        }
        if n % p == 0 {
            return Ok(false);
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &MR_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return Ok(false);
    }
    Ok(true)
}

fn require_prime(n: u64) -> Result<()> {
    if is_prime(n)? {
        Ok(())
    } else {
        Err(Error::NotPrime(n))
    }
}

/// Distinct prime factors by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Primes in `[2, limit]` by sieve.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= limit {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Multiplicative order of `a` modulo `n`, or `None` when `gcd(a, n) != 1`.
pub fn multiplicative_order(a: u64, n: u64) -> Option<u64> {
    if n < 2 || gcd(a % n, n) != 1 {
        return None;
    }
    if n == 2 {
        return Some(1);
    }
    let mut x = a % n;
    let mut k = 1;
    while x != 1 {
        x = mul_mod(x, a, n);
        k += 1;
    }
    Some(k)
}

/// A prime modulus together with a fixed primitive root.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupContext {
    n: u64,
    generator: u64,
}

impl GroupContext {
    /// Uses the smallest primitive root of `n`.
    pub fn new(n: u64) -> Result<Self> {
        find_generator(n)
    }

    pub fn with_generator(n: u64, generator: u64) -> Result<Self> {
        require_prime(n)?;
        if n < 3 {
            return Err(Error::TooSmall { name: "n", min: 3, got: n });
        }
        if !(2..n).contains(&generator) || multiplicative_order(generator, n) != Some(n - 1) {
            return Err(Error::Invalid(format!("{generator} is not a primitive root modulo {n}")));
        }
        Ok(Self { n, generator })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// `x^e mod n`.
    pub fn power(&self, e: u64) -> u64 {
        pow_mod(self.generator, e, self.n)
    }
}

/// Smallest `x ≥ 2` whose order modulo the prime `n` is `n - 1`.
pub fn find_generator(n: u64) -> Result<GroupContext> {
    if n < 3 {
        return Err(Error::TooSmall { name: "n", min: 3, got: n });
    }
    require_prime(n)?;
    let factors = prime_factors(n - 1);
    let generator = (2..n)
        .find(|&x| factors.iter().all(|&p| pow_mod(x, (n - 1) / p, n) != 1))
        .expect("every prime has a primitive root");
    Ok(GroupContext { n, generator })
}

/// The unique subgroup `K` of order `m` in `(Z/nZ)^×`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    context: GroupContext,
    elements: Vec<u64>,
    index: u64,
}

impl Subgroup {
    pub fn context(&self) -> &GroupContext {
        &self.context
    }

    pub fn n(&self) -> u64 {
        self.context.n
    }

    /// Sorted elements.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// `m = |K|`.
    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    /// `r = (n - 1) / m`, the number of cosets.
    pub fn index(&self) -> u64 {
        self.index
    }

    pub fn contains(&self, t: u64) -> bool {
        self.elements.binary_search(&(t % self.context.n)).is_ok()
    }

    pub fn contains_minus_one(&self) -> bool {
        self.contains(self.context.n - 1)
    }
}

pub fn subgroup_of_order(ctx: &GroupContext, m: u64) -> Result<Subgroup> {
    let n = ctx.n;
    if m == 0 || (n - 1) % m != 0 {
        return Err(Error::NotDivisor { n, m });
    }
    let r = (n - 1) / m;
    let k = ctx.power(r);
    let mut elements = Vec::with_capacity(m as usize);
    let mut e = 1;
    for _ in 0..m {
        elements.push(e);
        e = mul_mod(e, k, n);
    }
    elements.sort_unstable();
    Ok(Subgroup { context: *ctx, elements, index: r })
}

/// The cosets `K, xK, …, x^{r-1}K` and the coset index of every nonzero residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    subgroup: Subgroup,
    cosets: Vec<Vec<u64>>,
    coset_of: Vec<Option<usize>>,
}

impl CosetTable {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn cosets(&self) -> &[Vec<u64>] {
        &self.cosets
    }

    pub fn coset(&self, d: usize) -> &[u64] {
        &self.cosets[d]
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    /// Index `d` with `t ∈ x^d K`; `None` for `t ≡ 0`.
    pub fn coset_index(&self, t: u64) -> Option<usize> {
        self.coset_of[(t % self.subgroup.n()) as usize]
    }

    /// The representative `x^d` of coset `d`.
    pub fn representative(&self, d: usize) -> u64 {
        self.subgroup.context.power(d as u64)
    }
}

pub fn coset_table(sub: &Subgroup) -> CosetTable {
    let ctx = sub.context;
    let n = ctx.n;
    let r = sub.index as usize;
    let mut coset_of = vec![None; n as usize];
    let mut cosets = Vec::with_capacity(r);
    for d in 0..r {
        let rep = ctx.power(d as u64);
        let mut coset: Vec<u64> = sub.elements.iter().map(|&k| mul_mod(rep, k, n)).collect();
        coset.sort_unstable();
        for &t in &coset {
            coset_of[t as usize] = Some(d);
        }
        cosets.push(coset);
    }
    CosetTable { subgroup: sub.clone(), cosets, coset_of }
}

/// `a[t] = |{(k_i, k_j) ∈ K×K : k_i − k_j ≡ t}|` for every residue `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceCounts {
    n: u64,
    m: u64,
    counts: Vec<u64>,
}

impl DifferenceCounts {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn get(&self, t: u64) -> u64 {
        self.counts[(t % self.n) as usize]
    }

    /// Every nonzero difference occurs equally often.
    pub fn is_difference_set(&self) -> bool {
        self.counts[1..].windows(2).all(|w| w[0] == w[1])
    }
}

/// Difference counts of an arbitrary residue set; entries are reduced mod `n`.
pub fn difference_counts_of(n: u64, set: &[u64]) -> DifferenceCounts {
    let mut counts = vec![0u64; n as usize];
    for &ki in set {
        for &kj in set {
            let t = (ki % n + n - kj % n) % n;
            counts[t as usize] += 1;
        }
    }
    DifferenceCounts { n, m: set.len() as u64, counts }
}

pub fn difference_counts(sub: &Subgroup) -> DifferenceCounts {
    difference_counts_of(sub.n(), &sub.elements)
}

pub fn is_difference_set(sub: &Subgroup) -> bool {
    difference_counts(sub).is_difference_set()
}

/// One side of a translation degree: a coset `x^d K` or the set `{0}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetRef {
    Coset(usize),
    Zero,
}

/// `|(1 + A) ∩ B|` for `A`, `B` each a coset of `K` or `{0}`.
pub fn translation_degree(table: &CosetTable, from: CosetRef, to: CosetRef) -> Result<u64> {
    let n = table.subgroup.n();
    let check = |d: usize| {
        if d < table.len() {
            Ok(())
        } else {
            Err(Error::Invalid(format!("coset index {d} out of range 0..{}", table.len())))
        }
    };
    match (from, to) {
        (CosetRef::Zero, CosetRef::Zero) => {
            Err(Error::Invalid("translation degree needs at least one coset".into()))
        }
        (CosetRef::Zero, CosetRef::Coset(d)) => {
            check(d)?;
            Ok(u64::from(table.coset_index(1) == Some(d)))
        }
        (CosetRef::Coset(d), CosetRef::Zero) => {
            check(d)?;
            Ok(u64::from(table.coset_index(n - 1) == Some(d)))
        }
        (CosetRef::Coset(d1), CosetRef::Coset(d2)) => {
            check(d1)?;
            check(d2)?;
            let hits = table.cosets[d1]
                .iter()
                .filter(|&&t| table.coset_index((t + 1) % n) == Some(d2))
                .count();
            Ok(hits as u64)
        }
    }
}

/// Full `r × r` matrix of translation degrees `a_{x^i K, x^j K}` plus the
/// degrees into `{0}`.
fn translation_matrix(table: &CosetTable) -> (Vec<Vec<u64>>, Vec<u64>) {
    let r = table.len();
    let n = table.subgroup.n();
    let mut deg = vec![vec![0u64; r]; r];
    let mut to_zero = vec![0u64; r];
    for (i, coset) in table.cosets.iter().enumerate() {
        for &t in coset {
            match table.coset_index((t + 1) % n) {
                Some(j) => deg[i][j] += 1,
                None => to_zero[i] += 1,
            }
        }
    }
    (deg, to_zero)
}

/// Checks the combinatorial identities relating difference counts, cosets
/// and translation degrees for the given subgroup.
///
/// Identities that only hold in one parity regime (symmetry of translation
/// degrees needs `−1 ∈ K`, the unit gap needs `r = 3`, the explicit counts
/// need `r = 2`) are evaluated only where they apply.
pub fn verify_translation_identities(sub: &Subgroup) -> VerificationReport {
    let n = sub.n();
    let m = sub.order();
    let r = sub.index() as usize;
    let tag = format!("n={n} m={m} r={r}");
    let table = coset_table(sub);
    let counts = difference_counts(sub);
    let (deg, to_zero) = translation_matrix(&table);
    let ctx = sub.context();
    let mut report = VerificationReport::new();

    // a_t depends only on the coset of t.
    let mut bad = None;
    for t in 1..n {
        let d = table.coset_index(t).unwrap();
        if counts.get(t) != counts.get(ctx.power(d as u64)) {
            bad = Some(t);
            break;
        }
    }
    report.record(
        format!("difference counts constant on cosets ({tag})"),
        bad.is_none(),
        bad.map_or("all t".into(), |t| format!("t={t}")),
    );

    // a_{x^d} = a_{-K, x^d K} always; with -1 ∈ K this reads a_{x^d} = a_{K, x^d K}.
    let minus_k = table.coset_index(n - 1).unwrap();
    let link: Vec<(u64, u64)> =
        (0..r).map(|d| (counts.get(ctx.power(d as u64)), deg[minus_k][d])).collect();
    let ok = link.iter().all(|(a, b)| a == b);
    report.record(
        format!("a_t equals translation degree from -K ({tag})"),
        ok,
        format!("(a_x^d, a_-K,x^dK) = {link:?}"),
    );
    if sub.contains_minus_one() {
        let ok = (0..r).all(|d| counts.get(ctx.power(d as u64)) == deg[0][d]);
        report.record(format!("a_t = a_(K,tK) ({tag})"), ok, format!("row K = {:?}", deg[0]));

        let mut bad = None;
        'outer: for i in 0..r {
            for j in 0..r {
                if deg[i][j] != deg[j][i] {
                    bad = Some((i, j));
                    break 'outer;
                }
            }
        }
        report.record(
            format!("translation degrees symmetric ({tag})"),
            bad.is_none(),
            bad.map_or("all pairs".into(), |(i, j)| format!("i={i} j={j}")),
        );
    }

    let mut bad = None;
    'outer: for i in 0..r {
        for j in 0..r {
            let (i2, j2) = ((r - i) % r, (r - i + j) % r);
            if deg[i][j] != deg[i2][j2] {
                bad = Some((i, j));
                break 'outer;
            }
        }
    }
    report.record(
        format!("translation degrees invariant under coset shift ({tag})"),
        bad.is_none(),
        bad.map_or("all pairs".into(), |(i, j)| format!("i={i} j={j}")),
    );

    let sums: Vec<u64> = (0..r).map(|i| to_zero[i] + deg[i].iter().sum::<u64>()).collect();
    report.record(
        format!("translation degree row sums equal m ({tag})"),
        sums.iter().all(|&s| s == m),
        format!("row sums {sums:?}"),
    );

    let minus_one_in_k = sub.contains_minus_one();
    let parity_ok = if n % 2 == 0 || m % 2 == 0 {
        minus_one_in_k
    } else {
        !minus_one_in_k && r % 2 == 0 && table.coset_index(n - 1) == Some(r / 2)
    };
    report.record(
        format!("-1 in K iff n or m even, else -1 in x^(r/2)K ({tag})"),
        parity_ok,
        format!("-1 in coset {:?}", table.coset_index(n - 1)),
    );

    if r == 3 {
        let gap = deg[1][2] as i64 - deg[0][0] as i64;
        report.record(
            format!("a_(xK,x^2K) - a_(K,K) = 1 ({tag})"),
            gap == 1,
            format!("a_(xK,x^2K)={} a_(K,K)={}", deg[1][2], deg[0][0]),
        );
    }

    if r == 2 {
        let a1 = counts.get(1);
        let ax = counts.get(ctx.generator());
        let ok = if (n - 1) % 4 == 0 {
            2 * a1 + 2 == m && 2 * ax == m
        } else {
            2 * a1 + 1 == m && 2 * ax + 1 == m && !minus_one_in_k
        };
        report.record(format!("index-2 difference counts ({tag})"), ok, format!("a_1={a1} a_x={ax}"));
        report.record(
            format!("index-2 subgroup is a difference set iff n != 1 mod 4 ({tag})"),
            counts.is_difference_set() == (n % 4 != 1),
            format!("difference set: {}", counts.is_difference_set()),
        );
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_is_prime(n: u64) -> bool {
        n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn primality_small() {
        assert!(is_prime(2).unwrap());
        assert!(is_prime(499).unwrap());
        assert!(!is_prime(1008).unwrap());
        for n in 2..5000 {
            assert_eq!(is_prime(n).unwrap(), brute_is_prime(n), "n={n}");
        }
    }

    #[test]
    fn primality_large() {
        assert!(is_prime(18_446_744_073_709_551_557).unwrap());
        assert!(!is_prime(18_446_744_073_709_551_557 - 2).unwrap());
        // Strong pseudoprime to bases 2..=37 would be needed to fool this; use a
        // Carmichael number and a product of two large primes.
        assert!(!is_prime(561).unwrap());
        assert!(!is_prime(4_294_967_291 * 4_294_967_279).unwrap());
        assert!(is_prime((1 << 61) - 1).unwrap());
    }

    #[test]
    fn primality_rejects_small() {
        assert!(is_prime(0).is_err());
        assert!(is_prime(1).is_err());
    }

    #[test]
    fn smallest_generators() {
        // Brute force: smallest candidate whose powers hit every residue.
        for n in [3u64, 5, 7, 11, 13, 17, 19, 23, 251, 499] {
            let expected = (2..n)
                .find(|&x| {
                    let mut seen = vec![false; n as usize];
                    let mut e = 1;
                    for _ in 0..n - 1 {
                        seen[e as usize] = true;
                        e = e * x % n;
                    }
                    seen[1..].iter().all(|&s| s)
                })
                .unwrap();
            assert_eq!(find_generator(n).unwrap().generator(), expected, "n={n}");
        }
        assert_eq!(find_generator(7).unwrap().generator(), 3);
        assert_eq!(find_generator(13).unwrap().generator(), 2);
        assert_eq!(find_generator(3).unwrap().generator(), 2);
        assert_eq!(find_generator(15), Err(Error::NotPrime(15)));
        assert!(find_generator(2).is_err());
    }

    #[test]
    fn with_generator_validates() {
        assert!(GroupContext::with_generator(7, 5).is_ok());
        assert!(GroupContext::with_generator(7, 2).is_err());
    }

    #[test]
    fn subgroups() {
        let ctx7 = find_generator(7).unwrap();
        assert_eq!(subgroup_of_order(&ctx7, 3).unwrap().elements(), &[1, 2, 4]);
        let ctx13 = find_generator(13).unwrap();
        let squares = subgroup_of_order(&ctx13, 6).unwrap();
        assert_eq!(squares.elements(), &[1, 3, 4, 9, 10, 12]);
        assert_eq!(squares.index(), 2);
        let whole = subgroup_of_order(&ctx13, 12).unwrap();
        assert_eq!(whole.elements(), (1..13).collect::<Vec<_>>().as_slice());
        assert_eq!(subgroup_of_order(&ctx13, 5), Err(Error::NotDivisor { n: 13, m: 5 }));
    }

    #[test]
    fn subgroups_exhaustive() {
        for n in primes_up_to(300).into_iter().filter(|&p| p > 2) {
            let ctx = find_generator(n).unwrap();
            for m in divisors(n - 1) {
                let sub = subgroup_of_order(&ctx, m).unwrap();
                let el = sub.elements();
                assert_eq!(el.len() as u64, m);
                assert!(sub.contains(1));
                for &a in el {
                    for &b in el {
                        assert!(sub.contains(a * b % n), "n={n} m={m}");
                    }
                }
                let r = (n - 1) / m;
                let mut powers: Vec<u64> = (1..n).map(|t| pow_mod(t, r, n)).collect();
                powers.sort_unstable();
                powers.dedup();
                assert_eq!(powers, el, "r-th powers, n={n} m={m}");
            }
        }
    }

    #[test]
    fn coset_tables() {
        let ctx = find_generator(13).unwrap();
        let sub = subgroup_of_order(&ctx, 4).unwrap();
        assert_eq!(sub.elements(), &[1, 5, 8, 12]);
        let table = coset_table(&sub);
        assert_eq!(table.cosets(), &[vec![1, 5, 8, 12], vec![2, 3, 10, 11], vec![4, 6, 7, 9]]);
        assert_eq!(table.coset_index(0), None);
        assert_eq!(table.coset_index(7), Some(2));

        let ctx = find_generator(7).unwrap();
        let table = coset_table(&subgroup_of_order(&ctx, 3).unwrap());
        assert_eq!(table.cosets(), &[vec![1, 2, 4], vec![3, 5, 6]]);

        let table = coset_table(&subgroup_of_order(&ctx, 6).unwrap());
        assert_eq!(table.cosets(), &[vec![1, 2, 3, 4, 5, 6]]);
    }

    #[test]
    fn difference_count_examples() {
        let ctx = find_generator(13).unwrap();
        let squares = subgroup_of_order(&ctx, 6).unwrap();
        let a = difference_counts(&squares);
        assert_eq!(a.get(0), 6);
        assert_eq!(a.get(1), 2);
        assert_eq!(a.get(2), 3);
        assert_eq!(a.counts().iter().sum::<u64>(), 36);
        assert!(!is_difference_set(&squares));

        let ctx = find_generator(7).unwrap();
        let k = subgroup_of_order(&ctx, 3).unwrap();
        assert_eq!(difference_counts(&k).counts(), &[3, 1, 1, 1, 1, 1, 1]);
        assert!(is_difference_set(&k));
        assert!(is_difference_set(&subgroup_of_order(&ctx, 6).unwrap()));
    }

    #[test]
    fn translation_degree_examples() {
        let ctx = find_generator(13).unwrap();
        let cubes = subgroup_of_order(&ctx, 4).unwrap();
        let table = coset_table(&cubes);
        use CosetRef::*;
        assert_eq!(translation_degree(&table, Coset(0), Coset(0)).unwrap(), 0);
        assert_eq!(translation_degree(&table, Coset(1), Coset(2)).unwrap(), 1);
        assert_eq!(translation_degree(&table, Coset(0), Zero).unwrap(), 1);
        assert_eq!(translation_degree(&table, Zero, Coset(0)).unwrap(), 1);
        assert_eq!(translation_degree(&table, Zero, Coset(1)).unwrap(), 0);
        assert!(translation_degree(&table, Zero, Zero).is_err());
        assert!(translation_degree(&table, Coset(3), Zero).is_err());
    }

    #[test]
    fn identity_report_examples() {
        let ctx = find_generator(13).unwrap();
        let report = verify_translation_identities(&subgroup_of_order(&ctx, 4).unwrap());
        assert!(report.all_passed(), "{report}");
        assert!(report.checks.iter().any(|c| c.name.starts_with("a_(xK,x^2K) - a_(K,K) = 1")));

        let report = verify_translation_identities(&subgroup_of_order(&ctx, 6).unwrap());
        assert!(report.all_passed(), "{report}");
        let counts = report.checks.iter().find(|c| c.name.starts_with("index-2 difference")).unwrap();
        assert_eq!(counts.detail, "a_1=2 a_x=3");

        let ctx = find_generator(7).unwrap();
        let k = subgroup_of_order(&ctx, 3).unwrap();
        assert!(!k.contains_minus_one());
        let report = verify_translation_identities(&k);
        assert!(report.all_passed(), "{report}");
        // Symmetry is only asserted when -1 ∈ K.
        assert!(!report.checks.iter().any(|c| c.name.starts_with("translation degrees symmetric")));
    }

    #[test]
    fn identities_exhaustive_to_300() {
        for n in primes_up_to(300).into_iter().filter(|&p| p > 2) {
            let ctx = find_generator(n).unwrap();
            for m in divisors(n - 1) {
                let report = verify_translation_identities(&subgroup_of_order(&ctx, m).unwrap());
                assert!(report.all_passed(), "{report}");
            }
        }
    }

    #[test]
    fn unit_gap_for_index_three_to_1000() {
        for n in primes_up_to(1000).into_iter().filter(|&p| p > 3 && (p - 1) % 3 == 0) {
            let ctx = find_generator(n).unwrap();
            let table = coset_table(&subgroup_of_order(&ctx, (n - 1) / 3).unwrap());
            use CosetRef::Coset;
            let gap = translation_degree(&table, Coset(1), Coset(2)).unwrap() as i64
                - translation_degree(&table, Coset(0), Coset(0)).unwrap() as i64;
            assert_eq!(gap, 1, "n={n}");
        }
    }

    #[test]
    fn index_two_difference_sets_to_1000() {
        for n in primes_up_to(1000).into_iter().filter(|&p| p > 2) {
            let ctx = find_generator(n).unwrap();
            let sub = subgroup_of_order(&ctx, (n - 1) / 2).unwrap();
            assert_eq!(is_difference_set(&sub), n % 4 != 1, "n={n}");
        }
    }

    #[test]
    fn helpers() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(prime_factors(498), vec![2, 3, 83]);
        assert_eq!(multiplicative_order(6, 7), Some(2));
        assert_eq!(multiplicative_order(2, 7), Some(3));
        assert_eq!(multiplicative_order(7, 7), None);
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(primes_up_to(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
