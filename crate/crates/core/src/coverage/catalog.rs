//! Cycle types with 2 to 4 cycles and coprime parts that can lie in a
//! primitive group smaller than `A_n`, for `n > 36`.
//!
//! The ten lines are hard-coded. Below 37 the list is known to be incomplete;
//! entries are still produced but the catalog is marked invalid.

use serde::Serialize;

use crate::arith::{gcd, is_prime_power, prime_power, repunit, repunit_forms};
use crate::cycle_type::CycleType;

/// Degrees above this threshold have a complete catalog.
pub const CATALOG_VALID_ABOVE: u32 = 36;

/// Parameters of a catalog line; unused ones are `None`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
pub struct CatalogParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k2: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CatalogEntry {
    pub line: u8,
    pub params: CatalogParams,
    pub exceptional_type: CycleType,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Catalog {
    pub n: u32,
    pub entries: Vec<CatalogEntry>,
    /// `n > 36`; below that the entries are a heuristic subset.
    pub valid: bool,
}

impl Catalog {
    pub fn contains_type(&self, t: &CycleType) -> bool {
        self.entries.iter().any(|e| &e.exceptional_type == t)
    }
}

/// All instantiations of the ten catalog lines at degree `n`, deduplicated by type.
pub fn primitive_catalog(n: u32) -> Catalog {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut push = |line: u8, params: CatalogParams, parts: Vec<u64>| {
        if parts.iter().any(|&x| x == 0) || parts.iter().sum::<u64>() != u64::from(n) {
            return;
        }
        let t = CycleType::new(parts.iter().map(|&x| x as u32).collect())
            .expect("catalog parts are positive");
        if t.parts_gcd() != 1 || entries.iter().any(|e| e.exceptional_type == t) {
            return;
        }
        entries.push(CatalogEntry {
            line,
            params,
            exceptional_type: t,
        });
    };
    let nn = u64::from(n);
    if n < 2 {
        return Catalog {
            n,
            entries,
            valid: false,
        };
    }

    let n_is_q = is_prime_power(nn);
    let q_params = |q: u64| CatalogParams {
        q: Some(q),
        ..Default::default()
    };

    // 1. n = q, (1, q-1)
    if n_is_q {
        push(1, q_params(nn), vec![1, nn - 1]);
    }
    // 2. n = q + 1, (1, q)
    if is_prime_power(nn - 1) {
        push(2, q_params(nn - 1), vec![1, nn - 1]);
    }
    // 3. n = q odd, (1, (q-1)/2, (q-1)/2)
    if n_is_q && nn % 2 == 1 {
        let h = (nn - 1) / 2;
        push(3, q_params(nn), vec![1, h, h]);
    }
    // 4. n = p^2, p odd, (1, p-1, p(p-1))
    if let Some((p, 2)) = prime_power(nn) {
        if p % 2 == 1 {
            push(
                4,
                CatalogParams {
                    p: Some(p),
                    ..Default::default()
                },
                vec![1, p - 1, p * (p - 1)],
            );
        }
    }
    let forms = repunit_forms(nn);
    // 5. n = (q^d-1)/(q-1), d = d1 + d2, gcd(d1, d2) = 1
    for &(q, d) in &forms {
        for d1 in 1..d {
            let d2 = d - d1;
            if d1 > d2 || gcd(d1.into(), d2.into()) != 1 {
                continue;
            }
            let (a, b) = (repunit(q, d1).unwrap(), repunit(q, d2).unwrap());
            push(5, split_params(q, d, d1, d2), vec![a, b, a * b * (q - 1)]);
        }
    }
    // 6. n = q = 1 mod 3, (1, (q-1)/3 three times)
    if n_is_q && nn % 3 == 1 {
        let t = (nn - 1) / 3;
        push(6, q_params(nn), vec![1, t, t, t]);
    }
    // 7. n = 2^d, d = d1 + d2, no coprimality condition stated
    if let Some((2, d)) = prime_power(nn) {
        for d1 in 1..d {
            let d2 = d - d1;
            if d1 > d2 {
                continue;
            }
            let (a, b) = ((1u64 << d1) - 1, (1u64 << d2) - 1);
            push(7, split_params(2, d, d1, d2), vec![1, a, b, a * b]);
        }
        // 8. n = 2^d, (1, 1, 2^(d-1) - 1, 2^(d-1) - 1)
        if d >= 2 {
            let h = (1u64 << (d - 1)) - 1;
            push(
                8,
                CatalogParams {
                    q: Some(2),
                    d: Some(d),
                    ..Default::default()
                },
                vec![1, 1, h, h],
            );
        }
    }
    // 9. n = m^2, (k1 k2, k1(m-k2), (m-k1)k2, (m-k1)(m-k2)), pairwise coprime
    let m = integer_sqrt(nn);
    if m * m == nn && m >= 2 {
        for k1 in 1..m {
            for k2 in k1..m {
                let four = [k1, k2, m - k1, m - k2];
                let coprime = (0..4).all(|i| (i + 1..4).all(|j| gcd(four[i], four[j]) == 1));
                if !coprime {
                    continue;
                }
                push(
                    9,
                    CatalogParams {
                        m: Some(m),
                        k1: Some(k1),
                        k2: Some(k2),
                        ..Default::default()
                    },
                    vec![k1 * k2, k1 * (m - k2), (m - k1) * k2, (m - k1) * (m - k2)],
                );
            }
        }
    }
    // 10. n = (q^d-1)/(q-1), q odd, d = d1 + d2, gcd(d1, d2) = 1
    for &(q, d) in &forms {
        if q % 2 == 0 {
            continue;
        }
        for d1 in 1..d {
            let d2 = d - d1;
            if d1 > d2 || gcd(d1.into(), d2.into()) != 1 {
                continue;
            }
            let (a, b) = (repunit(q, d1).unwrap(), repunit(q, d2).unwrap());
            let half = a * b * (q - 1) / 2;
            push(10, split_params(q, d, d1, d2), vec![a, b, half, half]);
        }
    }

    Catalog {
        n,
        entries,
        valid: n > CATALOG_VALID_ABOVE,
    }
}

fn split_params(q: u64, d: u32, d1: u32, d2: u32) -> CatalogParams {
    CatalogParams {
        q: Some(q),
        d: Some(d),
        d1: Some(d1),
        d2: Some(d2),
        ..Default::default()
    }
}

fn integer_sqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}
