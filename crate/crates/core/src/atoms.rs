//! Decomposition of a potential into Fermat / chain / loop atoms.
//!
//! A potential whose variables split into blocks of the shapes
//!
//! ```text
//! x^a                                  (Fermat, a >= 2)
//! x1^{a1} x2 + ... + x_{k-1}^{a_{k-1}} x_k + x_k^{a_k}   (chain, a_i >= 2)
//! x1^{a1} x2 + ... + x_k^{a_k} x1     (loop, a_i >= 1)
//! ```
//!
//! has a smooth affine cone away from the origin, so decomposability is the
//! non-degeneracy certificate used here. A potential that does not match any
//! block assignment is reported as `Undetermined`, not rejected.
//!
//! The search assigns to each monomial a head variable (the one carrying the
//! block exponent) so that every variable heads exactly one monomial; tails
//! (the off-exponent-1 variable) then induce a functional graph whose cycles
//! are loops and whose paths are chains. With n <= 6 the assignment search
//! is a trivial scan over permutations.

use crate::delsarte::{permutations, DelsartePolynomial};

/// One block of the decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Atom {
    /// `x^a` on one variable.
    Fermat { variable: usize, exponent: u64 },
    /// Chain along `variables`, with `exponents[i]` on `variables[i]`.
    Chain {
        variables: Vec<usize>,
        exponents: Vec<u64>,
    },
    /// Cycle along `variables`, with `exponents[i]` on `variables[i]`.
    Loop {
        variables: Vec<usize>,
        exponents: Vec<u64>,
    },
}

/// Result of the block search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AtomicDecomposition {
    Blocks(Vec<Atom>),
    Undetermined,
}

impl AtomicDecomposition {
    pub fn is_determined(&self) -> bool {
        matches!(self, AtomicDecomposition::Blocks(_))
    }

    pub fn blocks(&self) -> Option<&[Atom]> {
        match self {
            AtomicDecomposition::Blocks(blocks) => Some(blocks),
            AtomicDecomposition::Undetermined => None,
        }
    }
}

struct HeadTail {
    exponent: u64,
    tail: Option<usize>,
}

/// Decompose `p` into Fermat/chain/loop atoms.
pub fn atomic_decomposition(p: &DelsartePolynomial) -> AtomicDecomposition {
    let n = p.n();
    let rows = p.exponents();

    // Row i, candidate head j -> exponent and optional tail.
    // A head carries the full exponent at j; a tail is a distinct variable
    // with exponent exactly 1; anything else disqualifies the candidate.
    let candidate = |row: &[u64], head: usize| -> Option<HeadTail> {
        if row[head] == 0 {
            return None;
        }
        let mut tail = None;
        for (j, &e) in row.iter().enumerate() {
            if j == head || e == 0 {
                continue;
            }
            if e != 1 || tail.is_some() {
                return None;
            }
            tail = Some(j);
        }
        Some(HeadTail {
            exponent: row[head],
            tail,
        })
    };

    'assignments: for heads in permutations(n) {
        // heads[i] = head variable of monomial i
        let mut info: Vec<HeadTail> = Vec::with_capacity(n);
        for (i, row) in rows.iter().enumerate() {
            match candidate(row, heads[i]) {
                Some(ht) => info.push(ht),
                None => continue 'assignments,
            }
        }
        // tails must be distinct variables
        let mut tail_in = vec![0usize; n];
        for ht in &info {
            if let Some(t) = ht.tail {
                tail_in[t] += 1;
                if tail_in[t] > 1 {
                    continue 'assignments;
                }
            }
        }
        // monomial index owning each head variable
        let mut monomial_of = vec![usize::MAX; n];
        for (i, &h) in heads.iter().enumerate() {
            monomial_of[h] = i;
        }
        if let Some(blocks) = collect_blocks(n, &info, &monomial_of, &tail_in) {
            return AtomicDecomposition::Blocks(blocks);
        }
    }
    AtomicDecomposition::Undetermined
}

fn collect_blocks(
    n: usize,
    info: &[HeadTail],
    monomial_of: &[usize],
    tail_in: &[usize],
) -> Option<Vec<Atom>> {
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();

    // Chains start at a head variable nobody points to and must end at a
    // monomial without a tail.
    for start in 0..n {
        if tail_in[start] != 0 || seen[start] {
            continue;
        }
        let mut variables = vec![start];
        let mut exponents = vec![info[monomial_of[start]].exponent];
        let mut current = start;
        loop {
            seen[current] = true;
            match info[monomial_of[current]].tail {
                Some(next) => {
                    if seen[next] {
                        return None; // runs into a cycle: not a plain path
                    }
                    variables.push(next);
                    exponents.push(info[monomial_of[next]].exponent);
                    current = next;
                }
                None => break,
            }
        }
        if variables.len() == 1 {
            let exponent = exponents[0];
            if exponent < 2 {
                return None;
            }
            blocks.push(Atom::Fermat {
                variable: start,
                exponent,
            });
        } else {
            if exponents.iter().any(|&a| a < 2) {
                return None;
            }
            blocks.push(Atom::Chain {
                variables,
                exponents,
            });
        }
    }

    // Everything left belongs to cycles.
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut variables = vec![start];
        let mut exponents = vec![info[monomial_of[start]].exponent];
        seen[start] = true;
        let mut current = info[monomial_of[start]].tail?;
        while current != start {
            if seen[current] {
                return None;
            }
            seen[current] = true;
            variables.push(current);
            exponents.push(info[monomial_of[current]].exponent);
            current = info[monomial_of[current]].tail?;
        }
        // head exponents are >= 1 by construction; a 2-loop with both
        // exponents 1 would be a duplicated monomial, already rejected
        blocks.push(rotate_loop(variables, exponents));
    }

    blocks.sort_by_key(|b| match b {
        Atom::Fermat { variable, .. } => *variable,
        Atom::Chain { variables, .. } | Atom::Loop { variables, .. } => variables[0],
    });
    Some(blocks)
}

/// Canonical rotation: start the cycle at its smallest variable index.
fn rotate_loop(variables: Vec<usize>, exponents: Vec<u64>) -> Atom {
    let k = variables.len();
    let offset = variables
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| v)
        .map(|(i, _)| i)
        .unwrap_or(0);
    let variables: Vec<usize> = (0..k).map(|i| variables[(offset + i) % k]).collect();
    let exponents: Vec<u64> = (0..k).map(|i| exponents[(offset + i) % k]).collect();
    Atom::Loop {
        variables,
        exponents,
    }
}
