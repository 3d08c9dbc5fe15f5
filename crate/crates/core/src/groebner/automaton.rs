//! Aho–Corasick automaton over a small alphabet, used both to locate
//! leading words inside a word and to count words avoiding them.

use std::collections::VecDeque;

use crate::algebra::Word;

const NONE: u32 = u32::MAX;

/// Dense-transition Aho–Corasick automaton.
#[derive(Clone, Debug)]
pub struct Automaton {
    alphabet: usize,
    delta: Vec<u32>,
    /// Pattern recognised on entering each state (its own or inherited
    /// through the failure chain), as `(pattern index, length)`.
    output: Vec<Option<(u32, u16)>>,
}

impl Automaton {
    pub fn new(patterns: &[Word], alphabet: usize) -> Self {
        let mut goto: Vec<Vec<u32>> = vec![vec![NONE; alphabet]];
        let mut own: Vec<Option<(u32, u16)>> = vec![None];
        for (pi, p) in patterns.iter().enumerate() {
            let mut s = 0usize;
            for &l in p.letters() {
                let l = l as usize;
                assert!(
                    l < alphabet,
                    "letter {l} outside alphabet of size {alphabet}"
                );
                if goto[s][l] == NONE {
                    goto.push(vec![NONE; alphabet]);
                    own.push(None);
                    goto[s][l] = (goto.len() - 1) as u32;
                }
                s = goto[s][l] as usize;
            }
            if own[s].is_none() {
                own[s] = Some((pi as u32, p.len() as u16));
            }
        }

        let n = goto.len();
        let mut fail = vec![0u32; n];
        let mut output = own.clone();
        let mut delta = vec![0u32; n * alphabet];
        let mut queue = VecDeque::new();
        for l in 0..alphabet {
            let t = goto[0][l];
            if t == NONE {
                delta[l] = 0;
            } else {
                delta[l] = t;
                queue.push_back(t as usize);
            }
        }
        while let Some(s) = queue.pop_front() {
            if output[s].is_none() {
                output[s] = output[fail[s] as usize];
            }
            for l in 0..alphabet {
                let t = goto[s][l];
                let via_fail = delta[fail[s] as usize * alphabet + l];
                if t == NONE {
                    delta[s * alphabet + l] = via_fail;
                } else {
                    fail[t as usize] = via_fail;
                    delta[s * alphabet + l] = t;
                    queue.push_back(t as usize);
                }
            }
        }
        Automaton {
            alphabet,
            delta,
            output,
        }
    }

    pub fn states(&self) -> usize {
        self.output.len()
    }

    #[inline]
    pub fn step(&self, state: usize, letter: u8) -> usize {
        self.delta[state * self.alphabet + letter as usize] as usize
    }

    /// Pattern recognised on entering `state`: `(pattern index, length)`.
    #[inline]
    pub fn output_at(&self, state: usize) -> Option<(usize, usize)> {
        self.output[state].map(|(p, l)| (p as usize, l as usize))
    }

    /// Leftmost-ending occurrence of any pattern: `(pattern index, start)`.
    pub fn find(&self, w: &[u8]) -> Option<(usize, usize)> {
        let mut s = 0;
        for (i, &l) in w.iter().enumerate() {
            s = self.step(s, l);
            if let Some((p, len)) = self.output[s] {
                return Some((p as usize, i + 1 - len as usize));
            }
        }
        None
    }

    pub fn contains_match(&self, w: &[u8]) -> bool {
        self.find(w).is_some()
    }

    /// Number of words of each length `0..=degree` containing no pattern as
    /// a factor, by a transfer-matrix recursion over the live states.
    pub fn count_avoiding(&self, degree: usize) -> Vec<u128> {
        let n = self.states();
        let mut cur = vec![0u128; n];
        cur[0] = 1;
        let mut out = vec![1u128];
        for _ in 0..degree {
            let mut next = vec![0u128; n];
            for (s, &c) in cur.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for l in 0..self.alphabet {
                    let t = self.delta[s * self.alphabet + l] as usize;
                    if self.output[t].is_none() {
                        next[t] += c;
                    }
                }
            }
            out.push(next.iter().sum());
            cur = next;
        }
        out
    }
}

/// Per-degree counts of words over `n_generators` letters avoiding every
/// word of `leading_words` as a factor.
pub fn nc_normal_count(
    leading_words: &[Word],
    n_generators: usize,
    degree_bound: usize,
) -> Vec<u128> {
    Automaton::new(leading_words, n_generators.max(1))
        .count_avoiding(degree_bound)
        .into_iter()
        .enumerate()
        // with no letters at all only the empty word survives
        .map(|(d, c)| if n_generators == 0 && d > 0 { 0 } else { c })
        .collect()
}
