//! Oracles that share no code with the library's group or algebra
//! routines: windows are plain vectors and generators act by hand.

#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};

use hecke_core::{Generator, HeckeElement, SignedPermutation};

pub type Window = Vec<i64>;

/// `(u v)(i) = u(v(i))` on windows.
pub fn compose(u: &Window, v: &Window) -> Window {
    v.iter()
        .map(|&x| {
            let y = u[(x.unsigned_abs() - 1) as usize];
            if x < 0 {
                -y
            } else {
                y
            }
        })
        .collect()
}

/// Generators as windows: `t` negates 1, `s_i` swaps `i` and `i+1`.
pub fn generator_windows(rank: usize) -> Vec<(Generator, Window)> {
    let id: Window = (1..=rank as i64).collect();
    let mut out = Vec::new();
    if rank >= 1 {
        let mut t = id.clone();
        t[0] = -1;
        out.push((Generator::T, t));
    }
    for i in 1..rank {
        let mut s = id.clone();
        s.swap(i - 1, i);
        out.push((Generator::S(i), s));
    }
    out
}

/// Breadth-first search of the right Cayley graph from the identity:
/// the word distance to every element plus one BFS parent edge per element.
pub struct Cayley {
    pub rank: usize,
    pub dist: BTreeMap<Window, usize>,
    /// All `(predecessor, generator)` with `dist(pred) + 1 = dist(w)`.
    pub parents: BTreeMap<Window, Vec<(Window, Generator)>>,
}

pub fn cayley_bfs(rank: usize) -> Cayley {
    let gens = generator_windows(rank);
    let id: Window = (1..=rank as i64).collect();
    let mut dist = BTreeMap::from([(id.clone(), 0usize)]);
    let mut parents: BTreeMap<Window, Vec<(Window, Generator)>> = BTreeMap::new();
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = dist[&w];
        for (g, s) in &gens {
            let ws = compose(&w, s);
            match dist.get(&ws) {
                None => {
                    dist.insert(ws.clone(), d + 1);
                    parents.entry(ws.clone()).or_default().push((w.clone(), *g));
                    queue.push_back(ws);
                }
                Some(&e) if e == d + 1 => {
                    parents.entry(ws).or_default().push((w.clone(), *g));
                }
                _ => {}
            }
        }
    }
    Cayley {
        rank,
        dist,
        parents,
    }
}

impl Cayley {
    /// Up to `limit` distinct geodesic words from the identity to `w`.
    pub fn geodesics(&self, w: &Window, limit: usize) -> Vec<Vec<Generator>> {
        if self.dist[w] == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for (prev, g) in &self.parents[w] {
            for mut word in self.geodesics(prev, limit) {
                word.push(*g);
                out.push(word);
                if out.len() >= limit {
                    return out;
                }
            }
        }
        out
    }
}

pub fn perm(w: &Window) -> SignedPermutation {
    SignedPermutation::from_window(w).expect("valid window")
}

/// Every element's length agrees with its BFS distance.
pub fn length_oracle(rank: usize) -> Result<usize, String> {
    let cayley = cayley_bfs(rank);
    let expected = (1..=rank).product::<usize>() << rank;
    if cayley.dist.len() != expected {
        return Err(format!("BFS reached {} of {expected} elements", cayley.dist.len()));
    }
    for (w, &d) in &cayley.dist {
        let l = perm(w).length();
        if l != d {
            return Err(format!("{w:?}: length {l}, BFS distance {d}"));
        }
    }
    Ok(cayley.dist.len())
}

/// At `p = q = 1` every `T_u T_v` is the single term `T_{uv}`.
pub fn group_algebra_oracle(rank: usize) -> Result<usize, String> {
    let elements: Vec<Window> = cayley_bfs(rank).dist.into_keys().collect();
    let mut pairs = 0;
    for u in &elements {
        let tu = HeckeElement::t_of(&perm(u));
        for v in &elements {
            let product = tu.mul(&HeckeElement::t_of(&perm(v))).map_err(|e| e.to_string())?;
            let got = product.specialize(1, 1);
            let uv = perm(&compose(u, v));
            if got.len() != 1 || got[0].0 != uv || got[0].1 != 1.into() {
                return Err(format!("T{u:?} T{v:?} at p = q = 1 gave {got:?}, expected T{uv}"));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

/// Products of `T_s` along distinct geodesic words to the same element all
/// give `T_w`.
pub fn reduced_word_oracle(rank: usize, words_per_element: usize) -> Result<usize, String> {
    let cayley = cayley_bfs(rank);
    let mut words = 0;
    for w in cayley.dist.keys() {
        let expected = HeckeElement::t_of(&perm(w));
        for word in cayley.geodesics(w, words_per_element) {
            let got = HeckeElement::one(rank)
                .mul_word_right(&word)
                .map_err(|e| e.to_string())?;
            if got != expected {
                return Err(format!("word {word:?} for {w:?} gave {got}"));
            }
            words += 1;
        }
    }
    Ok(words)
}
