//! The wheel order on transpositions and minimal circuits of its prefixes.
//!
//! Transpositions of `{1..m}` double as edges of the complete graph `K_m`.
//! The wheel order lists them so that the first `m` edges form the rim
//! cycle; `Gamma_k` denotes the graph on the first `k` edges. A *minimal
//! circuit* of a graph is a cycle with no chord (minimal edge support);
//! these index the syzygies that drive the one-step filtration ideals.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The wheel order on the transpositions of `{1..m}`, `m >= 3`:
/// first the rim `(1,2), (2,3), ..., (m-1,m), (1,m)`, then the remaining
/// spokes `(1,3), (1,4), ..., (1,m-1)`, then everything else
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranspositionTable {
    m: usize,
    pairs: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
}

impl TranspositionTable {
    pub fn new(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::UnsupportedSpokeCount { m });
        }
        let mut pairs = Vec::with_capacity(m * (m - 1) / 2);
        for j in 1..m {
            pairs.push((j, j + 1));
        }
        pairs.push((1, m));
        for b in 3..m {
            pairs.push((1, b));
        }
        for a in 2..=m {
            for b in (a + 2)..=m {
                pairs.push((a, b));
            }
        }
        debug_assert_eq!(pairs.len(), m * (m - 1) / 2);
        let index = pairs
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, i + 1))
            .collect();
        Ok(TranspositionTable { m, pairs, index })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Total number of transpositions, `m(m-1)/2`.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The `k`-th transposition `(mu, nu)` with `mu < nu`; `k` is one-based.
    pub fn pair(&self, k: usize) -> Result<(usize, usize)> {
        if k == 0 || k > self.pairs.len() {
            return Err(Error::StepOutOfRange {
                k,
                n: self.pairs.len(),
            });
        }
        Ok(self.pairs[k - 1])
    }

    /// One-based position of the edge `{a, b}` in the order.
    pub fn index_of(&self, a: usize, b: usize) -> Result<usize> {
        for v in [a, b] {
            if v == 0 || v > self.m {
                return Err(Error::VertexOutOfRange { vertex: v, m: self.m });
            }
        }
        if a == b {
            return Err(Error::Inconsistency(format!(
                "edge endpoints coincide: ({a},{a})"
            )));
        }
        let key = (a.min(b), a.max(b));
        Ok(*self.index.get(&key).expect("all pairs are indexed"))
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

/// The full wheel order as a list of one-based pairs.
pub fn transposition_order(m: usize) -> Result<Vec<(usize, usize)>> {
    Ok(TranspositionTable::new(m)?.pairs.clone())
}

/// A circuit (simple cycle) on one-based vertices, stored in traversal
/// order. Constructors keep the given traversal; [`Circuit::canonical`]
/// rotates the smallest vertex to the front and orients the walk so the
/// second vertex is smaller than the last.
///
/// Serialized form is the bare vertex list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Circuit {
    vertices: Vec<usize>,
}

impl Circuit {
    /// Validates a traversal: at least three distinct positive vertices.
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidCircuit {
                reason: format!("a circuit needs at least 3 vertices, got {}", vertices.len()),
            });
        }
        if vertices.iter().any(|&v| v == 0) {
            return Err(Error::InvalidCircuit {
                reason: "vertices are one-based; 0 is not a vertex".to_string(),
            });
        }
        let mut sorted = vertices.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCircuit {
                reason: "repeated vertex in traversal".to_string(),
            });
        }
        Ok(Circuit { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Largest vertex label; useful for range checks against an `m`.
    pub fn max_vertex(&self) -> usize {
        *self.vertices.iter().max().expect("nonempty")
    }

    /// The same cycle with the smallest vertex first and the smaller of its
    /// two neighbours second.
    pub fn canonical(&self) -> Circuit {
        let l = self.vertices.len();
        let start = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(i, _)| i)
            .expect("nonempty");
        let mut rotated: Vec<usize> = Vec::with_capacity(l);
        rotated.extend_from_slice(&self.vertices[start..]);
        rotated.extend_from_slice(&self.vertices[..start]);
        if rotated[1] > rotated[l - 1] {
            rotated[1..].reverse();
        }
        Circuit { vertices: rotated }
    }

    /// Traversal edges `(small, large, sign)`, where the sign is `+1` when
    /// the edge is walked from its smaller to its larger endpoint. The last
    /// edge closes the walk back to the first vertex.
    pub fn edges(&self) -> Vec<(usize, usize, i8)> {
        let l = self.vertices.len();
        (0..l)
            .map(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % l];
                if a < b {
                    (a, b, 1)
                } else {
                    (b, a, -1)
                }
            })
            .collect()
    }
}

impl From<Circuit> for Vec<usize> {
    fn from(c: Circuit) -> Self {
        c.vertices
    }
}

impl TryFrom<Vec<usize>> for Circuit {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Circuit> {
        Circuit::new(v)
    }
}

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn gamma_adjacency(table: &TranspositionTable, k: usize) -> Result<Vec<u64>> {
    let n = table.len();
    if k == 0 || k > n {
        return Err(Error::StepOutOfRange { k, n });
    }
    if table.m() > 60 {
        return Err(Error::Inconsistency(
            "circuit enumeration supports at most 60 vertices".to_string(),
        ));
    }
    let mut adj = vec![0u64; table.m() + 1];
    for j in 1..=k {
        let (a, b) = table.pair(j)?;
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    Ok(adj)
}

/// Minimal circuits of `Gamma_k` by shape classification.
///
/// * `k < m`: the first `k` edges form a forest, no circuits.
/// * `k = m`: exactly the rim `(1, 2, ..., m)`.
/// * `m < k < 2m-3`: the triangles `(1, j, j+1)` for the spokes present so
///   far, plus one long circuit `(1, k-m+2, ..., m)` around the missing
///   spokes.
/// * `k >= 2m-3`: all spokes are present; the minimal circuits are exactly
///   the triangles `(mu_i, mu_j, nu)` over pairs `i < j <= k` of edges with
///   a common larger endpoint `nu_i = nu_j` (the closing edge `{mu_i, mu_j}`
///   always precedes the `j`-th edge in the order).
///
/// Output is canonical and sorted.
pub fn minimal_circuits(m: usize, k: usize) -> Result<Vec<Circuit>> {
    let table = TranspositionTable::new(m)?;
    let n = table.len();
    if k == 0 || k > n {
        return Err(Error::StepOutOfRange { k, n });
    }
    let mut out: Vec<Circuit> = Vec::new();
    if k < m {
        return Ok(out);
    }
    if k == m {
        out.push(Circuit::new((1..=m).collect())?);
        return Ok(out);
    }
    if k < 2 * m - 3 {
        for j in 2..=(k - m + 1) {
            out.push(Circuit::new(vec![1, j, j + 1])?);
        }
        let nu = k - m + 2;
        let long: Vec<usize> = std::iter::once(1).chain(nu..=m).collect();
        out.push(Circuit::new(long)?);
    } else {
        for j in 2..=k {
            let (mu_j, nu_j) = table.pair(j)?;
            for i in 1..j {
                let (mu_i, nu_i) = table.pair(i)?;
                if nu_i == nu_j {
                    let mut tri = vec![mu_i, mu_j, nu_j];
                    tri.sort_unstable();
                    out.push(Circuit::new(tri)?);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Minimal circuits of `Gamma_k` by direct enumeration of chordless cycles
/// (depth-first search over induced paths). Independent of the
/// classification in [`minimal_circuits`]; intended for cross-checking.
///
/// Output is canonical and sorted.
pub fn minimal_circuits_brute(m: usize, k: usize) -> Result<Vec<Circuit>> {
    let table = TranspositionTable::new(m)?;
    let adj = gamma_adjacency(&table, k)?;
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(m);
    for s in 1..=m {
        for a in (s + 1)..=m {
            if adj[s] & (1 << a) == 0 {
                continue;
            }
            path.clear();
            path.push(s);
            path.push(a);
            extend_induced_path(&adj, m, s, &mut path, &mut out);
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Extends the induced path `path` (which starts at the minimum vertex `s`)
/// by every admissible vertex, recording a chordless cycle whenever the
/// closing edge to `s` exists. A vertex adjacent to `s` never extends the
/// path further: past the closure, the edge back to `s` would be a chord.
fn extend_induced_path(adj: &[u64], m: usize, s: usize, path: &mut Vec<usize>, out: &mut Vec<Circuit>) {
    let last = *path.last().expect("path is nonempty");
    let interior: u64 = path[1..path.len() - 1].iter().map(|&v| 1u64 << v).sum();
    for x in (s + 1)..=m {
        let bit = 1u64 << x;
        if adj[last] & bit == 0 || path.contains(&x) {
            continue;
        }
        if adj[x] & interior != 0 {
            continue;
        }
        if adj[x] & (1 << s) != 0 {
            if path[1] < x {
                let mut cycle = path.clone();
                cycle.push(x);
                out.push(Circuit::new(cycle).expect("induced cycle is a valid circuit"));
            }
        } else {
            path.push(x);
            extend_induced_path(adj, m, s, path, out);
            path.pop();
        }
    }
}

/// Splits a circuit along a chord `{a, b}` into the two sub-circuits that
/// share the chord edge, each inheriting the traversal direction of the
/// parent on its arc. With `r < s` the traversal positions of the chord
/// endpoints, the pieces are `(v_r, ..., v_s)` and
/// `(v_0, ..., v_r, v_s, ..., v_{l-1})`; the chord is walked in opposite
/// directions by the two pieces, so its contributions cancel when the
/// corresponding syzygies are recombined.
pub fn chord_split(circuit: &Circuit, a: usize, b: usize) -> Result<(Circuit, Circuit)> {
    let verts = circuit.vertices();
    let l = verts.len();
    let not_a_chord = |reason: &str| Error::NotAChord {
        a,
        b,
        reason: reason.to_string(),
    };
    if a == b {
        return Err(not_a_chord("endpoints coincide"));
    }
    let pos = |v: usize| verts.iter().position(|&w| w == v);
    let pa = pos(a).ok_or_else(|| not_a_chord(&format!("vertex {a} is not on the circuit")))?;
    let pb = pos(b).ok_or_else(|| not_a_chord(&format!("vertex {b} is not on the circuit")))?;
    let (r, s) = (pa.min(pb), pa.max(pb));
    if s - r == 1 || (r == 0 && s == l - 1) {
        return Err(not_a_chord("endpoints are adjacent on the circuit"));
    }
    let inner = Circuit::new(verts[r..=s].to_vec())?;
    let mut outer_vertices = verts[..=r].to_vec();
    outer_vertices.extend_from_slice(&verts[s..]);
    let outer = Circuit::new(outer_vertices)?;
    Ok((inner, outer))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_spokes_order_matches_the_figure() {
        let order = transposition_order(5).unwrap();
        assert_eq!(
            order,
            vec![
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (1, 5),
                (1, 3),
                (1, 4),
                (2, 4),
                (2, 5),
                (3, 5),
            ]
        );
    }

    #[test]
    fn six_spokes_order_landmarks() {
        let t = TranspositionTable::new(6).unwrap();
        assert_eq!(t.len(), 15);
        assert_eq!(t.pair(6).unwrap(), (1, 6));
        assert_eq!(t.pair(9).unwrap(), (1, 5));
        assert_eq!(t.pair(10).unwrap(), (2, 4));
        assert_eq!(t.pair(15).unwrap(), (4, 6));
    }

    #[test]
    fn three_spokes_order_is_complete() {
        let order = transposition_order(3).unwrap();
        assert_eq!(order, vec![(1, 2), (2, 3), (1, 3)]);
    }

    #[test]
    fn two_spokes_are_rejected() {
        assert_eq!(
            transposition_order(2).unwrap_err(),
            Error::UnsupportedSpokeCount { m: 2 }
        );
    }

    #[test]
    fn order_is_a_bijection_with_inverse_lookup() {
        for m in 3..=10 {
            let t = TranspositionTable::new(m).unwrap();
            assert_eq!(t.len(), m * (m - 1) / 2);
            let mut seen: Vec<(usize, usize)> = Vec::new();
            for k in 1..=t.len() {
                let (a, b) = t.pair(k).unwrap();
                assert!(1 <= a && a < b && b <= m);
                assert_eq!(t.index_of(a, b).unwrap(), k);
                assert_eq!(t.index_of(b, a).unwrap(), k);
                seen.push((a, b));
            }
            seen.sort_unstable();
            seen.dedup();
            assert_eq!(seen.len(), t.len());
        }
    }

    #[test]
    fn lookup_errors() {
        let t = TranspositionTable::new(4).unwrap();
        assert!(matches!(
            t.index_of(0, 2),
            Err(Error::VertexOutOfRange { vertex: 0, m: 4 })
        ));
        assert!(matches!(
            t.index_of(2, 5),
            Err(Error::VertexOutOfRange { vertex: 5, m: 4 })
        ));
        assert!(t.index_of(3, 3).is_err());
        assert!(matches!(
            t.pair(0),
            Err(Error::StepOutOfRange { k: 0, n: 6 })
        ));
        assert!(matches!(
            t.pair(7),
            Err(Error::StepOutOfRange { k: 7, n: 6 })
        ));
    }

    #[test]
    fn circuit_validation() {
        assert!(Circuit::new(vec![1, 2, 3]).is_ok());
        assert!(Circuit::new(vec![1, 2]).is_err());
        assert!(Circuit::new(vec![1, 2, 1]).is_err());
        assert!(Circuit::new(vec![0, 1, 2]).is_err());
    }

    #[test]
    fn canonical_rotates_and_orients() {
        let c = Circuit::new(vec![4, 3, 1, 5]).unwrap();
        // min vertex 1 first; neighbours of 1 in the cycle are 3 and 5.
        assert_eq!(c.canonical().vertices(), &[1, 3, 4, 5]);
        let c = Circuit::new(vec![1, 5, 4, 3]).unwrap();
        assert_eq!(c.canonical().vertices(), &[1, 3, 4, 5]);
        let already = Circuit::new(vec![1, 2, 3]).unwrap();
        assert_eq!(already.canonical(), already);
    }

    #[test]
    fn edges_carry_traversal_signs() {
        let c = Circuit::new(vec![1, 3, 2]).unwrap();
        assert_eq!(c.edges(), vec![(1, 3, 1), (2, 3, -1), (1, 2, -1)]);
    }

    #[test]
    fn serde_round_trip_and_validation() {
        let c = Circuit::new(vec![1, 4, 2, 5]).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, "[1,4,2,5]");
        let back: Circuit = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Circuit>("[1,2]").is_err());
        assert!(serde_json::from_str::<Circuit>("[1,2,2]").is_err());
    }

    #[test]
    fn forest_range_has_no_circuits() {
        for m in 3..=7 {
            for k in 1..m {
                assert!(minimal_circuits(m, k).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn rim_step_has_exactly_the_rim() {
        let cs = minimal_circuits(6, 6).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].vertices(), &[1, 2, 3, 4, 5, 6]);
    }

    #[test]
    fn middle_range_shape_for_six_spokes() {
        // k = 8: spokes (1,3), (1,4) present, (1,5) missing.
        let cs = minimal_circuits(6, 8).unwrap();
        let verts: Vec<&[usize]> = cs.iter().map(|c| c.vertices()).collect();
        assert_eq!(
            verts,
            vec![&[1, 2, 3][..], &[1, 3, 4][..], &[1, 4, 5, 6][..]]
        );
    }

    #[test]
    fn classification_matches_brute_force() {
        for m in 3..=7 {
            let n = m * (m - 1) / 2;
            for k in 1..=n {
                let fast = minimal_circuits(m, k).unwrap();
                let brute = minimal_circuits_brute(m, k).unwrap();
                assert_eq!(fast, brute, "m = {m}, k = {k}");
            }
        }
    }

    #[test]
    fn step_bounds_are_enforced() {
        assert!(matches!(
            minimal_circuits(5, 0),
            Err(Error::StepOutOfRange { k: 0, n: 10 })
        ));
        assert!(matches!(
            minimal_circuits(5, 11),
            Err(Error::StepOutOfRange { k: 11, n: 10 })
        ));
        assert!(minimal_circuits_brute(5, 11).is_err());
    }

    #[test]
    fn chord_split_pieces_share_the_chord_with_opposite_directions() {
        let c = Circuit::new(vec![1, 2, 3, 4, 5]).unwrap();
        let (inner, outer) = chord_split(&c, 1, 3).unwrap();
        assert_eq!(inner.vertices(), &[1, 2, 3]);
        assert_eq!(outer.vertices(), &[1, 3, 4, 5]);
        // chord (1,3): closing edge of inner walks 3 -> 1, outer walks 1 -> 3.
        assert!(inner.edges().contains(&(1, 3, -1)));
        assert!(outer.edges().contains(&(1, 3, 1)));

        let (inner, outer) = chord_split(&c, 5, 2).unwrap();
        assert_eq!(inner.vertices(), &[2, 3, 4, 5]);
        assert_eq!(outer.vertices(), &[1, 2, 5]);
    }

    #[test]
    fn chord_split_rejects_non_chords() {
        let c = Circuit::new(vec![1, 2, 3, 4]).unwrap();
        assert!(matches!(
            chord_split(&c, 1, 2),
            Err(Error::NotAChord { a: 1, b: 2, .. })
        ));
        // the closing edge is adjacent too
        assert!(chord_split(&c, 1, 4).is_err());
        assert!(chord_split(&c, 2, 2).is_err());
        assert!(chord_split(&c, 1, 7).is_err());
        let tri = Circuit::new(vec![1, 2, 3]).unwrap();
        assert!(chord_split(&tri, 1, 3).is_err());
    }
}
