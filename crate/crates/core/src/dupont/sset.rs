//! Finite (truncated) simplicial sets.
//!
//! Nondegenerate simplices are stored explicitly with their face tables;
//! every other simplex is referenced in Eilenberg-Zilber normal form as a
//! degeneracy word over a nondegenerate base. Face and degeneracy operators
//! on references are computed through the simplicial identities, and the
//! loader validates the identities on the stored tables.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};

/// A nondegenerate simplex: (dimension, index into that dimension's list).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SimplexId {
    pub dim: usize,
    pub index: usize,
}

/// An arbitrary simplex in normal form s_{j_1} ... s_{j_k} (base) with
/// j_1 > j_2 > ... > j_k (empty word = nondegenerate).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct SimplexRef {
    pub word: Vec<usize>,
    pub base: SimplexId,
}

impl SimplexRef {
    pub fn nondegenerate(base: SimplexId) -> Self {
        SimplexRef {
            word: Vec::new(),
            base,
        }
    }

    pub fn dim(&self) -> usize {
        self.base.dim + self.word.len()
    }

    pub fn is_degenerate(&self) -> bool {
        !self.word.is_empty()
    }

    /// The underlying surjection [dim] ->> [base.dim] (the composite of the
    /// codegeneracies named in the word), as a value table.
    pub fn surjection(&self) -> Vec<usize> {
        let p = self.dim();
        let mut values: Vec<usize> = (0..=p).collect();
        // word = [j_1 > ... > j_k]; the simplex is s_{j_1}(s_{j_2}(...)),
        // i.e. the composite surjection is sigma^{j_k} o ... o sigma^{j_1}.
        for &j in &self.word {
            for v in values.iter_mut() {
                if *v > j {
                    *v -= 1;
                }
            }
        }
        values
    }
}

/// Prepend the degeneracy s_j to an admissible word, restoring the
/// normal form via s_i s_j = s_{j+1} s_i (i <= j).
fn insert_degeneracy(word: &[usize], j: usize) -> Vec<usize> {
    match word.first() {
        None => vec![j],
        Some(&j1) => {
            if j > j1 {
                let mut out = Vec::with_capacity(word.len() + 1);
                out.push(j);
                out.extend_from_slice(word);
                out
            } else {
                // s_j s_{j1} = s_{j1 + 1} s_j with j <= j1.
                let mut out = Vec::with_capacity(word.len() + 1);
                out.push(j1 + 1);
                out.extend(insert_degeneracy(&word[1..], j));
                out
            }
        }
    }
}

#[derive(Debug)]
pub struct FiniteSimplicialSet {
    name: String,
    truncation: usize,
    /// Per dimension: the ids of the nondegenerate simplices.
    ids: Vec<Vec<String>>,
    /// Per dimension p >= 1, per nondegenerate simplex: faces d_0 .. d_p.
    faces: Vec<Vec<Vec<SimplexRef>>>,
}

impl FiniteSimplicialSet {
    pub fn new(
        name: &str,
        truncation: usize,
        ids: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<SimplexRef>>>,
    ) -> Result<Self> {
        let set = FiniteSimplicialSet {
            name: name.to_string(),
            truncation,
            ids,
            faces,
        };
        set.validate()?;
        Ok(set)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Truncation level: simplices exist in dimensions 0..=truncation.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn num_nondegenerate(&self, dim: usize) -> usize {
        self.ids.get(dim).map(|v| v.len()).unwrap_or(0)
    }

    pub fn id_of(&self, s: SimplexId) -> &str {
        &self.ids[s.dim][s.index]
    }

    pub fn nondegenerate(&self, dim: usize) -> impl Iterator<Item = SimplexId> + '_ {
        (0..self.num_nondegenerate(dim)).map(move |index| SimplexId { dim, index })
    }

    /// d_i of a nondegenerate simplex, from the stored tables.
    pub fn face_of_base(&self, s: SimplexId, i: usize) -> Result<SimplexRef> {
        if s.dim == 0 {
            return Err(Error::Simplicial("0-simplices have no faces".into()));
        }
        if i > s.dim {
            return Err(Error::Simplicial(format!(
                "face index {i} out of range for dimension {}",
                s.dim
            )));
        }
        Ok(self.faces[s.dim][s.index][i].clone())
    }

    /// d_i of an arbitrary simplex reference, using
    /// d_i s_j = s_{j-1} d_i (i < j), id (i = j, j+1), s_j d_{i-1} (i > j+1).
    pub fn face(&self, r: &SimplexRef, i: usize) -> Result<SimplexRef> {
        if i > r.dim() {
            return Err(Error::Simplicial(format!(
                "face index {i} out of range for dimension {}",
                r.dim()
            )));
        }
        match r.word.split_first() {
            None => self.face_of_base(r.base, i),
            Some((&j, rest)) => {
                let inner = SimplexRef {
                    word: rest.to_vec(),
                    base: r.base,
                };
                if i < j {
                    let deeper = self.face(&inner, i)?;
                    Ok(SimplexRef {
                        word: insert_degeneracy(&deeper.word, j - 1),
                        base: deeper.base,
                    })
                } else if i == j || i == j + 1 {
                    Ok(inner)
                } else {
                    let deeper = self.face(&inner, i - 1)?;
                    Ok(SimplexRef {
                        word: insert_degeneracy(&deeper.word, j),
                        base: deeper.base,
                    })
                }
            }
        }
    }

    /// s_j of an arbitrary simplex reference.
    pub fn degeneracy(&self, r: &SimplexRef, j: usize) -> Result<SimplexRef> {
        if j > r.dim() {
            return Err(Error::Simplicial(format!(
                "degeneracy index {j} out of range for dimension {}",
                r.dim()
            )));
        }
        Ok(SimplexRef {
            word: insert_degeneracy(&r.word, j),
            base: r.base,
        })
    }

    /// The structure map phi^*: S_q -> S_p for a weakly increasing
    /// phi: [p] -> [q], computed as the face-then-degeneracy composite of
    /// the epi-mono factorisation of phi.
    pub fn structure_map(&self, r: &SimplexRef, phi: &[usize]) -> Result<SimplexRef> {
        crate::algebra::poly::check_monotone(phi)?;
        let q = r.dim();
        if *phi.last().unwrap() > q {
            return Err(Error::Simplicial(format!(
                "structure map {phi:?} does not land in [{q}]"
            )));
        }
        // Injective part first: remove the values of [q] not hit by phi,
        // highest first.
        let mut current = r.clone();
        let hit: std::collections::BTreeSet<usize> = phi.iter().copied().collect();
        for v in (0..=q).rev() {
            if !hit.contains(&v) {
                current = self.face(&current, v)?;
            }
        }
        // Degenerate part: repeats of phi become degeneracies. After the
        // collapse above, the image values renumber to 0..=k in order; a
        // repeat phi(m) = phi(m+1) is s_{rank} at the rank of that value.
        let mut word_positions: Vec<usize> = Vec::new();
        let mut rank = 0usize;
        for m in 1..phi.len() {
            if phi[m] == phi[m - 1] {
                word_positions.push(rank);
            } else {
                rank += 1;
            }
        }
        // Apply innermost-first so each s_j acts on the current simplex.
        for &j in word_positions.iter().rev() {
            current = self.degeneracy(&current, j)?;
        }
        Ok(current)
    }

    /// All simplices of dimension p (nondegenerate and degenerate), in a
    /// deterministic order.
    pub fn all_simplices(&self, p: usize) -> Vec<SimplexRef> {
        let mut out = Vec::new();
        for q in (0..=p.min(self.truncation)).rev() {
            // all q-dimensional bases with degeneracy words lifting to p
            for base in self.nondegenerate(q) {
                for word in degeneracy_words(p, q) {
                    out.push(SimplexRef { word, base });
                }
            }
        }
        out.sort();
        out
    }

    /// Index lookup table for `all_simplices(p)`.
    pub fn simplex_positions(&self, p: usize) -> BTreeMap<SimplexRef, usize> {
        self.all_simplices(p)
            .into_iter()
            .enumerate()
            .map(|(i, r)| (r, i))
            .collect()
    }

    fn validate(&self) -> Result<()> {
        if self.ids.len() != self.truncation + 1 || self.faces.len() != self.truncation + 1 {
            return Err(Error::Simplicial(
                "tables do not match the truncation level".into(),
            ));
        }
        for dim in 0..=self.truncation {
            if dim == 0 {
                continue;
            }
            if self.faces[dim].len() != self.ids[dim].len() {
                return Err(Error::Simplicial(format!(
                    "missing face rows in dimension {dim}"
                )));
            }
            for (index, row) in self.faces[dim].iter().enumerate() {
                if row.len() != dim + 1 {
                    return Err(Error::Simplicial(format!(
                        "simplex {} needs {} faces",
                        self.ids[dim][index],
                        dim + 1
                    )));
                }
                for f in row {
                    if f.dim() != dim - 1 {
                        return Err(Error::Simplicial(format!(
                            "face of {} has wrong dimension",
                            self.ids[dim][index]
                        )));
                    }
                    if f.base.dim >= self.ids.len()
                        || f.base.index >= self.ids[f.base.dim].len()
                    {
                        return Err(Error::Simplicial("dangling face reference".into()));
                    }
                }
            }
        }
        // Simplicial identities d_i d_j = d_{j-1} d_i (i < j) on all stored
        // simplices.
        for dim in 2..=self.truncation {
            for s in self.nondegenerate(dim) {
                let r = SimplexRef::nondegenerate(s);
                for j in 1..=dim {
                    for i in 0..j {
                        let left = self.face(&self.face(&r, j)?, i)?;
                        let right = self.face(&self.face(&r, i)?, j - 1)?;
                        if left != right {
                            return Err(Error::Simplicial(format!(
                                "d_{i} d_{j} != d_{} d_{i} at {}",
                                j - 1,
                                self.ids[dim][s.index]
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Admissible degeneracy words lifting dimension q to dimension p:
/// strictly decreasing sequences of length p - q with entries j_m valid at
/// the dimension where they apply.
fn degeneracy_words(p: usize, q: usize) -> Vec<Vec<usize>> {
    let k = p - q;
    if k == 0 {
        return vec![Vec::new()];
    }
    // Build inner-first: the innermost s_{j_k} acts on a q-simplex so
    // j_k <= q; each subsequent (outer) index is strictly larger and at most
    // the current dimension. Equivalently: strictly decreasing words
    // j_1 > ... > j_k with j_m <= q + k - m.
    fn rec(level: usize, max: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if level == k {
            out.push(acc.clone());
            return;
        }
        // index at position `level` (outermost = 0) bounded by max, and we
        // need k - level - 1 strictly smaller nonnegative values below it.
        for j in (k - level - 1..=max).rev() {
            acc.push(j);
            rec(level + 1, j.saturating_sub(1), k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    rec(0, q + k - 1, k, &mut acc, &mut out);
    out
}

// ---------------------------------------------------------------------------
// JSON description format
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
struct JsonSset {
    name: String,
    truncation: usize,
    simplices: Vec<JsonSimplex>,
}

#[derive(Deserialize)]
struct JsonSimplex {
    dim: usize,
    id: String,
    #[serde(default)]
    faces: Vec<JsonFaceRef>,
}

#[derive(Deserialize)]
struct JsonFaceRef {
    base: String,
    #[serde(default)]
    degeneracies: Vec<usize>,
}

impl FiniteSimplicialSet {
    /// Load from the JSON description format: a flat list of nondegenerate
    /// simplices with explicit face tables; degenerate faces are written as
    /// a base id plus a degeneracy word. Simplicial identities are
    /// validated.
    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: JsonSset =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("sset JSON: {e}")))?;
        let mut ids: Vec<Vec<String>> = vec![Vec::new(); parsed.truncation + 1];
        let mut by_id: BTreeMap<String, SimplexId> = BTreeMap::new();
        for s in &parsed.simplices {
            if s.dim > parsed.truncation {
                return Err(Error::Simplicial(format!(
                    "simplex {} above truncation",
                    s.id
                )));
            }
            let index = ids[s.dim].len();
            if by_id
                .insert(s.id.clone(), SimplexId { dim: s.dim, index })
                .is_some()
            {
                return Err(Error::Simplicial(format!("duplicate id {}", s.id)));
            }
            ids[s.dim].push(s.id.clone());
        }
        let mut faces: Vec<Vec<Vec<SimplexRef>>> = vec![Vec::new(); parsed.truncation + 1];
        for dim in 0..=parsed.truncation {
            faces[dim] = vec![Vec::new(); ids[dim].len()];
        }
        for s in &parsed.simplices {
            if s.dim == 0 {
                continue;
            }
            let resolved = s
                .faces
                .iter()
                .map(|f| {
                    let base = *by_id.get(&f.base).ok_or_else(|| {
                        Error::Simplicial(format!("unknown face id {}", f.base))
                    })?;
                    Ok(SimplexRef {
                        word: f.degeneracies.clone(),
                        base,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let id = by_id[&s.id];
            faces[s.dim][id.index] = resolved;
        }
        FiniteSimplicialSet::new(&parsed.name, parsed.truncation, ids, faces)
    }
}

// ---------------------------------------------------------------------------
// Stock bases
// ---------------------------------------------------------------------------

/// The standard simplex Delta[m], truncated at level `truncation`.
pub fn standard_simplex(m: usize, truncation: usize) -> FiniteSimplicialSet {
    simplex_like(&format!("Delta[{m}]"), m, truncation, |verts| {
        verts.len() <= m + 1
    })
}

/// The boundary of Delta[2] (vertices and edges only).
pub fn boundary_delta2(truncation: usize) -> FiniteSimplicialSet {
    simplex_like("dDelta[2]", 2, truncation, |verts| verts.len() <= 2)
}

fn simplex_like(
    name: &str,
    m: usize,
    truncation: usize,
    keep: impl Fn(&[usize]) -> bool,
) -> FiniteSimplicialSet {
    // Nondegenerate p-simplices are strictly increasing vertex tuples.
    let mut per_dim: Vec<Vec<Vec<usize>>> = Vec::new();
    for p in 0..=truncation {
        let mut simplices = Vec::new();
        subsets(m, p + 1, &mut |verts| {
            if keep(verts) {
                simplices.push(verts.to_vec());
            }
        });
        per_dim.push(simplices);
    }
    let lookup: Vec<BTreeMap<Vec<usize>, usize>> = per_dim
        .iter()
        .map(|list| {
            list.iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), i))
                .collect()
        })
        .collect();
    let ids: Vec<Vec<String>> = per_dim
        .iter()
        .map(|list| {
            list.iter()
                .map(|verts| {
                    verts
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()
                        .join("")
                })
                .collect()
        })
        .collect();
    let mut faces: Vec<Vec<Vec<SimplexRef>>> = vec![Vec::new(); truncation + 1];
    for p in 1..=truncation {
        for verts in &per_dim[p] {
            let mut row = Vec::with_capacity(p + 1);
            for i in 0..=p {
                let mut fv = verts.clone();
                fv.remove(i);
                let index = lookup[p - 1][&fv];
                row.push(SimplexRef::nondegenerate(SimplexId {
                    dim: p - 1,
                    index,
                }));
            }
            faces[p].push(row);
        }
    }
    FiniteSimplicialSet::new(name, truncation, ids, faces).expect("stock base is valid")
}

fn subsets(m: usize, size: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(m: usize, size: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if acc.len() == size {
            f(acc);
            return;
        }
        for v in start..=m {
            acc.push(v);
            rec(m, size, v + 1, acc, f);
            acc.pop();
        }
    }
    rec(m, size, 0, &mut Vec::new(), f);
}

/// The nerve of Z/2: one nondegenerate simplex (s, ..., s) per dimension.
pub fn nerve_z2(truncation: usize) -> FiniteSimplicialSet {
    let ids: Vec<Vec<String>> = (0..=truncation)
        .map(|p| vec![format!("s^{p}")])
        .collect();
    let mut faces: Vec<Vec<Vec<SimplexRef>>> = vec![Vec::new(); truncation + 1];
    for p in 1..=truncation {
        let mut row = Vec::with_capacity(p + 1);
        for i in 0..=p {
            if i == 0 || i == p {
                row.push(SimplexRef::nondegenerate(SimplexId {
                    dim: p - 1,
                    index: 0,
                }));
            } else {
                // Multiplying the two middle entries gives the identity:
                // d_i (s,...,s) = s_{i-1} (s,...,s) one dimension further down.
                row.push(SimplexRef {
                    word: vec![i - 1],
                    base: SimplexId {
                        dim: p - 2,
                        index: 0,
                    },
                });
            }
        }
        faces[p].push(row);
    }
    FiniteSimplicialSet::new("BZ/2", truncation, ids, faces).expect("nerve is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta2_counts() {
        let s = standard_simplex(2, 3);
        assert_eq!(s.num_nondegenerate(0), 3);
        assert_eq!(s.num_nondegenerate(1), 3);
        assert_eq!(s.num_nondegenerate(2), 1);
        assert_eq!(s.num_nondegenerate(3), 0);
        // Total 3-simplices of Delta[2]: monotone maps [3] -> [2]: C(6,4) = 15.
        assert_eq!(s.all_simplices(3).len(), 15);
    }

    #[test]
    fn boundary_has_no_interior() {
        let s = boundary_delta2(3);
        assert_eq!(s.num_nondegenerate(2), 0);
        assert_eq!(s.num_nondegenerate(1), 3);
    }

    #[test]
    fn nerve_face_identities() {
        // Validation inside the constructor already checks the identities;
        // spot-check a middle face lands on a degenerate reference.
        let s = nerve_z2(4);
        let c3 = SimplexRef::nondegenerate(SimplexId { dim: 3, index: 0 });
        let f1 = s.face(&c3, 1).unwrap();
        assert!(f1.is_degenerate());
        assert_eq!(f1.word, vec![0]);
    }

    #[test]
    fn face_of_degenerate_reference() {
        // d_i s_j identities, spot checked: d_0 s_0 = id.
        let s = standard_simplex(1, 3);
        let edge = SimplexRef::nondegenerate(SimplexId { dim: 1, index: 0 });
        let degen = s.degeneracy(&edge, 0).unwrap();
        assert_eq!(s.face(&degen, 0).unwrap(), edge);
        assert_eq!(s.face(&degen, 1).unwrap(), edge);
        // d_2 s_0 = s_0 d_1.
        let left = s.face(&degen, 2).unwrap();
        let d1 = s.face(&edge, 1).unwrap();
        let right = s.degeneracy(&d1, 0).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn structure_map_epi_mono() {
        let s = standard_simplex(2, 4);
        let tri = SimplexRef::nondegenerate(SimplexId { dim: 2, index: 0 });
        // phi: [1] -> [2] hitting {0, 2} is the long edge "02".
        let edge = s.structure_map(&tri, &[0, 2]).unwrap();
        assert!(!edge.is_degenerate());
        assert_eq!(s.id_of(edge.base), "02");
        // A constant map [2] -> [2] at vertex 1 is the doubly degenerate
        // vertex "1".
        let v = s.structure_map(&tri, &[1, 1, 1]).unwrap();
        assert_eq!(v.base.dim, 0);
        assert_eq!(s.id_of(v.base), "1");
        assert_eq!(v.word.len(), 2);
    }

    #[test]
    fn all_simplices_of_nerve() {
        // BZ/2 has 2^p simplices in dimension p.
        let s = nerve_z2(4);
        for p in 0..=4usize {
            assert_eq!(s.all_simplices(p).len(), 1 << p, "dimension {p}");
        }
    }

    #[test]
    fn json_round_trip_semantics() {
        let text = r#"{
            "name": "interval",
            "truncation": 2,
            "simplices": [
                {"dim": 0, "id": "a"},
                {"dim": 0, "id": "b"},
                {"dim": 1, "id": "ab", "faces": [{"base": "b"}, {"base": "a"}]},
                {"dim": 2, "id": "squash",
                 "faces": [{"base": "ab"}, {"base": "ab"},
                            {"base": "a", "degeneracies": [0]}]}
            ]
        }"#;
        let s = FiniteSimplicialSet::from_json(text).unwrap();
        assert_eq!(s.num_nondegenerate(2), 1);
        let squash = SimplexRef::nondegenerate(SimplexId { dim: 2, index: 0 });
        assert!(s.face(&squash, 2).unwrap().is_degenerate());
        // A bad table (face identities violated) is rejected.
        let bad = text.replace(
            r#"{"base": "a", "degeneracies": [0]}"#,
            r#"{"base": "b", "degeneracies": [0]}"#,
        );
        assert!(FiniteSimplicialSet::from_json(&bad).is_err());
    }
}
