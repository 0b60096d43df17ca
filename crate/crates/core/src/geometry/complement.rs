//! Complementary regions of a taut pair of simple curves.
//!
//! The chords cut the polygon into regions. Each region is a disk; regions
//! are glued across identified sides along the boundary segments between
//! consecutive slots, and every region touching a polygon vertex contains the
//! single vertex of the surface. A component of the complement made of `F`
//! regions, `E` glued segment pairs and `V` vertices has Euler characteristic
//! `F - E + V`.

use std::fmt;

use super::diagram::{chords_cross, Chord, CurveDiagram};
use super::geodesic::in_arc;
use crate::error::{Error, Result};
use crate::surface::{CurveClass, Surface};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplementReport {
    /// Number of complementary components that are disks.
    pub face_count: usize,
    /// Corner count of each disk component, ascending.
    pub corner_counts: Vec<usize>,
    /// Euler characteristic of the complement.
    pub euler_total: i64,
    pub crossing_count: usize,
}

impl fmt::Display for ComplementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let corners: Vec<String> = self.corner_counts.iter().map(|c| c.to_string()).collect();
        write!(
            f,
            "crossings={} euler={} faces={} corners=[{}]",
            self.crossing_count,
            self.euler_total,
            self.face_count,
            corners.join(",")
        )
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Node {
    Vertex,
    Slot,
    Crossing,
}

struct Map {
    kind: Vec<Node>,
    /// Outgoing half-edges of each node in counterclockwise order.
    rotation: Vec<Vec<usize>>,
    /// Target node of each half-edge; the twin of `h` is `h ^ 1`.
    target: Vec<usize>,
    /// Boundary segment `(side, index)` of forward boundary half-edges.
    segment: Vec<Option<(usize, usize)>>,
    /// Backward boundary half-edges bound the outside of the polygon.
    outer: Vec<bool>,
}

impl Map {
    fn add_edge(&mut self, u: usize, v: usize) -> usize {
        let h = self.target.len();
        self.target.extend([v, u]);
        self.segment.extend([None, None]);
        self.outer.extend([false, false]);
        h
    }

    fn origin(&self, h: usize) -> usize {
        self.target[h ^ 1]
    }
}

/// Order of the chords crossing `c`, from its entry to its exit.
fn order_along(c: &Chord, crossers: &[(usize, Chord)]) -> Result<Vec<usize>> {
    let mut ranked = Vec::with_capacity(crossers.len());
    for (x, (id, d)) in crossers.iter().enumerate() {
        let mut before = 0;
        for (y, (_, e)) in crossers.iter().enumerate() {
            if x == y {
                continue;
            }
            if chords_cross(d, e) {
                return Err(Error::InvalidArgument(
                    "face structure needs a diagram without triple configurations".into(),
                ));
            }
            // e precedes d when d lies on the exit side of e
            if in_arc(e.entry, e.exit, c.exit) == in_arc(e.entry, e.exit, d.entry) {
                before += 1;
            }
        }
        ranked.push((before, *id));
    }
    ranked.sort();
    Ok(ranked.into_iter().map(|(_, id)| id).collect())
}

fn build_map(d: &CurveDiagram) -> Result<Map> {
    let n = d.side_count();
    let mut map = Map {
        kind: Vec::new(),
        rotation: Vec::new(),
        target: Vec::new(),
        segment: Vec::new(),
        outer: Vec::new(),
    };
    // boundary ring: V_0, slots of side 0, V_1, ...
    let mut slot_node = vec![Vec::new(); n];
    let mut ring = Vec::new();
    for (side, nodes) in slot_node.iter_mut().enumerate() {
        ring.push(map.kind.len());
        map.kind.push(Node::Vertex);
        for _ in 0..d.slot_count(side) {
            nodes.push(map.kind.len());
            ring.push(map.kind.len());
            map.kind.push(Node::Slot);
        }
    }
    let chords: Vec<Chord> = d.chords().map(|(_, c)| *c).collect();
    let crossings = d.crossings();
    let label: Vec<(usize, usize)> = d.chords().map(|(l, _)| l).collect();
    let index_of = |l: (usize, usize)| label.iter().position(|&x| x == l).expect("chord label");
    let mut crossers: Vec<Vec<(usize, Chord)>> = vec![Vec::new(); chords.len()];
    let mut crossing_node = std::collections::HashMap::new();
    for x in &crossings {
        let (i, j) = (index_of(x.a), index_of(x.b));
        crossers[i].push((j, chords[j]));
        crossers[j].push((i, chords[i]));
        crossing_node.insert((i.min(j), i.max(j)), map.kind.len());
        map.kind.push(Node::Crossing);
    }
    map.rotation = vec![Vec::new(); map.kind.len()];

    let m = ring.len();
    let mut forward = vec![0; m];
    let mut side = 0;
    let mut seg = 0;
    for i in 0..m {
        if map.kind[ring[i]] == Node::Vertex {
            side = if i == 0 { 0 } else { side + 1 };
            seg = 0;
        }
        let h = map.add_edge(ring[i], ring[(i + 1) % m]);
        map.segment[h] = Some((side, seg));
        map.outer[h + 1] = true;
        forward[i] = h;
        seg += 1;
    }
    // per node: (forward out, chord out, backward out)
    let mut inward = vec![None; map.kind.len()];
    // per crossing node: outgoing half-edges along chords, keyed by chord id
    let mut along: std::collections::HashMap<(usize, usize), (usize, usize)> = Default::default();
    for (ci, c) in chords.iter().enumerate() {
        let order = order_along(c, &crossers[ci])?;
        let mut seq = vec![slot_node[c.entry.side][c.entry.index]];
        for other in &order {
            seq.push(crossing_node[&(ci.min(*other), ci.max(*other))]);
        }
        seq.push(slot_node[c.exit.side][c.exit.index]);
        for w in 0..seq.len() - 1 {
            let h = map.add_edge(seq[w], seq[w + 1]);
            if w == 0 {
                inward[seq[0]] = Some(h);
            }
            if w + 2 == seq.len() {
                inward[seq[w + 1]] = Some(h ^ 1);
            }
            // forward half-edge out of seq[w] and backward out of seq[w+1]
            if w > 0 {
                along.entry((seq[w], ci)).or_insert((usize::MAX, usize::MAX)).0 = h;
            }
            if w + 2 < seq.len() {
                along.entry((seq[w + 1], ci)).or_insert((usize::MAX, usize::MAX)).1 = h ^ 1;
            }
        }
    }
    for i in 0..m {
        let node = ring[i];
        let fwd = forward[i];
        let back = forward[(i + m - 1) % m] ^ 1;
        map.rotation[node] = match inward[node] {
            Some(c) => vec![fwd, c, back],
            None => vec![fwd, back],
        };
    }
    for x in &crossings {
        let (i, j) = (index_of(x.a), index_of(x.b));
        let node = crossing_node[&(i.min(j), i.max(j))];
        let (c, e) = (chords[i], chords[j]);
        let (cf, cb) = along[&(node, i)];
        let (ef, eb) = along[&(node, j)];
        // the endpoint of e lying in the ccw arc from c.exit to c.entry is on the left of c
        let (left, right) = if in_arc(c.exit, c.entry, e.exit) { (ef, eb) } else { (eb, ef) };
        map.rotation[node] = vec![cf, left, cb, right];
    }
    Ok(map)
}

struct Face {
    segments: Vec<(usize, usize)>,
    corners: usize,
    vertex: bool,
}

fn trace_faces(map: &Map) -> Vec<Face> {
    let mut position = vec![0; map.target.len()];
    for rot in &map.rotation {
        for (p, &h) in rot.iter().enumerate() {
            position[h] = p;
        }
    }
    let mut seen = vec![false; map.target.len()];
    let mut faces = Vec::new();
    for start in 0..map.target.len() {
        if seen[start] || map.outer[start] {
            continue;
        }
        let mut face = Face {
            segments: Vec::new(),
            corners: 0,
            vertex: false,
        };
        let mut h = start;
        while !seen[h] {
            seen[h] = true;
            match map.kind[map.origin(h)] {
                Node::Crossing => face.corners += 1,
                Node::Vertex => face.vertex = true,
                Node::Slot => {}
            }
            if let Some(s) = map.segment[h] {
                face.segments.push(s);
            }
            let v = map.target[h];
            let rot = &map.rotation[v];
            let p = position[h ^ 1];
            h = rot[(p + rot.len() - 1) % rot.len()];
        }
        faces.push(face);
    }
    faces
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Face structure of the complement of a diagram whose chords meet at most pairwise.
pub fn complement_of(s: &Surface, d: &CurveDiagram) -> Result<ComplementReport> {
    let map = build_map(d)?;
    let faces = trace_faces(&map);
    let model = s.polygon_model()?;
    let mut owner = std::collections::HashMap::new();
    for (f, face) in faces.iter().enumerate() {
        for &seg in &face.segments {
            owner.insert(seg, f);
        }
    }
    let mut parent: Vec<usize> = (0..faces.len()).collect();
    let vertex_faces: Vec<usize> = (0..faces.len()).filter(|&f| faces[f].vertex).collect();
    for w in vertex_faces.windows(2) {
        let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
        parent[a] = b;
    }
    let mut pairs = Vec::new();
    for side in 0..d.side_count() {
        let l = model.letter_across(side);
        if l.is_inverse() {
            continue;
        }
        let other = model.side(l.inverse());
        let m = d.slot_count(side);
        for j in 0..=m {
            let (a, b) = (owner[&(side, j)], owner[&(other, m - j)]);
            pairs.push(a);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
    }
    let mut chi = std::collections::BTreeMap::<usize, (i64, usize)>::new();
    for (f, face) in faces.iter().enumerate() {
        let e = chi.entry(find(&mut parent, f)).or_default();
        e.0 += 1;
        e.1 += face.corners;
    }
    for a in pairs {
        chi.get_mut(&find(&mut parent, a)).expect("component").0 -= 1;
    }
    if let Some(&v) = vertex_faces.first() {
        chi.get_mut(&find(&mut parent, v)).expect("component").0 += 1;
    }
    let mut corner_counts: Vec<usize> = chi.values().filter(|(x, _)| *x == 1).map(|(_, c)| *c).collect();
    corner_counts.sort_unstable();
    Ok(ComplementReport {
        face_count: corner_counts.len(),
        corner_counts,
        euler_total: chi.values().map(|(x, _)| x).sum(),
        crossing_count: d.crossing_count(),
    })
}

impl Surface {
    /// Complementary regions of the taut union of two simple curves.
    pub fn complement_report(&self, x: &CurveClass, y: &CurveClass) -> Result<ComplementReport> {
        for c in [x, y] {
            if !self.is_simple(c)? {
                return Err(Error::NotSimple(c.to_string()));
            }
        }
        let d = self.taut_diagram(&[x.clone(), y.clone()])?;
        complement_of(self, &d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(g: usize, x: &str, y: &str) -> ComplementReport {
        let s = Surface::new(g).unwrap();
        s.complement_report(&s.parse_class(x).unwrap(), &s.parse_class(y).unwrap()).unwrap()
    }

    #[test]
    fn empty_diagram_is_the_surface() {
        let s = Surface::new(2).unwrap();
        let d = s.taut_diagram(&[]).unwrap();
        let r = complement_of(&s, &d).unwrap();
        assert_eq!(r.euler_total, -2);
        assert_eq!(r.face_count, 0);
    }

    #[test]
    fn dual_generators() {
        let r = report(2, "a1", "b1");
        assert_eq!((r.crossing_count, r.euler_total, r.face_count), (1, -1, 0));
    }

    #[test]
    fn disjoint_generators() {
        let r = report(2, "a1", "a2");
        assert_eq!((r.crossing_count, r.euler_total), (0, -2));
        let r = report(2, "a1", "a1");
        assert_eq!((r.crossing_count, r.euler_total), (0, -2));
    }

    #[test]
    fn rejects_non_simple() {
        let s = Surface::new(2).unwrap();
        let c = s.parse_class("a1 a1").unwrap();
        assert!(matches!(s.complement_report(&c, &c), Err(Error::NotSimple(_))));
    }

    #[test]
    fn euler_identity_and_corners() {
        let s = Surface::new(2).unwrap();
        let simple = s.enumerate_simple_classes(3).unwrap();
        for x in simple.iter() {
            for y in simple.iter() {
                let r = s.complement_report(x, y).unwrap();
                assert_eq!(r.euler_total, -2 + r.crossing_count as i64, "{x} {y}");
                assert!(r.corner_counts.iter().all(|&c| c >= 4), "{x} {y} {r}");
                if r.crossing_count > 0 {
                    assert!(r.face_count < r.crossing_count, "{x} {y} {r}");
                }
            }
        }
    }
}
