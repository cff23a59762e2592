//! Named graph families: closed-form rvd values and the explicit colorings
//! that witness them, plus the short-cycle and cactus coloring schemes.

use thiserror::Error;

use crate::blocks::block_decomposition;
use crate::coloring::VertexColoring;
use crate::cycles::first_cycle_of_length;
use crate::girth::girth;
use crate::graph::{Graph, GraphError};
use crate::rainbow::{verify_coloring, Verification};
use crate::solver::{compose_block_colorings, SolverError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("unrecognized family descriptor {raw:?}: {msg}")]
    BadDescriptor { raw: String, msg: String },
    #[error("{0}")]
    Hypothesis(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<SolverError> for FamilyError {
    fn from(e: SolverError) -> Self {
        FamilyError::Invariant(e.to_string())
    }
}

impl From<crate::coloring::ColoringError> for FamilyError {
    fn from(e: crate::coloring::ColoringError) -> Self {
        FamilyError::Invariant(e.to_string())
    }
}

// ---------------------------------------------------------------------------
// Plain constructors.

/// Path on `n ≥ 1` vertices, numbered along the path.
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Cycle on `n ≥ 3` vertices, numbered cyclically.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::OrderTooSmall { n, min: 3 });
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Complete graph on `n ≥ 1` vertices.
pub fn complete_graph(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Star K_{1,n−1} on `n ≥ 2` vertices, center 0.
pub fn star_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::OrderTooSmall { n, min: 2 });
    }
    Graph::from_edges(n, (1..n).map(|leaf| (0, leaf)))
}

/// Wheel with a rim cycle on `rim ≥ 3` vertices (0..rim, cyclic) and the hub
/// as the last vertex.
pub fn wheel_graph(rim: usize) -> Result<Graph, GraphError> {
    if rim < 3 {
        return Err(GraphError::OrderTooSmall { n: rim + 1, min: 4 });
    }
    let rim_edges = (0..rim).map(|i| (i, (i + 1) % rim));
    let spokes = (0..rim).map(|i| (i, rim));
    Graph::from_edges(rim + 1, rim_edges.chain(spokes))
}

/// Complete multipartite graph; vertices are numbered part by part, parts in
/// the given order.
pub fn multipartite_graph(parts: &[usize]) -> Result<Graph, GraphError> {
    let n: usize = parts.iter().sum();
    if parts.len() < 2 || parts.iter().any(|&p| p == 0) {
        return Err(GraphError::OrderTooSmall { n, min: 2 });
    }
    let mut starts = Vec::with_capacity(parts.len() + 1);
    let mut acc = 0;
    for &p in parts {
        starts.push(acc);
        acc += p;
    }
    starts.push(acc);
    let mut g = Graph::empty(n)?;
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            for u in starts[i]..starts[i + 1] {
                for v in starts[j]..starts[j + 1] {
                    g.add_edge(u, v)?;
                }
            }
        }
    }
    Ok(g)
}

/// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes.
pub fn petersen_graph() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("fixed edge list is valid")
}

// ---------------------------------------------------------------------------
// Family descriptors.

/// A named family instance with closed-form rvd value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Realized as the path P_n; the value (one color) holds for every tree.
    Tree { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// Rim length `rim`; the wheel has `rim + 1` vertices.
    Wheel { rim: usize },
    /// Complete multipartite with part sizes ascending.
    Multipartite { parts: Vec<usize> },
}

impl FamilySpec {
    /// Parse a descriptor such as `cycle:n=6`, `wheel:n=8`, `complete:n=5`,
    /// `tree:n=4`, or `kpartite:1,2,3`.
    pub fn parse(desc: &str) -> Result<Self, FamilyError> {
        let bad = |msg: &str| FamilyError::BadDescriptor {
            raw: desc.to_string(),
            msg: msg.to_string(),
        };
        let (kind, rest) = desc
            .split_once(':')
            .ok_or_else(|| bad("expected kind:parameters"))?;
        let parse_n = |rest: &str| -> Result<usize, FamilyError> {
            let value = rest
                .strip_prefix("n=")
                .ok_or_else(|| bad("expected n=<integer>"))?;
            value.parse().map_err(|_| bad("expected n=<integer>"))
        };
        let spec = match kind {
            "tree" | "path" => FamilySpec::Tree { n: parse_n(rest)? },
            "cycle" => FamilySpec::Cycle { n: parse_n(rest)? },
            "complete" => FamilySpec::Complete { n: parse_n(rest)? },
            "wheel" => FamilySpec::Wheel { rim: parse_n(rest)? },
            "kpartite" => {
                let parts: Vec<usize> = rest
                    .split(',')
                    .map(|p| p.trim().parse::<usize>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad("expected kpartite:<size>,<size>,..."))?;
                FamilySpec::Multipartite { parts }
            }
            _ => {
                return Err(bad(
                    "known kinds are tree, cycle, complete, wheel, kpartite",
                ))
            }
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Check the hypotheses under which the closed-form value is proved.
    pub fn validate(&self) -> Result<(), FamilyError> {
        let fail = |msg: String| Err(FamilyError::Hypothesis(msg));
        match self {
            FamilySpec::Tree { n } => {
                if *n == 0 {
                    return fail("a tree needs at least one vertex".into());
                }
            }
            FamilySpec::Cycle { n } => {
                if *n < 3 {
                    return fail(format!("a cycle needs at least 3 vertices, got {n}"));
                }
            }
            FamilySpec::Complete { n } => {
                if *n == 0 {
                    return fail("a complete graph needs at least one vertex".into());
                }
            }
            FamilySpec::Wheel { rim } => {
                if *rim < 4 {
                    return fail(format!(
                        "the wheel formula needs rim length ≥ 4 (order ≥ 5), got rim {rim}; \
                         W_3 is the complete graph K_4 — use complete:n=4"
                    ));
                }
            }
            FamilySpec::Multipartite { parts } => {
                if parts.len() < 2 {
                    return fail(format!(
                        "a complete multipartite graph needs ≥ 2 parts, got {}",
                        parts.len()
                    ));
                }
                if parts.iter().any(|&p| p == 0) {
                    return fail("every part needs at least one vertex".into());
                }
                if parts.windows(2).any(|w| w[0] > w[1]) {
                    return fail(format!(
                        "part sizes must be ascending (the value formula reads off the \
                         second-largest part), got {parts:?}"
                    ));
                }
                let star = parts.len() == 2 && parts[0] == 1;
                if !star && parts[parts.len() - 1] < 2 {
                    return fail(format!(
                        "the multipartite formula needs the largest part ≥ 2, got {parts:?}; \
                         all parts of size 1 form the complete graph — use complete:n={}",
                        parts.len()
                    ));
                }
            }
        }
        Ok(())
    }

    /// Canonical descriptor string.
    pub fn describe(&self) -> String {
        match self {
            FamilySpec::Tree { n } => format!("tree:n={n}"),
            FamilySpec::Cycle { n } => format!("cycle:n={n}"),
            FamilySpec::Complete { n } => format!("complete:n={n}"),
            FamilySpec::Wheel { rim } => format!("wheel:n={rim}"),
            FamilySpec::Multipartite { parts } => {
                let sizes: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                format!("kpartite:{}", sizes.join(","))
            }
        }
    }

    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Tree { n } | FamilySpec::Cycle { n } | FamilySpec::Complete { n } => *n,
            FamilySpec::Wheel { rim } => rim + 1,
            FamilySpec::Multipartite { parts } => parts.iter().sum(),
        }
    }
}

/// Closed-form rvd value of the family instance.
pub fn family_value(spec: &FamilySpec) -> Result<usize, FamilyError> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Tree { .. } => 1,
        FamilySpec::Cycle { .. } => 2,
        FamilySpec::Complete { n } => match n {
            1 => 1,
            2 | 3 => n - 1,
            _ => *n,
        },
        FamilySpec::Wheel { rim } => {
            if rim % 4 == 0 {
                3
            } else {
                4
            }
        }
        FamilySpec::Multipartite { parts } => {
            let k = parts.len();
            let n: usize = parts.iter().sum();
            if k == 2 && parts[0] == 1 {
                1 // star: a tree
            } else if k >= 4 || (k == 3 && parts[0] >= 2) {
                n
            } else {
                // k = 3 with a singleton part, or k = 2 with both parts ≥ 2.
                n - parts[k - 2]
            }
        }
    })
}

/// The family graph together with the explicit coloring that attains
/// [`family_value`]. The coloring uses exactly that many colors.
pub fn family_coloring(spec: &FamilySpec) -> Result<(Graph, VertexColoring), FamilyError> {
    spec.validate()?;
    let pair = match spec {
        FamilySpec::Tree { n } => (path_graph(*n)?, VertexColoring::uniform(*n)),
        FamilySpec::Cycle { n } => {
            let mut colors = vec![2; *n];
            colors[0] = 1;
            colors[1] = 1;
            (cycle_graph(*n)?, VertexColoring::new(colors)?)
        }
        FamilySpec::Complete { n } => {
            let coloring = match *n {
                1 => VertexColoring::uniform(1),
                2 => VertexColoring::uniform(2),
                3 => VertexColoring::new(vec![1, 1, 2])?,
                _ => VertexColoring::all_distinct(*n),
            };
            (complete_graph(*n)?, coloring)
        }
        FamilySpec::Wheel { rim } => {
            let n = *rim;
            // Rim vertex v_i (1-based): color 1 when i ≡ 1, 2 (mod 4) and
            // color 2 when i ≡ 0, 3 (mod 4). When the rim length is not a
            // multiple of 4 the pattern stops two short, the last two rim
            // vertices share color 3, and the hub moves up to color 4.
            let pattern = |i: usize| if i % 4 == 1 || i % 4 == 2 { 1 } else { 2 };
            let mut colors = Vec::with_capacity(n + 1);
            if n % 4 == 0 {
                colors.extend((1..=n).map(pattern));
                colors.push(3);
            } else {
                colors.extend((1..=n - 2).map(pattern));
                colors.extend([3, 3, 4]);
            }
            (wheel_graph(n)?, VertexColoring::new(colors)?)
        }
        FamilySpec::Multipartite { parts } => {
            let g = multipartite_graph(parts)?;
            let k = parts.len();
            let n: usize = parts.iter().sum();
            let coloring = if k == 2 && parts[0] == 1 {
                VertexColoring::uniform(n)
            } else if k >= 4 || (k == 3 && parts[0] >= 2) {
                VertexColoring::all_distinct(n)
            } else if k == 3 {
                // Singleton part u first, then parts of sizes n_2 ≤ n_3;
                // each larger part counts 1.. within itself and u takes the
                // first color past the largest part.
                let (n2, n3) = (parts[1], parts[2]);
                let mut colors = vec![n3 + 1];
                colors.extend(1..=n2);
                colors.extend(1..=n3);
                VertexColoring::new(colors)?
            } else {
                let (n1, n2) = (parts[0], parts[1]);
                let mut colors: Vec<usize> = (1..=n1).collect();
                colors.extend(1..=n2);
                VertexColoring::new(colors)?
            };
            (g, coloring)
        }
    };
    Ok(pair)
}

// ---------------------------------------------------------------------------
// Coloring schemes for structural classes.

/// Color a shortest cycle (1, 1, 2, …, 2) and everything else distinctly;
/// valid whenever the girth is at least 4, with palette ≤ n − girth + 2.
/// The shortest cycle is chosen lexicographically least; the result is
/// re-verified before it is returned.
pub fn girth_based_coloring(g: &Graph) -> Result<VertexColoring, FamilyError> {
    if !g.connected() {
        return Err(GraphError::Disconnected.into());
    }
    let g0 = girth(g);
    if g0 == 0 {
        return Err(FamilyError::Hypothesis(
            "graph is acyclic; the short-cycle coloring needs a cycle (every tree takes one \
             color anyway)"
        .into(),
        ));
    }
    if g0 == 3 {
        return Err(FamilyError::Hypothesis(
            "graph contains a triangle; the short-cycle coloring needs girth ≥ 4".into(),
        ));
    }
    let cycle = first_cycle_of_length(g, g0)
        .ok_or_else(|| FamilyError::Invariant("girth cycle not found at girth length".into()))?;
    let mut colors = vec![0; g.n()];
    for (i, &v) in cycle.iter().enumerate() {
        colors[v] = if i < 2 { 1 } else { 2 };
    }
    let mut next = 3;
    for v in g.vertices() {
        if colors[v] == 0 {
            colors[v] = next;
            next += 1;
        }
    }
    let coloring = VertexColoring::new(colors)?;
    match verify_coloring(g, &coloring)? {
        Verification::Valid(_) => Ok(coloring),
        Verification::Invalid { x, y } => Err(FamilyError::Invariant(format!(
            "short-cycle coloring leaves pair ({x}, {y}) without a rainbow cut"
        ))),
    }
}

/// Color a graph whose blocks are all single edges or cycles: each cycle
/// block takes the (1, 1, 2, …, 2) pattern, each edge block a single color,
/// glued with [`compose_block_colorings`]. Uses two colors when any block is
/// a cycle, one otherwise.
pub fn cactus_coloring(g: &Graph) -> Result<VertexColoring, FamilyError> {
    if !g.connected() {
        return Err(GraphError::Disconnected.into());
    }
    if g.n() == 1 {
        return Ok(VertexColoring::uniform(1));
    }
    let decomp = block_decomposition(g)?;
    let mut per_block = Vec::with_capacity(decomp.blocks.len());
    for (idx, block) in decomp.blocks.iter().enumerate() {
        if block.len() == 2 {
            per_block.push(VertexColoring::uniform(2));
            continue;
        }
        let sub = decomp.block_subgraph(g, idx)?;
        let b = sub.graph.n();
        let is_cycle = sub.graph.m() == b && (0..b).all(|v| sub.graph.degree(v) == 2);
        if !is_cycle {
            return Err(FamilyError::Hypothesis(format!(
                "block {idx} on vertices {block:?} is neither a single edge nor a cycle, \
                 so two colors cannot suffice"
            )));
        }
        // Walk the cycle order within the block, starting at its least
        // vertex toward its least neighbor.
        let mut order = vec![0usize];
        let mut prev = 0;
        let mut cur = sub.graph.neighbors(0).next().expect("cycle vertex");
        while cur != 0 {
            order.push(cur);
            let next = sub
                .graph
                .neighbors(cur)
                .find(|&x| x != prev)
                .expect("cycle vertex has two neighbors");
            prev = cur;
            cur = next;
        }
        let mut colors = vec![0; b];
        for (i, &v) in order.iter().enumerate() {
            colors[v] = if i < 2 { 1 } else { 2 };
        }
        per_block.push(VertexColoring::new(colors)?);
    }
    let coloring = compose_block_colorings(g, &per_block)?;
    match verify_coloring(g, &coloring)? {
        Verification::Valid(_) => Ok(coloring),
        Verification::Invalid { x, y } => Err(FamilyError::Invariant(format!(
            "cactus coloring leaves pair ({x}, {y}) without a rainbow cut"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::rvd_exact;

    fn check(spec: &FamilySpec) {
        let value = family_value(spec).unwrap();
        let (g, c) = family_coloring(spec).unwrap();
        assert_eq!(c.len(), g.n(), "{}", spec.describe());
        assert_eq!(c.palette_size(), value, "{}", spec.describe());
        if g.n() >= 2 {
            assert!(
                verify_coloring(&g, &c).unwrap().is_valid(),
                "{} coloring rejected",
                spec.describe()
            );
        }
    }

    #[test]
    fn petersen_shape() {
        let g = petersen_graph();
        assert_eq!(g.n(), 10);
        assert_eq!(g.m(), 15);
        assert!(g.vertices().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn descriptor_round_trip() {
        for desc in [
            "tree:n=4",
            "cycle:n=6",
            "complete:n=5",
            "wheel:n=8",
            "kpartite:1,2,3",
        ] {
            let spec = FamilySpec::parse(desc).unwrap();
            assert_eq!(spec.describe(), desc);
        }
    }

    #[test]
    fn descriptor_rejects_unknown_and_malformed() {
        assert!(matches!(
            FamilySpec::parse("moebius:n=5"),
            Err(FamilyError::BadDescriptor { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("cycle:n=six"),
            Err(FamilyError::BadDescriptor { .. })
        ));
        assert!(matches!(
            FamilySpec::parse("cycle"),
            Err(FamilyError::BadDescriptor { .. })
        ));
    }

    #[test]
    fn hypothesis_violations_are_explained() {
        let w3 = FamilySpec::parse("wheel:n=3").unwrap_err();
        assert!(w3.to_string().contains("complete:n=4"), "{w3}");
        assert!(matches!(
            FamilySpec::parse("cycle:n=2"),
            Err(FamilyError::Hypothesis(_))
        ));
        assert!(matches!(
            FamilySpec::parse("kpartite:3,2"),
            Err(FamilyError::Hypothesis(_))
        ));
        assert!(matches!(
            FamilySpec::parse("kpartite:1,1,1"),
            Err(FamilyError::Hypothesis(_))
        ));
        assert!(matches!(
            FamilySpec::parse("kpartite:4"),
            Err(FamilyError::Hypothesis(_))
        ));
    }

    #[test]
    fn closed_form_values() {
        let cases = [
            ("tree:n=7", 1),
            ("cycle:n=6", 2),
            ("complete:n=2", 1),
            ("complete:n=3", 2),
            ("complete:n=5", 5),
            ("wheel:n=8", 3),
            ("wheel:n=5", 4),
            ("kpartite:2,3", 3),
            ("kpartite:1,7", 1),
            ("kpartite:1,1", 1),
            ("kpartite:1,2,3", 4),
            ("kpartite:3,3,3", 9),
            ("kpartite:2,2", 2),
            ("kpartite:1,1,2,2", 6),
        ];
        for (desc, want) in cases {
            let spec = FamilySpec::parse(desc).unwrap();
            assert_eq!(family_value(&spec).unwrap(), want, "{desc}");
        }
    }

    #[test]
    fn colorings_verify_and_match_values() {
        for desc in [
            "tree:n=6",
            "cycle:n=3",
            "cycle:n=12",
            "complete:n=2",
            "complete:n=3",
            "complete:n=6",
            "wheel:n=4",
            "wheel:n=5",
            "wheel:n=8",
            "kpartite:1,5",
            "kpartite:2,3",
            "kpartite:1,2,3",
            "kpartite:2,2,2",
            "kpartite:1,1,2,2",
        ] {
            check(&FamilySpec::parse(desc).unwrap());
        }
    }

    #[test]
    fn frozen_coloring_patterns() {
        let (_, c6) = family_coloring(&FamilySpec::Cycle { n: 6 }).unwrap();
        assert_eq!(c6.colors(), &[1, 1, 2, 2, 2, 2]);

        let (_, w5) = family_coloring(&FamilySpec::Wheel { rim: 5 }).unwrap();
        assert_eq!(w5.colors(), &[1, 1, 2, 3, 3, 4]);

        let (_, w8) = family_coloring(&FamilySpec::Wheel { rim: 8 }).unwrap();
        assert_eq!(w8.colors(), &[1, 1, 2, 2, 1, 1, 2, 2, 3]);

        let (_, k123) = family_coloring(&FamilySpec::Multipartite {
            parts: vec![1, 2, 3],
        })
        .unwrap();
        assert_eq!(k123.colors(), &[4, 1, 2, 1, 2, 3]);

        let (_, k23) = family_coloring(&FamilySpec::Multipartite { parts: vec![2, 3] }).unwrap();
        assert_eq!(k23.colors(), &[1, 2, 1, 2, 3]);
    }

    #[test]
    fn values_match_the_solver_on_small_instances() {
        for desc in ["cycle:n=5", "complete:n=4", "wheel:n=4", "kpartite:1,2,3"] {
            let spec = FamilySpec::parse(desc).unwrap();
            let (g, _) = family_coloring(&spec).unwrap();
            assert_eq!(
                rvd_exact(&g).unwrap().value,
                family_value(&spec).unwrap(),
                "{desc}"
            );
        }
    }

    #[test]
    fn girth_coloring_examples() {
        let c6 = cycle_graph(6).unwrap();
        let c = girth_based_coloring(&c6).unwrap();
        assert_eq!(c.palette_size(), 2);

        let k23 = multipartite_graph(&[2, 3]).unwrap();
        let c = girth_based_coloring(&k23).unwrap();
        assert!(c.palette_size() <= 3);

        let pet = petersen_graph();
        let c = girth_based_coloring(&pet).unwrap();
        assert!(c.palette_size() <= 7);
    }

    #[test]
    fn girth_coloring_rejects_triangles_and_trees() {
        assert!(matches!(
            girth_based_coloring(&complete_graph(3).unwrap()),
            Err(FamilyError::Hypothesis(_))
        ));
        assert!(matches!(
            girth_based_coloring(&path_graph(4).unwrap()),
            Err(FamilyError::Hypothesis(_))
        ));
    }

    #[test]
    fn cactus_coloring_examples() {
        let tree = path_graph(5).unwrap();
        assert_eq!(cactus_coloring(&tree).unwrap().palette_size(), 1);

        let bowtie =
            Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let c = cactus_coloring(&bowtie).unwrap();
        assert_eq!(c.colors(), &[1, 1, 2, 2, 1]);

        let triangle_pendant = Graph::from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)]).unwrap();
        let c = cactus_coloring(&triangle_pendant).unwrap();
        assert_eq!(c.palette_size(), 2);

        let c30 = cycle_graph(30).unwrap();
        assert_eq!(cactus_coloring(&c30).unwrap().palette_size(), 2);
    }

    #[test]
    fn cactus_coloring_names_offending_block() {
        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let err = cactus_coloring(&diamond).unwrap_err();
        assert!(matches!(err, FamilyError::Hypothesis(_)));
        assert!(err.to_string().contains("[0, 1, 2, 3]"), "{err}");
    }
}
