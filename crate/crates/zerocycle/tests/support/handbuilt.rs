//! Small configurations assembled in code rather than read from fixtures.

use zerocycle_core::{
    Branch, GluingConfiguration, PointBlock, Slot, UpstreamComponent, UpstreamPoint,
};

type Classes<'a> = &'a [&'a [(&'a str, char)]];

fn build(
    name: &str,
    components: &[&str],
    points: &[(&str, &str, &str)],
    map: &[(&str, &str)],
    blocks: &[(&str, &[&str])],
    classes: Classes<'_>,
) -> GluingConfiguration {
    GluingConfiguration {
        name: name.into(),
        upstream_components: components
            .iter()
            .map(|c| UpstreamComponent {
                id: (*c).into(),
                label: None,
            })
            .collect(),
        upstream_points: points
            .iter()
            .map(|(id, a, b)| UpstreamPoint {
                id: (*id).into(),
                label: None,
                branches: [(*a).into(), (*b).into()],
            })
            .collect(),
        component_map: map
            .iter()
            .map(|(k, v)| ((*k).into(), (*v).into()))
            .collect(),
        point_blocks: blocks
            .iter()
            .map(|(label, pts)| PointBlock {
                label: (*label).into(),
                points: pts.iter().map(|p| (*p).into()).collect(),
            })
            .collect(),
        branch_classes: classes
            .iter()
            .map(|class| {
                class
                    .iter()
                    .map(|(p, s)| Branch::new(*p, if *s == 'a' { Slot::A } else { Slot::B }))
                    .collect()
            })
            .collect(),
    }
}

fn identity(name: &str, n: usize, edges: &[(usize, usize)]) -> GluingConfiguration {
    let components = (0..n)
        .map(|i| UpstreamComponent {
            id: format!("L{i}"),
            label: None,
        })
        .collect();
    let points = edges
        .iter()
        .map(|(i, j)| UpstreamPoint {
            id: format!("p{i}{j}"),
            label: None,
            branches: [format!("L{i}"), format!("L{j}")],
        })
        .collect();
    GluingConfiguration::identity_gluing(name, components, points)
}

fn cycle(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn path(n: usize) -> Vec<(usize, usize)> {
    (0..n - 1).map(|i| (i, i + 1)).collect()
}

/// Four lines in a cycle folded two to one onto a pair of lines.
fn square_fold(name: &str, joined: bool) -> GluingConfiguration {
    let components = ["L1", "L2", "L3", "L4"];
    let points = [
        ("p12", "L1", "L2"),
        ("p23", "L2", "L3"),
        ("p34", "L3", "L4"),
        ("p41", "L4", "L1"),
    ];
    let map = [("L1", "A"), ("L2", "B"), ("L3", "A"), ("L4", "B")];
    if joined {
        build(
            name,
            &components,
            &points,
            &map,
            &[("x", &["p12", "p34"]), ("y", &["p23", "p41"])],
            &[
                &[("p12", 'a'), ("p34", 'a')],
                &[("p12", 'b'), ("p34", 'b')],
                &[("p23", 'a'), ("p41", 'a')],
                &[("p23", 'b'), ("p41", 'b')],
            ],
        )
    } else {
        build(
            name,
            &components,
            &points,
            &map,
            &[
                ("x", &["p12"]),
                ("y", &["p23"]),
                ("z", &["p34"]),
                ("w", &["p41"]),
            ],
            &[
                &[("p12", 'a')],
                &[("p12", 'b')],
                &[("p23", 'a')],
                &[("p23", 'b')],
                &[("p34", 'a')],
                &[("p34", 'b')],
                &[("p41", 'a')],
                &[("p41", 'b')],
            ],
        )
    }
}

/// Three lines along a path with the two ends sent to one line.
fn path_fold(name: &str, joined: bool) -> GluingConfiguration {
    let components = ["L1", "L2", "L3"];
    let points = [("p", "L1", "L2"), ("q", "L2", "L3")];
    let map = [("L1", "A"), ("L2", "B"), ("L3", "A")];
    if joined {
        build(
            name,
            &components,
            &points,
            &map,
            &[("x", &["p", "q"])],
            &[&[("p", 'a'), ("q", 'b')], &[("p", 'b'), ("q", 'a')]],
        )
    } else {
        build(
            name,
            &components,
            &points,
            &map,
            &[("x", &["p"]), ("y", &["q"])],
            &[&[("p", 'a')], &[("p", 'b')], &[("q", 'a')], &[("q", 'b')]],
        )
    }
}

/// A triangle whose three vertices are merged into one point, pinching each side.
fn triangle_vertices_merged() -> GluingConfiguration {
    build(
        "triangle-vertices-merged",
        &["L1", "L2", "L3"],
        &[
            ("p12", "L1", "L2"),
            ("p13", "L1", "L3"),
            ("p23", "L2", "L3"),
        ],
        &[("L1", "L1"), ("L2", "L2"), ("L3", "L3")],
        &[("x", &["p12", "p13", "p23"])],
        &[
            &[("p12", 'a'), ("p13", 'a')],
            &[("p12", 'b'), ("p23", 'a')],
            &[("p13", 'b'), ("p23", 'b')],
        ],
    )
}

/// Two lines meeting once, folded onto a single nodal line.
fn cross_to_node() -> GluingConfiguration {
    build(
        "cross-to-node",
        &["L1", "L2"],
        &[("p", "L1", "L2")],
        &[("L1", "A"), ("L2", "A")],
        &[("x", &["p"])],
        &[&[("p", 'a')], &[("p", 'b')]],
    )
}

pub fn handbuilt() -> Vec<GluingConfiguration> {
    vec![
        identity("path-3", 3, &path(3)),
        identity("path-4", 4, &path(4)),
        identity("cycle-5", 5, &cycle(5)),
        identity("cycle-6", 6, &cycle(6)),
        identity("claw", 4, &[(0, 1), (0, 2), (0, 3)]),
        identity("k4", 4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        path_fold("path-fold-apart", false),
        path_fold("path-fold-joined", true),
        square_fold("square-fold-apart", false),
        square_fold("square-fold-joined", true),
        triangle_vertices_merged(),
        cross_to_node(),
    ]
}
