//! Seeded generator of valid gluing configurations.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use zerocycle_core::{
    Branch, GluingConfiguration, PointBlock, Slot, UpstreamComponent, UpstreamPoint,
};

pub struct GenParams {
    pub max_components: usize,
    pub max_points: usize,
    pub max_block: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            max_components: 7,
            max_points: 10,
            max_block: 3,
        }
    }
}

/// Splits the branches of one block into branch classes, or gives up.
fn classes_for_block(
    rng: &mut ChaCha8Rng,
    branches: &[(Branch, usize)],
) -> Option<Vec<Vec<Branch>>> {
    let mut by_image: BTreeMap<usize, Vec<&Branch>> = BTreeMap::new();
    for (b, image) in branches {
        by_image.entry(*image).or_default().push(b);
    }
    'attempt: for _ in 0..20 {
        let mut classes = Vec::new();
        for group in by_image.values() {
            let parts = rng.gen_range(1..=group.len().min(2));
            let mut split: Vec<Vec<Branch>> = vec![Vec::new(); parts];
            for b in group {
                split[rng.gen_range(0..parts)].push((*b).clone());
            }
            for class in split.into_iter().filter(|c| !c.is_empty()) {
                let mut points: Vec<&str> = class.iter().map(|b| b.point.as_str()).collect();
                points.sort_unstable();
                if points.windows(2).any(|w| w[0] == w[1]) {
                    continue 'attempt;
                }
                classes.push(class);
            }
        }
        if classes.len() <= 3 {
            return Some(classes);
        }
    }
    None
}

pub fn random_configuration(rng: &mut ChaCha8Rng, params: &GenParams) -> GluingConfiguration {
    let m1 = rng.gen_range(2..=params.max_components);
    let n1 = rng.gen_range(1..=m1);
    let comps: Vec<String> = (0..m1).map(|i| format!("U{i}")).collect();
    let mut image: Vec<usize> = (0..m1)
        .map(|i| if i < n1 { i } else { rng.gen_range(0..n1) })
        .collect();
    image.shuffle(rng);

    let m2 = rng.gen_range(0..=params.max_points);
    let mut points = Vec::new();
    for k in 0..m2 {
        let r = rng.gen_range(0..m1);
        let mut s = rng.gen_range(0..m1 - 1);
        if s >= r {
            s += 1;
        }
        points.push(UpstreamPoint {
            id: format!("p{k}"),
            label: None,
            branches: [comps[r].clone(), comps[s].clone()],
        });
    }
    let comp_index = |id: &str| comps.iter().position(|c| c == id).unwrap();

    let mut order: Vec<usize> = (0..m2).collect();
    order.shuffle(rng);
    let mut point_blocks = Vec::new();
    let mut branch_classes = Vec::new();
    let mut rest = &order[..];
    while !rest.is_empty() {
        let size = rng.gen_range(1..=params.max_block.min(rest.len()));
        let (chunk, tail) = rest.split_at(size);
        rest = tail;
        let branches = |idx: &[usize]| -> Vec<(Branch, usize)> {
            idx.iter()
                .flat_map(|&k| [Slot::A, Slot::B].into_iter().map(move |s| (k, s)))
                .map(|(k, s)| {
                    let p = &points[k];
                    (
                        Branch::new(p.id.clone(), s),
                        image[comp_index(&p.branches[s.index()])],
                    )
                })
                .collect()
        };
        let mut emit = |idx: &[usize], classes: Vec<Vec<Branch>>| {
            point_blocks.push(PointBlock {
                label: format!("x{}", point_blocks.len()),
                points: idx.iter().map(|&k| points[k].id.clone()).collect(),
            });
            branch_classes.extend(classes);
        };
        match classes_for_block(rng, &branches(chunk)) {
            Some(classes) => emit(chunk, classes),
            None => {
                for &k in chunk {
                    let classes = branches(&[k]).into_iter().map(|(b, _)| vec![b]).collect();
                    emit(&[k], classes);
                }
            }
        }
    }

    GluingConfiguration {
        name: "random".to_string(),
        upstream_components: comps
            .iter()
            .map(|c| UpstreamComponent {
                id: c.clone(),
                label: None,
            })
            .collect(),
        upstream_points: points,
        component_map: comps
            .iter()
            .zip(&image)
            .map(|(c, &i)| (c.clone(), format!("Z{i}")))
            .collect(),
        point_blocks,
        branch_classes,
    }
}
