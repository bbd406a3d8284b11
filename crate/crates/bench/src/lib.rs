//! Graph families for the benchmarks.

use ribbonlab::{RibbonGraph, Sign};

/// The `n x n` square grid on the torus. Edge `2 * (i * n + j)` runs right
/// from cell `(i, j)` and edge `2 * (i * n + j) + 1` runs down.
pub fn torus_grid(n: usize) -> RibbonGraph {
    let cell = |i: usize, j: usize| (i % n) * n + (j % n);
    let rotations: Vec<Vec<(usize, u8)>> = (0..n * n)
        .map(|c| {
            let (i, j) = (c / n, c % n);
            vec![
                (2 * c, 1),
                (2 * cell(i + n - 1, j) + 1, 2),
                (2 * cell(i, j + n - 1), 2),
                (2 * c + 1, 1),
            ]
        })
        .collect();
    let refs: Vec<&[(usize, u8)]> = rotations.iter().map(Vec::as_slice).collect();
    RibbonGraph::from_rotations(&refs, &vec![Sign::Plus; 2 * n * n]).expect("grid is a valid rotation system")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_a_torus() {
        for n in 1..5 {
            let g = torus_grid(n);
            assert_eq!(ribbonlab::euler_characteristic(&g).total, 0);
            assert!(g.is_connected());
        }
    }
}
