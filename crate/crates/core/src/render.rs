//! ASCII drawing of a path on its grid.
//!
//! One text line per lattice row, top row `y = n` first. Lattice point
//! `(x, y)` sits in column `2x`; the gap to its right is column `2x + 1`.
//! A north step ending at `(x, y)` draws `|` at that point, an east step
//! leaving `(x, y)` draws `_` in the gap, and unused diagonal points show `.`.

use crate::word::{DyckWord, Step};

pub fn render_ascii(word: &DyckWord) -> String {
    let n = word.semilength();
    let width = 2 * n + 1;
    let mut grid = vec![vec![' '; width]; n + 1];
    for (d, row) in grid.iter_mut().enumerate() {
        row[2 * d] = '.';
    }
    let (mut x, mut y) = (0, 0);
    for &s in word.steps() {
        match s {
            Step::North => {
                y += 1;
                grid[y][2 * x] = '|';
            }
            Step::East => {
                grid[y][2 * x + 1] = '_';
                x += 1;
            }
        }
    }
    let mut out = String::with_capacity((width + 1) * (n + 1));
    for row in grid.iter().rev() {
        out.extend(row.iter());
        out.push('\n');
    }
    out
}
