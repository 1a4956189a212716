//! Proper vertex colorings of structure graphs.

use std::borrow::Cow;

use crate::error::{Error, Result};
use crate::structure::{Graph, PointId, TriangularStructure};

/// Display names for the first five color indices.
pub const COLOR_NAMES: [&str; 5] = ["red", "black", "blue", "green", "grey"];

/// Display name of a color index; indices past the table render as `c<k>`.
pub fn color_name(index: u32) -> Cow<'static, str> {
    match COLOR_NAMES.get(index as usize) {
        Some(name) => Cow::Borrowed(name),
        None => Cow::Owned(format!("c{index}")),
    }
}

/// Inverse of [`color_name`].
pub fn color_index(name: &str) -> Option<u32> {
    if let Some(i) = COLOR_NAMES.iter().position(|&n| n == name) {
        return Some(i as u32);
    }
    let k: u32 = name.strip_prefix('c')?.parse().ok()?;
    (k as usize >= COLOR_NAMES.len()).then_some(k)
}

/// A total assignment of color indices to vertices `0..len`.
///
/// The indices in use are always exactly `0..palette_size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<u32>,
    palette_size: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        let palette_size = colors.iter().max().map_or(0, |&m| m + 1);
        let mut seen = vec![false; palette_size as usize];
        for &c in &colors {
            seen[c as usize] = true;
        }
        if let Some(gap) = seen.iter().position(|&s| !s) {
            return Err(Error::NonContiguousPalette(gap as u32));
        }
        Ok(Coloring { colors, palette_size })
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// `1 + max color index`, or 0 for an empty coloring.
    pub fn palette_size(&self) -> u32 {
        self.palette_size
    }

    fn check_total(&self, vertex_count: usize) -> Result<()> {
        if self.colors.len() != vertex_count {
            return Err(Error::PartialColoring {
                expected: vertex_count,
                got: self.colors.len(),
            });
        }
        Ok(())
    }
}

/// Whether no edge of `g` joins two vertices of the same color.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_total(g.vertex_count())?;
    Ok(g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v)))
}

/// First-fit coloring: visiting vertices in `order`, each takes the smallest
/// color not already used by one of its colored neighbors.
pub fn greedy_coloring(g: &Graph, order: &[usize]) -> Result<Coloring> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    if order.len() != n {
        return Err(Error::InvalidPermutation(n));
    }
    for &v in order {
        if v >= n || std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidPermutation(n));
        }
    }

    let mut colors: Vec<Option<u32>> = vec![None; n];
    let mut taken = vec![false; g.max_degree() + 1];
    for &v in order {
        for &w in g.neighbors(v) {
            if let Some(c) = colors[w] {
                taken[c as usize] = true;
            }
        }
        let pick = taken.iter().position(|&t| !t).expect("degree + 1 slots") as u32;
        colors[v] = Some(pick);
        for &w in g.neighbors(v) {
            if let Some(c) = colors[w] {
                taken[c as usize] = false;
            }
        }
    }
    Coloring::new(colors.into_iter().map(|c| c.expect("all visited")).collect())
}

/// Largest graph [`exact_chromatic`] will search.
pub const EXACT_SEARCH_LIMIT: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chromatic {
    Colorable {
        chi: u32,
        witness: Coloring,
    },
    /// The chromatic number exceeds the requested bound.
    Unsatisfiable,
}

/// Chromatic number by backtracking, trying palettes of size 1, 2, ...
/// up to `max_colors`.
///
/// Vertices are assigned in index order and a vertex may only open the next
/// unused color, so the first witness found is canonical and repeatable.
pub fn exact_chromatic(g: &Graph, max_colors: u32) -> Result<Chromatic> {
    let n = g.vertex_count();
    if n > EXACT_SEARCH_LIMIT {
        return Err(Error::GraphTooLarge {
            vertices: n,
            limit: EXACT_SEARCH_LIMIT,
        });
    }
    if n == 0 {
        return Ok(Chromatic::Colorable {
            chi: 0,
            witness: Coloring::new(Vec::new())?,
        });
    }
    for k in 1..=max_colors {
        let mut colors = vec![u32::MAX; n];
        if backtrack(g, k, 0, 0, &mut colors) {
            let witness = Coloring::new(colors)?;
            debug_assert_eq!(witness.palette_size(), k);
            return Ok(Chromatic::Colorable { chi: k, witness });
        }
    }
    Ok(Chromatic::Unsatisfiable)
}

fn backtrack(g: &Graph, k: u32, v: usize, used: u32, colors: &mut [u32]) -> bool {
    if v == colors.len() {
        return used == k;
    }
    // Only the next fresh color is tried among unused ones.
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|&w| w < v && colors[w] == c) {
            continue;
        }
        colors[v] = c;
        if backtrack(g, k, v + 1, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = u32::MAX;
    false
}

/// Three-color scheme with rows repeating in period 2: apex gets 0, odd
/// rows alternate `1, 2, 1, ...` and even rows `2, 1, 2, ...`.
///
/// Proper for the path adjacency at every order.
pub fn periodic_coloring(s: &TriangularStructure) -> Coloring {
    let colors = s
        .points()
        .iter()
        .map(|p| match *p {
            PointId::Apex => 0,
            PointId::RowCol { row, col } => {
                if (row + col) % 2 == 0 {
                    1
                } else {
                    2
                }
            }
        })
        .collect();
    Coloring::new(colors).expect("uses 0, 1 and 2")
}

/// Ordered color vector of horizontal line `row`.
pub fn row_colors(s: &TriangularStructure, c: &Coloring, row: u32) -> Result<Vec<u32>> {
    c.check_total(s.points().len())?;
    Ok(s.row(row)
        .unwrap_or_default()
        .iter()
        .map(|&p| c.color(s.vertex_index(p).expect("own point")))
        .collect())
}

/// Whether all horizontal lines of equal parity carry identical color vectors.
pub fn row_periodicity(s: &TriangularStructure, c: &Coloring) -> Result<bool> {
    c.check_total(s.points().len())?;
    let rows: Vec<Vec<u32>> = (1..s.order()).map(|r| row_colors(s, c, r)).collect::<Result<_>>()?;
    Ok(rows.iter().enumerate().skip(2).all(|(i, row)| *row == rows[i - 2]))
}

// Rows of the order-4 fixture, top to bottom, as (letter, color name).
const FIXTURE_ROWS: [[(char, &str); 4]; 3] = [
    [('B', "black"), ('M', "blue"), ('L', "green"), ('K', "grey")],
    [('C', "blue"), ('H', "red"), ('I', "grey"), ('J', "blue")],
    [('D', "black"), ('E', "blue"), ('F', "green"), ('G', "grey")],
];

/// The fixed five-color assignment of the order-4 structure, apex A red.
pub fn paper_fixture_coloring(n: u32) -> Result<Coloring> {
    if n != 4 {
        return Err(Error::NoFixture(n));
    }
    let mut colors = vec![color_index("red").expect("in table")];
    for row in FIXTURE_ROWS {
        colors.extend(row.iter().map(|&(_, name)| color_index(name).expect("in table")));
    }
    Coloring::new(colors)
}

/// Fixture letter for `p` (`A` for the apex).
pub fn fixture_letter(p: PointId) -> Option<char> {
    match p {
        PointId::Apex => Some('A'),
        PointId::RowCol { row, col } => FIXTURE_ROWS
            .get((row as usize).checked_sub(1)?)?
            .get((col as usize).checked_sub(1)?)
            .map(|&(letter, _)| letter),
    }
}
