//! Radial placement of mind-map nodes.
//!
//! Every placed node owns an angular arc. A node with `n` children splits its
//! arc into `n` equal sectors and puts child `i` at the start of sector `i`,
//! at a distance equal to the child's path length. The child then owns an arc
//! starting at its own angle, spanning its sector but never less than
//! [`MIN_ARC`]. Roots own the full turn starting at angle 0 (pointing along +x;
//! y grows downwards as in SVG).
//!
//! Positions are clamped into the canvas. A position closer than
//! [`OVERLAP_EPSILON`] to an already placed node is rotated around the parent
//! in [`ROTATION_STEP`] increments; if a full turn finds no free spot the
//! original position is kept.

use std::collections::HashMap;
use std::f64::consts::{PI, TAU};

use serde::{Deserialize, Serialize};

pub const OVERLAP_EPSILON: f64 = 16.0;
pub const ROTATION_STEP: f64 = PI / 24.0;
pub const MIN_ARC: f64 = PI / 4.0;
/// Distance kept between nodes and the canvas border, capped at half the
/// smaller canvas side.
pub const CANVAS_MARGIN: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn distance(self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Canvas {
    pub width: f64,
    pub height: f64,
}

impl Default for Canvas {
    fn default() -> Self {
        Canvas {
            width: 2000.0,
            height: 2000.0,
        }
    }
}

impl Canvas {
    fn margin(&self) -> f64 {
        CANVAS_MARGIN.min(self.width / 2.0).min(self.height / 2.0)
    }

    pub fn clamp(&self, p: Point) -> Point {
        let m = self.margin();
        Point {
            x: p.x.clamp(m, self.width - m),
            y: p.y.clamp(m, self.height - m),
        }
    }

    pub fn contains(&self, p: Point) -> bool {
        (0.0..=self.width).contains(&p.x) && (0.0..=self.height).contains(&p.y)
    }
}

#[derive(Debug, Clone, Copy)]
struct Arc {
    start: f64,
    span: f64,
}

/// Incremental layout state. Node ids are dense indices in placement order.
#[derive(Debug, Clone)]
pub struct RadialLayout {
    canvas: Canvas,
    positions: Vec<Point>,
    arcs: Vec<Arc>,
    grid: HashMap<(i64, i64), Vec<usize>>,
}

impl RadialLayout {
    pub fn new(canvas: Canvas) -> Self {
        RadialLayout {
            canvas,
            positions: Vec::new(),
            arcs: Vec::new(),
            grid: HashMap::new(),
        }
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    /// Root positions for `count` seeds: evenly spaced along the horizontal
    /// centre line.
    pub fn root_position(&self, index: usize, count: usize) -> Point {
        Point {
            x: self.canvas.width * (2 * index + 1) as f64 / (2 * count.max(1)) as f64,
            y: self.canvas.height / 2.0,
        }
    }

    pub fn place_root(&mut self, at: Point) -> usize {
        let p = self.canvas.clamp(at);
        self.record(
            p,
            Arc {
                start: 0.0,
                span: TAU,
            },
        )
    }

    /// Places child number `slot` of `slots` under `parent` at distance
    /// `radius` (before clamping). Returns the new node id.
    pub fn place_child(&mut self, parent: usize, slot: usize, slots: usize, radius: f64) -> usize {
        let arc = self.arcs[parent];
        let origin = self.positions[parent];
        let sector = arc.span / slots.max(1) as f64;
        let base = arc.start + sector * slot as f64;
        let at = |angle: f64| {
            self.canvas.clamp(Point {
                x: origin.x + radius * angle.cos(),
                y: origin.y + radius * angle.sin(),
            })
        };

        let steps = (TAU / ROTATION_STEP).round() as usize;
        let (angle, pos) = (0..steps)
            .map(|k| {
                let a = base + ROTATION_STEP * k as f64;
                (a, at(a))
            })
            .find(|&(_, p)| !self.crowded(p))
            .unwrap_or_else(|| (base, at(base)));
        self.record(
            pos,
            Arc {
                start: angle.rem_euclid(TAU),
                span: sector.max(MIN_ARC),
            },
        )
    }

    fn cell(p: Point) -> (i64, i64) {
        (
            (p.x / OVERLAP_EPSILON).floor() as i64,
            (p.y / OVERLAP_EPSILON).floor() as i64,
        )
    }

    fn crowded(&self, p: Point) -> bool {
        let (cx, cy) = Self::cell(p);
        (cx - 1..=cx + 1)
            .flat_map(|x| (cy - 1..=cy + 1).map(move |y| (x, y)))
            .filter_map(|c| self.grid.get(&c))
            .flatten()
            .any(|&i| self.positions[i].distance(p) < OVERLAP_EPSILON)
    }

    fn record(&mut self, p: Point, arc: Arc) -> usize {
        let id = self.positions.len();
        self.positions.push(p);
        self.arcs.push(arc);
        self.grid.entry(Self::cell(p)).or_default().push(id);
        id
    }
}
