//! Minimal SVG 1.1 writer. Coordinates stay rational until they are printed
//! with nine decimals (round-half-even), which only affects presentation.

use std::fmt::Write;

use hlab_core::scalar::to_decimal;
use hlab_core::{ConvexPolygon, Point, Scalar};
use num_traits::{One, Zero};

const SIZE: i64 = 400;
const MARGIN: i64 = 20;
const DIGITS: u32 = 9;

/// Affine map from a world box onto the canvas, y pointing up.
pub struct Frame {
    x0: Scalar,
    y1: Scalar,
    sx: Scalar,
    sy: Scalar,
}

impl Frame {
    fn from_box(lo: (Scalar, Scalar), hi: (Scalar, Scalar), uniform: bool) -> Frame {
        let size = Scalar::from_integer(SIZE.into());
        let span = |a: &Scalar, b: &Scalar| {
            let s = b - a;
            if s.is_zero() {
                Scalar::one()
            } else {
                s
            }
        };
        let (w, h) = (span(&lo.0, &hi.0), span(&lo.1, &hi.1));
        let (sx, sy) = if uniform {
            let s = &size / if w > h { &w } else { &h };
            (s.clone(), s)
        } else {
            (&size / &w, &size / &h)
        };
        Frame {
            x0: lo.0,
            y1: hi.1,
            sx,
            sy,
        }
    }

    /// Equal scales on both axes, fitting every vertex.
    pub fn fitting<'a>(points: impl IntoIterator<Item = &'a Point>) -> Frame {
        let (lo, hi) = bounds(points);
        Frame::from_box(lo, hi, true)
    }

    /// Independent axis scales, for plots.
    pub fn stretched<'a>(points: impl IntoIterator<Item = &'a Point>) -> Frame {
        let (lo, hi) = bounds(points);
        Frame::from_box(lo, hi, false)
    }

    fn map(&self, p: &Point) -> String {
        let m = Scalar::from_integer(MARGIN.into());
        let x = &m + (&p.x - &self.x0) * &self.sx;
        let y = &m + (&self.y1 - &p.y) * &self.sy;
        format!("{},{}", to_decimal(&x, DIGITS), to_decimal(&y, DIGITS))
    }
}

fn bounds<'a>(points: impl IntoIterator<Item = &'a Point>) -> ((Scalar, Scalar), (Scalar, Scalar)) {
    let pts: Vec<&Point> = points.into_iter().collect();
    let xs = || pts.iter().map(|p| &p.x);
    let ys = || pts.iter().map(|p| &p.y);
    let lo = (
        xs().min().expect("points").clone(),
        ys().min().expect("points").clone(),
    );
    let hi = (
        xs().max().expect("points").clone(),
        ys().max().expect("points").clone(),
    );
    (lo, hi)
}

pub struct Svg {
    frame: Frame,
    body: String,
}

impl Svg {
    pub fn new(frame: Frame) -> Svg {
        Svg {
            frame,
            body: String::new(),
        }
    }

    pub fn polygon(&mut self, p: &ConvexPolygon, fill: &str, stroke: &str) {
        if p.is_point() {
            let xy = self.frame.map(p.first());
            let (x, y) = xy.split_once(',').expect("pair");
            writeln!(
                self.body,
                r#"  <circle cx="{x}" cy="{y}" r="3" fill="{stroke}"/>"#
            )
            .unwrap();
            return;
        }
        let pts: Vec<String> = p.vertices().iter().map(|v| self.frame.map(v)).collect();
        writeln!(
            self.body,
            r#"  <polygon points="{}" fill="{fill}" stroke="{stroke}" stroke-width="1.5"/>"#,
            pts.join(" ")
        )
        .unwrap();
    }

    pub fn polyline(&mut self, pts: &[Point], stroke: &str) {
        let pts: Vec<String> = pts.iter().map(|v| self.frame.map(v)).collect();
        writeln!(
            self.body,
            r#"  <polyline points="{}" fill="none" stroke="{stroke}" stroke-width="1.5"/>"#,
            pts.join(" ")
        )
        .unwrap();
    }

    pub fn finish(self, title: &str) -> String {
        let side = SIZE + 2 * MARGIN;
        let mut out = String::new();
        writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
        writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{side}" height="{side}" viewBox="0 0 {side} {side}">"#
        )
        .unwrap();
        writeln!(out, "  <title>{}</title>", escape(title)).unwrap();
        writeln!(
            out,
            r#"  <rect width="{side}" height="{side}" fill="white"/>"#
        )
        .unwrap();
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use hlab_core::scalar::{int, ratio};

    #[test]
    fn maps_with_y_flipped() {
        let pts = [Point::from_ints(0, 0), Point::from_ints(2, 1)];
        let f = Frame::fitting(&pts);
        assert_eq!(f.map(&pts[0]), "20,220");
        assert_eq!(f.map(&pts[1]), "420,20");
        assert_eq!(f.map(&Point::new(ratio(1, 3), int(0))), "86.666666667,220");
    }

    #[test]
    fn title_is_escaped() {
        let svg = Svg::new(Frame::fitting(&[Point::origin()])).finish("a<b");
        assert!(svg.contains("<title>a&lt;b</title>"));
        assert!(svg.ends_with("</svg>\n"));
    }
}
