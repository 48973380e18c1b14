//! SVG diagrams of a sorou as spokes on a circle.

use std::fmt::Write as _;
use std::path::PathBuf;

use crate::sorou::Sorou;

#[derive(Clone, Debug)]
pub struct PlotSpec {
    pub sorou: Sorou,
    pub out: PathBuf,
    /// Circle radius in pixels.
    pub radius: f64,
    /// Offset between stacked copies of a repeated root, in units of `radius`.
    pub step: f64,
}

impl PlotSpec {
    pub fn new(sorou: Sorou, out: PathBuf) -> PlotSpec {
        PlotSpec {
            sorou,
            out,
            radius: 60.0,
            step: 1.0,
        }
    }

    pub fn render(&self) -> String {
        render_svg(&self.sorou, self.radius, self.step)
    }

    pub fn write(&self) -> std::io::Result<()> {
        std::fs::write(&self.out, self.render())
    }
}

/// A root of multiplicity `k` gets a spoke of length `(1 + (k-1)*step) * r`
/// with a dot at every copy.
pub fn render_svg(s: &Sorou, r: f64, step: f64) -> String {
    let top = s.distinct().iter().map(|&(_, m)| m).max().unwrap_or(1) as f64;
    let reach = r * (1.0 + (top - 1.0) * step);
    let half = reach + 12.0;
    let size = 2.0 * half;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size:.0}" height="{size:.0}" viewBox="{:.2} {:.2} {size:.2} {size:.2}">"#,
        -half, -half
    );
    let _ = writeln!(
        out,
        r#"<circle cx="0" cy="0" r="{r:.2}" fill="none" stroke="gray" stroke-width="0.5" stroke-dasharray="3,3"/>"#
    );
    for &(root, m) in s.distinct() {
        let angle = std::f64::consts::TAU * root.power() as f64 / root.order() as f64;
        let (sin, cos) = angle.sin_cos();
        let len = r * (1.0 + (m as f64 - 1.0) * step);
        // SVG y grows downward.
        let _ = writeln!(
            out,
            r#"<line x1="0" y1="0" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="1"/>"#,
            len * cos,
            -len * sin
        );
        for k in 0..m {
            let d = r * (1.0 + k as f64 * step);
            let _ = writeln!(
                out,
                r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="black"/>"#,
                d * cos,
                -d * sin
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stacks_repeated_roots() {
        let s: Sorou = "1:0+1:0+3:1".parse().unwrap();
        let svg = render_svg(&s, 50.0, 1.0);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<line").count(), 2);
        assert_eq!(svg.matches(r#"r="2.5""#).count(), 3);
        assert!(svg.contains(r#"x2="100.00" y2="-0.00""#));
    }
}
