//! Deterministic SVG drawings of based edge paths in the upper half-plane.
//!
//! All geometry is exact rational arithmetic; coordinates are printed with 12
//! decimals, rounded half to even.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::paths::{endpoints, EdgeWord, Farey};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub x_min: BigRational,
    pub x_max: BigRational,
    /// Height, in plane units, at which edges to infinity are clipped.
    pub height_cap: BigRational,
    pub stroke_width: BigRational,
    pub font_size: BigRational,
    pub label_vertices: bool,
    pub width_px: u32,
    pub height_px: u32,
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            x_min: q(-1, 4),
            x_max: q(5, 4),
            height_cap: q(1, 2),
            stroke_width: q(2, 1),
            font_size: q(14, 1),
            label_vertices: true,
            width_px: 800,
            height_px: 480,
        }
    }
}

impl RenderOptions {
    /// Default options with the x-range fitted around the path's finite
    /// vertices and the vertical edges clipped just below the top margin.
    pub fn fit(w: &EdgeWord) -> Self {
        let mut opts = RenderOptions::default();
        let xs: Vec<BigRational> = endpoints(w)
            .iter()
            .filter(|v| !v.is_infinite())
            .map(|v| BigRational::new(v.numer().clone(), v.denom().clone()))
            .collect();
        let lo = xs.iter().min().cloned().unwrap_or_else(BigRational::zero);
        let hi = xs.iter().max().cloned().unwrap_or_else(BigRational::zero);
        let mut span = &hi - &lo;
        if span.is_zero() {
            span = BigRational::one();
        }
        let pad = &span / BigRational::from_integer(8.into());
        opts.x_min = lo - &pad;
        opts.x_max = hi + &pad;
        let layout = Layout::new(&opts);
        let top = &opts.font_size * q(2, 1);
        opts.height_cap = (&layout.baseline - top) / &layout.scale;
        opts
    }

    pub fn validate(&self) -> Result<()> {
        if self.x_min >= self.x_max {
            return Err(Error::RenderOptions(format!(
                "x_min ({}) must be below x_max ({})",
                self.x_min, self.x_max
            )));
        }
        let positive = |name: &str, v: &BigRational| {
            if v.is_positive() {
                Ok(())
            } else {
                Err(Error::RenderOptions(format!("{name} must be positive, got {v}")))
            }
        };
        positive("height_cap", &self.height_cap)?;
        positive("stroke_width", &self.stroke_width)?;
        positive("font_size", &self.font_size)?;
        if self.width_px == 0 || self.height_px == 0 {
            return Err(Error::RenderOptions("image dimensions must be positive".into()));
        }
        Ok(())
    }
}

struct Layout {
    scale: BigRational,
    baseline: BigRational,
    x_min: BigRational,
}

impl Layout {
    fn new(opts: &RenderOptions) -> Self {
        let scale = BigRational::from_integer(opts.width_px.into()) / (&opts.x_max - &opts.x_min);
        let band = if opts.label_vertices {
            &opts.font_size * q(3, 1)
        } else {
            opts.stroke_width.clone()
        };
        let baseline = BigRational::from_integer(opts.height_px.into()) - band;
        Layout {
            scale,
            baseline,
            x_min: opts.x_min.clone(),
        }
    }

    fn x(&self, v: &Farey) -> BigRational {
        let x = BigRational::new(v.numer().clone(), v.denom().clone());
        (x - &self.x_min) * &self.scale
    }
}

/// Fixed-point decimal with `places` digits, ties rounded to even.
pub fn fmt_fixed(v: &BigRational, places: u32) -> String {
    let scale = BigInt::from(10).pow(places);
    let scaled = v * BigRational::from_integer(scale.clone());
    let floor = scaled.floor().to_integer();
    let frac = &scaled - BigRational::from_integer(floor.clone());
    let half = q(1, 2);
    let rounded = if frac > half || (frac == half && floor.is_odd()) {
        floor + 1
    } else {
        floor
    };
    let neg = rounded.is_negative();
    let (int_part, frac_part) = rounded.abs().div_rem(&scale);
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    write!(s, "{int_part}").expect("string write");
    if places > 0 {
        write!(s, ".{:0>width$}", frac_part.to_string(), width = places as usize).expect("string write");
    }
    s
}

fn f12(v: &BigRational) -> String {
    fmt_fixed(v, 12)
}

/// SVG 1.1 document for the based edge path of `w`.
pub fn render_svg(w: &EdgeWord, opts: &RenderOptions) -> Result<Vec<u8>> {
    opts.validate()?;
    let layout = Layout::new(opts);
    let pts = endpoints(w);
    let y0 = &layout.baseline;
    let y_top = y0 - &opts.height_cap * &layout.scale;

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        opts.width_px, opts.height_px, opts.width_px, opts.height_px
    )
    .expect("string write");
    writeln!(
        out,
        "  <line class=\"axis\" x1=\"0\" y1=\"{y}\" x2=\"{w}\" y2=\"{y}\" stroke=\"#888888\" stroke-width=\"{sw}\"/>",
        y = f12(y0),
        w = opts.width_px,
        sw = f12(&(&opts.stroke_width / q(2, 1))),
    )
    .expect("string write");
    writeln!(
        out,
        "  <g class=\"path\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{}\">",
        f12(&opts.stroke_width)
    )
    .expect("string write");
    for pair in pts.windows(2) {
        let (u, v) = (&pair[0], &pair[1]);
        let d = match (u.is_infinite(), v.is_infinite()) {
            (true, false) => {
                let x = f12(&layout.x(v));
                format!("M {x} {} L {x} {}", f12(&y_top), f12(y0))
            }
            (false, true) => {
                let x = f12(&layout.x(u));
                format!("M {x} {} L {x} {}", f12(y0), f12(&y_top))
            }
            _ => {
                let (xu, xv) = (layout.x(u), layout.x(v));
                let r = (&xv - &xu).abs() / q(2, 1);
                // sweep 1 runs clockwise on screen, i.e. over the top when moving right
                let sweep = u8::from(xu < xv);
                format!(
                    "M {} {y} A {r} {r} 0 0 {sweep} {} {y}",
                    f12(&xu),
                    f12(&xv),
                    y = f12(y0),
                    r = f12(&r),
                )
            }
        };
        writeln!(out, "    <path d=\"{d}\"/>").expect("string write");
    }
    out.push_str("  </g>\n");

    if opts.label_vertices {
        writeln!(
            out,
            "  <g class=\"labels\" font-family=\"serif\" font-size=\"{}\" text-anchor=\"middle\">",
            f12(&opts.font_size)
        )
        .expect("string write");
        let mut seen: Vec<&Farey> = Vec::new();
        for (i, v) in pts.iter().enumerate() {
            if seen.contains(&v) {
                continue;
            }
            seen.push(v);
            let (x, y) = if v.is_infinite() {
                // above the first vertical edge that reaches infinity
                let anchor = pts
                    .get(i + 1)
                    .filter(|n| !n.is_infinite())
                    .or_else(|| i.checked_sub(1).and_then(|j| pts.get(j)))
                    .map(|n| layout.x(n))
                    .unwrap_or_else(BigRational::zero);
                (anchor, &y_top - &opts.font_size / q(2, 1))
            } else {
                (layout.x(v), y0 + &opts.font_size * q(3, 2))
            };
            writeln!(out, "    <text x=\"{}\" y=\"{}\">{}</text>", f12(&x), f12(&y), v)
                .expect("string write");
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out.into_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point_rounding() {
        assert_eq!(fmt_fixed(&q(1, 3), 4), "0.3333");
        assert_eq!(fmt_fixed(&q(2, 3), 4), "0.6667");
        assert_eq!(fmt_fixed(&q(1, 8), 2), "0.12");
        assert_eq!(fmt_fixed(&q(3, 8), 2), "0.38");
        assert_eq!(fmt_fixed(&q(-1, 8), 2), "-0.12");
        assert_eq!(fmt_fixed(&q(-1, 3), 3), "-0.333");
        assert_eq!(fmt_fixed(&q(5, 1), 12), "5.000000000000");
        assert_eq!(fmt_fixed(&q(-1, 1000), 2), "0.00");
    }

    #[test]
    fn based_path_structure() {
        let w = EdgeWord::from_i64(&[-2, 1, -2]);
        let svg = String::from_utf8(render_svg(&w, &RenderOptions::fit(&w)).unwrap()).unwrap();
        assert_eq!(svg.matches("<path ").count(), 4);
        assert_eq!(svg.matches(" A ").count(), 3);
        assert_eq!(svg.matches(" L ").count(), 1);
        for label in ["1/0", "0/1", "1/2", "1/3", "3/8"] {
            assert!(svg.contains(&format!(">{label}</text>")), "{label}");
        }
    }

    #[test]
    fn empty_word_is_the_base_edge() {
        let w = EdgeWord::default();
        let svg = String::from_utf8(render_svg(&w, &RenderOptions::fit(&w)).unwrap()).unwrap();
        assert_eq!(svg.matches("<path ").count(), 1);
        assert_eq!(svg.matches(" L ").count(), 1);
    }

    #[test]
    fn deterministic_output() {
        let w = EdgeWord::from_i64(&[3, -1, 2, 2]);
        let opts = RenderOptions::fit(&w);
        assert_eq!(render_svg(&w, &opts).unwrap(), render_svg(&w, &opts).unwrap());
    }

    #[test]
    fn rejects_degenerate_range() {
        let opts = RenderOptions {
            x_min: q(1, 1),
            x_max: q(1, 1),
            ..RenderOptions::default()
        };
        let err = render_svg(&EdgeWord::default(), &opts).unwrap_err();
        assert_eq!(err.code(), "render_options");
        assert!(err.is_usage());
    }
}
