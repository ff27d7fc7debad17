//! Static SVG overlay of a body and its Steiner symmetral on the lattice.
//! One lattice unit maps to 100 px; the y axis is flipped to keep the
//! mathematical orientation.

use latcover::geom::ConvexPolygon;
use std::fmt::Write as _;

const UNIT: f64 = 100.0;
const PAD: f64 = 0.6;

fn map_x(x: f64) -> f64 {
    UNIT * x
}

fn map_y(y: f64) -> f64 {
    -UNIT * y
}

fn points_attr(k: &ConvexPolygon) -> String {
    k.vertices()
        .iter()
        .map(|v| format!("{:.2},{:.2}", map_x(v.x), map_y(v.y)))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn overlay(body: &ConvexPolygon, symmetral: &ConvexPolygon) -> String {
    let (blo, bhi) = body.bbox();
    let (slo, shi) = symmetral.bbox();
    let x0 = blo.x.min(slo.x) - PAD;
    let x1 = bhi.x.max(shi.x) + PAD;
    let y0 = blo.y.min(slo.y) - PAD;
    let y1 = bhi.y.max(shi.y) + PAD;
    let width = UNIT * (x1 - x0);
    let height = UNIT * (y1 - y0);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{0:.2} {1:.2} {2:.2} {3:.2}" width="{2:.0}" height="{3:.0}">"#,
        map_x(x0),
        map_y(y1),
        width,
        height
    )
    .unwrap();

    writeln!(out, r##"  <g stroke="#c8c8c8" stroke-width="1">"##).unwrap();
    for i in (x0.ceil() as i64)..=(x1.floor() as i64) {
        writeln!(
            out,
            r#"    <line x1="{0:.2}" y1="{1:.2}" x2="{0:.2}" y2="{2:.2}"/>"#,
            map_x(i as f64),
            map_y(y1),
            map_y(y0)
        )
        .unwrap();
    }
    for j in (y0.ceil() as i64)..=(y1.floor() as i64) {
        writeln!(
            out,
            r#"    <line x1="{1:.2}" y1="{0:.2}" x2="{2:.2}" y2="{0:.2}"/>"#,
            map_y(j as f64),
            map_x(x0),
            map_x(x1)
        )
        .unwrap();
    }
    writeln!(out, "  </g>").unwrap();

    writeln!(out, r##"  <g fill="#3c3c3c">"##).unwrap();
    for i in (x0.ceil() as i64)..=(x1.floor() as i64) {
        for j in (y0.ceil() as i64)..=(y1.floor() as i64) {
            writeln!(
                out,
                r#"    <circle cx="{:.2}" cy="{:.2}" r="3"/>"#,
                map_x(i as f64),
                map_y(j as f64)
            )
            .unwrap();
        }
    }
    writeln!(out, "  </g>").unwrap();

    writeln!(
        out,
        r##"  <polygon points="{}" fill="#4878a8" fill-opacity="0.25" stroke="#4878a8" stroke-width="2"/>"##,
        points_attr(body)
    )
    .unwrap();
    writeln!(
        out,
        r##"  <polygon points="{}" fill="none" stroke="#d2691e" stroke-width="2"/>"##,
        points_attr(symmetral)
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}
