/// Axis-aligned view rectangle in data coordinates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct View {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

/// Bare SVG with one `<polyline>` per input; the y axis points up.
pub fn polylines_svg(lines: &[Vec<(f64, f64)>], view: View) -> String {
    let w = view.x_max - view.x_min;
    let h = view.y_max - view.y_min;
    let stroke = 0.004 * w.max(h);
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">\n",
        view.x_min, -view.y_max, w, h
    );
    for line in lines.iter().filter(|l| l.len() >= 2) {
        let pts: Vec<String> = line.iter().map(|(x, y)| format!("{x:.6},{:.6}", -y)).collect();
        out.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{stroke}\"/>\n",
            pts.join(" ")
        ));
    }
    out.push_str("</svg>\n");
    out
}
