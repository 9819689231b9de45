//! Render instances to SVG. Figures are illustrations: coordinates pass
//! through floating point for display, while all counting stays exact.

use std::fs;
use std::path::Path;

use plgeom::{
    build_envelope_extremal, build_union_extremal, polygon_union, render_envelope_svg,
    render_polygons_svg,
};

fn main() -> std::io::Result<()> {
    let dir = Path::new("target/figures");
    fs::create_dir_all(dir)?;

    let (f1, f2, _) = build_envelope_extremal(2, 3, 1, 1).unwrap();
    let envelope_figure = render_envelope_svg(&f1, &f2);
    let path = dir.join("envelope.svg");
    fs::write(&path, &envelope_figure)?;
    println!("wrote {} ({} bytes)", path.display(), envelope_figure.len());

    let (p1, p2, _) = build_union_extremal(4, 4, 0, 0).unwrap();
    let result = polygon_union(&p1, &p2).unwrap();
    let star_figure = render_polygons_svg(&p1, &p2, &result);
    let path = dir.join("star.svg");
    fs::write(&path, &star_figure)?;
    println!("wrote {} ({} bytes)", path.display(), star_figure.len());

    // Rendering is deterministic, byte for byte.
    assert_eq!(star_figure, render_polygons_svg(&p1, &p2, &result));
    Ok(())
}
