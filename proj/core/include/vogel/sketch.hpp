#pragma once

// Exact incidence pictures of a factor product against a set of black lines.

#include "vogel/configs.hpp"
#include "vogel/formula.hpp"

#include <string>
#include <vector>

namespace vogel {

enum class LineColor : std::uint8_t { Black, Red, Green };
std::string_view to_string(LineColor c);

struct SketchLine {
    LinearForm form;
    LineColor color;
    std::size_t index;  // position within its color class
    std::string label;  // "b1", "r2", "g3"
};

struct SketchPoint {
    ProjPoint point;
    std::size_t black;  // indices into IncidenceSketch::lines
    std::size_t red;
    std::size_t green;
};

struct IncidenceSketch {
    std::vector<SketchLine> lines;  // black lines first, then red (numerator), then green
    std::vector<SketchPoint> points;
    std::vector<std::vector<std::size_t>> triple_points;  // per black line, point indices
    ConfigurationTable table;  // columns in the order of `lines`
    Coloring coloring;
};

/// Red lines are the numerator factors and green lines the denominator factors. Every
/// red/green meet on a black line becomes a triple point; each black line must carry exactly
/// k of them, pairing the red and green lines bijectively (NotAQPicture otherwise).
/// Throws DegenerateInput for proportional factor lines.
IncidenceSketch sketch_from_q(const FactorProduct& f, const std::vector<LinearForm>& black_lines);

struct SvgOptions {
    double size = 800;
    /// Line sent to infinity; the first of the fallback candidates that keeps every point
    /// finite is used when this one does not.
    LinearForm chart = LinearForm(1, 0, 0, Basis::Primed);
};

/// Deterministic SVG 1.1 document.
std::string render_svg(const IncidenceSketch& sketch, const SvgOptions& opts = {});
/// The chart actually used by render_svg.
LinearForm svg_chart(const IncidenceSketch& sketch, const SvgOptions& opts = {});
void emit_svg(const IncidenceSketch& sketch, const std::string& path, const SvgOptions& opts = {});

}  // namespace vogel
