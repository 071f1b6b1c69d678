#include "vogel/sketch.hpp"

#include "vogel/errors.hpp"

#include <algorithm>

namespace vogel {

std::string_view to_string(LineColor c) {
    switch (c) {
        case LineColor::Black: return "black";
        case LineColor::Red: return "red";
        case LineColor::Green: return "green";
    }
    return "?";
}

IncidenceSketch sketch_from_q(const FactorProduct& input, const std::vector<LinearForm>& black) {
    if (black.empty()) throw DegenerateInput("at least one black line is needed");
    const Basis basis = black.front().basis();
    for (const auto& b : black)
        if (b.basis() != basis) throw BasisMismatch("black lines in different bases");
    const FactorProduct f = in_basis(input, basis);
    const std::size_t k = f.k();
    const std::size_t B = black.size();

    IncidenceSketch sk;
    for (std::size_t i = 0; i < B; ++i) sk.lines.push_back({black[i], LineColor::Black, i, "b" + std::to_string(i + 1)});
    for (std::size_t i = 0; i < k; ++i) sk.lines.push_back({f.num()[i], LineColor::Red, i, "r" + std::to_string(i + 1)});
    for (std::size_t i = 0; i < k; ++i) sk.lines.push_back({f.den()[i], LineColor::Green, i, "g" + std::to_string(i + 1)});
    for (std::size_t a = 0; a < sk.lines.size(); ++a)
        for (std::size_t b = a + 1; b < sk.lines.size(); ++b)
            if (same_line(sk.lines[a].form, sk.lines[b].form))
                throw DegenerateInput("lines " + sk.lines[a].label + " and " + sk.lines[b].label + " coincide");

    sk.triple_points.resize(B);
    std::vector<std::size_t> deficient;
    for (std::size_t bi = 0; bi < B; ++bi) {
        std::vector<bool> red_seen(k, false), green_seen(k, false);
        bool ok = true;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t g = 0; g < k; ++g) {
                const ProjPoint pt = meet(f.num()[r], f.den()[g]);
                if (!incident(pt, black[bi])) continue;
                if (red_seen[r] || green_seen[g]) ok = false;
                red_seen[r] = green_seen[g] = true;
                sk.triple_points[bi].push_back(sk.points.size());
                sk.points.push_back({pt, bi, B + r, B + k + g});
            }
        if (!ok || sk.triple_points[bi].size() != k) deficient.push_back(bi);
    }
    if (!deficient.empty()) {
        std::string msg = "black lines without exactly " + std::to_string(k) + " paired triple points:";
        for (auto d : deficient) msg += " " + sk.lines[d].label;
        throw NotAQPicture(msg, deficient);
    }
    for (std::size_t a = 0; a < sk.points.size(); ++a)
        for (std::size_t b = a + 1; b < sk.points.size(); ++b)
            if (sk.points[a].point == sk.points[b].point)
                throw NotAQPicture("two triple points coincide", {sk.points[a].black, sk.points[b].black});

    std::vector<std::vector<int>> cols(sk.lines.size());
    for (std::size_t i = 0; i < sk.points.size(); ++i) {
        const int label = static_cast<int>(i) + 1;
        cols[sk.points[i].black].push_back(label);
        cols[sk.points[i].red].push_back(label);
        cols[sk.points[i].green].push_back(label);
    }
    sk.table.p = static_cast<int>(sk.points.size());
    sk.table.l = static_cast<int>(sk.lines.size());
    sk.table.gamma = 3;
    sk.table.pi = static_cast<int>(k);
    sk.table.columns = std::move(cols);
    for (std::size_t i = 0; i < B; ++i) sk.coloring.black.push_back(static_cast<int>(i) + 1);
    for (std::size_t i = 0; i < k; ++i) sk.coloring.red.push_back(static_cast<int>(B + i) + 1);
    for (std::size_t i = 0; i < k; ++i) sk.coloring.green.push_back(static_cast<int>(B + k + i) + 1);
    return sk;
}

}  // namespace vogel
