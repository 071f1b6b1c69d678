#pragma once

// Bounded search for a colored picture on the twelve distinguished lines: twelve red and
// twelve green lines such that every red/green/black incidence is a triple point. This is an
// exploration harness; it never reports a finished configuration as proven.

#include "vogel/plane.hpp"

#include <cstdint>
#include <vector>

namespace vogel {

struct Search144Options {
    std::uint64_t budget = 0;  // search nodes
    std::size_t max_candidates = 48;  // branching cap per node
};

struct Search144Report {
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    std::size_t best_depth = 0;  // colored lines placed on the deepest branch
    std::vector<std::uint64_t> per_depth_candidates;
    std::size_t best_triple_points = 0;  // most completed triple points on any node
    std::size_t open_points_at_best = 0;  // black-line points still missing a color at best_depth
    bool complete = false;  // a full picture with 144 triple points was reached
    bool black_lines_verified = false;
    std::vector<LinearForm> best_lines;  // red/green lines of the deepest branch, alternating
};

Search144Report search_144(const Search144Options& opts);

}  // namespace vogel
