#include "vogel/search144.hpp"

#include "vogel/errors.hpp"
#include "vogel/identity.hpp"

#include <algorithm>
#include <map>

namespace vogel {

namespace {

struct Mark {
    std::size_t black;
    bool red = false;
    bool green = false;
};

class Search {
public:
    Search(const Search144Options& o, Search144Report& r) : opts_(o), rep_(r) {
        for (const auto& d : distinguished_lines(Basis::Primed)) black_.push_back(d.form);
        rep_.black_lines_verified = true;
        for (std::size_t a = 0; a < black_.size(); ++a)
            for (std::size_t b = a + 1; b < black_.size(); ++b) {
                if (same_line(black_[a], black_[b])) {
                    rep_.black_lines_verified = false;
                    continue;
                }
                forbidden_.push_back(meet(black_[a], black_[b]));
            }
        for (std::size_t b = 0; b < black_.size(); ++b) {
            const LineParam lp = LineParam::of(black_[b]);
            for (int t = 1; t <= 3; ++t) seeds_.push_back({lp.at(1, t), b});
        }
    }

    void run() {
        if (!rep_.black_lines_verified) return;
        dfs(0);
    }

private:
    bool admissible(const LinearForm& l, bool red) const {
        for (const auto& b : black_)
            if (same_line(l, b)) return false;
        for (const auto& o : placed_)
            if (same_line(l, o)) return false;
        for (const auto& f : forbidden_)
            if (incident(f, l)) return false;
        for (std::size_t b = 0; b < black_.size(); ++b) {
            const auto it = marks_.find(meet(l, black_[b]));
            if (it != marks_.end() && (red ? it->second.red : it->second.green)) return false;
        }
        return true;
    }

    // Lines through an open point (a black-line point waiting for this color) and a second
    // open point or a seed point; with no open points, lines through two seeds.
    std::vector<LinearForm> candidates(bool red) const {
        std::vector<std::pair<ProjPoint, std::size_t>> open;
        for (const auto& [pt, m] : marks_)
            if (red ? (m.green && !m.red) : (m.red && !m.green)) open.emplace_back(pt, m.black);
        std::vector<std::pair<ProjPoint, std::size_t>> pool = open;
        const std::size_t n_open = open.empty() ? seeds_.size() : open.size();
        for (const auto& sd : seeds_)
            if (!marks_.count(sd.first)) pool.push_back(sd);
        std::vector<LinearForm> out;
        for (std::size_t a = 0; a < n_open && a < pool.size() && out.size() < opts_.max_candidates; ++a)
            for (std::size_t b = a + 1; b < pool.size() && out.size() < opts_.max_candidates; ++b) {
                if (pool[a].second == pool[b].second) continue;
                LinearForm l = line_through(pool[a].first, pool[b].first);
                if (!admissible(l, red)) continue;
                if (std::any_of(out.begin(), out.end(), [&](const LinearForm& o) { return same_line(o, l); }))
                    continue;
                out.push_back(std::move(l));
            }
        return out;
    }

    void dfs(std::size_t depth) {
        if (rep_.nodes >= opts_.budget) return;
        ++rep_.nodes;
        std::size_t triples = 0, open = 0;
        for (const auto& [pt, m] : marks_) (m.red && m.green ? triples : open) += 1;
        if (depth > rep_.best_depth || rep_.best_lines.empty()) {
            rep_.best_depth = std::max(rep_.best_depth, depth);
            rep_.best_lines = placed_;
            rep_.open_points_at_best = open;
        }
        rep_.best_triple_points = std::max(rep_.best_triple_points, triples);
        if (depth == 2 * black_.size()) {
            if (open == 0 && triples == black_.size() * black_.size()) rep_.complete = true;
            return;
        }
        const bool red = depth % 2 == 0;
        const auto cands = candidates(red);
        if (rep_.per_depth_candidates.size() <= depth) rep_.per_depth_candidates.resize(depth + 1, 0);
        rep_.per_depth_candidates[depth] += cands.size();
        for (const auto& l : cands) {
            if (rep_.nodes >= opts_.budget) return;
            auto saved = marks_;
            for (std::size_t b = 0; b < black_.size(); ++b) {
                auto& m = marks_.try_emplace(meet(l, black_[b]), Mark{b}).first->second;
                (red ? m.red : m.green) = true;
            }
            placed_.push_back(l);
            dfs(depth + 1);
            placed_.pop_back();
            marks_ = std::move(saved);
        }
    }

    const Search144Options& opts_;
    Search144Report& rep_;
    std::vector<LinearForm> black_;
    std::vector<ProjPoint> forbidden_;
    std::vector<std::pair<ProjPoint, std::size_t>> seeds_;
    std::map<ProjPoint, Mark> marks_;
    std::vector<LinearForm> placed_;
};

}  // namespace

Search144Report search_144(const Search144Options& opts) {
    Search144Report rep;
    rep.budget = opts.budget;
    Search s(opts, rep);
    s.run();
    if (rep.nodes == 0) rep.best_lines.clear();
    return rep;
}

}  // namespace vogel
