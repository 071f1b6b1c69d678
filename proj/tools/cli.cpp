#include "cli.hpp"

#include "vogel/configs.hpp"
#include "vogel/errors.hpp"
#include "vogel/formula.hpp"
#include "vogel/identity.hpp"
#include "vogel/json_io.hpp"
#include "vogel/qsearch.hpp"
#include "vogel/search144.hpp"
#include "vogel/sketch.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace vogel::cli {

namespace {

// Input problems detected after CLI11 parsing; reported with exit code 2.
struct UsageError : Error {
    using Error::Error;
};

std::vector<std::string> split(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const std::string& what) {
    std::vector<Rational> out;
    if (!text.empty())
        for (const auto& item : split(text)) out.push_back(parse_rational(item));
    if (out.size() != expected)
        throw UsageError(what + " needs " + std::to_string(expected) + " comma-separated values, got " +
                         std::to_string(out.size()));
    return out;
}

std::string str(const Triple& t) {
    return "(" + to_string(t[0]) + ", " + to_string(t[1]) + ", " + to_string(t[2]) + ")";
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Json load_json(const std::string& path) { return parse_json(read_file(path), path + ":"); }

struct FormulaSource {
    std::string builtin;
    std::string params;
    std::string file;
    bool quantum = false;

    void add_to(CLI::App* app) {
        app->add_option("--builtin", builtin, "adjoint | x2k-adn | q33 | q-prop4");
        app->add_option("--params", params, "comma-separated parameters of the builtin");
        app->add_option("--formula", file, "formula JSON file");
        app->add_flag("--quantum", quantum, "use the sinh reading of q33 / q-prop4");
    }

    FactorProduct load() const {
        if (!file.empty() && !builtin.empty()) throw UsageError("--formula and --builtin are exclusive");
        if (!file.empty()) return formula_from_json(load_json(file), "");
        if (builtin == "adjoint") {
            parse_list(params, 0, "adjoint");
            return adjoint_formula();
        }
        if (builtin == "x2k-adn") {
            const auto v = parse_list(params, 2, "x2k-adn (k,n)");
            if (!is_integer(v[0]) || !is_integer(v[1])) throw UsageError("x2k-adn needs integer k and n");
            return x2k_adn_formula(static_cast<int>(v[0].get_num().get_si()),
                                   static_cast<int>(v[1].get_num().get_si()));
        }
        if (builtin == "q33") {
            const auto v = parse_list(params, 4, "q33 (c1,c2,x,y)");
            return builtin_q33(v[0], v[1], v[2], v[3], quantum);
        }
        if (builtin == "q-prop4") {
            const auto v = parse_list(params, 4, "q-prop4 (n,x,xp,y)");
            return builtin_q_prop4(v[0], v[1], v[2], v[3], quantum);
        }
        if (builtin.empty()) throw UsageError("give --builtin or --formula");
        throw UsageError("unknown builtin '" + builtin + "'");
    }
};

// Black line order for the pairing permutations: sl, so, exc, then sp.
const std::vector<std::string> kBlackOrder{"sl", "so", "exc", "sp"};

struct NamedLine {
    std::string name;
    LinearForm form;
};

std::vector<NamedLine> parse_lines(const std::string& labels, const std::vector<std::string>& custom) {
    std::vector<NamedLine> out;
    if (!labels.empty())
        for (const auto& l : split(labels)) out.push_back({l, distinguished_line(l, Basis::Primed)});
    for (const auto& c : custom) {
        const auto v = parse_list(c, 3, "--line");
        out.push_back({"(" + c + ")'", LinearForm(v[0], v[1], v[2], Basis::Primed)});
    }
    return out;
}

std::vector<NamedLine> default_black(std::size_t k) {
    std::vector<NamedLine> out;
    for (std::size_t i = 0; i < std::min<std::size_t>(std::max<std::size_t>(k, 3), 4); ++i)
        out.push_back({kBlackOrder[i], distinguished_line(kBlackOrder[i], Basis::Primed)});
    return out;
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

// ---------------------------------------------------------------------------------------------
// Subcommands

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::uint64_t seed;
    bool json = false;
};

int cmd_eval(Context& c, const FormulaSource& src, const std::string& algebra, const std::string& param,
             const std::string& point, bool primed, bool quantum, double x, bool do_cancel) {
    FactorProduct f = src.load();
    std::optional<ProjPoint> p;
    if (!point.empty() && !algebra.empty()) throw UsageError("--point and --algebra are exclusive");
    if (!point.empty()) {
        const auto v = parse_list(point, 3, "--point");
        p = ProjPoint(v[0], v[1], v[2], primed ? Basis::Primed : Basis::Unprimed);
    } else if (!algebra.empty()) {
        if (param.empty()) throw UsageError("--algebra needs --param");
        p = vogel_point(parse_family(algebra), parse_rational(param)).point;
    } else {
        throw UsageError("give --point or --algebra/--param");
    }
    if (quantum) {
        if (!f.quantum()) throw UsageError("formula is classical; quantum evaluation needs a quantum formula");
        if (do_cancel) f = cancel(f);
        const double v = eval_quantum(f, *p, x);
        if (c.json)
            c.out << Json{{"point", point_to_json(*p)}, {"x", x}, {"value", v}, {"exact", false}}.dump(2) << "\n";
        else
            c.out << fmt_double(v) << "  (floating point, x = " << fmt_double(x) << ")\n";
        return 0;
    }
    FactorProduct g = with_quantum(f, false);
    if (do_cancel) g = cancel(g);
    const EvalResult r = eval_classical(g, *p);
    if (c.json) {
        Json j = eval_to_json(r);
        j["point"] = point_to_json(*p);
        c.out << j.dump(2) << "\n";
    } else if (r.finite()) {
        c.out << to_string(r.value) << "\n";
    } else {
        c.out << to_string(r.kind) << "\n";
    }
    return r.finite() ? 0 : 1;
}

int cmd_check(Context& c, const FormulaSource& src, const std::string& labels, const std::vector<std::string>& custom,
              bool plane, int crosscheck) {
    const FactorProduct f = src.load();
    std::vector<IdentityReport> reports;
    std::vector<std::string> names;
    if (plane) {
        reports.push_back(check_on_plane(f, c.seed));
        names.push_back("plane");
    }
    auto lines = parse_lines(labels, custom);
    if (lines.empty() && !plane) lines = parse_lines("sl,so,exc", {});
    for (const auto& l : lines) {
        reports.push_back(check_on_line(f, l.form, c.seed));
        names.push_back(l.name);
        if (crosscheck > 0 && reports.back().verdict != Verdict::VanishingFactor &&
            !numeric_crosscheck(f, l.form, crosscheck, c.seed))
            throw InternalConsistency("numeric sampling disagrees with the verdict on " + l.name);
    }
    bool all_one = true;
    Json arr = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        all_one = all_one && r.is_one();
        if (c.json) {
            Json j = report_to_json(r);
            j["name"] = names[i];
            arr.push_back(j);
            continue;
        }
        c.out << names[i] << ": " << to_string(r.verdict);
        if (r.verdict == Verdict::IdenticallyConstant) c.out << " " << to_string(r.constant);
        if (r.witness) {
            c.out << "  witness " << str(r.witness->point.coords()) << " value " << to_string(r.witness->value);
            if (r.witness->x) c.out << " x " << fmt_double(*r.witness->x);
        }
        if (r.verdict == Verdict::VanishingFactor) {
            c.out << "  num";
            for (auto v : r.vanishing_num) c.out << " " << v + 1;
            c.out << " den";
            for (auto v : r.vanishing_den) c.out << " " << v + 1;
        }
        c.out << "\n";
    }
    if (c.json) c.out << Json{{"reports", arr}, {"all_one", all_one}}.dump(2) << "\n";
    return all_one ? 0 : 1;
}

std::string signs_str(const std::vector<Rational>& v) {
    std::string s;
    for (const auto& q : v) s += q > 0 ? '+' : '-';
    return s;
}

int cmd_search(Context& c, int k, const std::string& lines_opt, std::uint64_t budget, unsigned threads,
               bool classical_scan, std::size_t show) {
    LineSet lines;
    if (lines_opt == "3" || lines_opt == "three") lines = LineSet::ThreeLines;
    else if (lines_opt == "4" || lines_opt == "four") lines = LineSet::FourLines;
    else throw UsageError("--lines must be 3 or 4");
    if (classical_scan) {
        if (lines != LineSet::ThreeLines) throw UsageError("the classical scan covers three lines only");
        const auto entries = scan_classical_three_lines(k, c.seed);
        Json arr = Json::array();
        std::size_t nontrivial = 0;
        for (const auto& e : entries) {
            nontrivial += e.nontrivial;
            if (c.json) {
                Json j{{"perms", perms_to_json(e.perms)}, {"components", e.components}, {"nontrivial", e.nontrivial}};
                if (e.family) j["family"] = family_to_json(*e.family);
                if (k == 3) j["matches_q33"] = e.q33.has_value();
                arr.push_back(j);
            } else {
                c.out << "s=" << cycle_notation(e.perms.s) << " p=" << cycle_notation(e.perms.p) << ": "
                      << (e.nontrivial ? "nontrivial" : "trivial only");
                if (e.nontrivial && k == 3) c.out << (e.q33 ? ", matches q33" : ", does not match q33");
                c.out << "\n";
            }
        }
        if (c.json) c.out << Json{{"k", k}, {"pairs", arr}, {"nontrivial_pairs", nontrivial}}.dump(2) << "\n";
        else c.out << nontrivial << " of " << entries.size() << " permutation pairs admit a nontrivial Q\n";
        return 0;
    }
    EnumerationOptions o;
    o.k = k;
    o.lines = lines;
    o.budget = budget;
    o.threads = threads;
    o.seed = c.seed;
    const EnumerationResult r = enumerate(o);
    std::vector<bool> p4(r.families.size(), false);
    if (k == 4 && lines == LineSet::FourLines)
        for (std::size_t i = 0; i < r.families.size(); ++i) {
            std::mt19937_64 rng(c.seed + i);
            std::vector<Rational> vals;
            for (std::size_t j = 0; j < r.families[i].family.params.size(); ++j) vals.push_back(random_rational(rng));
            p4[i] = match_prop4(cancel(r.families[i].family.instantiate(vals))).has_value();
        }
    if (c.json) {
        Json j = enumeration_to_json(r);
        if (k == 4 && lines == LineSet::FourLines)
            for (std::size_t i = 0; i < r.families.size(); ++i) j["families"][i]["matches_prop4"] = bool(p4[i]);
        c.out << j.dump(2) << "\n";
        return 0;
    }
    c.out << "k=" << k << " " << to_string(lines) << ": " << r.families.size() << " nontrivial families in "
          << r.cases << " cases (" << r.perm_tuples << " permutation tuples, " << r.pruned << " pruned)"
          << (r.partial ? ", partial: budget exhausted" : "") << "\n";
    for (std::size_t i = 0; i < r.families.size() && i < show; ++i) {
        const auto& sys = r.families[i].family.system;
        c.out << "  s=" << cycle_notation(sys.perms().s) << " p=" << cycle_notation(sys.perms().p);
        if (!sys.perms().v.empty()) c.out << " v=" << cycle_notation(sys.perms().v);
        c.out << " c=" << signs_str(sys.mult().c) << " k=" << signs_str(sys.mult().kmul);
        if (!sys.mult().r.empty()) c.out << " r=" << signs_str(sys.mult().r);
        c.out << " params=" << r.families[i].family.params.size();
        if (k == 4 && lines == LineSet::FourLines) c.out << (p4[i] ? " matches q-prop4" : "");
        c.out << "\n";
    }
    return 0;
}

int parse_n3_type(const std::string& type) {
    const auto pos = type.find('_');
    if (pos == std::string::npos || type.substr(pos + 1) != "3") throw UsageError("--type must look like 9_3");
    return static_cast<int>(parse_rational(type.substr(0, pos)).get_num().get_si());
}

int cmd_enumerate(Context& c, const std::string& type, bool color) {
    const int n = parse_n3_type(type);
    const auto tables = enumerate_n3(n);
    std::size_t colorable = 0;
    Json arr = Json::array();
    for (const auto& t : tables) {
        Json j{{"table", table_to_json(t)}};
        if (color && n % 3 == 0) {
            const auto col = find_coloring(t, n / 3);
            colorable += col.has_value();
            j["colorable"] = col.has_value();
            if (col) j["coloring"] = coloring_to_json(*col);
        } else if (color) {
            j["colorable"] = false;
        }
        arr.push_back(j);
    }
    if (c.json) {
        Json j{{"n", n}, {"classes", tables.size()}, {"tables", arr}};
        if (color) j["colorable"] = colorable;
        c.out << j.dump(2) << "\n";
    } else {
        c.out << tables.size() << " classes";
        if (color) c.out << ", " << colorable << " colorable";
        c.out << "\n";
    }
    return 0;
}

ConfigurationTable load_table(const std::string& file, const std::string& builtin) {
    if (!file.empty()) return table_from_json(load_json(file), "");
    if (builtin == "pappus") return pappus_table();
    throw UsageError("give --table FILE or --builtin pappus");
}

void print_coloring(std::ostream& out, const Coloring& c) {
    auto list = [&](const char* name, const std::vector<int>& v) {
        out << name << ":";
        for (int x : v) out << " " << x;
        out << "\n";
    };
    list("black", c.black);
    list("red", c.red);
    list("green", c.green);
}

int cmd_color(Context& c, const std::string& file, const std::string& builtin, int k) {
    const ConfigurationTable t = load_table(file, builtin);
    if (k <= 0) k = t.l / 3;
    const auto col = find_coloring(t, k);
    if (c.json) {
        c.out << Json{{"colorable", col.has_value()}, {"coloring", col ? coloring_to_json(*col) : Json(nullptr)}}.dump(2)
              << "\n";
    } else if (col) {
        print_coloring(c.out, *col);
    } else {
        c.out << "no coloring\n";
    }
    return col ? 0 : 1;
}

int cmd_extract(Context& c, const std::string& table_file, const std::string& coloring_file, const FormulaSource& src) {
    PermTriple p;
    if (!table_file.empty()) {
        const ConfigurationTable t = table_from_json(load_json(table_file), "");
        Coloring col;
        if (!coloring_file.empty()) {
            col = coloring_from_json(load_json(coloring_file), "");
        } else {
            const auto found = find_coloring(t, t.l / 3);
            if (!found) throw UsageError("table has no coloring");
            col = *found;
        }
        p = extract_permutations(t, col);
    } else {
        const FactorProduct f = src.load();
        std::vector<LinearForm> black;
        for (const auto& l : default_black(f.k())) black.push_back(l.form);
        const IncidenceSketch sk = sketch_from_q(f, black);
        p = extract_permutations(sk.table, sk.coloring);
    }
    if (c.json) {
        c.out << perms_to_json(p).dump(2) << "\n";
    } else {
        c.out << "s=" << cycle_notation(p.s) << " p=" << cycle_notation(p.p);
        if (!p.v.empty()) c.out << " v=" << cycle_notation(p.v);
        c.out << "\n";
    }
    return 0;
}

int cmd_sketch(Context& c, const FormulaSource& src, const std::string& labels, const std::string& out_path) {
    const FactorProduct f = src.load();
    const auto named = labels.empty() ? default_black(f.k()) : parse_lines(labels, {});
    std::vector<LinearForm> black;
    for (const auto& l : named) black.push_back(l.form);
    IncidenceSketch sk;
    try {
        sk = sketch_from_q(f, black);
    } catch (const NotAQPicture& e) {
        c.err << "not a Q picture: " << e.what() << "\n";
        return 1;
    }
    if (!out_path.empty()) emit_svg(sk, out_path);
    if (c.json) {
        c.out << sketch_to_json(sk).dump(2) << "\n";
        return 0;
    }
    c.out << sk.points.size() << " triple points, " << f.k() << " per black line; table (" << sk.table.p << "_"
          << sk.table.gamma << " " << sk.table.l << "_" << sk.table.pi << ")";
    c.out << (is_valid(sk.table) ? ", valid" : ", INVALID") << "\n";
    for (std::size_t i = 0; i < sk.points.size(); ++i) {
        const auto& pt = sk.points[i];
        c.out << "  P" << i + 1 << " " << str(pt.point.canonical()) << " on " << sk.lines[pt.black].label << " "
              << sk.lines[pt.red].label << " " << sk.lines[pt.green].label << "\n";
    }
    if (!out_path.empty()) c.out << "svg written to " << out_path << "\n";
    return 0;
}

int cmd_table(Context& c, const std::string& family, const std::string& param) {
    std::vector<AlgebraPoint> rows;
    if (!family.empty()) {
        if (param.empty()) throw UsageError("--family needs --param");
        rows.push_back(vogel_point(parse_family(family), parse_rational(param)));
    } else {
        if (!param.empty()) throw UsageError("--param needs --family");
        for (int n = 2; n <= 6; ++n) rows.push_back(vogel_point(Family::sl, n));
        for (int n = 5; n <= 9; ++n) rows.push_back(vogel_point(Family::so, n));
        for (int n = 1; n <= 4; ++n) rows.push_back(vogel_point(Family::sp, n));
        for (const char* n : {"-2/3", "0", "1", "2", "4", "8"}) rows.push_back(vogel_point(Family::exc, parse_rational(n)));
    }
    const FactorProduct adj = with_quantum(adjoint_formula(), false);
    Json arr = Json::array();
    for (const auto& r : rows) {
        const EvalResult d = eval_classical(adj, r.point);
        if (c.json) {
            arr.push_back({{"name", r.name()},
                           {"point", point_to_json(r.point)},
                           {"t", rational_to_json(r.t)},
                           {"integral", r.integral},
                           {"adjoint_dim", d.finite() ? rational_to_json(d.value) : Json(nullptr)}});
            continue;
        }
        c.out << r.name() << "  point " << str(r.point.coords()) << "  t " << to_string(r.t) << "  dim "
              << (d.finite() ? to_string(d.value) : std::string(to_string(d.kind))) << "\n";
    }
    if (c.json) c.out << arr.dump(2) << "\n";
    return 0;
}

int cmd_search144(Context& c, std::uint64_t budget, std::size_t max_candidates) {
    Search144Options o;
    o.budget = budget;
    o.max_candidates = max_candidates;
    const Search144Report r = search_144(o);
    if (c.json) {
        c.out << search144_to_json(r).dump(2) << "\n";
        return 0;
    }
    c.out << "budget " << r.budget << ", nodes " << r.nodes << ", best depth " << r.best_depth
          << ", most triple points " << r.best_triple_points << ", black lines verified "
          << (r.black_lines_verified ? "yes" : "no") << ", complete " << (r.complete ? "yes" : "no") << "\n";
    c.out << "candidates per depth:";
    for (auto n : r.per_depth_candidates) c.out << " " << n;
    c.out << "\n";
    return 0;
}

int cmd_reproduce(Context& c, const std::string& which, unsigned threads) {
    const auto checks = reproduce(which, c.seed, threads);
    bool ok = true;
    Json arr = Json::array();
    for (const auto& ch : checks) {
        ok = ok && ch.pass;
        if (c.json) arr.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
        else c.out << (ch.pass ? "PASS " : "FAIL ") << ch.name << ": " << ch.detail << "\n";
    }
    if (c.json) c.out << Json{{"proposition", which}, {"checks", arr}, {"pass", ok}}.dump(2) << "\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------------------------
// Scripted pipelines

std::vector<Rational> draws(std::mt19937_64& rng, std::size_t n) {
    std::vector<Rational> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng, 1000));
    return v;
}

bool all_one(const FactorProduct& f, const std::vector<LinearForm>& lines, std::uint64_t seed) {
    for (const auto& r : check_on_lines(f, lines, seed))
        if (!r.is_one()) return false;
    return true;
}

std::vector<Check> reproduce_p1(std::uint64_t seed) {
    std::vector<Check> out;
    for (int k = 1; k <= 2; ++k) {
        const auto entries = scan_classical_three_lines(k, seed);
        const auto n = std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.nontrivial; });
        out.push_back({"classical k=" + std::to_string(k), n == 0,
                       std::to_string(n) + " of " + std::to_string(entries.size()) + " permutation pairs nontrivial"});
    }
    const auto entries = scan_classical_three_lines(3, seed);
    std::size_t nontrivial = 0, allowed = 0, matched = 0;
    for (const auto& e : entries) {
        if (!e.nontrivial) continue;
        ++nontrivial;
        if (!has_fixed_point(e.perms.s) && !has_fixed_point(e.perms.p) && e.perms.s != e.perms.p) ++allowed;
        if (e.q33) ++matched;
    }
    out.push_back({"classical k=3 pattern", nontrivial == 2 && allowed == 2,
                   std::to_string(nontrivial) + " of 36 pairs nontrivial, " + std::to_string(allowed) +
                       " of them with distinct fixed-point-free permutations"});
    out.push_back({"classical k=3 closed form", nontrivial > 0 && matched == nontrivial,
                   std::to_string(matched) + " nontrivial families match q33"});
    // The closed-form parametrization with n_i = 1 and k_i = c_i.
    std::mt19937_64 rng(seed);
    bool ok = true;
    for (int trial = 0; trial < 10; ++trial) {
        const auto v = draws(rng, 4);
        const Rational c1 = v[0], c2 = v[1], c3 = 1 / (c1 * c2), x = v[2], y = v[3];
        const auto sys = build_system(3, LineSet::ThreeLines, {{1, 2, 0}, {2, 0, 1}, {}}, {{c1, c2, c3}, {c1, c2, c3}, {}});
        const std::vector<Rational> u{1, 1, 1, x, c2 * x, c2 * c3 * x, y, c2 * c3 * y, c3 * y};
        ok = ok && verify_solution(sys, u).ok && match_q33(assemble_q(sys, u, false)).has_value();
    }
    out.push_back({"closed-form parametrization", ok, "10 random draws satisfy the k=3 system and match q33"});
    return out;
}

std::vector<Check> reproduce_p2(std::uint64_t seed, unsigned threads) {
    std::vector<Check> out;
    for (int k = 1; k <= 3; ++k) {
        EnumerationOptions o;
        o.k = k;
        o.threads = threads;
        o.seed = seed;
        const auto r = enumerate(o);
        out.push_back({"quantum k=" + std::to_string(k), r.families.empty() && !r.partial,
                       std::to_string(r.families.size()) + " nontrivial families in " + std::to_string(r.cases) +
                           " cases"});
    }
    return out;
}

std::vector<Check> reproduce_p3(std::uint64_t seed) {
    std::vector<Check> out;
    const auto tables = enumerate_n3(9);
    out.push_back({"(9_3) classes", tables.size() == 3, std::to_string(tables.size()) + " isomorphism classes"});
    std::vector<ConfigurationTable> colorable;
    for (const auto& t : tables)
        if (find_coloring(t, 3)) colorable.push_back(t);
    out.push_back({"colorable classes", colorable.size() == 1, std::to_string(colorable.size()) + " colorable"});
    std::mt19937_64 rng(seed);
    const auto v = draws(rng, 4);
    const FactorProduct q = builtin_q33(v[0], v[1], v[2], v[3]);
    const IncidenceSketch sk = sketch_from_q(q, system_lines(LineSet::ThreeLines));
    bool three = true;
    for (const auto& tp : sk.triple_points) three = three && tp.size() == 3;
    out.push_back({"triple points", three && sk.points.size() == 9,
                   std::to_string(sk.points.size()) + " triple points, 3 per black line"});
    const bool iso = colorable.size() == 1 && isomorphic(sk.table, colorable.front());
    out.push_back({"sketch table", iso, iso ? "isomorphic to the colorable class" : "not isomorphic"});
    const PermTriple p = extract_permutations(sk.table, sk.coloring);
    const bool cyc = !has_fixed_point(p.s) && !has_fixed_point(p.p) && p.s != p.p;
    out.push_back({"pairing permutations", cyc, "s=" + cycle_notation(p.s) + " p=" + cycle_notation(p.p)});
    const auto fit = fit_to_system(q, p, LineSet::ThreeLines);
    out.push_back({"system check", fit && fit->report.ok, "q33 parameters satisfy the system of the extracted permutations"});
    return out;
}

std::vector<Check> reproduce_p4(std::uint64_t seed, unsigned threads) {
    std::vector<Check> out;
    std::mt19937_64 rng(seed);
    const auto v = draws(rng, 4);
    const FactorProduct q = builtin_q_prop4(v[0], v[1], v[2], v[3]);
    const auto lines4 = system_lines(LineSet::FourLines);
    const IncidenceSketch sk = sketch_from_q(q, lines4);
    out.push_back({"(16_3 12_4) table", is_valid(sk.table) && sk.table.p == 16 && sk.table.l == 12,
                   "p=" + std::to_string(sk.table.p) + " l=" + std::to_string(sk.table.l)});
    out.push_back({"construction coloring", is_valid_coloring(sk.table, sk.coloring), "black/red/green classes valid"});
    const auto found = find_coloring(sk.table, 4);
    out.push_back({"coloring search", found.has_value(), found ? "a coloring exists" : "no coloring"});
    const PermTriple p = extract_permutations(sk.table, sk.coloring);
    const bool perms_ok = p == prop4_perms();
    out.push_back({"pairing permutations", perms_ok,
                   "s=" + cycle_notation(p.s) + " p=" + cycle_notation(p.p) + " v=" + cycle_notation(p.v)});
    bool rel = true;
    for (int trial = 0; trial < 10; ++trial) {
        const auto w = draws(rng, 7);
        const auto in = prop4_relations(w[0], w[1], w[2], w[3], w[4], w[5], w[6], true);
        rel = rel && verify_solution(in.system, in.unknowns).ok && match_prop4(assemble_q(in.system, in.unknowns, false));
    }
    out.push_back({"minus branch", rel, "10 draws satisfy every equation and give q-prop4"});
    const auto w = draws(rng, 7);
    const auto plus = prop4_relations(w[0], w[1], w[2], w[3], w[4], w[5], w[6], false);
    const auto st = solve(plus.system, false, seed);
    out.push_back({"plus branch", verify_solution(plus.system, plus.unknowns).ok && st.status == SolveStatus::Trivial,
                   std::string("solution space is ") + std::string(to_string(st.status))});
    bool lines_ok = true;
    for (int trial = 0; trial < 20; ++trial) {
        const auto z = draws(rng, 4);
        lines_ok = lines_ok && all_one(builtin_q_prop4(z[0], z[1], z[2], z[3], false), lines4, seed) &&
                   all_one(builtin_q_prop4(z[0], z[1], z[2], z[3], true), lines4, seed);
    }
    out.push_back({"closed form on four lines", lines_ok, "20 draws, classical and quantum"});
    // Quantum systems for the extracted permutations.
    std::size_t nontrivial = 0, matched = 0;
    for (const auto& c : std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1},
                                                       {-1, 1, 1, -1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {-1, -1, -1, -1}})
        for (const auto& k : std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1},
                                                           {-1, 1, 1, -1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {-1, -1, -1, -1}})
            for (const auto& r : std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1},
                                                               {-1, 1, 1, -1}, {-1, 1, -1, 1}, {-1, -1, 1, 1}, {-1, -1, -1, -1}}) {
                auto conv = [](const std::vector<int>& s) { return std::vector<Rational>(s.begin(), s.end()); };
                const auto sys = build_system(4, LineSet::FourLines, prop4_perms(), {conv(c), conv(k), conv(r)});
                const auto res = solve_quantum(sys, seed);
                if (res.status != SolveStatus::Nontrivial) continue;
                ++nontrivial;
                if (match_prop4(cancel(res.family->instantiate(draws(rng, res.family->params.size()))))) ++matched;
            }
    (void)threads;
    out.push_back({"quantum systems", nontrivial > 0 && matched == nontrivial,
                   std::to_string(nontrivial) + " nontrivial sign choices, " + std::to_string(matched) +
                       " match q-prop4 in the sinh reading"});
    return out;
}

}  // namespace

std::uint64_t seed_from_env() {
    const char* s = std::getenv("VOGEL_SEED");
    if (!s || !*s) return kDefaultSeed;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (*end != '\0') throw UsageError("VOGEL_SEED must be a decimal integer");
    return v;
}

std::vector<Check> reproduce(std::string_view which, std::uint64_t seed, unsigned threads) {
    if (which == "P1-remark") return reproduce_p1(seed);
    if (which == "P2-k3") return reproduce_p2(seed, threads);
    if (which == "P3") return reproduce_p3(seed);
    if (which == "P4") return reproduce_p4(seed, threads);
    throw ParseError("reproduce", "unknown proposition '" + std::string(which) + "' (P1-remark, P2-k3, P3, P4)");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Universal dimension formulas, non-uniqueness factors and colored configurations on Vogel's plane.\n"
                 "Black lines are ordered sl, so, exc, sp; their pairings give s, p and v."};
    app.require_subcommand(1);
    bool json = false;
    unsigned threads = 0;
    app.add_flag("--json", json, "emit JSON");
    app.add_option("--threads", threads, "worker threads (0: all cores)");

    FormulaSource eval_src, check_src, extract_src, sketch_src;
    std::string algebra, param, point, labels, out_path, type, table_file, coloring_file, table_builtin, family, which;
    std::string search_lines = "3";
    std::vector<std::string> custom_lines;
    bool primed = false, quantum_eval = false, classical_eval = false, do_cancel = false, plane = false, color = false,
         classical_scan = false;
    double x = 1e-3;
    int crosscheck = 0, k = 3, color_k = 0;
    std::uint64_t budget = UINT64_MAX, budget144 = 0;
    std::size_t show = 10, max_candidates = 48;

    auto* eval = app.add_subcommand("eval", "evaluate a formula at a point");
    eval_src.add_to(eval);
    eval->add_option("--algebra", algebra, "sl | so | sp | exc");
    eval->add_option("--param", param, "N (or n for exc), exact rational");
    eval->add_option("--point", point, "a,b,c exact rationals");
    eval->add_flag("--primed", primed, "the point is in primed coordinates");
    eval->add_flag("--classical", classical_eval, "classical value (default)");
    eval->add_flag("--sinh", quantum_eval, "quantum value at the given representative (floating point)");
    eval->add_option("--x", x, "quantum parameter x for --sinh");
    eval->add_flag("--cancel", do_cancel, "cancel factors before evaluating");

    auto* check = app.add_subcommand("check-identity", "decide whether a formula is one on lines");
    check_src.add_to(check);
    check->add_option("--lines", labels, "comma-separated distinguished line labels (sl,so,exc,sp,...)");
    check->add_option("--line", custom_lines, "primed line n,x,y (repeatable)");
    check->add_flag("--plane", plane, "also check on the whole plane");
    check->add_option("--crosscheck", crosscheck, "numeric samples per line");

    auto* search = app.add_subcommand("search", "enumerate +-1 constraint systems");
    search->add_option("--k", k, "number of factors")->check(CLI::Range(1, 6));
    search->add_option("--lines", search_lines, "3 or 4 black lines");
    search->add_option("--budget", budget, "maximum number of cases");
    search->add_flag("--classical-scan", classical_scan, "classical three-line analysis over all permutation pairs");
    search->add_option("--show", show, "families to list in text output");

    auto* enumerate_cmd = app.add_subcommand("configs-enumerate", "enumerate (n_3) configurations");
    enumerate_cmd->add_option("--type", type, "n_3, e.g. 9_3")->required();
    enumerate_cmd->add_flag("--color", color, "also decide colorability");

    auto* color_cmd = app.add_subcommand("configs-color", "find a black/red/green coloring");
    color_cmd->add_option("--table", table_file, "table JSON file");
    color_cmd->add_option("--builtin", table_builtin, "pappus");
    color_cmd->add_option("--k", color_k, "lines per color (default l/3)");

    auto* extract = app.add_subcommand("extract-perms", "pairing permutations of a colored configuration");
    extract->add_option("--table", table_file, "table JSON file");
    extract->add_option("--coloring", coloring_file, "coloring JSON file (black lines in sl, so, exc, sp order)");
    extract_src.add_to(extract);

    auto* sketch = app.add_subcommand("sketch", "exact incidence picture of a factor product");
    sketch_src.add_to(sketch);
    sketch->add_option("--lines", labels, "black line labels (default sl,so,exc[,sp])");
    sketch->add_option("--out", out_path, "SVG output path");

    auto* table = app.add_subcommand("vogel-table", "Vogel parameters and adjoint dimensions");
    table->add_option("--family", family, "sl | so | sp | exc");
    table->add_option("--param", param, "N or n");

    auto* s144 = app.add_subcommand("search-144", "bounded search on the twelve distinguished lines");
    s144->add_option("--budget", budget144, "node budget");
    s144->add_option("--max-candidates", max_candidates, "branching cap per node");

    auto* repro = app.add_subcommand("reproduce", "scripted checks: P1-remark, P2-k3, P3, P4");
    repro->add_option("proposition", which, "P1-remark | P2-k3 | P3 | P4")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        Context ctx{out, err, seed_from_env(), json};
        if (*eval) {
            if (quantum_eval && classical_eval) throw UsageError("--sinh and --classical are exclusive");
            return cmd_eval(ctx, eval_src, algebra, param, point, primed, quantum_eval, x, do_cancel);
        }
        if (*check) return cmd_check(ctx, check_src, labels, custom_lines, plane, crosscheck);
        if (*search) return cmd_search(ctx, k, search_lines, budget, threads, classical_scan, show);
        if (*enumerate_cmd) return cmd_enumerate(ctx, type, color);
        if (*color_cmd) return cmd_color(ctx, table_file, table_builtin, color_k);
        if (*extract) return cmd_extract(ctx, table_file, coloring_file, extract_src);
        if (*sketch) return cmd_sketch(ctx, sketch_src, labels, out_path);
        if (*table) return cmd_table(ctx, family, param);
        if (*s144) return cmd_search144(ctx, budget144, max_candidates);
        if (*repro) return cmd_reproduce(ctx, which, threads);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalConsistency& e) {
        err << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace vogel::cli
