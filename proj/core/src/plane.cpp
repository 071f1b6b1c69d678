#include "vogel/plane.hpp"

#include "vogel/errors.hpp"

#include <algorithm>

namespace vogel {

std::string_view to_string(Basis b) { return b == Basis::Primed ? "primed" : "unprimed"; }

Triple normalized(const Triple& t) {
    for (const auto& v : t) {
        if (v != 0) {
            const Rational inv = 1 / v;
            return {t[0] * inv, t[1] * inv, t[2] * inv};
        }
    }
    throw DegenerateInput("zero triple has no projective class");
}

namespace {

bool is_zero(const Triple& t) { return t[0] == 0 && t[1] == 0 && t[2] == 0; }

Triple cross(const Triple& a, const Triple& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

void require_same_basis(Basis a, Basis b, const char* op) {
    if (a != b) throw BasisMismatch(std::string(op) + ": arguments live in different bases");
}

}  // namespace

ProjPoint::ProjPoint(Triple coords, Basis basis) : coords_(std::move(coords)), basis_(basis) {
    if (is_zero(coords_)) throw DegenerateInput("point (0:0:0) does not exist");
}

ProjPoint ProjPoint::scaled(const Rational& factor) const {
    if (factor == 0) throw DegenerateInput("cannot scale a point by zero");
    return ProjPoint({coords_[0] * factor, coords_[1] * factor, coords_[2] * factor}, basis_);
}

bool operator==(const ProjPoint& a, const ProjPoint& b) {
    if (a.basis_ != b.basis_) return false;
    return is_zero(cross(a.coords_, b.coords_));
}

bool operator<(const ProjPoint& a, const ProjPoint& b) {
    if (a.basis_ != b.basis_) return a.basis_ < b.basis_;
    return a.canonical() < b.canonical();
}

LinearForm::LinearForm(Triple coeffs, Basis basis) : coeffs_(std::move(coeffs)), basis_(basis) {
    if (is_zero(coeffs_)) throw DegenerateInput("the zero form defines no line");
}

Rational LinearForm::operator()(const ProjPoint& p) const {
    require_same_basis(basis_, p.basis(), "evaluate");
    return (*this)(p.coords());
}

Rational LinearForm::operator()(const Triple& p) const {
    return coeffs_[0] * p[0] + coeffs_[1] * p[1] + coeffs_[2] * p[2];
}

LinearForm LinearForm::scaled(const Rational& factor) const {
    if (factor == 0) throw DegenerateInput("cannot scale a form by zero");
    return LinearForm({coeffs_[0] * factor, coeffs_[1] * factor, coeffs_[2] * factor}, basis_);
}

bool operator<(const LinearForm& a, const LinearForm& b) {
    if (a.basis_ != b.basis_) return a.basis_ < b.basis_;
    return a.coeffs_ < b.coeffs_;
}

bool same_line(const LinearForm& f, const LinearForm& g) {
    return f.basis() == g.basis() && is_zero(cross(f.coeffs(), g.coeffs()));
}

Rational proportionality(const LinearForm& f, const LinearForm& g) {
    if (!same_line(f, g)) return 0;
    for (std::size_t i = 0; i < 3; ++i)
        if (g[i] != 0) return f[i] / g[i];
    return 0;  // unreachable: forms are nonzero
}

// Points: (a, b, c) -> (a + b, 2a + b, c - 2a - 2b); inverse (a', b', c') -> (-a' + b', 2a' - b', 2a' + c').
// Forms: substitute the inverse map, so n a + x b + y c = (-n + 2x + 2y) a' + (n - x) b' + y c'.
ProjPoint to_primed(const ProjPoint& p) {
    if (p.basis() != Basis::Unprimed) throw BasisMismatch("to_primed: point is already primed");
    const auto& [a, b, c] = p.coords();
    return ProjPoint(a + b, 2 * a + b, c - 2 * a - 2 * b, Basis::Primed);
}

ProjPoint to_unprimed(const ProjPoint& p) {
    if (p.basis() != Basis::Primed) throw BasisMismatch("to_unprimed: point is already unprimed");
    const auto& [a, b, c] = p.coords();
    return ProjPoint(-a + b, 2 * a - b, 2 * a + c, Basis::Unprimed);
}

LinearForm to_primed(const LinearForm& f) {
    if (f.basis() != Basis::Unprimed) throw BasisMismatch("to_primed: form is already primed");
    const auto& [n, x, y] = f.coeffs();
    return LinearForm(-n + 2 * x + 2 * y, n - x, y, Basis::Primed);
}

LinearForm to_unprimed(const LinearForm& f) {
    if (f.basis() != Basis::Primed) throw BasisMismatch("to_unprimed: form is already unprimed");
    const auto& [a, b, c] = f.coeffs();
    return LinearForm(a + 2 * b - 2 * c, a + b - 2 * c, c, Basis::Unprimed);
}

ProjPoint in_basis(const ProjPoint& p, Basis b) {
    if (p.basis() == b) return p;
    return b == Basis::Primed ? to_primed(p) : to_unprimed(p);
}

LinearForm in_basis(const LinearForm& f, Basis b) {
    if (f.basis() == b) return f;
    return b == Basis::Primed ? to_primed(f) : to_unprimed(f);
}

Perm3::Perm3(std::array<int, 3> images) : images_(images) {
    std::array<bool, 3> seen{};
    for (int i : images_) {
        if (i < 0 || i > 2 || seen[i]) throw DegenerateInput("Perm3: images are not a permutation");
        seen[i] = true;
    }
}

std::vector<Perm3> Perm3::all() {
    std::array<int, 3> img{0, 1, 2};
    std::vector<Perm3> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Perm3 operator*(const Perm3& a, const Perm3& b) {
    std::array<int, 3> img{};
    for (int i = 0; i < 3; ++i) img[i] = a.images_[b.images_[i]];
    return Perm3(img);
}

std::string Perm3::str() const {
    static constexpr const char* names[] = {"a", "b", "g"};
    std::string s = "[";
    for (int i = 0; i < 3; ++i) {
        if (i) s += ",";
        s += std::string(names[i]) + "->" + names[images_[i]];
    }
    return s + "]";
}

namespace {

Triple permuted(const Perm3& perm, const Triple& t) {
    Triple out;
    for (int i = 0; i < 3; ++i) out[perm.images()[i]] = t[i];
    return out;
}

}  // namespace

ProjPoint act(const Perm3& perm, const ProjPoint& p) {
    const ProjPoint u = in_basis(p, Basis::Unprimed);
    return in_basis(ProjPoint(permuted(perm, u.coords()), Basis::Unprimed), p.basis());
}

LinearForm act(const Perm3& perm, const LinearForm& f) {
    const LinearForm u = in_basis(f, Basis::Unprimed);
    return in_basis(LinearForm(permuted(perm, u.coeffs()), Basis::Unprimed), f.basis());
}

bool incident(const ProjPoint& p, const LinearForm& f) {
    require_same_basis(p.basis(), f.basis(), "incident");
    return f(p) == 0;
}

LinearForm line_through(const ProjPoint& p, const ProjPoint& q) {
    require_same_basis(p.basis(), q.basis(), "line_through");
    Triple c = cross(p.coords(), q.coords());
    if (is_zero(c)) throw DegenerateInput("line_through: points coincide");
    return LinearForm(std::move(c), p.basis());
}

ProjPoint meet(const LinearForm& f, const LinearForm& g) {
    require_same_basis(f.basis(), g.basis(), "meet");
    Triple c = cross(f.coeffs(), g.coeffs());
    if (is_zero(c)) throw DegenerateInput("meet: lines coincide");
    return ProjPoint(std::move(c), f.basis());
}

std::vector<DistinguishedLine> distinguished_lines(Basis basis) {
    auto L = [](int a, int b, int c) { return LinearForm(a, b, c, Basis::Unprimed); };
    std::vector<DistinguishedLine> lines = {
        {"sl", L(1, 1, 0)},      {"so", L(2, 1, 0)},       {"sp", L(1, 2, 0)},
        {"exc", L(-2, -2, 1)},   {"a+g", L(1, 0, 1)},      {"b+g", L(0, 1, 1)},
        {"a+2g", L(1, 0, 2)},    {"b+2g", L(0, 1, 2)},     {"g+2a", L(2, 0, 1)},
        {"g+2b", L(0, 2, 1)},    {"b-2(a+g)", L(-2, 1, -2)}, {"a-2(b+g)", L(1, -2, -2)},
    };
    if (basis == Basis::Primed)
        for (auto& l : lines) l.form = to_primed(l.form);
    return lines;
}

LinearForm distinguished_line(std::string_view label, Basis basis) {
    for (auto& l : distinguished_lines(basis))
        if (l.label == label) return l.form;
    throw ParseError("line", "unknown distinguished line '" + std::string(label) + "'");
}

std::string_view to_string(Family f) {
    switch (f) {
        case Family::sl: return "sl";
        case Family::so: return "so";
        case Family::sp: return "sp";
        case Family::exc: return "exc";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "sl") return Family::sl;
    if (name == "so") return Family::so;
    if (name == "sp") return Family::sp;
    if (name == "exc") return Family::exc;
    throw ParseError("family", "unknown algebra family '" + std::string(name) + "'");
}

LinearForm family_line(Family family) {
    switch (family) {
        case Family::sl: return LinearForm(1, 1, 0);
        case Family::so: return LinearForm(2, 1, 0);
        case Family::sp: return LinearForm(1, 2, 0);
        case Family::exc: return LinearForm(-2, 1, -2);
    }
    throw DegenerateInput("unknown family");
}

std::string AlgebraPoint::name() const {
    const std::string p = to_string(param);
    switch (family) {
        case Family::sl: return "sl(" + p + ")";
        case Family::so: return "so(" + p + ")";
        case Family::sp: return "sp(2*" + p + ")";
        case Family::exc: return "exc(" + p + ")";
    }
    return "?";
}

AlgebraPoint vogel_point(Family family, const Rational& param) {
    const Rational& N = param;
    Triple c;
    Rational t;
    switch (family) {
        case Family::sl: c = {-2, 2, N}; t = N; break;
        case Family::so: c = {-2, 4, N - 4}; t = N - 2; break;
        case Family::sp: c = {-2, 1, N + 2}; t = N + 1; break;
        case Family::exc: c = {-2, 2 * N + 4, N + 4}; t = 3 * N + 6; break;
    }
    return AlgebraPoint{family, param, ProjPoint(c), t, is_integer(param), family_line(family)};
}

}  // namespace vogel
