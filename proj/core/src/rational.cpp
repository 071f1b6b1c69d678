#include "vogel/rational.hpp"

#include "vogel/errors.hpp"

#include <cctype>

namespace vogel {

VanishingFactor::VanishingFactor(std::vector<std::size_t> num, std::vector<std::size_t> den)
    : Error("factor vanishes identically on the line"), num_(std::move(num)), den_(std::move(den)) {}

namespace {

bool valid_integer(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string normalize_minus(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i]);
        }
    }
    if (!out.empty() && out[0] == '+') out.erase(0, 1);
    return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string s = normalize_minus(text);
    const auto slash = s.find('/');
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("rational", "not an exact rational: '" + std::string(text) + "'");
    return from_pair(num, den);
}

Rational from_pair(std::string_view num, std::string_view den) {
    if (!valid_integer(num) || !valid_integer(den))
        throw ParseError("rational", "malformed numerator/denominator pair");
    Integer n(std::string(num[0] == '+' ? num.substr(1) : num), 10);
    Integer d(std::string(den[0] == '+' ? den.substr(1) : den), 10);
    if (d == 0) throw ParseError("rational", "zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::array<std::string, 2> to_pair(const Rational& q) {
    return {q.get_num().get_str(), q.get_den().get_str()};
}

Rational random_rational(std::mt19937_64& rng, int bound, bool nonzero) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    for (;;) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (!nonzero || q != 0) return q;
    }
}

}  // namespace vogel
