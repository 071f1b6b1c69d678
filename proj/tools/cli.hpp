#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace vogel::cli {

/// Runs the command line. Exit codes: 0 success or positive verdict, 1 negative verdict,
/// 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

/// Scripted pipelines: "P1-remark", "P2-k3", "P3", "P4". Throws vogel::ParseError for an
/// unknown name.
std::vector<Check> reproduce(std::string_view which, std::uint64_t seed, unsigned threads);

/// VOGEL_SEED when set (decimal), otherwise the library default.
std::uint64_t seed_from_env();

}  // namespace vogel::cli
