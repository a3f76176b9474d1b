#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace wittmod {

/// Outcome of one mechanical identity or module check. Failures are data, not
/// exceptions: residue_term_count counts surviving monomials (0 means the
/// identity reduced to zero).
struct CheckReport {
    std::string identity;
    std::map<std::string, std::string> indices;
    std::size_t residue_term_count = 0;
    bool pass = true;
    std::string note;
};

std::string to_json_line(const CheckReport& r);

inline bool all_pass(const std::vector<CheckReport>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

}  // namespace wittmod
