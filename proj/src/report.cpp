#include "wittmod/report.hpp"

#include <json.hpp>

namespace wittmod {

std::string to_json_line(const CheckReport& r) {
    nlohmann::json j;
    j["identity"] = r.identity;
    j["indices"] = r.indices;
    j["residue_term_count"] = r.residue_term_count;
    j["pass"] = r.pass;
    if (!r.note.empty()) j["note"] = r.note;
    return j.dump();
}

}  // namespace wittmod
