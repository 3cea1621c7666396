#include "incfree/validation.hpp"

namespace incfree {

std::string ValidationReport::summary() const {
    if (violations.empty()) return {};
    const auto& v = violations.front();
    std::string out = v.kind + " [";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(v.witness[i]);
    }
    out += ']';
    if (!v.detail.empty()) out += ' ' + v.detail;
    return out;
}

}  // namespace incfree
