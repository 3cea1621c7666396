#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace incfree {

struct Violation {
    std::string kind;
    std::vector<std::size_t> witness;
    std::string detail;
};

/// Outcome of a structural check. Passes exactly when no violation was found.
struct ValidationReport {
    std::vector<Violation> violations;

    bool passed() const noexcept { return violations.empty(); }
    void add(std::string kind, std::vector<std::size_t> witness, std::string detail = {}) {
        violations.push_back({std::move(kind), std::move(witness), std::move(detail)});
    }
    /// First violation rendered as "kind [w0 w1 ...] detail", or "" when passed.
    std::string summary() const;
};

}  // namespace incfree
