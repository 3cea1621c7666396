#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "incfree/design.hpp"
#include "incfree/incidence_free.hpp"
#include "incfree/kneser.hpp"
#include "incfree/pair_matching.hpp"
#include "incfree/validation.hpp"

namespace incfree {

// Design file: a header line "v k lambda", then v lines of v characters in
// {0,1}; line i is the incidence row of point i.

/// Canonical file bytes, newline-terminated.
std::string design_to_string(const SymmetricDesign& design);
void write_design(std::ostream& out, const SymmetricDesign& design);
/// Throws Error(ParseError) for malformed input and, when `validate` is set,
/// Error(InvalidDesign) for a matrix that fails validate_design.
SymmetricDesign read_design(std::istream& in, bool validate = true);

/// 64-bit FNV-1a of the canonical design bytes, as 16 hex digits.
std::string design_hash(const SymmetricDesign& design);

/// Pair certificate with optional perfect matching and coloring anchors.
struct Certificate {
    std::string design_hash;
    std::size_t v = 0;
    IncidenceFreePair pair;
    SearchMode mode = SearchMode::Heuristic;
    std::optional<std::size_t> upper_bound;
    std::uint64_t nodes = 0;
    std::optional<std::vector<Edge>> matching;
    std::optional<std::vector<Chamber>> coloring;
};

Certificate make_certificate(const SymmetricDesign& design, const PairCertificate& found);

std::string certificate_to_string(const Certificate& cert);
void write_certificate(std::ostream& out, const Certificate& cert);
/// Parses without checking against a design. Throws Error(ParseError).
Certificate read_certificate(std::istream& in);

/// Design hash and size, pair validity, matching (perfect on the surviving
/// graph, every pair incident) and coloring (verify_coloring on the colors
/// derived from the anchors).
ValidationReport verify_certificate(const SymmetricDesign& design, const Certificate& cert);

/// read_certificate followed by verify_certificate; a failed check throws
/// Error(DesignMismatch) for a foreign design and the matching error kind
/// (IncidenceFound, NotEquinumerous, NotPerfect, NotCovering) otherwise.
Certificate load_certificate(std::istream& in, const SymmetricDesign& design);

}  // namespace incfree
