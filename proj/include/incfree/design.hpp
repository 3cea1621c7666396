#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "incfree/bitset.hpp"
#include "incfree/validation.hpp"

namespace incfree {

struct DesignParameters {
    std::size_t v = 0;
    std::size_t k = 0;
    std::size_t lambda = 0;

    bool operator==(const DesignParameters&) const = default;
};

/// A square point-block incidence structure together with its claimed
/// (v, k, lambda). Construction only enforces the v x v shape; the design
/// axioms are checked by validate_design.
///
/// Rows are points, columns are blocks. Both the row bitsets (blocks through
/// a point) and the column bitsets (points on a block) are kept.
class SymmetricDesign {
public:
    SymmetricDesign() = default;
    /// Throws Error(ShapeMismatch) unless there are v rows of v bits each.
    SymmetricDesign(DesignParameters params, std::vector<Bitset> rows,
                    std::vector<std::string> point_labels = {}, std::vector<std::string> block_labels = {});

    /// Rows as strings over {0,1}.
    static SymmetricDesign from_strings(DesignParameters params, const std::vector<std::string>& rows);

    const DesignParameters& params() const noexcept { return params_; }
    std::size_t v() const noexcept { return params_.v; }
    std::size_t k() const noexcept { return params_.k; }
    std::size_t lambda() const noexcept { return params_.lambda; }

    bool incident(std::size_t point, std::size_t block) const noexcept { return rows_[point].test(block); }
    const Bitset& blocks_through(std::size_t point) const noexcept { return rows_[point]; }
    const Bitset& points_on(std::size_t block) const noexcept { return cols_[block]; }

    /// lambda = 1 and v = k^2 - k + 1, i.e. a projective plane of order k-1.
    bool is_plane() const noexcept;
    /// Plane order k - 1; meaningful only when is_plane().
    std::size_t order() const noexcept { return params_.k - 1; }

    const std::vector<std::string>& point_labels() const noexcept { return point_labels_; }
    const std::vector<std::string>& block_labels() const noexcept { return block_labels_; }

    bool operator==(const SymmetricDesign& other) const noexcept {
        return params_ == other.params_ && rows_ == other.rows_;
    }

private:
    DesignParameters params_;
    std::vector<Bitset> rows_;
    std::vector<Bitset> cols_;
    std::vector<std::string> point_labels_;
    std::vector<std::string> block_labels_;
};

/// Checks the Fisher identity, row and column sums, and the pairwise
/// row/column intersection numbers. Each violation carries its witness
/// (a point, a block, or a pair of them).
ValidationReport validate_design(const SymmetricDesign& design);

/// The Desarguesian plane PG(2,q) as a (q^2+q+1, q+1, 1) design.
/// Points are homogeneous triples normalised so the last nonzero coordinate
/// is 1, listed in lexicographic order; lines use the same coordinates and
/// contain the points X with a.X = 0.
SymmetricDesign build_pg2(std::size_t q);

/// Design developed from a cyclic difference set {d_i} mod v: block j is
/// {d_i + j mod v}. Throws Error(InvalidDesign) if the result is not a
/// symmetric design.
SymmetricDesign build_cyclic_design(std::size_t v, const std::vector<std::size_t>& base_block);

/// Transpose. Throws Error(InvalidDesign) if the input does not validate.
SymmetricDesign dual_design(const SymmetricDesign& design);

/// Bitwise complement as a (v, v-k, v-2k+lambda) design. Throws
/// Error(InvalidDesign) or Error(DegenerateComplement) when v-2k+lambda <= 0.
SymmetricDesign complement_design(const SymmetricDesign& design);

}  // namespace incfree
