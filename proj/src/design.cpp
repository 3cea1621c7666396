#include "incfree/design.hpp"

#include <array>
#include <string>

#include "incfree/error.hpp"
#include "incfree/galois_field.hpp"

namespace incfree {

namespace {

std::string coords(char open, const std::array<std::size_t, 3>& c, char close) {
    return open + std::to_string(c[0]) + ',' + std::to_string(c[1]) + ',' + std::to_string(c[2]) + close;
}

}  // namespace

SymmetricDesign::SymmetricDesign(DesignParameters params, std::vector<Bitset> rows,
                                 std::vector<std::string> point_labels, std::vector<std::string> block_labels)
    : params_(params), rows_(std::move(rows)), point_labels_(std::move(point_labels)),
      block_labels_(std::move(block_labels)) {
    const std::size_t v = params_.v;
    if (rows_.size() != v)
        throw Error(ErrorKind::ShapeMismatch,
                    "expected " + std::to_string(v) + " rows, got " + std::to_string(rows_.size()));
    for (std::size_t p = 0; p < v; ++p) {
        if (rows_[p].size() != v)
            throw Error(ErrorKind::ShapeMismatch,
                        "row " + std::to_string(p) + " has " + std::to_string(rows_[p].size()) + " columns", {p});
    }
    if ((!point_labels_.empty() && point_labels_.size() != v) || (!block_labels_.empty() && block_labels_.size() != v))
        throw Error(ErrorKind::ShapeMismatch, "label count does not match v");
    cols_.assign(v, Bitset(v));
    for (std::size_t p = 0; p < v; ++p) rows_[p].for_each([&](std::size_t b) { cols_[b].set(p); });
}

SymmetricDesign SymmetricDesign::from_strings(DesignParameters params, const std::vector<std::string>& rows) {
    std::vector<Bitset> bits;
    bits.reserve(rows.size());
    for (std::size_t p = 0; p < rows.size(); ++p) {
        Bitset row(rows[p].size());
        for (std::size_t b = 0; b < rows[p].size(); ++b) {
            if (rows[p][b] == '1')
                row.set(b);
            else if (rows[p][b] != '0')
                throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(p) + " contains a non-binary character",
                            {p, b});
        }
        bits.push_back(std::move(row));
    }
    return SymmetricDesign(params, std::move(bits));
}

bool SymmetricDesign::is_plane() const noexcept {
    const auto k = params_.k;
    return params_.lambda == 1 && k >= 3 && params_.v == k * k - k + 1;
}

ValidationReport validate_design(const SymmetricDesign& d) {
    ValidationReport report;
    const auto [v, k, lambda] = d.params();
    if (v == 0) {
        report.add("empty", {}, "design has no points");
        return report;
    }
    if (lambda * (v - 1) != k * (k - 1))
        report.add("fisher", {v, k, lambda}, "lambda(v-1) != k(k-1)");

    for (std::size_t p = 0; p < v; ++p) {
        const auto n = d.blocks_through(p).count();
        if (n != k) report.add("row-sum", {p}, "point lies on " + std::to_string(n) + " blocks");
    }
    for (std::size_t b = 0; b < v; ++b) {
        const auto n = d.points_on(b).count();
        if (n != k) report.add("column-sum", {b}, "block has " + std::to_string(n) + " points");
    }
    for (std::size_t p = 0; p < v; ++p) {
        for (std::size_t r = p + 1; r < v; ++r) {
            const auto n = d.blocks_through(p).count_and(d.blocks_through(r));
            if (n != lambda) report.add("row-pair", {p, r}, "points share " + std::to_string(n) + " blocks");
        }
    }
    for (std::size_t b = 0; b < v; ++b) {
        for (std::size_t c = b + 1; c < v; ++c) {
            const auto n = d.points_on(b).count_and(d.points_on(c));
            if (n != lambda) report.add("column-pair", {b, c}, "blocks share " + std::to_string(n) + " points");
        }
    }
    return report;
}

SymmetricDesign build_pg2(std::size_t q) {
    const GaloisField field(q);
    using Triple = std::array<std::size_t, 3>;

    std::vector<Triple> normalized;
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            for (std::size_t c = 0; c < q; ++c) {
                const Triple t{a, b, c};
                std::size_t last = 3;
                for (std::size_t i = 3; i-- > 0;) {
                    if (t[i] != 0) {
                        last = i;
                        break;
                    }
                }
                if (last != 3 && t[last] == 1) normalized.push_back(t);
            }
        }
    }

    const std::size_t v = normalized.size();
    std::vector<Bitset> rows(v, Bitset(v));
    for (std::size_t p = 0; p < v; ++p) {
        const auto& x = normalized[p];
        for (std::size_t l = 0; l < v; ++l) {
            const auto& a = normalized[l];
            using E = GaloisField::Element;
            E dot = 0;
            for (std::size_t i = 0; i < 3; ++i)
                dot = field.add(dot, field.mul(static_cast<E>(a[i]), static_cast<E>(x[i])));
            if (dot == 0) rows[p].set(l);
        }
    }

    std::vector<std::string> point_labels, line_labels;
    for (const auto& t : normalized) {
        point_labels.push_back(coords('(', t, ')'));
        line_labels.push_back(coords('[', t, ']'));
    }
    return SymmetricDesign({v, q + 1, 1}, std::move(rows), std::move(point_labels), std::move(line_labels));
}

SymmetricDesign build_cyclic_design(std::size_t v, const std::vector<std::size_t>& base_block) {
    if (v < 2) throw Error(ErrorKind::InvalidDesign, "cyclic design needs v >= 2");
    Bitset base(v);
    for (auto d : base_block) base.set(d % v);
    const std::size_t k = base.count();
    if (k != base_block.size())
        throw Error(ErrorKind::InvalidDesign, "base block has repeated residues");
    if ((k * (k - 1)) % (v - 1) != 0)
        throw Error(ErrorKind::InvalidDesign, "k(k-1) is not divisible by v-1");
    const std::size_t lambda = k * (k - 1) / (v - 1);

    std::vector<Bitset> rows(v, Bitset(v));
    for (std::size_t j = 0; j < v; ++j)
        base.for_each([&](std::size_t d) { rows[(d + j) % v].set(j); });

    SymmetricDesign design({v, k, lambda}, std::move(rows));
    if (auto report = validate_design(design); !report.passed())
        throw Error(ErrorKind::InvalidDesign, "base block is not a difference set: " + report.summary());
    return design;
}

SymmetricDesign dual_design(const SymmetricDesign& d) {
    if (auto report = validate_design(d); !report.passed())
        throw Error(ErrorKind::InvalidDesign, report.summary());
    std::vector<Bitset> rows;
    rows.reserve(d.v());
    for (std::size_t b = 0; b < d.v(); ++b) rows.push_back(d.points_on(b));
    return SymmetricDesign(d.params(), std::move(rows), d.block_labels(), d.point_labels());
}

SymmetricDesign complement_design(const SymmetricDesign& d) {
    if (auto report = validate_design(d); !report.passed())
        throw Error(ErrorKind::InvalidDesign, report.summary());
    const auto [v, k, lambda] = d.params();
    if (v + lambda <= 2 * k)
        throw Error(ErrorKind::DegenerateComplement, "v - 2k + lambda <= 0", {v, k, lambda});
    std::vector<Bitset> rows;
    rows.reserve(v);
    for (std::size_t p = 0; p < v; ++p) {
        Bitset row = d.blocks_through(p);
        row.flip_all();
        rows.push_back(std::move(row));
    }
    return SymmetricDesign({v, v - k, v - 2 * k + lambda}, std::move(rows), d.point_labels(), d.block_labels());
}

}  // namespace incfree
