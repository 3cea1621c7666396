#include "incfree/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "incfree/error.hpp"

namespace incfree {

namespace {

[[noreturn]] void parse_error(const std::string& what, std::size_t line_no) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what, {line_no});
}

std::size_t parse_index(const std::string& token, std::size_t line_no) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
        parse_error("expected a non-negative integer, got '" + token + "'", line_no);
    try {
        return static_cast<std::size_t>(std::stoull(token));
    } catch (const std::out_of_range&) {
        parse_error("integer out of range: " + token, line_no);
    }
}

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next line split on whitespace; nullopt at end of input.
    std::optional<std::vector<std::string>> next() {
        std::string line;
        if (!std::getline(in_, line)) return std::nullopt;
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::vector<std::string> tokens;
        for (std::string t; ss >> t;) tokens.push_back(t);
        return tokens;
    }

    std::vector<std::string> expect(const std::string& keyword, std::size_t min_args, std::size_t max_args) {
        auto tokens = next();
        if (!tokens || tokens->empty()) parse_error("expected '" + keyword + "'", line_no_ + 1);
        if ((*tokens)[0] != keyword) parse_error("expected '" + keyword + "', got '" + (*tokens)[0] + "'", line_no_);
        const auto n = tokens->size() - 1;
        if (n < min_args || n > max_args) parse_error("wrong number of fields after '" + keyword + "'", line_no_);
        tokens->erase(tokens->begin());
        return *tokens;
    }

    std::size_t line_no() const noexcept { return line_no_; }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
};

std::vector<std::size_t> parse_indices(const std::vector<std::string>& tokens, std::size_t line_no) {
    std::vector<std::size_t> out;
    for (const auto& t : tokens) out.push_back(parse_index(t, line_no));
    return out;
}

template <typename Pair>
std::vector<Pair> read_pairs(LineReader& reader, std::size_t count) {
    std::vector<Pair> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto tokens = reader.next();
        if (!tokens || tokens->size() != 2) parse_error("expected two indices", reader.line_no());
        out.push_back({parse_index((*tokens)[0], reader.line_no()), parse_index((*tokens)[1], reader.line_no())});
    }
    return out;
}

void join_indices(std::ostream& out, const char* keyword, const std::vector<std::size_t>& idx) {
    out << keyword;
    for (auto i : idx) out << ' ' << i;
    out << '\n';
}

ErrorKind kind_for(const std::string& violation) {
    if (violation == "design-hash" || violation == "design-size") return ErrorKind::DesignMismatch;
    if (violation == "pair-incidence") return ErrorKind::IncidenceFound;
    if (violation == "pair-size") return ErrorKind::NotEquinumerous;
    if (violation.rfind("pair", 0) == 0) return ErrorKind::OutOfRange;
    if (violation.rfind("matching", 0) == 0) return ErrorKind::NotPerfect;
    return ErrorKind::NotCovering;
}

}  // namespace

std::string design_to_string(const SymmetricDesign& d) {
    std::string out = std::to_string(d.v()) + ' ' + std::to_string(d.k()) + ' ' + std::to_string(d.lambda()) + '\n';
    for (std::size_t p = 0; p < d.v(); ++p) {
        for (std::size_t b = 0; b < d.v(); ++b) out += d.incident(p, b) ? '1' : '0';
        out += '\n';
    }
    return out;
}

void write_design(std::ostream& out, const SymmetricDesign& design) { out << design_to_string(design); }

SymmetricDesign read_design(std::istream& in, bool validate) {
    LineReader reader(in);
    auto header = reader.next();
    if (!header || header->size() != 3) parse_error("header must be 'v k lambda'", reader.line_no());
    const DesignParameters params{parse_index((*header)[0], 1), parse_index((*header)[1], 1),
                                  parse_index((*header)[2], 1)};
    std::vector<std::string> rows;
    for (std::size_t p = 0; p < params.v; ++p) {
        auto tokens = reader.next();
        if (!tokens || tokens->size() != 1) parse_error("expected an incidence row", reader.line_no());
        const auto& row = (*tokens)[0];
        if (row.size() != params.v)
            parse_error("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(params.v),
                        reader.line_no());
        if (row.find_first_not_of("01") != std::string::npos)
            parse_error("row contains characters other than 0 and 1", reader.line_no());
        rows.push_back(row);
    }
    while (auto extra = reader.next())
        if (!extra->empty()) parse_error("trailing content after incidence rows", reader.line_no());

    auto design = SymmetricDesign::from_strings(params, rows);
    if (validate) {
        if (auto report = validate_design(design); !report.passed())
            throw Error(ErrorKind::InvalidDesign, report.summary(), report.violations.front().witness);
    }
    return design;
}

std::string design_hash(const SymmetricDesign& design) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : design_to_string(design)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Certificate make_certificate(const SymmetricDesign& design, const PairCertificate& found) {
    Certificate c;
    c.design_hash = design_hash(design);
    c.v = design.v();
    c.pair = found.pair;
    c.mode = found.mode;
    c.upper_bound = found.upper_bound_used;
    c.nodes = found.nodes_explored;
    return c;
}

std::string certificate_to_string(const Certificate& c) {
    std::ostringstream out;
    out << "incfree-certificate 1\n";
    out << "design " << c.design_hash << '\n';
    out << "v " << c.v << '\n';
    out << "mode " << to_string(c.mode) << '\n';
    out << "size " << c.pair.size() << '\n';
    out << "upper-bound ";
    if (c.upper_bound)
        out << *c.upper_bound << '\n';
    else
        out << "none\n";
    out << "nodes " << c.nodes << '\n';
    join_indices(out, "X", c.pair.points);
    join_indices(out, "Y", c.pair.blocks);
    if (c.matching) {
        out << "matching " << c.matching->size() << '\n';
        for (const auto& e : *c.matching) out << e.point << ' ' << e.block << '\n';
    }
    if (c.coloring) {
        out << "coloring " << c.coloring->size() << '\n';
        for (const auto& a : *c.coloring) out << a.point << ' ' << a.line << '\n';
    }
    out << "end\n";
    return out.str();
}

void write_certificate(std::ostream& out, const Certificate& cert) { out << certificate_to_string(cert); }

Certificate read_certificate(std::istream& in) {
    LineReader reader(in);
    Certificate c;
    const auto magic = reader.expect("incfree-certificate", 1, 1);
    if (magic[0] != "1") parse_error("unsupported certificate version " + magic[0], reader.line_no());
    c.design_hash = reader.expect("design", 1, 1)[0];
    c.v = parse_index(reader.expect("v", 1, 1)[0], reader.line_no());
    const auto mode = reader.expect("mode", 1, 1)[0];
    if (mode == "exact")
        c.mode = SearchMode::Exact;
    else if (mode == "heuristic")
        c.mode = SearchMode::Heuristic;
    else
        parse_error("unknown mode '" + mode + "'", reader.line_no());
    const auto size = parse_index(reader.expect("size", 1, 1)[0], reader.line_no());
    const auto bound = reader.expect("upper-bound", 1, 1)[0];
    if (bound != "none") c.upper_bound = parse_index(bound, reader.line_no());
    c.nodes = parse_index(reader.expect("nodes", 1, 1)[0], reader.line_no());
    c.pair.points = parse_indices(reader.expect("X", 0, SIZE_MAX), reader.line_no());
    c.pair.blocks = parse_indices(reader.expect("Y", 0, SIZE_MAX), reader.line_no());
    if (c.pair.points.size() != size || c.pair.blocks.size() != size)
        parse_error("size field disagrees with X/Y", reader.line_no());

    for (;;) {
        auto tokens = reader.next();
        if (!tokens) parse_error("missing 'end'", reader.line_no() + 1);
        if (tokens->empty()) continue;
        const auto& key = (*tokens)[0];
        if (key == "end" && tokens->size() == 1) break;
        if (tokens->size() != 2) parse_error("malformed section header", reader.line_no());
        const auto count = parse_index((*tokens)[1], reader.line_no());
        if (key == "matching" && !c.matching)
            c.matching = read_pairs<Edge>(reader, count);
        else if (key == "coloring" && !c.coloring)
            c.coloring = read_pairs<Chamber>(reader, count);
        else
            parse_error("unexpected section '" + key + "'", reader.line_no());
    }
    while (auto extra = reader.next())
        if (!extra->empty()) parse_error("content after 'end'", reader.line_no());
    return c;
}

ValidationReport verify_certificate(const SymmetricDesign& design, const Certificate& c) {
    ValidationReport report;
    if (c.v != design.v()) {
        report.add("design-size", {c.v, design.v()});
        return report;
    }
    if (c.design_hash != design_hash(design)) {
        report.add("design-hash", {}, c.design_hash + " != " + design_hash(design));
        return report;
    }
    IncidenceFreePair pair;
    try {
        pair = check_pair(design, c.pair.points, c.pair.blocks);
    } catch (const Error& e) {
        const char* kind = e.kind() == ErrorKind::IncidenceFound ? "pair-incidence"
                           : e.kind() == ErrorKind::NotEquinumerous ? "pair-size"
                                                                     : "pair-index";
        report.add(kind, e.witness(), e.what());
        return report;
    }
    if (pair != c.pair) report.add("pair-order", {}, "X and Y must be sorted");

    if (c.matching) {
        const RemovedContext ctx(design, pair);
        const auto survivors = ctx.surviving_points().size();
        std::vector<bool> point_used(design.v(), false), block_used(design.v(), false);
        for (const auto& e : *c.matching) {
            if (e.point >= design.v() || e.block >= design.v()) {
                report.add("matching-range", {e.point, e.block});
                continue;
            }
            if (ctx.point_removed(e.point) || ctx.block_removed(e.block))
                report.add("matching-removed", {e.point, e.block}, "matched vertex belongs to the removed pair");
            if (!design.incident(e.point, e.block)) report.add("matching-non-incident", {e.point, e.block});
            if (point_used[e.point] || block_used[e.block]) report.add("matching-repeat", {e.point, e.block});
            point_used[e.point] = block_used[e.block] = true;
        }
        if (c.matching->size() != survivors)
            report.add("matching-size", {c.matching->size(), survivors}, "matching is not perfect");
    }

    if (c.coloring) {
        if (design.lambda() != 1) {
            report.add("coloring-design", {}, "colorings need a plane");
        } else {
            const auto coloring = assign_colors(design, *c.coloring);
            for (auto& v : verify_coloring(design, coloring).violations) report.violations.push_back(std::move(v));
            if (report.passed() && c.coloring->size() + pair.size() != design.v())
                report.add("coloring-count", {c.coloring->size(), pair.size()}, "anchors + |X| != v");
        }
    }
    return report;
}

Certificate load_certificate(std::istream& in, const SymmetricDesign& design) {
    auto cert = read_certificate(in);
    const auto report = verify_certificate(design, cert);
    if (!report.passed()) {
        const auto& v = report.violations.front();
        throw Error(kind_for(v.kind), report.summary(), v.witness);
    }
    return cert;
}

}  // namespace incfree
