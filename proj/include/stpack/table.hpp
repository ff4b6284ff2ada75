#pragma once

#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cartesian_packer.hpp"
#include "generators.hpp"
#include "lex_packer.hpp"
#include "oracle.hpp"
#include "products.hpp"
#include "proposition.hpp"
#include "verifier.hpp"

namespace stpack {

enum class TableShape { cartesian, lexicographic, single };

enum class Tightness { expected_tight, expected_loose, unspecified };

/// One comparison: a graph (a product of two families, or a single family),
/// its published closed-form packing number if any, and whether the
/// construction bound is expected to reach the true value.
struct TableEntry {
    std::string source;
    TableShape shape = TableShape::cartesian;
    FamilySpec g;
    FamilySpec h;
    std::optional<std::size_t> closed_form;
    Tightness tightness = Tightness::unspecified;
    std::string note;

    std::string label() const {
        switch (shape) {
        case TableShape::cartesian:
            return to_string(g) + " □ " + to_string(h);
        case TableShape::lexicographic:
            return to_string(g) + " ∘ " + to_string(h);
        case TableShape::single:
            return to_string(g);
        }
        return {};
    }
};

struct TableRow {
    TableEntry entry;
    std::size_t order = 0;
    std::size_t size = 0;
    std::optional<std::size_t> sigma_g, sigma_h;
    std::optional<std::size_t> bound;       ///< construction guarantee
    std::optional<std::size_t> constructed; ///< trees the construction produced
    std::size_t oracle = 0;
    bool verified = false;

    std::optional<bool> matches_closed_form() const {
        if (!entry.closed_form)
            return std::nullopt;
        return *entry.closed_form == oracle;
    }

    std::optional<bool> tight() const {
        if (!bound)
            return std::nullopt;
        return *bound == oracle;
    }

    /// Every expectation recorded in the entry holds.
    std::vector<std::string> problems() const {
        std::vector<std::string> out;
        if (!verified)
            out.push_back("verification failed");
        if (bound && constructed && *bound != *constructed)
            out.push_back("construction produced " + std::to_string(*constructed) + " trees, bound is " +
                          std::to_string(*bound));
        if (auto m = matches_closed_form(); m && !*m)
            out.push_back("oracle " + std::to_string(oracle) + " != closed form " +
                          std::to_string(*entry.closed_form));
        if (auto t = tight(); t && entry.tightness != Tightness::unspecified &&
                              *t != (entry.tightness == Tightness::expected_tight))
            out.push_back(std::string("bound expected ") +
                          (entry.tightness == Tightness::expected_tight ? "tight" : "below oracle") + " but is " +
                          (*t ? "tight" : "below oracle"));
        return out;
    }
};

inline std::vector<TableEntry> default_table_entries() {
    using F = FamilySpec;
    using R = PropositionRow;
    const auto cf = [](R row, std::vector<std::size_t> p) { return std::optional<std::size_t>(closed_form(row, p)); };
    const auto cart = TableShape::cartesian;
    const auto lex = TableShape::lexicographic;
    const auto tight = Tightness::expected_tight;
    const auto loose = Tightness::expected_loose;
    std::vector<TableEntry> rows;
    for (std::size_t n : {3, 4, 5})
        rows.push_back({"path grid", cart, F::path(n), F::path(n), 1, tight, ""});
    for (std::size_t m : {3, 4, 5})
        rows.push_back({"Kn x Cm", cart, F::complete(4), F::cycle(m), cf(R::one, {4, m}), tight, ""});
    rows.push_back({"Kn x Cm", cart, F::complete(5), F::cycle(4), cf(R::one, {5, 4}), loose,
                    "bound-not-tight: construction certifies only k+l-1"});
    rows.push_back({"Kn x Km", cart, F::complete(4), F::complete(4), cf(R::two, {4, 4}), tight, ""});
    rows.push_back({"Kn x Km", cart, F::complete(4), F::complete(6), cf(R::two, {4, 6}), tight, ""});
    rows.push_back({"hypercube", cart, F::hypercube(3), F::path(2), cf(R::three, {4}), loose,
                    "Q4; tight only for odd dimension"});
    rows.push_back({"hypercube", cart, F::hypercube(4), F::path(2), cf(R::three, {5}), tight, "Q5 = Q4 □ P2"});
    rows.push_back({"Kn(m) x Kr", cart, F::multipartite(2, 2), F::complete(3), cf(R::four, {2, 2, 3}), loose, ""});
    rows.push_back({"Kn(m)", TableShape::single, F::multipartite(3, 2), {}, cf(R::seven, {3, 2}),
                    Tightness::unspecified, ""});
    rows.push_back({"lex balanced", lex, F::complete(2), F::complete(2), 2, tight, ""});
    rows.push_back({"lex h_rich", lex, F::path(3), F::complete(4), 4, tight, ""});
    rows.push_back({"lex g_rich", lex, F::complete(5), F::path(3), std::nullopt, Tightness::unspecified, ""});
    rows.push_back({"lex K4-", lex, F::complete_minus_edge(4), F::path(3), std::nullopt, Tightness::unspecified,
                    "sigma(K4-) is 1, not 2"});
    return rows;
}

inline TableRow evaluate(const TableEntry &entry) {
    TableRow row;
    row.entry = entry;
    if (entry.shape == TableShape::single) {
        const Graph g = generate(entry.g);
        const auto result = max_packing(g);
        row.order = g.order();
        row.size = g.size();
        row.oracle = result.sigma;
        row.verified = verify_packing(g, result.packing).ok() && result.certificate.bound == result.sigma;
        return row;
    }
    const Graph g = generate(entry.g);
    const Graph h = generate(entry.h);
    const TreePacking pack_g = factor_packing(g);
    const TreePacking pack_h = factor_packing(h);
    row.sigma_g = pack_g.count();
    row.sigma_h = pack_h.count();

    const bool cart = entry.shape == TableShape::cartesian;
    const ProductGraph p = cart ? cartesian(g, h) : lexicographic(g, h);
    row.order = p.graph().order();
    row.size = p.graph().size();
    row.bound = cart ? cartesian_bound(*row.sigma_g, *row.sigma_h)
                     : lex_bound(*row.sigma_g, *row.sigma_h, g.order(), h.order()).value;
    const TreePacking built = cart ? pack_cartesian(p, pack_g, pack_h) : pack_lex(p, pack_g, pack_h);
    row.constructed = built.count();
    const auto result = max_packing(p.graph());
    row.oracle = result.sigma;
    row.verified = verify_packing(p.graph(), built).ok() && verify_packing(p.graph(), result.packing).ok() &&
                   result.certificate.bound == result.sigma;
    return row;
}

struct TableReport {
    std::vector<TableRow> rows;

    bool verified() const {
        for (const auto &r : rows)
            if (!r.verified)
                return false;
        return true;
    }

    bool strict_ok() const {
        for (const auto &r : rows)
            if (!r.problems().empty())
                return false;
        return true;
    }
};

inline TableReport build_table(const std::vector<TableEntry> &entries = default_table_entries()) {
    TableReport report;
    for (const auto &e : entries)
        report.rows.push_back(evaluate(e));
    return report;
}

inline std::string render_text(const TableReport &report) {
    auto opt = [](const std::optional<std::size_t> &v) { return v ? std::to_string(*v) : std::string("-"); };
    auto flag = [](const std::optional<bool> &v, const char *yes, const char *no) {
        return v ? std::string(*v ? yes : no) : std::string("-");
    };
    std::ostringstream out;
    out << std::left << std::setw(14) << "source" << std::setw(18) << "graph" << std::setw(8) << "closed"
        << std::setw(7) << "bound" << std::setw(8) << "oracle" << std::setw(7) << "match" << std::setw(10) << "bound?"
        << std::setw(9) << "verified" << "note\n";
    for (const auto &r : report.rows) {
        auto label = r.entry.label();
        // The product symbols are multi-byte; pad by code points.
        std::size_t glyphs = 0;
        for (unsigned char c : label)
            glyphs += (c & 0xC0) != 0x80;
        out << std::setw(14) << r.entry.source << label << std::string(glyphs < 18 ? 18 - glyphs : 1, ' ')
            << std::setw(8) << opt(r.entry.closed_form) << std::setw(7) << opt(r.bound) << std::setw(8) << r.oracle
            << std::setw(7) << flag(r.matches_closed_form(), "yes", "NO") << std::setw(10)
            << flag(r.tight(), "tight", "below") << std::setw(9) << (r.verified ? "yes" : "NO") << r.entry.note
            << '\n';
    }
    return out.str();
}

} // namespace stpack
