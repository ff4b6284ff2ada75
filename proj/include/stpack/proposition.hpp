#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "products.hpp"
#include "verifier.hpp"

namespace stpack {

/// Known closed forms for the packing number of product families.
///   1: K_n □ C_m           floor((n+1)/2)            params n, m
///   2: K_n □ K_m, n <= m   floor((n+m-2)/2)          params n, m
///   3: Q_n                 floor(n/2)                params n
///   4: K_{n(m)} □ K_r      floor((nm-m+r-1)/2)       params n, m, r
///   5: K_{n(m)} □ C_r      floor((nm-m+2)/2)         params n, m, r
///   6: K_{n(m)} □ K_{r(t)} floor((m(n-1)+(r-1)t)/2)  params n, m, r, t
///   7: K_{n(m)}            floor(m(n-1)/2)           params n, m
enum class PropositionRow { one = 1, two, three, four, five, six, seven };

inline constexpr std::size_t desk_scale_vertices = 64;

namespace detail {

inline std::size_t row_arity(PropositionRow row) {
    switch (row) {
    case PropositionRow::three:
        return 1;
    case PropositionRow::one:
    case PropositionRow::two:
    case PropositionRow::seven:
        return 2;
    case PropositionRow::four:
    case PropositionRow::five:
        return 3;
    case PropositionRow::six:
        return 4;
    }
    return 0;
}

inline void check_row_params(PropositionRow row, const std::vector<std::size_t> &p) {
    const auto id = std::to_string(static_cast<int>(row));
    if (p.size() != row_arity(row))
        throw parameter_error("row " + id + " takes " + std::to_string(row_arity(row)) + " parameters");
    if (row == PropositionRow::two && !(2 <= p[0] && p[0] <= p[1]))
        throw parameter_error("row 2 requires 2 <= n <= m");
    if (row == PropositionRow::three && p[0] < 2)
        throw parameter_error("row 3 requires n >= 2");
}

} // namespace detail

inline std::size_t closed_form(PropositionRow row, const std::vector<std::size_t> &p) {
    detail::check_row_params(row, p);
    switch (row) {
    case PropositionRow::one:
        return (p[0] + 1) / 2;
    case PropositionRow::two:
        return (p[0] + p[1] - 2) / 2;
    case PropositionRow::three:
        return p[0] / 2;
    case PropositionRow::four:
        return (p[0] * p[1] - p[1] + p[2] - 1) / 2;
    case PropositionRow::five:
        return (p[0] * p[1] - p[1] + 2) / 2;
    case PropositionRow::six:
        return (p[1] * (p[0] - 1) + (p[2] - 1) * p[3]) / 2;
    case PropositionRow::seven:
        return p[1] * (p[0] - 1) / 2;
    }
    return 0;
}

inline Graph instantiate(PropositionRow row, const std::vector<std::size_t> &p) {
    detail::check_row_params(row, p);
    switch (row) {
    case PropositionRow::one:
        return cartesian(generate(FamilySpec::complete(p[0])), generate(FamilySpec::cycle(p[1]))).graph();
    case PropositionRow::two:
        return cartesian(generate(FamilySpec::complete(p[0])), generate(FamilySpec::complete(p[1]))).graph();
    case PropositionRow::three:
        return generate(FamilySpec::hypercube(p[0]));
    case PropositionRow::four:
        return cartesian(generate(FamilySpec::multipartite(p[0], p[1])), generate(FamilySpec::complete(p[2])))
            .graph();
    case PropositionRow::five:
        return cartesian(generate(FamilySpec::multipartite(p[0], p[1])), generate(FamilySpec::cycle(p[2]))).graph();
    case PropositionRow::six:
        return cartesian(generate(FamilySpec::multipartite(p[0], p[1])),
                         generate(FamilySpec::multipartite(p[2], p[3])))
            .graph();
    case PropositionRow::seven:
        return generate(FamilySpec::multipartite(p[0], p[1]));
    }
    throw parameter_error("unknown row");
}

inline std::size_t instance_order(PropositionRow row, const std::vector<std::size_t> &p) {
    detail::check_row_params(row, p);
    switch (row) {
    case PropositionRow::one:
    case PropositionRow::two:
        return p[0] * p[1];
    case PropositionRow::three:
        return p[0] >= 7 ? desk_scale_vertices + 1 : std::size_t{1} << p[0];
    case PropositionRow::four:
    case PropositionRow::five:
        return p[0] * p[1] * p[2];
    case PropositionRow::six:
        return p[0] * p[1] * p[2] * p[3];
    case PropositionRow::seven:
        return p[0] * p[1];
    }
    return 0;
}

/// Oracle value on the instantiated graph equals the row's closed form.
inline VerificationReport verify_proposition_row(PropositionRow row, const std::vector<std::size_t> &params) {
    if (instance_order(row, params) > desk_scale_vertices)
        throw parameter_error("row instance exceeds " + std::to_string(desk_scale_vertices) + " vertices");
    std::string subject = "row (" + std::to_string(static_cast<int>(row)) + ") with";
    for (auto v : params)
        subject += " " + std::to_string(v);
    VerificationReport report{subject, {}};
    const Graph g = instantiate(row, params);
    const auto expected = closed_form(row, params);
    const auto oracle = max_packing(g);
    report.add("closed-form", oracle.sigma == expected,
               "oracle sigma " + std::to_string(oracle.sigma) + " != closed form " + std::to_string(expected));
    report.absorb(verify_packing(g, oracle.packing), "oracle-witness.");
    report.add("certificate", oracle.certificate.bound == oracle.sigma,
               "certificate bound " + std::to_string(oracle.certificate.bound));
    return report;
}

} // namespace stpack
