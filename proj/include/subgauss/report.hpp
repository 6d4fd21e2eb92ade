// report.hpp
//
// Bound comparison reports: JSON uses the shortest round-trip form for every
// double; CSV prints 17 significant digits. Absent values are JSON null and
// empty CSV cells.
#pragma once
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "subgauss/oracles/monte_carlo.hpp"
#include "subgauss/sum_bounds.hpp"

namespace subgauss {

inline constexpr const char* kToolVersion = "1.0.0";

struct BoundRow {
    double x{0.0};
    std::optional<double> exact_tail;
    std::optional<oracles::McEstimate> mc_estimate;
    double subgaussian_bound{1.0};
    std::optional<double> hoeffding_bound;
};

struct ReportMetadata {
    std::string probs_digest;
    std::size_t n_terms{0};
    std::string dependence;
    std::string bound_kind;
    double norm_bound{0.0};
    std::vector<std::uint64_t> seeds;
    double tol{1e-12};
    std::string rng_version{oracles::CounterRng::kVersion};
    std::string tool_version{kToolVersion};
};

struct BoundReport {
    ReportMetadata meta;
    std::vector<BoundRow> rows;

    // Rows whose exact tail exceeds the bound by more than slack.
    std::vector<std::size_t> violations(double slack = 1e-12) const {
        std::vector<std::size_t> bad;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].exact_tail && *rows[i].exact_tail > rows[i].subgaussian_bound + slack) {
                bad.push_back(i);
            }
        }
        return bad;
    }
};

// FNV-1a over "coef prob" lines at 17 significant digits, plus the dependence flag.
inline std::string sum_digest(const WeightedIndicatorSum& sum) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto feed = [&](const std::string& s) {
        for (unsigned char ch : s) {
            h ^= ch;
            h *= 0x100000001b3ULL;
        }
    };
    char buf[64];
    for (const auto& t : sum.terms()) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g\n", t.coef, t.prob.value());
        feed(buf);
    }
    feed(sum.independent() ? "independent" : "arbitrary");
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace oracles {

inline void to_json(nlohmann::json& j, const McEstimate& e) {
    j = {{"point", e.point},
         {"ci_low", e.ci_low},
         {"ci_high", e.ci_high},
         {"n_samples", e.n_samples},
         {"seed", e.seed}};
}

inline void from_json(const nlohmann::json& j, McEstimate& e) {
    j.at("point").get_to(e.point);
    j.at("ci_low").get_to(e.ci_low);
    j.at("ci_high").get_to(e.ci_high);
    j.at("n_samples").get_to(e.n_samples);
    j.at("seed").get_to(e.seed);
}

} // namespace oracles

namespace detail {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> optional_from(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

inline std::string fmt17(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

inline void to_json(nlohmann::json& j, const BoundRow& r) {
    j = {{"x", r.x},
         {"exact_tail", detail::optional_json(r.exact_tail)},
         {"mc_estimate", detail::optional_json(r.mc_estimate)},
         {"subgaussian_bound", r.subgaussian_bound},
         {"hoeffding_bound", detail::optional_json(r.hoeffding_bound)}};
}

inline void from_json(const nlohmann::json& j, BoundRow& r) {
    j.at("x").get_to(r.x);
    r.exact_tail = detail::optional_from<double>(j, "exact_tail");
    r.mc_estimate = detail::optional_from<oracles::McEstimate>(j, "mc_estimate");
    j.at("subgaussian_bound").get_to(r.subgaussian_bound);
    r.hoeffding_bound = detail::optional_from<double>(j, "hoeffding_bound");
}

inline void to_json(nlohmann::json& j, const ReportMetadata& m) {
    j = {{"probs_digest", m.probs_digest}, {"n_terms", m.n_terms},
         {"dependence", m.dependence},     {"bound_kind", m.bound_kind},
         {"norm_bound", m.norm_bound},     {"seeds", m.seeds},
         {"tol", m.tol},                   {"rng_version", m.rng_version},
         {"tool_version", m.tool_version}};
}

inline void from_json(const nlohmann::json& j, ReportMetadata& m) {
    j.at("probs_digest").get_to(m.probs_digest);
    j.at("n_terms").get_to(m.n_terms);
    j.at("dependence").get_to(m.dependence);
    j.at("bound_kind").get_to(m.bound_kind);
    j.at("norm_bound").get_to(m.norm_bound);
    j.at("seeds").get_to(m.seeds);
    j.at("tol").get_to(m.tol);
    j.at("rng_version").get_to(m.rng_version);
    j.at("tool_version").get_to(m.tool_version);
}

inline void to_json(nlohmann::json& j, const BoundReport& r) {
    j = {{"metadata", r.meta}, {"rows", r.rows}};
}

inline void from_json(const nlohmann::json& j, BoundReport& r) {
    j.at("metadata").get_to(r.meta);
    j.at("rows").get_to(r.rows);
}

inline void write_csv(std::ostream& os, const BoundReport& r) {
    os << "x,exact_tail,mc_point,mc_ci_low,mc_ci_high,subgaussian_bound,hoeffding_bound\n";
    for (const auto& row : r.rows) {
        os << detail::fmt17(row.x) << ',';
        if (row.exact_tail) os << detail::fmt17(*row.exact_tail);
        os << ',';
        if (row.mc_estimate) {
            os << detail::fmt17(row.mc_estimate->point) << ','
               << detail::fmt17(row.mc_estimate->ci_low) << ','
               << detail::fmt17(row.mc_estimate->ci_high);
        } else {
            os << ",,";
        }
        os << ',' << detail::fmt17(row.subgaussian_bound) << ',';
        if (row.hoeffding_bound) os << detail::fmt17(*row.hoeffding_bound);
        os << '\n';
    }
}

} // namespace subgauss
