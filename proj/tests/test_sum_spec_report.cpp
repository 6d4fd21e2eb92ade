#include <gtest/gtest.h>

#include <cstring>
#include <random>
#include <sstream>

#include "subgauss/report.hpp"
#include "subgauss/sum_spec.hpp"

using namespace subgauss;

TEST(SumSpec, ParsesTermsCommentsAndHeader) {
    const auto s = parse_sum_spec(
        "# comment line\n"
        "independent: false\n"
        "  2 0.1   # trailing comment\n"
        "\n"
        "-3 0.9\n");
    EXPECT_EQ(s.size(), 2u);
    EXPECT_FALSE(s.independent());
    EXPECT_EQ(s.terms()[1].coef, -3.0);
    EXPECT_EQ(s.terms()[1].prob.value(), 0.9);
    EXPECT_TRUE(parse_sum_spec("1 0.5\n").independent());
    EXPECT_TRUE(parse_sum_spec("independent: true\n1 0.5\n").independent());
}

TEST(SumSpec, Errors) {
    EXPECT_THROW(parse_sum_spec(""), ParseError);
    EXPECT_THROW(parse_sum_spec("# nothing\n"), ParseError);
    EXPECT_THROW(parse_sum_spec("1\n"), ParseError);
    EXPECT_THROW(parse_sum_spec("1 0.5 7\n"), ParseError);
    EXPECT_THROW(parse_sum_spec("1 1.5\n"), ParseError);
    EXPECT_THROW(parse_sum_spec("x 0.5\n"), ParseError);
    EXPECT_THROW(parse_sum_spec("independent: maybe\n1 0.5\n"), ParseError);
    EXPECT_THROW(parse_sum_spec("independent: true\nindependent: false\n1 0.5\n"), ParseError);
    EXPECT_THROW(parse_sum_spec("inf 0.5\n"), ParseError);
}

TEST(Grid, Forms) {
    EXPECT_EQ(parse_grid("0:1:5"), (std::vector<double>{0, 0.25, 0.5, 0.75, 1}));
    EXPECT_EQ(parse_grid("0.3"), (std::vector<double>{0.3}));
    EXPECT_EQ(parse_grid("1,2.5, 4"), (std::vector<double>{1, 2.5, 4}));
    EXPECT_EQ(parse_grid("0.01:0.99:99").size(), 99u);
    EXPECT_EQ(parse_grid("0.01:0.99:99").back(), 0.99);
    EXPECT_THROW(parse_grid("0:1"), ParseError);
    EXPECT_THROW(parse_grid("0:1:0"), ParseError);
    EXPECT_THROW(parse_grid("0:1:2.5"), ParseError);
    EXPECT_THROW(parse_grid("a,b"), ParseError);
}

namespace {

BoundReport sample_report() {
    BoundReport r;
    const auto s = parse_sum_spec("1 0.1\n2 0.3\n");
    r.meta.probs_digest = sum_digest(s);
    r.meta.n_terms = 2;
    r.meta.dependence = "independent";
    r.meta.bound_kind = "quadratic_independent";
    r.meta.norm_bound = 0.6919245263314543;
    r.meta.seeds = {7, 18446744073709551615ULL};
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 20; ++i) {
        BoundRow row;
        row.x = u(rng) * 3;
        if (i % 2) row.exact_tail = u(rng) * 1e-7;
        if (i % 3) row.mc_estimate = oracles::McEstimate{u(rng), u(rng) / 3, 0.9 + u(rng) / 10, 100000, 7};
        row.subgaussian_bound = std::exp(-row.x * row.x / 0.7);
        if (i % 4) row.hoeffding_bound = u(rng) / 3.0;
        r.rows.push_back(row);
    }
    r.rows.push_back({5e-324, 1e-300, std::nullopt, 1.0 / 3.0, 0.1});
    return r;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST(Report, JsonRoundTripIsBitExact) {
    const auto r = sample_report();
    const std::string text = nlohmann::json(r).dump(2);
    const auto back = nlohmann::json::parse(text).get<BoundReport>();
    ASSERT_EQ(back.rows.size(), r.rows.size());
    EXPECT_EQ(back.meta.probs_digest, r.meta.probs_digest);
    EXPECT_EQ(back.meta.seeds, r.meta.seeds);
    EXPECT_TRUE(same_bits(back.meta.norm_bound, r.meta.norm_bound));
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        const auto& a = r.rows[i];
        const auto& b = back.rows[i];
        EXPECT_TRUE(same_bits(a.x, b.x));
        EXPECT_TRUE(same_bits(a.subgaussian_bound, b.subgaussian_bound));
        ASSERT_EQ(a.exact_tail.has_value(), b.exact_tail.has_value());
        if (a.exact_tail) EXPECT_TRUE(same_bits(*a.exact_tail, *b.exact_tail));
        ASSERT_EQ(a.hoeffding_bound.has_value(), b.hoeffding_bound.has_value());
        if (a.hoeffding_bound) EXPECT_TRUE(same_bits(*a.hoeffding_bound, *b.hoeffding_bound));
        ASSERT_EQ(a.mc_estimate.has_value(), b.mc_estimate.has_value());
        if (a.mc_estimate) {
            EXPECT_TRUE(same_bits(a.mc_estimate->point, b.mc_estimate->point));
            EXPECT_TRUE(same_bits(a.mc_estimate->ci_high, b.mc_estimate->ci_high));
            EXPECT_EQ(a.mc_estimate->seed, b.mc_estimate->seed);
        }
    }
    // re-serialising gives identical text
    EXPECT_EQ(nlohmann::json(back).dump(2), text);
}

TEST(Report, CsvLayout) {
    BoundReport r;
    r.rows.push_back({1.0, 0.0625, std::nullopt, 0.60653065971263342, std::nullopt});
    std::ostringstream os;
    write_csv(os, r);
    EXPECT_EQ(os.str(),
              "x,exact_tail,mc_point,mc_ci_low,mc_ci_high,subgaussian_bound,hoeffding_bound\n"
              "1,0.0625,,,,0.60653065971263342,\n");
}

TEST(Report, ViolationsAndDigest) {
    BoundReport r;
    r.rows.push_back({1.0, 0.5, std::nullopt, 0.5 - 1e-13, std::nullopt});
    r.rows.push_back({2.0, 0.5, std::nullopt, 0.4, std::nullopt});
    r.rows.push_back({3.0, std::nullopt, std::nullopt, 0.0, std::nullopt});
    EXPECT_EQ(r.violations(), (std::vector<std::size_t>{1}));
    const auto a = parse_sum_spec("1 0.5\n1 0.5\n");
    const auto b = parse_sum_spec("independent: false\n1 0.5\n1 0.5\n");
    EXPECT_NE(sum_digest(a), sum_digest(b));
    EXPECT_EQ(sum_digest(a), sum_digest(parse_sum_spec("1 0.50\n1 .5\n")));
    EXPECT_EQ(sum_digest(a).rfind("fnv1a64:", 0), 0u);
}
