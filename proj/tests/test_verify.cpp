#include <tensorlib/random.hpp>
#include <tensorlib/verify.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace tl;

TEST(Rng, ReproducibleAndBounded) {
    Rng a(5), b(5);
    for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next(), b.next());
    Rng r(6);
    std::set<std::int64_t> seen;
    for (int k = 0; k < 2000; ++k) {
        const auto x = r.uniform_int(-2, 2);
        ASSERT_GE(x, -2);
        ASSERT_LE(x, 2);
        seen.insert(x);
        const double y = r.uniform_real(-1, 1);
        ASSERT_GE(y, -1.0);
        ASSERT_LT(y, 1.0);
    }
    EXPECT_EQ(seen.size(), 5u);
}

TEST(Rng, LayoutsCoverAllPermutations) {
    Rng r(7);
    std::set<std::vector<std::size_t>> seen;
    for (int k = 0; k < 1000; ++k) seen.insert(r.layout(4).vec());
    EXPECT_EQ(seen.size(), 24u);
}

TEST(RandomOperand, ViewsHaveRequestedExtents) {
    Rng r(8);
    int views = 0;
    for (int k = 0; k < 200; ++k) {
        const auto ext = r.extents(3, 4);
        auto op = random_operand<double>(r, ext);
        views += op.is_view();
        op.visit([&](const auto& s) {
            EXPECT_TRUE(std::ranges::equal(s.extents(), ext));
        });
    }
    EXPECT_GT(views, 50);
    EXPECT_LT(views, 150);
}

TEST(Verify, AllFamiliesPass) {
    VerifyConfig cfg;
    cfg.trials = 50;
    const auto report = run_verification(cfg);
    EXPECT_TRUE(report.ok()) << report.text();
    EXPECT_GE(verify_family_names().size(), 10u);
    EXPECT_EQ(report.families.size(), 2 * verify_family_names().size());
}

TEST(Verify, DeterministicReports) {
    VerifyConfig cfg;
    cfg.trials = 5;
    cfg.seed = 1234;
    EXPECT_EQ(run_verification(cfg).text(), run_verification(cfg).text());
}

TEST(Verify, SingleTrialAndSingleKind) {
    VerifyConfig cfg;
    cfg.trials = 1;
    cfg.kinds = {ScalarKind::float64};
    cfg.max_order = 1;
    cfg.max_extent = 1;
    const auto report = run_verification(cfg);
    EXPECT_TRUE(report.ok()) << report.text();
    for (const auto& f : report.families) EXPECT_EQ(f.passed, 1u);
}

TEST(Verify, InjectedFaultIsCaughtWithCounterexample) {
    VerifyConfig cfg;
    cfg.trials = 3;
    cfg.inject_fault = true;
    const auto report = run_verification(cfg);
    EXPECT_FALSE(report.ok());
    std::size_t failing = 0;
    for (const auto& f : report.families) {
        if (f.failed == 0) continue;
        ++failing;
        EXPECT_EQ(f.name, "ttv");
        ASSERT_TRUE(f.counterexample.has_value());
        EXPECT_TRUE(f.counterexample->contains("a"));
        EXPECT_TRUE(f.counterexample->at("a").contains("tensor"));
    }
    EXPECT_EQ(failing, 2u);
    EXPECT_NE(report.text().find("counterexample"), std::string::npos);
    EXPECT_FALSE(report.to_json().at("ok").get<bool>());
}

TEST(Verify, ConfigValidation) {
    VerifyConfig cfg;
    cfg.trials = 0;
    EXPECT_THROW(run_verification(cfg), argument_error);
    cfg.trials = 1;
    cfg.max_order = 7;
    EXPECT_THROW(run_verification(cfg), argument_error);
    cfg.max_order = 3;
    cfg.max_extent = 0;
    EXPECT_THROW(run_verification(cfg), argument_error);
}
