#include <tensorlib/hopm.hpp>
#include <tensorlib/random.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace tl;

namespace {

Tensor<double> unit(std::vector<double> v) {
    double n = 0;
    for (double x : v) n += x * x;
    for (double& x : v) x /= std::sqrt(n);
    const auto len = v.size();
    return make_tensor<double>(Shape{len}, std::move(v));
}

} // namespace

TEST(RankOne, ComposeBasis) {
    std::vector<Tensor<double>> e{make_tensor<double>(Shape{2}, {1, 0}), make_tensor<double>(Shape{3}, {1, 0, 0})};
    const auto b = rank_one_compose(1.0, std::span<const Tensor<double>>(e));
    EXPECT_EQ(b.shape(), (Shape{2, 3}));
    EXPECT_EQ(b(0, 0), 1.0);
    double sum = 0;
    for (double x : b.data()) sum += x;
    EXPECT_EQ(sum, 1.0);
}

TEST(RankOne, ResidualOfZeroLambdaIsNorm) {
    Rng rng(1);
    auto a = random_tensor<double>(rng, {2, 3, 2});
    auto u = default_initial_vectors(a);
    EXPECT_NEAR(rank_one_residual(a, 0.0, std::span<const Tensor<double>>(u)), frobenius_norm(a), 1e-15);
}

TEST(Hopm, RecoversExactRankOne) {
    std::vector<Tensor<double>> f{unit({1, 2}), unit({1, -1, 3}), unit({2, 1, 1, 1})};
    const auto a = rank_one_compose(3.0, std::span<const Tensor<double>>(f));
    const auto state = hopm(a);
    EXPECT_TRUE(state.converged);
    EXPECT_NEAR(state.lambda(), 3.0, 1e-10);
    EXPECT_LT(residual(a, state), 1e-10);
    for (std::size_t r = 0; r < 3; ++r) {
        const double d = inner_product(state.u[r], f[r]);
        EXPECT_NEAR(std::abs(d), 1.0, 1e-10) << "mode " << r + 1;
    }
}

TEST(Hopm, ZeroTensorIsDegenerate) {
    Tensor<double> a(Shape{2, 3});
    try {
        hopm(a);
        FAIL() << "expected degenerate_error";
    } catch (const degenerate_error& e) {
        EXPECT_EQ(e.sweep(), 1u);
        EXPECT_EQ(e.mode(), 1u);
    }
}

TEST(Hopm, InitialVectorValidation) {
    Tensor<double> a(Shape{2, 3});
    a.fill(1.0);
    EXPECT_THROW(hopm(a, {unit({1, 1})}), argument_error);
    EXPECT_THROW(hopm(a, {unit({1, 1}), unit({1, 1})}), argument_error);
    EXPECT_THROW(hopm(a, {make_tensor<double>(Shape{2}, {0, 0}), unit({1, 1, 1})}), degenerate_error);
    EXPECT_THROW(hopm(a, HopmOptions{0, 1e-10}), argument_error);
}

TEST(Hopm, SingleSweepNeverConverges) {
    Rng rng(4);
    auto a = random_tensor<double>(rng, {3, 3, 3});
    const auto state = hopm(a, HopmOptions{1, 1e-10});
    EXPECT_EQ(state.sweeps, 1u);
    EXPECT_FALSE(state.converged);
    EXPECT_EQ(state.lambda_history.size(), 1u);
}

TEST(Hopm, ResidualNonIncreasingOnRandomInput) {
    Rng rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_tensor<double>(rng, rng.extents(3, 4, 2));
        const auto state = hopm(a, HopmOptions{30, 1e-12});
        for (std::size_t k = 1; k < state.residual_history.size(); ++k)
            EXPECT_LE(state.residual_history[k], state.residual_history[k - 1] + 1e-10);
        for (const auto& u : state.u) EXPECT_NEAR(frobenius_norm(u), 1.0, 1e-12);
    }
}

TEST(Hopm, OrderOne) {
    auto a = make_tensor<double>(Shape{2}, {3, 4});
    const auto state = hopm(a);
    EXPECT_NEAR(state.lambda(), 5.0, 1e-12);
    EXPECT_TRUE(state.converged);
}
