#include <tensorlib/contraction.hpp>
#include <tensorlib/oracle.hpp>
#include <tensorlib/random.hpp>
#include <tensorlib/tensor.hpp>
#include <tensorlib/tensor_view.hpp>

#include <gtest/gtest.h>

#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

using namespace tl;
using i64 = std::int64_t;

namespace {

Tensor<i64> ones(Shape n, Layout pi) {
    Tensor<i64> t(std::move(n), std::move(pi));
    t.fill(1);
    return t;
}

Tensor<i64> identity(std::size_t n) {
    Tensor<i64> t(Shape{n, n});
    for (std::size_t i = 0; i < n; ++i) t(i, i) = 1;
    return t;
}

template <class T>
void expect_matches(const Tensor<T>& got, const oracle::Flat<T>& want) {
    const auto flat = oracle::flatten(got);
    EXPECT_EQ(flat.extents, want.extents);
    EXPECT_EQ(flat.values, want.values);
}

} // namespace

TEST(Transpose, Matrix) {
    auto a = make_tensor<i64>(Shape{2, 3}, {1, 2, 3, 4, 5, 6});
    const auto c = transpose(a, {2, 1});
    EXPECT_EQ(c.shape(), (Shape{3, 2}));
    for (index_t i = 0; i < 3; ++i)
        for (index_t j = 0; j < 2; ++j) EXPECT_EQ(c(i, j), a(j, i));
}

TEST(Transpose, IdentityAndRandom) {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_tensor<i64>(rng, rng.extents(4, 3));
        EXPECT_TRUE(tensors_equal(transpose(a, {1, 2, 3, 4}), a));
        const auto tau = rng.layout(4).vec();
        expect_matches(transpose(a, tau), oracle::transpose(oracle::flatten(a), std::span<const std::size_t>(tau)));
    }
}

TEST(Transpose, RejectsBadPermutation) {
    Tensor<i64> a(Shape{2, 2});
    EXPECT_THROW(transpose(a, {1, 1}), argument_error);
    EXPECT_THROW(transpose(a, {1}), argument_error);
}

TEST(Ttv, IdentityRowSums) {
    auto b = make_tensor<i64>(Shape{2}, {1, 1});
    const auto c = ttv(identity(2), b, 2);
    EXPECT_EQ(c.shape(), Shape{2});
    EXPECT_EQ(c(0), 1);
    EXPECT_EQ(c(1), 1);
}

TEST(Ttv, Counting) {
    auto a = ones(Shape{2, 3, 2}, Layout{3, 1, 2});
    auto b = ones(Shape{3}, Layout{1});
    const auto c = ttv(a, b, 2);
    EXPECT_EQ(c.shape(), (Shape{2, 2}));
    EXPECT_TRUE(std::ranges::all_of(c.data(), [](i64 x) { return x == 3; }));
}

TEST(Ttv, RandomModesAndLayouts) {
    Rng rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_tensor<i64>(rng, {3, 4, 2});
        const auto m = static_cast<std::size_t>(rng.uniform_int(1, 3));
        auto b = random_tensor<i64>(rng, {a.extents()[m - 1]});
        expect_matches(ttv(a, b, m), oracle::ttv(oracle::flatten(a), oracle::flatten(b), m));
    }
}

TEST(Ttv, VectorShapesAndErrors) {
    auto a = make_tensor<i64>(Shape{2, 3}, {1, 2, 3, 4, 5, 6});
    auto col = make_tensor<i64>(Shape{3, 1}, {1, 0, 2});
    auto row = make_tensor<i64>(Shape{1, 3}, {1, 0, 2});
    EXPECT_TRUE(tensors_equal(ttv(a, col, 2), ttv(a, row, 2)));
    EXPECT_THROW(ttv(a, col, 1), argument_error);
    EXPECT_THROW(ttv(a, col, 3), argument_error);
    EXPECT_THROW(ttv(a, a, 2), argument_error);
}

TEST(Ttv, OrderOneGivesScalar) {
    auto a = make_tensor<i64>(Shape{3}, {1, 2, 3});
    const auto c = ttv(a, a, 1);
    EXPECT_EQ(c.shape(), Shape{1});
    EXPECT_EQ(scalar(c), 14);
}

TEST(Ttm, IdentityAndRandom) {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto a = random_tensor<i64>(rng, {3, 4, 2});
        const auto m = static_cast<std::size_t>(rng.uniform_int(1, 3));
        EXPECT_TRUE(tensors_equal(ttm(a, identity(a.extents()[m - 1]), m), a));
    }
    auto a = random_tensor<i64>(rng, {3, 4, 2});
    auto b = random_tensor<i64>(rng, {5, 4});
    const auto c = ttm(a, b, 2);
    EXPECT_EQ(c.shape(), (Shape{3, 5, 2}));
    expect_matches(c, oracle::ttm(oracle::flatten(a), oracle::flatten(b), 2));
    EXPECT_THROW(ttm(a, b, 1), argument_error);
}

TEST(Ttt, OuterOfVectors) {
    auto u = make_tensor<i64>(Shape{2}, {2, 3});
    auto v = make_tensor<i64>(Shape{3}, {1, 10, 100});
    const auto c = ttt(u, v, ContractionSpec{0, 1, 1, {1}, {1}});
    EXPECT_EQ(c.shape(), (Shape{2, 3}));
    for (index_t i = 0; i < 2; ++i)
        for (index_t j = 0; j < 3; ++j) EXPECT_EQ(c(i, j), u(i) * v(j));
    EXPECT_TRUE(tensors_equal(c, outer_product(u, v)));
}

TEST(Ttt, InnerOfOnes) {
    auto a = ones(Shape{2, 2, 2}, Layout{1, 2, 3});
    auto b = ones(Shape{2, 2, 2}, Layout{2, 3, 1});
    const auto c = ttt(a, b, ContractionSpec{3, 0, 0, {1, 2, 3}, {1, 2, 3}});
    EXPECT_EQ(c.shape(), Shape{1});
    EXPECT_EQ(scalar(c), 8);
    EXPECT_EQ(inner_product(a, b), 8);
}

TEST(Ttt, TwoContractedPairs) {
    Rng rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = random_tensor<i64>(rng, {3, 4, 2});
        auto b = random_tensor<i64>(rng, {4, 3, 5});
        // contract A dims (1,2) with B dims (2,1)
        const ContractionSpec spec{2, 1, 1, {3, 1, 2}, {3, 2, 1}};
        const auto c = ttt(a, b, spec);
        EXPECT_EQ(c.shape(), (Shape{2, 5}));
        expect_matches(c, oracle::ttt(oracle::flatten(a), oracle::flatten(b), spec));
    }
}

TEST(Ttt, SpecValidation) {
    Tensor<i64> a(Shape{2, 3}), b(Shape{4, 2});
    EXPECT_THROW(ttt(a, b, ContractionSpec{1, 1, 1, {2, 1}, {2, 1}}), argument_error); // 2 vs 3
    EXPECT_NO_THROW(ttt(a, b, ContractionSpec{1, 1, 1, {2, 1}, {1, 2}}));
    EXPECT_THROW(ttt(a, b, ContractionSpec{1, 1, 1, {1, 1}, {1, 2}}), argument_error);
    EXPECT_THROW(ttt(a, b, ContractionSpec{1, 2, 1, {1, 2, 3}, {1, 2}}), argument_error);
}

TEST(Reductions, TtvAsTtt) {
    Rng rng(13);
    auto a = random_tensor<i64>(rng, {3, 4, 2});
    auto b = random_tensor<i64>(rng, {4});
    const auto spec = reduce_ttv_to_ttt(3, 2);
    EXPECT_EQ(spec.phi, (std::vector<std::size_t>{1, 3, 2}));
    EXPECT_EQ(spec.psi, std::vector<std::size_t>{1});
    EXPECT_TRUE(tensors_equal(ttt(a, b, spec), ttv(a, b, 2)));
}

TEST(Reductions, TtmAsTttThenTranspose) {
    Rng rng(17);
    for (std::size_t m = 1; m <= 3; ++m) {
        auto a = random_tensor<i64>(rng, {3, 4, 2});
        auto b = random_tensor<i64>(rng, {5, a.extents()[m - 1]});
        const auto c = ttt(a, b, reduce_ttm_to_ttt(3, m));
        EXPECT_TRUE(tensors_equal(transpose(c, ttm_transposition(3, m)), ttm(a, b, m))) << "m=" << m;
    }
}

TEST(Products, NormAndInner) {
    auto a = make_tensor<double>(Shape{2, 2}, {3, 0, 0, 4});
    EXPECT_DOUBLE_EQ(frobenius_norm(a), 5.0);
    auto b = make_tensor<i64>(Shape{2}, {3, 4});
    EXPECT_DOUBLE_EQ(frobenius_norm(b), 5.0);
    Tensor<i64> c(Shape{3});
    EXPECT_THROW(inner_product(b, c), argument_error);
}

TEST(TimesVectors, FullContractionCounts) {
    auto a = ones(Shape{2, 3, 2}, Layout{2, 1, 3});
    std::vector<Tensor<i64>> v{ones(Shape{2}, Layout{1}), ones(Shape{3}, Layout{1}), ones(Shape{2}, Layout{1})};
    const std::vector<std::size_t> modes{1, 2, 3};
    const auto c = times_vectors(a, v, std::span<const std::size_t>(modes));
    EXPECT_EQ(c.shape(), Shape{1});
    EXPECT_EQ(scalar(c), 12);
}

TEST(TimesVectors, SkipMode) {
    Rng rng(21);
    auto a = random_tensor<i64>(rng, {2, 3, 4});
    std::vector<Tensor<i64>> v{random_tensor<i64>(rng, {2}), random_tensor<i64>(rng, {4})};
    const auto c = times_vectors(a, v, std::size_t{2});
    EXPECT_TRUE(tensors_equal(c, ttv(ttv(a, v[1], 3), v[0], 1)));
}

TEST(TimesVectors, ModeValidation) {
    Tensor<i64> a(Shape{2, 3});
    std::vector<Tensor<i64>> v{Tensor<i64>(Shape{2}), Tensor<i64>(Shape{3})};
    const std::vector<std::size_t> unsorted{2, 1};
    EXPECT_THROW(times_vectors(a, v, std::span<const std::size_t>(unsorted)), argument_error);
    const std::vector<std::size_t> short_list{1};
    EXPECT_THROW(times_vectors(a, v, std::span<const std::size_t>(short_list)), argument_error);
}

TEST(TimesMatrices, IdentityAndCommutation) {
    Rng rng(23);
    auto a = random_tensor<i64>(rng, {2, 3, 2});
    std::vector<Tensor<i64>> eye{identity(2), identity(3), identity(2)};
    const std::vector<std::size_t> all{1, 2, 3};
    EXPECT_TRUE(tensors_equal(times_matrices(a, eye, std::span<const std::size_t>(all)), a));

    std::vector<Tensor<i64>> b{random_tensor<i64>(rng, {4, 2}), random_tensor<i64>(rng, {3, 2})};
    const std::vector<std::size_t> modes{1, 3};
    const auto c = times_matrices(a, b, std::span<const std::size_t>(modes));
    EXPECT_TRUE(tensors_equal(c, ttm(ttm(a, b[0], 1), b[1], 3)));
    EXPECT_TRUE(tensors_equal(c, ttm(ttm(a, b[1], 3), b[0], 1)));
    auto want = oracle::ttm(oracle::ttm(oracle::flatten(a), oracle::flatten(b[1]), 3), oracle::flatten(b[0]), 1);
    expect_matches(c, want);
}

TEST(Contractions, ViewsAsOperands) {
    Rng rng(29);
    auto big = random_tensor<i64>(rng, {5, 6, 3});
    auto v = big.view({Range(big.offsets()[0], 2, big.offsets()[0] + 4), Range(), Range(big.offsets()[2] + 1)});
    auto b = random_tensor<i64>(rng, {6});
    expect_matches(ttv(v, b, 2), oracle::ttv(oracle::flatten(v), oracle::flatten(b), 2));
    auto m = random_tensor<i64>(rng, {2, 3});
    expect_matches(ttm(v, m, 1), oracle::ttm(oracle::flatten(v), oracle::flatten(m), 1));
}
