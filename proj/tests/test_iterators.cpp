#include <tensorlib/iterators.hpp>
#include <tensorlib/tensor.hpp>
#include <tensorlib/tensor_view.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <vector>

using namespace tl;

TEST(StrideIterator, RandomAccess) {
    std::vector<int> buf(12);
    std::iota(buf.begin(), buf.end(), 0);
    StrideIterator<int> f(buf.data(), 1, 4), l(buf.data(), 13, 4);
    EXPECT_EQ(l - f, 3);
    EXPECT_EQ(*f, 1);
    EXPECT_EQ(f[2], 9);
    EXPECT_EQ(*(f + 1), 5);
    EXPECT_EQ(*(2 + f), 9);
    EXPECT_TRUE(f < l);
    auto g = f;
    g += 3;
    EXPECT_EQ(g, l);
    g -= 1;
    EXPECT_EQ(*g, 9);
    EXPECT_EQ(*g--, 9);
    EXPECT_EQ(*g, 5);
    EXPECT_EQ(std::accumulate(f, l, 0), 1 + 5 + 9);
    std::vector<int> rev(f, l);
    std::reverse(rev.begin(), rev.end());
    EXPECT_EQ(rev, (std::vector<int>{9, 5, 1}));
}

TEST(StrideIterator, EqualityNeedsPositionAndStride) {
    int x[8] = {};
    StrideIterator<int> a(x, 2, 1), b(x, 2, 2);
    EXPECT_NE(a, b);
    a = b;
    EXPECT_EQ(a, b);
    StrideIterator<const int> c = b;
    EXPECT_EQ(c.position(), 2);
    EXPECT_EQ(c.stride(), 2);
}

TEST(StrideIterator, WorksWithStandardAlgorithms) {
    std::vector<double> buf(6, 0.0);
    StrideIterator<double> f(buf.data(), 0, 2), l(buf.data(), 6, 2);
    std::fill(f, l, 5.0);
    EXPECT_EQ(buf, (std::vector<double>{5, 0, 5, 0, 5, 0}));
    std::sort(StrideIterator<double>(buf.data(), 1, 2), StrideIterator<double>(buf.data(), 7, 2));
}

TEST(MultiIterator, BeginEndPerDimension) {
    Tensor<int> a(Shape{4, 3, 2});
    auto it = a.mbegin();
    EXPECT_EQ(it.order(), 3u);
    EXPECT_EQ(it.volume(), 24u);
    EXPECT_EQ(it.begin(1).stride(), 4);
    EXPECT_EQ(it.end(1).position(), 12);
    EXPECT_EQ(it.end(2).position(), 24);
    EXPECT_THROW(it.begin(3), argument_error);
    EXPECT_THROW(it.end(3), argument_error);
}

TEST(MultiIterator, AssignmentMovesCursor) {
    Tensor<int> a(Shape{4, 3});
    std::iota(a.data().begin(), a.data().end(), 0);
    auto it = a.mbegin();
    it = it.begin(1) + 2;
    EXPECT_EQ(*it, 8);
    EXPECT_EQ(it.begin(0).position(), 8);
    EXPECT_EQ(*(it.end(0) - 1), 11);
    EXPECT_EQ(it.extents().size(), 2u);
}

TEST(MultiIterator, ViewStartsAtGamma) {
    Tensor<int> a(Shape{4, 2, 3});
    std::iota(a.data().begin(), a.data().end(), 0);
    auto v = a.view({Range(1, 2, 3), Range(0, 1, 1), Range(2)});
    auto it = v.mbegin();
    EXPECT_EQ(*it, 17);
    EXPECT_EQ(it.begin(0).stride(), 2);
    EXPECT_EQ(it.begin(1).stride(), 4);
}

TEST(Lockstep, VisitsColexicographically) {
    Tensor<int> a(Shape{2, 3}, Layout{2, 1});
    std::iota(a.data().begin(), a.data().end(), 0);
    std::vector<int> seen;
    auto kernel = [&seen](auto f, auto l) {
        for (; f != l; ++f) seen.push_back(*f);
    };
    detail::lockstep(1, kernel, a.mbegin());
    // a(i,j) = 3i + j for the last-order layout
    EXPECT_EQ(seen, (std::vector<int>{0, 3, 1, 4, 2, 5}));
}

TEST(Lockstep, EveryMemoryIndexOnceForAllLayouts) {
    const Shape n{3, 2, 2, 3};
    std::vector<std::size_t> perm{1, 2, 3, 4};
    do {
        Tensor<int> a(n, Layout(perm));
        auto kernel = [](auto f, auto l) {
            for (; f != l; ++f) ++*f;
        };
        detail::lockstep(3, kernel, a.mbegin());
        EXPECT_TRUE(std::ranges::all_of(a.data(), [](int x) { return x == 1; })) << to_string(std::span(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Lockstep, MixedLayoutsPairByMultiIndex) {
    Tensor<int> a(Shape{2, 3, 2}, Layout{1, 2, 3});
    Tensor<int> b(Shape{2, 3, 2}, Layout{3, 1, 2});
    std::iota(a.data().begin(), a.data().end(), 0);
    auto kernel = [](auto f, auto l, auto out) { std::copy(f, l, out); };
    detail::lockstep(2, kernel, a.mbegin(), b.mbegin());
    for (index_t i = 0; i < 2; ++i)
        for (index_t j = 0; j < 3; ++j)
            for (index_t k = 0; k < 2; ++k) EXPECT_EQ(a(i, j, k), b(i, j, k));
}
