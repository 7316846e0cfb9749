#include <tensorlib/matlab.hpp>
#include <tensorlib/tensor_view.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

using namespace tl;

namespace {

Tensor<std::int64_t> memory_index_tensor(Shape n, Layout pi) {
    Tensor<std::int64_t> t(std::move(n), std::move(pi));
    std::iota(t.data().begin(), t.data().end(), std::int64_t{0});
    return t;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

} // namespace

TEST(FormatScalar, Values) {
    EXPECT_EQ(format_scalar(std::int64_t{-42}), "-42");
    EXPECT_EQ(format_scalar(3.0), "3");
    EXPECT_EQ(format_scalar(-0.5), "-0.5");
    EXPECT_EQ(format_scalar(0.1), "0.1");
    EXPECT_EQ(format_scalar(1.0 / 3.0), "0.3333333333333333");
    EXPECT_EQ(format_scalar(1e300), "1e+300");
    EXPECT_EQ(format_scalar(std::numeric_limits<double>::quiet_NaN()), "NaN");
    EXPECT_EQ(format_scalar(std::numeric_limits<double>::infinity()), "Inf");
    EXPECT_EQ(format_scalar(-std::numeric_limits<double>::infinity()), "-Inf");
    EXPECT_EQ(format_scalar(2.5f), "2.5");
}

TEST(MatlabLiteral, LastOrderIotaGolden) {
    const auto a = memory_index_tensor(Shape{3, 4, 2}, last_order_layout(3));
    MatlabScript script;
    script.emit_tensor(a, "A");
    EXPECT_EQ(script.lines().at(0), "A = cat(3, [ 0 2 4 6 ; 8 10 12 14 ; 16 18 20 22 ], "
                                    "[ 1 3 5 7 ; 9 11 13 15 ; 17 19 21 23 ]);");
}

TEST(MatlabLiteral, IdentityMatrix) {
    Tensor<std::int64_t> eye(Shape{2, 2});
    eye(0, 0) = 1;
    eye(1, 1) = 1;
    MatlabScript script;
    script.emit_tensor(eye, "I");
    EXPECT_EQ(script.str(), "I = [ 1 0 ; 0 1 ];\n");
}

TEST(MatlabLiteral, VectorsAndSingleElement) {
    const auto v = memory_index_tensor(Shape{3}, Layout{1});
    EXPECT_EQ(matlab_literal(v), "[ 0 ; 1 ; 2 ]");
    const auto s = memory_index_tensor(Shape{1}, Layout{1});
    EXPECT_EQ(matlab_literal(s), "[ 0 ]");
}

TEST(MatlabLiteral, OrderFourNests) {
    const auto a = memory_index_tensor(Shape{1, 1, 2, 2}, first_order_layout(4));
    EXPECT_EQ(matlab_literal(a), "cat(4, cat(3, [ 0 ], [ 1 ]), cat(3, [ 2 ], [ 3 ]))");
}

TEST(MatlabLiteral, IndependentOfLayout) {
    auto a = memory_index_tensor(Shape{2, 3, 2}, Layout{2, 3, 1});
    auto b = a;
    b.relayout(Layout{1, 3, 2});
    EXPECT_EQ(matlab_literal(a), matlab_literal(b));
}

TEST(MatlabLiteral, Views) {
    const auto a = memory_index_tensor(Shape{4, 2, 3}, first_order_layout(3));
    const auto v = a.view({Range(1, 2, 3), Range(0, 1, 1), Range(2)});
    EXPECT_EQ(matlab_literal(v), "cat(3, [ 17 21 ; 19 23 ])");
}

TEST(MatlabScript, CommandsAndFiles) {
    MatlabScript script;
    EXPECT_EQ(script.str(), "");
    script.emit_command("");
    EXPECT_EQ(script.str(), "\n");

    MatlabScript two;
    two.emit_tensor(memory_index_tensor(Shape{2}, Layout{1}), "x");
    two.emit_command("plot(x);");
    const auto path = std::filesystem::temp_directory_path() / "tensorlib_test_script.m";
    two.write(path);
    EXPECT_EQ(read_file(path), "x = [ 0 ; 1 ];\nplot(x);\n");
    std::filesystem::remove(path);

    MatlabScript empty;
    empty.write(path);
    EXPECT_EQ(read_file(path), "");
    std::filesystem::remove(path);

    EXPECT_THROW(two.write("/nonexistent-dir/x.m"), std::runtime_error);
}
