#include <tensorlib/json_io.hpp>
#include <tensorlib/random.hpp>

#include <gtest/gtest.h>

#include <cstdint>
#include <cstring>
#include <limits>

using namespace tl;

TEST(Json, IntegerRoundTripIsExact) {
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_tensor<std::int64_t>(rng, rng.extents(3, 4));
        a.data()[0] = std::numeric_limits<std::int64_t>::min();
        const auto text = to_json(a).dump();
        const auto b = tensor_from_json<std::int64_t>(parse_json(text));
        EXPECT_EQ(b.meta(), a.meta());
        EXPECT_TRUE(std::ranges::equal(b.data(), a.data()));
    }
}

TEST(Json, FloatRoundTripIsBitExact) {
    Rng rng(98);
    auto a = random_tensor<double>(rng, {3, 2, 2});
    a.data()[1] = 0.1;
    a.data()[2] = 1.0 / 3.0;
    a.data()[3] = 5e-324;
    const auto text = to_json(a).dump();
    EXPECT_NE(text.find("0.1,"), std::string::npos);
    const auto b = tensor_from_json<double>(parse_json(text));
    EXPECT_EQ(std::memcmp(a.data().data(), b.data().data(), a.size() * sizeof(double)), 0);
}

TEST(Json, DefaultsForLayoutAndOffsets) {
    const auto t = tensor_from_json<std::int64_t>(parse_json(R"({"shape":[2,3],"data":[0,1,2,3,4,5]})"));
    EXPECT_EQ(t.layout(), first_order_layout(2));
    EXPECT_EQ(t.offsets(), Offsets::zeros(2));
    EXPECT_EQ(t(1, 2), 5);
}

TEST(Json, DetectKind) {
    EXPECT_EQ(detect_kind(parse_json(R"({"shape":[2],"data":[1,2]})")), ScalarKind::int64);
    EXPECT_EQ(detect_kind(parse_json(R"({"shape":[2],"data":[1,2.5]})")), ScalarKind::float64);
}

TEST(Json, MalformedDocuments) {
    EXPECT_THROW(parse_json(R"({"shape":[2],)"), format_error);
    try {
        parse_json("{\"shape\": [2, }");
        FAIL();
    } catch (const format_error& e) {
        EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
    }
    auto bad = [](const char* text) { return tensor_from_json<std::int64_t>(parse_json(text)); };
    EXPECT_THROW(bad(R"([1,2])"), format_error);
    EXPECT_THROW(bad(R"({"data":[1]})"), format_error);
    EXPECT_THROW(bad(R"({"shape":[2],"data":[1]})"), format_error);
    EXPECT_THROW(bad(R"({"shape":[2],"data":[1, 2.5]})"), format_error);
    EXPECT_THROW(bad(R"({"shape":[2,-1],"data":[]})"), format_error);
    EXPECT_THROW(bad(R"({"shape":[2],"layout":[2],"data":[1,2]})"), format_error);
    EXPECT_THROW(bad(R"({"shape":[2],"offsets":[1,1],"data":[1,2]})"), format_error);
    EXPECT_THROW(bad(R"({"shape":[2],"data":"x"})"), format_error);
    EXPECT_THROW(read_json_file("/nonexistent/tensor.json"), std::runtime_error);
}
