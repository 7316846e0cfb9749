#pragma once

// JSON interchange:
//   {"shape": [..], "layout": [..one-based..], "offsets": [..],
//    "data": [..values in memory-index order..]}
// "layout" and "offsets" are optional on input (first-order, zeros).

#include <tensorlib/tensor.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace tl {

enum class ScalarKind { int64, float64 };

/// Malformed interchange documents; the message carries the location.
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class T>
nlohmann::json to_json(const Tensor<T>& t) {
    nlohmann::json j;
    j["shape"] = t.shape().vec();
    j["layout"] = t.layout().vec();
    j["offsets"] = t.offsets().vec();
    j["data"] = std::vector<T>(t.data().begin(), t.data().end());
    return j;
}

namespace detail {

TensorMeta meta_from_json(const nlohmann::json& j);

} // namespace detail

template <class T>
Tensor<T> tensor_from_json(const nlohmann::json& j) {
    auto meta = detail::meta_from_json(j);
    const auto& data = j.at("data");
    if (!data.is_array()) throw format_error("\"data\" must be an array");
    std::vector<T> values;
    values.reserve(data.size());
    for (std::size_t k = 0; k < data.size(); ++k) {
        const auto& v = data[k];
        if constexpr (std::is_integral_v<T>) {
            if (!v.is_number_integer())
                throw format_error("data[" + std::to_string(k) + "] is not an integer");
        } else if (!v.is_number()) {
            throw format_error("data[" + std::to_string(k) + "] is not a number");
        }
        values.push_back(v.get<T>());
    }
    if (values.size() != meta.volume())
        throw format_error("\"data\" has " + std::to_string(values.size()) + " entries, shape needs " +
                           std::to_string(meta.volume()));
    return Tensor<T>(std::move(meta), std::move(values));
}

/// int64 when every data entry is an integer, float64 otherwise.
ScalarKind detect_kind(const nlohmann::json& j);

/// Parses text; syntax errors become format_error with the byte position.
nlohmann::json parse_json(std::string_view text);
nlohmann::json read_json_file(const std::filesystem::path& path);

} // namespace tl
