#include <tensorlib/json_io.hpp>

#include <fstream>
#include <sstream>

namespace tl {

namespace detail {

namespace {

template <class Int>
std::vector<Int> int_array(const nlohmann::json& j, const char* key) {
    const auto& a = j.at(key);
    if (!a.is_array()) throw format_error(std::string("\"") + key + "\" must be an array");
    std::vector<Int> out;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!a[k].is_number_integer())
            throw format_error(std::string(key) + "[" + std::to_string(k) + "] is not an integer");
        if constexpr (std::is_unsigned_v<Int>) {
            if (a[k].get<std::int64_t>() < 0)
                throw format_error(std::string(key) + "[" + std::to_string(k) + "] is negative");
        }
        out.push_back(a[k].get<Int>());
    }
    return out;
}

} // namespace

TensorMeta meta_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw format_error("tensor document must be a JSON object");
    for (const char* key : {"shape", "data"})
        if (!j.contains(key)) throw format_error(std::string("missing field \"") + key + "\"");
    try {
        Shape shape(int_array<std::size_t>(j, "shape"));
        Layout layout = j.contains("layout") ? Layout(int_array<std::size_t>(j, "layout"))
                                             : Layout::first_order(shape.order());
        Offsets offsets = j.contains("offsets") ? Offsets(int_array<index_t>(j, "offsets"))
                                                : Offsets::zeros(shape.order());
        return TensorMeta(std::move(shape), std::move(offsets), std::move(layout));
    } catch (const argument_error& e) {
        throw format_error(e.what());
    }
}

} // namespace detail

ScalarKind detect_kind(const nlohmann::json& j) {
    const auto& data = j.at("data");
    for (const auto& v : data)
        if (!v.is_number_integer()) return ScalarKind::float64;
    return ScalarKind::int64;
}

nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw format_error("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    try {
        return parse_json(buf.str());
    } catch (const format_error& e) {
        throw format_error(path.string() + ": " + e.what());
    }
}

} // namespace tl
