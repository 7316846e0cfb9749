#include <tensorlib/matlab.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace tl {

std::string format_scalar(std::int64_t value) { return std::to_string(value); }

std::string format_scalar(double value) {
    if (std::isnan(value)) return "NaN";
    if (std::isinf(value)) return value > 0 ? "Inf" : "-Inf";
    if (value == std::trunc(value) && std::abs(value) < 1e15) {
        if (value == 0) return "0";
        return std::to_string(static_cast<std::int64_t>(value));
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), res.ptr);
}

namespace detail {

namespace {

void append(std::string& out, std::span<const std::string> values, std::span<const std::size_t> extents,
            std::size_t base, std::size_t k) {
    // Stride of dimension r in first-order storage is n_1 * ... * n_{r-1}.
    std::size_t stride = 1;
    for (std::size_t r = 0; r + 1 < k; ++r) stride *= extents[r];

    if (k == 1) {
        out += "[ ";
        for (std::size_t i = 0; i < extents[0]; ++i) {
            if (i > 0) out += " ; ";
            out += values[base + i];
        }
        out += " ]";
    } else if (k == 2) {
        out += "[ ";
        for (std::size_t i = 0; i < extents[0]; ++i) {
            if (i > 0) out += " ; ";
            for (std::size_t j = 0; j < extents[1]; ++j) {
                if (j > 0) out += ' ';
                out += values[base + i + j * extents[0]];
            }
        }
        out += " ]";
    } else {
        out += "cat(" + std::to_string(k);
        for (std::size_t s = 0; s < extents[k - 1]; ++s) {
            out += ", ";
            append(out, values, extents, base + s * stride, k - 1);
        }
        out += ")";
    }
}

} // namespace

std::string matlab_literal(std::span<const std::string> values, std::span<const std::size_t> extents) {
    std::string out;
    append(out, values, extents, 0, extents.size());
    return out;
}

} // namespace detail

std::string MatlabScript::str() const {
    std::string out;
    for (const auto& line : lines_) {
        out += line;
        out += '\n';
    }
    return out;
}

void MatlabScript::write(const std::filesystem::path& path) const {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    file << str();
    file.flush();
    if (!file) throw std::runtime_error("failed writing '" + path.string() + "'");
}

} // namespace tl
