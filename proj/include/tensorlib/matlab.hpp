#pragma once

// MATLAB script generation. Tensors are written as literals such that
// name(i_1, ..., i_p) in MATLAB holds the element with zero-based
// multi-index (i_1 - 1, ..., i_p - 1). Offsets are not representable in
// MATLAB and are dropped.

#include <tensorlib/tensor.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace tl {

/// Integral values without a decimal point, others in shortest round-trip
/// form; non-finite values as NaN / Inf / -Inf.
std::string format_scalar(double value);
std::string format_scalar(std::int64_t value);

template <class T>
    requires std::is_arithmetic_v<T>
std::string format_scalar(T value) {
    if constexpr (std::is_integral_v<T>)
        return format_scalar(static_cast<std::int64_t>(value));
    else
        return format_scalar(static_cast<double>(value));
}

namespace detail {

// `values` holds the elements in first-order (colexicographic) order.
std::string matlab_literal(std::span<const std::string> values, std::span<const std::size_t> extents);

} // namespace detail

/// MATLAB literal of a tensor or view: a column vector for order 1, a
/// matrix for order 2 and nested cat(p, ...) along the last dimension above.
template <TensorSource S>
std::string matlab_literal(const S& t) {
    std::vector<std::string> values;
    values.reserve(tl::volume(t.extents()));
    auto kernel = [&values](auto f, auto l) {
        for (; f != l; ++f) values.push_back(format_scalar(*f));
    };
    detail::lockstep(t.order() - 1, kernel, t.mbegin());
    return detail::matlab_literal(values, t.extents());
}

class MatlabScript {
public:
    /// Appends `name = <literal>;`.
    template <TensorSource S>
    void emit_tensor(const S& t, std::string_view name) {
        lines_.push_back(std::string(name) + " = " + matlab_literal(t) + ";");
    }

    /// Appends a line verbatim.
    void emit_command(std::string line) { lines_.push_back(std::move(line)); }

    const std::vector<std::string>& lines() const noexcept { return lines_; }

    /// Every line newline-terminated; empty for an empty script.
    std::string str() const;

    /// Overwrites `path`; throws std::runtime_error naming the path on I/O
    /// failure.
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::string> lines_;
};

} // namespace tl
