#pragma once

// Seedable random generation of tensors and operands. The engine is
// std::mt19937_64, whose output sequence is fixed by the standard; bounded
// draws are derived here rather than through <random> distributions, which
// differ between standard libraries. Identical seeds therefore reproduce
// identical tensors on every platform.

#include <tensorlib/tensor.hpp>
#include <tensorlib/tensor_view.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <type_traits>
#include <vector>

namespace tl {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n), n >= 1.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    /// Uniform in [lo, hi) with 53 random bits.
    double uniform_real(double lo, double hi);
    bool coin() { return (next() >> 63) != 0; }

    /// Uniform over all p! permutations.
    Layout layout(std::size_t p);
    Offsets offsets(std::size_t p, index_t lo = -2, index_t hi = 2);
    std::vector<std::size_t> extents(std::size_t p, std::size_t max_extent, std::size_t min_extent = 1);

    template <class T>
    T value() {
        if constexpr (std::is_integral_v<T>)
            return static_cast<T>(uniform_int(-9, 9));
        else
            return static_cast<T>(uniform_real(-1.0, 1.0));
    }

private:
    std::mt19937_64 engine_;
};

/// Tensor of the given extents with random layout, offsets and values.
template <class T>
Tensor<T> random_tensor(Rng& rng, const std::vector<std::size_t>& extents) {
    const auto p = extents.size();
    auto layout = rng.layout(p);
    auto offsets = rng.offsets(p);
    Tensor<T> t(Shape(extents), std::move(offsets), std::move(layout));
    for (auto& x : t.data()) x = rng.value<T>();
    return t;
}

/// An operand that is either a whole tensor or a strided view with the
/// requested extents into a larger random tensor.
template <class T>
class Operand {
public:
    Operand(Tensor<T> target, std::optional<std::vector<Range>> ranges)
        : target_(std::move(target)), ranges_(std::move(ranges)) {}

    bool is_view() const noexcept { return ranges_.has_value(); }
    const Tensor<T>& target() const noexcept { return target_; }
    Tensor<T>& target() noexcept { return target_; }
    const std::optional<std::vector<Range>>& ranges() const noexcept { return ranges_; }

    /// Calls f with the tensor or with a view of it.
    template <class F>
    decltype(auto) visit(F&& f) const {
        if (ranges_) return f(target_.view(std::span<const Range>(*ranges_)));
        return f(target_);
    }
    template <class F>
    decltype(auto) visit_mut(F&& f) {
        if (ranges_) return f(target_.view(std::span<const Range>(*ranges_)));
        return f(target_);
    }

private:
    Tensor<T> target_;
    std::optional<std::vector<Range>> ranges_;
};

/// With probability 1/2 a view: per dimension a step in {1,2}, a first
/// index 0..2 past the offset and up to one spare trailing index.
template <class T>
Operand<T> random_operand(Rng& rng, const std::vector<std::size_t>& extents) {
    if (!rng.coin()) return Operand<T>(random_tensor<T>(rng, extents), std::nullopt);
    const auto p = extents.size();
    std::vector<std::size_t> target_extents(p);
    std::vector<index_t> lead(p), step(p);
    for (std::size_t r = 0; r < p; ++r) {
        lead[r] = rng.uniform_int(0, 2);
        step[r] = rng.uniform_int(1, 2);
        const auto span = static_cast<index_t>(extents[r] - 1) * step[r] + 1;
        target_extents[r] = static_cast<std::size_t>(lead[r] + span + rng.uniform_int(0, 1));
    }
    auto target = random_tensor<T>(rng, target_extents);
    std::vector<Range> ranges;
    for (std::size_t r = 0; r < p; ++r) {
        const auto first = target.offsets()[r] + lead[r];
        ranges.emplace_back(first, step[r], first + static_cast<index_t>(extents[r] - 1) * step[r]);
    }
    return Operand<T>(std::move(target), std::move(ranges));
}

} // namespace tl
