#include <tensorlib/random.hpp>

#include <limits>
#include <numeric>

namespace tl {

std::uint64_t Rng::below(std::uint64_t n) {
    // Rejection sampling removes the modulo bias.
    const auto limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % n;
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::uniform_real(double lo, double hi) {
    const double unit = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

Layout Rng::layout(std::size_t p) {
    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), 1u);
    for (std::size_t k = p; k > 1; --k) std::swap(perm[k - 1], perm[below(k)]);
    return Layout(std::move(perm));
}

Offsets Rng::offsets(std::size_t p, index_t lo, index_t hi) {
    std::vector<index_t> o(p);
    for (auto& x : o) x = uniform_int(lo, hi);
    return Offsets(std::move(o));
}

std::vector<std::size_t> Rng::extents(std::size_t p, std::size_t max_extent, std::size_t min_extent) {
    std::vector<std::size_t> n(p);
    for (auto& x : n)
        x = static_cast<std::size_t>(uniform_int(static_cast<std::int64_t>(min_extent),
                                                 static_cast<std::int64_t>(max_extent)));
    return n;
}

} // namespace tl
