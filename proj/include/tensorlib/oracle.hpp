#pragma once

// Brute-force reference implementations used for verification. Operands
// are first flattened through bounds-checked multi-index access (the layout
// function, never the iterators), then every operation is evaluated by
// enumerating multi-indices directly.

#include <tensorlib/contraction.hpp>
#include <tensorlib/layout.hpp>
#include <tensorlib/tensor.hpp>

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

namespace tl::oracle {

/// Values in colexicographic multi-index order (dimension 1 fastest).
template <class T>
struct Flat {
    std::vector<std::size_t> extents;
    std::vector<T> values;

    std::size_t linear(std::span<const std::size_t> idx) const {
        std::size_t k = 0, w = 1;
        for (std::size_t r = 0; r < extents.size(); ++r) {
            k += idx[r] * w;
            w *= extents[r];
        }
        return k;
    }
    const T& operator()(std::span<const std::size_t> idx) const { return values[linear(idx)]; }
    T& operator()(std::span<const std::size_t> idx) { return values[linear(idx)]; }
};

/// Colexicographic successor; false after the last multi-index.
inline bool next_index(std::vector<std::size_t>& idx, std::span<const std::size_t> extents) {
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (++idx[r] < extents[r]) return true;
        idx[r] = 0;
    }
    return false;
}

template <class T>
Flat<T> zeros(std::vector<std::size_t> extents) {
    if (extents.empty()) extents.push_back(1);
    std::size_t n = 1;
    for (auto e : extents) n *= e;
    return {std::move(extents), std::vector<T>(n, T{})};
}

template <TensorSource S>
Flat<value_of<S>> flatten(const S& s) {
    Flat<value_of<S>> out{std::vector<std::size_t>(s.extents().begin(), s.extents().end()), {}};
    std::vector<std::size_t> idx(s.order(), 0);
    std::vector<index_t> biased(s.order());
    do {
        for (std::size_t r = 0; r < idx.size(); ++r) biased[r] = static_cast<index_t>(idx[r]) + s.offsets()[r];
        out.values.push_back(s.at(std::span<const index_t>(biased)));
    } while (next_index(idx, out.extents));
    return out;
}

template <class T>
Flat<T> transpose(const Flat<T>& a, std::span<const std::size_t> tau) {
    std::vector<std::size_t> extents(a.extents.size());
    for (std::size_t r = 0; r < extents.size(); ++r) extents[r] = a.extents[tau[r] - 1];
    auto c = zeros<T>(extents);
    std::vector<std::size_t> ia(a.extents.size(), 0), ic(extents.size());
    do {
        for (std::size_t r = 0; r < ic.size(); ++r) ic[r] = ia[tau[r] - 1];
        c(ic) = a(ia);
    } while (next_index(ia, a.extents));
    return c;
}

/// General (q, phi, psi) contraction by enumerating free and contracted
/// indices separately.
template <class T>
Flat<T> ttt(const Flat<T>& a, const Flat<T>& b, const ContractionSpec& spec) {
    std::vector<std::size_t> free_extents, contracted_extents;
    for (std::size_t k = 0; k < spec.r; ++k) free_extents.push_back(a.extents[spec.phi[k] - 1]);
    for (std::size_t k = 0; k < spec.s; ++k) free_extents.push_back(b.extents[spec.psi[k] - 1]);
    for (std::size_t k = 0; k < spec.q; ++k) contracted_extents.push_back(a.extents[spec.phi[spec.r + k] - 1]);
    auto c = zeros<T>(free_extents);

    std::vector<std::size_t> ic(free_extents.size(), 0), ia(a.extents.size()), ib(b.extents.size());
    do {
        T sum{};
        std::vector<std::size_t> jc(spec.q, 0);
        do {
            for (std::size_t k = 0; k < spec.r; ++k) ia[spec.phi[k] - 1] = ic[k];
            for (std::size_t k = 0; k < spec.s; ++k) ib[spec.psi[k] - 1] = ic[spec.r + k];
            for (std::size_t k = 0; k < spec.q; ++k) {
                ia[spec.phi[spec.r + k] - 1] = jc[k];
                ib[spec.psi[spec.s + k] - 1] = jc[k];
            }
            sum += a(ia) * b(ib);
        } while (next_index(jc, contracted_extents));
        if (free_extents.empty())
            c.values[0] = sum;
        else
            c(ic) = sum;
    } while (!free_extents.empty() && next_index(ic, free_extents));
    return c;
}

/// b is read as a plain sequence of n_m values.
template <class T>
Flat<T> ttv(const Flat<T>& a, const Flat<T>& b, std::size_t m) {
    std::vector<std::size_t> extents;
    for (std::size_t r = 0; r < a.extents.size(); ++r)
        if (r != m - 1) extents.push_back(a.extents[r]);
    auto c = zeros<T>(extents);
    std::vector<std::size_t> ia(a.extents.size(), 0), ic;
    do {
        ic.clear();
        for (std::size_t r = 0; r < ia.size(); ++r)
            if (r != m - 1) ic.push_back(ia[r]);
        const auto k = ic.empty() ? 0 : c.linear(ic);
        c.values[k] += a(ia) * b.values[ia[m - 1]];
    } while (next_index(ia, a.extents));
    return c;
}

template <class T>
Flat<T> ttm(const Flat<T>& a, const Flat<T>& b, std::size_t m) {
    auto extents = a.extents;
    const auto rows = b.extents[0];
    extents[m - 1] = rows;
    auto c = zeros<T>(extents);
    std::vector<std::size_t> ic(extents.size(), 0);
    do {
        T sum{};
        auto ia = ic;
        for (std::size_t i = 0; i < a.extents[m - 1]; ++i) {
            ia[m - 1] = i;
            const std::size_t ib[] = {ic[m - 1], i};
            sum += a(ia) * b(ib);
        }
        c(ic) = sum;
    } while (next_index(ic, extents));
    return c;
}

template <class T>
Flat<T> outer(const Flat<T>& a, const Flat<T>& b) {
    auto extents = a.extents;
    extents.insert(extents.end(), b.extents.begin(), b.extents.end());
    auto c = zeros<T>(extents);
    for (std::size_t j = 0; j < b.values.size(); ++j)
        for (std::size_t i = 0; i < a.values.size(); ++i) c.values[i + j * a.values.size()] = a.values[i] * b.values[j];
    return c;
}

template <class T>
T inner(const Flat<T>& a, const Flat<T>& b) {
    T sum{};
    for (std::size_t k = 0; k < a.values.size(); ++k) sum += a.values[k] * b.values[k];
    return sum;
}

template <class T>
real_t<T> norm(const Flat<T>& a) {
    return std::sqrt(static_cast<real_t<T>>(inner(a, a)));
}

} // namespace tl::oracle
