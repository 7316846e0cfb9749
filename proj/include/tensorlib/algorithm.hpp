#pragma once

// First-level tensor algorithms. Every function takes multi-iterators
// (Tensor::mbegin() or TensorView::mbegin()) and walks the multi-index set
// recursively: dimension p outermost, dimension 1 innermost, with the
// standard-library kernel applied to each dimension-1 fiber. Operands of
// multi-source functions must have equal extents but may differ in layout,
// offsets and strides; elements are combined by zero-based multi-index.
//
// "Iteration order" below always means that recursion order, i.e. the
// colexicographic order of zero-based multi-indices.

#include <tensorlib/errors.hpp>
#include <tensorlib/iterators.hpp>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace tl {

namespace detail {

inline std::vector<index_t> unravel_colex(std::span<const std::size_t> extents, std::size_t k) {
    std::vector<index_t> idx(extents.size());
    for (std::size_t r = 0; r < extents.size(); ++r) {
        idx[r] = static_cast<index_t>(k % extents[r]);
        k /= extents[r];
    }
    return idx;
}

template <class It, class Kernel>
void walk(It it, Kernel kernel) {
    detail::lockstep(it.order() - 1, kernel, it);
}

} // namespace detail

template <MultiIteratorLike It, class Fn>
void for_each(It it, Fn fn) {
    detail::walk(it, [&fn](auto f, auto l) { std::for_each(f, l, std::ref(fn)); });
}

template <MultiIteratorLike In, MultiIteratorLike Out, class UnaryOp>
void transform(In in, Out out, UnaryOp op) {
    detail::require_same_extents(in, out, "transform");
    auto kernel = [&op](auto f, auto l, auto o) { std::transform(f, l, o, std::ref(op)); };
    detail::lockstep(in.order() - 1, kernel, in, out);
}

template <MultiIteratorLike In1, MultiIteratorLike In2, MultiIteratorLike Out, class BinaryOp>
void transform(In1 a, In2 b, Out out, BinaryOp op) {
    detail::require_same_extents(a, b, "transform");
    detail::require_same_extents(a, out, "transform");
    auto kernel = [&op](auto f, auto l, auto fb, auto o) { std::transform(f, l, fb, o, std::ref(op)); };
    detail::lockstep(a.order() - 1, kernel, a, b, out);
}

template <MultiIteratorLike In, MultiIteratorLike Out>
void copy(In in, Out out) {
    detail::require_same_extents(in, out, "copy");
    auto kernel = [](auto f, auto l, auto o) { std::copy(f, l, o); };
    detail::lockstep(in.order() - 1, kernel, in, out);
}

/// Writes out[i] = in[i] only where pred(in[i]); other elements of `out`
/// are left untouched.
template <MultiIteratorLike In, MultiIteratorLike Out, class Pred>
void copy_if(In in, Out out, Pred pred) {
    detail::require_same_extents(in, out, "copy_if");
    auto kernel = [&pred](auto f, auto l, auto o) {
        for (; f != l; ++f, ++o)
            if (pred(*f)) *o = *f;
    };
    detail::lockstep(in.order() - 1, kernel, in, out);
}

template <MultiIteratorLike Out, class T>
void fill(Out out, const T& value) {
    detail::walk(out, [&value](auto f, auto l) { std::fill(f, l, value); });
}

template <MultiIteratorLike Out, class Gen>
void generate(Out out, Gen gen) {
    detail::walk(out, [&gen](auto f, auto l) { std::generate(f, l, std::ref(gen)); });
}

/// start, start + 1, ... in iteration order.
template <MultiIteratorLike Out, class T>
void iota(Out out, T start) {
    detail::walk(out, [&start](auto f, auto l) {
        for (; f != l; ++f) *f = start++;
    });
}

template <MultiIteratorLike In, class T>
std::size_t count(In in, const T& value) {
    std::size_t n = 0;
    detail::walk(in, [&](auto f, auto l) { n += static_cast<std::size_t>(std::count(f, l, value)); });
    return n;
}

template <MultiIteratorLike In, class Pred>
std::size_t count_if(In in, Pred pred) {
    std::size_t n = 0;
    detail::walk(in, [&](auto f, auto l) { n += static_cast<std::size_t>(std::count_if(f, l, std::ref(pred))); });
    return n;
}

/// Zero-based multi-index plus value of an element.
template <class T>
struct Located {
    std::vector<index_t> index;
    T value;
};

namespace detail {

// First element (in iteration order) preferred by `better` over all others.
template <class In, class Better>
auto extremum(In in, Better better) {
    using V = typename In::value_type;
    std::optional<V> best;
    std::size_t best_k = 0, k = 0;
    walk(in, [&](auto f, auto l) {
        for (; f != l; ++f, ++k)
            if (!best || better(*f, *best)) {
                best = *f;
                best_k = k;
            }
    });
    return Located<V>{unravel_colex(in.extents(), best_k), *best};
}

template <class In, class Pred>
std::optional<std::vector<index_t>> find_first(In in, Pred pred) {
    std::optional<std::size_t> hit;
    std::size_t k = 0;
    walk(in, [&](auto f, auto l) {
        if (hit) return;
        for (; f != l; ++f, ++k)
            if (pred(*f)) {
                hit = k;
                return;
            }
    });
    if (!hit) return std::nullopt;
    return unravel_colex(in.extents(), *hit);
}

} // namespace detail

template <MultiIteratorLike In>
Located<typename In::value_type> min_element(In in) {
    return detail::extremum(in, std::less<>{});
}

template <MultiIteratorLike In>
Located<typename In::value_type> max_element(In in) {
    return detail::extremum(in, std::greater<>{});
}

/// Zero-based multi-index of the first element equal to `value`.
template <MultiIteratorLike In, class T>
std::optional<std::vector<index_t>> find(In in, const T& value) {
    return detail::find_first(in, [&value](const auto& x) { return x == value; });
}

template <MultiIteratorLike In, class Pred>
std::optional<std::vector<index_t>> find_if(In in, Pred pred) {
    return detail::find_first(in, std::ref(pred));
}

/// Zero-based multi-index of the first pair that differs, if any.
template <MultiIteratorLike In1, MultiIteratorLike In2>
std::optional<std::vector<index_t>> mismatch(In1 a, In2 b) {
    detail::require_same_extents(a, b, "mismatch");
    std::optional<std::size_t> hit;
    std::size_t k = 0;
    auto kernel = [&](auto f, auto l, auto g) {
        if (hit) return;
        auto [fa, fb] = std::mismatch(f, l, g);
        if (fa != l) hit = k + static_cast<std::size_t>(fa - f);
        k += static_cast<std::size_t>(l - f);
    };
    detail::lockstep(a.order() - 1, kernel, a, b);
    if (!hit) return std::nullopt;
    return detail::unravel_colex(a.extents(), *hit);
}

template <MultiIteratorLike In1, MultiIteratorLike In2>
bool equal(In1 a, In2 b) {
    return !mismatch(a, b).has_value();
}

template <MultiIteratorLike In, class Pred>
bool any_of(In in, Pred pred) {
    return detail::find_first(in, std::ref(pred)).has_value();
}

template <MultiIteratorLike In, class Pred>
bool all_of(In in, Pred pred) {
    return !any_of(in, [&pred](const auto& x) { return !pred(x); });
}

template <MultiIteratorLike In, class Pred>
bool none_of(In in, Pred pred) {
    return !any_of(in, std::ref(pred));
}

/// Left fold in iteration order.
template <MultiIteratorLike In, class T, class BinaryOp = std::plus<>>
T accumulate(In in, T init, BinaryOp op = {}) {
    detail::walk(in, [&](auto f, auto l) { init = std::accumulate(f, l, std::move(init), std::ref(op)); });
    return init;
}

/// init + sum_i a[i] * b[i].
template <MultiIteratorLike In1, MultiIteratorLike In2, class T>
T inner_product(In1 a, In2 b, T init) {
    detail::require_same_extents(a, b, "inner_product");
    auto kernel = [&init](auto f, auto l, auto g) { init = std::inner_product(f, l, g, std::move(init)); };
    detail::lockstep(a.order() - 1, kernel, a, b);
    return init;
}

} // namespace tl
