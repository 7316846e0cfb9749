#pragma once

// Higher-level tensor operations: transpose, tensor-times-vector (ttv),
// tensor-times-matrix (ttm), tensor-times-tensor (ttt) and the products
// derived from them. All kernels recurse over multi-iterators and contract
// fibers in place; nothing is unfolded and only the output is allocated.
//
// Modes and permutation tuples are one-based at this interface. Outputs are
// first-order tensors with zero offsets; scalar results are shape-{1}
// tensors.

#include <tensorlib/algorithm.hpp>
#include <tensorlib/errors.hpp>
#include <tensorlib/iterators.hpp>
#include <tensorlib/layout.hpp>
#include <tensorlib/tensor.hpp>

#include <cmath>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <type_traits>
#include <vector>

namespace tl {

template <TensorSource S>
using value_of = std::remove_const_t<typename S::value_type>;

/// Real type used for norms: double for integral scalars.
template <class T>
using real_t = std::conditional_t<std::is_integral_v<T>, double, T>;

/// (q, phi, psi) of a tensor-times-tensor product: A has q + r dimensions,
/// B has q + s; the first r (s) entries of phi (psi) give the free
/// dimensions in output order, the last q pair up the contracted ones.
struct ContractionSpec {
    std::size_t q = 0;
    std::size_t r = 0;
    std::size_t s = 0;
    std::vector<std::size_t> phi;
    std::vector<std::size_t> psi;

    friend bool operator==(const ContractionSpec&, const ContractionSpec&) = default;
};

namespace detail {

inline void require_permutation(std::span<const std::size_t> perm, std::size_t n, const char* what) {
    std::vector<bool> seen(n, false);
    bool ok = perm.size() == n;
    for (auto v : perm) {
        if (!ok) break;
        ok = v >= 1 && v <= n && !seen[v - 1];
        if (ok) seen[v - 1] = true;
    }
    if (!ok) throw argument_error(std::string(what) + " " + to_string(perm) + " is not a permutation of {1.." +
                                  std::to_string(n) + "}");
}

inline void require_mode(std::size_t m, std::size_t p, const char* op) {
    if (m < 1 || m > p)
        throw argument_error(std::string(op) + ": mode " + std::to_string(m) + " outside [1, " + std::to_string(p) +
                             "]");
}

template <class T>
Tensor<T> make_output(std::vector<std::size_t> extents) {
    if (extents.empty()) extents.push_back(1);
    return Tensor<T>(Shape(std::move(extents)));
}

// One-dimensional range of an order-1 operand, or of an order-2 operand with
// one unit extent (column or row vector).
template <class It>
struct VectorRange {
    decltype(std::declval<It>().begin(0)) first;
    std::size_t length;
};

template <class It>
VectorRange<It> as_vector(const It& it, const char* op) {
    if (it.order() == 1) return {it.begin(0), it.extent(0)};
    if (it.order() == 2 && it.extent(1) == 1) return {it.begin(0), it.extent(0)};
    if (it.order() == 2 && it.extent(0) == 1) return {it.begin(1), it.extent(1)};
    throw argument_error(std::string(op) + ": operand of shape " + to_string(it.extents()) + " is not a vector");
}

template <class ItA, class ItC>
void transpose_rec(std::size_t r, const std::size_t* tau, ItA a, ItC c) {
    auto fa = a.begin(tau[r]);
    const auto la = a.end(tau[r]);
    auto fc = c.begin(r);
    if (r > 0) {
        for (; fa != la; ++fa, ++fc) {
            a = fa;
            c = fc;
            transpose_rec(r - 1, tau, a, c);
        }
    } else {
        std::copy(fa, la, fc);
    }
}

// ttv over A dimensions r..0 (zero-based), skipping the contracted mode m.
// q is the matching output depth. The lowest free dimension (0, or 1 when
// m = 0) is the base case computing one fiber-vector inner product per
// output element.
template <class ItA, class VecIt, class ItC>
void ttv_rec(std::size_t m, std::size_t r, std::size_t q, ItA a, VecIt b, ItC c) {
    if (r == m) {
        ttv_rec(m, r - 1, q, a, b, c);
        return;
    }
    auto fa = a.begin(r);
    const auto la = a.end(r);
    auto fc = c.begin(q);
    const std::size_t base = m == 0 ? 1 : 0;
    if (r == base) {
        for (; fa != la; ++fa, ++fc) {
            a = fa;
            *fc = std::inner_product(a.begin(m), a.end(m), b, *fc);
        }
    } else {
        for (; fa != la; ++fa, ++fc) {
            a = fa;
            c = fc;
            ttv_rec(m, r - 1, q - 1, a, b, c);
        }
    }
}

// Innermost level: output fiber along m, one matrix row per element.
template <class ItA, class ItB, class ItC>
void ttm_fibers(std::size_t m, ItA a, ItB b, ItC c) {
    auto fc = c.begin(m);
    const auto lc = c.end(m);
    auto fb = b.begin(0);
    for (; fc != lc; ++fc, ++fb) {
        b = fb;
        *fc = std::inner_product(a.begin(m), a.end(m), b.begin(1), *fc);
    }
}

template <class ItA, class ItB, class ItC>
void ttm_rec(std::size_t m, std::size_t r, ItA a, ItB b, ItC c) {
    if (r == m) {
        ttm_rec(m, r - 1, a, b, c);
        return;
    }
    auto fa = a.begin(r);
    const auto la = a.end(r);
    auto fc = c.begin(r);
    const std::size_t base = m == 0 ? 1 : 0;
    for (; fa != la; ++fa, ++fc) {
        a = fa;
        c = fc;
        if (r == base)
            ttm_fibers(m, a, b, c);
        else
            ttm_rec(m, r - 1, a, b, c);
    }
}

// phi and psi are zero-based here. Depths k < r walk A's free dimensions,
// r <= k < r + s walk B's, the remaining depths walk contracted pairs with
// the last pair reduced by an inner product.
template <class ItA, class ItB, class ItC>
void ttt_rec(std::size_t k, std::size_t q, std::size_t r, std::size_t s, const std::size_t* phi,
             const std::size_t* psi, ItA a, ItB b, ItC c) {
    if (k < r) {
        auto fa = a.begin(phi[k]);
        const auto la = a.end(phi[k]);
        for (auto fc = c.begin(k); fa != la; ++fa, ++fc) {
            a = fa;
            c = fc;
            ttt_rec(k + 1, q, r, s, phi, psi, a, b, c);
        }
    } else if (k < r + s) {
        auto fb = b.begin(psi[k - r]);
        const auto lb = b.end(psi[k - r]);
        for (auto fc = c.begin(k); fb != lb; ++fb, ++fc) {
            b = fb;
            c = fc;
            ttt_rec(k + 1, q, r, s, phi, psi, a, b, c);
        }
    } else if (q == 0) {
        *c += *a * *b;
    } else if (k < r + s + q - 1) {
        auto fa = a.begin(phi[k - s]);
        const auto la = a.end(phi[k - s]);
        for (auto fb = b.begin(psi[k - r]); fa != la; ++fa, ++fb) {
            a = fa;
            b = fb;
            ttt_rec(k + 1, q, r, s, phi, psi, a, b, c);
        }
    } else {
        *c = std::inner_product(a.begin(phi[k - s]), a.end(phi[k - s]), b.begin(psi[k - r]), *c);
    }
}

template <class V>
const auto& deref(const V& v) {
    if constexpr (requires { v.get(); })
        return v.get();
    else if constexpr (std::is_pointer_v<V>)
        return *v;
    else
        return v;
}

} // namespace detail

/// C(i^c) = A(i^a) with i^c_r = i^a_{tau_r}; C has extents n_{tau_r}.
template <TensorSource A>
Tensor<value_of<A>> transpose(const A& a, std::span<const std::size_t> tau) {
    const auto p = a.order();
    detail::require_permutation(tau, p, "transposition tuple");
    std::vector<std::size_t> extents(p), zero_based(p);
    for (std::size_t r = 0; r < p; ++r) {
        zero_based[r] = tau[r] - 1;
        extents[r] = a.extents()[zero_based[r]];
    }
    auto c = detail::make_output<value_of<A>>(std::move(extents));
    detail::transpose_rec(p - 1, zero_based.data(), a.mbegin(), c.mbegin());
    return c;
}

template <TensorSource A>
Tensor<value_of<A>> transpose(const A& a, std::initializer_list<std::size_t> tau) {
    return transpose(a, std::span<const std::size_t>(tau.begin(), tau.size()));
}

/// m-mode tensor-times-vector product. `b` is an order-1 tensor or a
/// {n,1} / {1,n} tensor. An order-1 `a` yields the shape-{1} inner product.
template <TensorSource A, TensorSource B>
Tensor<value_of<A>> ttv(const A& a, const B& b, std::size_t m) {
    const auto p = a.order();
    detail::require_mode(m, p, "ttv");
    const auto bv = detail::as_vector(b.mbegin(), "ttv");
    if (bv.length != a.extents()[m - 1])
        throw argument_error("ttv: vector length " + std::to_string(bv.length) + " does not match extent " +
                             std::to_string(a.extents()[m - 1]) + " of mode " + std::to_string(m));
    std::vector<std::size_t> extents;
    for (std::size_t r = 0; r < p; ++r)
        if (r != m - 1) extents.push_back(a.extents()[r]);
    auto c = detail::make_output<value_of<A>>(std::move(extents));
    const auto ai = a.mbegin();
    if (p == 1) {
        c[0] = std::inner_product(ai.begin(0), ai.end(0), bv.first, value_of<A>{});
    } else {
        detail::ttv_rec(m - 1, p - 1, p - 2, ai, bv.first, c.mbegin());
    }
    return c;
}

/// m-mode tensor-times-matrix product with B of shape (n', n_m):
/// C(.., j, ..) = sum_{i_m} A(.., i_m, ..) B(j, i_m).
template <TensorSource A, TensorSource B>
Tensor<value_of<A>> ttm(const A& a, const B& b, std::size_t m) {
    const auto p = a.order();
    detail::require_mode(m, p, "ttm");
    if (b.order() != 2) throw argument_error("ttm: matrix operand must have order 2");
    if (b.extents()[1] != a.extents()[m - 1])
        throw argument_error("ttm: matrix shape " + to_string(b.extents()) + " does not match extent " +
                             std::to_string(a.extents()[m - 1]) + " of mode " + std::to_string(m));
    std::vector<std::size_t> extents(a.extents().begin(), a.extents().end());
    extents[m - 1] = b.extents()[0];
    auto c = detail::make_output<value_of<A>>(std::move(extents));
    if (p == 1)
        detail::ttm_fibers(0, a.mbegin(), b.mbegin(), c.mbegin());
    else
        detail::ttm_rec(m - 1, p - 1, a.mbegin(), b.mbegin(), c.mbegin());
    return c;
}

/// Checks `spec` against the operand extents; throws argument_error.
void validate_spec(const ContractionSpec& spec, std::span<const std::size_t> extents_a,
                   std::span<const std::size_t> extents_b);

/// Output extents (n^a_{phi_1..r}, n^b_{psi_1..s}); {1} for scalar results.
std::vector<std::size_t> ttt_extents(const ContractionSpec& spec, std::span<const std::size_t> extents_a,
                                     std::span<const std::size_t> extents_b);

/// (q, phi, psi)-mode tensor-times-tensor product.
template <TensorSource A, TensorSource B>
Tensor<value_of<A>> ttt(const A& a, const B& b, const ContractionSpec& spec) {
    validate_spec(spec, a.extents(), b.extents());
    auto c = detail::make_output<value_of<A>>(ttt_extents(spec, a.extents(), b.extents()));
    std::vector<std::size_t> phi(spec.phi.size()), psi(spec.psi.size());
    for (std::size_t k = 0; k < phi.size(); ++k) phi[k] = spec.phi[k] - 1;
    for (std::size_t k = 0; k < psi.size(); ++k) psi[k] = spec.psi[k] - 1;
    detail::ttt_rec(0, spec.q, spec.r, spec.s, phi.data(), psi.data(), a.mbegin(), b.mbegin(), c.mbegin());
    return c;
}

/// Spec under which ttt(A, b) equals ttv(A, b, m) for an order-p A.
ContractionSpec reduce_ttv_to_ttt(std::size_t p, std::size_t m);

/// Spec under which ttt(A, B) equals ttm(A, B, m) up to the position of the
/// new mode: ttt places it last. transpose(ttt(A, B, spec),
/// ttm_transposition(p, m)) equals ttm(A, B, m); for m = p no transposition
/// is needed.
ContractionSpec reduce_ttm_to_ttt(std::size_t p, std::size_t m);
std::vector<std::size_t> ttm_transposition(std::size_t p, std::size_t m);

/// C(i, j) = A(i) B(j).
template <TensorSource A, TensorSource B>
Tensor<value_of<A>> outer_product(const A& a, const B& b) {
    ContractionSpec spec{0, a.order(), b.order(), {}, {}};
    spec.phi.resize(a.order());
    spec.psi.resize(b.order());
    std::iota(spec.phi.begin(), spec.phi.end(), 1u);
    std::iota(spec.psi.begin(), spec.psi.end(), 1u);
    return ttt(a, b, spec);
}

/// sum_i A(i) B(i) over equal shapes.
template <TensorSource A, TensorSource B>
value_of<A> inner_product(const A& a, const B& b) {
    return tl::inner_product(a.mbegin(), b.mbegin(), value_of<A>{});
}

template <TensorSource A>
real_t<value_of<A>> frobenius_norm(const A& a) {
    using R = real_t<value_of<A>>;
    return std::sqrt(static_cast<R>(inner_product(a, a)));
}

/// Value of a single-element tensor (scalar contraction result).
template <class T>
const T& scalar(const Tensor<T>& t) {
    if (t.size() != 1) throw argument_error("scalar(): tensor has " + std::to_string(t.size()) + " elements");
    return t[0];
}

namespace detail {

inline void require_increasing_modes(std::span<const std::size_t> modes, std::size_t count, std::size_t p,
                                     const char* op) {
    if (modes.size() != count)
        throw argument_error(std::string(op) + ": " + std::to_string(count) + " operands but " +
                             std::to_string(modes.size()) + " modes");
    for (std::size_t k = 0; k < modes.size(); ++k) {
        require_mode(modes[k], p, op);
        if (k > 0 && modes[k] <= modes[k - 1])
            throw argument_error(std::string(op) + ": modes " + to_string(modes) + " are not strictly increasing");
    }
}

inline std::vector<std::size_t> all_modes_except(std::size_t p, std::size_t skip, const char* op) {
    require_mode(skip, p, op);
    std::vector<std::size_t> modes;
    for (std::size_t m = 1; m <= p; ++m)
        if (m != skip) modes.push_back(m);
    return modes;
}

template <class A, class Range, class Product>
Tensor<value_of<A>> sequence(const A& a, const Range& operands, std::span<const std::size_t> modes, Product product) {
    if (modes.empty()) {
        Tensor<value_of<A>> copy(Shape(std::vector<std::size_t>(a.extents().begin(), a.extents().end())));
        tl::copy(a.mbegin(), copy.mbegin());
        return copy;
    }
    // Highest mode first so lower mode numbers keep their positions.
    std::size_t k = modes.size() - 1;
    auto c = product(a, deref(operands[k]), modes[k]);
    while (k-- > 0) c = product(c, deref(operands[k]), modes[k]);
    return c;
}

} // namespace detail

/// Contracts `a` with vectors[k] along modes[k] (strictly increasing).
template <TensorSource A, class VectorRange>
Tensor<value_of<A>> times_vectors(const A& a, const VectorRange& vectors, std::span<const std::size_t> modes) {
    detail::require_increasing_modes(modes, std::size(vectors), a.order(), "times_vectors");
    return detail::sequence(a, vectors, modes,
                            [](const auto& x, const auto& v, std::size_t m) { return ttv(x, v, m); });
}

/// Contracts every mode except `skip` with the p - 1 given vectors.
template <TensorSource A, class VectorRange>
Tensor<value_of<A>> times_vectors(const A& a, const VectorRange& vectors, std::size_t skip) {
    const auto modes = detail::all_modes_except(a.order(), skip, "times_vectors");
    return times_vectors(a, vectors, std::span<const std::size_t>(modes));
}

template <TensorSource A, class MatrixRange>
Tensor<value_of<A>> times_matrices(const A& a, const MatrixRange& matrices, std::span<const std::size_t> modes) {
    detail::require_increasing_modes(modes, std::size(matrices), a.order(), "times_matrices");
    return detail::sequence(a, matrices, modes,
                            [](const auto& x, const auto& b, std::size_t m) { return ttm(x, b, m); });
}

} // namespace tl
