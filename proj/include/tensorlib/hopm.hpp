#pragma once

// Higher-order power method for the best rank-one approximation
// A ~ lambda u_1 o u_2 o ... o u_p of a real tensor.

#include <tensorlib/algorithm.hpp>
#include <tensorlib/contraction.hpp>
#include <tensorlib/errors.hpp>
#include <tensorlib/tensor.hpp>

#include <cmath>
#include <concepts>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace tl {

struct HopmOptions {
    std::size_t max_sweeps = 50;
    /// Stop once |lambda_k - lambda_{k-1}| < tol; never checked after the
    /// first sweep.
    double tol = 1e-10;
};

template <std::floating_point T>
struct HopmState {
    std::vector<Tensor<T>> u; ///< unit vectors, order-1 tensors of lengths n_1..n_p
    std::vector<T> l;         ///< per-mode norms of the last sweep
    std::size_t sweeps = 0;
    bool converged = false;
    std::vector<T> lambda_history;   ///< l_p after each sweep
    std::vector<T> residual_history; ///< ||A - lambda u_1 o ... o u_p|| after each sweep

    T lambda() const { return l.back(); }
};

/// All-ones vectors scaled to unit norm, one per mode of `a`.
template <std::floating_point T>
std::vector<Tensor<T>> default_initial_vectors(const Tensor<T>& a) {
    std::vector<Tensor<T>> u;
    for (std::size_t r = 0; r < a.order(); ++r) {
        const auto n = a.extents()[r];
        Tensor<T> v(Shape{n});
        v.fill(T(1) / std::sqrt(static_cast<T>(n)));
        u.push_back(std::move(v));
    }
    return u;
}

/// B(i) = lambda * prod_r u_r(i_r), first-order with zero offsets.
template <std::floating_point T>
Tensor<T> rank_one_compose(T lambda, std::span<const Tensor<T>> u) {
    if (u.empty()) throw argument_error("rank_one_compose: need at least one vector");
    std::vector<std::size_t> extents;
    for (const auto& v : u) {
        if (v.order() != 1) throw argument_error("rank_one_compose: factors must be order-1 tensors");
        extents.push_back(v.size());
    }
    Tensor<T> b{Shape(extents)};
    // First-order storage: memory index j enumerates multi-indices colexicographically.
    std::vector<std::size_t> idx(u.size(), 0);
    for (std::size_t j = 0; j < b.size(); ++j) {
        T value = lambda;
        for (std::size_t r = 0; r < u.size(); ++r) value *= u[r][idx[r]];
        b[j] = value;
        for (std::size_t r = 0; r < u.size() && ++idx[r] == extents[r]; ++r) idx[r] = 0;
    }
    return b;
}

/// ||A - lambda u_1 o ... o u_p||_F.
template <std::floating_point T>
T rank_one_residual(const Tensor<T>& a, T lambda, std::span<const Tensor<T>> u) {
    const auto b = rank_one_compose(lambda, u);
    detail::require_same_extents(a, b, "residual");
    Tensor<T> diff(b.shape());
    tl::transform(a.mbegin(), b.mbegin(), diff.mbegin(), std::minus<>{});
    return frobenius_norm(diff);
}

template <std::floating_point T>
T residual(const Tensor<T>& a, const HopmState<T>& state) {
    return rank_one_residual(a, state.lambda(), std::span<const Tensor<T>>(state.u));
}

/// Runs up to options.max_sweeps sweeps. Each sweep updates, for r = 1..p,
/// u_r <- A contracted with all other u's, l_r <- ||u_r||, u_r <- u_r / l_r.
/// Throws degenerate_error when some l_r is zero.
template <std::floating_point T>
HopmState<T> hopm(const Tensor<T>& a, std::vector<Tensor<T>> u0, const HopmOptions& options = {}) {
    const auto p = a.order();
    if (options.max_sweeps < 1) throw argument_error("hopm: need at least one sweep");
    if (u0.size() != p)
        throw argument_error("hopm: expected " + std::to_string(p) + " initial vectors, got " +
                             std::to_string(u0.size()));

    HopmState<T> state;
    state.l.assign(p, T(0));
    for (std::size_t r = 0; r < p; ++r) {
        auto& v = u0[r];
        if (v.order() != 1) v.reshape(Shape{v.size()});
        if (v.size() != a.extents()[r])
            throw argument_error("hopm: initial vector " + std::to_string(r + 1) + " has length " +
                                 std::to_string(v.size()) + ", expected " + std::to_string(a.extents()[r]));
        const auto norm = frobenius_norm(v);
        if (norm == T(0)) throw degenerate_error("hopm: initial vector " + std::to_string(r + 1) + " is zero", 0, r + 1);
        Tensor<T> unit(Shape{v.size()});
        tl::transform(v.mbegin(), unit.mbegin(), [norm](T x) { return x / norm; });
        state.u.push_back(std::move(unit));
    }

    std::vector<std::reference_wrapper<const Tensor<T>>> others;
    for (std::size_t k = 1; k <= options.max_sweeps; ++k) {
        for (std::size_t r = 0; r < p; ++r) {
            others.clear();
            for (std::size_t q = 0; q < p; ++q)
                if (q != r) others.emplace_back(state.u[q]);
            auto next = times_vectors(a, others, r + 1);
            if (next.order() != 1) next.reshape(Shape{next.size()});
            const auto norm = frobenius_norm(next);
            if (norm == T(0))
                throw degenerate_error("hopm: zero vector for mode " + std::to_string(r + 1) + " in sweep " +
                                           std::to_string(k),
                                       k, r + 1);
            for (auto& x : next.data()) x /= norm;
            state.u[r] = std::move(next);
            state.l[r] = norm;
        }
        state.sweeps = k;
        state.lambda_history.push_back(state.lambda());
        state.residual_history.push_back(residual(a, state));
        if (k > 1) {
            const auto prev = state.lambda_history[k - 2];
            if (std::abs(state.lambda() - prev) < static_cast<T>(options.tol)) {
                state.converged = true;
                break;
            }
        }
    }
    return state;
}

template <std::floating_point T>
HopmState<T> hopm(const Tensor<T>& a, const HopmOptions& options = {}) {
    return hopm(a, default_initial_vectors(a), options);
}

} // namespace tl
