#pragma once

#include <tensorlib/errors.hpp>
#include <tensorlib/iterators.hpp>
#include <tensorlib/layout.hpp>

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace tl {

/// Anything the algorithms can read: a tensor or a view exposing a
/// multi-iterator plus its extents.
template <class S>
concept TensorSource = requires(const S& s) {
    typename S::value_type;
    { s.order() } -> std::convertible_to<std::size_t>;
    { s.extents() } -> std::convertible_to<std::span<const std::size_t>>;
    s.mbegin();
};

template <class T>
class TensorView;
class Range;

/// Dense tensor of runtime order with arbitrary index offsets and
/// non-hierarchical layout. Elements live contiguously and are addressed by
/// memory index j; multi-index access is layout-transparent.
///
/// Copy construction and copy assignment are plain value copies. assign()
/// provides the shape-adopting, layout-preserving assignment.
template <class T>
class Tensor {
public:
    using value_type = T;
    using element_type = T;

    explicit Tensor(Shape shape) : Tensor(TensorMeta(std::move(shape))) {}
    Tensor(Shape shape, Offsets offsets) : Tensor(TensorMeta(std::move(shape), std::move(offsets))) {}
    Tensor(Shape shape, Layout layout) : Tensor(TensorMeta(std::move(shape), std::move(layout))) {}
    Tensor(Shape shape, Offsets offsets, Layout layout)
        : Tensor(TensorMeta(std::move(shape), std::move(offsets), std::move(layout))) {}
    explicit Tensor(TensorMeta meta) : meta_(std::move(meta)), data_(meta_.volume(), T{}) {}

    /// Takes `data` in memory-index order.
    Tensor(TensorMeta meta, std::vector<T> data) : meta_(std::move(meta)), data_(std::move(data)) {
        if (data_.size() != meta_.volume())
            throw argument_error("data length " + std::to_string(data_.size()) + " does not match volume " +
                                 std::to_string(meta_.volume()));
    }

    const TensorMeta& meta() const noexcept { return meta_; }
    std::size_t order() const noexcept { return meta_.order(); }
    std::size_t size() const noexcept { return data_.size(); }
    const Shape& shape() const noexcept { return meta_.shape(); }
    std::span<const std::size_t> extents() const noexcept { return meta_.shape().extents(); }
    const Layout& layout() const noexcept { return meta_.layout(); }
    const Offsets& offsets() const noexcept { return meta_.offsets(); }
    const Strides& strides() const noexcept { return meta_.strides(); }

    std::span<T> data() noexcept { return data_; }
    std::span<const T> data() const noexcept { return data_; }

    // Multi-index access (offset-biased indices, bounds-checked).
    T& at(std::span<const index_t> i) { return data_[meta_.index_of(i)]; }
    const T& at(std::span<const index_t> i) const { return data_[meta_.index_of(i)]; }
    T& at(std::initializer_list<index_t> i) { return at(std::span<const index_t>(i.begin(), i.size())); }
    const T& at(std::initializer_list<index_t> i) const {
        return at(std::span<const index_t>(i.begin(), i.size()));
    }

    template <std::integral... I>
    T& operator()(I... i) {
        const index_t idx[] = {static_cast<index_t>(i)...};
        return at(std::span<const index_t>(idx));
    }
    template <std::integral... I>
    const T& operator()(I... i) const {
        const index_t idx[] = {static_cast<index_t>(i)...};
        return at(std::span<const index_t>(idx));
    }

    // Memory access by j, unchecked and checked.
    T& operator[](std::size_t j) noexcept { return data_[j]; }
    const T& operator[](std::size_t j) const noexcept { return data_[j]; }
    const T& get_memory(std::size_t j) const {
        check_memory(j);
        return data_[j];
    }
    void set_memory(std::size_t j, T v) {
        check_memory(j);
        data_[j] = std::move(v);
    }

    void fill(const T& v) { std::ranges::fill(data_, v); }
    Tensor& operator=(const T& v) {
        fill(v);
        return *this;
    }

    /// Adopts the source's shape and copies element values by multi-index.
    /// With equal orders the destination keeps its own layout and offsets;
    /// otherwise it takes the source's layout and offsets.
    template <TensorSource Src>
    void assign(const Src& src);

    /// Reorders the data for a new layout; element values per multi-index
    /// are unchanged.
    void relayout(Layout layout) {
        if (layout.order() != order())
            throw argument_error("relayout: layout " + to_string(layout.perm()) + " does not match order " +
                                 std::to_string(order()));
        if (layout == meta_.layout()) return;
        Tensor other(TensorMeta(meta_.shape(), meta_.offsets(), std::move(layout)));
        other.copy_values_from(*this);
        *this = std::move(other);
    }

    /// Replaces the shape while keeping the memory-order element sequence.
    void reshape(Shape shape) {
        if (shape.volume() != meta_.volume())
            throw argument_error("reshape: volume " + std::to_string(shape.volume()) + " differs from " +
                                 std::to_string(meta_.volume()));
        meta_.set_shape(std::move(shape));
    }

    MultiIterator<T> mbegin() noexcept {
        return {data_.data(), 0, meta_.shape().extents(), meta_.strides().values()};
    }
    MultiIterator<const T> mbegin() const noexcept {
        return {data_.data(), 0, meta_.shape().extents(), meta_.strides().values()};
    }

    /// Iterators over dimension `dim` (one-based). `fixed` selects the
    /// remaining coordinates; its entry for `dim` is ignored.
    StrideIterator<T> begin(std::size_t dim) { return dim_iter(data_.data(), dim, nullptr, false); }
    StrideIterator<T> end(std::size_t dim) { return dim_iter(data_.data(), dim, nullptr, true); }
    StrideIterator<const T> begin(std::size_t dim) const { return dim_iter(data_.data(), dim, nullptr, false); }
    StrideIterator<const T> end(std::size_t dim) const { return dim_iter(data_.data(), dim, nullptr, true); }
    StrideIterator<T> begin(std::size_t dim, std::span<const index_t> fixed) {
        return dim_iter(data_.data(), dim, &fixed, false);
    }
    StrideIterator<T> end(std::size_t dim, std::span<const index_t> fixed) {
        return dim_iter(data_.data(), dim, &fixed, true);
    }
    StrideIterator<const T> begin(std::size_t dim, std::span<const index_t> fixed) const {
        return dim_iter(data_.data(), dim, &fixed, false);
    }
    StrideIterator<const T> end(std::size_t dim, std::span<const index_t> fixed) const {
        return dim_iter(data_.data(), dim, &fixed, true);
    }

    /// Views; see tensor_view.hpp.
    TensorView<T> view(std::span<const Range> ranges);
    TensorView<const T> view(std::span<const Range> ranges) const;
    TensorView<T> view(std::initializer_list<Range> ranges);
    TensorView<const T> view(std::initializer_list<Range> ranges) const;

private:
    void check_memory(std::size_t j) const {
        if (j >= data_.size())
            throw bounds_error("memory index " + std::to_string(j) + " outside [0, " + std::to_string(data_.size()) +
                               ")");
    }

    template <class Src>
    void copy_values_from(const Src& src) {
        auto kernel = [](auto first, auto last, auto out) { std::copy(first, last, out); };
        detail::lockstep(order() - 1, kernel, src.mbegin(), mbegin());
    }

    template <class U>
    StrideIterator<U> dim_iter(U* base, std::size_t dim, const std::span<const index_t>* fixed, bool end) const {
        if (dim < 1 || dim > order())
            throw argument_error("dimension " + std::to_string(dim) + " outside [1, " + std::to_string(order()) + "]");
        const auto r = dim - 1;
        index_t pos = 0;
        if (fixed) {
            std::vector<index_t> idx(fixed->begin(), fixed->end());
            if (idx.size() != order()) throw argument_error("fixed multi-index has wrong length");
            idx[r] = offsets()[r];
            pos = static_cast<index_t>(meta_.index_of(idx));
        }
        const auto w = static_cast<index_t>(strides()[r]);
        if (end) pos += static_cast<index_t>(shape()[r]) * w;
        return {base, pos, w};
    }

    TensorMeta meta_;
    std::vector<T> data_;
};

template <class T>
template <TensorSource Src>
void Tensor<T>::assign(const Src& src) {
    if constexpr (std::is_same_v<Src, Tensor<T>>) {
        if (&src == this) return;
    }
    const Shape src_shape(std::vector<std::size_t>(src.extents().begin(), src.extents().end()));
    // Always copy into fresh storage so that a view of *this is a valid source.
    Tensor fresh = src.order() != order() ? Tensor(TensorMeta(src_shape, src.offsets(), src.layout()))
                                          : Tensor(TensorMeta(src_shape, offsets(), layout()));
    fresh.copy_values_from(src);
    *this = std::move(fresh);
}

/// Equal orders, equal shapes and equal values at every zero-based
/// multi-index. Layouts and offsets are ignored.
template <TensorSource A, TensorSource B>
bool tensors_equal(const A& a, const B& b) {
    if (!detail::same_extents(a, b)) return false;
    bool equal = true;
    auto kernel = [&equal](auto first, auto last, auto other) {
        if (equal) equal = std::equal(first, last, other);
    };
    detail::lockstep(a.order() - 1, kernel, a.mbegin(), b.mbegin());
    return equal;
}

/// Builds a tensor from values listed in memory-index order.
template <class T>
Tensor<T> make_tensor(Shape shape, std::vector<T> data, Layout layout, Offsets offsets = {}) {
    return Tensor<T>(TensorMeta(std::move(shape), std::move(offsets), std::move(layout)), std::move(data));
}

template <class T>
Tensor<T> make_tensor(Shape shape, std::vector<T> data) {
    const auto p = shape.order();
    return make_tensor<T>(std::move(shape), std::move(data), Layout::first_order(p));
}

} // namespace tl
