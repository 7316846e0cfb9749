#pragma once

#include <tensorlib/errors.hpp>
#include <tensorlib/iterators.hpp>
#include <tensorlib/layout.hpp>
#include <tensorlib/tensor.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <vector>

namespace tl {

/// Index selection (first, step, last) for one dimension. Bounds are
/// inclusive and offset-biased like the tensor's own indices. A
/// default-constructed range selects the whole dimension.
class Range {
public:
    Range() = default;
    Range(index_t index) : first_(index), last_(index), full_(false) {} // NOLINT: scalar sugar
    Range(index_t first, index_t last) : first_(first), last_(last), full_(false) {}
    Range(index_t first, index_t step, index_t last) : first_(first), step_(step), last_(last), full_(false) {
        if (step < 1) throw argument_error("range step must be >= 1, got " + std::to_string(step));
    }

    static Range all() { return {}; }

    bool full() const noexcept { return full_; }
    index_t first() const noexcept { return first_; }
    index_t step() const noexcept { return step_; }
    index_t last() const noexcept { return last_; }

    /// Number of selected indices, floor((l - f) / t) + 1.
    std::size_t extent() const noexcept { return static_cast<std::size_t>((last_ - first_) / step_ + 1); }

private:
    index_t first_ = 0;
    index_t step_ = 1;
    index_t last_ = 0;
    bool full_ = true;
};

enum class ViewKind { general, slice, fiber };

/// Non-owning rectangular selection of a tensor. The view has the target's
/// order (scalar ranges become extent-1 dimensions), layout and offsets;
/// element i' maps to memory index gamma + sum_r w_r t_r (i'_r - o_r).
///
/// No lifetime tracking: the target must outlive the view.
template <class T>
class TensorView {
public:
    using value_type = std::remove_const_t<T>;
    using element_type = T;

    // A mutable view needs a mutable target.
    template <class Target>
    static constexpr bool viewable = std::is_same_v<Target, Tensor<value_type>> ||
                                     (std::is_const_v<T> && std::is_same_v<Target, const Tensor<value_type>>);

    template <class Target>
        requires viewable<Target>
    TensorView(Target& target, std::span<const Range> ranges)
        : data_(target.data().data()), layout_(target.layout()),
          offsets_(target.offsets()), target_extents_(target.extents().begin(), target.extents().end()) {
        const auto p = target.order();
        if (ranges.size() != p)
            throw argument_error("view needs " + std::to_string(p) + " ranges, got " + std::to_string(ranges.size()));
        extents_.resize(p);
        strides_.resize(p);
        first_.resize(p);
        steps_.resize(p);
        for (std::size_t r = 0; r < p; ++r) {
            auto range = ranges[r];
            const auto lo = offsets_[r];
            const auto hi = lo + static_cast<index_t>(target_extents_[r]) - 1;
            if (range.full()) range = Range(lo, 1, hi);
            if (range.first() < lo || range.first() > range.last() || range.last() > hi)
                throw range_error("range (" + std::to_string(range.first()) + "," + std::to_string(range.step()) + "," +
                                  std::to_string(range.last()) + ") outside [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "] in dimension " + std::to_string(r + 1));
            first_[r] = range.first();
            steps_[r] = range.step();
            extents_[r] = range.extent();
            strides_[r] = target.strides()[r] * static_cast<std::size_t>(range.step());
        }
        gamma_ = memory_index(target.strides().values(), first_, offsets_.values());
    }

    template <class Target>
        requires viewable<Target>
    TensorView(Target& target, std::initializer_list<Range> ranges)
        : TensorView(target, std::span<const Range>(ranges.begin(), ranges.size())) {}

    std::size_t order() const noexcept { return extents_.size(); }
    std::span<const std::size_t> extents() const noexcept { return extents_; }
    Shape shape() const { return Shape(extents_); }
    std::size_t size() const noexcept { return tl::volume(extents_); }
    const Layout& layout() const noexcept { return layout_; }
    const Offsets& offsets() const noexcept { return offsets_; }
    /// Modified strides w''_r = w_r t_r.
    std::span<const std::size_t> strides() const noexcept { return strides_; }
    std::size_t gamma() const noexcept { return gamma_; }
    std::span<const index_t> firsts() const noexcept { return first_; }
    std::span<const index_t> steps() const noexcept { return steps_; }
    std::span<const std::size_t> target_extents() const noexcept { return target_extents_; }

    /// Memory index of view element i' (offset-biased), bounds-checked.
    std::size_t index_of(std::span<const index_t> i) const {
        if (i.size() != order())
            throw argument_error("expected " + std::to_string(order()) + " indices, got " + std::to_string(i.size()));
        for (std::size_t r = 0; r < order(); ++r) {
            const auto rel = i[r] - offsets_[r];
            if (rel < 0 || rel >= static_cast<index_t>(extents_[r]))
                throw bounds_error("view index " + to_string(i) + " outside view shape " + to_string(extents()));
        }
        return gamma_ + memory_index(strides_, i, offsets_.values());
    }

    T& at(std::span<const index_t> i) const { return data_[index_of(i)]; }
    T& at(std::initializer_list<index_t> i) const { return at(std::span<const index_t>(i.begin(), i.size())); }
    template <std::integral... I>
    T& operator()(I... i) const {
        const index_t idx[] = {static_cast<index_t>(i)...};
        return at(std::span<const index_t>(idx));
    }

    MultiIterator<T> mbegin() const noexcept {
        return {data_, static_cast<index_t>(gamma_), extents_, strides_};
    }

    /// Iterators over view dimension `dim` (one-based).
    StrideIterator<T> begin(std::size_t dim) const { return dim_iter(dim, false); }
    StrideIterator<T> end(std::size_t dim) const { return dim_iter(dim, true); }

    operator TensorView<const T>() const
        requires(!std::is_const_v<T>)
    {
        return TensorView<const T>(*this);
    }

private:
    template <class U>
    friend class TensorView;

    template <class U>
        requires(std::is_const_v<T> && std::is_same_v<std::remove_const_t<T>, U>)
    explicit TensorView(const TensorView<U>& other)
        : data_(other.data_), layout_(other.layout_), offsets_(other.offsets_),
          target_extents_(other.target_extents_), extents_(other.extents_), strides_(other.strides_),
          first_(other.first_), steps_(other.steps_), gamma_(other.gamma_) {}

    StrideIterator<T> dim_iter(std::size_t dim, bool end) const {
        if (dim < 1 || dim > order())
            throw argument_error("dimension " + std::to_string(dim) + " outside [1, " + std::to_string(order()) + "]");
        const auto r = dim - 1;
        const auto w = static_cast<index_t>(strides_[r]);
        auto pos = static_cast<index_t>(gamma_);
        if (end) pos += static_cast<index_t>(extents_[r]) * w;
        return {data_, pos, w};
    }

    T* data_;
    Layout layout_;
    Offsets offsets_;
    std::vector<std::size_t> target_extents_;
    std::vector<std::size_t> extents_;
    std::vector<std::size_t> strides_;
    std::vector<index_t> first_;
    std::vector<index_t> steps_;
    std::size_t gamma_ = 0;
};

template <class T>
TensorView(Tensor<T>&, std::span<const Range>) -> TensorView<T>;
template <class T>
TensorView(const Tensor<T>&, std::span<const Range>) -> TensorView<const T>;
template <class T>
TensorView(Tensor<T>&, std::initializer_list<Range>) -> TensorView<T>;
template <class T>
TensorView(const Tensor<T>&, std::initializer_list<Range>) -> TensorView<const T>;

template <class T>
TensorView<T> make_view(Tensor<T>& t, std::span<const Range> ranges) {
    return TensorView<T>(t, ranges);
}
template <class T>
TensorView<const T> make_view(const Tensor<T>& t, std::span<const Range> ranges) {
    return TensorView<const T>(t, ranges);
}

template <class T>
TensorView<T> Tensor<T>::view(std::span<const Range> ranges) {
    return TensorView<T>(*this, ranges);
}
template <class T>
TensorView<const T> Tensor<T>::view(std::span<const Range> ranges) const {
    return TensorView<const T>(*this, ranges);
}
template <class T>
TensorView<T> Tensor<T>::view(std::initializer_list<Range> ranges) {
    return TensorView<T>(*this, ranges);
}
template <class T>
TensorView<const T> Tensor<T>::view(std::initializer_list<Range> ranges) const {
    return TensorView<const T>(*this, ranges);
}

/// slice: exactly two extents exceed one and both equal the target's;
/// fiber: exactly one extent exceeds one; general otherwise.
template <class T>
ViewKind classify_view(const TensorView<T>& v) {
    std::size_t free = 0;
    bool full = true;
    for (std::size_t r = 0; r < v.order(); ++r) {
        if (v.extents()[r] > 1) {
            ++free;
            full = full && v.extents()[r] == v.target_extents()[r];
        }
    }
    if (free == 1) return ViewKind::fiber;
    if (free == 2 && full) return ViewKind::slice;
    return ViewKind::general;
}

/// Copies the view into a fresh first-order, zero-offset tensor.
template <class T>
Tensor<std::remove_const_t<T>> materialize(const TensorView<T>& v) {
    Tensor<std::remove_const_t<T>> out(v.shape());
    auto kernel = [](auto first, auto last, auto dst) { std::copy(first, last, dst); };
    detail::lockstep(v.order() - 1, kernel, v.mbegin(), out.mbegin());
    return out;
}

} // namespace tl
