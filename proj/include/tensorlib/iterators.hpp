#pragma once

#include <tensorlib/errors.hpp>
#include <tensorlib/layout.hpp>

#include <cassert>
#include <algorithm>
#include <compare>
#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <tuple>
#include <type_traits>

namespace tl {

/// Random-access iterator over one dimension of a tensor or view. Holds the
/// data handle, a memory index position and a stride; advancing by one moves
/// the position by one stride.
template <class T>
class StrideIterator {
public:
    using iterator_concept = std::random_access_iterator_tag;
    using iterator_category = std::random_access_iterator_tag;
    using value_type = std::remove_const_t<T>;
    using difference_type = std::ptrdiff_t;
    using pointer = T*;
    using reference = T&;

    StrideIterator() = default;
    StrideIterator(T* base, index_t position, index_t stride) noexcept
        : base_(base), pos_(position), stride_(stride) {}

    template <class U>
        requires(std::is_const_v<T> && std::is_same_v<std::remove_const_t<T>, U>)
    StrideIterator(const StrideIterator<U>& other) noexcept
        : base_(other.base()), pos_(other.position()), stride_(other.stride()) {}

    T* base() const noexcept { return base_; }
    index_t position() const noexcept { return pos_; }
    index_t stride() const noexcept { return stride_; }

    reference operator*() const noexcept { return base_[pos_]; }
    pointer operator->() const noexcept { return base_ + pos_; }
    reference operator[](difference_type k) const noexcept { return base_[pos_ + k * stride_]; }

    StrideIterator& operator++() noexcept { pos_ += stride_; return *this; }
    StrideIterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
    StrideIterator& operator--() noexcept { pos_ -= stride_; return *this; }
    StrideIterator operator--(int) noexcept { auto t = *this; --*this; return t; }
    StrideIterator& operator+=(difference_type k) noexcept { pos_ += k * stride_; return *this; }
    StrideIterator& operator-=(difference_type k) noexcept { pos_ -= k * stride_; return *this; }

    friend StrideIterator operator+(StrideIterator it, difference_type k) noexcept { return it += k; }
    friend StrideIterator operator+(difference_type k, StrideIterator it) noexcept { return it += k; }
    friend StrideIterator operator-(StrideIterator it, difference_type k) noexcept { return it -= k; }
    friend difference_type operator-(const StrideIterator& a, const StrideIterator& b) noexcept {
        assert(a.stride_ == b.stride_ && a.stride_ != 0);
        return (a.pos_ - b.pos_) / a.stride_;
    }

    friend bool operator==(const StrideIterator& a, const StrideIterator& b) noexcept {
        return a.pos_ == b.pos_ && a.stride_ == b.stride_;
    }
    friend std::strong_ordering operator<=>(const StrideIterator& a, const StrideIterator& b) noexcept {
        // Assumes positive strides, which every tensor and view produces.
        return a.pos_ <=> b.pos_;
    }

private:
    T* base_ = nullptr;
    index_t pos_ = 0;
    index_t stride_ = 1;
};

static_assert(std::random_access_iterator<StrideIterator<double>>);
static_assert(std::random_access_iterator<StrideIterator<const double>>);

/// Cursor over the multi-index set of a tensor or view and factory for the
/// per-dimension StrideIterator pairs. Dimensions are zero-based here: the
/// recursive kernels walk depths p-1 .. 0.
///
/// The extents and strides are borrowed from the tensor or view that created
/// the iterator, which must outlive it.
template <class T>
class MultiIterator {
public:
    using value_type = std::remove_const_t<T>;
    using element_type = T;

    MultiIterator() = default;
    MultiIterator(T* base, index_t position, std::span<const std::size_t> extents,
                  std::span<const std::size_t> strides) noexcept
        : base_(base), pos_(position), extents_(extents.data()), strides_(strides.data()),
          order_(extents.size()) {
        assert(extents.size() == strides.size());
    }

    template <class U>
        requires(std::is_const_v<T> && std::is_same_v<std::remove_const_t<T>, U>)
    MultiIterator(const MultiIterator<U>& other) noexcept
        : base_(other.base()), pos_(other.position()), extents_(other.extents().data()),
          strides_(other.strides().data()), order_(other.order()) {}

    std::size_t order() const noexcept { return order_; }
    std::span<const std::size_t> extents() const noexcept { return {extents_, order_}; }
    std::span<const std::size_t> strides() const noexcept { return {strides_, order_}; }
    std::size_t extent(std::size_t r) const noexcept { return extents_[r]; }
    index_t stride(std::size_t r) const noexcept { return static_cast<index_t>(strides_[r]); }
    T* base() const noexcept { return base_; }
    index_t position() const noexcept { return pos_; }

    std::size_t volume() const noexcept {
        std::size_t v = 1;
        for (std::size_t r = 0; r < order_; ++r) v *= extents_[r];
        return v;
    }

    StrideIterator<T> begin(std::size_t r) const {
        check(r);
        return {base_, pos_, stride(r)};
    }
    StrideIterator<T> end(std::size_t r) const {
        check(r);
        return {base_, pos_ + static_cast<index_t>(extents_[r]) * stride(r), stride(r)};
    }

    /// Moves the cursor to the position of `it`; extents and strides stay.
    MultiIterator& operator=(const StrideIterator<T>& it) noexcept {
        pos_ = it.position();
        return *this;
    }

    T& operator*() const noexcept { return base_[pos_]; }

    friend bool operator==(const MultiIterator& a, const MultiIterator& b) noexcept {
        return a.base_ == b.base_ && a.pos_ == b.pos_ && a.extents_ == b.extents_;
    }

private:
    void check(std::size_t r) const {
        if (r >= order_)
            throw argument_error("multi-iterator dimension " + std::to_string(r) + " out of range for order " +
                                 std::to_string(order_));
    }

    T* base_ = nullptr;
    index_t pos_ = 0;
    const std::size_t* extents_ = nullptr;
    const std::size_t* strides_ = nullptr;
    std::size_t order_ = 0;
};

template <class It>
concept MultiIteratorLike = requires(const It& it) {
    typename It::value_type;
    { it.order() } -> std::convertible_to<std::size_t>;
    { it.extents() } -> std::convertible_to<std::span<const std::size_t>>;
    it.begin(std::size_t{0});
    it.end(std::size_t{0});
};

namespace detail {

/// Walks the multi-index sets of all iterators in lockstep, dimension p-1
/// outermost and dimension 0 innermost. At depth 0 `kernel` receives the
/// flat ranges (begin(0), end(0)) of the first iterator and begin(0) of the
/// others. All iterators must share extents.
template <class Kernel, class First, class... Rest>
void lockstep(std::size_t r, Kernel& kernel, First first, Rest... rest) {
    auto f = first.begin(r);
    const auto l = first.end(r);
    if (r > 0) {
        auto others = std::make_tuple(rest.begin(r)...);
        for (; f != l; ++f) {
            first = f;
            std::apply([&](const auto&... o) { ((rest = o), ...); }, others);
            lockstep(r - 1, kernel, first, rest...);
            std::apply([](auto&... o) { (++o, ...); }, others);
        }
    } else {
        kernel(f, l, rest.begin(0)...);
    }
}

template <class A, class B>
bool same_extents(const A& a, const B& b) {
    const auto ea = a.extents();
    const auto eb = b.extents();
    return std::equal(ea.begin(), ea.end(), eb.begin(), eb.end());
}

template <class A, class B>
void require_same_extents(const A& a, const B& b, const char* op) {
    if (!same_extents(a, b))
        throw argument_error(std::string(op) + ": shape mismatch " + to_string(a.extents()) + " vs " +
                             to_string(b.extents()));
}

} // namespace detail

} // namespace tl
