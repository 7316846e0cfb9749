#pragma once

// Addressing algebra for dense tensors with runtime order, extents, index
// offsets and non-hierarchical storage layouts.
//
// Conventions:
//   - dimensions are numbered 1..p wherever a layout tuple is involved
//     (Layout stores one-based permutations);
//   - multi-indices are signed and carry the tensor's index offsets, i.e.
//     dimension r accepts o_r <= i_r < o_r + n_r;
//   - memory indices j are zero-based positions in the contiguous buffer.

#include <tensorlib/errors.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace tl {

using index_t = std::ptrdiff_t;

/// Extents n_1..n_p of a tensor. Order p >= 1, every extent >= 1 and the
/// volume must fit into std::size_t.
class Shape {
public:
    Shape(std::initializer_list<std::size_t> extents);
    explicit Shape(std::vector<std::size_t> extents);

    std::size_t order() const noexcept { return extents_.size(); }
    std::size_t volume() const noexcept { return volume_; }
    std::size_t operator[](std::size_t r) const { return extents_[r]; }
    std::span<const std::size_t> extents() const noexcept { return extents_; }
    const std::vector<std::size_t>& vec() const noexcept { return extents_; }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    void validate();

    std::vector<std::size_t> extents_;
    std::size_t volume_ = 1;
};

/// One-based permutation pi of {1..p}; pi_q is the dimension with storage
/// precedence q.
class Layout {
public:
    Layout(std::initializer_list<std::size_t> perm);
    explicit Layout(std::vector<std::size_t> perm);

    static Layout first_order(std::size_t p);
    static Layout last_order(std::size_t p);

    std::size_t order() const noexcept { return perm_.size(); }
    std::size_t operator[](std::size_t q) const { return perm_[q]; }
    std::span<const std::size_t> perm() const noexcept { return perm_; }
    const std::vector<std::size_t>& vec() const noexcept { return perm_; }

    friend bool operator==(const Layout&, const Layout&) = default;

private:
    std::vector<std::size_t> perm_;
};

class Offsets {
public:
    Offsets() = default;
    Offsets(std::initializer_list<index_t> offsets) : offsets_(offsets) {}
    explicit Offsets(std::vector<index_t> offsets) : offsets_(std::move(offsets)) {}

    static Offsets zeros(std::size_t p) { return Offsets(std::vector<index_t>(p, 0)); }

    std::size_t order() const noexcept { return offsets_.size(); }
    index_t operator[](std::size_t r) const { return offsets_[r]; }
    std::span<const index_t> values() const noexcept { return offsets_; }
    const std::vector<index_t>& vec() const noexcept { return offsets_; }

    friend bool operator==(const Offsets&, const Offsets&) = default;

private:
    std::vector<index_t> offsets_;
};

/// Per-dimension strides w_1..w_p (indexed by dimension, not by precedence).
class Strides {
public:
    Strides() = default;
    Strides(std::initializer_list<std::size_t> strides) : strides_(strides) {}
    explicit Strides(std::vector<std::size_t> strides) : strides_(std::move(strides)) {}

    std::size_t order() const noexcept { return strides_.size(); }
    std::size_t operator[](std::size_t r) const { return strides_[r]; }
    std::span<const std::size_t> values() const noexcept { return strides_; }
    const std::vector<std::size_t>& vec() const noexcept { return strides_; }

    friend bool operator==(const Strides&, const Strides&) = default;

private:
    std::vector<std::size_t> strides_;
};

inline Layout first_order_layout(std::size_t p) { return Layout::first_order(p); }
inline Layout last_order_layout(std::size_t p) { return Layout::last_order(p); }

/// w_{pi_1} = 1 and w_{pi_r} = n_{pi_1} * ... * n_{pi_{r-1}}.
Strides compute_strides(const Shape& shape, const Layout& layout);

/// Product of all extents. Throws argument_error on overflow.
std::size_t volume(std::span<const std::size_t> extents);
inline std::size_t volume(const Shape& shape) { return shape.volume(); }

/// j = sum_r w_r (i_r - o_r). No bounds check.
std::size_t memory_index(std::span<const std::size_t> strides, std::span<const index_t> multi_index,
                         std::span<const index_t> offsets);
inline std::size_t memory_index(const Strides& w, std::span<const index_t> i, const Offsets& o) {
    return memory_index(w.values(), i, o.values());
}

/// Shape, layout, offsets and the strides derived from them.
class TensorMeta {
public:
    explicit TensorMeta(Shape shape);
    TensorMeta(Shape shape, Offsets offsets);
    TensorMeta(Shape shape, Offsets offsets, Layout layout);
    TensorMeta(Shape shape, Layout layout);

    std::size_t order() const noexcept { return shape_.order(); }
    std::size_t volume() const noexcept { return shape_.volume(); }
    const Shape& shape() const noexcept { return shape_; }
    const Layout& layout() const noexcept { return layout_; }
    const Offsets& offsets() const noexcept { return offsets_; }
    const Strides& strides() const noexcept { return strides_; }

    void set_layout(Layout layout);
    /// Replaces the shape. The layout is kept when the order is unchanged and
    /// reset to first-order otherwise; offsets are kept or reset to zero by
    /// the same rule.
    void set_shape(Shape shape);

    /// Bounds-checked memory index of an offset-biased multi-index.
    std::size_t index_of(std::span<const index_t> multi_index) const;
    bool contains(std::span<const index_t> multi_index) const noexcept;

    friend bool operator==(const TensorMeta&, const TensorMeta&) = default;

private:
    void validate() const;

    Shape shape_;
    Layout layout_;
    Offsets offsets_;
    Strides strides_;
};

/// Zero-based multi-index i with sum_r w_r i_r = j. Throws argument_error if
/// j is not a valid memory index.
std::vector<index_t> inverse_memory_index(const TensorMeta& meta, std::size_t j);

std::string to_string(std::span<const std::size_t> values);
std::string to_string(std::span<const index_t> values);

} // namespace tl
