#include <tensorlib/layout.hpp>

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace tl {

namespace {

template <class Seq>
std::string join(const Seq& values) {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) out << ',';
        out << values[k];
    }
    out << '}';
    return out.str();
}

} // namespace

std::string to_string(std::span<const std::size_t> values) { return join(values); }
std::string to_string(std::span<const index_t> values) { return join(values); }

std::size_t volume(std::span<const std::size_t> extents) {
    std::size_t v = 1;
    for (auto n : extents) {
        if (n != 0 && v > std::numeric_limits<std::size_t>::max() / n)
            throw argument_error("tensor volume overflows: " + to_string(extents));
        v *= n;
    }
    return v;
}

Shape::Shape(std::initializer_list<std::size_t> extents) : extents_(extents) { validate(); }

Shape::Shape(std::vector<std::size_t> extents) : extents_(std::move(extents)) { validate(); }

void Shape::validate() {
    if (extents_.empty()) throw argument_error("shape must have order >= 1");
    if (std::ranges::find(extents_, 0u) != extents_.end())
        throw argument_error("shape extents must be >= 1: " + to_string(extents_));
    volume_ = tl::volume(extents_);
    // Memory indices are also handled as signed positions by the iterators.
    if (volume_ > static_cast<std::size_t>(std::numeric_limits<index_t>::max()))
        throw argument_error("tensor volume exceeds the signed index range");
}

Layout::Layout(std::initializer_list<std::size_t> perm) : Layout(std::vector<std::size_t>(perm)) {}

Layout::Layout(std::vector<std::size_t> perm) : perm_(std::move(perm)) {
    if (perm_.empty()) throw argument_error("layout tuple must have length >= 1");
    auto sorted = perm_;
    std::ranges::sort(sorted);
    for (std::size_t q = 0; q < sorted.size(); ++q)
        if (sorted[q] != q + 1)
            throw argument_error("layout tuple is not a permutation of {1..p}: " + to_string(perm_));
}

Layout Layout::first_order(std::size_t p) {
    if (p == 0) throw argument_error("layout order must be >= 1");
    std::vector<std::size_t> perm(p);
    std::iota(perm.begin(), perm.end(), 1u);
    return Layout(std::move(perm));
}

Layout Layout::last_order(std::size_t p) {
    if (p == 0) throw argument_error("layout order must be >= 1");
    std::vector<std::size_t> perm(p);
    std::iota(perm.rbegin(), perm.rend(), 1u);
    return Layout(std::move(perm));
}

Strides compute_strides(const Shape& shape, const Layout& layout) {
    const auto p = shape.order();
    if (layout.order() != p)
        throw argument_error("layout length " + std::to_string(layout.order()) + " does not match order " +
                             std::to_string(p));
    std::vector<std::size_t> w(p);
    std::size_t stride = 1;
    for (std::size_t q = 0; q < p; ++q) {
        const auto r = layout[q] - 1;
        w[r] = stride;
        stride *= shape[r];
    }
    return Strides(std::move(w));
}

std::size_t memory_index(std::span<const std::size_t> strides, std::span<const index_t> multi_index,
                         std::span<const index_t> offsets) {
    if (strides.size() != multi_index.size() || offsets.size() != multi_index.size())
        throw argument_error("memory_index: strides, multi-index and offsets differ in length");
    index_t j = 0;
    for (std::size_t r = 0; r < strides.size(); ++r)
        j += static_cast<index_t>(strides[r]) * (multi_index[r] - offsets[r]);
    return static_cast<std::size_t>(j);
}

TensorMeta::TensorMeta(Shape shape) : TensorMeta(shape, Offsets::zeros(shape.order())) {}

TensorMeta::TensorMeta(Shape shape, Offsets offsets)
    : TensorMeta(shape, std::move(offsets), Layout::first_order(shape.order())) {}

TensorMeta::TensorMeta(Shape shape, Layout layout)
    : TensorMeta(shape, Offsets::zeros(shape.order()), std::move(layout)) {}

TensorMeta::TensorMeta(Shape shape, Offsets offsets, Layout layout)
    : shape_(std::move(shape)), layout_(std::move(layout)), offsets_(std::move(offsets)) {
    if (offsets_.order() == 0) offsets_ = Offsets::zeros(shape_.order());
    validate();
    strides_ = compute_strides(shape_, layout_);
}

void TensorMeta::validate() const {
    const auto p = shape_.order();
    if (layout_.order() != p)
        throw argument_error("layout " + to_string(layout_.perm()) + " does not match shape " +
                             to_string(shape_.extents()));
    if (offsets_.order() != p)
        throw argument_error("offsets " + to_string(offsets_.values()) + " do not match shape " +
                             to_string(shape_.extents()));
}

void TensorMeta::set_layout(Layout layout) {
    if (layout.order() != order())
        throw argument_error("relayout: layout " + to_string(layout.perm()) + " has wrong length");
    layout_ = std::move(layout);
    strides_ = compute_strides(shape_, layout_);
}

void TensorMeta::set_shape(Shape shape) {
    if (shape.order() != order()) {
        layout_ = Layout::first_order(shape.order());
        offsets_ = Offsets::zeros(shape.order());
    }
    shape_ = std::move(shape);
    strides_ = compute_strides(shape_, layout_);
}

bool TensorMeta::contains(std::span<const index_t> multi_index) const noexcept {
    if (multi_index.size() != order()) return false;
    for (std::size_t r = 0; r < order(); ++r) {
        const auto rel = multi_index[r] - offsets_[r];
        if (rel < 0 || rel >= static_cast<index_t>(shape_[r])) return false;
    }
    return true;
}

std::size_t TensorMeta::index_of(std::span<const index_t> multi_index) const {
    if (multi_index.size() != order())
        throw argument_error("expected " + std::to_string(order()) + " indices, got " +
                             std::to_string(multi_index.size()));
    if (!contains(multi_index))
        throw bounds_error("multi-index " + to_string(multi_index) + " outside shape " +
                           to_string(shape_.extents()) + " with offsets " + to_string(offsets_.values()));
    return memory_index(strides_.values(), multi_index, offsets_.values());
}

std::vector<index_t> inverse_memory_index(const TensorMeta& meta, std::size_t j) {
    if (j >= meta.volume())
        throw argument_error("memory index " + std::to_string(j) + " outside [0, " +
                             std::to_string(meta.volume()) + ")");
    const auto p = meta.order();
    std::vector<index_t> i(p);
    for (std::size_t q = p; q-- > 0;) {
        const auto r = meta.layout()[q] - 1;
        const auto w = meta.strides()[r];
        i[r] = static_cast<index_t>(j / w);
        j %= w;
    }
    return i;
}

} // namespace tl
