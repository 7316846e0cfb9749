#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tl {

/// Malformed arguments: wrong arity, invalid permutation, shape mismatch.
class argument_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Element access outside the valid index or memory index set.
class bounds_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// View ranges that do not lie inside the referenced tensor.
class range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Raised by the power method when a mode update produces a zero vector.
class degenerate_error : public std::runtime_error {
public:
    degenerate_error(const std::string& what, std::size_t sweep, std::size_t mode)
        : std::runtime_error(what), sweep_(sweep), mode_(mode) {}

    std::size_t sweep() const noexcept { return sweep_; }
    std::size_t mode() const noexcept { return mode_; }

private:
    std::size_t sweep_;
    std::size_t mode_;
};

} // namespace tl
