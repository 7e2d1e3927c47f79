#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cbamnet/errors.hpp"

namespace cbamnet {

// Dense row-major extents, rank 1..4, every extent >= 1.
class Shape {
public:
    Shape(std::initializer_list<std::int64_t> dims);
    explicit Shape(const std::vector<std::int64_t>& dims);

    int rank() const { return rank_; }
    std::int64_t extent(int axis) const;
    std::int64_t numel() const;
    std::string str() const;  // e.g. "3x16x16"

    bool operator==(const Shape& other) const;
    bool operator!=(const Shape& other) const { return !(*this == other); }

private:
    void validate() const;
    std::array<std::int64_t, 4> dims_{1, 1, 1, 1};
    int rank_ = 0;
};

// Immutable dense 64-bit float tensor with shared-buffer handle semantics.
// Identity (id) is per allocation; the autodiff graph keys gradients on it.
class Tensor {
public:
    Tensor() = default;  // empty handle; any access throws

    static Tensor zeros(const Shape& s, bool requires_grad = false);
    static Tensor full(const Shape& s, double value, bool requires_grad = false);
    static Tensor from(const Shape& s, std::vector<double> values, bool requires_grad = false);
    static Tensor scalar(double value, bool requires_grad = false);
    // Allocates without zero-filling; caller fills through mutable_values()
    // before the tensor escapes.
    static Tensor uninitialized(const Shape& s, bool requires_grad = false);

    bool defined() const { return data_ != nullptr; }
    const Shape& shape() const;
    std::int64_t numel() const { return shape().numel(); }
    bool requires_grad() const;
    std::uint64_t id() const;

    std::span<const double> values() const;
    const double* data() const { return values().data(); }
    double value_at(std::int64_t flat_index) const;
    double scalar_value() const;  // requires numel() == 1

    // Raw write access. Only legal while this handle is the sole owner
    // (freshly created, or exclusively held as in gradient_check).
    std::span<double> mutable_values();

    // Same values in a new allocation (fresh id), detached from any graph.
    Tensor clone(bool requires_grad) const;

    bool same_buffer(const Tensor& other) const { return data_ == other.data_; }

private:
    struct Data;
    std::shared_ptr<Data> data_;
};

// Throws NumericalError naming `op` if any element is NaN/Inf.
void ensure_finite(const Tensor& t, const char* op);

}  // namespace cbamnet
