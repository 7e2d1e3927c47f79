#include "cbamnet/tensor.hpp"

#include <atomic>
#include <cmath>

namespace cbamnet {

Shape::Shape(std::initializer_list<std::int64_t> dims) : rank_(static_cast<int>(dims.size())) {
    int i = 0;
    for (auto d : dims) {
        if (i < 4) dims_[i] = d;
        ++i;
    }
    validate();
}

Shape::Shape(const std::vector<std::int64_t>& dims) : rank_(static_cast<int>(dims.size())) {
    for (std::size_t i = 0; i < dims.size() && i < 4; ++i) dims_[i] = dims[i];
    validate();
}

void Shape::validate() const {
    if (rank_ < 1 || rank_ > 4) throw InvalidConfig("shape rank must be 1..4, got " + std::to_string(rank_));
    std::int64_t n = 1;
    for (int i = 0; i < rank_; ++i) {
        if (dims_[i] < 1) throw InvalidConfig("shape extent must be >= 1, got " + std::to_string(dims_[i]));
        if (dims_[i] > (std::int64_t{1} << 40) / n)
            throw InvalidConfig("shape element count overflows: " + str());
        n *= dims_[i];
    }
}

std::int64_t Shape::extent(int axis) const {
    if (axis < 0 || axis >= rank_) throw InvalidConfig("shape axis out of range");
    return dims_[axis];
}

std::int64_t Shape::numel() const {
    std::int64_t n = 1;
    for (int i = 0; i < rank_; ++i) n *= dims_[i];
    return n;
}

std::string Shape::str() const {
    std::string s;
    for (int i = 0; i < rank_; ++i) {
        if (i) s += 'x';
        s += std::to_string(dims_[i]);
    }
    return s;
}

bool Shape::operator==(const Shape& other) const {
    if (rank_ != other.rank_) return false;
    for (int i = 0; i < rank_; ++i)
        if (dims_[i] != other.dims_[i]) return false;
    return true;
}

struct Tensor::Data {
    Data(Shape s, bool rg) : shape(s), requires_grad(rg), id(next_id()) {}
    static std::uint64_t next_id() {
        static std::atomic<std::uint64_t> counter{1};
        return counter.fetch_add(1, std::memory_order_relaxed);
    }
    Shape shape;
    std::vector<double> values;
    bool requires_grad;
    std::uint64_t id;
};

Tensor Tensor::zeros(const Shape& s, bool requires_grad) {
    Tensor t;
    t.data_ = std::make_shared<Data>(s, requires_grad);
    t.data_->values.assign(static_cast<std::size_t>(s.numel()), 0.0);
    return t;
}

Tensor Tensor::full(const Shape& s, double value, bool requires_grad) {
    Tensor t;
    t.data_ = std::make_shared<Data>(s, requires_grad);
    t.data_->values.assign(static_cast<std::size_t>(s.numel()), value);
    return t;
}

Tensor Tensor::from(const Shape& s, std::vector<double> values, bool requires_grad) {
    if (static_cast<std::int64_t>(values.size()) != s.numel())
        throw ShapeMismatch("value count " + std::to_string(values.size()) + " does not match shape " + s.str());
    Tensor t;
    t.data_ = std::make_shared<Data>(s, requires_grad);
    t.data_->values = std::move(values);
    return t;
}

Tensor Tensor::scalar(double value, bool requires_grad) {
    return from(Shape{1}, {value}, requires_grad);
}

Tensor Tensor::uninitialized(const Shape& s, bool requires_grad) {
    Tensor t;
    t.data_ = std::make_shared<Data>(s, requires_grad);
    t.data_->values.resize(static_cast<std::size_t>(s.numel()));
    return t;
}

const Shape& Tensor::shape() const {
    if (!data_) throw GraphError("use of empty tensor handle");
    return data_->shape;
}

bool Tensor::requires_grad() const {
    if (!data_) throw GraphError("use of empty tensor handle");
    return data_->requires_grad;
}

std::uint64_t Tensor::id() const {
    if (!data_) throw GraphError("use of empty tensor handle");
    return data_->id;
}

std::span<const double> Tensor::values() const {
    if (!data_) throw GraphError("use of empty tensor handle");
    return {data_->values.data(), data_->values.size()};
}

double Tensor::value_at(std::int64_t flat_index) const {
    auto v = values();
    if (flat_index < 0 || static_cast<std::size_t>(flat_index) >= v.size())
        throw ShapeMismatch("flat index out of range");
    return v[static_cast<std::size_t>(flat_index)];
}

double Tensor::scalar_value() const {
    if (numel() != 1) throw ShapeMismatch("tensor of shape " + shape().str() + " is not a scalar");
    return values()[0];
}

std::span<double> Tensor::mutable_values() {
    if (!data_) throw GraphError("use of empty tensor handle");
    return {data_->values.data(), data_->values.size()};
}

Tensor Tensor::clone(bool requires_grad) const {
    auto v = values();
    return from(shape(), std::vector<double>(v.begin(), v.end()), requires_grad);
}

void ensure_finite(const Tensor& t, const char* op) {
    for (double v : t.values()) {
        if (!std::isfinite(v))
            throw NumericalError(std::string(op) + " produced a non-finite value");
    }
}

}  // namespace cbamnet
