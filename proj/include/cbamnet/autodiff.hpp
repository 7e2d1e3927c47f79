#pragma once

#include <functional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cbamnet/tensor.hpp"

namespace cbamnet {

// Gradient buffers addressed by tensor id during the reverse sweep.
class BackwardState {
public:
    // Gradient of `t` accumulated so far; null if none has arrived.
    const std::vector<double>* grad(const Tensor& t) const;
    // Accumulation buffer for `t`, zero-initialized on first use.
    // Null when `t` is not on any path to a requires_grad leaf, so
    // backward rules can skip dead branches.
    std::vector<double>* accum(const Tensor& t);

private:
    friend class Graph;
    std::unordered_map<std::uint64_t, std::vector<double>> bufs_;
    const std::unordered_set<std::uint64_t>* grad_path_ = nullptr;
};

// Gradients for requires_grad tensors after Graph::backward. Unreached
// parameters resolve to zeros of the parameter's shape.
class GradientMap {
public:
    Tensor grad(const Tensor& param) const;
    bool reached(const Tensor& param) const { return grads_.count(param.id()) != 0; }

private:
    friend class Graph;
    std::unordered_map<std::uint64_t, Tensor> grads_;
};

// Append-only tape of recorded operations. Nodes are recorded in execution
// order, which is a topological order by construction; backward visits each
// node exactly once in reverse.
class Graph {
public:
    using GradFn = std::function<void(BackwardState&)>;

    // Called by ops. Recording is skipped when no input can influence a
    // requires_grad leaf.
    void record(const std::vector<Tensor>& inputs, const Tensor& output, GradFn fn);

    bool on_grad_path(const Tensor& t) const { return grad_path_.count(t.id()) != 0; }
    std::size_t size() const { return nodes_.size(); }

    // Reverse-mode sweep from a scalar loss. GraphError if loss is not scalar.
    GradientMap backward(const Tensor& loss) const;

private:
    struct Node {
        Tensor output;
        GradFn fn;
    };
    std::vector<Node> nodes_;
    std::unordered_set<std::uint64_t> grad_path_;
    std::unordered_map<std::uint64_t, Tensor> grad_leaves_;
};

}  // namespace cbamnet
