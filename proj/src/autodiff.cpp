#include "cbamnet/autodiff.hpp"

namespace cbamnet {

const std::vector<double>* BackwardState::grad(const Tensor& t) const {
    auto it = bufs_.find(t.id());
    return it == bufs_.end() ? nullptr : &it->second;
}

std::vector<double>* BackwardState::accum(const Tensor& t) {
    if (grad_path_ && grad_path_->count(t.id()) == 0) return nullptr;
    auto [it, inserted] = bufs_.try_emplace(t.id());
    if (inserted) it->second.assign(static_cast<std::size_t>(t.numel()), 0.0);
    return &it->second;
}

Tensor GradientMap::grad(const Tensor& param) const {
    auto it = grads_.find(param.id());
    if (it != grads_.end()) return it->second;
    return Tensor::zeros(param.shape());
}

void Graph::record(const std::vector<Tensor>& inputs, const Tensor& output, GradFn fn) {
    bool relevant = false;
    for (const Tensor& in : inputs) {
        if (in.requires_grad()) {
            grad_path_.insert(in.id());
            grad_leaves_.try_emplace(in.id(), in);
        }
        relevant = relevant || grad_path_.count(in.id()) != 0;
    }
    if (!relevant) return;
    grad_path_.insert(output.id());
    if (output.requires_grad()) grad_leaves_.try_emplace(output.id(), output);
    nodes_.push_back({output, std::move(fn)});
}

GradientMap Graph::backward(const Tensor& loss) const {
    if (loss.numel() != 1)
        throw GraphError("backward requires a scalar loss, got shape " + loss.shape().str());

    BackwardState state;
    state.grad_path_ = &grad_path_;
    if (grad_path_.count(loss.id()) != 0 || loss.requires_grad())
        state.bufs_[loss.id()] = {1.0};

    for (auto it = nodes_.rbegin(); it != nodes_.rend(); ++it) {
        if (state.bufs_.count(it->output.id()) == 0) continue;  // dead branch
        it->fn(state);
    }

    GradientMap out;
    for (const auto& [id, leaf] : grad_leaves_) {
        auto bit = state.bufs_.find(id);
        if (bit == state.bufs_.end()) continue;
        Tensor g = Tensor::from(leaf.shape(), std::move(bit->second));
        ensure_finite(g, "backward");
        out.grads_.emplace(id, std::move(g));
    }
    return out;
}

}  // namespace cbamnet
