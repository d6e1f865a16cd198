#include "slrk/order_conditions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace slrk {

RootedTree::RootedTree(std::vector<RootedTree> children) : children_(std::move(children)) {
    std::sort(children_.begin(), children_.end(), std::greater<>{});
    for (const auto& child : children_) {
        order_ += child.order_;
        for (int level : child.levels_) levels_.push_back(level + 1);
    }
}

std::string RootedTree::to_string() const {
    std::string out = "[";
    for (const auto& child : children_) out += child.to_string();
    out += "]";
    return out;
}

namespace {

RootedTree parse_tree(std::string_view text, std::size_t& pos) {
    if (pos >= text.size() || text[pos] != '[') throw std::invalid_argument("expected '[' in tree text");
    ++pos;
    std::vector<RootedTree> children;
    while (pos < text.size() && text[pos] == '[') children.push_back(parse_tree(text, pos));
    if (pos >= text.size() || text[pos] != ']') throw std::invalid_argument("expected ']' in tree text");
    ++pos;
    return RootedTree(std::move(children));
}

// Phi_i(t) for every stage i, given the weights of the children.
template <typename T, typename MatrixAt>
std::vector<T> stage_weights(std::size_t s, const std::vector<const std::vector<T>*>& child_weights, MatrixAt a) {
    std::vector<T> phi(s, T(1));
    for (const auto* w : child_weights) {
        for (std::size_t i = 0; i < s; ++i) {
            T sum(0);
            for (std::size_t j = 0; j < i; ++j) sum += a(i, j) * (*w)[j];
            phi[i] *= sum;
        }
    }
    return phi;
}

std::vector<Rational> exact_stage_weights(const Tableau& tab, const RootedTree& t) {
    std::vector<std::vector<Rational>> child_w;
    child_w.reserve(t.children().size());
    for (const auto& child : t.children()) child_w.push_back(exact_stage_weights(tab, child));
    std::vector<const std::vector<Rational>*> ptrs;
    for (const auto& w : child_w) ptrs.push_back(&w);
    return stage_weights<Rational>(tab.stages(), ptrs, [&](std::size_t i, std::size_t j) -> const Rational& {
        return tab.a(i, j);
    });
}

}  // namespace

RootedTree RootedTree::parse(std::string_view text) {
    std::size_t pos = 0;
    RootedTree t = parse_tree(text, pos);
    if (pos != text.size()) throw std::invalid_argument("trailing characters in tree text");
    return t;
}

std::vector<RootedTree> enumerate_trees(int max_order) {
    if (max_order < 1 || max_order > 10) throw std::out_of_range("max_order must be in [1, 10]");
    std::vector<RootedTree> all{RootedTree{}};
    for (int n = 2; n <= max_order; ++n) {
        const std::size_t available = all.size();
        std::vector<RootedTree> fresh;
        std::vector<std::size_t> picks;
        // Multisets of earlier trees with total order n - 1, as non-increasing
        // index sequences so each multiset is produced once.
        std::function<void(std::size_t, int)> extend = [&](std::size_t max_index, int remaining) {
            if (remaining == 0) {
                std::vector<RootedTree> children;
                for (auto idx : picks) children.push_back(all[idx]);
                fresh.emplace_back(std::move(children));
                return;
            }
            for (std::size_t idx = 0; idx <= max_index && idx < available; ++idx) {
                if (all[idx].order() > remaining) break;
                picks.push_back(idx);
                extend(idx, remaining - all[idx].order());
                picks.pop_back();
            }
        };
        extend(available - 1, n - 1);
        std::sort(fresh.begin(), fresh.end());
        all.insert(all.end(), fresh.begin(), fresh.end());
    }
    return all;
}

Rational density(const RootedTree& t) {
    Rational g = t.order();
    for (const auto& child : t.children()) g *= density(child);
    return g;
}

Rational elementary_weight(const Tableau& tab, const RootedTree& t) {
    const auto phi = exact_stage_weights(tab, t);
    Rational total = 0;
    for (std::size_t i = 0; i < tab.stages(); ++i) total += tab.b()[i] * phi[i];
    return total;
}

std::vector<OrderCondition> order_residuals(const Tableau& tab, int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    const TreeIndex index(order);
    const std::size_t s = tab.stages();
    std::vector<std::vector<Rational>> weights;
    weights.reserve(index.trees.size());
    std::vector<OrderCondition> out;
    for (std::size_t k = 0; k < index.trees.size(); ++k) {
        std::vector<const std::vector<Rational>*> children;
        for (auto c : index.child_index[k]) children.push_back(&weights[c]);
        weights.push_back(stage_weights<Rational>(s, children, [&](std::size_t i, std::size_t j) -> const Rational& {
            return tab.a(i, j);
        }));
        Rational phi = 0;
        for (std::size_t i = 0; i < s; ++i) phi += tab.b()[i] * weights.back()[i];
        Rational gamma = density(index.trees[k]);
        out.push_back({index.trees[k], gamma, phi - Rational(1) / gamma});
    }
    return out;
}

int verified_order(const Tableau& tab) {
    constexpr int max_checked = 8;
    const auto residuals = order_residuals(tab, max_checked);
    int order = max_checked;
    for (const auto& cond : residuals) {
        if (cond.residual != 0) {
            order = std::min(order, cond.tree.order() - 1);
        }
    }
    return order;
}

TreeIndex::TreeIndex(int max_order) : trees(enumerate_trees(max_order)) {
    std::map<std::vector<int>, std::size_t> position;
    for (std::size_t k = 0; k < trees.size(); ++k) {
        position.emplace(trees[k].level_sequence(), k);
        std::vector<std::size_t> kids;
        for (const auto& child : trees[k].children()) kids.push_back(position.at(child.level_sequence()));
        child_index.push_back(std::move(kids));
        inverse_density.push_back(1.0 / to_double(density(trees[k])));
    }
}

void elementary_weights(const TreeIndex& index, std::size_t stages, const double* a, const double* b,
                        std::vector<double>& out, const double* leaf_c) {
    const std::size_t count = index.trees.size();
    // a_phi[k][i] = sum_j a_ij phi_j(tree k)
    std::vector<double> phi(count * stages);
    std::vector<double> a_phi(count * stages);
    out.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
        double* p = &phi[k * stages];
        std::fill(p, p + stages, 1.0);
        for (auto c : index.child_index[k]) {
            const double* ac = &a_phi[c * stages];
            for (std::size_t i = 0; i < stages; ++i) p[i] *= ac[i];
        }
        double* ap = &a_phi[k * stages];
        double total = 0.0;
        if (leaf_c != nullptr && index.child_index[k].empty()) {
            for (std::size_t i = 0; i < stages; ++i) {
                ap[i] = leaf_c[i];
                total += b[i];
            }
            out[k] = total;
            continue;
        }
        for (std::size_t i = 0; i < stages; ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < i; ++j) sum += a[i * stages + j] * p[j];
            ap[i] = sum;
            total += b[i] * p[i];
        }
        out[k] = total;
    }
}

}  // namespace slrk
