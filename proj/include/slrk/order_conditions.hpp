#pragma once

#include "slrk/rational.hpp"
#include "slrk/tableau.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace slrk {

/// Rooted tree in canonical form.
///
/// Children are kept sorted (descending by level sequence), so isomorphic
/// trees compare equal with plain operator==.
class RootedTree {
public:
    /// The single-node tree.
    RootedTree() = default;
    explicit RootedTree(std::vector<RootedTree> children);

    const std::vector<RootedTree>& children() const noexcept { return children_; }
    int order() const noexcept { return order_; }

    /// Preorder node depths, root at depth 0. Identifies the tree uniquely.
    const std::vector<int>& level_sequence() const noexcept { return levels_; }

    /// Bracket notation: "[]" for one node, "[[][]]" for the order-3 bushy tree.
    std::string to_string() const;
    /// Inverse of to_string; accepts any child order and canonicalizes.
    static RootedTree parse(std::string_view text);

    friend bool operator==(const RootedTree& x, const RootedTree& y) { return x.levels_ == y.levels_; }
    friend std::strong_ordering operator<=>(const RootedTree& x, const RootedTree& y) {
        return x.levels_ <=> y.levels_;
    }

private:
    std::vector<RootedTree> children_;
    std::vector<int> levels_{0};
    int order_ = 1;
};

/// All non-isomorphic rooted trees of order 1..max_order, grouped by order
/// and sorted canonically within each order. 1 <= max_order <= 10.
std::vector<RootedTree> enumerate_trees(int max_order);

/// gamma(t) = |t| * prod gamma(child).
Rational density(const RootedTree& t);

/// Phi(t) = sum_i b_i phi_i(t) with phi_i(leaf) = 1 and
/// phi_i([t1..tk]) = prod_k sum_j a_ij phi_j(t_k).
Rational elementary_weight(const Tableau& tab, const RootedTree& t);

struct OrderCondition {
    RootedTree tree;
    Rational density;
    Rational residual;  // Phi(t) - 1/gamma(t)
};

std::vector<OrderCondition> order_residuals(const Tableau& tab, int order);

/// Largest p <= 8 such that every residual of order <= p vanishes exactly
/// (0 if even the consistency condition fails).
int verified_order(const Tableau& tab);

/// Trees up to some order indexed so that each tree's children appear
/// earlier in the list. Lets the floating-point residual evaluate every
/// elementary weight with one pass and shared subproducts.
struct TreeIndex {
    std::vector<RootedTree> trees;
    std::vector<std::vector<std::size_t>> child_index;
    std::vector<double> inverse_density;

    explicit TreeIndex(int max_order);
};

/// Floating-point elementary weights for all trees of `index`; `a` is s x s
/// row-major, `b` length s. A non-null `leaf_c` stands in for the row sums
/// of `a` wherever a leaf hangs off a node.
void elementary_weights(const TreeIndex& index, std::size_t stages, const double* a, const double* b,
                        std::vector<double>& out, const double* leaf_c = nullptr);

}  // namespace slrk
