#pragma once

#include "bt/tree.hpp"

#include <functional>
#include <vector>

namespace bt {

class CapExceededError : public TreeError {
public:
    using TreeError::TreeError;
};

struct FamilySpec {
    int nodes = 1;
    std::optional<int> root_label;
    bool indecomposable_only = false;
};

/// Memoized levels B_1..B_n in canonical order: within a level, lambda-images
/// first (source trees in level order, indices ascending), then sums
/// (first-summand size ascending, first summand in level order restricted to
/// indecomposables, remainder in level order). Levels are immutable once built.
class LevelCache {
public:
    std::span<const Tree> level(int n);
    std::span<const Tree> indecomposables(int n);

private:
    void build_to(int n);
    std::vector<std::vector<Tree>> levels_{{}, {Tree()}};
    std::vector<std::size_t> indec_counts_{0, 0};
};

/// Streams the requested family in canonical order, each member exactly once.
/// Throws std::invalid_argument when the spec violates nodes >= 1,
/// root_label >= 1, or root_label <= nodes - 1 (for nodes >= 2).
void generate(const FamilySpec& spec, const std::function<void(const Tree&)>& yield);

std::vector<Tree> generate_all(const FamilySpec& spec);

/// |B_1| .. |B_max_nodes|, computed from the generator.
std::vector<long long> count_levels(int max_nodes);

inline constexpr int kOracleCap = 7;

/// Brute-force family: every plane tree shape on n nodes, every label
/// assignment from {1..n}, filtered by the defining conditions. Fully
/// independent of the lambda/oplus recursion. Throws CapExceededError
/// above kOracleCap.
std::vector<Tree> oracle_enumerate(int n);

} // namespace bt
