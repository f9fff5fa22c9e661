#include "bt/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace bt {

void LevelCache::build_to(int n) {
    for (int m = static_cast<int>(levels_.size()); m <= n; ++m) {
        std::vector<Tree> level;
        for (const Tree& t : levels_[m - 1])
            for (int i = 1; i <= t.label(); ++i) level.push_back(lambda(i, t));
        indec_counts_.push_back(level.size());
        // nodes(u (+) v) = nodes(u) + nodes(v) - 1, so a first summand of
        // size j pairs with remainders of size m - j + 1 (>= 2, never a leaf).
        for (int j = 2; j <= m - 1; ++j) {
            std::span<const Tree> firsts(levels_[j].data(), indec_counts_[j]);
            const std::vector<Tree>& rests = levels_[m - j + 1];
            for (const Tree& u : firsts)
                for (const Tree& v : rests) level.push_back(oplus(u, v));
        }
        levels_.push_back(std::move(level));
    }
}

std::span<const Tree> LevelCache::level(int n) {
    if (n < 1) throw std::invalid_argument("level index must be >= 1");
    build_to(n);
    return levels_[n];
}

std::span<const Tree> LevelCache::indecomposables(int n) {
    if (n < 1) throw std::invalid_argument("level index must be >= 1");
    build_to(n);
    return {levels_[n].data(), indec_counts_[n]};
}

void generate(const FamilySpec& spec, const std::function<void(const Tree&)>& yield) {
    if (spec.nodes < 1)
        throw std::invalid_argument("nodes must be >= 1");
    if (spec.root_label) {
        if (*spec.root_label < 1)
            throw std::invalid_argument("root label filter must be >= 1");
        if (spec.nodes >= 2 && *spec.root_label > spec.nodes - 1)
            throw std::invalid_argument("root label filter exceeds nodes - 1");
    }
    LevelCache cache;
    std::span<const Tree> family = spec.indecomposable_only
                                       ? cache.indecomposables(spec.nodes)
                                       : cache.level(spec.nodes);
    for (const Tree& t : family) {
        if (spec.root_label && t.label() != *spec.root_label) continue;
        yield(t);
    }
}

std::vector<Tree> generate_all(const FamilySpec& spec) {
    std::vector<Tree> out;
    generate(spec, [&](const Tree& t) { out.push_back(t); });
    return out;
}

std::vector<long long> count_levels(int max_nodes) {
    if (max_nodes < 1)
        throw std::invalid_argument("max_nodes must be >= 1");
    LevelCache cache;
    std::vector<long long> counts;
    counts.reserve(max_nodes);
    for (int n = 1; n <= max_nodes; ++n)
        counts.push_back(static_cast<long long>(cache.level(n).size()));
    return counts;
}

namespace {

// All plane tree shapes on 1..n nodes (labels initialized to 1), built level
// by level from the first-child/remaining-children decomposition.
std::vector<std::vector<RawTree>> shapes_up_to(int n) {
    std::vector<std::vector<RawTree>> memo{{}, {RawTree{1, {}}}};
    for (int m = 2; m <= n; ++m) {
        std::vector<RawTree> out;
        for (int f = 1; f <= m - 1; ++f) {
            for (const RawTree& first : memo[f]) {
                for (const RawTree& rest : memo[m - f]) {
                    RawTree shape{1, {first}};
                    for (const RawTree& c : rest.children) shape.children.push_back(c);
                    out.push_back(std::move(shape));
                }
            }
        }
        memo.push_back(std::move(out));
    }
    return memo;
}

void collect_preorder(RawTree& n, std::vector<RawTree*>& out) {
    out.push_back(&n);
    for (RawTree& c : n.children) collect_preorder(c, out);
}

// Lean per-candidate check over the flat node list; every condition reads
// only a node and its direct children.
bool conditions_hold(const std::vector<RawTree*>& preorder) {
    for (std::size_t k = 0; k < preorder.size(); ++k) {
        const RawTree* n = preorder[k];
        if (n->children.empty()) {
            if (n->label != 1) return false;
            continue;
        }
        long long sum = 0;
        for (const RawTree& c : n->children) sum += c.label;
        if (k == 0 ? n->label != sum : n->label > sum) return false;
    }
    return true;
}

} // namespace

std::vector<Tree> oracle_enumerate(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n > kOracleCap)
        throw CapExceededError("oracle capped at " + std::to_string(kOracleCap) +
                               " nodes");
    std::vector<Tree> out;
    const std::vector<std::vector<RawTree>> all_shapes = shapes_up_to(n);
    for (const RawTree& shape : all_shapes[n]) {
        RawTree candidate = shape;
        std::vector<RawTree*> nodes;
        collect_preorder(candidate, nodes);
        // Odometer over {1..n}^nodes.
        for (RawTree* node : nodes) node->label = 1;
        while (true) {
            if (conditions_hold(nodes)) out.push_back(validate(candidate));
            std::size_t pos = nodes.size();
            while (pos > 0 && nodes[pos - 1]->label == n) {
                nodes[pos - 1]->label = 1;
                --pos;
            }
            if (pos == 0) break;
            ++nodes[pos - 1]->label;
        }
    }
    return out;
}

} // namespace bt
