#pragma once

#include "bt/tree.hpp"

#include <string>
#include <variant>
#include <vector>

namespace bt {

class DuplicateIdError : public TreeError {
public:
    using TreeError::TreeError;
};

/// A valid tree whose nodes additionally carry pairwise-distinct identity
/// tokens over [A-Za-z0-9_]. Same value semantics as Tree.
class LabeledTree {
public:
    static LabeledTree leaf(std::string id);

    int label() const { return label_; }
    const std::string& id() const { return id_; }
    std::span<const LabeledTree> children() const {
        return children_ ? std::span<const LabeledTree>(*children_)
                         : std::span<const LabeledTree>();
    }
    bool is_leaf() const { return !children_ || children_->empty(); }

    friend bool operator==(const LabeledTree& a, const LabeledTree& b);
    friend bool operator!=(const LabeledTree& a, const LabeledTree& b) {
        return !(a == b);
    }

private:
    LabeledTree(int label, std::string id,
                std::shared_ptr<const std::vector<LabeledTree>> children)
        : label_(label), id_(std::move(id)), children_(std::move(children)) {}

    int label_;
    std::string id_;
    std::shared_ptr<const std::vector<LabeledTree>> children_;

    friend class LabeledBuilder;
};

// Id transport conventions, mirrored by the decompositions below:
//  - a lambda node and a gamma leaf carry the operation's id;
//  - splitting a sum hands the root's id to both parts;
//  - a dual split hands the join node's id to the lower root and to the
//    upper tree's new rightmost leaf, so composing with obslash keeps the
//    lower root's id at the join.

struct LabeledLeafCase {};

struct LabeledIndecomposableCase {
    int index;
    std::string id; // the removed root's id
    LabeledTree body;
};

struct LabeledSumCase {
    LabeledTree first;
    LabeledTree rest;
};

using LabeledSumView =
    std::variant<LabeledLeafCase, LabeledIndecomposableCase, LabeledSumCase>;

struct LabeledGammaCase {
    int index;
    std::string id; // the removed rightmost leaf's id
    LabeledTree body;
};

struct LabeledDualSumCase {
    LabeledTree upper;
    LabeledTree lower;
};

using LabeledDualView =
    std::variant<LabeledLeafCase, LabeledGammaCase, LabeledDualSumCase>;

/// The six word statistics. Words are id sequences; sub and rsub are tuples
/// of words.
struct WordStats {
    std::vector<std::string> nodes;    // preorder ids
    std::vector<std::string> leaves;   // leaf ids, preorder order
    std::vector<std::string> internal; // internal ids, reverse preorder order
    std::vector<std::string> root;     // greedy leaf selection, preorder order
    std::vector<std::string> rpath;    // right path minus its leaf, deepest first
    std::vector<std::vector<std::string>> sub;  // preorder ids per summand body
    std::vector<std::vector<std::string>> rsub; // reversed ids per dual-factor
                                                // body, factors in reverse order

    bool operator==(const WordStats&) const = default;
};

/// Grammar: ltree ::= "(" label ":" id (" " ltree)* ")", id ::= [A-Za-z0-9_]+.
LabeledTree parse_labeled(std::string_view text);

std::string print_labeled(const LabeledTree& t);

Tree forget(const LabeledTree& t);

/// Attaches ids equal to 1-based preorder positions rendered in decimal.
LabeledTree with_canonical_ids(const Tree& t);

LabeledSumView decompose_sum(const LabeledTree& t);
LabeledDualView decompose_dual(const LabeledTree& t);

/// gamma with an id for the new leaf. Throws DuplicateIdError if the id
/// already occurs in t.
LabeledTree labeled_gamma(int i, std::string id, const LabeledTree& t);

/// obslash on labeled trees; the join node keeps the lower root's id and the
/// upper tree's rightmost-leaf id is dropped. Throws DuplicateIdError if the
/// result would repeat an id.
LabeledTree labeled_obslash(const LabeledTree& u, const LabeledTree& v);

/// For the single-node tree, root and rpath are the bare id.
WordStats words(const LabeledTree& t);

/// The leaves found by searching subtrees rightmost-first with quota
/// min(remaining, subtree root label), starting from quota root(t); returned
/// in preorder order. Always exactly root(t) leaves.
std::vector<std::string> greedy_root(const LabeledTree& t);

/// h lifted to labeled trees; ids travel with the operations above, so
/// nodes(labeled_h(t)) is the reverse of nodes(t).
LabeledTree labeled_h(const LabeledTree& t);

} // namespace bt
