#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bt {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class TreeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Which of the defining conditions a candidate tree violates.
enum class Violation {
    NonPositiveLabel,      // some label < 1
    LeafLabelNotOne,       // a leaf labeled != 1
    RootSumMismatch,       // root label != sum of children's labels
    InternalLabelTooLarge, // non-root internal label > sum of children's labels
};

const char* to_string(Violation v);

struct ValidationIssue {
    Violation kind;
    int preorder_index; // 1-based position of the offending node in preorder
};

class ValidationError : public TreeError {
public:
    ValidationError(Violation kind, int preorder_index);
    Violation kind() const { return kind_; }
    int preorder_index() const { return preorder_index_; }

private:
    Violation kind_;
    int preorder_index_;
};

class ParseError : public TreeError {
public:
    ParseError(std::size_t position, const std::string& what);
    /// Byte offset into the input at which parsing failed.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class LeafOperandError : public TreeError {
public:
    using TreeError::TreeError;
};

class IndexOutOfRangeError : public TreeError {
public:
    using TreeError::TreeError;
};

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

/// An unvalidated rooted plane tree with integer labels; the input type for
/// validate() and the oracle's raw material.
struct RawTree {
    long long label = 1;
    std::vector<RawTree> children;
};

/// A tree satisfying the three defining conditions: leaves are labeled 1,
/// the root's label equals the sum of its children's labels, and every other
/// internal label is at most the sum of its children's labels.
///
/// Values are immutable; copies share structure, so copying is O(1) and the
/// type is safe to use from multiple threads without synchronization.
class Tree {
public:
    /// The single-node tree.
    Tree() : label_(1) {}

    int label() const { return label_; }
    std::span<const Tree> children() const {
        return children_ ? std::span<const Tree>(*children_)
                         : std::span<const Tree>();
    }
    bool is_leaf() const { return !children_ || children_->empty(); }

    friend bool operator==(const Tree& a, const Tree& b);
    friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }

private:
    explicit Tree(int label, std::shared_ptr<const std::vector<Tree>> children)
        : label_(label), children_(std::move(children)) {}

    int label_;
    std::shared_ptr<const std::vector<Tree>> children_;

    friend class TreeBuilder; // construction backdoor for this module only
};

// ---------------------------------------------------------------------------
// Canonical decomposition views
// ---------------------------------------------------------------------------

struct LeafCase {};

/// t = lambda(index, body); arises iff the root has exactly one child.
struct IndecomposableCase {
    int index;
    Tree body;
};

/// t = oplus(first, rest) with `first` the wrap of the root's first child.
struct SumCase {
    Tree first;
    Tree rest;
};

using SumView = std::variant<LeafCase, IndecomposableCase, SumCase>;

/// t = gamma(index, body) with index = rpath_length(t); arises iff no
/// internal node strictly below the root on the right path is labeled 1.
struct GammaCase {
    int index;
    Tree body;
};

/// t = obslash(upper, lower), split at the bottommost label-1 internal node
/// strictly below the root on the right path; `lower` is obslash-indecomposable.
struct DualSumCase {
    Tree upper;
    Tree lower;
};

using DualView = std::variant<LeafCase, GammaCase, DualSumCase>;

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Checks the defining conditions; reports the first violating node in
/// preorder, or nothing if the candidate is valid. Never throws.
std::optional<ValidationIssue> find_violation(const RawTree& candidate);

/// Returns the validated tree or throws ValidationError.
Tree validate(const RawTree& candidate);

/// Grammar: tree ::= "(" label (" " tree)* ")", label ::= [1-9][0-9]*.
/// Exactly one space between siblings, no other whitespace. Throws ParseError
/// (with byte offset) on malformed text and ValidationError on invalid trees.
Tree parse(std::string_view text);

/// Canonical serialization; parse(print(t)) == t.
std::string print(const Tree& t);

RawTree to_raw(const Tree& t);

int root_label(const Tree& t);

/// Number of edges on the path from the root to the rightmost leaf.
int rpath_length(const Tree& t);

/// Sum: labels add, child lists concatenate. Operands must not be leaves.
Tree oplus(const Tree& u, const Tree& v);

/// Adjoins a new root above t; both the new root and the old root get label i.
/// Requires 1 <= i <= root_label(t).
Tree lambda(int i, const Tree& t);

/// Dual sum: the rightmost leaf of u becomes a label-1 node carrying the
/// children of v's root. Operands must not be leaves.
Tree obslash(const Tree& u, const Tree& v);

/// Adjoins a new rightmost leaf at the i-th node of the right path (the root
/// is position 1) and increments the first i right-path labels. Requires
/// 1 <= i <= rpath_length(t); on the single-node tree only gamma(1, t) is
/// legal and yields the edge.
Tree gamma(int i, const Tree& t);

SumView decompose_sum(const Tree& t);
DualView decompose_dual(const Tree& t);

/// Factorization into oplus-indecomposable summands, one per root child.
/// Folding with oplus reproduces t. Requires a non-leaf.
std::vector<Tree> sum_factors(const Tree& t);

/// Factorization into obslash-indecomposable factors, one per label-1 node
/// below the root on the right path (rightmost leaf included). Folding with
/// obslash reproduces t. Requires a non-leaf.
std::vector<Tree> dual_factors(const Tree& t);

} // namespace bt
