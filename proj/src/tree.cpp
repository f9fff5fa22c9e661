#include "bt/tree.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace bt {

// Single construction point for validated trees. Everything here either
// preserves validity structurally or is reached only after find_violation.
class TreeBuilder {
public:
    static Tree make(int label, std::vector<Tree> children) {
        if (children.empty()) return Tree();
        return Tree(label,
                    std::make_shared<const std::vector<Tree>>(std::move(children)));
    }

    // Same children as t, different root label. O(1).
    static Tree relabel(const Tree& t, int label) {
        return Tree(label, t.children_);
    }

    static Tree adopt(int label, const Tree& donor) {
        return Tree(label, donor.children_);
    }
};

namespace {

Tree make(int label, std::vector<Tree> children) {
    return TreeBuilder::make(label, std::move(children));
}

long long child_label_sum(const Tree& t) {
    long long s = 0;
    for (const Tree& c : t.children()) s += c.label();
    return s;
}

// Root-to-rightmost-leaf node chain, both ends included.
std::vector<const Tree*> rpath_spine(const Tree& t) {
    std::vector<const Tree*> spine{&t};
    while (!spine.back()->is_leaf()) spine.push_back(&spine.back()->children().back());
    return spine;
}

// Rebuilds the spine upward from `cur` sitting at position `from` (0-based),
// applying `delta` to each ancestor label on the way to the root.
Tree rebuild_spine(const std::vector<const Tree*>& spine, std::size_t from,
                   Tree cur, int delta) {
    for (std::size_t p = from; p-- > 0;) {
        const Tree* n = spine[p];
        auto kids = n->children();
        std::vector<Tree> rebuilt(kids.begin(), kids.end());
        rebuilt.back() = std::move(cur);
        cur = make(n->label() + delta, std::move(rebuilt));
    }
    return cur;
}

bool is_edge(const Tree& t) {
    return t.children().size() == 1 && t.children()[0].is_leaf();
}

} // namespace

const char* to_string(Violation v) {
    switch (v) {
    case Violation::NonPositiveLabel: return "NonPositiveLabel";
    case Violation::LeafLabelNotOne: return "LeafLabelNotOne";
    case Violation::RootSumMismatch: return "RootSumMismatch";
    case Violation::InternalLabelTooLarge: return "InternalLabelTooLarge";
    }
    return "?";
}

ValidationError::ValidationError(Violation kind, int preorder_index)
    : TreeError(std::string(to_string(kind)) + " at preorder node #" +
                std::to_string(preorder_index)),
      kind_(kind), preorder_index_(preorder_index) {}

ParseError::ParseError(std::size_t position, const std::string& what)
    : TreeError(what + " at offset " + std::to_string(position)),
      position_(position) {}

bool operator==(const Tree& a, const Tree& b) {
    std::vector<std::pair<const Tree*, const Tree*>> todo{{&a, &b}};
    while (!todo.empty()) {
        auto [x, y] = todo.back();
        todo.pop_back();
        if (x->label_ != y->label_) return false;
        if (x->children_ == y->children_) continue; // shared structure
        auto cx = x->children();
        auto cy = y->children();
        if (cx.size() != cy.size()) return false;
        for (std::size_t i = 0; i < cx.size(); ++i) todo.push_back({&cx[i], &cy[i]});
    }
    return true;
}

std::optional<ValidationIssue> find_violation(const RawTree& candidate) {
    // Each condition is local to one node and its direct children, so a
    // single preorder pass reports the first offender in preorder.
    std::vector<std::pair<const RawTree*, bool>> todo{{&candidate, true}};
    int index = 0;
    while (!todo.empty()) {
        auto [n, is_root] = todo.back();
        todo.pop_back();
        ++index;
        if (n->label < 1)
            return ValidationIssue{Violation::NonPositiveLabel, index};
        if (n->children.empty()) {
            if (n->label != 1)
                return ValidationIssue{Violation::LeafLabelNotOne, index};
        } else {
            long long sum = 0;
            for (const RawTree& c : n->children) sum += c.label;
            if (is_root && n->label != sum)
                return ValidationIssue{Violation::RootSumMismatch, index};
            if (!is_root && n->label > sum)
                return ValidationIssue{Violation::InternalLabelTooLarge, index};
        }
        for (auto it = n->children.rbegin(); it != n->children.rend(); ++it)
            todo.push_back({&*it, false});
    }
    return std::nullopt;
}

Tree validate(const RawTree& candidate) {
    if (auto issue = find_violation(candidate))
        throw ValidationError(issue->kind, issue->preorder_index);

    struct Frame {
        const RawTree* node;
        std::size_t next = 0;
        std::vector<Tree> built;
    };
    std::vector<Frame> stack;
    stack.push_back({&candidate});
    while (true) {
        Frame& f = stack.back();
        if (f.next < f.node->children.size()) {
            const RawTree* child = &f.node->children[f.next++];
            stack.push_back({child});
            continue;
        }
        Tree t = make(static_cast<int>(f.node->label), std::move(f.built));
        stack.pop_back();
        if (stack.empty()) return t;
        stack.back().built.push_back(std::move(t));
    }
}

Tree parse(std::string_view text) {
    std::size_t i = 0;
    std::vector<RawTree> open;
    enum { ExpectNode, ExpectSepOrClose } state = ExpectNode;
    while (true) {
        if (state == ExpectNode) {
            if (i >= text.size() || text[i] != '(')
                throw ParseError(i, "expected '('");
            ++i;
            if (i >= text.size() || text[i] < '1' || text[i] > '9')
                throw ParseError(i, "expected label starting with a nonzero digit");
            long long value = 0;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
                value = value * 10 + (text[i] - '0');
                if (value > 1000000000)
                    throw ParseError(i, "label too large");
                ++i;
            }
            open.push_back(RawTree{value, {}});
            state = ExpectSepOrClose;
        } else {
            if (i >= text.size())
                throw ParseError(i, "unexpected end of input");
            if (text[i] == ')') {
                ++i;
                RawTree done = std::move(open.back());
                open.pop_back();
                if (open.empty()) {
                    if (i != text.size())
                        throw ParseError(i, "trailing characters");
                    return validate(done);
                }
                open.back().children.push_back(std::move(done));
            } else if (text[i] == ' ') {
                ++i;
                state = ExpectNode;
            } else {
                throw ParseError(i, "expected ' ' or ')'");
            }
        }
    }
}

std::string print(const Tree& t) {
    std::string out;
    struct Tok {
        const Tree* node;
        int kind; // 0: open, 1: open with leading space, 2: close
    };
    std::vector<Tok> todo{{&t, 0}};
    while (!todo.empty()) {
        auto [n, kind] = todo.back();
        todo.pop_back();
        if (kind == 2) {
            out += ')';
            continue;
        }
        if (kind == 1) out += ' ';
        out += '(';
        out += std::to_string(n->label());
        todo.push_back({n, 2});
        auto kids = n->children();
        for (std::size_t i = kids.size(); i-- > 0;) todo.push_back({&kids[i], 1});
    }
    return out;
}

RawTree to_raw(const Tree& t) {
    struct Frame {
        const Tree* node;
        std::size_t next = 0;
        RawTree raw;
    };
    std::vector<Frame> stack;
    stack.push_back({&t, 0, RawTree{t.label(), {}}});
    while (true) {
        Frame& f = stack.back();
        auto kids = f.node->children();
        if (f.next < kids.size()) {
            const Tree* child = &kids[f.next++];
            stack.push_back({child, 0, RawTree{child->label(), {}}});
            continue;
        }
        RawTree done = std::move(f.raw);
        stack.pop_back();
        if (stack.empty()) return done;
        stack.back().raw.children.push_back(std::move(done));
    }
}

int root_label(const Tree& t) { return t.label(); }

int rpath_length(const Tree& t) {
    int edges = 0;
    const Tree* n = &t;
    while (!n->is_leaf()) {
        n = &n->children().back();
        ++edges;
    }
    return edges;
}

Tree oplus(const Tree& u, const Tree& v) {
    if (u.is_leaf() || v.is_leaf())
        throw LeafOperandError("oplus requires operands with at least one edge");
    std::vector<Tree> kids;
    kids.reserve(u.children().size() + v.children().size());
    kids.insert(kids.end(), u.children().begin(), u.children().end());
    kids.insert(kids.end(), v.children().begin(), v.children().end());
    return make(u.label() + v.label(), std::move(kids));
}

Tree lambda(int i, const Tree& t) {
    if (i < 1 || i > t.label())
        throw IndexOutOfRangeError("lambda index " + std::to_string(i) +
                                   " not in [1, " + std::to_string(t.label()) + "]");
    std::vector<Tree> kids;
    kids.push_back(TreeBuilder::relabel(t, i));
    return make(i, std::move(kids));
}

Tree obslash(const Tree& u, const Tree& v) {
    if (u.is_leaf() || v.is_leaf())
        throw LeafOperandError("obslash requires operands with at least one edge");
    auto spine = rpath_spine(u);
    Tree joined = TreeBuilder::adopt(1, v);
    return rebuild_spine(spine, spine.size() - 1, std::move(joined), 0);
}

Tree gamma(int i, const Tree& t) {
    if (t.is_leaf()) {
        if (i != 1)
            throw IndexOutOfRangeError("gamma index " + std::to_string(i) +
                                       " illegal on the single-node tree");
        return lambda(1, Tree());
    }
    int k = rpath_length(t);
    if (i < 1 || i > k)
        throw IndexOutOfRangeError("gamma index " + std::to_string(i) +
                                   " not in [1, " + std::to_string(k) + "]");
    auto spine = rpath_spine(t);
    const Tree* x = spine[static_cast<std::size_t>(i) - 1];
    auto kids = x->children();
    std::vector<Tree> rebuilt(kids.begin(), kids.end());
    rebuilt.emplace_back(); // the new rightmost leaf
    Tree cur = make(x->label() + 1, std::move(rebuilt));
    return rebuild_spine(spine, static_cast<std::size_t>(i) - 1, std::move(cur), +1);
}

SumView decompose_sum(const Tree& t) {
    if (t.is_leaf()) return LeafCase{};
    auto kids = t.children();
    if (kids.size() == 1) {
        const Tree& c = kids[0];
        Tree body = c.is_leaf()
                        ? Tree()
                        : TreeBuilder::relabel(c, static_cast<int>(child_label_sum(c)));
        return IndecomposableCase{t.label(), std::move(body)};
    }
    std::vector<Tree> first_kids{kids[0]};
    Tree first = make(kids[0].label(), std::move(first_kids));
    std::vector<Tree> rest_kids(kids.begin() + 1, kids.end());
    int rest_label = 0;
    for (const Tree& c : rest_kids) rest_label += c.label();
    return SumCase{std::move(first), make(rest_label, std::move(rest_kids))};
}

DualView decompose_dual(const Tree& t) {
    if (t.is_leaf()) return LeafCase{};
    auto spine = rpath_spine(t); // size == rpath + 1
    // Bottommost internal node strictly below the root labeled 1, if any.
    std::size_t split = 0;
    for (std::size_t p = spine.size() - 1; p-- > 1;) {
        if (spine[p]->label() == 1) {
            split = p;
            break;
        }
    }
    if (split == 0) {
        int i = static_cast<int>(spine.size()) - 1;
        if (is_edge(t)) return GammaCase{1, Tree()};
        const Tree* x = spine[static_cast<std::size_t>(i) - 1];
        auto kids = x->children();
        std::vector<Tree> rebuilt(kids.begin(), kids.end() - 1);
        Tree cur = make(x->label() - 1, std::move(rebuilt));
        Tree body =
            rebuild_spine(spine, static_cast<std::size_t>(i) - 1, std::move(cur), -1);
        return GammaCase{i, std::move(body)};
    }
    const Tree* s = spine[split];
    Tree lower = TreeBuilder::relabel(*s, static_cast<int>(child_label_sum(*s)));
    Tree upper = rebuild_spine(spine, split, Tree(), 0);
    return DualSumCase{std::move(upper), std::move(lower)};
}

std::vector<Tree> sum_factors(const Tree& t) {
    if (t.is_leaf())
        throw LeafOperandError("sum_factors requires a tree with at least one edge");
    std::vector<Tree> out;
    out.reserve(t.children().size());
    for (const Tree& c : t.children()) {
        std::vector<Tree> kids{c};
        out.push_back(make(c.label(), std::move(kids)));
    }
    return out;
}

std::vector<Tree> dual_factors(const Tree& t) {
    if (t.is_leaf())
        throw LeafOperandError("dual_factors requires a tree with at least one edge");
    std::vector<Tree> out;
    Tree cur = t;
    while (true) {
        DualView view = decompose_dual(cur);
        if (auto* ds = std::get_if<DualSumCase>(&view)) {
            out.push_back(std::move(ds->lower));
            cur = std::move(ds->upper);
        } else {
            out.push_back(std::move(cur));
            break;
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace bt
