#include "bt/labeled.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <unordered_set>
#include <utility>

namespace bt {

class LabeledBuilder {
public:
    static LabeledTree make(int label, std::string id,
                            std::vector<LabeledTree> children) {
        if (children.empty()) return LabeledTree(label, std::move(id), nullptr);
        return LabeledTree(
            label, std::move(id),
            std::make_shared<const std::vector<LabeledTree>>(std::move(children)));
    }

    static LabeledTree relabel(const LabeledTree& t, int label) {
        return LabeledTree(label, t.id_, t.children_);
    }

    // label and id of their own, children shared with the donor.
    static LabeledTree adopt(int label, std::string id, const LabeledTree& donor) {
        return LabeledTree(label, std::move(id), donor.children_);
    }
};

namespace {

LabeledTree make(int label, std::string id, std::vector<LabeledTree> children) {
    return LabeledBuilder::make(label, std::move(id), std::move(children));
}

bool id_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
}

std::vector<const LabeledTree*> rpath_spine(const LabeledTree& t) {
    std::vector<const LabeledTree*> spine{&t};
    while (!spine.back()->is_leaf()) spine.push_back(&spine.back()->children().back());
    return spine;
}

LabeledTree rebuild_spine(const std::vector<const LabeledTree*>& spine,
                          std::size_t from, LabeledTree cur, int delta) {
    for (std::size_t p = from; p-- > 0;) {
        const LabeledTree* n = spine[p];
        auto kids = n->children();
        std::vector<LabeledTree> rebuilt(kids.begin(), kids.end());
        rebuilt.back() = std::move(cur);
        cur = make(n->label() + delta, n->id(), std::move(rebuilt));
    }
    return cur;
}

bool is_edge(const LabeledTree& t) {
    return t.children().size() == 1 && t.children()[0].is_leaf();
}

long long child_label_sum(const LabeledTree& t) {
    long long s = 0;
    for (const LabeledTree& c : t.children()) s += c.label();
    return s;
}

void collect_ids(const LabeledTree& t, std::vector<const std::string*>& out) {
    std::vector<const LabeledTree*> todo{&t};
    while (!todo.empty()) {
        const LabeledTree* n = todo.back();
        todo.pop_back();
        out.push_back(&n->id());
        auto kids = n->children();
        for (std::size_t i = kids.size(); i-- > 0;) todo.push_back(&kids[i]);
    }
}

std::vector<std::string> preorder_ids(const LabeledTree& t) {
    std::vector<const std::string*> ptrs;
    collect_ids(t, ptrs);
    std::vector<std::string> out;
    out.reserve(ptrs.size());
    for (const std::string* p : ptrs) out.push_back(*p);
    return out;
}

LabeledTree gamma_unchecked(int i, std::string id, const LabeledTree& t) {
    if (t.is_leaf()) {
        assert(i == 1);
        std::vector<LabeledTree> kids;
        kids.push_back(LabeledTree::leaf(std::move(id)));
        return make(1, t.id(), std::move(kids));
    }
    auto spine = rpath_spine(t);
    assert(i >= 1 && i + 1 <= static_cast<int>(spine.size()));
    const LabeledTree* x = spine[static_cast<std::size_t>(i) - 1];
    auto kids = x->children();
    std::vector<LabeledTree> rebuilt(kids.begin(), kids.end());
    rebuilt.push_back(LabeledTree::leaf(std::move(id)));
    LabeledTree cur = make(x->label() + 1, x->id(), std::move(rebuilt));
    return rebuild_spine(spine, static_cast<std::size_t>(i) - 1, std::move(cur), +1);
}

LabeledTree obslash_unchecked(const LabeledTree& u, const LabeledTree& v) {
    auto spine = rpath_spine(u);
    LabeledTree joined = LabeledBuilder::adopt(1, v.id(), v);
    return rebuild_spine(spine, spine.size() - 1, std::move(joined), 0);
}

struct LRaw {
    long long label = 1;
    std::string id;
    std::vector<LRaw> children;
};

RawTree strip_ids(const LRaw& root) {
    struct Frame {
        const LRaw* node;
        std::size_t next = 0;
        RawTree raw;
    };
    std::vector<Frame> stack;
    stack.push_back({&root, 0, RawTree{root.label, {}}});
    while (true) {
        Frame& f = stack.back();
        if (f.next < f.node->children.size()) {
            const LRaw* child = &f.node->children[f.next++];
            stack.push_back({child, 0, RawTree{child->label, {}}});
            continue;
        }
        RawTree done = std::move(f.raw);
        stack.pop_back();
        if (stack.empty()) return done;
        stack.back().raw.children.push_back(std::move(done));
    }
}

LabeledTree build_labeled(const LRaw& root) {
    struct Frame {
        const LRaw* node;
        std::size_t next = 0;
        std::vector<LabeledTree> built;
    };
    std::vector<Frame> stack;
    stack.push_back({&root});
    while (true) {
        Frame& f = stack.back();
        if (f.next < f.node->children.size()) {
            const LRaw* child = &f.node->children[f.next++];
            stack.push_back({child});
            continue;
        }
        LabeledTree t = make(static_cast<int>(f.node->label), f.node->id,
                             std::move(f.built));
        stack.pop_back();
        if (stack.empty()) return t;
        stack.back().built.push_back(std::move(t));
    }
}

void check_distinct_ids(const LRaw& root) {
    std::unordered_set<std::string_view> seen;
    std::vector<const LRaw*> todo{&root};
    while (!todo.empty()) {
        const LRaw* n = todo.back();
        todo.pop_back();
        if (!seen.insert(n->id).second)
            throw DuplicateIdError("duplicate id '" + n->id + "'");
        for (const LRaw& c : n->children) todo.push_back(&c);
    }
}

} // namespace

LabeledTree LabeledTree::leaf(std::string id) {
    return LabeledTree(1, std::move(id), nullptr);
}

bool operator==(const LabeledTree& a, const LabeledTree& b) {
    std::vector<std::pair<const LabeledTree*, const LabeledTree*>> todo{{&a, &b}};
    while (!todo.empty()) {
        auto [x, y] = todo.back();
        todo.pop_back();
        if (x->label_ != y->label_ || x->id_ != y->id_) return false;
        if (x->children_ == y->children_) continue;
        auto cx = x->children();
        auto cy = y->children();
        if (cx.size() != cy.size()) return false;
        for (std::size_t i = 0; i < cx.size(); ++i) todo.push_back({&cx[i], &cy[i]});
    }
    return true;
}

LabeledTree parse_labeled(std::string_view text) {
    std::size_t i = 0;
    std::vector<LRaw> open;
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
            if (i >= text.size() || text[i] != ':')
                throw ParseError(i, "expected ':' before id");
            ++i;
            std::size_t start = i;
            while (i < text.size() && id_char(text[i])) ++i;
            if (i == start)
                throw ParseError(i, "expected id over [A-Za-z0-9_]");
            open.push_back(LRaw{value, std::string(text.substr(start, i - start)), {}});
            state = ExpectSepOrClose;
        } else {
            if (i >= text.size())
                throw ParseError(i, "unexpected end of input");
            if (text[i] == ')') {
                ++i;
                LRaw done = std::move(open.back());
                open.pop_back();
                if (open.empty()) {
                    if (i != text.size())
                        throw ParseError(i, "trailing characters");
                    if (auto issue = find_violation(strip_ids(done)))
                        throw ValidationError(issue->kind, issue->preorder_index);
                    check_distinct_ids(done);
                    return build_labeled(done);
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

std::string print_labeled(const LabeledTree& t) {
    std::string out;
    struct Tok {
        const LabeledTree* node;
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
        out += ':';
        out += n->id();
        todo.push_back({n, 2});
        auto kids = n->children();
        for (std::size_t i = kids.size(); i-- > 0;) todo.push_back({&kids[i], 1});
    }
    return out;
}

Tree forget(const LabeledTree& t) {
    struct Frame {
        const LabeledTree* node;
        std::size_t next = 0;
        RawTree raw;
    };
    std::vector<Frame> stack;
    stack.push_back({&t, 0, RawTree{t.label(), {}}});
    while (true) {
        Frame& f = stack.back();
        auto kids = f.node->children();
        if (f.next < kids.size()) {
            const LabeledTree* child = &kids[f.next++];
            stack.push_back({child, 0, RawTree{child->label(), {}}});
            continue;
        }
        RawTree done = std::move(f.raw);
        stack.pop_back();
        if (stack.empty()) return validate(done);
        stack.back().raw.children.push_back(std::move(done));
    }
}

LabeledTree with_canonical_ids(const Tree& t) {
    struct Frame {
        const Tree* node;
        int id;
        std::size_t next = 0;
        std::vector<LabeledTree> built;
    };
    int counter = 0;
    std::vector<Frame> stack;
    stack.push_back({&t, ++counter});
    while (true) {
        Frame& f = stack.back();
        auto kids = f.node->children();
        if (f.next < kids.size()) {
            const Tree* child = &kids[f.next++];
            stack.push_back({child, ++counter});
            continue;
        }
        LabeledTree built =
            make(f.node->label(), std::to_string(f.id), std::move(f.built));
        stack.pop_back();
        if (stack.empty()) return built;
        stack.back().built.push_back(std::move(built));
    }
}

LabeledSumView decompose_sum(const LabeledTree& t) {
    if (t.is_leaf()) return LabeledLeafCase{};
    auto kids = t.children();
    if (kids.size() == 1) {
        const LabeledTree& c = kids[0];
        LabeledTree body =
            c.is_leaf()
                ? c
                : LabeledBuilder::relabel(c, static_cast<int>(child_label_sum(c)));
        return LabeledIndecomposableCase{t.label(), t.id(), std::move(body)};
    }
    std::vector<LabeledTree> first_kids{kids[0]};
    LabeledTree first = make(kids[0].label(), t.id(), std::move(first_kids));
    std::vector<LabeledTree> rest_kids(kids.begin() + 1, kids.end());
    int rest_label = 0;
    for (const LabeledTree& c : rest_kids) rest_label += c.label();
    return LabeledSumCase{std::move(first),
                          make(rest_label, t.id(), std::move(rest_kids))};
}

LabeledDualView decompose_dual(const LabeledTree& t) {
    if (t.is_leaf()) return LabeledLeafCase{};
    auto spine = rpath_spine(t);
    std::size_t split = 0;
    for (std::size_t p = spine.size() - 1; p-- > 1;) {
        if (spine[p]->label() == 1) {
            split = p;
            break;
        }
    }
    if (split == 0) {
        int i = static_cast<int>(spine.size()) - 1;
        std::string leaf_id = spine.back()->id();
        if (is_edge(t))
            return LabeledGammaCase{1, std::move(leaf_id), LabeledTree::leaf(t.id())};
        const LabeledTree* x = spine[static_cast<std::size_t>(i) - 1];
        auto kids = x->children();
        std::vector<LabeledTree> rebuilt(kids.begin(), kids.end() - 1);
        LabeledTree cur = make(x->label() - 1, x->id(), std::move(rebuilt));
        LabeledTree body =
            rebuild_spine(spine, static_cast<std::size_t>(i) - 1, std::move(cur), -1);
        return LabeledGammaCase{i, std::move(leaf_id), std::move(body)};
    }
    const LabeledTree* s = spine[split];
    LabeledTree lower =
        LabeledBuilder::relabel(*s, static_cast<int>(child_label_sum(*s)));
    LabeledTree upper =
        rebuild_spine(spine, split, LabeledTree::leaf(s->id()), 0);
    return LabeledDualSumCase{std::move(upper), std::move(lower)};
}

LabeledTree labeled_gamma(int i, std::string id, const LabeledTree& t) {
    if (t.is_leaf()) {
        if (i != 1)
            throw IndexOutOfRangeError("gamma index " + std::to_string(i) +
                                       " illegal on the single-node tree");
    } else {
        int k = static_cast<int>(rpath_spine(t).size()) - 1;
        if (i < 1 || i > k)
            throw IndexOutOfRangeError("gamma index " + std::to_string(i) +
                                       " not in [1, " + std::to_string(k) + "]");
    }
    std::vector<const std::string*> ids;
    collect_ids(t, ids);
    for (const std::string* existing : ids)
        if (*existing == id)
            throw DuplicateIdError("duplicate id '" + id + "'");
    return gamma_unchecked(i, std::move(id), t);
}

LabeledTree labeled_obslash(const LabeledTree& u, const LabeledTree& v) {
    if (u.is_leaf() || v.is_leaf())
        throw LeafOperandError("obslash requires operands with at least one edge");
    std::vector<const std::string*> ids;
    collect_ids(u, ids);
    const std::string* dropped = &rpath_spine(u).back()->id();
    collect_ids(v, ids);
    std::unordered_set<std::string_view> seen;
    for (const std::string* id : ids) {
        if (id == dropped) continue; // the join discards this occurrence
        if (!seen.insert(*id).second)
            throw DuplicateIdError("duplicate id '" + *id + "'");
    }
    return obslash_unchecked(u, v);
}

std::vector<std::string> greedy_root(const LabeledTree& t) {
    std::unordered_set<std::string_view> selected;
    std::vector<std::pair<const LabeledTree*, int>> todo{{&t, t.label()}};
    while (!todo.empty()) {
        auto [n, quota] = todo.back();
        todo.pop_back();
        if (n->is_leaf()) {
            selected.insert(n->id());
            continue;
        }
        auto kids = n->children();
        int remaining = quota;
        for (std::size_t i = kids.size(); i-- > 0 && remaining > 0;) {
            int grant = std::min(remaining, kids[i].label());
            remaining -= grant;
            if (grant > 0) todo.push_back({&kids[i], grant});
        }
    }
    std::vector<std::string> out;
    std::vector<const LabeledTree*> walk{&t};
    while (!walk.empty()) {
        const LabeledTree* n = walk.back();
        walk.pop_back();
        if (n->is_leaf() && selected.count(n->id())) out.push_back(n->id());
        auto kids = n->children();
        for (std::size_t i = kids.size(); i-- > 0;) walk.push_back(&kids[i]);
    }
    return out;
}

WordStats words(const LabeledTree& t) {
    WordStats w;
    std::vector<const LabeledTree*> todo{&t};
    while (!todo.empty()) {
        const LabeledTree* n = todo.back();
        todo.pop_back();
        w.nodes.push_back(n->id());
        (n->is_leaf() ? w.leaves : w.internal).push_back(n->id());
        auto kids = n->children();
        for (std::size_t i = kids.size(); i-- > 0;) todo.push_back(&kids[i]);
    }
    std::reverse(w.internal.begin(), w.internal.end());
    w.root = greedy_root(t);
    if (t.is_leaf()) {
        w.rpath = {t.id()};
        return w;
    }
    for (const LabeledTree* n : rpath_spine(t)) w.rpath.push_back(n->id());
    w.rpath.pop_back(); // the rightmost leaf is excluded
    std::reverse(w.rpath.begin(), w.rpath.end());
    for (const LabeledTree& c : t.children()) w.sub.push_back(preorder_ids(c));
    // Dual factors, bottommost first; each body word is the factor's preorder
    // minus its rightmost leaf, reversed.
    LabeledTree cur = t;
    while (true) {
        LabeledDualView view = decompose_dual(cur);
        auto body_word = [](const LabeledTree& factor) {
            std::vector<std::string> ids = preorder_ids(factor);
            ids.pop_back();
            std::reverse(ids.begin(), ids.end());
            return ids;
        };
        if (auto* ds = std::get_if<LabeledDualSumCase>(&view)) {
            w.rsub.push_back(body_word(ds->lower));
            cur = std::move(ds->upper);
        } else {
            w.rsub.push_back(body_word(cur));
            break;
        }
    }
    return w;
}

LabeledTree labeled_h(const LabeledTree& t) {
    enum class OpKind : std::uint8_t { Leaf, Gamma, Join };
    struct Op {
        OpKind kind;
        int index;
        const std::string* id; // points into t, which outlives the evaluation
    };
    std::vector<Op> program;
    if (t.is_leaf()) {
        program.push_back({OpKind::Leaf, 0, &t.id()});
    } else {
        struct Item {
            const LabeledTree* node;
            std::size_t from;
            const std::string* wrap_id; // nonnull marks a wrap item
        };
        std::vector<Item> todo{{&t, 0, nullptr}};
        while (!todo.empty()) {
            Item item = todo.back();
            todo.pop_back();
            if (item.wrap_id) {
                const LabeledTree* c = item.node;
                program.push_back({OpKind::Gamma, c->label(), item.wrap_id});
                if (c->is_leaf())
                    program.push_back({OpKind::Leaf, 0, &c->id()});
                else
                    todo.push_back({c, 0, nullptr});
                continue;
            }
            auto kids = item.node->children();
            if (kids.size() - item.from >= 2) {
                program.push_back({OpKind::Join, 0, nullptr});
                todo.push_back({item.node, item.from + 1, nullptr});
                todo.push_back({&kids[item.from], 0, &item.node->id()});
            } else {
                todo.push_back({&kids[item.from], 0, &item.node->id()});
            }
        }
    }
    std::vector<LabeledTree> values;
    for (auto it = program.rbegin(); it != program.rend(); ++it) {
        switch (it->kind) {
        case OpKind::Leaf:
            values.push_back(LabeledTree::leaf(*it->id));
            break;
        case OpKind::Gamma:
            values.back() = gamma_unchecked(it->index, *it->id, values.back());
            break;
        case OpKind::Join: {
            LabeledTree h_first = std::move(values.back());
            values.pop_back();
            LabeledTree h_rest = std::move(values.back());
            values.pop_back();
            values.push_back(obslash_unchecked(h_rest, h_first));
            break;
        }
        }
    }
    assert(values.size() == 1);
    return std::move(values.back());
}

} // namespace bt
