#include "bt/involution.hpp"

#include <cassert>
#include <cstdint>
#include <variant>
#include <vector>

namespace bt {

namespace {

enum class OpKind : std::uint8_t { Leaf, Gamma, Join };

struct Op {
    OpKind kind;
    int index; // gamma index; unused otherwise
};

// Flattens the canonical sum decomposition of t into a prefix program
// without materializing any intermediate trees. A slice item stands for the
// tree whose children are node->children()[from..] and whose root label is
// their label sum; a wrap item stands for the indecomposable summand
// lambda_{label(c)}(body of c) carrying one child c.
void emit_program(const Tree& t, std::vector<Op>& program) {
    struct Item {
        const Tree* node;
        std::size_t from;
        bool wrap;
    };
    if (t.is_leaf()) {
        program.push_back({OpKind::Leaf, 0});
        return;
    }
    std::vector<Item> todo{{&t, 0, false}};
    while (!todo.empty()) {
        Item item = todo.back();
        todo.pop_back();
        if (item.wrap) {
            const Tree* c = item.node;
            program.push_back({OpKind::Gamma, c->label()});
            if (c->is_leaf())
                program.push_back({OpKind::Leaf, 0});
            else
                todo.push_back({c, 0, false});
            continue;
        }
        auto kids = item.node->children();
        if (kids.size() - item.from >= 2) {
            program.push_back({OpKind::Join, 0});
            todo.push_back({item.node, item.from + 1, false}); // rest
            todo.push_back({&kids[item.from], 0, true});       // first
        } else {
            todo.push_back({&kids[item.from], 0, true});
        }
    }
}

} // namespace

Tree h(const Tree& t) {
    std::vector<Op> program;
    emit_program(t, program);
    // Reversing a prefix emission yields a postfix program: operands are on
    // the value stack before their operator, with the first summand on top.
    std::vector<Tree> values;
    for (auto it = program.rbegin(); it != program.rend(); ++it) {
        switch (it->kind) {
        case OpKind::Leaf:
            values.emplace_back();
            break;
        case OpKind::Gamma:
            values.back() = gamma(it->index, values.back());
            break;
        case OpKind::Join: {
            Tree h_first = std::move(values.back());
            values.pop_back();
            Tree h_rest = std::move(values.back());
            values.pop_back();
            values.push_back(obslash(h_rest, h_first));
            break;
        }
        }
    }
    assert(values.size() == 1);
    return std::move(values.back());
}

HDualCheck h_dual_check(const Tree& t) {
    HDualCheck result;
    if (t.is_leaf()) {
        result.base = (h(t) == t);
        return result;
    }
    Tree ht = h(t);
    int k = rpath_length(t);
    for (int i = 1; i <= k; ++i) {
        if (h(gamma(i, t)) != lambda(i, ht)) {
            result.gamma_commutes = false;
            break;
        }
    }
    DualView view = decompose_dual(t);
    if (auto* ds = std::get_if<DualSumCase>(&view))
        result.dual_sum_swaps = (ht == oplus(h(ds->lower), h(ds->upper)));
    return result;
}

} // namespace bt
