#pragma once

#include "bt/tree.hpp"

namespace bt {

/// The involution defined by h(leaf) = leaf, h(lambda_i t) = gamma_i h(t),
/// h(u + v) = h(v) obslash h(u) over the canonical sum decomposition.
/// Stack-safe for trees of depth up to 10^4.
Tree h(const Tree& t);

/// Truth values of the three duality clauses evaluated on t, used by the
/// verification suites: h fixes the leaf, commutes gamma into lambda, and
/// swaps the operands of the canonical dual split into a sum.
struct HDualCheck {
    bool base = true;
    bool gamma_commutes = true;
    bool dual_sum_swaps = true;
};

HDualCheck h_dual_check(const Tree& t);

} // namespace bt
