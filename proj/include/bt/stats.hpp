#pragma once

#include "bt/tree.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bt {

/// The six scalar statistics of a tree.
struct StatTuple {
    int leaves = 0;   // leaf count
    int internal = 0; // non-leaf count
    int root = 0;     // root label
    int rpath = 0;    // right-path edge count
    int sub = 0;      // children of the root
    int rsub = 0;     // label-1 nodes strictly below the root on the right path

    auto operator<=>(const StatTuple&) const = default;
};

StatTuple stats(const Tree& t);

/// The h-swap: leaves<->internal, root<->rpath, sub<->rsub.
StatTuple swapped(const StatTuple& s);

enum class Stat { Leaves, Internal, Root, Rpath, Sub, Rsub };

inline constexpr std::array<Stat, 6> kAllStats = {
    Stat::Leaves, Stat::Internal, Stat::Root, Stat::Rpath, Stat::Sub, Stat::Rsub};

const char* to_string(Stat s);
std::optional<Stat> stat_from_name(std::string_view name);

int project(const StatTuple& s, Stat which);

/// Multiset of projected statistic tuples; rows iterate in lexicographic order.
using DistTable = std::map<std::vector<int>, long long>;

DistTable dist_table(const std::vector<Tree>& family,
                     const std::vector<Stat>& projection);

/// Rows only, tab-separated, one line per row, lexicographic order.
std::string render_rows(const DistTable& table);

/// Header naming the projected statistics then "count", followed by the rows.
std::string render_tsv(const DistTable& table, const std::vector<Stat>& projection);

} // namespace bt
