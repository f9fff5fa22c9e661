#include "bt/stats.hpp"

namespace bt {

StatTuple stats(const Tree& t) {
    StatTuple s;
    std::vector<const Tree*> todo{&t};
    while (!todo.empty()) {
        const Tree* n = todo.back();
        todo.pop_back();
        if (n->is_leaf())
            ++s.leaves;
        else
            ++s.internal;
        for (const Tree& c : n->children()) todo.push_back(&c);
    }
    s.root = t.label();
    s.rpath = rpath_length(t);
    s.sub = static_cast<int>(t.children().size());
    if (!t.is_leaf()) {
        const Tree* n = &t.children().back();
        while (true) {
            if (n->label() == 1) ++s.rsub;
            if (n->is_leaf()) break;
            n = &n->children().back();
        }
    }
    return s;
}

StatTuple swapped(const StatTuple& s) {
    return {s.internal, s.leaves, s.rpath, s.root, s.rsub, s.sub};
}

const char* to_string(Stat s) {
    switch (s) {
    case Stat::Leaves: return "leaves";
    case Stat::Internal: return "internal";
    case Stat::Root: return "root";
    case Stat::Rpath: return "rpath";
    case Stat::Sub: return "sub";
    case Stat::Rsub: return "rsub";
    }
    return "?";
}

std::optional<Stat> stat_from_name(std::string_view name) {
    for (Stat s : kAllStats)
        if (name == to_string(s)) return s;
    return std::nullopt;
}

int project(const StatTuple& s, Stat which) {
    switch (which) {
    case Stat::Leaves: return s.leaves;
    case Stat::Internal: return s.internal;
    case Stat::Root: return s.root;
    case Stat::Rpath: return s.rpath;
    case Stat::Sub: return s.sub;
    case Stat::Rsub: return s.rsub;
    }
    return 0;
}

DistTable dist_table(const std::vector<Tree>& family,
                     const std::vector<Stat>& projection) {
    DistTable table;
    for (const Tree& t : family) {
        StatTuple s = stats(t);
        std::vector<int> row;
        row.reserve(projection.size());
        for (Stat which : projection) row.push_back(project(s, which));
        ++table[std::move(row)];
    }
    return table;
}

std::string render_rows(const DistTable& table) {
    std::string out;
    for (const auto& [row, count] : table) {
        for (int v : row) {
            out += std::to_string(v);
            out += '\t';
        }
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

std::string render_tsv(const DistTable& table, const std::vector<Stat>& projection) {
    std::string out;
    for (Stat s : projection) {
        out += to_string(s);
        out += '\t';
    }
    out += "count\n";
    out += render_rows(table);
    return out;
}

} // namespace bt
