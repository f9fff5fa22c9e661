#include "bt/enumerate.hpp"
#include "bt/involution.hpp"
#include "bt/labeled.hpp"
#include "bt/stats.hpp"
#include "bt/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

ordered_json tree_json(const bt::Tree& t) {
    ordered_json j;
    j["label"] = t.label();
    ordered_json arr = ordered_json::array();
    for (const bt::Tree& c : t.children()) arr.push_back(tree_json(c));
    j["children"] = std::move(arr);
    return j;
}

ordered_json labeled_json(const bt::LabeledTree& t) {
    ordered_json j;
    j["label"] = t.label();
    j["id"] = t.id();
    ordered_json arr = ordered_json::array();
    for (const bt::LabeledTree& c : t.children()) arr.push_back(labeled_json(c));
    j["children"] = std::move(arr);
    return j;
}

std::string join(const std::vector<std::string>& word) {
    std::string out;
    for (const std::string& letter : word) out += letter;
    return out;
}

std::string join_tuple(const std::vector<std::vector<std::string>>& words) {
    std::string out;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i) out += ',';
        out += join(words[i]);
    }
    return out;
}

int run_enumerate(int nodes, std::optional<int> root, bool indecomposable,
                  bool labeled, const std::string& format) {
    bt::FamilySpec spec{nodes, root, indecomposable};
    bt::generate(spec, [&](const bt::Tree& t) {
        if (labeled) {
            bt::LabeledTree lt = bt::with_canonical_ids(t);
            if (format == "json")
                std::cout << labeled_json(lt).dump() << '\n';
            else
                std::cout << bt::print_labeled(lt) << '\n';
        } else {
            if (format == "json")
                std::cout << tree_json(t).dump() << '\n';
            else
                std::cout << bt::print(t) << '\n';
        }
    });
    return 0;
}

int run_map(bool labeled) {
    std::string line;
    long long line_no = 0;
    while (std::getline(std::cin, line)) {
        ++line_no;
        try {
            if (labeled)
                std::cout << bt::print_labeled(bt::labeled_h(bt::parse_labeled(line)))
                          << '\n';
            else
                std::cout << bt::print(bt::h(bt::parse(line))) << '\n';
        } catch (const bt::TreeError& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            return 2;
        }
    }
    return 0;
}

int run_stats(bool labeled) {
    std::cout << "leaves\tinternal\troot\trpath\tsub\trsub\n";
    std::string line;
    long long line_no = 0;
    while (std::getline(std::cin, line)) {
        ++line_no;
        try {
            bt::Tree t = labeled ? bt::forget(bt::parse_labeled(line)) : bt::parse(line);
            bt::StatTuple s = bt::stats(t);
            std::cout << s.leaves << '\t' << s.internal << '\t' << s.root << '\t'
                      << s.rpath << '\t' << s.sub << '\t' << s.rsub << '\n';
        } catch (const bt::TreeError& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            return 2;
        }
    }
    return 0;
}

int run_words() {
    std::cout << "nodes\tleaves\tinternal\troot\trpath\tsub\trsub\n";
    std::string line;
    long long line_no = 0;
    while (std::getline(std::cin, line)) {
        ++line_no;
        try {
            bt::WordStats w = bt::words(bt::parse_labeled(line));
            std::cout << join(w.nodes) << '\t' << join(w.leaves) << '\t'
                      << join(w.internal) << '\t' << join(w.root) << '\t'
                      << join(w.rpath) << '\t' << join_tuple(w.sub) << '\t'
                      << join_tuple(w.rsub) << '\n';
        } catch (const bt::TreeError& e) {
            std::cerr << "line " << line_no << ": " << e.what() << '\n';
            return 2;
        }
    }
    return 0;
}

int run_count(int nodes, const std::string& by, const std::string& format) {
    std::vector<bt::Stat> projection;
    std::size_t start = 0;
    while (start <= by.size()) {
        std::size_t comma = by.find(',', start);
        std::string name = by.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        auto stat = bt::stat_from_name(name);
        if (!stat) {
            std::cerr << "unknown statistic '" << name << "'\n";
            return 2;
        }
        projection.push_back(*stat);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    std::vector<bt::Tree> family = bt::generate_all({nodes, std::nullopt, false});
    bt::DistTable table = bt::dist_table(family, projection);
    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& [row, count] : table) {
            ordered_json obj;
            for (std::size_t i = 0; i < projection.size(); ++i)
                obj[bt::to_string(projection[i])] = row[i];
            obj["count"] = count;
            rows.push_back(std::move(obj));
        }
        std::cout << rows.dump() << '\n';
    } else {
        std::cout << bt::render_tsv(table, projection);
    }
    return 0;
}

int run_verify(int max_nodes, int oracle_max) {
    std::vector<bt::SuiteResult> results =
        bt::run_all_suites({max_nodes, oracle_max});
    bool all_passed = true;
    for (const bt::SuiteResult& r : results) {
        if (r.passed) {
            std::cout << "PASS " << r.name << " (" << r.cases << " cases)\n";
        } else {
            std::cout << "FAIL " << r.name << ": " << r.counterexample << '\n';
            all_passed = false;
        }
    }
    std::cout << (all_passed ? "all suites passed\n" : "verification failed\n");
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"beta(1,0)-trees: enumeration, statistics, and the involution h"};
    app.require_subcommand(1);

    int nodes = 1;
    std::optional<int> root;
    bool indecomposable = false;
    bool labeled = false;
    std::string format = "sexp";
    CLI::App* enumerate = app.add_subcommand("enumerate", "stream a family in canonical order");
    enumerate->add_option("--nodes", nodes, "tree size")->required()->check(CLI::PositiveNumber);
    enumerate->add_option("--root", root, "keep only trees with this root label")->check(CLI::PositiveNumber);
    enumerate->add_flag("--indecomposable", indecomposable, "keep only trees whose root has one child");
    enumerate->add_flag("--labeled", labeled, "attach preorder-position ids");
    enumerate->add_option("--format", format, "output format")->check(CLI::IsMember({"sexp", "json"}));

    bool map_labeled = false;
    CLI::App* map = app.add_subcommand("map", "apply h to each tree on stdin");
    map->add_flag("--labeled", map_labeled, "read and write labeled trees");

    bool stats_labeled = false;
    CLI::App* stats = app.add_subcommand("stats", "tabulate the six statistics of each tree on stdin");
    stats->add_flag("--labeled", stats_labeled, "read labeled trees");

    CLI::App* words = app.add_subcommand("words", "tabulate the six word statistics of each labeled tree on stdin");

    int count_nodes = 1;
    std::string by;
    std::string count_format = "tsv";
    CLI::App* count = app.add_subcommand("count", "histogram of statistics over a level");
    count->add_option("--nodes", count_nodes, "tree size")->required()->check(CLI::PositiveNumber);
    count->add_option("--by", by, "comma-separated statistic names")->required();
    count->add_option("--format", count_format, "table format")->check(CLI::IsMember({"tsv", "json"}));

    int max_nodes = 0;
    int oracle_max = 5;
    CLI::App* verify = app.add_subcommand("verify", "run every property suite up to a size bound");
    verify->add_option("--max-nodes", max_nodes, "largest level to check")->required()->check(CLI::Range(2, 16));
    verify->add_option("--oracle-max", oracle_max, "largest level for the brute-force cross-check")->check(CLI::Range(1, bt::kOracleCap));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed())
            return run_enumerate(nodes, root, indecomposable, labeled, format);
        if (map->parsed()) return run_map(map_labeled);
        if (stats->parsed()) return run_stats(stats_labeled);
        if (words->parsed()) return run_words();
        if (count->parsed()) return run_count(count_nodes, by, count_format);
        if (verify->parsed()) return run_verify(max_nodes, oracle_max);
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }
    return 2;
}
