#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Minimal shell runner for exercising the CLI end to end.

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    out += "'";
    return out;
}

// Runs `command` (a shell pipeline) with the given stdin bytes.
inline RunResult run_command(const std::string& command, const std::string& input) {
    namespace fs = std::filesystem;
    static std::atomic<unsigned> serial{0};
    auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
    fs::path dir = fs::temp_directory_path() /
                   ("bt_test_" + std::to_string(stamp) + "_" +
                    std::to_string(serial.fetch_add(1)));
    fs::create_directories(dir);
    fs::path in_path = dir / "in";
    fs::path out_path = dir / "out";
    fs::path err_path = dir / "err";
    {
        std::ofstream in(in_path, std::ios::binary);
        in << input;
    }
    std::string full = "( " + command + " ) < " + shell_quote(in_path.string()) +
                       " > " + shell_quote(out_path.string()) + " 2> " +
                       shell_quote(err_path.string());
    int raw = std::system(full.c_str());
    RunResult result;
    result.exit_code = (raw == -1) ? -1 : WEXITSTATUS(raw);
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    fs::remove_all(dir);
    return result;
}
