#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace homim {

struct ConfigError : std::runtime_error {
    int line;
    explicit ConfigError(const std::string& msg, int line_no = 0)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg
                                         : msg),
          line(line_no) {}
};

/// One `[kind label]` block of a config file.  Keys keep file order so
/// diagnostics can point at them.
struct ConfigSection {
    std::string kind;
    std::string label;
    int line = 0;
    std::vector<std::pair<std::string, std::string>> entries;
    std::map<std::string, int> key_lines;

    bool has(const std::string& key) const;
    const std::string* find(const std::string& key) const;
    int line_of(const std::string& key) const;

    std::string require_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    long long get_int(const std::string& key, long long fallback) const;
    long long require_int(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;

    /// Accepts "a, b, c" and inclusive ranges "start:step:stop".
    std::vector<int> get_int_list(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;

    /// Comma-separated tokens.
    std::vector<std::string> get_string_list(const std::string& key) const;
};

/// Flat key-value format: `[section]` headers, `key = value` lines, `#`/`;`
/// comments.  Keys outside a section and duplicate keys are errors.
struct ConfigFile {
    std::vector<ConfigSection> sections;

    static ConfigFile parse_file(const std::string& path);
    static ConfigFile parse_text(const std::string& text);
};

}  // namespace homim
