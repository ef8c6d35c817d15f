#include "homim/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace homim {
namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string strip_comment(const std::string& s) {
    const std::size_t pos = s.find_first_of("#;");
    return pos == std::string::npos ? s : s.substr(0, pos);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) parts.push_back("");
    return parts;
}

long long parse_int(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t used = 0;
        long long value = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "' expects an integer, got '" + v + "'", line);
    }
}

double parse_double(const std::string& v, const std::string& key, int line) {
    try {
        std::size_t used = 0;
        double value = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "' expects a number, got '" + v + "'", line);
    }
}

}  // namespace

bool ConfigSection::has(const std::string& key) const { return find(key) != nullptr; }

const std::string* ConfigSection::find(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return &v;
    return nullptr;
}

int ConfigSection::line_of(const std::string& key) const {
    auto it = key_lines.find(key);
    return it == key_lines.end() ? line : it->second;
}

std::string ConfigSection::require_string(const std::string& key) const {
    const std::string* v = find(key);
    if (!v)
        throw ConfigError("section [" + kind + (label.empty() ? "" : " " + label) +
                              "] is missing required key '" + key + "'",
                          line);
    return *v;
}

std::string ConfigSection::get_string(const std::string& key,
                                      const std::string& fallback) const {
    const std::string* v = find(key);
    return v ? *v : fallback;
}

long long ConfigSection::get_int(const std::string& key, long long fallback) const {
    const std::string* v = find(key);
    return v ? parse_int(*v, key, line_of(key)) : fallback;
}

long long ConfigSection::require_int(const std::string& key) const {
    return parse_int(require_string(key), key, line_of(key));
}

double ConfigSection::get_double(const std::string& key, double fallback) const {
    const std::string* v = find(key);
    return v ? parse_double(*v, key, line_of(key)) : fallback;
}

std::uint64_t ConfigSection::get_u64(const std::string& key,
                                     std::uint64_t fallback) const {
    const std::string* v = find(key);
    if (!v) return fallback;
    try {
        // stoull accepts a leading '-' and wraps; reject it explicitly.
        if (!v->empty() && v->front() == '-') throw std::invalid_argument("negative");
        std::size_t used = 0;
        std::uint64_t value = std::stoull(*v, &used);
        if (used != v->size()) throw std::invalid_argument("trailing characters");
        return value;
    } catch (const std::exception&) {
        throw ConfigError("key '" + key + "' expects an unsigned integer, got '" + *v + "'",
                          line_of(key));
    }
}

std::vector<int> ConfigSection::get_int_list(const std::string& key) const {
    const std::string v = trim(require_string(key));
    const int ln = line_of(key);
    if (v.find(':') != std::string::npos) {
        // Inclusive integer range start:step:stop.
        const std::vector<std::string> parts = split(v, ':');
        if (parts.size() != 3)
            throw ConfigError("key '" + key + "' range expects start:step:stop", ln);
        const long long start = parse_int(parts[0], key, ln);
        const long long step = parse_int(parts[1], key, ln);
        const long long stop = parse_int(parts[2], key, ln);
        if (step <= 0)
            throw ConfigError("key '" + key + "' range step must be positive", ln);
        std::vector<int> out;
        for (long long x = start; x <= stop; x += step)
            out.push_back(static_cast<int>(x));
        return out;
    }
    std::vector<int> out;
    for (const std::string& tok : split(v, ',')) {
        if (tok.empty())
            throw ConfigError("key '" + key + "' has an empty list element", ln);
        out.push_back(static_cast<int>(parse_int(tok, key, ln)));
    }
    return out;
}

std::vector<double> ConfigSection::get_double_list(const std::string& key) const {
    const std::string v = trim(require_string(key));
    const int ln = line_of(key);
    if (v.find(':') != std::string::npos) {
        // Inclusive range start:step:stop with a half-step tolerance at the end.
        const std::vector<std::string> parts = split(v, ':');
        if (parts.size() != 3)
            throw ConfigError("key '" + key + "' range expects start:step:stop", ln);
        const double start = parse_double(parts[0], key, ln);
        const double step = parse_double(parts[1], key, ln);
        const double stop = parse_double(parts[2], key, ln);
        if (step <= 0.0)
            throw ConfigError("key '" + key + "' range step must be positive", ln);
        std::vector<double> out;
        for (int i = 0;; ++i) {
            const double x = start + i * step;
            if (x > stop + 1e-9 * step) break;
            out.push_back(x);
        }
        return out;
    }
    std::vector<double> out;
    for (const std::string& tok : split(v, ',')) {
        if (tok.empty())
            throw ConfigError("key '" + key + "' has an empty list element", ln);
        out.push_back(parse_double(tok, key, ln));
    }
    return out;
}

std::vector<std::string> ConfigSection::get_string_list(const std::string& key) const {
    std::vector<std::string> out;
    for (const std::string& tok : split(require_string(key), ',')) {
        if (tok.empty())
            throw ConfigError("key '" + key + "' has an empty list element", line_of(key));
        out.push_back(tok);
    }
    return out;
}

ConfigFile ConfigFile::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

ConfigFile ConfigFile::parse_text(const std::string& text) {
    ConfigFile file;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string stripped = trim(strip_comment(raw));
        if (stripped.empty()) continue;

        if (stripped.front() == '[') {
            if (stripped.back() != ']')
                throw ConfigError("unterminated section header", line_no);
            const std::string header = trim(stripped.substr(1, stripped.size() - 2));
            if (header.empty()) throw ConfigError("empty section header", line_no);
            ConfigSection section;
            const std::size_t space = header.find_first_of(" \t");
            section.kind = space == std::string::npos ? header : trim(header.substr(0, space));
            section.label = space == std::string::npos ? "" : trim(header.substr(space + 1));
            section.line = line_no;
            file.sections.push_back(std::move(section));
            continue;
        }

        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected 'key = value' or '[section]', got '" + stripped + "'",
                              line_no);
        if (file.sections.empty())
            throw ConfigError("key before any [section] header", line_no);
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) throw ConfigError("empty key", line_no);
        if (value.empty())
            throw ConfigError("key '" + key + "' has no value", line_no);
        ConfigSection& section = file.sections.back();
        if (section.has(key))
            throw ConfigError("duplicate key '" + key + "' in section [" + section.kind + "]",
                              line_no);
        section.entries.emplace_back(key, value);
        section.key_lines[key] = line_no;
    }
    return file;
}

}  // namespace homim
