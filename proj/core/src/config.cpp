#include "coexsim/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace coexsim {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(const std::string& text) {
    KeyValueConfig cfg;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": malformed section header: " + t);
            section = trim(t.substr(1, t.size() - 2));
            if (section.empty())
                throw ConfigError("line " + std::to_string(lineno) +
                                  ": empty section name");
            continue;
        }
        size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) +
                              ": expected key = value, got: " + t);
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        std::string full = section.empty() ? key : section + "." + key;
        if (cfg.values_.count(full))
            throw ConfigError("line " + std::to_string(lineno) +
                              ": duplicate key: " + full);
        cfg.values_[full] = val;
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open scenario file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

const std::string& KeyValueConfig::raw(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("missing key: " + key);
    return it->second;
}

double KeyValueConfig::get_double(const std::string& key) const {
    const std::string& s = raw(key);
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw ConfigError("key " + key + ": not a number: " + s);
    return v;
}

long long KeyValueConfig::get_int(const std::string& key) const {
    const std::string& s = raw(key);
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (end == s.c_str() || *end != '\0')
        throw ConfigError("key " + key + ": not an integer: " + s);
    return v;
}

bool KeyValueConfig::get_bool(const std::string& key) const {
    const std::string& s = raw(key);
    if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
    if (s == "false" || s == "0" || s == "no" || s == "off") return false;
    throw ConfigError("key " + key + ": not a boolean: " + s);
}

std::string KeyValueConfig::get_string(const std::string& key) const {
    return raw(key);
}

void KeyValueConfig::set(const std::string& key, const std::string& value) {
    values_[key] = value;
}

void KeyValueConfig::set_override(const std::string& assignment) {
    size_t eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("override must be key=value, got: " + assignment);
    std::string key = trim(assignment.substr(0, eq));
    std::string val = trim(assignment.substr(eq + 1));
    std::string stripped = key;
    // overrides may target keys that do not exist yet; validity is checked
    // when the scenario consumes them
    values_[stripped] = val;
}

std::vector<std::string> KeyValueConfig::keys() const {
    std::vector<std::string> out;
    out.reserve(values_.size());
    for (const auto& [k, _] : values_) out.push_back(k);
    return out;
}

std::vector<std::string> KeyValueConfig::unconsumed() const {
    std::vector<std::string> out;
    for (const auto& [k, _] : values_)
        if (!consumed_.count(k)) out.push_back(k);
    return out;
}

}  // namespace coexsim
