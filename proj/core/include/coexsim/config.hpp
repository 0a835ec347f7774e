#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace coexsim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key/value store with [section] grouping; keys are "section.name".
// Parsing preserves nothing but the values; emission uses a canonical
// section/key order so emit() -> parse() -> emit() is byte-identical.
class KeyValueConfig {
public:
    KeyValueConfig() = default;

    static KeyValueConfig parse(const std::string& text);
    static KeyValueConfig from_file(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::string& raw(const std::string& key) const;

    double get_double(const std::string& key) const;
    long long get_int(const std::string& key) const;
    bool get_bool(const std::string& key) const;
    std::string get_string(const std::string& key) const;

    // dotted key, e.g. "radar.peak_power_dBm=80"
    void set(const std::string& key, const std::string& value);
    void set_override(const std::string& assignment);  // "key=value"

    std::vector<std::string> keys() const;

    // Consumption tracking: scenario loading marks every key it understands,
    // then rejects leftovers so typos never pass silently.
    void mark_consumed(const std::string& key) const { consumed_.insert(key); }
    std::vector<std::string> unconsumed() const;

private:
    std::map<std::string, std::string> values_;
    mutable std::set<std::string> consumed_;
};

}  // namespace coexsim
