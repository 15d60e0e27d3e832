#ifndef UWT_CORE_KVFILE_HPP
#define UWT_CORE_KVFILE_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace uwt {

/// Flat "key = value" text with [section] headers. Keys are addressed as
/// "section.key"; lines starting with '#' or ';' are comments. This one
/// format backs train configs, dataset manifests and checkpoint descriptors.
class KvFile {
public:
    KvFile() = default;

    static KvFile parse_string(const std::string& text, const std::string& origin = "<string>") {
        KvFile kv;
        std::istringstream in(text);
        std::string line, section;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string s = trim(line);
            if (s.empty() || s[0] == '#' || s[0] == ';') continue;
            if (s.front() == '[') {
                if (s.back() != ']')
                    throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                             ": malformed section header");
                section = trim(s.substr(1, s.size() - 2));
                continue;
            }
            const auto eq = s.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error(origin + ":" + std::to_string(lineno) +
                                         ": expected 'key = value'");
            std::string key = trim(s.substr(0, eq));
            std::string value = trim(s.substr(eq + 1));
            if (key.empty())
                throw std::runtime_error(origin + ":" + std::to_string(lineno) + ": empty key");
            kv.set(section.empty() ? key : section + "." + key, value);
        }
        return kv;
    }

    static KvFile parse_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open config file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_string(ss.str(), path);
    }

    void set(const std::string& key, const std::string& value) {
        if (!entries_.count(key)) order_.push_back(key);
        entries_[key] = value;
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::string get(const std::string& key) const {
        auto it = entries_.find(key);
        if (it == entries_.end())
            throw std::runtime_error("missing required config key: " + key);
        consumed_.insert(key);
        return it->second;
    }

    std::string get_or(const std::string& key, const std::string& fallback) const {
        auto it = entries_.find(key);
        if (it == entries_.end()) return fallback;
        consumed_.insert(key);
        return it->second;
    }

    double get_real(const std::string& key) const { return to_real(key, get(key)); }
    double get_real_or(const std::string& key, double fallback) const {
        return has(key) ? to_real(key, get(key)) : fallback;
    }
    long get_int(const std::string& key) const { return to_int(key, get(key)); }
    long get_int_or(const std::string& key, long fallback) const {
        return has(key) ? to_int(key, get(key)) : fallback;
    }
    bool get_bool_or(const std::string& key, bool fallback) const {
        if (!has(key)) return fallback;
        std::string v = get(key);
        std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
        if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
        if (v == "false" || v == "0" || v == "no" || v == "off") return false;
        throw std::runtime_error("config key '" + key + "': expected boolean, got '" + v + "'");
    }

    /// Comma-separated integer list.
    std::vector<long> get_int_list(const std::string& key) const {
        std::vector<long> out;
        std::istringstream ss(get(key));
        std::string item;
        while (std::getline(ss, item, ','))
            out.push_back(to_int(key, trim(item)));
        return out;
    }

    const std::vector<std::string>& keys() const { return order_; }

    /// Keys never read through a get* accessor; used to reject unknown keys
    /// before any work starts.
    std::vector<std::string> unconsumed_keys() const {
        std::vector<std::string> out;
        for (const auto& k : order_)
            if (!consumed_.count(k)) out.push_back(k);
        return out;
    }

    std::string to_string() const {
        // groups keys back into sections for a readable snapshot
        std::ostringstream os;
        std::string current;
        bool first = true;
        for (const auto& k : order_) {
            const auto dot = k.find('.');
            const std::string section = dot == std::string::npos ? "" : k.substr(0, dot);
            const std::string name = dot == std::string::npos ? k : k.substr(dot + 1);
            if (section != current || first) {
                if (!first) os << "\n";
                if (!section.empty()) os << "[" << section << "]\n";
                current = section;
                first = false;
            }
            os << name << " = " << entries_.at(k) << "\n";
        }
        return os.str();
    }

    static std::string trim(const std::string& s) {
        size_t b = 0, e = s.size();
        while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
        return s.substr(b, e - b);
    }

private:
    static double to_real(const std::string& key, const std::string& v) {
        try {
            size_t pos = 0;
            double d = std::stod(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return d;
        } catch (const std::exception&) {
            throw std::runtime_error("config key '" + key + "': expected number, got '" + v + "'");
        }
    }
    static long to_int(const std::string& key, const std::string& v) {
        try {
            size_t pos = 0;
            long n = std::stol(v, &pos);
            if (pos != v.size()) throw std::invalid_argument(v);
            return n;
        } catch (const std::exception&) {
            throw std::runtime_error("config key '" + key + "': expected integer, got '" + v + "'");
        }
    }

    std::map<std::string, std::string> entries_;
    std::vector<std::string> order_;
    mutable std::set<std::string> consumed_;
};

/// FNV-1a over a string; used as the stable config hash in checkpoint
/// descriptors.
inline std::string fnv1a_hex(const std::string& text) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace uwt

#endif
