#ifndef MIXEDCOLOR_TOOLS_REPORT_HPP
#define MIXEDCOLOR_TOOLS_REPORT_HPP

#include "json.hpp"

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace mixedcolor::cli {

/// 64-bit FNV-1a, printed as 16 hex digits.
inline std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

/// Ordered key/value report; printed as `key=value` lines or one JSON object.
class RunReport {
public:
    using Value = std::variant<std::string, std::int64_t, double, bool>;

    void set(const std::string& key, Value v)
    {
        for (auto& [k, old] : fields_)
            if (k == key) {
                old = std::move(v);
                return;
            }
        fields_.emplace_back(key, std::move(v));
    }
    void set(const std::string& key, const char* v) { set(key, Value(std::string(v))); }
    void set(const std::string& key, const std::string& v) { set(key, Value(v)); }
    void set(const std::string& key, int v) { set(key, Value(static_cast<std::int64_t>(v))); }
    void set(const std::string& key, std::int64_t v) { set(key, Value(v)); }
    void set(const std::string& key, double v) { set(key, Value(v)); }
    void set(const std::string& key, bool v) { set(key, Value(v)); }

    const std::vector<std::pair<std::string, Value>>& fields() const { return fields_; }

    void print(std::ostream& out, bool json) const
    {
        if (json) {
            nlohmann::ordered_json doc = nlohmann::ordered_json::object();
            for (const auto& [k, v] : fields_)
                std::visit([&](const auto& x) { doc[k] = x; }, v);
            out << doc.dump(2) << '\n';
            return;
        }
        for (const auto& [k, v] : fields_) {
            out << k << '=';
            std::visit(
                [&](const auto& x) {
                    using T = std::decay_t<decltype(x)>;
                    if constexpr (std::is_same_v<T, bool>)
                        out << (x ? "true" : "false");
                    else if constexpr (std::is_same_v<T, double>) {
                        char buf[32];
                        std::snprintf(buf, sizeof buf, "%.6f", x);
                        out << buf;
                    }
                    else
                        out << x;
                },
                v);
            out << '\n';
        }
    }

private:
    std::vector<std::pair<std::string, Value>> fields_;
};

} // namespace mixedcolor::cli

#endif
