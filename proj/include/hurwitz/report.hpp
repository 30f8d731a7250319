#pragma once

#include "parse.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hurwitz {

using ojson = nlohmann::ordered_json;

enum class Status { Pass, Fail, Erratum };

inline const char* status_name(Status s)
{
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Erratum: return "erratum";
    }
    return "fail";
}

/// One comparison. An erratum is a mismatch with the reference value that
/// agrees with a recorded correction.
struct Check {
    std::string id;
    Status status = Status::Fail;
    std::string expected, computed, note;

    ojson to_json() const
    {
        ojson j;
        j["id"] = id;
        j["status"] = status_name(status);
        if (!expected.empty()) j["expected"] = expected;
        if (!computed.empty()) j["computed"] = computed;
        if (!note.empty()) j["note"] = note;
        return j;
    }
};

struct Section {
    std::string name;
    ojson data = ojson::object();
    std::vector<Check> checks;
    double seconds = 0;  // not serialized, reports must be reproducible

    Check& check(const std::string& id, bool ok, std::string expected = {}, std::string computed = {},
                 std::string note = {})
    {
        checks.push_back({id, ok ? Status::Pass : Status::Fail, std::move(expected), std::move(computed),
                          std::move(note)});
        return checks.back();
    }
    ojson to_json() const
    {
        ojson j;
        j["name"] = name;
        j["data"] = data;
        ojson cs = ojson::array();
        for (const auto& c : checks) cs.push_back(c.to_json());
        j["checks"] = cs;
        return j;
    }
};

struct Report {
    std::string command;
    std::vector<Section> sections;

    Section& add(const std::string& name)
    {
        sections.push_back({});
        sections.back().name = name;
        return sections.back();
    }
    int count(Status s) const
    {
        int n = 0;
        for (const auto& sec : sections)
            for (const auto& c : sec.checks) n += c.status == s;
        return n;
    }
    int total() const
    {
        int n = 0;
        for (const auto& sec : sections) n += static_cast<int>(sec.checks.size());
        return n;
    }
    const Check* find(const std::string& id) const
    {
        for (const auto& sec : sections)
            for (const auto& c : sec.checks)
                if (c.id == id) return &c;
        return nullptr;
    }
    ojson to_json() const
    {
        ojson j;
        j["command"] = command;
        ojson ss = ojson::array();
        for (const auto& s : sections) ss.push_back(s.to_json());
        j["sections"] = ss;
        j["summary"] = {{"checks", total()},
                        {"passed", count(Status::Pass)},
                        {"failed", count(Status::Fail)},
                        {"errata", count(Status::Erratum)}};
        return j;
    }
    std::string dump() const { return to_json().dump(2) + "\n"; }
    std::string to_markdown() const;
};

// ---------------------------------------------------------------------------
// Markdown

/// Typeset an ASCII class string: "(8g+12)*a1 - 9*a2'" -> "(8g+12)·a1 − 9·a2′".
inline std::string pretty(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '*') out += "\xC2\xB7";
        else if (c == '\'') out += "\xE2\x80\xB2";
        else if (c == '-') out += "\xE2\x88\x92";
        else if (c == '|') out += "\\|";
        else out += c;
    }
    return out;
}

namespace detail {

inline std::string md_scalar(const ojson& v)
{
    if (v.is_string()) return pretty(v.get<std::string>());
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + md_scalar(v[i]);
        return s;
    }
    if (v.is_object()) return pretty(v.dump());
    return v.dump();
}

inline bool is_table(const ojson& v)
{
    if (!v.is_array() || v.empty()) return false;
    for (const auto& x : v)
        if (!x.is_object()) return false;
    return true;
}

inline void md_table(std::ostringstream& os, const ojson& rows)
{
    std::vector<std::string> cols;
    for (const auto& r : rows)
        for (const auto& [k, _] : r.items())
            if (std::find(cols.begin(), cols.end(), k) == cols.end()) cols.push_back(k);
    os << "|";
    for (const auto& c : cols) os << " " << c << " |";
    os << "\n|";
    for (std::size_t i = 0; i < cols.size(); ++i) os << " --- |";
    os << "\n";
    for (const auto& r : rows) {
        os << "|";
        for (const auto& c : cols) os << " " << (r.contains(c) ? md_scalar(r[c]) : "") << " |";
        os << "\n";
    }
    os << "\n";
}

inline void md_data(std::ostringstream& os, const ojson& data, int level)
{
    bool list = false;
    for (const auto& [k, v] : data.items()) {
        if (is_table(v) || (v.is_object() && !v.empty())) {
            if (list) os << "\n";
            list = false;
            os << std::string(level, '#') << " " << k << "\n\n";
            if (is_table(v)) md_table(os, v);
            else md_data(os, v, level + 1);
        } else {
            os << "- **" << k << "**: " << md_scalar(v) << "\n";
            list = true;
        }
    }
    if (list) os << "\n";
}

} // namespace detail

inline std::string Report::to_markdown() const
{
    std::ostringstream os;
    os << "# " << command << "\n\n";
    for (const auto& s : sections) {
        os << "## " << s.name << "\n\n";
        detail::md_data(os, s.data, 3);
        if (!s.checks.empty()) {
            ojson rows = ojson::array();
            for (const auto& c : s.checks) {
                ojson r;
                r["check"] = c.id;
                r["status"] = status_name(c.status);
                r["expected"] = c.expected;
                r["computed"] = c.computed;
                r["note"] = c.note;
                rows.push_back(r);
            }
            detail::md_table(os, rows);
        }
    }
    os << "**" << count(Status::Pass) << "/" << total() << " checks passed";
    if (int f = count(Status::Fail)) os << ", " << f << " failed";
    if (int e = count(Status::Erratum)) os << ", " << e << " recorded errata";
    os << "**\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Reference values

/// Reference values from data/golden.json (or the file named by HURWITZ_GOLDEN).
class Golden {
public:
    static const Golden& get()
    {
        static const Golden g = load();
        return g;
    }

    static Golden load()
    {
        std::string path;
        if (const char* p = std::getenv("HURWITZ_GOLDEN"); p && *p) path = p;
        else path = std::string(HURWITZ_DATA_DIR) + "/golden.json";
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open reference data " + path);
        Golden g;
        g.j_ = ojson::parse(in);
        return g;
    }

    const ojson& at(const std::string& suite, const std::string& key) const
    {
        const auto& s = j_.at(suite);
        if (!s.contains(key)) throw std::out_of_range("no reference value " + suite + "." + key);
        return s.at(key);
    }
    /// Printed value of a class entry.
    std::string value(const std::string& suite, const std::string& key) const
    {
        const auto& v = at(suite, key);
        return v.is_object() ? v.at("value").get<std::string>() : v.get<std::string>();
    }
    std::optional<std::string> erratum(const std::string& suite, const std::string& key) const
    {
        const auto& v = at(suite, key);
        if (v.is_object() && v.contains("erratum")) return v.at("erratum").get<std::string>();
        return std::nullopt;
    }
    std::vector<std::string> strings(const std::string& suite, const std::string& key,
                                     const std::string& sub = {}) const
    {
        const auto& v = sub.empty() ? at(suite, key) : at(suite, key).at(sub);
        return v.get<std::vector<std::string>>();
    }
    std::vector<int> ints(const std::string& suite, const std::string& key) const
    {
        return at(suite, key).get<std::vector<int>>();
    }
    const ojson& raw() const { return j_; }

private:
    ojson j_;
};

/// Compare a computed class with a reference string (parsed in the same ring).
template <class C>
Check& check_class(Section& sec, const std::string& id, const GradedClass<C>& computed, const std::string& suite,
                   const std::string& key, std::optional<long> genus)
{
    const auto& G = Golden::get();
    auto want = G.value(suite, key);
    auto cmp = [&](const std::string& s) { return parse_class<C>(s, computed.ring(), genus) == computed; };
    auto& c = sec.check(id, cmp(want), want, computed.to_string());
    if (c.status == Status::Fail)
        if (auto e = G.erratum(suite, key); e && cmp(*e)) {
            c.status = Status::Erratum;
            c.note = "matches recorded correction " + *e;
        }
    return c;
}

} // namespace hurwitz
