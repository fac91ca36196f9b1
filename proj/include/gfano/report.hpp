#pragma once

#include <gfano/classifier.hpp>

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace gfano {

inline constexpr const char* kVersion = "0.1.0";

struct CheckRecord {
    std::string case_label;
    std::string name;
    std::string anchor;
    std::string expected;
    std::string got;
    bool pass = false;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct Report {
    std::string version = kVersion;
    std::vector<CheckRecord> checks;

    Int passed() const
    {
        Int n = 0;
        for (const auto& c : checks)
            n += c.pass ? 1 : 0;
        return n;
    }
    Int failed() const { return static_cast<Int>(checks.size()) - passed(); }
    bool ok() const { return failed() == 0; }

    void add(const std::string& case_label, const CheckResult& r)
    {
        checks.push_back({case_label, r.name, r.anchor, r.expected, r.got, r.pass});
    }

    friend bool operator==(const Report&, const Report&) = default;
};

inline Report make_report(const std::vector<ClassificationCase>& cases)
{
    Report rep;
    for (const auto& c : cases)
        for (const auto& r : c.checks)
            rep.add(c.label, r);
    return rep;
}

inline void to_json(nlohmann::json& j, const CheckRecord& r)
{
    j = nlohmann::json{{"case", r.case_label}, {"name", r.name},  {"anchor", r.anchor},
                       {"expected", r.expected}, {"got", r.got}, {"pass", r.pass}};
}

inline void from_json(const nlohmann::json& j, CheckRecord& r)
{
    j.at("case").get_to(r.case_label);
    j.at("name").get_to(r.name);
    j.at("anchor").get_to(r.anchor);
    j.at("expected").get_to(r.expected);
    j.at("got").get_to(r.got);
    j.at("pass").get_to(r.pass);
}

inline void to_json(nlohmann::json& j, const Report& r)
{
    j = nlohmann::json{{"version", r.version},
                       {"checks", r.checks},
                       {"summary", {{"passed", r.passed()}, {"failed", r.failed()}}}};
}

/// Rejects reports whose summary disagrees with the tally of its records.
inline void from_json(const nlohmann::json& j, Report& r)
{
    j.at("version").get_to(r.version);
    j.at("checks").get_to(r.checks);
    const auto& summary = j.at("summary");
    if (summary.at("passed").get<Int>() != r.passed() || summary.at("failed").get<Int>() != r.failed())
        fail(Errc::Inconsistent, "report summary does not match its checks");
}

} // namespace gfano
