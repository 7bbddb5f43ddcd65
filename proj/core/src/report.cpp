#include "vertexlab/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace vtx {

void VerificationReport::add(std::string name, std::string expected, std::string actual) {
    bool ok = expected == actual;
    cases.push_back({std::move(name), std::move(expected), std::move(actual), ok});
}

void VerificationReport::add_bool(std::string name, bool ok) {
    cases.push_back({std::move(name), "true", ok ? "true" : "false", ok});
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix) {
    for (auto c : other.cases) {
        c.name = prefix + c.name;
        cases.push_back(std::move(c));
    }
}

void VerificationReport::sort_cases() {
    std::stable_sort(cases.begin(), cases.end(),
                     [](const Case& a, const Case& b) { return a.name < b.name; });
}

std::string VerificationReport::text() const {
    std::ostringstream os;
    os << "suite: " << suite << "\n";
    for (auto& [k, v] : params) os << "  param " << k << " = " << v << "\n";
    size_t w = 4;
    for (auto& c : cases) w = std::max(w, c.name.size());
    for (auto& c : cases) {
        os << "  " << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        for (size_t i = c.name.size(); i < w + 2; ++i) os << ' ';
        os << "expected: " << c.expected << "  actual: " << c.actual << "\n";
    }
    os << (pass() ? "PASS" : "FAIL") << " (" << cases.size() << " cases, " << elapsed_ms
       << " ms)\n";
    return os.str();
}

std::string VerificationReport::json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["params"] = nlohmann::json::object();
    for (auto& [k, v] : params) j["params"][k] = v;
    j["cases"] = nlohmann::json::array();
    for (auto& c : cases)
        j["cases"].push_back(
            {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    j["pass"] = pass();
    j["elapsed_ms"] = elapsed_ms;
    return j.dump(2);
}

VerificationReport VerificationReport::from_json(const std::string& s) {
    auto j = nlohmann::json::parse(s);
    VerificationReport r;
    r.suite = j.at("suite").get<std::string>();
    for (auto& [k, v] : j.at("params").items()) r.params[k] = v.get<std::string>();
    for (auto& c : j.at("cases")) {
        r.cases.push_back({c.at("name").get<std::string>(), c.at("expected").get<std::string>(),
                           c.at("actual").get<std::string>(), c.at("pass").get<bool>()});
    }
    r.elapsed_ms = j.at("elapsed_ms").get<int64_t>();
    return r;
}

}  // namespace vtx
