#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace vtx {

/// Structured pass/fail record for one verification suite. Serializes to the
/// fixed JSON schema {"suite", "params", "cases", "pass", "elapsed_ms"} and
/// to aligned text, one row per case; round-trips through JSON.
struct VerificationReport {
    struct Case {
        std::string name;
        std::string expected;
        std::string actual;
        bool pass = false;
    };

    std::string suite;
    std::map<std::string, std::string> params;
    std::vector<Case> cases;
    int64_t elapsed_ms = 0;

    bool pass() const {
        for (auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, std::string expected, std::string actual);
    void add_bool(std::string name, bool ok);
    void merge(const VerificationReport& other, const std::string& prefix = "");
    /// cases sorted by name; assembly is order-independent
    void sort_cases();

    std::string text() const;
    std::string json() const;
    static VerificationReport from_json(const std::string& s);
};

}  // namespace vtx
