#pragma once

#include <string>
#include <vector>

namespace k3 {

// One verified claim: name, the mathematical claim it traces to, outcome,
// and the computed witness data.
struct Check {
    std::string name;
    std::string claim;
    bool pass = false;
    std::string witness;
};

struct AuditReport {
    std::string case_id;
    std::vector<Check> checks;

    bool verdict() const;

    void add(const std::string& name, const std::string& claim, bool pass,
             const std::string& witness);
    // convenience: pass iff computed == expected, witness records both
    template <typename T>
    void expect(const std::string& name, const std::string& claim,
                const T& computed, const T& expected) {
        bool ok = computed == expected;
        add(name, claim, ok,
            "computed=" + detail_str(computed) +
                (ok ? "" : " expected=" + detail_str(expected)));
    }

    std::string text() const;   // one "CHECK <name> | <claim> | PASS/FAIL | <witness>" per line
    std::string json() const;   // machine-readable document

private:
    template <typename T>
    static std::string detail_str(const T& v) {
        if constexpr (std::is_same_v<T, std::string>) return v;
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return std::to_string(v);
    }
};

} // namespace k3
