#include "k3audit/audit.hpp"

#include <json.hpp>

#include <sstream>

namespace k3 {

bool AuditReport::verdict() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void AuditReport::add(const std::string& name, const std::string& claim,
                      bool pass, const std::string& witness) {
    checks.push_back({name, claim, pass, witness});
}

std::string AuditReport::text() const {
    std::ostringstream os;
    os << "AUDIT " << case_id << "\n";
    for (const auto& c : checks)
        os << "CHECK " << c.name << " | " << c.claim << " | "
           << (c.pass ? "PASS" : "FAIL") << " | " << c.witness << "\n";
    os << "VERDICT " << case_id << " " << (verdict() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string AuditReport::json() const {
    nlohmann::json j;
    j["case"] = case_id;
    j["verdict"] = verdict() ? "pass" : "fail";
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        j["checks"].push_back({{"name", c.name},
                               {"claim", c.claim},
                               {"status", c.pass ? "pass" : "fail"},
                               {"witness", c.witness}});
    }
    return j.dump(2);
}

} // namespace k3
