#pragma once

#include <string>
#include <vector>

namespace spanweight {

// One named check with an optional failure witness (the offending vertex,
// edge or value, rendered as text so CI logs are diagnosable without reruns).
struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    std::string summary() const {
        std::string out;
        for (const auto& c : checks) {
            out += c.pass ? "PASS " : "FAIL ";
            out += c.name;
            if (!c.pass && !c.witness.empty()) out += ": " + c.witness;
            out += "\n";
        }
        return out;
    }
};

} // namespace spanweight
