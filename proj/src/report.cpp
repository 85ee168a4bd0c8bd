#include "ncm/report.hpp"

#include "ncm/version.hpp"

namespace ncm {

void VerificationReport::add(CheckRecord record) {
    if (checks.empty()) pass = true;
    pass = pass && record.pass;
    checks.push_back(std::move(record));
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["schema_version"] = kReportSchemaVersion;
    j["engine_version"] = kEngineVersion;
    j["check"] = check;
    j["matrix_class"] = matrix_class;
    j["m"] = m;
    j["truncation"] = truncation;
    j["q_points"] = q_points;
    j["symbolic"] = symbolic;
    if (!gamma.empty()) j["gamma"] = gamma;
    j["pass"] = pass;
    j["checks"] = nlohmann::json::array();
    for (const CheckRecord& c : checks) {
        nlohmann::json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        jc["elapsed_ms"] = c.elapsed_ms;
        jc["components"] = nlohmann::json::array();
        for (const ComponentVerdict& v : c.components) {
            nlohmann::json jv;
            jv["grading"] = v.grading.str();
            jv["basis_size"] = v.basis_size;
            jv["span_rank"] = v.span_rank;
            jv["member"] = v.member;
            jv["residual_terms"] = v.residual_terms;
            jv["elapsed_ms"] = v.elapsed_ms;
            jc["components"].push_back(std::move(jv));
        }
        j["checks"].push_back(std::move(jc));
    }
    if (!info.empty()) j["info"] = info;
    return j;
}

std::string VerificationReport::summary() const {
    std::string out = std::string(pass ? "PASS" : "FAIL") + " " + check + " " + matrix_class +
                      " m=" + std::to_string(m) + " N=" + std::to_string(truncation) + "\n";
    for (const CheckRecord& c : checks) {
        out += "  " + std::string(c.pass ? "pass" : "FAIL") + " " + c.name;
        if (!c.components.empty())
            out += " (" + std::to_string(c.components.size()) + " components)";
        if (!c.detail.empty()) out += " -- " + c.detail;
        out += "\n";
    }
    return out;
}

bool same_verdicts(const VerificationReport& a, const VerificationReport& b) {
    if (a.matrix_class != b.matrix_class || a.m != b.m || a.truncation != b.truncation ||
        a.q_points != b.q_points || a.symbolic != b.symbolic || a.gamma != b.gamma ||
        a.pass != b.pass || a.checks.size() != b.checks.size())
        return false;
    for (size_t t = 0; t < a.checks.size(); ++t) {
        const CheckRecord& x = a.checks[t];
        const CheckRecord& y = b.checks[t];
        if (x.pass != y.pass || x.components.size() != y.components.size()) return false;
        for (size_t u = 0; u < x.components.size(); ++u) {
            const ComponentVerdict& v = x.components[u];
            const ComponentVerdict& w = y.components[u];
            if (v.grading != w.grading || v.basis_size != w.basis_size ||
                v.span_rank != w.span_rank || v.member != w.member ||
                v.residual_terms != w.residual_terms)
                return false;
        }
    }
    return true;
}

}  // namespace ncm
