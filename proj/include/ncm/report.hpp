#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "ncm/relations.hpp"

namespace ncm {

// One sub-check of a verification run, optionally with the per-component
// membership evidence behind it.
struct CheckRecord {
    std::string name;
    bool pass = false;
    std::vector<ComponentVerdict> components;
    std::string detail;  // free-form: residual summaries, counts, etc.
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    std::string check;  // "master", "quasidet", "beta", "ks", "detlemmas"
    std::string matrix_class;
    int m = 0;
    int truncation = 0;
    int q_points = 0;
    bool symbolic = false;
    std::vector<int> gamma;  // parity vector, super class only
    bool pass = false;
    std::vector<CheckRecord> checks;
    std::map<std::string, std::string> info;  // extra knobs (beta, k, ...)

    void add(CheckRecord record);  // updates the overall verdict
    nlohmann::json to_json() const;
    std::string summary() const;  // one line per check, human-readable
};

// Same mathematical outcome: everything except names, timings and the
// free-form info must agree.  Used to pin the beta=1 run to the plain
// right-quantum verification.
bool same_verdicts(const VerificationReport& a, const VerificationReport& b);

}  // namespace ncm
