#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qweb {

// Parameter ranges for the relation catalog. Defaults run in minutes.
struct Ranges {
    int kmax = 3;       // web strand labels k, l, h
    int jmax = 2;       // rung thickness
    int nmin = 1;
    int nmax = 3;
    int clasp_kmax = 4; // clasp recursions under evaluation
    int ser_kmax = 5;   // symbolic Sergeev checks (quasi-idempotents, kernel)
    int ser_rel_kmax = 6;
    int bound = 10;     // |mu| for the staircase batch
    int lr_total = 8;   // |lambda| + |nu| for the Schur P oracle
    int psi_pairs = 200;
    unsigned seed = 20240611;
    bool equivariance = true;

    // QWEB_KMAX, QWEB_JMAX, QWEB_NMAX, QWEB_CLASP_KMAX, QWEB_SER_KMAX, QWEB_BOUND,
    // QWEB_LR_TOTAL, QWEB_PSI_PAIRS, QWEB_SEED, QWEB_EQUIVARIANCE=0
    static Ranges from_env();
    nlohmann::json to_json() const;
};

enum class Status { Pass, Fail, UnverifiedByLabel };
const char* status_name(Status s);

struct CheckResult {
    std::string name;  // "R3/rung-collision"
    std::string label; // relation tag as named in the source
    nlohmann::json params;
    Status status = Status::Pass;
    nlohmann::json witness; // null unless failed
    nlohmann::json info;    // recorded values (kappa, ranks, counts)
    double ms = 0;

    nlohmann::json to_json(bool with_time = true) const;
};

std::vector<std::string> catalog_groups(); // R1 .. R12

// `only` selects a group ("R5"), a single check ("R3/rung-collision") or everything ("").
// Results come back sorted by name then params.
std::vector<CheckResult> run_catalog(const std::string& only, const Ranges& ranges);

// Adds an "equivariance" result per group unless ranges.equivariance is false.
std::vector<CheckResult> run_group(const std::string& group, const Ranges& ranges, const std::string& only = "");

} // namespace qweb
