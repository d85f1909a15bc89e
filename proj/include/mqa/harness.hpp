#ifndef MQA_HARNESS_HPP
#define MQA_HARNESS_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mqa/io.hpp"

namespace mqa {

struct CheckOptions {
    int order = 6;
    unsigned seed = 1;
    long long bound = -1;  // monoid search bound; -1 selects 12 * |E^0|
    int confluence_trials = 1000;
    int closure_trials = 500;
    int derivation_trials = 500;
    int reindex_trials = 200;
    std::string choice = "least";  // or "explicit"
    std::map<std::string, std::string> explicit_choice;
};

// Outcome vocabulary: pass | fail | witness-found | inconclusive.
struct CheckResult {
    std::string name;
    std::string status;
    nlohmann::ordered_json details;
};

const std::vector<std::string>& known_checks();
CheckResult run_check(const std::string& name, const QuiverFile& qf, const CheckOptions& opt);
std::vector<CheckResult> run_all_checks(const QuiverFile& qf, const CheckOptions& opt);

// The two seeded representations every series check runs on: the path-counting
// representation (lambda_v = rho_v = p_v, B = adjacency) and a seeded random
// mixed representation.
std::vector<LinearRep> corpus_reps(const MixedDataPtr& data, unsigned seed);

}  // namespace mqa

#endif  // MQA_HARNESS_HPP
