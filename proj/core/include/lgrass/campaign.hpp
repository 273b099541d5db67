#ifndef LGRASS_CAMPAIGN_HPP
#define LGRASS_CAMPAIGN_HPP

#include "lgrass/json_io.hpp"

namespace lgrass {

enum class Theorem { formdim, tangent_dim, alt_codim, symp_codim, epsilon, roundtrip };

std::string theorem_name(Theorem t);
Theorem theorem_from_name(const std::string& name);  // throws InvalidConfig

struct CampaignConfig {
    Theorem theorem = Theorem::formdim;
    FieldDesc field = FieldDesc::prime(10007);
    int n = 1, d = 1, r = 0, two_m = 2;
    std::vector<int> profile;  // block sizes, sum = d
    int trials = 1;
    std::uint64_t seed = 0;
    std::string out_path;  // empty: do not write a report file

    void validate() const;  // throws InvalidConfig
};

struct TrialOutcome {
    int index = 0;
    std::string status;  // "pass" | "fail" | "skip"
    std::string detail;
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<TrialOutcome> trials;
    int passed = 0, failed = 0, skipped = 0;
    bool aggregate = false;  // all non-skipped pass and skip rate <= 50%
    long long wall_ms = 0;
};

/// Deterministic given (config, seed): per-trial RNG streams derive from
/// (seed, trial index), so serial and parallel runs agree. Parallelism is
/// bounded by LINKED_GRASS_THREADS (default: hardware concurrency). Writes
/// the JSON report to config.out_path when set.
CampaignReport run_campaign(const CampaignConfig& cfg);

Json to_json(const CampaignConfig& cfg);
Json to_json(const CampaignReport& rep);

}  // namespace lgrass

#endif
