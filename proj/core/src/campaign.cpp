#include "lgrass/campaign.hpp"

#include <chrono>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <thread>

namespace lgrass {

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::formdim: return "formdim";
        case Theorem::tangent_dim: return "tangent_dim";
        case Theorem::alt_codim: return "alt_codim";
        case Theorem::symp_codim: return "symp_codim";
        case Theorem::epsilon: return "epsilon";
        case Theorem::roundtrip: return "roundtrip";
    }
    throw InvalidConfig("unknown theorem enum value");
}

Theorem theorem_from_name(const std::string& name) {
    for (Theorem t : {Theorem::formdim, Theorem::tangent_dim, Theorem::alt_codim, Theorem::symp_codim,
                      Theorem::epsilon, Theorem::roundtrip})
        if (theorem_name(t) == name) return t;
    throw InvalidConfig("unknown theorem \"" + name + "\"");
}

void CampaignConfig::validate() const {
    if (n < 1 || d < 1) throw InvalidConfig("campaign requires n >= 1, d >= 1");
    if (r < 0 || r > d) throw InvalidConfig("campaign requires 0 <= r <= d");
    if (two_m < 2 || two_m > 2 * n) throw InvalidConfig("campaign requires 2 <= two_m <= 2n");
    if (trials < 1) throw InvalidConfig("campaign requires trials >= 1");
    if (!profile.empty()) {
        if (static_cast<int>(profile.size()) != n) throw InvalidConfig("profile must have n blocks");
        int total = 0;
        for (int w : profile) {
            if (w < 0) throw InvalidConfig("negative profile block");
            total += w;
        }
        if (total != d) throw InvalidConfig("profile must sum to d");
    }
}

namespace {

/// Random invertible matrix with constant entries (hence unit determinant
/// over the family base). Bounded retries keep the draw deterministic.
Matrix random_unit(const FieldDesc& fd, int d, Rng& rng) {
    for (int tries = 0; tries < 64; ++tries) {
        Matrix g(fd, d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g.set(i, j, Scalar(rng.element(fd)));
        if (rank(g) == d) return g;
    }
    throw GenerationExhausted("no invertible conjugation matrix after 64 draws");
}

LinkedChain random_conjugated_chain(const CampaignConfig& cfg, Rng& rng) {
    LinkedChain base = standard_chain(cfg.field, cfg.profile, ChainMode::family);
    std::vector<Matrix> g;
    for (int i = 0; i < cfg.n; ++i) g.push_back(random_unit(cfg.field, cfg.d, rng));
    return conjugate(base, g);
}

Matrix random_block_gram(const CampaignConfig& cfg, bool alternating, Rng& rng) {
    Matrix a(cfg.field, cfg.d, cfg.d);
    for (int p = 0; p < cfg.d; ++p)
        for (int q = 0; q < cfg.d; ++q) {
            if (alternating && q < p) continue;
            if (alternating && q == p) continue;
            Fk x = rng.element(cfg.field);
            a.set(p, q, Scalar(x));
            if (alternating) a.set(q, p, Scalar(-x));
        }
    return a;
}

/// Column-first variant of the exponent path; equality with the row-first
/// implementation is the path-independence assertion.
int exponent_column_first(int a, int b, int i, int j, int two_m) {
    int e = 0;
    int u = b;
    while (u < j) {
        e += epsilon(a, u + 1, two_m);
        ++u;
    }
    while (u > j) {
        e += epsilon_hat(a, u - 1, two_m);
        --u;
    }
    int t = a;
    while (t < i) {
        e += epsilon(t + 1, j, two_m);
        ++t;
    }
    while (t > i) {
        e += epsilon_hat(t - 1, j, two_m);
        --t;
    }
    return e;
}

TrialOutcome run_epsilon_trial(const CampaignConfig& cfg, int index) {
    TrialOutcome out{index, "pass", ""};
    auto fail = [&](const std::string& what) {
        out.status = "fail";
        if (!out.detail.empty()) out.detail += "; ";
        out.detail += what;
    };
    for (int n = 1; n <= cfg.n; ++n)
        for (int two_m = 2; two_m <= 2 * n; ++two_m) {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    auto id = [&](bool ok, const char* name) {
                        if (!ok)
                            fail(std::string(name) + " at n=" + std::to_string(n) + " two_m=" + std::to_string(two_m) +
                                 " (" + std::to_string(i) + "," + std::to_string(j) + ")");
                    };
                    id(epsilon(i, j, two_m) + epsilon_hat(i - 1, j, two_m) == 1, "e(i,j)+e^(i-1,j)=1");
                    id(epsilon(i + 1, j, two_m) + epsilon_hat(i, j, two_m) == 1, "e(i+1,j)+e^(i,j)=1");
                    id(epsilon(i, j, two_m) + epsilon_hat(i, j - 1, two_m) == 1, "e(i,j)+e^(i,j-1)=1");
                    id(epsilon(i, j + 1, two_m) + epsilon_hat(i, j, two_m) == 1, "e(i,j+1)+e^(i,j)=1");
                    id(epsilon(i, j, two_m) + epsilon(i - 1, j, two_m) ==
                           epsilon(i, j, two_m) + epsilon(i, j - 1, two_m),
                       "e(i,j)+e(i-1,j)=e(i,j)+e(i,j-1)");
                    id(epsilon(i, j, two_m) + epsilon_hat(i - 1, j, two_m) ==
                           epsilon_hat(i, j, two_m) + epsilon(i, j + 1, two_m),
                       "e(i,j)+e^(i-1,j)=e^(i,j)+e(i,j+1)");
                    id(epsilon_hat(i, j, two_m) + epsilon(i + 1, j, two_m) ==
                           epsilon(i, j, two_m) + epsilon_hat(i, j - 1, two_m),
                       "e^(i,j)+e(i+1,j)=e(i,j)+e^(i,j-1)");
                    id(epsilon_hat(i, j, two_m) + epsilon_hat(i + 1, j, two_m) ==
                           epsilon_hat(i, j, two_m) + epsilon_hat(i, j + 1, two_m),
                       "e^(i,j)+e^(i+1,j)=e^(i,j)+e^(i,j+1)");
                }
            for (int a = 1; a <= n; ++a)
                for (int b = 1; b <= n; ++b)
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j)
                            if (exponent(a, b, i, j, two_m, n) != exponent_column_first(a, b, i, j, two_m))
                                fail("exponent path dependence at n=" + std::to_string(n) + " two_m=" +
                                     std::to_string(two_m) + " (" + std::to_string(a) + "," + std::to_string(b) +
                                     ")->(" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (out.status == "fail" && out.detail.size() > 500) return out;  // enough evidence
        }
    return out;
}

TrialOutcome run_formdim_trial(const CampaignConfig& cfg, int index) {
    Rng rng = Rng::derived(cfg.seed, static_cast<std::uint64_t>(index));
    LinkedChain c = random_conjugated_chain(cfg, rng);
    int bil = form_space_dimension(c, cfg.two_m, FormVariant::bilinear);
    int alt = form_space_dimension(c, cfg.two_m, FormVariant::alternating);
    int want_bil = cfg.d * cfg.d, want_alt = cfg.d * (cfg.d - 1) / 2;
    if (bil == want_bil && alt == want_alt) return {index, "pass", ""};
    return {index, "fail",
            "bilinear " + std::to_string(bil) + " (want " + std::to_string(want_bil) + "), alternating " +
                std::to_string(alt) + " (want " + std::to_string(want_alt) + ")"};
}

TrialOutcome run_roundtrip_trial(const CampaignConfig& cfg, int index) {
    Rng rng = Rng::derived(cfg.seed, static_cast<std::uint64_t>(index));
    LinkedChain c = random_conjugated_chain(cfg, rng);
    WDecomp w = structure_decomposition(fiber_chain(c));
    bool alternating = index % 2 == 0;
    Matrix a = random_block_gram(cfg, alternating, rng);
    LinkedForm f = extend_form(c, RestrictedForm{w, a}, cfg.two_m);
    std::string detail;
    if (restrict_form(f, w).a != a) detail += "restrict(extend(A)) != A; ";
    Diagnostic compat = check_compatibility(f, c);
    if (!compat.pass()) detail += "compatibility " + compat.summary() + "; ";
    if (alternating) {
        Diagnostic alt = check_alternating(f);
        if (!alt.pass()) detail += "alternating " + alt.summary() + "; ";
    }
    Diagnostic ind = check_induced_relations(f, c);
    if (!ind.pass()) detail += "induced relations " + ind.summary() + "; ";
    if (detail.empty()) return {index, "pass", ""};
    return {index, "fail", detail};
}

/// Shared generator for the point-level theorems: a symplectic form on the
/// standard chain and a random exact isotropic point of rank r.
TangentReport point_trial_report(const CampaignConfig& cfg, int index) {
    Rng rng = Rng::derived(cfg.seed, static_cast<std::uint64_t>(index));
    LinkedChain c = standard_chain(cfg.field, cfg.profile, ChainMode::family);
    LinkedForm f = standard_symplectic_form(c, rng.next());
    LinkedSubspace p = random_exact_isotropic(c, f, cfg.r, rng.next());
    return verify_point(c, f, p);
}

TrialOutcome run_point_trial(const CampaignConfig& cfg, int index) {
    TangentReport rep;
    try {
        rep = point_trial_report(cfg, index);
    } catch (const GenerationExhausted& e) {
        return {index, "skip", e.what()};
    }
    int want_codim = cfg.r * (cfg.r - 1) / 2;
    switch (cfg.theorem) {
        case Theorem::symp_codim:
            if (rep.tangent_map_rank == want_codim) return {index, "pass", ""};
            return {index, "fail",
                    "tangent_map_rank " + std::to_string(rep.tangent_map_rank) + " (want " +
                        std::to_string(want_codim) + ")"};
        case Theorem::tangent_dim:
            if (rep.lg_tangent_dim == cfg.r * (cfg.d - cfg.r)) return {index, "pass", ""};
            return {index, "fail",
                    "lg_tangent_dim " + std::to_string(rep.lg_tangent_dim) + " (want " +
                        std::to_string(cfg.r * (cfg.d - cfg.r)) + ")"};
        case Theorem::alt_codim:
            if (rep.form_target_dim == want_codim) return {index, "pass", ""};
            return {index, "fail",
                    "form_target_dim " + std::to_string(rep.form_target_dim) + " (want " +
                        std::to_string(want_codim) + ")"};
        default:
            throw InvalidConfig("not a point-level theorem");
    }
}

TrialOutcome run_trial(const CampaignConfig& cfg, int index) {
    switch (cfg.theorem) {
        case Theorem::epsilon: return run_epsilon_trial(cfg, index);
        case Theorem::formdim: return run_formdim_trial(cfg, index);
        case Theorem::roundtrip: return run_roundtrip_trial(cfg, index);
        case Theorem::tangent_dim:
        case Theorem::alt_codim:
        case Theorem::symp_codim: return run_point_trial(cfg, index);
    }
    throw InvalidConfig("unknown theorem enum value");
}

int thread_budget(int trials) {
    unsigned hw = std::thread::hardware_concurrency();
    long want = hw ? static_cast<long>(hw) : 1;
    if (const char* env = std::getenv("LINKED_GRASS_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) want = v;
    }
    return static_cast<int>(std::min<long>(want, trials));
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    if (cfg.theorem != Theorem::epsilon && cfg.profile.empty())
        throw InvalidConfig("this campaign mode needs a profile");

    auto t0 = std::chrono::steady_clock::now();
    CampaignReport rep;
    rep.config = cfg;
    rep.trials.resize(static_cast<std::size_t>(cfg.trials));

    int nthreads = thread_budget(cfg.trials);
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&](int tid) {
        for (int i = tid; i < cfg.trials; i += nthreads) {
            try {
                rep.trials[static_cast<std::size_t>(i)] = run_trial(cfg, i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
                rep.trials[static_cast<std::size_t>(i)] = {i, "fail", "trial aborted"};
            }
        }
    };
    if (nthreads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (std::thread& t : pool) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    for (const TrialOutcome& t : rep.trials) {
        if (t.status == "pass") ++rep.passed;
        else if (t.status == "skip") ++rep.skipped;
        else ++rep.failed;
    }
    rep.aggregate = rep.failed == 0 && 2 * rep.skipped <= cfg.trials;
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();

    if (!cfg.out_path.empty()) save_json_file(cfg.out_path, to_json(rep));
    return rep;
}

Json to_json(const CampaignConfig& cfg) {
    Json j;
    j["theorem"] = theorem_name(cfg.theorem);
    j["field"] = to_json(cfg.field);
    j["n"] = std::to_string(cfg.n);
    j["d"] = std::to_string(cfg.d);
    j["r"] = std::to_string(cfg.r);
    j["two_m"] = std::to_string(cfg.two_m);
    Json prof = Json::array();
    for (int w : cfg.profile) prof.push_back(std::to_string(w));
    j["profile"] = std::move(prof);
    j["trials"] = std::to_string(cfg.trials);
    j["seed"] = std::to_string(cfg.seed);
    return j;
}

Json to_json(const CampaignReport& rep) {
    Json j = envelope(rep.config.field);
    j["kind"] = "campaign_report";
    j["config"] = to_json(rep.config);
    Json trials = Json::array();
    for (const TrialOutcome& t : rep.trials) {
        Json tj;
        tj["index"] = std::to_string(t.index);
        tj["status"] = t.status;
        tj["detail"] = t.detail;
        trials.push_back(std::move(tj));
    }
    j["trials"] = std::move(trials);
    j["passed"] = std::to_string(rep.passed);
    j["failed"] = std::to_string(rep.failed);
    j["skipped"] = std::to_string(rep.skipped);
    j["aggregate"] = rep.aggregate ? "pass" : "fail";
    j["wall_ms"] = std::to_string(rep.wall_ms);
    return j;
}

}  // namespace lgrass
