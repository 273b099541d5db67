#include <iostream>

#include "CLI11.hpp"
#include "lgrass/campaign.hpp"

namespace {

using namespace lgrass;

constexpr int kExitPass = 0;
constexpr int kExitAssertFail = 1;
constexpr int kExitBadInput = 2;

FieldDesc parse_field(const std::string& spec) {
    if (spec == "q") return FieldDesc::rationals();
    if (spec.rfind("fp:", 0) == 0) {
        try {
            return FieldDesc::prime(std::stoull(spec.substr(3)));
        } catch (const std::exception&) {
            throw InvalidConfig("bad prime in field spec \"" + spec + "\"");
        }
    }
    throw InvalidConfig("field must be \"q\" or \"fp:P\", got \"" + spec + "\"");
}

std::vector<int> parse_profile(const std::string& spec) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw InvalidConfig("bad profile entry \"" + tok + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

int assert_line(const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "pass" : "FAIL") << ": " << what;
    if (!ok && !detail.empty()) std::cout << " -- " << detail;
    std::cout << '\n';
    return ok ? kExitPass : kExitAssertFail;
}

int cmd_validate(const std::string& input) {
    Json j = load_json_file(input);
    FieldDesc fd = check_envelope(j);
    int rc = kExitPass;
    bool any = false;

    std::optional<LinkedChain> chain;
    if (j.contains("chain")) {
        any = true;
        chain = chain_from_json(j.at("chain"));
        if (chain->field != fd) throw ParseError("chain field disagrees with the envelope");
        Diagnostic sl = check_s_linked(*chain);
        rc = std::max(rc, assert_line("chain is s-linked", sl.pass(), sl.summary()));
    }
    std::optional<LinkedForm> form;
    if (j.contains("form")) {
        any = true;
        form = form_from_json(fd, j.at("form"));
        if (!chain) throw ParseError("a form file must also carry its chain");
        Diagnostic compat = check_compatibility(*form, *chain);
        rc = std::max(rc, assert_line("form compatibility identities", compat.pass(), compat.summary()));
        Diagnostic alt = check_alternating(*form);
        rc = std::max(rc, assert_line("form alternating/antisymmetric", alt.pass(), alt.summary()));
        Diagnostic ind = check_induced_relations(*form, *chain);
        rc = std::max(rc, assert_line("form induced relations", ind.pass(), ind.summary()));
        SymplecticReport sym = check_symplectic(*form, *chain);
        std::cout << "info: symplectic clauses " << sym.clauses.summary() << '\n';
        for (const std::string& d : sym.diagonal_diagnostics) std::cout << "info: " << d << '\n';
    }
    if (j.contains("subspace")) {
        any = true;
        LinkedSubspace sub = subspace_from_json(fd, j.at("subspace"));
        if (!chain) throw ParseError("a subspace file must also carry its chain");
        Diagnostic lk = check_linked(*chain, sub);
        rc = std::max(rc, assert_line("subspace is linked", lk.pass(), lk.summary()));
        if (lk.pass()) {
            Diagnostic ex = check_s_linked(fiber_chain(induced_chain(*chain, sub)));
            std::cout << "info: exactness " << ex.summary() << '\n';
            if (form) {
                Diagnostic iso = check_isotropic(sub, *form);
                std::cout << "info: isotropy " << iso.summary() << '\n';
            }
        }
    }
    if (!any) throw ParseError("file carries no chain, form, or subspace");
    return rc;
}

int cmd_example(const std::string& id, const FieldDesc& fd) {
    Fixture fx = example_fixture(id, fd);
    int rc = kExitPass;

    TangentReport rep = verify_point(fx.chain, fx.form, fx.point);
    std::cout << to_json(rep).dump(2) << '\n';
    rc = std::max(rc, assert_line("lg_tangent_dim", rep.lg_tangent_dim == fx.expected.lg_tangent_dim));
    rc = std::max(rc, assert_line("form_target_dim", rep.form_target_dim == fx.expected.form_target_dim));
    rc = std::max(rc, assert_line("tangent_map_rank", rep.tangent_map_rank == fx.expected.tangent_map_rank));
    rc = std::max(rc, assert_line("lag_tangent_dim", rep.lag_tangent_dim == fx.expected.lag_tangent_dim));
    rc = std::max(rc, assert_line("verdict", rep.verdict == fx.expected.verdict));

    if (id == "5.1") {
        Diagnostic chart = chart_residual_check_51(fd, 51, 20);
        rc = std::max(rc, assert_line("chart residuals at 20 random parameter points", chart.pass(), chart.summary()));
        SymplecticReport sym = check_symplectic(fx.form, fx.chain);
        rc = std::max(rc, assert_line("fixture form is symplectic", sym.pass(), sym.clauses.summary()));
    }
    if (id == "5.2") {
        bool zero11 = fx.form.b(1, 1).is_zero();
        rc = std::max(rc, assert_line("diagnostic flags the zero pairing <,>_{1,1}", zero11));
    }
    return rc;
}

int cmd_verify(const CampaignConfig& cfg) {
    CampaignReport rep = run_campaign(cfg);
    std::cout << "campaign " << theorem_name(cfg.theorem) << ": " << rep.passed << " passed, " << rep.failed
              << " failed, " << rep.skipped << " skipped in " << rep.wall_ms << " ms -> "
              << (rep.aggregate ? "pass" : "FAIL") << '\n';
    return rep.aggregate ? kExitPass : kExitAssertFail;
}

int cmd_gen(const std::string& kind, const CampaignConfig& cfg, const std::string& out) {
    if (cfg.profile.empty()) throw InvalidConfig("gen needs a profile");
    cfg.validate();
    Rng rng(cfg.seed);
    LinkedChain chain = standard_chain(cfg.field, cfg.profile, ChainMode::family);
    Json j = envelope(cfg.field);
    j["chain"] = to_json(chain);
    if (kind == "form" || kind == "subspace") {
        LinkedForm form = standard_symplectic_form(chain, cfg.seed);
        j["form"] = to_json(form);
        if (kind == "subspace") {
            LinkedSubspace sub = random_exact_isotropic(chain, form, cfg.r, cfg.seed + 1);
            j["subspace"] = to_json(sub);
        }
    } else if (kind != "chain") {
        throw InvalidConfig("gen kind must be chain, form, or subspace");
    }
    save_json_file(out, j);
    std::cout << "wrote " << out << '\n';
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification tool for linked chains, forms, and Grassmannians"};
    app.require_subcommand(1);

    std::string input, id = "5.1", field_spec = "fp:10007", theorem = "symp_codim", profile_spec, out_path, kind = "chain";
    CampaignConfig cfg;

    CLI::App* validate = app.add_subcommand("validate", "run every applicable checker on a bundle file");
    validate->add_option("--input", input, "bundle JSON file")->required();

    CLI::App* example = app.add_subcommand("example", "reproduce a worked instance and compare reports");
    example->add_option("--id", id, "5.1 or 5.2");
    example->add_option("--field", field_spec, "q or fp:P");

    CLI::App* verify = app.add_subcommand("verify", "run a randomized verification campaign");
    verify->add_option("--theorem", theorem, "formdim|tangent_dim|alt_codim|symp_codim|epsilon|roundtrip")->required();
    verify->add_option("--n", cfg.n, "chain length");
    verify->add_option("--d", cfg.d, "rank");
    verify->add_option("--r", cfg.r, "subspace rank");
    verify->add_option("--two-m", cfg.two_m, "doubled center index");
    verify->add_option("--profile", profile_spec, "comma-separated block sizes");
    verify->add_option("--field", field_spec, "q or fp:P");
    verify->add_option("--trials", cfg.trials, "number of trials");
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--out", out_path, "report file");

    CLI::App* gen = app.add_subcommand("gen", "generate a random instance bundle");
    gen->add_option("--kind", kind, "chain|form|subspace")->required();
    gen->add_option("--profile", profile_spec, "comma-separated block sizes")->required();
    gen->add_option("--r", cfg.r, "subspace rank (kind=subspace)");
    gen->add_option("--field", field_spec, "q or fp:P");
    gen->add_option("--seed", cfg.seed, "RNG seed");
    gen->add_option("--out", out_path, "output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitBadInput;
    }

    try {
        if (*validate) return cmd_validate(input);
        if (*example) return cmd_example(id, parse_field(field_spec));
        cfg.field = parse_field(field_spec);
        if (!profile_spec.empty()) {
            cfg.profile = parse_profile(profile_spec);
            cfg.n = static_cast<int>(cfg.profile.size());
            cfg.d = 0;
            for (int w : cfg.profile) cfg.d += w;
            if (!verify->count("--two-m")) cfg.two_m = cfg.n + 1;
        }
        if (*verify) {
            cfg.theorem = theorem_from_name(theorem);
            cfg.out_path = out_path;
            return cmd_verify(cfg);
        }
        if (*gen) return cmd_gen(kind, cfg, out_path);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const InvalidConfig& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const BadProfile& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitAssertFail;
    }
    return kExitBadInput;
}
