#include "doctest.h"

#include <cstdlib>

#include "lgrass/campaign.hpp"

using namespace lgrass;

namespace {

const FieldDesc kQ = FieldDesc::rationals();
const FieldDesc kFp = FieldDesc::prime(10007);

#ifndef LGRASS_FIXTURE_DIR
#define LGRASS_FIXTURE_DIR "fixtures"
#endif

std::string fixture_path(const std::string& name) { return std::string(LGRASS_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("theorem names round trip") {
    for (Theorem t : {Theorem::formdim, Theorem::tangent_dim, Theorem::alt_codim, Theorem::symp_codim,
                      Theorem::epsilon, Theorem::roundtrip})
        CHECK(theorem_from_name(theorem_name(t)) == t);
    CHECK_THROWS_AS(theorem_from_name("nope"), InvalidConfig);
}

TEST_CASE("config validation") {
    CampaignConfig bad;
    bad.theorem = Theorem::symp_codim;
    bad.profile = {2, 0, 2};
    bad.n = 3;
    bad.d = 5;  // profile sums to 4
    bad.two_m = 4;
    bad.r = 2;
    CHECK_THROWS_AS(bad.validate(), InvalidConfig);
    bad.d = 4;
    bad.trials = 0;
    CHECK_THROWS_AS(bad.validate(), InvalidConfig);
    bad.trials = 1;
    bad.two_m = 9;  // > 2n
    CHECK_THROWS_AS(bad.validate(), InvalidConfig);
    bad.two_m = 4;
    CHECK_NOTHROW(bad.validate());
}

TEST_CASE("campaign determinism") {
    CampaignConfig cfg;
    cfg.theorem = Theorem::symp_codim;
    cfg.field = kFp;
    cfg.profile = {2, 0, 2};
    cfg.n = 3;
    cfg.d = 4;
    cfg.r = 2;
    cfg.two_m = 4;
    cfg.trials = 5;
    cfg.seed = 42;
    Json a = to_json(run_campaign(cfg));
    Json b = to_json(run_campaign(cfg));
    a.erase("wall_ms");
    b.erase("wall_ms");
    CHECK(a == b);
    // and with a serial run
    setenv("LINKED_GRASS_THREADS", "1", 1);
    Json c = to_json(run_campaign(cfg));
    unsetenv("LINKED_GRASS_THREADS");
    c.erase("wall_ms");
    CHECK(a == c);
}

TEST_CASE("epsilon campaign is exhaustive and green") {
    CampaignConfig cfg;
    cfg.theorem = Theorem::epsilon;
    cfg.n = 6;
    cfg.d = 1;
    cfg.trials = 1;
    CampaignReport rep = run_campaign(cfg);
    CHECK(rep.aggregate);
    CHECK(rep.passed == 1);
}

TEST_CASE("formdim and roundtrip campaigns") {
    CampaignConfig cfg;
    cfg.theorem = Theorem::formdim;
    cfg.field = kFp;
    cfg.profile = {1, 2, 1};
    cfg.n = 3;
    cfg.d = 4;
    cfg.two_m = 3;
    cfg.trials = 5;
    cfg.seed = 9;
    CampaignReport rep = run_campaign(cfg);
    CHECK(rep.aggregate);
    CHECK(rep.passed == 5);

    cfg.theorem = Theorem::roundtrip;
    CampaignReport rt = run_campaign(cfg);
    CHECK(rt.aggregate);
    CHECK(rt.passed == 5);
}

TEST_CASE("generator exhaustion surfaces as skips and fails the aggregate") {
    CampaignConfig cfg;
    cfg.theorem = Theorem::symp_codim;
    cfg.field = kFp;
    cfg.profile = {3};  // odd-dimensional alternating forms are degenerate
    cfg.n = 1;
    cfg.d = 3;
    cfg.r = 1;
    cfg.two_m = 2;
    cfg.trials = 4;
    CampaignReport rep = run_campaign(cfg);
    CHECK(rep.skipped == 4);
    CHECK(rep.passed == 0);
    CHECK(rep.failed == 0);
    CHECK_FALSE(rep.aggregate);
}

TEST_CASE("campaign report files round trip") {
    CampaignConfig cfg;
    cfg.theorem = Theorem::epsilon;
    cfg.n = 3;
    cfg.d = 1;
    cfg.trials = 1;
    cfg.out_path = "campaign_report_test.json";
    run_campaign(cfg);
    Json j = load_json_file(cfg.out_path);
    CHECK(j.at("schema") == kSchema);
    CHECK(j.at("aggregate") == "pass");
    std::remove(cfg.out_path.c_str());
}

TEST_CASE("json round trips") {
    Fixture fx = example_fixture("5.1", kQ);

    Json jc = to_json(fx.chain);
    LinkedChain c2 = chain_from_json(jc);
    CHECK(c2.mode == fx.chain.mode);
    CHECK(c2.f[0] == fx.chain.f[0]);
    CHECK(c2.fdual[1] == fx.chain.fdual[1]);

    Json jf = to_json(fx.form);
    LinkedForm f2 = form_from_json(kQ, jf);
    CHECK(f2.two_m == 4);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(f2.b(i, j) == fx.form.b(i, j));

    Json jp = to_json(fx.point);
    LinkedSubspace p2 = subspace_from_json(kQ, jp);
    CHECK(p2.r == 2);
    CHECK(p2.bases[0] == fx.point.bases[0]);

    Json jr = to_json(fx.expected);
    TangentReport r2 = report_from_json(jr);
    CHECK(r2.lg_tangent_dim == 4);
    CHECK(r2.lag_tangent_dim == 3);
    CHECK(r2.verdict);
}

TEST_CASE("scalar json uses decimal strings") {
    Scalar v = Scalar(kQ, 3) / Scalar(kQ, 4) + Scalar::s(kQ);
    Json j = to_json(v);
    CHECK(j.at("num").is_array());
    CHECK(j.at("num").at(0).is_string());
    CHECK(scalar_from_json(kQ, j) == v);

    Scalar w = Scalar::s_pow(kFp, 2) / (Scalar(kFp, 1) + Scalar::s(kFp));
    CHECK(scalar_from_json(kFp, to_json(w)) == w);
}

TEST_CASE("envelope checks") {
    Json good = envelope(kFp);
    CHECK(check_envelope(good) == kFp);
    Json bad = good;
    bad["schema"] = "other/v9";
    CHECK_THROWS_AS(check_envelope(bad), ParseError);
    CHECK_THROWS_AS(check_envelope(Json::object()), ParseError);
}

TEST_CASE("golden fixture files match the hard-coded instances") {
    struct Case {
        const char* file;
        const char* id;
    } cases[] = {{"example51.json", "5.1"}, {"example52.json", "5.2"}};
    for (const Case& cs : cases) {
        Json j = load_json_file(fixture_path(cs.file));
        FieldDesc fd = check_envelope(j);
        Fixture fx = example_fixture(cs.id, fd);
        CHECK(j.at("chain") == to_json(fx.chain));
        CHECK(j.at("form") == to_json(fx.form));
        CHECK(j.at("subspace") == to_json(fx.point));
        CHECK(j.at("expected_report") == to_json(fx.expected));
        // and the stored expectation matches a fresh verification
        TangentReport rep = verify_point(fx.chain, fx.form, fx.point);
        CHECK(to_json(rep) == j.at("expected_report"));
    }
}
