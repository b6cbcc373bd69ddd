#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bergman/sweep.hpp"

using namespace bergman;

namespace {

std::string render(const SweepOutcome& o) {
    std::ostringstream os;
    write_sweep_csv(o, os);
    return os.str();
}

} // namespace

TEST_CASE("sweep shape for r = 0.1: interior dip below -1, ends near -1") {
    SweepRequest req(0.1, 500);
    SweepOutcome out = run_sweep(req);
    REQUIRE(out.rows.size() == 500);
    CHECK(!out.partial);

    double zmin = 0, rmin = 0;
    for (size_t i = 0; i < out.rows.size(); ++i) {
        const SweepRow& row = out.rows[i];
        CHECK(row.curvature < 2.0);
        CHECK(row.g > 0);
        CHECK(row.k > 0);
        if (i > 0) CHECK(row.z > out.rows[i - 1].z);
        if (row.curvature < rmin) { rmin = row.curvature; zmin = row.z; }
    }
    CHECK(rmin < -1.0);
    CHECK(std::abs(zmin - std::sqrt(0.1)) < 0.05);
    CHECK(std::abs(out.rows.front().curvature + 1) < 0.15);
    CHECK(std::abs(out.rows.back().curvature + 1) < 0.15);
}

TEST_CASE("sweep output is deterministic and nests under doubling") {
    SweepRequest req(0.25, 40);
    std::string a = render(run_sweep(req));
    std::string b = render(run_sweep(req));
    CHECK(a == b);
    CHECK(a.substr(0, 8) == "z,R,g,K\n");
    CHECK(a.find("\r") == std::string::npos);

    SweepRequest dbl(0.25, 80);
    SweepOutcome fine = run_sweep(dbl), coarse = run_sweep(req);
    for (size_t i = 0; i < coarse.rows.size(); ++i) {
        CHECK(fine.rows[2 * i].z == coarse.rows[i].z); // bit-exact shared abscissae
        CHECK(fine.rows[2 * i].curvature == coarse.rows[i].curvature);
    }
}

TEST_CASE("sweep request validation") {
    CHECK_THROWS_AS(SweepRequest(1.5, 10), DomainError);
    CHECK_THROWS_AS(SweepRequest(0.2, 1), DomainError);
    SweepRequest bad_range(0.2, 10);
    bad_range.lo = 0.1; // below r
    CHECK_THROWS_AS(run_sweep(bad_range), DomainError);
}

TEST_CASE("failing rows surface in an error column with the partial flag") {
    SweepRequest req(0.5, 6);
    req.max_terms = 2; // unreachable tail bound everywhere
    SweepOutcome out = run_sweep(req);
    CHECK(out.partial);
    std::string csv = render(out);
    CHECK(csv.substr(0, 14) == "z,R,g,K,error\n");
    CHECK(csv.find("tail bound") != std::string::npos);
}

TEST_CASE("custom range stays inside and respects bounds") {
    SweepRequest req(0.001, 64);
    req.lo = 0.002;
    req.hi = 0.5;
    SweepOutcome out = run_sweep(req);
    CHECK(out.rows.front().z == 0.002);
    CHECK(out.rows.back().z < 0.5);
}
