#include <doctest.h>

#include <cstdlib>

#include "griff/checks.hpp"
#include "griff/milnor.hpp"
#include "griff/parallel.hpp"

using namespace griff;

TEST_CASE("GRIFF_THREADS parsing") {
    unsetenv("GRIFF_THREADS");
    CHECK(env_thread_cap() == 1);
    setenv("GRIFF_THREADS", "4", 1);
    CHECK(env_thread_cap() == 4);
    setenv("GRIFF_THREADS", "0", 1);
    CHECK(env_thread_cap() == 1);
    setenv("GRIFF_THREADS", "many", 1);
    CHECK(env_thread_cap() == 1);
    unsetenv("GRIFF_THREADS");
}

TEST_CASE("serial and OpenMP paths produce identical sweep results") {
    SweepBounds serial{3, 4, 2, 1, -1};
    SweepBounds parallel{3, 4, 2, 4, -1};

    const CheckResult s1 = check_critical_cycle_three_route(serial);
    const CheckResult p1 = check_critical_cycle_three_route(parallel);
    CHECK(s1.pass == p1.pass);
    CHECK(s1.cases == p1.cases);
    CHECK(s1.detail == p1.detail);

    const CheckResult s2 = check_pushforward_identities(serial);
    const CheckResult p2 = check_pushforward_identities(parallel);
    CHECK(s2.pass == p2.pass);
    CHECK(s2.detail == p2.detail);

    const CheckResult s3 = check_height_routes(3, 4, 2, 5, 4, 300, 1);
    const CheckResult p3 = check_height_routes(3, 4, 2, 5, 4, 300, 4);
    CHECK(s3.pass == p3.pass);
    CHECK(s3.cases == p3.cases);
    CHECK(s3.detail == p3.detail);
}

TEST_CASE("serial and OpenMP paths produce identical Milnor dimensions") {
    const HomogeneousPoly F = fermat(3, 4);
    const GradedQuotientDims serial = hilbert_dims(F, 1);
    const GradedQuotientDims parallel = hilbert_dims(F, 4);
    CHECK(serial.dims == parallel.dims);
    CHECK(serial.socle_bound == parallel.socle_bound);
    CHECK(milnor_number(F, 4).milnor_number == Integer(27));
}

TEST_CASE("scenario enumeration is deterministic") {
    const auto a = enumerate_feasible_scenarios(3, 4, 2, 5, 4, 300);
    const auto b = enumerate_feasible_scenarios(3, 4, 2, 5, 4, 300);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].geom == b[i].geom);
        REQUIRE(a[i].fibers.entries.size() == b[i].fibers.entries.size());
        for (size_t j = 0; j < a[i].fibers.entries.size(); ++j) {
            CHECK(a[i].fibers.entries[j].delta == b[i].fibers.entries[j].delta);
            CHECK(a[i].fibers.entries[j].count == b[i].fibers.entries[j].count);
        }
    }
}

TEST_CASE("wrong cotangent twist sign is caught by the sweep") {
    SweepBounds wrong{2, 3, 1, 1, +1};
    const CheckResult r = check_critical_cycle_three_route(wrong);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.detail.empty());

    SweepBounds disambiguate{2, 3, 1, 1, -1};
    CHECK(check_chern_sign_disambiguation(disambiguate).pass);
}
