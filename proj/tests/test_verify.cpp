#include "doctest.h"

#include <string>
#include <vector>

#include "projtri/verify.hpp"

using namespace projtri;

TEST_CASE("fast verification suites pass and fill in every report field") {
    for (const auto& reports : {verify_bk_fvector(), verify_q8_lemma()}) {
        REQUIRE(!reports.empty());
        CHECK(all_passed(reports));
        for (const auto& r : reports) {
            CHECK(!r.check_name.empty());
            CHECK(!r.claim.empty());
            CHECK(r.pass);
            CHECK(r.elapsed_seconds >= 0.0);
        }
    }
}

TEST_CASE("an empty report list never counts as a pass") {
    CHECK(!all_passed({}));
    std::vector<VerificationReport> one(1);
    one[0].pass = true;
    CHECK(all_passed(one));
    one[0].pass = false;
    CHECK(!all_passed(one));
}
