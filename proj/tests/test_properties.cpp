#include "doctest.h"

#include "support/properties.hpp"

TEST_CASE("randomized valued quivers satisfy the structural identities") {
    const ppa::testsupport::PropertyResult res = ppa::testsupport::run_property_suite(12345, 200);
    CAPTURE(res.first_failure);
    CHECK(res.pass);
    CHECK(res.cases_run == 200);
}
