#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppa/cartan.hpp"
#include "ppa/linalg.hpp"
#include "ppa/path_algebra.hpp"

namespace ppa {

struct CheckResult {
    std::string name;
    std::string status;  // "pass", "fail", or "skipped"
    std::string details;
};

struct VerifyOptions {
    std::size_t max_degree = 6;
    FieldMode field;  // prime mode is refused: verdicts must be exact
    // Mutates the stored Bbar entry (0-based) after loading; negative control
    // for the check suite.
    std::optional<std::pair<std::size_t, std::size_t>> perturb_bbar;
};

struct VerifyReport {
    std::string input;
    bool pass = true;
    std::vector<CheckResult> checks;

    const CheckResult* first_failure() const {
        for (const CheckResult& c : checks) {
            if (c.status == "fail") return &c;
        }
        return nullptr;
    }
};

// Cross-checks every structural identity the datum supports, then the
// oracle-vs-closed-form equivalences when a simply-laced quiver is attached.
VerifyReport run_verify(const std::string& name, const CartanDatum& datum,
                        const std::optional<Quiver>& quiver, const VerifyOptions& opts = {});

}  // namespace ppa
