#pragma once

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ppa/cartan.hpp"
#include "ppa/matrix.hpp"
#include "ppa/weyl.hpp"

namespace ppa {

// Memoized Vieta matrix polynomials of Bbar:
//   V_0 = I, V_1 = Bbar, V_{r+1} = Bbar * V_r - V_{r-1}.
// Thread safe; instances are cheap and per-datum.
class VietaCache {
  public:
    explicit VietaCache(IntMatrix bbar);
    IntMatrix at(std::size_t r);

  private:
    std::mutex mu_;
    IntMatrix bbar_;
    std::vector<IntMatrix> v_;
};

IntMatrix vieta_matrix(const CartanDatum& cd, std::size_t r);

struct GradedDimTable {
    std::vector<IntMatrix> matrices;         // matrices[r] = D * V_r(Bbar)
    std::optional<std::size_t> dynkin_top;   // h - 2; all entries vanish beyond it
    std::string source = "closed-form";      // "closed-form" or "oracle"

    std::size_t max_degree() const { return matrices.empty() ? 0 : matrices.size() - 1; }
};

// Graded dimension matrices D * V_r(Bbar). Dynkin data are truncated at the
// first vanishing V_r (degrees past the top are stored as zero matrices when
// a larger max_degree is requested); non-Dynkin data require max_degree.
GradedDimTable graded_dim_table(const CartanDatum& cd,
                                std::optional<std::size_t> max_degree = std::nullopt);

// Socle matrix D * V_{h-2}(Bbar); asserts entry (i, rho(i)) = d_i and zero
// elsewhere (the permutation placement).
IntMatrix socle_matrix(const CartanDatum& cd, const TauOrbits& tau, std::size_t h);

struct HilbertIdentityReport {
    bool pass = true;
    std::size_t bad_degree = 0;
    std::size_t bad_i = 0, bad_j = 0;  // 0-based entry of the first failing coefficient
    std::string message;
};

// Coefficientwise verification of
//   (sum_{r=0}^{h-2} D V_r(Bbar) t^r) * (I - Bbar t + t^2 I) = D + socle * t^h.
HilbertIdentityReport hilbert_polynomial_identity(const CartanDatum& cd, const IntMatrix& socle,
                                                  std::size_t h);

struct SincerityReport {
    bool pass = true;
    std::vector<std::string> notes;  // low-degree violations are reported, not failed
    std::string message;
};

// No graded layer has an all-zero row: checked for every available degree in
// the non-Dynkin connected case (degrees <= 1 only reported on violation) and
// for degrees < h - 1 in the Dynkin case.
SincerityReport sincerity_check(const CartanDatum& cd, const GradedDimTable& table);

}  // namespace ppa
