#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppa/cartan.hpp"
#include "ppa/hilbert.hpp"
#include "ppa/path_algebra.hpp"
#include "ppa/verify.hpp"
#include "ppa/weyl.hpp"

namespace ppa {

// A loaded input: the derived Cartan datum plus, when the input is simply
// laced and arrow-explicit, the quiver the path oracle runs on.
struct NamedInput {
    std::string name;
    CartanDatum datum;
    std::optional<Quiver> quiver;
};

// Built-in catalog: named Cartan matrices and small simply-laced quivers.
std::vector<std::string> catalog_names();
bool is_catalog_name(const std::string& name);
NamedInput load_catalog(const std::string& name);

// Catalog name, or a JSON file holding {"quiver": {"d": [...], "arrows":
// [{"from": i, "to": j, "weight": w}]}} or {"cartan": {"C": [[...]],
// "symmetrizer": [...]}}. Vertices are 1-based in files; weight defaults to 1;
// d defaults to all ones. A weight-w arrow of an all-ones quiver expands into
// w parallel oracle arrows.
NamedInput load_input(const std::string& name_or_path);

std::string classify_json(const NamedInput& in, std::optional<std::size_t> h);
std::string classify_csv(const NamedInput& in, std::optional<std::size_t> h);
std::string classify_pretty(const NamedInput& in, std::optional<std::size_t> h);

struct HilbertOutput {
    std::string input;
    GradedDimTable table;
    std::optional<HilbertIdentityReport> identity;  // closed-form Dynkin runs
    std::optional<Int> total_dim;                   // Dynkin runs
};

std::string hilbert_json(const HilbertOutput& out);
std::string hilbert_csv(const HilbertOutput& out);
std::string hilbert_pretty(const HilbertOutput& out);

std::string roots_json(const std::string& input, const RootSystem& rs);
std::string roots_csv(const RootSystem& rs);
std::string roots_pretty(const std::string& input, const RootSystem& rs);

struct CoxeterOutput {
    std::string input;
    std::size_t n = 0;
    CoxeterData cox;
    TauOrbits tau;
    std::vector<std::vector<Root>> orbits;
    std::size_t root_count = 0;
};

std::string coxeter_json(const CoxeterOutput& out);
std::string coxeter_csv(const CoxeterOutput& out);
std::string coxeter_pretty(const CoxeterOutput& out);

std::string verify_json(const VerifyReport& rep);
std::string verify_csv(const VerifyReport& rep);
std::string verify_pretty(const VerifyReport& rep);

// Reports on several inputs, in catalog order.
std::string verify_many_json(const std::vector<VerifyReport>& reps);
std::string verify_many_csv(const std::vector<VerifyReport>& reps);
std::string verify_many_pretty(const std::vector<VerifyReport>& reps);

}  // namespace ppa
