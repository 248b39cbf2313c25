#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"
#include "ppa/error.hpp"
#include "ppa/hilbert.hpp"
#include "ppa/io.hpp"

using namespace ppa;
using nlohmann::json;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& stem, const std::string& content) {
        path = std::filesystem::temp_directory_path() / (stem + ".json");
        std::ofstream(path) << content;
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path, ec);
    }
    std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("catalog lists every built-in input") {
    const auto names = catalog_names();
    CHECK(names.size() == 28);
    for (const std::string& n :
         {"A1", "A8", "B2", "C3", "D6", "E8", "F4", "G2", "A2q", "A3q", "D4q",
          "kronecker", "kronecker3", "A2tilde", "D4tilde", "jordan"}) {
        CAPTURE(n);
        CHECK(is_catalog_name(n));
    }
    CHECK_FALSE(is_catalog_name("Z9"));
    CHECK_FALSE(is_catalog_name("A9"));
    CHECK_FALSE(is_catalog_name(""));
}

TEST_CASE("catalog entries load with the right shape") {
    const NamedInput g2 = load_catalog("G2");
    CHECK(g2.name == "G2");
    CHECK(g2.datum.cls == Classification::Dynkin);
    CHECK(g2.datum.d == std::vector<Int>{Int(3), Int(1)});
    CHECK_FALSE(g2.quiver.has_value());

    const NamedInput kron = load_catalog("kronecker");
    CHECK(kron.datum.cls == Classification::Affine);
    REQUIRE(kron.quiver.has_value());
    CHECK(kron.quiver->arrows.size() == 2);

    const NamedInput jordan = load_catalog("jordan");
    CHECK(jordan.datum.cls == Classification::BorcherdsWithLoops);
    REQUIRE(jordan.quiver.has_value());

    CHECK_THROWS_AS(load_catalog("nosuch"), Error);
}

TEST_CASE("quiver files load with defaults and 1-based vertices") {
    TempFile f("two_vertex_valued",
               R"({"quiver": {"d": [2, 1], "arrows": [{"from": 1, "to": 2, "weight": 2}]}})");
    const NamedInput in = load_input(f.str());
    CHECK(in.name == "two_vertex_valued");
    CHECK(in.datum.d == std::vector<Int>{Int(2), Int(1)});
    CHECK(in.datum.cls == Classification::Dynkin);
    CHECK_FALSE(in.quiver.has_value());  // valued, so no oracle quiver

    TempFile g("default_weight", R"({"quiver": {"arrows": [{"from": 1, "to": 2}]}})");
    const NamedInput simple = load_input(g.str());
    CHECK(simple.datum.d == std::vector<Int>{Int(1), Int(1)});  // d defaults, n from arrows
    REQUIRE(simple.quiver.has_value());
    CHECK(simple.quiver->arrows.size() == 1);

    TempFile h("fat_arrow", R"({"quiver": {"arrows": [{"from": 1, "to": 2, "weight": 3}]}})");
    const NamedInput fat = load_input(h.str());
    REQUIRE(fat.quiver.has_value());
    CHECK(fat.quiver->arrows.size() == 3);  // expanded into parallel oracle arrows
    CHECK(fat.datum.B(0, 1) == 3);
}

TEST_CASE("cartan files accept an optional symmetrizer") {
    TempFile f("g2_matrix", R"({"cartan": {"C": [[2, -1], [-3, 2]]}})");
    const NamedInput in = load_input(f.str());
    CHECK(in.datum.d == std::vector<Int>{Int(3), Int(1)});

    TempFile g("g2_scaled", R"({"cartan": {"C": [[2, -1], [-3, 2]], "symmetrizer": [6, 2]}})");
    const NamedInput scaled = load_input(g.str());
    CHECK(scaled.datum.d == std::vector<Int>{Int(6), Int(2)});
}

TEST_CASE("malformed inputs are rejected as input errors") {
    auto load_err = [](const std::string& stem, const std::string& content) {
        TempFile f(stem, content);
        try {
            load_input(f.str());
            return false;
        } catch (const Error& e) {
            return is_input_error(e.code());
        }
    };
    CHECK(load_err("not_json", "{"));
    CHECK(load_err("no_key", R"({"something": 1})"));
    CHECK(load_err("zero_based", R"({"quiver": {"arrows": [{"from": 0, "to": 1}]}})"));
    CHECK(load_err("bad_weight", R"({"quiver": {"arrows": [{"from": 1, "to": 2, "weight": 0}]}})"));
    CHECK(load_err("ragged", R"({"cartan": {"C": [[2, -1], [-1]]}})"));
    CHECK(load_err("bad_sym", R"({"cartan": {"C": [[2, -1], [-1, 2]], "symmetrizer": [1]}})"));

    try {
        load_input("/nonexistent/file.json");
        CHECK(false);
    } catch (const Error& e) {
        CHECK(is_input_error(e.code()));
    }
}

TEST_CASE("classify serializations carry the classification") {
    const NamedInput a2 = load_catalog("A2");
    const json parsed = json::parse(classify_json(a2, 3));
    CHECK(parsed["input"] == "A2");
    CHECK(parsed["classification"] == "Dynkin");
    CHECK(parsed["dynkin"] == "A2");
    CHECK(parsed["h"] == 3);
    CHECK(parsed["matrices"]["C"][0][0] == 2);
    CHECK(parsed["matrices"]["B"][0][1] == 1);

    const std::string pretty = classify_pretty(a2, 3);
    CHECK(pretty.find("Dynkin") != std::string::npos);
    CHECK(pretty.find("h = 3") != std::string::npos);
    const std::string csv = classify_csv(a2, 3);
    CHECK(csv.find("classification,Dynkin") != std::string::npos);
}

TEST_CASE("hilbert serializations agree across formats") {
    const NamedInput a3 = load_catalog("A3");
    HilbertOutput out;
    out.input = a3.name;
    out.table = graded_dim_table(a3.datum);
    out.total_dim = Int(10);

    const json parsed = json::parse(hilbert_json(out));
    CHECK(parsed["input"] == "A3");
    CHECK(parsed["source"] == "closed-form");
    CHECK(parsed["dynkin_top"] == 2);
    CHECK(parsed["matrices"].size() == 3);
    CHECK(parsed["matrices"][2][0][2] == 1);
    CHECK(parsed["total_dim"] == 10);

    const std::string csv = hilbert_csv(out);
    CHECK(csv.rfind("degree,i,j,dim", 0) == 0);
    CHECK(csv.find("\n2,1,3,1") != std::string::npos);  // 1-based coordinates

    const std::string pretty = hilbert_pretty(out);
    CHECK(pretty.find("degree 0") != std::string::npos);
    CHECK(pretty.find("total dim = 10") != std::string::npos);
}

TEST_CASE("huge table entries serialize as decimal strings") {
    TempFile f("heavy_edge",
               R"({"quiver": {"d": [2, 2], "arrows": [{"from": 1, "to": 2, "weight": 1000000}]}})");
    const NamedInput in = load_input(f.str());
    CHECK(in.datum.Bbar(0, 1) == 500000);

    HilbertOutput out;
    out.input = in.name;
    out.table = graded_dim_table(in.datum, 4);
    const json parsed = json::parse(hilbert_json(out));
    CHECK(parsed["matrices"][0][0][0] == 2);  // D entry still a plain number
    const Int k = 500000;
    const Int expect = Int(2) * (k * k * k * k - Int(3) * k * k + 1);  // 2 V_4(0,0)
    REQUIRE(parsed["matrices"][4][0][0].is_string());
    CHECK(parsed["matrices"][4][0][0] == expect.get_str());
}

TEST_CASE("verify serializations track the report") {
    const NamedInput a2 = load_catalog("A2");
    VerifyOptions opts;
    const VerifyReport rep = run_verify(a2.name, a2.datum, a2.quiver, opts);
    CHECK(rep.pass);

    const json parsed = json::parse(verify_json(rep));
    CHECK(parsed["input"] == "A2");
    CHECK(parsed["pass"] == true);
    CHECK(parsed["checks"].size() >= 10);
    bool saw_vieta = false;
    for (const auto& c : parsed["checks"]) {
        if (c["name"] == "vieta-truncation") {
            saw_vieta = true;
            CHECK(c["status"] == "pass");
        }
    }
    CHECK(saw_vieta);

    const std::string pretty = verify_pretty(rep);
    CHECK(pretty.find("[PASS]") != std::string::npos);
    CHECK(pretty.find("PASS A2") != std::string::npos);

    const std::string csv = verify_csv(rep);
    CHECK(csv.rfind("input,check,status,details", 0) == 0);
}
