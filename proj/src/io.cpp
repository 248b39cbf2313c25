#include "ppa/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ppa/error.hpp"

namespace ppa {

namespace {

using nlohmann::json;

json int_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
    return json(v.get_str());
}

json vec_json(const IntVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_json(x));
    return out;
}

json matrix_json(const IntMatrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

std::string matrix_pretty(const IntMatrix& m, const std::string& indent = "  ") {
    std::vector<std::size_t> width(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) {
            width[j] = std::max(width[j], m(i, j).get_str().size());
        }
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const std::string s = m(i, j).get_str();
            if (j) os << " ";
            os << std::string(width[j] - s.size(), ' ') << s;
        }
        os << "\n";
    }
    return os.str();
}

Quiver catalog_quiver(const std::string& name) {
    auto arrow = [](std::size_t f, std::size_t t, const char* label) {
        return Arrow{f, t, label};
    };
    if (name == "A2q") return make_quiver(2, {arrow(0, 1, "a")});
    if (name == "A3q") return make_quiver(3, {arrow(0, 1, "a"), arrow(1, 2, "b")});
    if (name == "D4q") {
        return make_quiver(4, {arrow(0, 1, "a"), arrow(1, 2, "b"), arrow(1, 3, "c")});
    }
    if (name == "kronecker") return make_quiver(2, {arrow(0, 1, "a"), arrow(0, 1, "b")});
    if (name == "kronecker3") {
        return make_quiver(2, {arrow(0, 1, "a"), arrow(0, 1, "b"), arrow(0, 1, "c")});
    }
    if (name == "A2tilde") {
        return make_quiver(3, {arrow(0, 1, "a"), arrow(1, 2, "b"), arrow(0, 2, "c")});
    }
    if (name == "D4tilde") {
        return make_quiver(
            5, {arrow(0, 4, "a"), arrow(1, 4, "b"), arrow(2, 4, "c"), arrow(3, 4, "d")});
    }
    if (name == "jordan") return make_quiver(1, {arrow(0, 0, "x")});
    fail(Err::BadInput, "not a catalog quiver: " + name);
}

struct CatalogCartan {
    char series;
    int rank;
};

std::optional<CatalogCartan> parse_cartan_name(const std::string& name) {
    static const std::vector<std::pair<char, std::pair<int, int>>> ranges = {
        {'A', {1, 8}}, {'B', {2, 4}}, {'C', {3, 3}}, {'D', {4, 6}},
        {'E', {6, 8}}, {'F', {4, 4}}, {'G', {2, 2}},
    };
    if (name.size() < 2) return std::nullopt;
    for (const auto& [series, range] : ranges) {
        if (name[0] != series) continue;
        int rank = 0;
        for (std::size_t k = 1; k < name.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
            rank = rank * 10 + (name[k] - '0');
        }
        if (rank < range.first || rank > range.second) return std::nullopt;
        return CatalogCartan{series, rank};
    }
    return std::nullopt;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int r = 1; r <= 8; ++r) names.push_back("A" + std::to_string(r));
    for (int r = 2; r <= 4; ++r) names.push_back("B" + std::to_string(r));
    names.push_back("C3");
    for (int r = 4; r <= 6; ++r) names.push_back("D" + std::to_string(r));
    names.push_back("E6");
    names.push_back("E7");
    names.push_back("E8");
    names.push_back("F4");
    names.push_back("G2");
    names.insert(names.end(), {"A2q", "A3q", "D4q", "kronecker", "A2tilde", "D4tilde",
                               "kronecker3", "jordan"});
    return names;
}

bool is_catalog_name(const std::string& name) {
    if (parse_cartan_name(name)) return true;
    for (const char* q : {"A2q", "A3q", "D4q", "kronecker", "A2tilde", "D4tilde", "kronecker3",
                          "jordan"}) {
        if (name == q) return true;
    }
    return false;
}

NamedInput load_catalog(const std::string& name) {
    if (const auto cn = parse_cartan_name(name)) {
        NamedInput in;
        in.name = name;
        in.datum = from_cartan_matrix(standard_cartan(cn->series, cn->rank));
        return in;
    }
    NamedInput in;
    in.name = name;
    in.quiver = catalog_quiver(name);
    in.datum = build_cartan(to_valued(*in.quiver));
    return in;
}

NamedInput load_input(const std::string& name_or_path) {
    if (is_catalog_name(name_or_path)) return load_catalog(name_or_path);

    std::ifstream file(name_or_path);
    if (!file) {
        fail(Err::BadInput, "'" + name_or_path + "' is neither a catalog name nor a readable file");
    }
    json doc;
    try {
        doc = json::parse(file);
    } catch (const json::parse_error& e) {
        fail(Err::BadInput, std::string("JSON parse error in ") + name_or_path + ": " + e.what());
    }

    NamedInput in;
    in.name = std::filesystem::path(name_or_path).stem().string();
    try {
        if (doc.contains("quiver")) {
            const json& q = doc["quiver"];
            const json arrows = q.value("arrows", json::array());
            std::size_t n = 0;
            if (q.contains("d")) {
                n = q["d"].size();
            } else {
                for (const json& a : arrows) {
                    n = std::max<std::size_t>(n, a.at("from").get<std::size_t>());
                    n = std::max<std::size_t>(n, a.at("to").get<std::size_t>());
                }
            }
            if (n == 0) fail(Err::BadInput, "quiver needs vertices");
            std::vector<Int> d(n, Int(1));
            if (q.contains("d")) {
                for (std::size_t i = 0; i < n; ++i) d[i] = Int(q["d"][i].get<long>());
            }

            std::vector<ValuedArrow> valued;
            bool simply_laced = true;
            for (const Int& di : d) {
                if (di != 1) simply_laced = false;
            }
            std::vector<Arrow> plain;
            std::size_t index = 0;
            for (const json& a : arrows) {
                ++index;
                const long from = a.at("from").get<long>();
                const long to = a.at("to").get<long>();
                const long weight = a.value("weight", 1L);
                if (from < 1 || to < 1 || from > static_cast<long>(n) ||
                    to > static_cast<long>(n)) {
                    fail(Err::BadInput, "arrow endpoint out of range in arrow " +
                                            std::to_string(index));
                }
                if (weight < 1) fail(Err::NonPositiveWeight, "arrow weight must be positive");
                valued.push_back({static_cast<int>(from - 1), static_cast<int>(to - 1),
                                  Int(weight)});
                const std::string base = "a" + std::to_string(index);
                if (weight == 1) {
                    plain.push_back({static_cast<std::size_t>(from - 1),
                                     static_cast<std::size_t>(to - 1), base});
                } else {
                    for (long t = 1; t <= weight; ++t) {
                        plain.push_back({static_cast<std::size_t>(from - 1),
                                         static_cast<std::size_t>(to - 1),
                                         base + "_" + std::to_string(t)});
                    }
                }
            }
            in.datum = build_cartan(make_valued_quiver(d, valued));
            if (simply_laced) in.quiver = make_quiver(n, plain);
            return in;
        }
        if (doc.contains("cartan")) {
            const json& c = doc["cartan"];
            const json& rows = c.at("C");
            const std::size_t n = rows.size();
            if (n == 0) fail(Err::BadInput, "empty Cartan matrix");
            IntMatrix cm(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                if (rows[i].size() != n) fail(Err::BadInput, "Cartan matrix is not square");
                for (std::size_t j = 0; j < n; ++j) cm(i, j) = Int(rows[i][j].get<long>());
            }
            std::optional<std::vector<Int>> symmetrizer;
            if (c.contains("symmetrizer")) {
                std::vector<Int> s;
                for (const json& v : c["symmetrizer"]) s.push_back(Int(v.get<long>()));
                symmetrizer = std::move(s);
            }
            in.datum = from_cartan_matrix(cm, symmetrizer);
            return in;
        }
    } catch (const json::exception& e) {
        fail(Err::BadInput, std::string("malformed input JSON: ") + e.what());
    }
    fail(Err::BadInput, "input JSON needs a 'quiver' or 'cartan' object");
}

std::string classify_json(const NamedInput& in, std::optional<std::size_t> h) {
    const CartanDatum& cd = in.datum;
    json out;
    out["input"] = in.name;
    out["classification"] = classification_name(cd.cls);
    if (cd.dynkin) out["dynkin"] = cd.dynkin->str();
    if (h) out["h"] = *h;
    out["d"] = vec_json(cd.d);
    out["matrices"] = {{"D", matrix_json(cd.D)}, {"B", matrix_json(cd.B)},
                       {"Bbar", matrix_json(cd.Bbar)}, {"C", matrix_json(cd.C)},
                       {"E", matrix_json(cd.E)}};
    return out.dump(2) + "\n";
}

std::string classify_csv(const NamedInput& in, std::optional<std::size_t> h) {
    std::ostringstream os;
    os << "key,value\n";
    os << "input," << in.name << "\n";
    os << "classification," << classification_name(in.datum.cls) << "\n";
    if (in.datum.dynkin) os << "dynkin," << in.datum.dynkin->str() << "\n";
    if (h) os << "h," << *h << "\n";
    return os.str();
}

std::string classify_pretty(const NamedInput& in, std::optional<std::size_t> h) {
    const CartanDatum& cd = in.datum;
    std::ostringstream os;
    os << "input: " << in.name << "\n";
    os << "classification: " << classification_name(cd.cls);
    if (cd.dynkin) os << " (" << cd.dynkin->str() << ")";
    if (h) os << ", h = " << *h;
    os << "\n";
    os << "d = (";
    for (std::size_t i = 0; i < cd.d.size(); ++i) os << (i ? " " : "") << cd.d[i];
    os << ")\n";
    const std::pair<const char*, const IntMatrix*> mats[] = {
        {"D", &cd.D}, {"B", &cd.B}, {"Bbar", &cd.Bbar}, {"C", &cd.C}, {"E", &cd.E}};
    for (const auto& [label, m] : mats) {
        os << label << " =\n" << matrix_pretty(*m);
    }
    return os.str();
}

std::string hilbert_json(const HilbertOutput& out) {
    json j;
    j["input"] = out.input;
    j["source"] = out.table.source;
    j["max_degree"] = out.table.max_degree();
    if (out.table.dynkin_top) {
        j["dynkin_top"] = *out.table.dynkin_top;
    } else {
        j["dynkin_top"] = nullptr;
    }
    j["matrices"] = json::array();
    for (const IntMatrix& m : out.table.matrices) j["matrices"].push_back(matrix_json(m));
    if (out.identity) {
        j["hilbert_identity"] = {{"pass", out.identity->pass}, {"message", out.identity->message}};
    }
    if (out.total_dim) j["total_dim"] = int_json(*out.total_dim);
    return j.dump(2) + "\n";
}

std::string hilbert_csv(const HilbertOutput& out) {
    std::ostringstream os;
    os << "degree,i,j,dim\n";
    for (std::size_t r = 0; r < out.table.matrices.size(); ++r) {
        const IntMatrix& m = out.table.matrices[r];
        for (std::size_t i = 0; i < m.rows(); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                os << r << "," << i + 1 << "," << j + 1 << "," << m(i, j) << "\n";
            }
        }
    }
    return os.str();
}

std::string hilbert_pretty(const HilbertOutput& out) {
    std::ostringstream os;
    os << "input: " << out.input << " (" << out.table.source << ")\n";
    for (std::size_t r = 0; r < out.table.matrices.size(); ++r) {
        os << "degree " << r << ":\n" << matrix_pretty(out.table.matrices[r]);
    }
    if (out.table.dynkin_top) os << "top nonzero degree = " << *out.table.dynkin_top << "\n";
    if (out.total_dim) os << "total dim = " << *out.total_dim << "\n";
    if (out.identity) {
        os << "hilbert identity: " << (out.identity->pass ? "pass" : "FAIL") << " ("
           << out.identity->message << ")\n";
    }
    return os.str();
}

std::string roots_json(const std::string& input, const RootSystem& rs) {
    json j;
    j["input"] = input;
    j["count"] = rs.size();
    j["complete"] = rs.complete;
    if (!rs.complete) j["depth_used"] = rs.depth_used;
    j["roots"] = json::array();
    for (const Root& r : rs.roots) j["roots"].push_back(vec_json(r));
    return j.dump(2) + "\n";
}

std::string roots_csv(const RootSystem& rs) {
    std::ostringstream os;
    os << "index";
    if (!rs.roots.empty()) {
        for (std::size_t k = 0; k < rs.roots.front().size(); ++k) os << ",x" << k + 1;
    }
    os << "\n";
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        os << i + 1;
        for (const Int& x : rs.roots[i]) os << "," << x;
        os << "\n";
    }
    return os.str();
}

std::string roots_pretty(const std::string& input, const RootSystem& rs) {
    std::ostringstream os;
    os << "input: " << input << "\n";
    os << "roots: " << rs.size() << (rs.complete ? "" : " (truncated)") << "\n";
    for (const Root& r : rs.roots) {
        os << "  (";
        for (std::size_t k = 0; k < r.size(); ++k) os << (k ? " " : "") << r[k];
        os << ")\n";
    }
    return os.str();
}

std::string coxeter_json(const CoxeterOutput& out) {
    json j;
    j["input"] = out.input;
    j["h"] = out.cox.h;
    j["root_count"] = out.root_count;
    json order = json::array();
    for (std::size_t v : out.cox.order) order.push_back(v + 1);
    j["order"] = order;
    j["cminus"] = matrix_json(out.cox.cminus);
    j["cox"] = matrix_json(out.cox.cox);
    j["m"] = out.tau.m;
    json rho = json::array();
    for (std::size_t v : out.tau.rho) rho.push_back(v + 1);
    j["rho"] = rho;
    json orbits = json::array();
    for (const auto& orbit : out.orbits) {
        json o = json::array();
        for (const Root& r : orbit) o.push_back(vec_json(r));
        orbits.push_back(o);
    }
    j["orbits"] = orbits;
    return j.dump(2) + "\n";
}

std::string coxeter_csv(const CoxeterOutput& out) {
    std::ostringstream os;
    os << "vertex,m,rho\n";
    for (std::size_t i = 0; i < out.n; ++i) {
        os << i + 1 << "," << out.tau.m[i] << "," << out.tau.rho[i] + 1 << "\n";
    }
    return os.str();
}

std::string coxeter_pretty(const CoxeterOutput& out) {
    std::ostringstream os;
    os << "input: " << out.input << "\n";
    os << "h = " << out.cox.h << ", |Phi| = " << out.root_count << ", orbits = "
       << out.orbits.size() << "\n";
    os << "orbit sizes:";
    for (const auto& orbit : out.orbits) os << " " << orbit.size();
    os << "\n";
    os << "m = (";
    for (std::size_t i = 0; i < out.n; ++i) os << (i ? " " : "") << out.tau.m[i];
    os << ")\n";
    os << "rho = (";
    for (std::size_t i = 0; i < out.n; ++i) os << (i ? " " : "") << out.tau.rho[i] + 1;
    os << ")\n";
    os << "coxeter matrix =\n" << matrix_pretty(out.cox.cox);
    return os.str();
}

namespace {

json verify_json_obj(const VerifyReport& rep) {
    json j;
    j["input"] = rep.input;
    j["pass"] = rep.pass;
    j["checks"] = json::array();
    for (const CheckResult& c : rep.checks) {
        j["checks"].push_back({{"name", c.name}, {"status", c.status}, {"details", c.details}});
    }
    return j;
}

}  // namespace

std::string verify_json(const VerifyReport& rep) { return verify_json_obj(rep).dump(2) + "\n"; }

std::string verify_csv(const VerifyReport& rep) {
    std::ostringstream os;
    os << "input,check,status,details\n";
    for (const CheckResult& c : rep.checks) {
        std::string details = c.details;
        for (char& ch : details) {
            if (ch == ',' || ch == '\n') ch = ';';
        }
        os << rep.input << "," << c.name << "," << c.status << "," << details << "\n";
    }
    return os.str();
}

std::string verify_pretty(const VerifyReport& rep) {
    std::ostringstream os;
    os << "input: " << rep.input << "\n";
    for (const CheckResult& c : rep.checks) {
        const char* tag = c.status == "pass" ? "[PASS]" : (c.status == "fail" ? "[FAIL]" : "[SKIP]");
        os << "  " << tag << " " << c.name << ": " << c.details << "\n";
    }
    os << (rep.pass ? "PASS" : "FAIL") << " " << rep.input << "\n";
    return os.str();
}

std::string verify_many_json(const std::vector<VerifyReport>& reps) {
    json j = json::array();
    bool all = true;
    for (const VerifyReport& r : reps) {
        j.push_back(verify_json_obj(r));
        all = all && r.pass;
    }
    json out;
    out["pass"] = all;
    out["reports"] = j;
    return out.dump(2) + "\n";
}

std::string verify_many_csv(const std::vector<VerifyReport>& reps) {
    std::ostringstream os;
    os << "input,check,status,details\n";
    for (const VerifyReport& rep : reps) {
        const std::string one = verify_csv(rep);
        os << one.substr(one.find('\n') + 1);
    }
    return os.str();
}

std::string verify_many_pretty(const std::vector<VerifyReport>& reps) {
    std::ostringstream os;
    bool all = true;
    for (const VerifyReport& rep : reps) {
        os << verify_pretty(rep);
        all = all && rep.pass;
    }
    os << (all ? "ALL PASS" : "SOME FAIL") << " (" << reps.size() << " inputs)\n";
    return os.str();
}

}  // namespace ppa
