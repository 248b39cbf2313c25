#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ppa/error.hpp"
#include "ppa/hilbert.hpp"
#include "ppa/io.hpp"
#include "ppa/koszul.hpp"
#include "ppa/path_algebra.hpp"
#include "ppa/verify.hpp"
#include "ppa/weyl.hpp"

namespace {

using namespace ppa;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(output_path);
    if (!f) fail(Err::BadInput, "cannot open '" + output_path + "' for writing");
    f << text;
}

FieldMode parse_field(const std::string& s) {
    if (s == "exact") return {};
    const std::string prefix = "prime:";
    if (s.rfind(prefix, 0) == 0) {
        const std::string digits = s.substr(prefix.size());
        if (digits.empty()) fail(Err::BadInput, "--field prime:P needs a prime");
        std::uint64_t p = 0;
        for (char ch : digits) {
            if (ch < '0' || ch > '9') fail(Err::BadInput, "--field prime:P needs a decimal prime");
            if (p > (UINT64_MAX - 9) / 10) fail(Err::BadInput, "--field prime too large");
            p = p * 10 + static_cast<std::uint64_t>(ch - '0');
        }
        if (!is_probable_prime(p)) fail(Err::BadInput, "--field prime:P needs P prime");
        return FieldMode{p};
    }
    fail(Err::BadInput, "--field must be 'exact' or 'prime:P'");
}

std::pair<std::size_t, std::size_t> parse_perturb(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) fail(Err::BadInput, "--perturb-bbar needs 'i,j'");
    long i = 0, j = 0;
    try {
        i = std::stol(s.substr(0, comma));
        j = std::stol(s.substr(comma + 1));
    } catch (const std::exception&) {
        fail(Err::BadInput, "--perturb-bbar needs integer 'i,j'");
    }
    if (i < 1 || j < 1) fail(Err::BadInput, "--perturb-bbar indices are 1-based");
    return {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)};
}

std::optional<std::size_t> coxeter_number_if_finite(const CartanDatum& cd) {
    if (cd.cls != Classification::Dynkin) return std::nullopt;
    return coxeter_element(cd).h;
}

int cmd_classify(const std::string& input, const std::string& format, const std::string& output) {
    const NamedInput in = load_input(input);
    const std::optional<std::size_t> h = coxeter_number_if_finite(in.datum);
    if (format == "json") {
        emit(classify_json(in, h), output);
    } else if (format == "csv") {
        emit(classify_csv(in, h), output);
    } else {
        emit(classify_pretty(in, h), output);
    }
    return 0;
}

int cmd_hilbert(const std::string& input, const std::string& format, const std::string& output,
                long long max_degree, const std::string& source, const FieldMode& field) {
    const NamedInput in = load_input(input);
    std::optional<std::size_t> requested;
    if (max_degree >= 0) requested = static_cast<std::size_t>(max_degree);

    HilbertOutput out;
    out.input = in.name;

    if (source == "oracle") {
        if (!in.quiver) {
            fail(Err::NotSimplyLaced,
                 "the path oracle needs a simply-laced quiver input (all vertex weights 1)");
        }
        const std::size_t md = requested.value_or(8);
        OracleOptions opt;
        opt.max_degree = md;
        opt.degree_cap = std::max<std::size_t>(md, 8);
        opt.field = field;
        PathOracle oracle(*in.quiver, opt);
        out.table = oracle.table(md);
    } else {
        const CartanDatum& cd = in.datum;
        if (cd.cls == Classification::Dynkin) {
            out.table = graded_dim_table(cd, requested);
            const CoxeterData cox = coxeter_element(cd);
            const RootSystem rs = enumerate_roots(cd);
            const TauOrbits tau = nakayama_permutation(cd, cox, rs);
            IntMatrix expected(cd.size(), cd.size());
            for (std::size_t i = 0; i < cd.size(); ++i) expected(i, tau.rho[i]) = cd.d[i];
            out.identity = hilbert_polynomial_identity(cd, expected, cox.h);
            Int total(0);
            for (std::size_t r = 0; r <= *out.table.dynkin_top; ++r) {
                const IntMatrix& m = out.table.matrices[r];
                for (std::size_t i = 0; i < m.rows(); ++i) {
                    for (std::size_t j = 0; j < m.cols(); ++j) total += m(i, j);
                }
            }
            out.total_dim = total;
        } else {
            out.table = graded_dim_table(cd, requested.value_or(12));
        }
    }

    if (format == "json") {
        emit(hilbert_json(out), output);
    } else if (format == "csv") {
        emit(hilbert_csv(out), output);
    } else {
        emit(hilbert_pretty(out), output);
    }
    return (out.identity && !out.identity->pass) ? 1 : 0;
}

int cmd_roots(const std::string& input, const std::string& format, const std::string& output,
              long long depth) {
    const NamedInput in = load_input(input);
    std::optional<std::size_t> depth_limit;
    if (depth >= 0) depth_limit = static_cast<std::size_t>(depth);
    const RootSystem rs = enumerate_roots(in.datum, depth_limit);
    if (format == "json") {
        emit(roots_json(in.name, rs), output);
    } else if (format == "csv") {
        emit(roots_csv(rs), output);
    } else {
        emit(roots_pretty(in.name, rs), output);
    }
    return 0;
}

int cmd_coxeter(const std::string& input, const std::string& format, const std::string& output) {
    const NamedInput in = load_input(input);
    if (in.datum.cls != Classification::Dynkin) {
        fail(Err::InfiniteRootSystem,
             std::string("Coxeter orbit data needs a finite root system; this input is ") +
                 classification_name(in.datum.cls));
    }
    CoxeterOutput out;
    out.input = in.name;
    out.n = in.datum.size();
    out.cox = coxeter_element(in.datum);
    const RootSystem rs = enumerate_roots(in.datum);
    out.tau = nakayama_permutation(in.datum, out.cox, rs);
    out.orbits = coxeter_orbits(rs, out.cox);
    out.root_count = rs.size();
    if (format == "json") {
        emit(coxeter_json(out), output);
    } else if (format == "csv") {
        emit(coxeter_csv(out), output);
    } else {
        emit(coxeter_pretty(out), output);
    }
    return 0;
}

int cmd_verify(const std::string& input, const std::string& format, const std::string& output,
               long long max_degree, const FieldMode& field, const std::string& perturb) {
    VerifyOptions opts;
    if (max_degree >= 0) opts.max_degree = static_cast<std::size_t>(max_degree);
    opts.field = field;
    if (!perturb.empty()) opts.perturb_bbar = parse_perturb(perturb);

    if (input == "all") {
        if (opts.perturb_bbar) {
            fail(Err::BadInput, "--perturb-bbar needs a single input, not 'all'");
        }
        std::vector<VerifyReport> reports;
        bool pass = true;
        for (const std::string& name : catalog_names()) {
            const NamedInput in = load_catalog(name);
            reports.push_back(run_verify(in.name, in.datum, in.quiver, opts));
            pass = pass && reports.back().pass;
        }
        if (format == "json") {
            emit(verify_many_json(reports), output);
        } else if (format == "csv") {
            emit(verify_many_csv(reports), output);
        } else {
            emit(verify_many_pretty(reports), output);
        }
        return pass ? 0 : 1;
    }

    const NamedInput in = load_input(input);
    const VerifyReport rep = run_verify(in.name, in.datum, in.quiver, opts);
    if (format == "json") {
        emit(verify_json(rep), output);
    } else if (format == "csv") {
        emit(verify_csv(rep), output);
    } else {
        emit(verify_pretty(rep), output);
    }
    return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure computations for preprojective algebras of valued quivers"};
    app.require_subcommand(1);

    std::string input, format = "pretty", output, field_str = "exact", source = "closed-form";
    std::string perturb;
    long long max_degree = -1, verify_max_degree = 6, depth = -1;

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "catalog name or JSON file")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv", "pretty"}));
        cmd->add_option("--output", output, "write to this file instead of stdout");
    };

    CLI::App* classify = app.add_subcommand("classify", "Cartan data and classification");
    add_common(classify);

    CLI::App* hilbert = app.add_subcommand("hilbert", "graded dimension matrices");
    add_common(hilbert);
    hilbert->add_option("--max-degree", max_degree, "top degree to compute")
        ->check(CLI::Range(0LL, 1000000LL));
    hilbert->add_option("--source", source, "closed-form recurrence or the path oracle")
        ->check(CLI::IsMember({"closed-form", "oracle"}));
    hilbert->add_option("--field", field_str, "exact or prime:P (rank computations)");

    CLI::App* roots = app.add_subcommand("roots", "root system enumeration");
    add_common(roots);
    roots->add_option("--depth", depth, "reflection depth limit for infinite systems")
        ->check(CLI::Range(0LL, 1000000LL));

    CLI::App* coxeter = app.add_subcommand("coxeter", "Coxeter orbits and the Nakayama permutation");
    add_common(coxeter);

    CLI::App* verify = app.add_subcommand("verify", "cross-check every identity on an input");
    add_common(verify);
    verify->add_option("--max-degree", verify_max_degree, "top degree for graded checks")
        ->check(CLI::Range(0LL, 1000000LL));
    verify->add_option("--field", field_str, "must stay exact; prime mode is refused");
    verify->add_option("--perturb-bbar", perturb,
                       "add 1 to this 1-based 'i,j' entry of Bbar (negative control)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify) return cmd_classify(input, format, output);
        if (*hilbert) {
            return cmd_hilbert(input, format, output, max_degree, source, parse_field(field_str));
        }
        if (*roots) return cmd_roots(input, format, output, depth);
        if (*coxeter) return cmd_coxeter(input, format, output);
        if (*verify) {
            return cmd_verify(input, format, output, verify_max_degree, parse_field(field_str),
                              perturb);
        }
    } catch (const ppa::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ppa::is_input_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
