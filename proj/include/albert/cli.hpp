#pragma once

// Command dispatch for the `albert` tool. Exit codes: 0 success (every check passed),
// 1 a certificate or check failed, 2 usage, input or domain error.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "albert/algebra.hpp"
#include "albert/catalog.hpp"
#include "albert/certificate.hpp"
#include "albert/envelope.hpp"
#include "albert/errors.hpp"
#include "albert/io.hpp"
#include "albert/isomorphism.hpp"
#include "albert/isotopy.hpp"
#include "albert/nilrank.hpp"
#include "albert/witnesses.hpp"

namespace albert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitError = 2;

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
}

/// C(alpha, beta, gamma) coordinates when A is literally in that normal form: e1 is the
/// unit, e2^2 = e3^2 = 0 and A is commutative.
inline std::optional<Vector> c_family_parameters(const Algebra& A) {
    if (A.dim() != 3 || !is_commutative(A)) return std::nullopt;
    const auto unit = find_unit(A);
    if (!unit || !(*unit == A.basis(0))) return std::nullopt;
    if (!(A.basis(1) * A.basis(1)).is_zero() || !(A.basis(2) * A.basis(2)).is_zero()) return std::nullopt;
    return A.product_row(1, 2);
}

/// Exact count for C-family algebras over the rationals, otherwise brute force over F_p
/// (reducing rational algebras modulo `p`, or the first suitable prime >= 5).
inline std::pair<NilReport, std::string> nil_rank_auto(const Algebra& A, std::optional<std::int64_t> p) {
    if (A.field().is_prime_field()) {
        if (p && *p != A.field().modulus()) throw DomainError("--p differs from the algebra's field");
        return {nil_rank_bruteforce(A), A.field().to_string()};
    }
    if (!p) {
        if (auto abg = c_family_parameters(A); abg && !(*abg)[0].is_zero())
            return {nil_rank_exact_C((*abg)[0], (*abg)[1], (*abg)[2]), "rational"};
    }
    std::vector<std::int64_t> candidates;
    if (p) {
        candidates.push_back(*p);
    } else {
        for (std::int64_t q = 5; q < 1000; q += 2)
            if (FieldDescriptor::is_prime(q)) candidates.push_back(q);
    }
    for (auto q : candidates) {
        try {
            const Algebra R = reduce_mod_p(A, q);
            return {nil_rank_bruteforce(R), R.field().to_string()};
        } catch (const DomainError&) {
            if (p) throw;
        }
    }
    throw DomainError("no prime available for reduction");
}

inline std::string describe(const NilReport& r, const std::string& over) {
    std::ostringstream os;
    os << r.rank << " (method " << to_string(r.method) << " over " << over;
    if (r.closure_caveat) os << ", closure caveat";
    os << ")";
    return os.str();
}

inline int print_certificate(const Certificate& cert, bool json, std::ostream& out) {
    if (json)
        out << certificate_to_json(cert).dump(2) << "\n";
    else
        out << cert.to_text();
    return cert.verdict() ? kExitOk : kExitCheckFailed;
}

inline Vector parse_scalar_list(const std::string& text, FieldDescriptor f) {
    Vector v;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) v.push_back(Scalar::parse(f, item));
    return v;
}

/// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with structure-constant algebras and their Albert isotopes"};
    app.require_subcommand(1);

    std::string file, file_b, elem, f_path, g_path, out_path, mat_path, name, rho_text, abg_text, sigma_text = "2",
                                                                                              tau_text = "3";
    std::int64_t p_opt = 0, gf = 0;
    std::size_t n_opt = 0;
    bool json = false;

    auto* analyze = app.add_subcommand("analyze", "structural invariants of an algebra file");
    analyze->add_option("FILE", file)->required();
    analyze->add_option("--p", p_opt, "prime for brute-force nil-rank of rational algebras");

    auto* rmul = app.add_subcommand("rmul", "right multiplication operator of an element");
    rmul->add_option("FILE", file)->required();
    rmul->add_option("--elem", elem, "coordinates v1,...,vn")->required();

    auto* isotope = app.add_subcommand("isotope", "principal isotope A^(f,g); g defaults to f");
    isotope->add_option("FILE", file)->required();
    isotope->add_option("--f", f_path, "matrix file for f")->required();
    isotope->add_option("--g", g_path, "matrix file for g");
    isotope->add_option("-o,--output", out_path, "output algebra file")->required();

    auto* express = app.add_subcommand("express-rmul", "write a matrix as R_g if possible");
    express->add_option("FILE", file)->required();
    express->add_option("--mat", mat_path, "matrix file")->required();

    auto* iso = app.add_subcommand("iso-search", "exhaustive isomorphism search over F_p");
    iso->add_option("FILE_A", file)->required();
    iso->add_option("FILE_B", file_b)->required();

    auto* nil = app.add_subcommand("nilrank", "nil-rank with method tag");
    nil->add_option("FILE", file)->required();
    nil->add_option("--p", p_opt, "prime for brute force");

    auto* witness = app.add_subcommand("witness", "run a witness pipeline and print its certificate");
    witness->add_option("NAME", name, "lemma1|lemma6|lemma10|lemma11|theorem1|theorem2|prop1|prop2")
        ->required()
        ->check(CLI::IsMember({"lemma1", "lemma6", "lemma10", "lemma11", "theorem1", "theorem2", "prop1", "prop2"}));
    witness->add_option("--rho", rho_text, "parameter of C(rho) for lemma11");
    witness->add_option("--n", n_opt, "n for prop1/prop2");
    witness->add_option("--abg", abg_text, "alpha,beta,gamma for theorem1");
    witness->add_option("--gf", gf, "work over F_p instead of the rationals");
    witness->add_option("--file", file, "algebra file for lemma1 (default J2)");
    witness->add_option("--sigma", sigma_text, "sigma for lemma1");
    witness->add_option("--tau", tau_text, "tau for lemma1");
    witness->add_flag("--json", json, "emit the machine-readable certificate");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    const std::optional<std::int64_t> p = p_opt ? std::optional<std::int64_t>(p_opt) : std::nullopt;
    try {
        if (analyze->parsed()) {
            const Algebra A = parse_algebra_file(read_file(file));
            out << "dimension: " << A.dim() << "\n";
            out << "field: " << A.field().to_string() << "\n";
            const bool comm = is_commutative(A);
            out << "commutative: " << (comm ? "yes" : "no") << "\n";
            const auto unit = find_unit(A);
            out << "unit: " << (unit ? unit->to_string() : "none") << "\n";
            std::string jordan = "n/a (not commutative)";
            if (comm) {
                try {
                    jordan = is_jordan(A) ? "yes" : "no";
                } catch (const UnsupportedCharacteristic&) {
                    jordan = "unsupported in characteristic 3";
                }
            }
            out << "jordan: " << jordan << "\n";
            out << "envelope dimension: " << envelope_dimension(A) << " of " << A.dim() * A.dim() << "\n";
            out << "simple over closure: " << (is_simple_closure(A) ? "yes" : "no") << "\n";
            if (A.field().is_prime_field() && A.dim() <= 4 && A.field().modulus() <= 7)
                out << "ideals over " << A.field().to_string() << ": " << ideal_search_exhaustive(A).size() << "\n";
            try {
                const auto [report, over] = nil_rank_auto(A, p);
                out << "nil-rank: " << describe(report, over) << "\n";
            } catch (const SearchBudgetExceeded&) {
                out << "nil-rank: unavailable (search budget)\n";
            }
            return kExitOk;
        }
        if (rmul->parsed()) {
            const Algebra A = parse_algebra_file(read_file(file));
            const auto report = r_mult_report(A.element(parse_scalar_list(elem, A.field())));
            out << "element: " << report.element.to_string() << "\n";
            out << "R: " << report.matrix << "\n";
            out << "det: " << report.determinant << "\n";
            out << "invertible: " << (report.invertible ? "yes" : "no") << "\n";
            return kExitOk;
        }
        if (isotope->parsed()) {
            const Algebra A = parse_algebra_file(read_file(file));
            const Matrix fm = parse_matrix_file(read_file(f_path), A.field());
            const Matrix gm = g_path.empty() ? fm : parse_matrix_file(read_file(g_path), A.field());
            const Algebra B = principal_isotope(A, fm, gm);
            write_file(out_path, serialize_algebra(B));
            out << "wrote isotope to " << out_path << "\n";
            return kExitOk;
        }
        if (express->parsed()) {
            const Algebra A = parse_algebra_file(read_file(file));
            const auto rep = express_as_right_mult(A, parse_matrix_file(read_file(mat_path), A.field()));
            if (!rep)
                out << "none\n";
            else
                out << "g: " << rep->element.to_string() << " " << to_string(rep->element.coords())
                    << "\nkernel dimension: " << rep->kernel_dimension << "\n";
            return kExitOk;
        }
        if (iso->parsed()) {
            const Algebra A = parse_algebra_file(read_file(file));
            const Algebra B = parse_algebra_file(read_file(file_b));
            const auto xi = isomorphism_search(A, B);
            out << (xi ? xi->to_string() : std::string("none")) << "\n";
            return kExitOk;
        }
        if (nil->parsed()) {
            const Algebra A = parse_algebra_file(read_file(file));
            const auto [report, over] = nil_rank_auto(A, p);
            out << "nil-rank: " << describe(report, over) << "\n";
            for (const auto& w : report.witnesses) out << "  witness " << w.to_string() << "\n";
            return kExitOk;
        }
        if (witness->parsed()) {
            const FieldDescriptor f = gf ? FieldDescriptor::prime(gf) : FieldDescriptor::rational();
            auto need = [&](bool given, const char* what) {
                if (!given) throw DomainError(std::string("witness ") + name + " needs " + what);
            };
            if (name == "lemma1") {
                const Algebra A = file.empty() ? make_j2(f) : parse_algebra_file(read_file(file));
                return print_certificate(witness_lemma1(A, Scalar::parse(A.field(), sigma_text),
                                                        Scalar::parse(A.field(), tau_text)),
                                         json, out);
            }
            if (name == "lemma6") return print_certificate(witness_lemma6(f), json, out);
            if (name == "lemma10") return print_certificate(witness_lemma10(f), json, out);
            if (name == "lemma11") {
                need(!rho_text.empty(), "--rho");
                return print_certificate(witness_lemma11(Scalar::parse(f, rho_text)), json, out);
            }
            if (name == "theorem1") {
                need(!abg_text.empty(), "--abg");
                const Vector abg = parse_scalar_list(abg_text, f);
                if (abg.size() != 3) throw DomainError("--abg needs three values");
                return print_certificate(witness_theorem1(abg[0], abg[1], abg[2]), json, out);
            }
            if (name == "theorem2") return print_certificate(witness_theorem2(f), json, out);
            need(n_opt != 0, "--n");
            if (name == "prop1") return print_certificate(witness_prop1(n_opt), json, out);
            return print_certificate(witness_prop2(n_opt), json, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

}  // namespace albert::cli
