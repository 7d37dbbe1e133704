#pragma once

// Line-oriented text formats. '#' starts a comment.
//
//   field rational | field gf <p>
//   dim <n>
//   names <id> ... <id>            (optional)
//   c <i> <j> <k> <value>          (1-based, e_i e_j has coefficient <value> at e_k)
//
// Unlisted structure constants are zero. Scalars are written `int` or `num/den`.
// Matrix files hold one row per line in the same scalar syntax.

#include <cstddef>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "albert/algebra.hpp"
#include "albert/certificate.hpp"
#include "albert/errors.hpp"
#include "albert/field.hpp"
#include "albert/matrix.hpp"

namespace albert {

namespace detail {

inline std::vector<std::string> tokens_of(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream is{std::string(line)};
    std::vector<std::string> out;
    for (std::string t; is >> t;) out.push_back(t);
    return out;
}

inline std::size_t parse_index(const std::string& t, std::size_t line, std::size_t n) {
    std::size_t pos = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "bad index '" + t + "'");
    }
    if (pos != t.size() || v < 1 || static_cast<std::size_t>(v) > n)
        throw ParseError(line, "index '" + t + "' out of range 1.." + std::to_string(n));
    return static_cast<std::size_t>(v - 1);
}

inline Scalar parse_scalar_at(FieldDescriptor f, const std::string& t, std::size_t line) {
    try {
        return Scalar::parse(f, t);
    } catch (const DomainError& e) {
        throw ParseError(line, e.what());
    }
}

}  // namespace detail

inline FieldDescriptor parse_field(const std::vector<std::string>& tok, std::size_t line) {
    if (tok.size() == 2 && tok[1] == "rational") return FieldDescriptor::rational();
    if (tok.size() == 3 && tok[1] == "gf") {
        long long p = 0;
        std::size_t pos = 0;
        try {
            p = std::stoll(tok[2], &pos);
        } catch (const std::exception&) {
            throw ParseError(line, "bad modulus '" + tok[2] + "'");
        }
        if (pos != tok[2].size()) throw ParseError(line, "bad modulus '" + tok[2] + "'");
        if (p == 2) throw Char2Field();
        try {
            return FieldDescriptor::prime(p);
        } catch (const InvalidField& e) {
            throw ParseError(line, e.what());
        }
    }
    throw ParseError(line, "expected 'field rational' or 'field gf <p>'");
}

inline Algebra parse_algebra_file(std::string_view text) {
    std::optional<FieldDescriptor> field;
    std::size_t n = 0;
    std::vector<std::string> names;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> entries;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;

    std::istringstream in{std::string(text)};
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto tok = detail::tokens_of(line);
        if (tok.empty()) continue;
        const auto& kw = tok[0];
        if (kw == "field") {
            if (field) throw ParseError(lineno, "field declared twice");
            field = parse_field(tok, lineno);
        } else if (kw == "dim") {
            if (n) throw ParseError(lineno, "dim declared twice");
            if (tok.size() != 2) throw ParseError(lineno, "expected 'dim <n>'");
            try {
                std::size_t pos = 0;
                long long v = std::stoll(tok[1], &pos);
                if (pos != tok[1].size() || v < 1) throw ParseError(lineno, "dimension must be a positive integer");
                n = static_cast<std::size_t>(v);
            } catch (const std::logic_error&) {
                throw ParseError(lineno, "dimension must be a positive integer");
            }
        } else if (kw == "names") {
            if (!n) throw ParseError(lineno, "'names' must follow 'dim'");
            if (!names.empty()) throw ParseError(lineno, "names declared twice");
            if (tok.size() != n + 1) throw ParseError(lineno, "expected " + std::to_string(n) + " names");
            names.assign(tok.begin() + 1, tok.end());
        } else if (kw == "c") {
            if (!field || !n) throw ParseError(lineno, "'field' and 'dim' must precede products");
            if (tok.size() != 5) throw ParseError(lineno, "expected 'c <i> <j> <k> <value>'");
            const auto i = detail::parse_index(tok[1], lineno, n);
            const auto j = detail::parse_index(tok[2], lineno, n);
            const auto k = detail::parse_index(tok[3], lineno, n);
            if (!seen.insert({i, j, k}).second)
                throw DuplicateEntry(lineno, "duplicate entry c " + tok[1] + " " + tok[2] + " " + tok[3]);
            entries.emplace_back(i, j, k, detail::parse_scalar_at(*field, tok[4], lineno));
        } else {
            throw ParseError(lineno, "unknown directive '" + kw + "'");
        }
    }
    if (!field) throw ParseError(lineno, "missing 'field' line");
    if (!n) throw ParseError(lineno, "missing 'dim' line");
    StructureTensor t(*field, n);
    for (const auto& [i, j, k, v] : entries) t.at(i, j, k) = v;
    return Algebra(std::move(t), std::move(names));
}

inline std::string serialize_algebra(const Algebra& A) {
    std::ostringstream os;
    os << "field " << A.field().to_string() << "\n";
    os << "dim " << A.dim() << "\n";
    if (A.has_names()) {
        os << "names";
        for (const auto& s : A.names()) os << " " << s;
        os << "\n";
    }
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t k = 0; k < A.dim(); ++k)
                if (!A.c(i, j, k).is_zero())
                    os << "c " << i + 1 << " " << j + 1 << " " << k + 1 << " " << A.c(i, j, k) << "\n";
    return os.str();
}

/// Square matrix, one row per line, scalars interpreted in `f`.
inline Matrix parse_matrix_file(std::string_view text, FieldDescriptor f) {
    std::vector<Vector> rows;
    std::istringstream in{std::string(text)};
    std::size_t lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto tok = detail::tokens_of(line);
        if (tok.empty()) continue;
        Vector row;
        for (const auto& t : tok) row.push_back(detail::parse_scalar_at(f, t, lineno));
        if (!rows.empty() && row.size() != rows.front().size()) throw ParseError(lineno, "ragged matrix row");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno, "empty matrix");
    if (rows.front().size() != rows.size()) throw ParseError(lineno, "matrix is not square");
    return Matrix::from_rows(f, rows);
}

inline std::string serialize_matrix(const Matrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) os << (j ? " " : "") << m(i, j);
        os << "\n";
    }
    return os.str();
}

/// Machine-readable certificate; per-step keys are step, check, expected, actual.
inline nlohmann::json certificate_to_json(const Certificate& cert) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : cert.steps()) {
        nlohmann::json j{{"step", s.description}, {"check", s.check}, {"expected", s.expected}, {"actual", s.actual}};
        if (!s.objects.empty()) {
            nlohmann::json objs = nlohmann::json::object();
            for (const auto& [name, text] : s.objects) objs[name] = text;
            j["objects"] = objs;
        }
        steps.push_back(std::move(j));
    }
    nlohmann::json out{{"title", cert.title()}, {"verdict", cert.verdict()}, {"steps", steps}};
    nlohmann::json values = nlohmann::json::object();
    for (const auto& [name, s] : cert.scalars) values[name] = s.to_string();
    for (const auto& [name, m] : cert.matrices) values[name] = m.to_string();
    out["values"] = values;
    return out;
}

}  // namespace albert
