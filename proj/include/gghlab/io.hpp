/*
 * io.hpp
 *
 * JSON readers and writers for the external file formats: module
 * files, Dirac cohomology summaries, classification data, and run
 * reports.  Everything is exact text: matrix entries are scalar
 * literals, rationals are fraction strings, and output key order is
 * canonical so files diff cleanly.
 *
 * Format errors throw FileError with the offending path and, for
 * syntax errors, the 1-based line and column.
 */

#pragma once

#include "gghlab/dirac_cohomology.hpp"
#include "gghlab/langlands.hpp"
#include "gghlab/report.hpp"
#include "gghlab/reps.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gghlab {
namespace io {

using nlohmann::json;

struct FileError : std::runtime_error {
    explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

/* ------------------------------------------------------------------ */
/* primitives                                                          */
/* ------------------------------------------------------------------ */

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw FileError(path + ": cannot open file for writing");
    out << text;
    if (!out) throw FileError(path + ": write failed");
}

/* 1-based line and column of a byte offset. */
inline std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                       std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

inline json parse_json_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        /* parse_error.byte is 1-based and points one past the error */
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        const auto [line, col] = line_column(text, byte);
        throw FileError(path + ":" + std::to_string(line) + ":" + std::to_string(col) +
                        ": JSON syntax error");
    }
}

inline std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

inline std::string rat_text(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/* Accepts fraction strings like "3/2" or "-1"; 'k' is not a number. */
inline Rat rat_from_text(const std::string& text, const std::string& context) {
    if (text.find('k') != std::string::npos)
        throw FileError(context + ": expected a rational constant, got \"" + text + "\"");
    try {
        return Scalar::parse(1, text).eval(Rat(0)).rational_value();
    } catch (const std::exception& e) {
        throw FileError(context + ": " + e.what());
    }
}

inline std::string entry_text(const Cyclotomic& c) { return Scalar(c).to_string(); }

/* ------------------------------------------------------------------ */
/* json field access with named errors                                 */
/* ------------------------------------------------------------------ */

inline const json& require_field(const json& j, const std::string& key,
                                 const std::string& context) {
    if (!j.is_object() || !j.contains(key))
        throw FileError(context + ": missing field \"" + key + "\"");
    return j.at(key);
}

inline unsigned require_unsigned(const json& j, const std::string& key,
                                 const std::string& context) {
    const json& v = require_field(j, key, context);
    if (!v.is_number_unsigned())
        throw FileError(context + ": field \"" + key + "\" must be a nonnegative integer");
    return v.get<unsigned>();
}

inline std::string require_string(const json& j, const std::string& key,
                                  const std::string& context) {
    const json& v = require_field(j, key, context);
    if (!v.is_string())
        throw FileError(context + ": field \"" + key + "\" must be a string");
    return v.get<std::string>();
}

/* ------------------------------------------------------------------ */
/* matrices                                                            */
/* ------------------------------------------------------------------ */

inline json matrix_to_json(const Matrix& M) {
    json rows = json::array();
    for (unsigned r = 0; r < M.rows(); ++r) {
        json row = json::array();
        for (unsigned c = 0; c < M.cols(); ++c) row.push_back(entry_text(M.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j, unsigned L, const Rat& kappa, unsigned dim,
                               const std::string& context) {
    if (!j.is_array() || j.size() != dim)
        throw FileError(context + ": expected " + std::to_string(dim) + " rows");
    Matrix M(L, dim, dim);
    for (unsigned r = 0; r < dim; ++r) {
        const json& row = j.at(r);
        if (!row.is_array() || row.size() != dim)
            throw FileError(context + ", row " + std::to_string(r) + ": expected " +
                            std::to_string(dim) + " entries");
        for (unsigned c = 0; c < dim; ++c) {
            const json& cell = row.at(c);
            if (!cell.is_string())
                throw FileError(context + ", row " + std::to_string(r) + ", col " +
                                std::to_string(c) + ": entries are scalar literal strings");
            try {
                M.at(r, c) = Scalar::parse(L, cell.get<std::string>()).eval(kappa);
            } catch (const std::exception& e) {
                throw FileError(context + ", row " + std::to_string(r) + ", col " +
                                std::to_string(c) + ": " + e.what());
            }
        }
    }
    return M;
}

/* ------------------------------------------------------------------ */
/* module files                                                        */
/* ------------------------------------------------------------------ */

/*
 * Layout: {"m","n","L","kappa","dim","s","g","z"} with matrices as
 * row arrays of scalar literals.  "pi" (the available 1-based simple
 * reflections) appears only when the module is parabolic; without it
 * "s" must list one matrix per simple reflection of the full algebra.
 */
inline json module_to_json(const HModule& X) {
    json j;
    j["m"] = X.m;
    j["n"] = X.n;
    j["L"] = X.L;
    j["kappa"] = rat_text(X.kappa);
    j["dim"] = X.dim;
    if (X.pi != full_simple_set(X.n)) j["pi"] = X.pi;
    json s = json::array();
    for (unsigned k : X.pi) s.push_back(matrix_to_json(X.s.at(k)));
    j["s"] = std::move(s);
    json g = json::array(), z = json::array();
    for (const Matrix& M : X.g) g.push_back(matrix_to_json(M));
    for (const Matrix& M : X.z) z.push_back(matrix_to_json(M));
    j["g"] = std::move(g);
    j["z"] = std::move(z);
    return j;
}

inline HModule module_from_json(const json& j, const std::string& context) {
    const unsigned m = require_unsigned(j, "m", context);
    const unsigned n = require_unsigned(j, "n", context);
    const unsigned L = require_unsigned(j, "L", context);
    const unsigned dim = require_unsigned(j, "dim", context);
    const Rat kappa = rat_from_text(require_string(j, "kappa", context), context + ": kappa");
    if (m == 0 || L == 0 || L % m != 0)
        throw FileError(context + ": need m >= 1 and m | L");

    HModule X = module_shell(m, n, L, kappa, dim);

    const json& s = require_field(j, "s", context);
    if (!s.is_array()) throw FileError(context + ": field \"s\" must be an array");
    if (j.contains("pi")) {
        const json& pj = j.at("pi");
        if (!pj.is_array())
            throw FileError(context + ": field \"pi\" must be an array of simple indices");
        std::vector<unsigned> pi;
        for (const json& v : pj) {
            if (!v.is_number_unsigned())
                throw FileError(context + ": field \"pi\" must hold nonnegative integers");
            pi.push_back(v.get<unsigned>());
        }
        for (unsigned k : pi)
            if (k < 1 || k >= n)
                throw FileError(context + ": pi entry " + std::to_string(k) +
                                " outside [1, n-1]");
        if (!std::is_sorted(pi.begin(), pi.end()) ||
            std::adjacent_find(pi.begin(), pi.end()) != pi.end())
            throw FileError(context + ": pi must be strictly increasing");
        X.pi = std::move(pi);
    } else if (n >= 2 && s.size() == std::size_t(n - 1)) {
        X.pi = full_simple_set(n);
    } else if (s.empty()) {
        X.pi = {};
    } else {
        throw FileError(context +
                        ": field \"pi\" is required when \"s\" does not cover all " +
                        std::to_string(n - 1) + " simple reflections");
    }
    if (s.size() != X.pi.size())
        throw FileError(context + ": expected " + std::to_string(X.pi.size()) +
                        " matrices in \"s\"");
    for (std::size_t t = 0; t < X.pi.size(); ++t)
        X.s[X.pi[t]] =
            matrix_from_json(s.at(t), L, kappa, dim, context + ": s[" + std::to_string(t) + "]");

    const json& g = require_field(j, "g", context);
    const json& z = require_field(j, "z", context);
    if (!g.is_array() || g.size() != n)
        throw FileError(context + ": field \"g\" must hold " + std::to_string(n) + " matrices");
    if (!z.is_array() || z.size() != n)
        throw FileError(context + ": field \"z\" must hold " + std::to_string(n) + " matrices");
    for (unsigned i = 0; i < n; ++i) {
        X.g[i] = matrix_from_json(g.at(i), L, kappa, dim, context + ": g[" + std::to_string(i) + "]");
        X.z[i] = matrix_from_json(z.at(i), L, kappa, dim, context + ": z[" + std::to_string(i) + "]");
    }
    return X;
}

inline HModule read_module(const std::string& path) {
    return module_from_json(parse_json_file(path), path);
}

inline void write_module(const HModule& X, const std::string& path) {
    write_text_file(path, dump_json(module_to_json(X)));
}

/* ------------------------------------------------------------------ */
/* dirac cohomology summaries                                          */
/* ------------------------------------------------------------------ */

inline json dirac_cohomology_to_json(const DiracCohomology& dc, const HModule& X) {
    json j;
    j["dimension"] = dc.dim;
    json chars = json::array();
    for (const auto& t : dc.torus_characters) chars.push_back(t);
    j["torus_characters"] = std::move(chars);
    j["kappa"] = rat_text(X.kappa);
    j["block"] = block_label(X);
    return j;
}

inline void write_dirac_cohomology(const DiracCohomology& dc, const HModule& X,
                                   const std::string& path) {
    write_text_file(path, dump_json(dirac_cohomology_to_json(dc, X)));
}

/* ------------------------------------------------------------------ */
/* classification data                                                 */
/* ------------------------------------------------------------------ */

/*
 * The tempered factor is stored as its own module file; the
 * classification record references it by path.
 */
inline json classification_to_json(const LanglandsDatum& datum,
                                   const std::vector<unsigned>& block,
                                   const std::string& factor_path) {
    json j;
    j["block"] = block;
    j["P"] = datum.P;
    json nu = json::array();
    for (const Rat& v : datum.nu) nu.push_back(rat_text(v));
    j["nu"] = std::move(nu);
    j["tempered_factor"] = factor_path;
    j["verified_unique"] = datum.verified_unique;
    return j;
}

inline void write_classification(const LanglandsDatum& datum, const std::vector<unsigned>& block,
                                 const std::string& factor_path, const std::string& path) {
    write_module(datum.tempered_factor, factor_path);
    write_text_file(path, dump_json(classification_to_json(datum, block, factor_path)));
}

/* ------------------------------------------------------------------ */
/* run reports                                                         */
/* ------------------------------------------------------------------ */

inline void write_report(const Report& rep, const std::string& path) {
    write_text_file(path, dump_json(rep.to_json()));
}

} // namespace io
} // namespace gghlab
