#ifndef BSF_JSON_IO_HPP
#define BSF_JSON_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "bsf/blockpencil.hpp"
#include "bsf/congruence.hpp"
#include "bsf/families.hpp"
#include "bsf/matpoly.hpp"

namespace bsf {

using nlohmann::json;

// Entry encodings: rationals as "p/q" strings, complex numbers as [re, im].
inline json entry_to_json(const Rat& x) { return rat_to_string(x); }
inline json entry_to_json(const Cplx& x) { return json::array({x.real(), x.imag()}); }

inline void entry_from_json(const json& j, Rat& out) {
    if (j.is_string())
        out = parse_rat(j.get<std::string>());
    else if (j.is_number_integer())
        out = Rat(j.get<long>());
    else
        throw std::invalid_argument("expected a rational entry (\"p/q\" string)");
}
inline void entry_from_json(const json& j, Cplx& out) {
    if (j.is_array() && j.size() == 2)
        out = Cplx(j[0].get<double>(), j[1].get<double>());
    else if (j.is_number())
        out = Cplx(j.get<double>(), 0.0);
    else
        throw std::invalid_argument("expected a complex entry ([re, im] pair)");
}

// Row-major flat coefficient encoding used by the polynomial schema.
template <class T>
json matrix_to_flat_json(const Matrix<T>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows.push_back(entry_to_json(m(i, j)));
    return rows;
}

template <class T>
Matrix<T> matrix_from_flat_json(const json& j, int rows, int cols) {
    if (!j.is_array() || int(j.size()) != rows * cols)
        throw std::invalid_argument("coefficient entry count mismatch");
    Matrix<T> m(rows, cols);
    int idx = 0;
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) entry_from_json(j[size_t(idx++)], m(i, c));
    return m;
}

// 2D encoding used by the pencil schema.
template <class T>
json matrix_to_json(const Matrix<T>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(entry_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

template <class T>
Matrix<T> matrix_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a 2D array");
    int rows = int(j.size());
    int cols = rows == 0 ? 0 : int(j[0].size());
    Matrix<T> m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (int(j[size_t(i)].size()) != cols)
            throw std::invalid_argument("ragged 2D array");
        for (int c = 0; c < cols; ++c) entry_from_json(j[size_t(i)][size_t(c)], m(i, c));
    }
    return m;
}

// {"n", "k", "field", "coeffs": [A_0, ..., A_k]} with row-major coefficients
template <class T>
json poly_to_json(const MatrixPolynomial<T>& p) {
    json j;
    j["n"] = p.n();
    j["k"] = p.grade();
    j["field"] = field<T>::name();
    json coeffs = json::array();
    for (int i = 0; i <= p.grade(); ++i) coeffs.push_back(matrix_to_flat_json(p.coeff(i)));
    j["coeffs"] = coeffs;
    return j;
}

template <class T>
MatrixPolynomial<T> poly_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("k") || !j.contains("coeffs"))
        throw std::invalid_argument("polynomial JSON needs n, k and coeffs");
    int n = j["n"].get<int>(), k = j["k"].get<int>();
    if (j.contains("field") && j["field"].get<std::string>() != field<T>::name())
        throw std::invalid_argument("polynomial field does not match the requested scalar type");
    if (int(j["coeffs"].size()) != k + 1)
        throw std::invalid_argument("coefficient list must have k+1 entries");
    std::vector<Matrix<T>> coeffs;
    for (int i = 0; i <= k; ++i)
        coeffs.push_back(matrix_from_flat_json<T>(j["coeffs"][size_t(i)], n, n));
    return MatrixPolynomial<T>(std::move(coeffs));
}

inline bool poly_json_is_rational(const json& j) {
    return !j.contains("field") || j["field"].get<std::string>() == field<Rat>::name();
}

// {"n", "rows", "cols", "lambda": [[..]], "const": [[..]]}
template <class T>
json pencil_to_json(const BlockPencil<T>& p) {
    json j;
    j["n"] = p.n();
    j["rows"] = p.block_rows();
    j["cols"] = p.block_cols();
    j["lambda"] = matrix_to_json(p.lambda_part());
    j["const"] = matrix_to_json(p.const_part());
    return j;
}

template <class T>
BlockPencil<T> pencil_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("lambda") || !j.contains("const"))
        throw std::invalid_argument("pencil JSON needs n, lambda and const");
    int n = j["n"].get<int>();
    Matrix<T> lam = matrix_from_json<T>(j["lambda"]);
    Matrix<T> cst = matrix_from_json<T>(j["const"]);
    BlockPencil<T> p(n, std::move(lam), std::move(cst));
    if (j.contains("rows") && j["rows"].get<int>() != p.block_rows())
        throw std::invalid_argument("pencil row count mismatch");
    if (j.contains("cols") && j["cols"].get<int>() != p.block_cols())
        throw std::invalid_argument("pencil column count mismatch");
    return p;
}

template <class T>
json form_to_json(const FamilyForm<T>& f) {
    json j;
    j["tag"] = tag_name(f.tag);
    j["n"] = f.n;
    j["k"] = f.k;
    j["B"] = matrix_to_json(f.b);
    j["C"] = matrix_to_json(f.c);
    j["D"] = matrix_to_json(f.d);
    j["E"] = matrix_to_json(f.e);
    return j;
}

inline FamilyTag tag_from_string(const std::string& s) {
    if (s == "O1") return FamilyTag::O1;
    if (s == "O2") return FamilyTag::O2;
    if (s == "E1") return FamilyTag::E1;
    if (s == "E2") return FamilyTag::E2;
    throw std::invalid_argument("unknown family tag: " + s);
}

template <class T>
FamilyForm<T> form_from_json(const json& j) {
    FamilyForm<T> f;
    f.tag = tag_from_string(j.at("tag").get<std::string>());
    f.n = j.at("n").get<int>();
    f.k = j.at("k").get<int>();
    f.b = matrix_from_json<T>(j.at("B"));
    f.c = matrix_from_json<T>(j.at("C"));
    f.d = matrix_from_json<T>(j.at("D"));
    f.e = matrix_from_json<T>(j.at("E"));
    f.validate();
    return f;
}

template <class T>
json certificate_to_json(const CongruenceCertificate<T>& cert) {
    json j;
    j["c"] = cert.c.c;
    j["tag"] = tag_name(cert.form.tag);
    j["params"] = form_to_json(cert.form);
    j["verified"] = cert.verified;
    return j;
}

}  // namespace bsf

#endif
