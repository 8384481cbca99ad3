#pragma once

#include "lielimits/rational.hpp"

#include <cstddef>
#include <vector>

namespace lielimits::linalg {

// Dense row-major matrix of exact rationals. Rows may be ragged on input;
// every routine pads short rows with zeros up to `cols`.
struct Matrix {
    std::size_t cols = 0;
    std::vector<std::vector<Rational>> rows;

    Matrix() = default;
    explicit Matrix(std::size_t c) : cols(c) {}
    Matrix(std::size_t r, std::size_t c) : cols(c), rows(r, std::vector<Rational>(c)) {}

    std::size_t row_count() const { return rows.size(); }
    void add_row(std::vector<Rational> row);
};

// Reduced row echelon form; zero rows are dropped. `pivots` receives the
// pivot column of each returned row.
Matrix rref(Matrix m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

// Inverse of a square matrix; throws InternalError when singular.
Matrix inverse(const Matrix& m);

// Whether `v` lies in the row space of `m`.
bool in_row_space(const Matrix& m, const std::vector<Rational>& v);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace lielimits::linalg
