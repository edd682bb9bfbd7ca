#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bilpair/exactlin/field.hpp"

namespace bilpair {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& f, std::size_t n);
Vector unit_vector(const Field& f, std::size_t n, std::size_t i);
bool is_zero_vector(const Vector& v);

// Dense row-major matrix over one field.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
    Matrix(std::size_t rows, std::size_t cols, const Field& field);

    static Matrix identity(std::size_t n, const Field& field);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, const Field& field);
    static Matrix from_ints(const std::vector<std::vector<long long>>& rows, const Field& field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    void set_row(std::size_t i, const Vector& v);
    void append_row(const Vector& v);

    Matrix transpose() const;
    Vector apply(const Vector& v) const;  // M v

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
    // Lexicographic order on (rows, cols, entries).
    friend bool operator<(const Matrix& a, const Matrix& b);

    std::string to_string() const;  // "[[1,0],[0,1]]"
    std::size_t hash() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    Field field_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Matrix inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

}  // namespace bilpair
