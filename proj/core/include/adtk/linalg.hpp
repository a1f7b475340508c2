#pragma once

#include <vector>

#include "adtk/scalar.hpp"

namespace adtk {

/// Coordinate vector relative to a fixed basis.
using Vec = std::vector<Scalar>;

Vec zero_vec(int n, const Field& f);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec neg(const Vec& a);
Vec scale(const Scalar& c, const Vec& a);
bool is_zero(const Vec& a);

/// Dense matrix of exact scalars. Column convention: the image of the
/// j-th source basis vector is sum_i at(i,j) * (i-th target basis vector).
class Matrix {
  public:
    Matrix(int rows, int cols, const Field& f);

    static Matrix identity(int n, const Field& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;

    Vec apply(const Vec& x) const;

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

  private:
    int rows_;
    int cols_;
    Field field_;
    std::vector<Scalar> a_;
};

/// Exact inverse by Gauss-Jordan elimination with first-nonzero pivoting.
/// Throws SingularMatrix when the determinant vanishes.
Matrix invert(const Matrix& m);

/// Exact rank by row elimination (the input is taken by value).
int rank(Matrix m);

/// Solves m * x = b for square invertible m.
Vec solve(const Matrix& m, const Vec& b);

} // namespace adtk
