#include "adtk/linalg.hpp"

#include "adtk/errors.hpp"

namespace adtk {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

} // namespace

Vec zero_vec(int n, const Field& f) {
    return Vec(static_cast<std::size_t>(n), Scalar::zero(f));
}

Vec add(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "vector sizes differ");
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "vector sizes differ");
    Vec out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec neg(const Vec& a) {
    Vec out(a);
    for (auto& s : out) s = -s;
    return out;
}

Vec scale(const Scalar& c, const Vec& a) {
    Vec out(a);
    for (auto& s : out) s = c * s;
    return out;
}

bool is_zero(const Vec& a) {
    for (const auto& s : a)
        if (!s.is_zero()) return false;
    return true;
}

Matrix::Matrix(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f),
      a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Scalar::zero(f)) {
    require(rows >= 0 && cols >= 0, "negative matrix dimension");
}

Matrix Matrix::identity(int n, const Field& f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shapes differ in +");
    Matrix out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require(rows_ == o.rows_ && cols_ == o.cols_, "matrix shapes differ in -");
    Matrix out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require(cols_ == o.rows_, "matrix shapes differ in *");
    Matrix out(rows_, o.cols_, field_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                out.at(i, j) += aik * o.at(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(*this);
    for (auto& s : out.a_) s = -s;
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(*this);
    for (auto& s : out.a_) s = c * s;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Vec Matrix::apply(const Vec& x) const {
    require(static_cast<int>(x.size()) == cols_, "matrix/vector size mismatch");
    Vec out = zero_vec(rows_, field_);
    for (int j = 0; j < cols_; ++j) {
        if (x[j].is_zero()) continue;
        for (int i = 0; i < rows_; ++i) out[i] += at(i, j) * x[j];
    }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    return a_ == o.a_;
}

Matrix invert(const Matrix& m) {
    require(m.rows() == m.cols(), "invert requires a square matrix");
    const int n = m.rows();
    Matrix a(m);
    Matrix inv = Matrix::identity(n, m.field());
    for (int col = 0; col < n; ++col) {
        // first-nonzero pivot, scanning rows top-down
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!a.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw SingularMatrix("matrix is singular");
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        Scalar p_inv = a.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(col, j) = p_inv * a.at(col, j);
            inv.at(col, j) = p_inv * inv.at(col, j);
        }
        for (int r = 0; r < n; ++r) {
            if (r == col) continue;
            Scalar f = a.at(r, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                a.at(r, j) = a.at(r, j) - f * a.at(col, j);
                inv.at(r, j) = inv.at(r, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

int rank(Matrix m) {
    int r = 0;
    const int rows = m.rows(), cols = m.cols();
    for (int col = 0; col < cols && r < rows; ++col) {
        int pivot = -1;
        for (int i = r; i < rows; ++i) {
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            for (int j = 0; j < cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        }
        Scalar p_inv = m.at(r, col).inverse();
        for (int j = 0; j < cols; ++j) m.at(r, j) = p_inv * m.at(r, j);
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            Scalar f = m.at(i, col);
            if (f.is_zero()) continue;
            for (int j = 0; j < cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

Vec solve(const Matrix& m, const Vec& b) {
    return invert(m).apply(b);
}

} // namespace adtk
