#pragma once

#include <optional>
#include <vector>

#include "adtk/linalg.hpp"

namespace adtk {

/// Element of A (x) A as a dense n-by-n coefficient array:
/// sum_{i,j} at(i,j) e_i (x) e_j. Also used for r-matrices.
class Tensor2 {
  public:
    Tensor2(int n, const Field& f);

    int dim() const { return n_; }
    const Field& field() const { return field_; }

    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2 operator-() const;
    Tensor2 scaled(const Scalar& c) const;

    bool is_zero() const;
    bool operator==(const Tensor2& o) const;
    bool operator!=(const Tensor2& o) const { return !(*this == o); }

  private:
    int n_;
    Field field_;
    std::vector<Scalar> a_;
};

/// Element of A (x) A (x) A as a dense cubical array.
class Tensor3 {
  public:
    Tensor3(int n, const Field& f);

    int dim() const { return n_; }
    const Field& field() const { return field_; }

    Scalar& at(int i, int j, int k) {
        return a_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }
    const Scalar& at(int i, int j, int k) const {
        return a_[(static_cast<std::size_t>(i) * n_ + j) * n_ + k];
    }

    Tensor3 operator+(const Tensor3& o) const;
    Tensor3 operator-(const Tensor3& o) const;
    Tensor3 operator-() const;
    Tensor3 scaled(const Scalar& c) const;

    bool is_zero() const;
    bool operator==(const Tensor3& o) const;
    bool operator!=(const Tensor3& o) const { return !(*this == o); }

  private:
    int n_;
    Field field_;
    std::vector<Scalar> a_;
};

/// Tensor flip: tau(r)[i][j] = r[j][i].
Tensor2 tau(const Tensor2& r);

/// Slot operator: an absent matrix means the identity on that leg.
using Slot = std::optional<Matrix>;

/// (M1 (x) M2) t, contracting each leg.
Tensor2 act2(const Slot& m1, const Slot& m2, const Tensor2& t);

/// (M1 (x) M2 (x) M3) t, contracting each leg.
Tensor3 act3(const Slot& m1, const Slot& m2, const Slot& m3, const Tensor3& t);

} // namespace adtk
