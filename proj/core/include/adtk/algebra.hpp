#pragma once

#include "adtk/report.hpp"
#include "adtk/tensor.hpp"

namespace adtk {

/// Largest supported algebra dimension (doubles of dimension-16 inputs).
inline constexpr int kMaxDim = 32;

/// Anti-dendriform algebra given by structure constants:
/// e_i > e_j = sum_k succ(i,j,k) e_k and e_i < e_j = sum_k prec(i,j,k) e_k.
/// The sum product x.y = x>y + x<y is the associated associative product.
class AntiDendAlgebra {
  public:
    AntiDendAlgebra(Tensor3 succ, Tensor3 prec);

    static AntiDendAlgebra zero(int n, const Field& f);

    int dim() const { return succ_.dim(); }
    const Field& field() const { return succ_.field(); }
    const Tensor3& succ() const { return succ_; }
    const Tensor3& prec() const { return prec_; }

    Scalar succ_c(int i, int j, int k) const { return succ_.at(i, j, k); }
    Scalar prec_c(int i, int j, int k) const { return prec_.at(i, j, k); }
    Scalar dot_c(int i, int j, int k) const { return succ_.at(i, j, k) + prec_.at(i, j, k); }

    Vec op_succ(const Vec& x, const Vec& y) const;
    Vec op_prec(const Vec& x, const Vec& y) const;
    Vec op_dot(const Vec& x, const Vec& y) const;

    // Multiplication operators of basis vectors, as matrices:
    // lsucc(i) = L_>(e_i), rsucc(i)x = x > e_i, etc.
    Matrix lsucc(int i) const;
    Matrix rsucc(int i) const;
    Matrix lprec(int i) const;
    Matrix rprec(int i) const;
    Matrix ldot(int i) const;
    Matrix rdot(int i) const;

    // Operators of a general element (linear combination over the basis).
    Matrix lsucc(const Vec& x) const;
    Matrix rsucc(const Vec& x) const;
    Matrix lprec(const Vec& x) const;
    Matrix rprec(const Vec& x) const;
    Matrix ldot(const Vec& x) const;
    Matrix rdot(const Vec& x) const;

    bool operator==(const AntiDendAlgebra& o) const {
        return succ_ == o.succ_ && prec_ == o.prec_;
    }

  private:
    Tensor3 succ_;
    Tensor3 prec_;
};

/// Associative algebra by structure constants.
class AssocAlgebra {
  public:
    explicit AssocAlgebra(Tensor3 dot);

    int dim() const { return dot_.dim(); }
    const Field& field() const { return dot_.field(); }
    const Tensor3& dot() const { return dot_; }

    Vec op_dot(const Vec& x, const Vec& y) const;
    Matrix l(int i) const;
    Matrix r(int i) const;

    bool operator==(const AssocAlgebra& o) const { return dot_ == o.dot_; }

  private:
    Tensor3 dot_;
};

/// Verifies the defining product chains on every basis triple:
/// A1.1  x>(y>z) = -(x.y)>z
/// A1.2  -(x.y)>z = -x<(y.z)
/// A1.3  -x<(y.z) = (x<y)<z
/// A2    (x>y)<z = x>(y<z)
Report check_anti_dendriform(const AntiDendAlgebra& a);

/// Associativity on every basis triple (condition id "ASSOC").
Report check_associative(const AssocAlgebra& a);

/// The associated associative algebra: c_dot = c_succ + c_prec.
AssocAlgebra associated_associative(const AntiDendAlgebra& a);

/// Componentwise direct sum of two algebras over the same field.
AntiDendAlgebra direct_sum(const AntiDendAlgebra& a, const AntiDendAlgebra& b);

enum class HomScope { both, dot };

/// Checks f(x o y) = f(x) o f(y) on all basis pairs, for o in {>, <}
/// (HomScope::both) or for the sum product only (HomScope::dot).
/// Condition ids: HOM.succ, HOM.prec, HOM.dot.
Report check_homomorphism(const Matrix& f, const AntiDendAlgebra& src,
                          const AntiDendAlgebra& dst, HomScope scope);

Report check_homomorphism_assoc(const Matrix& f, const AssocAlgebra& src,
                                const AssocAlgebra& dst);

} // namespace adtk
