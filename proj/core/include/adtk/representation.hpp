#pragma once

#include <variant>
#include <vector>

#include "adtk/algebra.hpp"

namespace adtk {

/// Representation (bimodule) of an anti-dendriform algebra: four families
/// of m-by-m matrices indexed by the A-basis, realizing l_>, r_>, l_<, r_<.
class Representation {
  public:
    Representation(int adim, int mdim, const Field& f);
    Representation(std::vector<Matrix> lsucc, std::vector<Matrix> rsucc,
                   std::vector<Matrix> lprec, std::vector<Matrix> rprec);

    int adim() const { return static_cast<int>(lsucc_.size()); }
    int mdim() const { return mdim_; }
    const Field& field() const { return field_; }

    const Matrix& lsucc(int i) const { return lsucc_[i]; }
    const Matrix& rsucc(int i) const { return rsucc_[i]; }
    const Matrix& lprec(int i) const { return lprec_[i]; }
    const Matrix& rprec(int i) const { return rprec_[i]; }
    Matrix& lsucc(int i) { return lsucc_[i]; }
    Matrix& rsucc(int i) { return rsucc_[i]; }
    Matrix& lprec(int i) { return lprec_[i]; }
    Matrix& rprec(int i) { return rprec_[i]; }

    Matrix ldot(int i) const { return lsucc_[i] + lprec_[i]; }
    Matrix rdot(int i) const { return rsucc_[i] + rprec_[i]; }

    // Operator of a general algebra element.
    Matrix lsucc(const Vec& x) const;
    Matrix rsucc(const Vec& x) const;
    Matrix lprec(const Vec& x) const;
    Matrix rprec(const Vec& x) const;
    Matrix ldot(const Vec& x) const;
    Matrix rdot(const Vec& x) const;

    bool operator==(const Representation& o) const = default;

  private:
    int mdim_;
    Field field_;
    std::vector<Matrix> lsucc_, rsucc_, lprec_, rprec_;
};

/// Bimodule of an associative algebra: left/right action families.
class AssocRepresentation {
  public:
    AssocRepresentation(std::vector<Matrix> l, std::vector<Matrix> r);

    int adim() const { return static_cast<int>(l_.size()); }
    int mdim() const { return mdim_; }
    const Field& field() const { return field_; }

    const Matrix& l(int i) const { return l_[i]; }
    const Matrix& r(int i) const { return r_[i]; }

    bool operator==(const AssocRepresentation& o) const = default;

  private:
    int mdim_;
    Field field_;
    std::vector<Matrix> l_, r_;
};

/// Verifies the operator identities R1-R4 on all basis pairs:
/// R1.1 l>(x)l>(y) = -l>(x.y)      R1.2 -l>(x.y) = -l<(x)l.(y)
/// R1.3 -l<(x)l.(y) = l<(x<y)
/// R2.1 r>(x>y) = -r>(y)r.(x)      R2.2 -r>(y)r.(x) = -r<(x.y)
/// R2.3 -r<(x.y) = r<(y)r<(x)
/// R3.1 l>(x)r>(y) = -r>(y)l.(x)   R3.2 -r>(y)l.(x) = -l<(x)r.(y)
/// R3.3 -l<(x)r.(y) = r<(y)l<(x)
/// R4.1 l<(x>y) = l>(x)l<(y)       R4.2 r<(y)r>(x) = r>(x<y)
/// R4.3 r<(y)l>(x) = l>(x)r<(y)
Report check_representation(const AntiDendAlgebra& a, const Representation& v);

/// Associative bimodule laws, ids AR.1-AR.3.
Report check_assoc_representation(const AssocAlgebra& a, const AssocRepresentation& v);

/// The regular representation (multiplication operators on A itself).
/// Requires a valid algebra; checked internally.
Representation regular_representation(const AntiDendAlgebra& a);

enum class RepVariant { assoc_a, assoc_b, dual_c, assoc_dual_d, assoc_dual_e };

using DerivedRep = std::variant<Representation, AssocRepresentation>;

/// Derived representations of a given one:
///   assoc_a       (V, -l>, -r<)                      on (A, .)
///   assoc_b       (V, l> + l<, r> + r<)              on (A, .)
///   dual_c        (V*, -(r<* + r>*), l<*, r>*, -(l<* + l>*))
///   assoc_dual_d  (V*, -r<*, -l>*)                   on (A, .)
///   assoc_dual_e  (V*, -(r<* + r>*), -(l<* + l>*))   on (A, .)
/// Dual maps are realized as matrix transposes.
DerivedRep derived_representation(const Representation& v, RepVariant variant);

} // namespace adtk
