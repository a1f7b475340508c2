#pragma once

#include <string>
#include <vector>

#include "adtk/linalg.hpp"

namespace adtk {

/// One violated equality: the condition id (e.g. "A1.2" for the second
/// equality of the A1 chain), the basis-index witness, and both sides as
/// coordinate vectors in canonical scalar form.
struct Failure {
    std::string condition;
    std::vector<int> witness;
    std::vector<std::string> left;
    std::vector<std::string> right;

    friend bool operator==(const Failure&, const Failure&) = default;
};

/// Verdict of a checker: pass iff no failures. Failures are kept sorted
/// lexicographically by (condition, witness) so verdicts are
/// deterministic and serializable bit-for-bit.
class Report {
  public:
    bool pass() const { return failures_.empty(); }

    void add(std::string condition, std::vector<int> witness, const Vec& left, const Vec& right);
    void add_note(std::string condition, std::vector<int> witness);
    void merge(const Report& other);

    /// Sorts failures into canonical order; call once after all checks.
    void finalize();

    const std::vector<Failure>& failures() const { return failures_; }

  private:
    std::vector<Failure> failures_;
};

std::vector<std::string> vec_strings(const Vec& v);

} // namespace adtk
