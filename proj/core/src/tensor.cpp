#include "adtk/tensor.hpp"

#include "adtk/errors.hpp"

namespace adtk {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

void require_slot(const Slot& m, int n) {
    if (m) {
        require(m->rows() == n && m->cols() == n, "slot operator shape mismatch");
    }
}

} // namespace

Tensor2::Tensor2(int n, const Field& f)
    : n_(n), field_(f),
      a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), Scalar::zero(f)) {
    require(n >= 0, "negative tensor dimension");
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    require(n_ == o.n_, "tensor dims differ in +");
    Tensor2 out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
    require(n_ == o.n_, "tensor dims differ in -");
    Tensor2 out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

Tensor2 Tensor2::operator-() const {
    Tensor2 out(*this);
    for (auto& s : out.a_) s = -s;
    return out;
}

Tensor2 Tensor2::scaled(const Scalar& c) const {
    Tensor2 out(*this);
    for (auto& s : out.a_) s = c * s;
    return out;
}

bool Tensor2::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

bool Tensor2::operator==(const Tensor2& o) const {
    return n_ == o.n_ && field_ == o.field_ && a_ == o.a_;
}

Tensor3::Tensor3(int n, const Field& f)
    : n_(n), field_(f),
      a_(static_cast<std::size_t>(n) * n * n, Scalar::zero(f)) {
    require(n >= 0, "negative tensor dimension");
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
    require(n_ == o.n_, "tensor dims differ in +");
    Tensor3 out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
    require(n_ == o.n_, "tensor dims differ in -");
    Tensor3 out(*this);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

Tensor3 Tensor3::operator-() const {
    Tensor3 out(*this);
    for (auto& s : out.a_) s = -s;
    return out;
}

Tensor3 Tensor3::scaled(const Scalar& c) const {
    Tensor3 out(*this);
    for (auto& s : out.a_) s = c * s;
    return out;
}

bool Tensor3::is_zero() const {
    for (const auto& s : a_)
        if (!s.is_zero()) return false;
    return true;
}

bool Tensor3::operator==(const Tensor3& o) const {
    return n_ == o.n_ && field_ == o.field_ && a_ == o.a_;
}

Tensor2 tau(const Tensor2& r) {
    Tensor2 out(r.dim(), r.field());
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j) out.at(i, j) = r.at(j, i);
    return out;
}

Tensor2 act2(const Slot& m1, const Slot& m2, const Tensor2& t) {
    const int n = t.dim();
    require_slot(m1, n);
    require_slot(m2, n);
    Tensor2 mid(n, t.field());
    // leg 1
    if (m1) {
        for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d) {
                const Scalar& v = t.at(c, d);
                if (v.is_zero()) continue;
                for (int a = 0; a < n; ++a) {
                    const Scalar& m = m1->at(a, c);
                    if (!m.is_zero()) mid.at(a, d) += m * v;
                }
            }
    } else {
        mid = t;
    }
    if (!m2) return mid;
    Tensor2 out(n, t.field());
    for (int a = 0; a < n; ++a)
        for (int d = 0; d < n; ++d) {
            const Scalar& v = mid.at(a, d);
            if (v.is_zero()) continue;
            for (int b = 0; b < n; ++b) {
                const Scalar& m = m2->at(b, d);
                if (!m.is_zero()) out.at(a, b) += m * v;
            }
        }
    return out;
}

Tensor3 act3(const Slot& m1, const Slot& m2, const Slot& m3, const Tensor3& t) {
    const int n = t.dim();
    require_slot(m1, n);
    require_slot(m2, n);
    require_slot(m3, n);
    Tensor3 cur(t);
    auto contract_leg = [n](const Matrix& m, const Tensor3& src, int leg) {
        Tensor3 out(n, src.field());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    const Scalar& v = src.at(i, j, k);
                    if (v.is_zero()) continue;
                    int idx = leg == 0 ? i : (leg == 1 ? j : k);
                    for (int a = 0; a < n; ++a) {
                        const Scalar& c = m.at(a, idx);
                        if (c.is_zero()) continue;
                        if (leg == 0)
                            out.at(a, j, k) += c * v;
                        else if (leg == 1)
                            out.at(i, a, k) += c * v;
                        else
                            out.at(i, j, a) += c * v;
                    }
                }
        return out;
    };
    if (m1) cur = contract_leg(*m1, cur, 0);
    if (m2) cur = contract_leg(*m2, cur, 1);
    if (m3) cur = contract_leg(*m3, cur, 2);
    return cur;
}

} // namespace adtk
