#include "adtk/representation.hpp"

#include "adtk/errors.hpp"

namespace adtk {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

void check_family(const std::vector<Matrix>& f, int mdim, const Field& field, const char* name) {
    for (const auto& m : f) {
        if (m.rows() != mdim || m.cols() != mdim)
            throw DimensionMismatch(std::string("representation family ") + name + " not m-by-m");
        if (m.field() != field)
            throw FieldMismatch(std::string("representation family ") + name + " field mismatch");
    }
}

Matrix combine_family(const std::vector<Matrix>& f, const Vec& x, int mdim, const Field& field) {
    require(x.size() == f.size(), "element size mismatch");
    Matrix out(mdim, mdim, field);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (x[i].is_zero()) continue;
        out = out + f[i].scaled(x[i]);
    }
    return out;
}

} // namespace

Representation::Representation(int adim, int mdim, const Field& f)
    : mdim_(mdim), field_(f),
      lsucc_(adim, Matrix(mdim, mdim, f)),
      rsucc_(adim, Matrix(mdim, mdim, f)),
      lprec_(adim, Matrix(mdim, mdim, f)),
      rprec_(adim, Matrix(mdim, mdim, f)) {}

Representation::Representation(std::vector<Matrix> lsucc, std::vector<Matrix> rsucc,
                               std::vector<Matrix> lprec, std::vector<Matrix> rprec)
    : mdim_(lsucc.empty() ? 0 : lsucc.front().rows()),
      field_(lsucc.empty() ? Field::rationals() : lsucc.front().field()),
      lsucc_(std::move(lsucc)), rsucc_(std::move(rsucc)),
      lprec_(std::move(lprec)), rprec_(std::move(rprec)) {
    require(!lsucc_.empty(), "empty representation");
    require(lsucc_.size() == rsucc_.size() && lsucc_.size() == lprec_.size() &&
                lsucc_.size() == rprec_.size(),
            "representation families disagree on algebra dimension");
    check_family(lsucc_, mdim_, field_, "lsucc");
    check_family(rsucc_, mdim_, field_, "rsucc");
    check_family(lprec_, mdim_, field_, "lprec");
    check_family(rprec_, mdim_, field_, "rprec");
}

Matrix Representation::lsucc(const Vec& x) const { return combine_family(lsucc_, x, mdim_, field_); }
Matrix Representation::rsucc(const Vec& x) const { return combine_family(rsucc_, x, mdim_, field_); }
Matrix Representation::lprec(const Vec& x) const { return combine_family(lprec_, x, mdim_, field_); }
Matrix Representation::rprec(const Vec& x) const { return combine_family(rprec_, x, mdim_, field_); }
Matrix Representation::ldot(const Vec& x) const { return lsucc(x) + lprec(x); }
Matrix Representation::rdot(const Vec& x) const { return rsucc(x) + rprec(x); }

AssocRepresentation::AssocRepresentation(std::vector<Matrix> l, std::vector<Matrix> r)
    : mdim_(l.empty() ? 0 : l.front().rows()),
      field_(l.empty() ? Field::rationals() : l.front().field()),
      l_(std::move(l)), r_(std::move(r)) {
    require(!l_.empty() && l_.size() == r_.size(), "bimodule families disagree");
    check_family(l_, mdim_, field_, "l");
    check_family(r_, mdim_, field_, "r");
}

namespace {

// Flattens an m-by-m matrix equality failure into the report.
void expect_equal(Report& rep, const char* id, std::vector<int> witness,
                  const Matrix& l, const Matrix& r) {
    if (l == r) return;
    Vec lv, rv;
    for (int a = 0; a < l.rows(); ++a)
        for (int b = 0; b < l.cols(); ++b) {
            lv.push_back(l.at(a, b));
            rv.push_back(r.at(a, b));
        }
    rep.add(id, std::move(witness), lv, rv);
}

} // namespace

Report check_representation(const AntiDendAlgebra& a, const Representation& v) {
    if (v.adim() != a.dim()) throw DimensionMismatch("representation indexed by wrong algebra dimension");
    if (v.field() != a.field()) throw FieldMismatch("representation field mismatch");
    const int n = a.dim();
    Report rep;
    auto lift = [&](const Vec& prod, auto&& family) {
        Matrix out(v.mdim(), v.mdim(), v.field());
        for (int k = 0; k < n; ++k) {
            if (prod[k].is_zero()) continue;
            out = out + family(k).scaled(prod[k]);
        }
        return out;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec ij_succ = zero_vec(n, a.field());
            Vec ij_prec = zero_vec(n, a.field());
            for (int k = 0; k < n; ++k) {
                ij_succ[k] = a.succ_c(i, j, k);
                ij_prec[k] = a.prec_c(i, j, k);
            }
            Vec ij_dot = add(ij_succ, ij_prec);

            auto lsucc_of = [&](int k) { return v.lsucc(k); };
            auto lprec_of = [&](int k) { return v.lprec(k); };
            auto rsucc_of = [&](int k) { return v.rsucc(k); };
            auto rprec_of = [&](int k) { return v.rprec(k); };

            // R1: l>(x)l>(y) = -l>(x.y) = -l<(x)l.(y) = l<(x<y)
            Matrix t1 = v.lsucc(i) * v.lsucc(j);
            Matrix t2 = -lift(ij_dot, lsucc_of);
            Matrix t3 = -(v.lprec(i) * v.ldot(j));
            Matrix t4 = lift(ij_prec, lprec_of);
            expect_equal(rep, "R1.1", {i, j}, t1, t2);
            expect_equal(rep, "R1.2", {i, j}, t2, t3);
            expect_equal(rep, "R1.3", {i, j}, t3, t4);

            // R2: r>(x>y) = -r>(y)r.(x) = -r<(x.y) = r<(y)r<(x)
            t1 = lift(ij_succ, rsucc_of);
            t2 = -(v.rsucc(j) * v.rdot(i));
            t3 = -lift(ij_dot, rprec_of);
            t4 = v.rprec(j) * v.rprec(i);
            expect_equal(rep, "R2.1", {i, j}, t1, t2);
            expect_equal(rep, "R2.2", {i, j}, t2, t3);
            expect_equal(rep, "R2.3", {i, j}, t3, t4);

            // R3: l>(x)r>(y) = -r>(y)l.(x) = -l<(x)r.(y) = r<(y)l<(x)
            t1 = v.lsucc(i) * v.rsucc(j);
            t2 = -(v.rsucc(j) * v.ldot(i));
            t3 = -(v.lprec(i) * v.rdot(j));
            t4 = v.rprec(j) * v.lprec(i);
            expect_equal(rep, "R3.1", {i, j}, t1, t2);
            expect_equal(rep, "R3.2", {i, j}, t2, t3);
            expect_equal(rep, "R3.3", {i, j}, t3, t4);

            // R4: l<(x>y) = l>(x)l<(y); r<(y)r>(x) = r>(x<y); r<(y)l>(x) = l>(x)r<(y)
            expect_equal(rep, "R4.1", {i, j}, lift(ij_succ, lprec_of), v.lsucc(i) * v.lprec(j));
            expect_equal(rep, "R4.2", {i, j}, v.rprec(j) * v.rsucc(i), lift(ij_prec, rsucc_of));
            expect_equal(rep, "R4.3", {i, j}, v.rprec(j) * v.lsucc(i), v.lsucc(i) * v.rprec(j));
        }
    rep.finalize();
    return rep;
}

Report check_assoc_representation(const AssocAlgebra& a, const AssocRepresentation& v) {
    if (v.adim() != a.dim()) throw DimensionMismatch("bimodule indexed by wrong algebra dimension");
    const int n = a.dim();
    Report rep;
    auto lift = [&](int i, int j, auto&& family) {
        Matrix out(v.mdim(), v.mdim(), v.field());
        for (int k = 0; k < n; ++k) {
            Scalar c = a.dot().at(i, j, k);
            if (c.is_zero()) continue;
            out = out + family(k).scaled(c);
        }
        return out;
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto l_of = [&](int k) { return v.l(k); };
            auto r_of = [&](int k) { return v.r(k); };
            expect_equal(rep, "AR.1", {i, j}, lift(i, j, l_of), v.l(i) * v.l(j));
            expect_equal(rep, "AR.2", {i, j}, lift(i, j, r_of), v.r(j) * v.r(i));
            expect_equal(rep, "AR.3", {i, j}, v.r(j) * v.l(i), v.l(i) * v.r(j));
        }
    rep.finalize();
    return rep;
}

Representation regular_representation(const AntiDendAlgebra& a) {
    Report valid = check_anti_dendriform(a);
    if (!valid.pass())
        throw Error("regular_representation requires a valid anti-dendriform algebra");
    const int n = a.dim();
    std::vector<Matrix> lsucc, rsucc, lprec, rprec;
    for (int i = 0; i < n; ++i) {
        lsucc.push_back(a.lsucc(i));
        rsucc.push_back(a.rsucc(i));
        lprec.push_back(a.lprec(i));
        rprec.push_back(a.rprec(i));
    }
    return Representation(std::move(lsucc), std::move(rsucc), std::move(lprec), std::move(rprec));
}

DerivedRep derived_representation(const Representation& v, RepVariant variant) {
    const int n = v.adim();
    auto map_family = [&](auto&& f) {
        std::vector<Matrix> out;
        out.reserve(n);
        for (int i = 0; i < n; ++i) out.push_back(f(i));
        return out;
    };
    switch (variant) {
    case RepVariant::assoc_a:
        return AssocRepresentation(map_family([&](int i) { return -v.lsucc(i); }),
                                   map_family([&](int i) { return -v.rprec(i); }));
    case RepVariant::assoc_b:
        return AssocRepresentation(map_family([&](int i) { return v.ldot(i); }),
                                   map_family([&](int i) { return v.rdot(i); }));
    case RepVariant::dual_c:
        return Representation(
            map_family([&](int i) { return -(v.rdot(i).transpose()); }),
            map_family([&](int i) { return v.lprec(i).transpose(); }),
            map_family([&](int i) { return v.rsucc(i).transpose(); }),
            map_family([&](int i) { return -(v.ldot(i).transpose()); }));
    case RepVariant::assoc_dual_d:
        return AssocRepresentation(map_family([&](int i) { return -(v.rprec(i).transpose()); }),
                                   map_family([&](int i) { return -(v.lsucc(i).transpose()); }));
    case RepVariant::assoc_dual_e:
        return AssocRepresentation(map_family([&](int i) { return -(v.rdot(i).transpose()); }),
                                   map_family([&](int i) { return -(v.ldot(i).transpose()); }));
    }
    throw UnknownVariant("unknown representation variant");
}

} // namespace adtk
