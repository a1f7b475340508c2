#include "adtk/algebra.hpp"

#include "adtk/errors.hpp"

namespace adtk {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

Vec basis_product(const Tensor3& c, int i, int j) {
    Vec out = zero_vec(c.dim(), c.field());
    for (int k = 0; k < c.dim(); ++k) out[k] = c.at(i, j, k);
    return out;
}

Vec tensor_product_vec(const Tensor3& c, const Vec& x, const Vec& y) {
    const int n = c.dim();
    Vec out = zero_vec(n, c.field());
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (int k = 0; k < n; ++k) {
                const Scalar& cc = c.at(i, j, k);
                if (!cc.is_zero()) out[k] += xy * cc;
            }
        }
    }
    return out;
}

// L(e_i): column j holds the coordinates of e_i o e_j.
Matrix left_op(const Tensor3& c, int i) {
    Matrix m(c.dim(), c.dim(), c.field());
    for (int j = 0; j < c.dim(); ++j)
        for (int k = 0; k < c.dim(); ++k) m.at(k, j) = c.at(i, j, k);
    return m;
}

// R(e_i): column j holds the coordinates of e_j o e_i.
Matrix right_op(const Tensor3& c, int i) {
    Matrix m(c.dim(), c.dim(), c.field());
    for (int j = 0; j < c.dim(); ++j)
        for (int k = 0; k < c.dim(); ++k) m.at(k, j) = c.at(j, i, k);
    return m;
}

Matrix combine(const AntiDendAlgebra& a, const Vec& x, Matrix (AntiDendAlgebra::*basis_op)(int) const) {
    require(static_cast<int>(x.size()) == a.dim(), "element size mismatch");
    Matrix out(a.dim(), a.dim(), a.field());
    for (int i = 0; i < a.dim(); ++i) {
        if (x[i].is_zero()) continue;
        out = out + (a.*basis_op)(i).scaled(x[i]);
    }
    return out;
}

} // namespace

AntiDendAlgebra::AntiDendAlgebra(Tensor3 succ, Tensor3 prec)
    : succ_(std::move(succ)), prec_(std::move(prec)) {
    require(succ_.dim() == prec_.dim(), "structure constant tensors disagree on dimension");
    if (succ_.field() != prec_.field())
        throw FieldMismatch("structure constant tensors disagree on field");
    require(succ_.dim() >= 1 && succ_.dim() <= kMaxDim, "dimension out of range [1, 32]");
}

AntiDendAlgebra AntiDendAlgebra::zero(int n, const Field& f) {
    return AntiDendAlgebra(Tensor3(n, f), Tensor3(n, f));
}

Vec AntiDendAlgebra::op_succ(const Vec& x, const Vec& y) const {
    return tensor_product_vec(succ_, x, y);
}

Vec AntiDendAlgebra::op_prec(const Vec& x, const Vec& y) const {
    return tensor_product_vec(prec_, x, y);
}

Vec AntiDendAlgebra::op_dot(const Vec& x, const Vec& y) const {
    return add(op_succ(x, y), op_prec(x, y));
}

Matrix AntiDendAlgebra::lsucc(int i) const { return left_op(succ_, i); }
Matrix AntiDendAlgebra::rsucc(int i) const { return right_op(succ_, i); }
Matrix AntiDendAlgebra::lprec(int i) const { return left_op(prec_, i); }
Matrix AntiDendAlgebra::rprec(int i) const { return right_op(prec_, i); }
Matrix AntiDendAlgebra::ldot(int i) const { return lsucc(i) + lprec(i); }
Matrix AntiDendAlgebra::rdot(int i) const { return rsucc(i) + rprec(i); }

Matrix AntiDendAlgebra::lsucc(const Vec& x) const { return combine(*this, x, &AntiDendAlgebra::lsucc); }
Matrix AntiDendAlgebra::rsucc(const Vec& x) const { return combine(*this, x, &AntiDendAlgebra::rsucc); }
Matrix AntiDendAlgebra::lprec(const Vec& x) const { return combine(*this, x, &AntiDendAlgebra::lprec); }
Matrix AntiDendAlgebra::rprec(const Vec& x) const { return combine(*this, x, &AntiDendAlgebra::rprec); }
Matrix AntiDendAlgebra::ldot(const Vec& x) const { return lsucc(x) + lprec(x); }
Matrix AntiDendAlgebra::rdot(const Vec& x) const { return rsucc(x) + rprec(x); }

AssocAlgebra::AssocAlgebra(Tensor3 dot) : dot_(std::move(dot)) {
    if (dot_.dim() < 1 || dot_.dim() > kMaxDim)
        throw DimensionMismatch("dimension out of range [1, 32]");
}

Vec AssocAlgebra::op_dot(const Vec& x, const Vec& y) const {
    return tensor_product_vec(dot_, x, y);
}

Matrix AssocAlgebra::l(int i) const { return left_op(dot_, i); }
Matrix AssocAlgebra::r(int i) const { return right_op(dot_, i); }

Report check_anti_dendriform(const AntiDendAlgebra& a) {
    const int n = a.dim();
    Report rep;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Vec ei = zero_vec(n, a.field());
            ei[i] = Scalar::one(a.field());
            Vec ej = zero_vec(n, a.field());
            ej[j] = Scalar::one(a.field());
            Vec ij_succ = basis_product(a.succ(), i, j);
            Vec ij_prec = basis_product(a.prec(), i, j);
            Vec ij_dot = add(ij_succ, ij_prec);
            for (int k = 0; k < n; ++k) {
                Vec ek = zero_vec(n, a.field());
                ek[k] = Scalar::one(a.field());
                Vec jk_succ = basis_product(a.succ(), j, k);
                Vec jk_prec = basis_product(a.prec(), j, k);
                Vec jk_dot = add(jk_succ, jk_prec);

                Vec t1 = a.op_succ(ei, jk_succ);          // x>(y>z)
                Vec t2 = neg(a.op_succ(ij_dot, ek));      // -(x.y)>z
                Vec t3 = neg(a.op_prec(ei, jk_dot));      // -x<(y.z)
                Vec t4 = a.op_prec(ij_prec, ek);          // (x<y)<z
                if (t1 != t2) rep.add("A1.1", {i, j, k}, t1, t2);
                if (t2 != t3) rep.add("A1.2", {i, j, k}, t2, t3);
                if (t3 != t4) rep.add("A1.3", {i, j, k}, t3, t4);

                Vec l = a.op_prec(ij_succ, ek);           // (x>y)<z
                Vec r = a.op_succ(ei, jk_prec);           // x>(y<z)
                if (l != r) rep.add("A2", {i, j, k}, l, r);
            }
        }
    }
    rep.finalize();
    return rep;
}

Report check_associative(const AssocAlgebra& a) {
    const int n = a.dim();
    Report rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec ei = zero_vec(n, a.field());
                ei[i] = Scalar::one(a.field());
                Vec ek = zero_vec(n, a.field());
                ek[k] = Scalar::one(a.field());
                Vec ij = basis_product(a.dot(), i, j);
                Vec jk = basis_product(a.dot(), j, k);
                Vec l = a.op_dot(ij, ek);
                Vec r = a.op_dot(ei, jk);
                if (l != r) rep.add("ASSOC", {i, j, k}, l, r);
            }
    rep.finalize();
    return rep;
}

AssocAlgebra associated_associative(const AntiDendAlgebra& a) {
    return AssocAlgebra(a.succ() + a.prec());
}

AntiDendAlgebra direct_sum(const AntiDendAlgebra& a, const AntiDendAlgebra& b) {
    if (a.field() != b.field()) throw FieldMismatch("direct_sum over different fields");
    const int n = a.dim(), m = b.dim();
    Tensor3 succ(n + m, a.field());
    Tensor3 prec(n + m, a.field());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                succ.at(i, j, k) = a.succ_c(i, j, k);
                prec.at(i, j, k) = a.prec_c(i, j, k);
            }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                succ.at(n + i, n + j, n + k) = b.succ_c(i, j, k);
                prec.at(n + i, n + j, n + k) = b.prec_c(i, j, k);
            }
    return AntiDendAlgebra(std::move(succ), std::move(prec));
}

Report check_homomorphism(const Matrix& f, const AntiDendAlgebra& src,
                          const AntiDendAlgebra& dst, HomScope scope) {
    if (f.cols() != src.dim() || f.rows() != dst.dim())
        throw DimensionMismatch("homomorphism matrix shape mismatch");
    if (f.field() != src.field() || src.field() != dst.field())
        throw FieldMismatch("homomorphism fields differ");
    const int n = src.dim();
    Report rep;
    for (int i = 0; i < n; ++i) {
        Vec fi = zero_vec(n, src.field());
        fi[i] = Scalar::one(src.field());
        Vec f_ei = f.apply(fi);
        for (int j = 0; j < n; ++j) {
            Vec fj = zero_vec(n, src.field());
            fj[j] = Scalar::one(src.field());
            Vec f_ej = f.apply(fj);
            if (scope == HomScope::both) {
                Vec l = f.apply(src.op_succ(fi, fj));
                Vec r = dst.op_succ(f_ei, f_ej);
                if (l != r) rep.add("HOM.succ", {i, j}, l, r);
                l = f.apply(src.op_prec(fi, fj));
                r = dst.op_prec(f_ei, f_ej);
                if (l != r) rep.add("HOM.prec", {i, j}, l, r);
            } else {
                Vec l = f.apply(src.op_dot(fi, fj));
                Vec r = dst.op_dot(f_ei, f_ej);
                if (l != r) rep.add("HOM.dot", {i, j}, l, r);
            }
        }
    }
    rep.finalize();
    return rep;
}

Report check_homomorphism_assoc(const Matrix& f, const AssocAlgebra& src,
                                const AssocAlgebra& dst) {
    if (f.cols() != src.dim() || f.rows() != dst.dim())
        throw DimensionMismatch("homomorphism matrix shape mismatch");
    const int n = src.dim();
    Report rep;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec fi = zero_vec(n, src.field());
            fi[i] = Scalar::one(src.field());
            Vec fj = zero_vec(n, src.field());
            fj[j] = Scalar::one(src.field());
            Vec l = f.apply(src.op_dot(fi, fj));
            Vec r = dst.op_dot(f.apply(fi), f.apply(fj));
            if (l != r) rep.add("HOM.dot", {i, j}, l, r);
        }
    rep.finalize();
    return rep;
}

} // namespace adtk
