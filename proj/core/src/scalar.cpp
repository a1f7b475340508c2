#include "adtk/scalar.hpp"

#include "adtk/errors.hpp"

namespace adtk {

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p));
    // extended Euclid on (a, p); p prime so gcd is 1
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

Scalar Scalar::zero(const Field& f) {
    if (f.is_rational()) return Scalar(f, mpq_class(0));
    return Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(const Field& f) {
    if (f.is_rational()) return Scalar(f, mpq_class(1));
    return Scalar(f, std::uint64_t{1});
}

Scalar Scalar::of_int(long v, const Field& f) {
    if (f.is_rational()) return Scalar(f, mpq_class(v));
    std::int64_t p = static_cast<std::int64_t>(f.characteristic());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return Scalar(f, static_cast<std::uint64_t>(r));
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(Field::rationals(), q);
}

Scalar Scalar::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(Field::rationals(), c);
}

Scalar Scalar::residue(std::uint64_t v, const Field& f) {
    if (f.is_rational()) throw FieldMismatch("residue requires a prime field");
    return Scalar(f, v % f.characteristic());
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

std::string Scalar::str() const {
    if (field_.is_rational()) return q_.get_str();
    return std::to_string(r_);
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_) {
        throw FieldMismatch("scalar fields differ: " + field_.name() + " vs " + o.field_.name());
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rational()) return Scalar(field_, mpq_class(q_ + o.q_));
    return Scalar(field_, (r_ + o.r_) % field_.characteristic());
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rational()) return Scalar(field_, mpq_class(q_ - o.q_));
    std::uint64_t p = field_.characteristic();
    return Scalar(field_, (r_ + p - o.r_) % p);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    if (field_.is_rational()) return Scalar(field_, mpq_class(q_ * o.q_));
    // p < 2^31, so the product fits in 64 bits
    return Scalar(field_, (r_ * o.r_) % field_.characteristic());
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    if (field_.is_rational()) return Scalar(field_, mpq_class(-q_));
    std::uint64_t p = field_.characteristic();
    return Scalar(field_, r_ == 0 ? 0 : p - r_);
}

Scalar Scalar::inverse() const {
    if (field_.is_rational()) {
        if (q_ == 0) throw DivisionByZero("inverse of rational zero");
        return Scalar(field_, mpq_class(1 / q_));
    }
    return Scalar(field_, mod_inverse(r_, field_.characteristic()));
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
    auto bad = [&](const std::string& why) { return SyntaxError("bad scalar \"" + text + "\": " + why, 1, 1); };
    if (text.empty()) throw bad("empty");
    if (f.is_rational()) {
        std::size_t slash = text.find('/');
        std::string num = slash == std::string::npos ? text : text.substr(0, slash);
        std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
        auto is_int = [](const std::string& s, bool allow_sign) {
            if (s.empty()) return false;
            std::size_t i = 0;
            if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
            if (i == s.size()) return false;
            for (; i < s.size(); ++i)
                if (s[i] < '0' || s[i] > '9') return false;
            return true;
        };
        if (!is_int(num, true) || !is_int(den, false)) throw bad("not an integer or fraction");
        mpz_class n(num), d(den);
        if (d == 0) throw bad("zero denominator");
        mpq_class q(n, d);
        q.canonicalize();
        return Scalar(f, q);
    }
    for (char c : text) {
        if (c < '0' || c > '9') throw bad("residues are unsigned decimals");
    }
    mpz_class v(text);
    mpz_class p(static_cast<unsigned long>(f.characteristic()));
    mpz_class r = v % p;
    return Scalar(f, static_cast<std::uint64_t>(r.get_ui()));
}

} // namespace adtk
