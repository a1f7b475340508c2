#include "adtk/field.hpp"

#include "adtk/errors.hpp"

namespace adtk {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw BadPrime("not a prime: " + std::to_string(p));
    }
    if (p >= (std::uint64_t{1} << 31)) {
        throw BadPrime("prime too large (must fit in 31 bits): " + std::to_string(p));
    }
    return Field{p};
}

std::string Field::name() const {
    if (is_rational()) return "Q";
    return "p" + std::to_string(p_);
}

Field Field::parse(const std::string& name) {
    if (name == "Q") return rationals();
    if (name.size() >= 2 && name[0] == 'p') {
        std::uint64_t p = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            char c = name[i];
            if (c < '0' || c > '9') throw BadPrime("bad field name: " + name);
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
            if (p >= (std::uint64_t{1} << 31)) throw BadPrime("bad field name: " + name);
        }
        return prime(p);
    }
    throw BadPrime("bad field name: " + name);
}

} // namespace adtk
