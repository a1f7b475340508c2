#pragma once

#include <cstdint>
#include <string>

namespace adtk {

/// Coefficient field of a computation: either the rationals or a prime
/// field F_p. A characteristic of 0 denotes the rationals.
class Field {
  public:
    Field() = default; // rationals

    static Field rationals() { return Field{}; }

    /// Prime field F_p. Throws BadPrime unless p is prime.
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }

    /// Header form: "Q" for the rationals, "p<k>" (e.g. "p3") for F_k.
    std::string name() const;
    static Field parse(const std::string& name);

    friend bool operator==(const Field&, const Field&) = default;

  private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime_u64(std::uint64_t n);

} // namespace adtk
