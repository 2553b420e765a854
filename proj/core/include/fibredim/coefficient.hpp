#pragma once

#include <gmpxx.h>

#include <string>

#include "fibredim/error.hpp"

namespace fibredim {

/// Coefficient domain tag: exact integers, exact rationals, or a prime field.
struct CoeffDomain {
    enum class Kind { integers, rationals, prime_field };

    Kind kind = Kind::integers;
    mpz_class modulus;  // set iff kind == prime_field; always prime

    static CoeffDomain integers() { return {Kind::integers, 0}; }
    static CoeffDomain rationals() { return {Kind::rationals, 0}; }
    static CoeffDomain prime_field(mpz_class p);

    bool is_field() const { return kind != Kind::integers; }

    bool operator==(const CoeffDomain& other) const {
        return kind == other.kind && (kind != Kind::prime_field || modulus == other.modulus);
    }
    bool operator!=(const CoeffDomain& other) const { return !(*this == other); }

    std::string to_string() const;
};

/// Exact coefficient in one of the three domains.
///
/// Invariants: rationals are stored reduced with positive denominator (GMP
/// canonical form); prime-field residues lie in [0, p).
class Coefficient {
public:
    Coefficient(CoeffDomain domain, const mpz_class& n);
    Coefficient(CoeffDomain domain, const mpq_class& q);

    static Coefficient zero(const CoeffDomain& d) { return Coefficient(d, mpz_class(0)); }
    static Coefficient one(const CoeffDomain& d) { return Coefficient(d, mpz_class(1)); }

    const CoeffDomain& domain() const { return domain_; }
    const mpq_class& value() const { return value_; }

    /// Numerator as an integer; requires a denominator of 1.
    mpz_class integer() const;

    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }
    /// Invertible in the domain: any nonzero element of a field, +-1 in Z.
    bool is_unit() const;

    Coefficient operator+(const Coefficient& rhs) const;
    Coefficient operator-(const Coefficient& rhs) const;
    Coefficient operator*(const Coefficient& rhs) const;
    Coefficient operator-() const;
    bool operator==(const Coefficient& rhs) const;
    bool operator!=(const Coefficient& rhs) const { return !(*this == rhs); }

    /// Multiplicative inverse; requires a field domain and a nonzero value.
    Coefficient inverse() const;

    std::string to_string() const;

private:
    void canonicalize();
    static const CoeffDomain& check_match(const Coefficient& a, const Coefficient& b);

    CoeffDomain domain_;
    mpq_class value_;
};

}  // namespace fibredim
