#include "fibredim/coefficient.hpp"

#include "fibredim/numeric.hpp"

namespace fibredim {

CoeffDomain CoeffDomain::prime_field(mpz_class p) {
    if (!is_probable_prime(p))
        throw ValidationError("prime field modulus " + p.get_str() + " is not prime");
    return {Kind::prime_field, std::move(p)};
}

std::string CoeffDomain::to_string() const {
    switch (kind) {
        case Kind::integers: return "Z";
        case Kind::rationals: return "Q";
        case Kind::prime_field: return "F" + modulus.get_str();
    }
    return "?";
}

Coefficient::Coefficient(CoeffDomain domain, const mpz_class& n)
    : domain_(std::move(domain)), value_(n) {
    canonicalize();
}

Coefficient::Coefficient(CoeffDomain domain, const mpq_class& q)
    : domain_(std::move(domain)), value_(q) {
    value_.canonicalize();
    if (domain_.kind != CoeffDomain::Kind::rationals && value_.get_den() != 1)
        throw DomainMismatchError("non-integral value in domain " + domain_.to_string());
    canonicalize();
}

void Coefficient::canonicalize() {
    if (domain_.kind == CoeffDomain::Kind::prime_field) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), value_.get_num().get_mpz_t(), domain_.modulus.get_mpz_t());
        value_ = mpq_class(r);
    }
}

mpz_class Coefficient::integer() const {
    if (value_.get_den() != 1)
        throw DomainMismatchError("coefficient " + to_string() + " is not an integer");
    return value_.get_num();
}

bool Coefficient::is_unit() const {
    if (is_zero()) return false;
    if (domain_.kind == CoeffDomain::Kind::integers) return value_ == 1 || value_ == -1;
    return true;
}

const CoeffDomain& Coefficient::check_match(const Coefficient& a, const Coefficient& b) {
    if (a.domain_ != b.domain_)
        throw DomainMismatchError("coefficient domains differ: " + a.domain_.to_string() + " vs " +
                                  b.domain_.to_string());
    return a.domain_;
}

Coefficient Coefficient::operator+(const Coefficient& rhs) const {
    return Coefficient(check_match(*this, rhs), mpq_class(value_ + rhs.value_));
}

Coefficient Coefficient::operator-(const Coefficient& rhs) const {
    return Coefficient(check_match(*this, rhs), mpq_class(value_ - rhs.value_));
}

Coefficient Coefficient::operator*(const Coefficient& rhs) const {
    return Coefficient(check_match(*this, rhs), mpq_class(value_ * rhs.value_));
}

Coefficient Coefficient::operator-() const { return Coefficient(domain_, mpq_class(-value_)); }

bool Coefficient::operator==(const Coefficient& rhs) const {
    return domain_ == rhs.domain_ && value_ == rhs.value_;
}

Coefficient Coefficient::inverse() const {
    if (is_zero()) throw ValidationError("zero coefficient has no inverse");
    switch (domain_.kind) {
        case CoeffDomain::Kind::rationals:
            return Coefficient(domain_, mpq_class(1 / value_));
        case CoeffDomain::Kind::prime_field:
            return Coefficient(domain_, mod_inverse(value_.get_num(), domain_.modulus));
        case CoeffDomain::Kind::integers:
            if (!is_unit()) throw ValidationError("integer coefficient " + to_string() + " is not a unit");
            return *this;
    }
    throw ValidationError("unreachable");
}

std::string Coefficient::to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

}  // namespace fibredim
