#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fibredim {

/// Exponent vector with one slot per ring variable; the all-zero vector is 1.
class Monomial {
public:
    explicit Monomial(std::vector<unsigned> exponents) : exponents_(std::move(exponents)) {}

    static Monomial unit(int var_count) { return Monomial(std::vector<unsigned>(var_count, 0)); }
    static Monomial variable(int var_count, int index, unsigned power = 1);

    int var_count() const { return static_cast<int>(exponents_.size()); }
    unsigned exponent(int i) const { return exponents_[static_cast<size_t>(i)]; }
    const std::vector<unsigned>& exponents() const { return exponents_; }

    unsigned total_degree() const;
    bool is_unit() const;

    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& rhs) const;
    /// Componentwise difference; requires divisor.divides(*this).
    Monomial quotient(const Monomial& divisor) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    /// Bitmask of variables with a positive exponent; requires var_count <= 64.
    std::uint64_t support_mask() const;

    bool operator==(const Monomial& rhs) const { return exponents_ == rhs.exponents_; }
    bool operator!=(const Monomial& rhs) const { return !(*this == rhs); }

private:
    std::vector<unsigned> exponents_;
};

/// Total multiplicative order on monomials with 1 minimal.
struct MonomialOrder {
    enum class Kind { grevlex, lex };

    Kind kind = Kind::grevlex;
    int var_count = 0;

    static MonomialOrder grevlex(int vars) { return {Kind::grevlex, vars}; }
    static MonomialOrder lex(int vars) { return {Kind::lex, vars}; }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    MonomialOrder with_var_count(int vars) const { return {kind, vars}; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && var_count == o.var_count;
    }
    bool operator!=(const MonomialOrder& o) const { return !(*this == o); }

    std::string name() const { return kind == Kind::grevlex ? "grevlex" : "lex"; }
};

}  // namespace fibredim
