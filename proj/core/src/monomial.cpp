#include "fibredim/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace fibredim {

Monomial Monomial::variable(int var_count, int index, unsigned power) {
    std::vector<unsigned> e(static_cast<size_t>(var_count), 0);
    e.at(static_cast<size_t>(index)) = power;
    return Monomial(std::move(e));
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exponents_) d += e;
    return d;
}

bool Monomial::is_unit() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](unsigned e) { return e == 0; });
}

bool Monomial::divides(const Monomial& m) const {
    for (size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > m.exponents_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    std::vector<unsigned> e(exponents_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] + rhs.exponents_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    std::vector<unsigned> e(exponents_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = exponents_[i] - divisor.exponents_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<unsigned> e(a.exponents_.size());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exponents_[i], b.exponents_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.exponents_.size(); ++i)
        if (a.exponents_[i] > 0 && b.exponents_[i] > 0) return false;
    return true;
}

std::uint64_t Monomial::support_mask() const {
    if (exponents_.size() > 64) throw std::length_error("support_mask: too many variables");
    std::uint64_t m = 0;
    for (size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > 0) m |= (std::uint64_t{1} << i);
    return m;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (kind == Kind::lex) {
        for (int i = 0; i < var_count; ++i) {
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? -1 : 1;
        }
        return 0;
    }
    // grevlex: higher total degree wins; on ties the rightmost differing
    // exponent decides, with the smaller exponent ranked larger.
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = var_count - 1; i >= 0; --i) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? -1 : 1;
    }
    return 0;
}

}  // namespace fibredim
