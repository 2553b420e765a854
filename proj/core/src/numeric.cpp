#include "fibredim/numeric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fibredim {

bool is_probable_prime(const mpz_class& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

mpz_class pollard_rho(const mpz_class& n) {
    // Brent's cycle variant; n must be composite, odd, > 1.
    mpz_class c = 1;
    while (true) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;  // cycle with this c, retry
            d = gcd(diff, n);
        }
        if (d != 1 && d != n && d != 0) return d;
        c += 1;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
    if (n <= 1) return;
    if (is_probable_prime(n)) {
        out[n] += 1;
        return;
    }
    for (long small : {2L, 3L, 5L, 7L, 11L, 13L}) {
        if (n % small == 0) {
            out[mpz_class(small)] += 1;
            factor_into(n / small, out);
            return;
        }
    }
    mpz_class d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> factorize(mpz_class n) {
    if (n < 1) throw std::invalid_argument("factorize: argument must be >= 1");
    std::map<mpz_class, unsigned> acc;
    factor_into(std::move(n), acc);
    return {acc.begin(), acc.end()};
}

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
    std::vector<mpz_class> out;
    for (const auto& [p, e] : factorize(n)) out.push_back(p);
    return out;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

void ext_gcd(const mpz_class& a, const mpz_class& b, mpz_class& g, mpz_class& u, mpz_class& v) {
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& p) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inverse: element not invertible");
    return inv;
}

std::string to_decimal(const mpz_class& n) { return n.get_str(); }

}  // namespace fibredim
