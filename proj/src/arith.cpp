#include "adelic/arith.hpp"

namespace adelic {

namespace {

struct KroneckerFault {
    bool active = false;
    Int D, n;
};
thread_local KroneckerFault g_fault;

}  // namespace

bool is_prime(long long n) {
    if (n > kFactorBound) throw std::domain_error("is_prime: beyond trial-division bound");
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Symbol legendre(const Int& a, const Int& p) {
    if (p <= 2 || p > kFactorBound || !is_prime(p.convert_to<long long>()))
        throw std::domain_error("legendre: modulus must be an odd prime");
    Int r = a % p;
    if (r < 0) r += p;
    if (r == 0) return Symbol(0);
    Int e = modpow(r, (p - 1) / 2, p);
    if (e == 1) return Symbol(1);
    if (e == p - 1) return Symbol(-1);
    throw std::logic_error("legendre: Euler criterion failed (modulus not prime?)");
}

namespace {

Symbol kronecker_impl(const Int& D, const Int& n) {
    if (n == 0) return (D == 1 || D == -1) ? Symbol(1) : Symbol(0);

    Symbol result(1);
    Int m = n;
    if (m < 0) {
        m = -m;
        if (D < 0) result *= Symbol(-1);
    }
    // (D/2) closed form, once per factor of 2.
    long long two_exp = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++two_exp;
    }
    if (two_exp > 0) {
        if (D % 2 == 0) return Symbol(0);
        Int d8 = D % 8;
        if (d8 < 0) d8 += 8;
        Symbol at2 = (d8 == 1 || d8 == 7) ? Symbol(1) : Symbol(-1);
        result *= at2.pow(two_exp);
    }
    if (m == 1) return result;
    if (m > kFactorBound) throw std::domain_error("kronecker: |n| odd part beyond factorization bound");
    for (const auto& [p, e] : factorize(m.convert_to<long long>())) {
        Symbol lp = legendre(D, Int(p));
        if (lp.is_zero()) return Symbol(0);
        result *= lp.pow(e);
    }
    return result;
}

}  // namespace

Symbol kronecker(const Int& D, const Int& n) {
    if (D == 0 && n == 0) throw std::domain_error("kronecker: (0/0) undefined");
    Symbol s = kronecker_impl(D, n);
    if (g_fault.active && g_fault.D == D && g_fault.n == n && !s.is_zero()) return Symbol(-s.value());
    return s;
}

long long valuation(const Int& n, long long p) {
    if (n == 0) throw std::domain_error("valuation: argument is zero");
    if (p < 2 || !is_prime(p)) throw std::domain_error("valuation: p must be prime");
    long long v = 0;
    Int m = n;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

long long valuation(const Rat& r, long long p) {
    if (r == 0) throw std::domain_error("valuation: argument is zero");
    return valuation(numerator(r), p) - valuation(denominator(r), p);
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n == 0) throw std::domain_error("factorize: argument is zero");
    if (n < 0) throw std::domain_error("factorize: argument is negative");
    if (n > kFactorBound) throw std::domain_error("factorize: beyond trial-division bound");
    std::vector<std::pair<long long, int>> out;
    auto strip = [&](long long p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.emplace_back(p, e);
    };
    strip(2);
    for (long long d = 3; d * d <= n; d += 2) strip(d);
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

Int modpow(const Int& a, const Int& e, const Int& m) {
    if (m < 2) throw std::domain_error("modpow: modulus must be >= 2");
    if (e < 0) throw std::domain_error("modpow: exponent must be nonnegative");
    Int base = a % m;
    if (base < 0) base += m;
    Int result = 1, exp = e;
    while (exp > 0) {
        if ((exp & 1) != 0) result = result * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return result;
}

namespace testing {

void set_kronecker_fault(const Int& D, const Int& n) { g_fault = {true, D, n}; }
void clear_kronecker_fault() { g_fault.active = false; }

}  // namespace testing

}  // namespace adelic
