#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "adelic/errors.hpp"

namespace adelic {

using Int = boost::multiprecision::cpp_int;
// Exact rational: denominator > 0, gcd(num, den) = 1, maintained by the backend.
using Rat = boost::multiprecision::cpp_rational;

/// Value of a quadratic symbol: exactly one of {+1, -1, 0}.
class Symbol {
  public:
    constexpr explicit Symbol(int v) : v_(v) {
        if (v != 1 && v != -1 && v != 0) throw std::domain_error("Symbol: value must be +1, -1 or 0");
    }
    constexpr int value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Symbol operator*(Symbol a, Symbol b) { return Symbol(a.v_ * b.v_); }
    Symbol& operator*=(Symbol o) {
        v_ *= o.v_;
        return *this;
    }
    // a^e; e may be negative for nonzero symbols.
    Symbol pow(long long e) const {
        if (v_ == 0) {
            if (e <= 0) throw std::domain_error("Symbol: 0 to nonpositive power");
            return Symbol(0);
        }
        return (e % 2 == 0) ? Symbol(1) : *this;
    }
    Symbol inverse() const {
        if (v_ == 0) throw std::domain_error("Symbol: 0 has no inverse");
        return *this;  // self-inverse in {+1,-1}
    }
    friend constexpr bool operator==(Symbol a, Symbol b) { return a.v_ == b.v_; }
    friend constexpr bool operator==(Symbol a, int b) { return a.v_ == b; }

  private:
    int v_;
};

// Trial-division bound for factorization and primality checks.
inline constexpr long long kFactorBound = 1'000'000'000LL;

/// Deterministic primality by trial division; n must not exceed kFactorBound.
bool is_prime(long long n);

/// Legendre symbol (a/p) for an odd prime p, by Euler's criterion
/// a^((p-1)/2) mod p. This is the ground-truth oracle every other symbol
/// computation in the library reduces to; it never uses reciprocity.
Symbol legendre(const Int& a, const Int& p);

/// Kronecker symbol (D/n): multiplicative extension of the Legendre symbol
/// over the factorization of n, with the closed forms
///   (D/2)  = 0 if D even, +1 if D = +-1 mod 8, -1 if D = +-3 mod 8
///   (D/-1) = -1 if D < 0 else +1
///   (D/0)  = 1 iff D = +-1.
/// Not both arguments may be zero. Like legendre(), reciprocity-free.
Symbol kronecker(const Int& D, const Int& n);

/// p-adic valuation of a nonzero integer.
long long valuation(const Int& n, long long p);

/// v_p(numerator) - v_p(denominator) of a nonzero rational.
long long valuation(const Rat& r, long long p);

/// Sorted prime factorization of n >= 1 (empty for n = 1); trial division,
/// n capped at kFactorBound.
std::vector<std::pair<long long, int>> factorize(long long n);

/// a^e mod m by square-and-multiply; m >= 2, e >= 0; result in [0, m).
Int modpow(const Int& a, const Int& e, const Int& m);

/// True for a fundamental discriminant of a quadratic field:
/// D = 1 mod 4 squarefree, or D = 4m with m = 2 or 3 mod 4 squarefree
/// (D = 0, 1 excluded).
bool is_fundamental_discriminant(long long D);

namespace testing {
// Fault injection for sweep self-tests: while set, kronecker(D, n) with
// exactly these arguments returns a flipped sign.
void set_kronecker_fault(const Int& D, const Int& n);
void clear_kronecker_fault();
}  // namespace testing

}  // namespace adelic
