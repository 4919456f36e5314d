#pragma once

#include <complex>
#include <optional>
#include <set>

#include "adelic/adele.hpp"

namespace adelic {

using cxd = std::complex<double>;

/// The unramified quasicharacter omega_s(x) = |x|^s.
struct QuasiCharacter {
    cxd s;
};

/// omega_s(x) = exp(s * log|x|), with |x| computed exactly first.
cxd omega_s_eval(const QuasiCharacter& chi, const Idele& x);

/// Quadratic Hecke character attached to a discriminant D (D = 0 or 1 mod 4,
/// D != 0), evaluated by Kronecker symbols. Ramified finite places are the
/// primes dividing D; the real place is ramified exactly when D < 0.
class QuadHeckeChar {
  public:
    explicit QuadHeckeChar(long long D);

    long long discriminant() const { return D_; }
    const std::set<long long>& ramified_finite() const { return ramified_finite_; }
    bool ramified_at_infinity() const { return D_ < 0; }

  private:
    long long D_;
    std::set<long long> ramified_finite_;
};

/// Evaluate chi on an idele whose components are exactly 1 at every ramified
/// finite place (and whose real component is positive when D < 0):
///   prod over supported p not dividing D of (D/p)^(-v_p(x_p)).
/// Violations raise RamifiedCollision.
Symbol hecke_eval(const QuadHeckeChar& chi, const Idele& x);

/// Result of the descent check below.
struct WellDefReport {
    bool pass = true;
    long long checked = 0;
    std::optional<long long> first_counterexample;
    int counterexample_value = 1;
};

/// For every r <= r_max with gcd(r, D) = 1 and r = 1 mod |D|, verify
/// prod_{p | r} (D/p)^{v_p(r)} = 1. This is the testable restatement of the
/// character being trivial on the diagonal rationals (equivalently, of its
/// descent to a Dirichlet character mod |D|).
WellDefReport well_definedness_sweep(long long D, long long r_max);

}  // namespace adelic
