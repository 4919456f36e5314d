#pragma once

#include <map>
#include <string>

#include "adelic/arith.hpp"

namespace adelic {

/// A place of Q: the single real place or a finite place labelled by a prime.
struct Place {
    bool infinite = false;
    long long p = 0;  // prime when finite

    static Place real() { return Place{true, 0}; }
    static Place finite(long long prime);

    friend bool operator==(const Place&, const Place&) = default;
    // Finite places first (ascending prime), the real place last.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.infinite != b.infinite) return !a.infinite;
        return a.p < b.p;
    }
    std::string str() const;
};

/// Idele of Q with finite support: a nonzero rational at the real place, a
/// "tail" rational holding the component at every finite place not stored
/// explicitly, and a finite override map. Ordinary ideles have tail 1; the
/// diagonal image tau(r) is real = r, tail = r with no overrides, so
/// component_at() reports r at every place, not 1. Canonical form stores no
/// override equal to the tail.
class Idele {
  public:
    Idele() : real_(1), tail_(1) {}
    Idele(Rat real, std::map<long long, Rat> finite, Rat tail = Rat(1));

    static Idele identity() { return Idele(); }

    const Rat& real_component() const { return real_; }
    const Rat& tail() const { return tail_; }
    const std::map<long long, Rat>& overrides() const { return overrides_; }

    /// Component at the finite place p (override if stored, else tail).
    const Rat& component_at(long long p) const;

    Idele operator*(const Idele& other) const;
    Idele inverse() const;

    /// |x| = |real| * prod_p p^(-v_p(x_p)), exact.
    Rat norm() const;

    /// Nonzero finite-place valuations, keyed by prime.
    std::map<long long, long long> valuation_vector() const;

    /// Finite places where the component can differ from 1:
    /// override keys plus the primes in the tail's support.
    std::map<long long, Rat> supported_components() const;

    /// CLI literal `real=<rat>;p1=<rat>;...` (plus `tail=<rat>` when != 1).
    std::string to_literal() const;
    static Idele parse_literal(const std::string& text);

    friend bool operator==(const Idele&, const Idele&) = default;

  private:
    Rat real_;
    Rat tail_;
    std::map<long long, Rat> overrides_;
};

/// Diagonal embedding of a nonzero rational: component r at every place.
Idele tau(const Rat& r);

/// alpha_p = (p, 1, ..., p, 1, ...): p at the real place and at p, norm one.
Idele alpha_p(long long p);

/// alpha_infty = (-1, 1, 1, ...): -1 at the real place only, norm one.
Idele alpha_infty();

/// x^m for integer m (componentwise power).
Idele idele_pow(const Idele& x, long long m);

}  // namespace adelic
