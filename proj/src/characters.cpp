#include "adelic/characters.hpp"

#include <cmath>
#include <numeric>

namespace adelic {

cxd omega_s_eval(const QuasiCharacter& chi, const Idele& x) {
    Rat n = x.norm();
    double ln = std::log(n.convert_to<double>());
    return std::exp(chi.s * ln);
}

QuadHeckeChar::QuadHeckeChar(long long D) : D_(D) {
    if (D == 0) throw std::domain_error("QuadHeckeChar: D must be nonzero");
    long long m = ((D % 4) + 4) % 4;
    if (m != 0 && m != 1) throw std::domain_error("QuadHeckeChar: D must be 0 or 1 mod 4");
    for (const auto& [p, e] : factorize(D < 0 ? -D : D)) ramified_finite_.insert(p);
}

Symbol hecke_eval(const QuadHeckeChar& chi, const Idele& x) {
    for (long long q : chi.ramified_finite()) {
        if (x.component_at(q) != 1)
            throw RamifiedCollision("hecke_eval: component at ramified place " + std::to_string(q) +
                                    " is not 1 (no Wilson and t'Hooft insertions may share a place)");
    }
    if (chi.ramified_at_infinity() && x.real_component() < 0)
        throw RamifiedCollision("hecke_eval: negative real component with a character ramified at infinity");

    Symbol result(1);
    for (const auto& [p, v] : x.valuation_vector()) {
        if (chi.ramified_finite().count(p)) continue;  // unreachable: component there is 1
        Symbol s = kronecker(Int(chi.discriminant()), Int(p));
        result *= s.pow(-v);
    }
    return result;
}

WellDefReport well_definedness_sweep(long long D, long long r_max) {
    if (D == 0 || (((D % 4) + 4) % 4) > 1) throw std::domain_error("well_definedness_sweep: invalid discriminant");
    if (r_max > 100000) throw std::domain_error("well_definedness_sweep: r_max above sweep bound 1e5");
    long long absD = D < 0 ? -D : D;
    WellDefReport report;
    for (long long r = 1; r <= r_max; ++r) {
        if (r % absD != 1 % absD) continue;
        if (std::gcd(r, absD) != 1) continue;
        Symbol prod(1);
        for (const auto& [p, e] : factorize(r)) prod *= kronecker(Int(D), Int(p)).pow(e);
        ++report.checked;
        if (!(prod == 1)) {
            report.pass = false;
            report.first_counterexample = r;
            report.counterexample_value = prod.value();
            break;
        }
    }
    return report;
}

}  // namespace adelic
