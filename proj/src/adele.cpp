#include "adelic/adele.hpp"

#include <sstream>

namespace adelic {

Place Place::finite(long long prime) {
    if (!is_prime(prime)) throw std::domain_error("Place: " + std::to_string(prime) + " is not prime");
    return Place{false, prime};
}

std::string Place::str() const { return infinite ? "inf" : std::to_string(p); }

Idele::Idele(Rat real, std::map<long long, Rat> finite, Rat tail)
    : real_(std::move(real)), tail_(std::move(tail)), overrides_(std::move(finite)) {
    if (real_ == 0) throw std::domain_error("Idele: real component is zero");
    if (tail_ == 0) throw std::domain_error("Idele: tail component is zero");
    for (auto it = overrides_.begin(); it != overrides_.end();) {
        if (!is_prime(it->first)) throw std::domain_error("Idele: non-prime place " + std::to_string(it->first));
        if (it->second == 0) throw std::domain_error("Idele: zero component at " + std::to_string(it->first));
        it = (it->second == tail_) ? overrides_.erase(it) : std::next(it);
    }
}

const Rat& Idele::component_at(long long p) const {
    auto it = overrides_.find(p);
    return it != overrides_.end() ? it->second : tail_;
}

Idele Idele::operator*(const Idele& other) const {
    std::map<long long, Rat> comps;
    for (const auto& [p, c] : overrides_) comps[p] = c * other.component_at(p);
    for (const auto& [p, c] : other.overrides_)
        if (!comps.count(p)) comps[p] = component_at(p) * c;
    return Idele(real_ * other.real_, std::move(comps), tail_ * other.tail_);
}

Idele Idele::inverse() const {
    std::map<long long, Rat> comps;
    for (const auto& [p, c] : overrides_) comps[p] = 1 / c;
    return Idele(1 / real_, std::move(comps), 1 / tail_);
}

std::map<long long, Rat> Idele::supported_components() const {
    std::map<long long, Rat> out = overrides_;
    if (tail_ != 1) {
        Int num = abs(numerator(tail_));
        for (const auto& [p, e] : factorize(num.convert_to<long long>())) out.emplace(p, tail_);
        for (const auto& [p, e] : factorize(denominator(tail_).convert_to<long long>())) out.emplace(p, tail_);
    }
    return out;
}

Rat Idele::norm() const {
    Rat n = real_ < 0 ? -real_ : real_;
    for (const auto& [p, c] : supported_components()) {
        long long v = valuation(c, p);
        Rat pk = 1;
        for (long long i = 0; i < (v < 0 ? -v : v); ++i) pk *= p;
        if (v > 0)
            n /= pk;
        else if (v < 0)
            n *= pk;
    }
    return n;
}

std::map<long long, long long> Idele::valuation_vector() const {
    std::map<long long, long long> out;
    for (const auto& [p, c] : supported_components()) {
        long long v = valuation(c, p);
        if (v != 0) out[p] = v;
    }
    return out;
}

namespace {

Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw std::domain_error("bad rational literal: " + s); };
    if (s.empty()) bad();
    size_t slash = s.find('/');
    try {
        Int num(s.substr(0, slash));
        Int den = slash == std::string::npos ? Int(1) : Int(s.substr(slash + 1));
        if (den == 0) bad();
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        bad();
    }
    return Rat();  // unreachable
}

}  // namespace

std::string Idele::to_literal() const {
    std::ostringstream os;
    os << "real=" << real_;
    if (tail_ != 1) os << ";tail=" << tail_;
    for (const auto& [p, c] : overrides_) os << ";" << p << "=" << c;
    return os.str();
}

Idele Idele::parse_literal(const std::string& text) {
    std::map<long long, Rat> comps;
    Rat real;
    bool have_real = false;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw std::domain_error("bad idele literal item: " + item);
        std::string key = item.substr(0, eq);
        Rat val = parse_rat(item.substr(eq + 1));
        if (key == "real") {
            if (have_real) throw std::domain_error("idele literal: duplicate real component");
            real = val;
            have_real = true;
        } else {
            long long p;
            try {
                p = std::stoll(key);
            } catch (const std::exception&) {
                throw std::domain_error("idele literal: bad place " + key);
            }
            if (!is_prime(p)) throw std::domain_error("idele literal: place " + key + " is not prime");
            if (comps.count(p)) throw std::domain_error("idele literal: duplicate place " + key);
            comps[p] = val;
        }
    }
    if (!have_real) throw std::domain_error("idele literal: missing real component");
    return Idele(real, std::move(comps));
}

Idele tau(const Rat& r) {
    if (r == 0) throw std::domain_error("tau: argument is zero");
    return Idele(r, {}, r);
}

Idele alpha_p(long long p) {
    if (!is_prime(p)) throw std::domain_error("alpha_p: argument is not prime");
    return Idele(Rat(p), {{p, Rat(p)}});
}

Idele alpha_infty() { return Idele(Rat(-1), {}); }

Idele idele_pow(const Idele& x, long long m) {
    if (m == 0) return Idele::identity();
    Idele base = m < 0 ? x.inverse() : x;
    long long e = m < 0 ? -m : m;
    Idele acc = base;
    for (long long i = 1; i < e; ++i) acc = acc * base;
    return acc;
}

}  // namespace adelic
