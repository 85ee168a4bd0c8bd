#include "ncm/coefficient.hpp"

#include <stdexcept>

namespace ncm {

namespace {

// exact power with negative exponents allowed (base must be nonzero for those)
Rational pow_rational(const Rational& base, int e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::invalid_argument("zero raised to a negative power");
    Rational b = e > 0 ? base : Rational(1) / base;
    int n = e > 0 ? e : -e;
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

std::string monomial_str(const Coefficient::Monomial& mono) {
    std::string out;
    for (const auto& [p, e] : mono) {
        if (!out.empty()) out += "*";
        out += to_string(p);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

Coefficient::Coefficient(const Rational& c) {
    if (c != 0) terms_[{}] = c;
}

Coefficient Coefficient::monomial(const Param& p, int exponent, const Rational& scale) {
    Coefficient out;
    if (scale == 0) return out;
    if (exponent == 0) {
        out.terms_[{}] = scale;
    } else {
        out.terms_[{{p, exponent}}] = scale;
    }
    return out;
}

bool Coefficient::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.empty();
}

const Rational& Coefficient::constant_value() const {
    if (!is_constant() || terms_.empty())
        throw std::invalid_argument("coefficient is not a nonzero constant");
    return terms_.begin()->second;
}

Rational Coefficient::rational_value() const {
    if (!is_constant())
        throw std::invalid_argument("coefficient " + str() + " is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void Coefficient::add_term(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    Coefficient out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            // merge the two sorted exponent lists
            Coefficient::Monomial mono;
            mono.reserve(ma.size() + mb.size());
            size_t i = 0, j = 0;
            while (i < ma.size() || j < mb.size()) {
                if (j == mb.size() || (i < ma.size() && ma[i].first < mb[j].first)) {
                    mono.push_back(ma[i++]);
                } else if (i == ma.size() || mb[j].first < ma[i].first) {
                    mono.push_back(mb[j++]);
                } else {
                    int e = ma[i].second + mb[j].second;
                    if (e != 0) mono.emplace_back(ma[i].first, e);
                    ++i;
                    ++j;
                }
            }
            out.add_term(mono, ca * cb);
        }
    }
    return out;
}

Coefficient& Coefficient::operator*=(const Coefficient& o) {
    *this = *this * o;
    return *this;
}

Coefficient Coefficient::operator-() const {
    Coefficient out;
    for (const auto& [mono, c] : terms_) out.terms_[mono] = -c;
    return out;
}

Coefficient Coefficient::unit_inverse() const {
    if (terms_.size() != 1)
        throw std::invalid_argument("coefficient " + str() + " is not a single-term unit");
    const auto& [mono, c] = *terms_.begin();
    Coefficient out;
    Monomial inv;
    inv.reserve(mono.size());
    for (const auto& [p, e] : mono) inv.emplace_back(p, -e);
    out.terms_[inv] = Rational(1) / c;
    return out;
}

Rational Coefficient::evaluate(const ParamAssignment& a) const {
    Rational acc(0);
    for (const auto& [mono, c] : terms_) {
        Rational t = c;
        for (const auto& [p, e] : mono) t *= pow_rational(a.at(p), e);
        acc += t;
    }
    return acc;
}

Coefficient Coefficient::substituted(const Param& target, const Coefficient& unit_value) const {
    Coefficient out;
    for (const auto& [mono, c] : terms_) {
        Coefficient term(c);
        for (const auto& [p, e] : mono) {
            if (p == target) {
                Coefficient base = e > 0 ? unit_value : unit_value.unit_inverse();
                for (int n = 0; n < (e > 0 ? e : -e); ++n) term *= base;
            } else {
                term *= monomial(p, e);
            }
        }
        out += term;
    }
    return out;
}

void Coefficient::collect_params(std::set<Param>& out) const {
    for (const auto& [mono, c] : terms_)
        for (const auto& [p, e] : mono) out.insert(p);
}

std::string Coefficient::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, c] : terms_) {
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        std::string body;
        if (mono.empty()) {
            body = to_string(mag);
        } else if (mag == 1) {
            body = monomial_str(mono);
        } else {
            body = to_string(mag) + "*" + monomial_str(mono);
        }
        if (out.empty()) {
            out = neg ? "-" + body : body;
        } else {
            out += neg ? " - " + body : " + " + body;
        }
    }
    return out;
}

}  // namespace ncm
