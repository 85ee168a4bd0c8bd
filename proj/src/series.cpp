#include "ncm/series.hpp"

#include <stdexcept>

namespace ncm {

Series::Series(int max_degree) : max_degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
}

Series Series::one(int max_degree) {
    Series s(max_degree);
    s.add_term(Word(), Coefficient(1));
    return s;
}

Series Series::term(const Word& w, const Coefficient& c, int max_degree) {
    Series s(max_degree);
    s.add_term(w, c);
    return s;
}

Coefficient Series::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coefficient() : it->second;
}

void Series::add_term(const Word& w, const Coefficient& c) {
    if (c.is_zero() || w.degree() > static_cast<size_t>(max_degree_)) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Series& Series::operator+=(const Series& o) {
    if (o.max_degree_ != max_degree_)
        throw std::invalid_argument("degree-mismatched series arithmetic");
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (o.max_degree_ != max_degree_)
        throw std::invalid_argument("degree-mismatched series arithmetic");
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    if (a.max_degree_ != b.max_degree_)
        throw std::invalid_argument("degree-mismatched series arithmetic");
    Series out(a.max_degree_);
    for (const auto& [wa, ca] : a.terms_) {
        if (wa.degree() > static_cast<size_t>(a.max_degree_)) continue;
        for (const auto& [wb, cb] : b.terms_) {
            if (wa.degree() + wb.degree() > static_cast<size_t>(a.max_degree_)) continue;
            out.add_term(wa.concat(wb), ca * cb);
        }
    }
    return out;
}

Series Series::scaled(const Coefficient& c) const {
    Series out(max_degree_);
    for (const auto& [w, t] : terms_) out.add_term(w, t * c);
    return out;
}

Series Series::operator-() const {
    Series out(max_degree_);
    for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
    return out;
}

Series Series::inverse() const {
    if (!(coefficient(Word()) == Coefficient(1)))
        throw std::invalid_argument("series inverse requires constant term exactly 1");
    // sigma = 1 - this has lowest degree >= 1, so N rounds of r = 1 + sigma*r
    // accumulate the full geometric sum within the truncation window.
    Series sigma = one(max_degree_) - *this;
    Series r = one(max_degree_);
    for (int n = 0; n < max_degree_; ++n) r = one(max_degree_) + sigma * r;
    return r;
}

Series Series::truncated(int lower_max_degree) const {
    Series out(lower_max_degree);
    for (const auto& [w, c] : terms_) out.add_term(w, c);
    return out;
}

Series Series::instantiated(const ParamAssignment& a) const {
    Series out(max_degree_);
    for (const auto& [w, c] : terms_) out.add_term(w, Coefficient(c.evaluate(a)));
    return out;
}

Series Series::substituted(const Param& target, const Coefficient& unit_value) const {
    Series out(max_degree_);
    for (const auto& [w, c] : terms_) out.add_term(w, c.substituted(target, unit_value));
    return out;
}

std::map<Bigrading, Series> Series::components(int m) const {
    std::map<Bigrading, Series> out;
    for (const auto& [w, c] : terms_) {
        auto [it, fresh] = out.try_emplace(bigrading_of(w, m), max_degree_);
        it->second.add_term(w, c);
    }
    return out;
}

void Series::collect_params(std::set<Param>& out) const {
    for (const auto& [w, c] : terms_) c.collect_params(out);
}

std::string Series::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.str();
        std::string body;
        if (cs == "1") {
            body = w.str();
        } else if (cs == "-1") {
            body = "-" + w.str();
        } else if (c.term_count() > 1) {
            body = "(" + cs + ")*" + w.str();
        } else {
            body = cs + "*" + w.str();
        }
        if (out.empty()) {
            out = body;
        } else if (body.front() == '-') {
            out += " - " + body.substr(1);
        } else {
            out += " + " + body;
        }
    }
    return out;
}

}  // namespace ncm
