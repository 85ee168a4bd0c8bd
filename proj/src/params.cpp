#include "ncm/params.hpp"

#include <stdexcept>

namespace ncm {

namespace {

std::string index_pair(int i, int j) {
    if (i <= 9 && j <= 9)
        return std::to_string(i) + std::to_string(j);
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

Param Param::qij(int i, int j) {
    if (i < 1 || j <= i)
        throw std::invalid_argument("q{ij} parameter requires 1 <= i < j");
    return {ParamKind::Qij, i, j};
}

Param Param::qi(int i) {
    if (i < 1) throw std::invalid_argument("q{i} parameter requires i >= 1");
    return {ParamKind::Qi, i, 0};
}

Param Param::bij(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("b{ij} parameter requires i, j >= 1");
    return {ParamKind::Bij, i, j};
}

std::string to_string(const Param& p) {
    switch (p.kind) {
        case ParamKind::Q:
            return "q";
        case ParamKind::Qij:
            return "q" + index_pair(p.i, p.j);
        case ParamKind::Qi:
            // single digits read unambiguously next to the q{ij} form ("q12"
            // is always a pair because verification never reaches m >= 10)
            return p.i <= 9 ? "q" + std::to_string(p.i) : "q(" + std::to_string(p.i) + ")";
        case ParamKind::Bij:
            return "b" + index_pair(p.i, p.j);
    }
    return "?";
}

void ParamAssignment::set(const Param& p, const Rational& value) {
    if (value == 0)
        throw std::invalid_argument("parameter " + to_string(p) + " assigned zero");
    values_[p] = value;
}

const Rational* ParamAssignment::find(const Param& p) const {
    auto it = values_.find(p);
    return it == values_.end() ? nullptr : &it->second;
}

const Rational& ParamAssignment::at(const Param& p) const {
    if (const Rational* v = find(p)) return *v;
    throw std::invalid_argument("parameter " + to_string(p) + " is not assigned");
}

std::string ParamAssignment::str() const {
    std::string out;
    for (const auto& [p, v] : values_) {
        if (!out.empty()) out += " ";
        out += to_string(p) + "=" + to_string(v);
    }
    return out;
}

const std::vector<Rational>& default_point_pool() {
    static const std::vector<Rational> pool = {
        Rational(2), Rational(3, 5), Rational(7, 3), Rational(11, 4), Rational(5)};
    return pool;
}

std::vector<ParamAssignment> rotated_assignments(const std::vector<Param>& params, int rounds) {
    if (rounds < 1) throw std::invalid_argument("need at least one instantiation round");
    const auto& pool = default_point_pool();
    std::vector<ParamAssignment> out;
    out.reserve(static_cast<size_t>(rounds));
    for (int r = 0; r < rounds; ++r) {
        ParamAssignment a;
        for (size_t idx = 0; idx < params.size(); ++idx)
            a.set(params[idx], pool[(idx + static_cast<size_t>(r)) % pool.size()]);
        out.push_back(std::move(a));
    }
    return out;
}

}  // namespace ncm
