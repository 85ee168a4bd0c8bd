#include "ncm/matrix_class.hpp"

#include <stdexcept>

namespace ncm {

MatrixClass MatrixClass::super(std::vector<int> gamma) {
    if (gamma.empty()) throw std::invalid_argument("super class needs a parity vector");
    for (int g : gamma)
        if (g != 0 && g != 1) throw std::invalid_argument("parity entries must be 0 or 1");
    return MatrixClass(Kind::Super, std::move(gamma));
}

bool MatrixClass::monomial_rewrite() const {
    switch (kind_) {
        case Kind::Commutative:
        case Kind::CartierFoata:
        case Kind::QCartierFoata:
        case Kind::QijCartierFoata:
        case Kind::Super:
            return true;
        case Kind::RightQuantum:
        case Kind::QRightQuantum:
        case Kind::QijRightQuantum:
            return false;
    }
    return false;
}

bool MatrixClass::uses_single_q() const {
    return kind_ == Kind::QCartierFoata || kind_ == Kind::QRightQuantum;
}

bool MatrixClass::uses_qij() const {
    return kind_ == Kind::QijCartierFoata || kind_ == Kind::QijRightQuantum;
}

Coefficient MatrixClass::q_symbol(int i, int j) const {
    if (i < 1 || j < 1) throw std::invalid_argument("heights must be >= 1");
    if (i == j) return Coefficient(1);
    if (i > j) return q_symbol(j, i).unit_inverse();
    switch (kind_) {
        case Kind::QCartierFoata:
        case Kind::QRightQuantum:
            return Coefficient::monomial(Param::q(), 1);
        case Kind::QijCartierFoata:
        case Kind::QijRightQuantum:
            return Coefficient::monomial(Param::qij(i, j), 1);
        case Kind::Super: {
            if (j > static_cast<int>(gamma_.size()))
                throw std::invalid_argument("height beyond the parity vector");
            int s = gamma_[static_cast<size_t>(i - 1)] * gamma_[static_cast<size_t>(j - 1)];
            return Coefficient(Rational(s ? -1 : 1));
        }
        default:
            return Coefficient(1);
    }
}

Coefficient MatrixClass::exchange_weight(const Letter& left, const Letter& right) const {
    if (!monomial_rewrite())
        throw std::invalid_argument("class " + name() + " has no letter-exchange rewrite");
    if (left.row == right.row && kind_ != Kind::Commutative)
        throw std::invalid_argument("no exchange between letters with equal starting height");
    return q_symbol(right.row, left.row) * q_symbol(right.col, left.col).unit_inverse();
}

std::vector<Param> MatrixClass::q_params(int m) const {
    std::vector<Param> out;
    if (uses_single_q()) out.push_back(Param::q());
    if (uses_qij())
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) out.push_back(Param::qij(i, j));
    return out;
}

std::string MatrixClass::name() const {
    switch (kind_) {
        case Kind::Commutative:
            return "commutative";
        case Kind::CartierFoata:
            return "cartier-foata";
        case Kind::RightQuantum:
            return "right-quantum";
        case Kind::QCartierFoata:
            return "q-cartier-foata";
        case Kind::QRightQuantum:
            return "q-right-quantum";
        case Kind::QijCartierFoata:
            return "qij-cartier-foata";
        case Kind::QijRightQuantum:
            return "qij-right-quantum";
        case Kind::Super: {
            std::string out = "super:";
            for (int g : gamma_) out += static_cast<char>('0' + g);
            return out;
        }
    }
    return "?";
}

MatrixClass MatrixClass::parse(std::string_view name) {
    if (name == "commutative") return commutative();
    if (name == "cartier-foata") return cartier_foata();
    if (name == "right-quantum") return right_quantum();
    if (name == "q-cartier-foata") return q_cartier_foata();
    if (name == "q-right-quantum") return q_right_quantum();
    if (name == "qij-cartier-foata") return qij_cartier_foata();
    if (name == "qij-right-quantum") return qij_right_quantum();
    if (name.substr(0, 6) == "super:") {
        std::vector<int> gamma;
        for (char c : name.substr(6)) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("parity digits must be 0/1 in " + std::string(name));
            gamma.push_back(c - '0');
        }
        return super(std::move(gamma));
    }
    throw std::invalid_argument("unknown matrix class: " + std::string(name));
}

}  // namespace ncm
