#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ncm/coefficient.hpp"
#include "ncm/word.hpp"

namespace ncm {

// The eight families of quadratic relations between the letters a{ij}.  A
// "monomial rewrite" class is one whose relations only exchange two letters
// against a unit factor, so words have a canonical sorted normal form; the
// right-quantum families mix four words per relation and need the full ideal
// machinery instead.
class MatrixClass {
public:
    enum class Kind {
        Commutative,
        CartierFoata,
        RightQuantum,
        QCartierFoata,
        QRightQuantum,
        QijCartierFoata,
        QijRightQuantum,
        Super,
    };

    static MatrixClass commutative() { return MatrixClass(Kind::Commutative); }
    static MatrixClass cartier_foata() { return MatrixClass(Kind::CartierFoata); }
    static MatrixClass right_quantum() { return MatrixClass(Kind::RightQuantum); }
    static MatrixClass q_cartier_foata() { return MatrixClass(Kind::QCartierFoata); }
    static MatrixClass q_right_quantum() { return MatrixClass(Kind::QRightQuantum); }
    static MatrixClass qij_cartier_foata() { return MatrixClass(Kind::QijCartierFoata); }
    static MatrixClass qij_right_quantum() { return MatrixClass(Kind::QijRightQuantum); }
    static MatrixClass super(std::vector<int> gamma);  // entries 0/1, one per row

    Kind kind() const { return kind_; }
    const std::vector<int>& gamma() const { return gamma_; }

    bool monomial_rewrite() const;
    bool uses_single_q() const;
    bool uses_qij() const;

    // Extended deformation symbol between heights: 1 on the diagonal, the
    // class's q-value for i < j, and its inverse for i > j.  For the super
    // class the value is the sign (-1)^{gamma_i gamma_j}, its own inverse.
    Coefficient q_symbol(int i, int j) const;

    // Weight W such that (... L R ...) = W * (... R L ...) modulo the ideal,
    // for the letter exchanges a monomial-rewrite class permits.  Throws for
    // the right-quantum families.
    Coefficient exchange_weight(const Letter& left, const Letter& right) const;

    // Closed parameter universe for verification at matrix size m.
    std::vector<Param> q_params(int m) const;

    std::string name() const;  // CLI spelling, e.g. "qij-cartier-foata", "super:11"
    static MatrixClass parse(std::string_view name);

    bool operator==(const MatrixClass&) const = default;

private:
    explicit MatrixClass(Kind kind, std::vector<int> gamma = {})
        : kind_(kind), gamma_(std::move(gamma)) {}

    Kind kind_;
    std::vector<int> gamma_;
};

}  // namespace ncm
