#pragma once

#include <string>
#include <vector>

#include "specfm/variables.hpp"

namespace specfm {

// Monomial orders used by the Groebner engine: lexicographic with a declared
// variable priority (highest first) and graded reverse lexicographic.
class MonomialOrder {
public:
    enum class Kind { Lex, GrevLex };

    static MonomialOrder lex(std::vector<Var> priority) {
        return MonomialOrder(Kind::Lex, std::move(priority));
    }
    static MonomialOrder grevlex(std::vector<Var> priority) {
        return MonomialOrder(Kind::GrevLex, std::move(priority));
    }

    // strict: a < b
    bool less(const Monomial& a, const Monomial& b) const;
    bool equal_keys(const Monomial& a, const Monomial& b) const { return a == b; }

    Kind kind() const { return kind_; }
    const std::vector<Var>& priority() const { return priority_; }
    bool covers(const VarSet& vars) const;
    std::string str() const;

private:
    MonomialOrder(Kind k, std::vector<Var> p) : kind_(k), priority_(std::move(p)) {}
    Kind kind_;
    std::vector<Var> priority_;
};

}  // namespace specfm
