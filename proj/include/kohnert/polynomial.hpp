#pragma once

#include "kohnert/core.hpp"
#include "kohnert/tableau.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <span>
#include <string>
#include <vector>

namespace kohnert {

using Coefficient = boost::multiprecision::cpp_int;
using Exponent = std::vector<int>;

/// Sparse polynomial in x_1..x_n with integer coefficients.  The variable
/// count is part of the value; zero coefficients are never stored.
class Polynomial {
public:
    explicit Polynomial(int variables = 0);

    static Polynomial one(int variables);
    static Polynomial monomial(Exponent e, Coefficient c = 1);

    int variables() const noexcept { return n_; }
    const std::map<Exponent, Coefficient>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Coefficient coefficient(const Exponent& e) const;
    void add_term(const Exponent& e, const Coefficient& c);

    /// "x1^2*x2 + 2*x3", terms in decreasing lexicographic exponent order.
    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    int n_ = 0;
    std::map<Exponent, Coefficient> terms_;
};

Polynomial subtract(const Polynomial& p, const Polynomial& q);
Polynomial operator-(const Polynomial& p, const Polynomial& q);

/// Sum of x^wt over the given tableaux, in n variables.
Polynomial generating_polynomial(std::span<const LabeledDiagram> tableaux, int n);

Polynomial key_polynomial(const Composition& a);
Polynomial lock_polynomial(const Composition& a);

/// s_lambda(x_1..x_n) from semistandard Young tableaux.  lambda must be weakly
/// decreasing; trailing zeros are ignored.
Polynomial schur_polynomial(const Composition& lambda, int n);

bool is_symmetric(const Polynomial& p);
bool is_quasisymmetric(const Polynomial& p);
/// Every stored coefficient positive.  The zero polynomial qualifies.
bool is_monomial_positive(const Polynomial& p);

struct SymmetryClass {
    bool key_sym = false;
    bool key_qsym = false;
    bool lock_sym = false;
    bool lock_qsym = false;

    friend bool operator==(const SymmetryClass&, const SymmetryClass&) = default;
};

/// Shape-side characterization, without computing any polynomial.
SymmetryClass classify_symmetry(const Composition& a);

/// a = 0^{n-k} m^k with m, k > 0.
bool is_zeros_then_constant(const Composition& a);

} // namespace kohnert
