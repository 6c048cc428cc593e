#include "kohnert/polynomial.hpp"

#include "kohnert/error.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace kohnert {

Polynomial::Polynomial(int variables) : n_(variables)
{
    if (variables < 0)
        throw InvalidInput("negative variable count");
}

Polynomial Polynomial::one(int variables)
{
    Polynomial p(variables);
    p.add_term(Exponent(static_cast<std::size_t>(variables), 0), 1);
    return p;
}

Polynomial Polynomial::monomial(Exponent e, Coefficient c)
{
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

Coefficient Polynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Coefficient(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Coefficient& c)
{
    if (static_cast<int>(e.size()) != n_)
        throw InvalidInput("exponent length does not match variable count");
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }))
        throw InvalidInput("negative exponent");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Coefficient mag = c < 0 ? Coefficient(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;

        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            mono << (any ? "*" : "") << 'x' << (i + 1);
            if (e[i] > 1)
                mono << '^' << e[i];
            any = true;
        }
        if (!any)
            os << mag;
        else if (mag == 1)
            os << mono.str();
        else
            os << mag << '*' << mono.str();
    }
    return os.str();
}

Polynomial subtract(const Polynomial& p, const Polynomial& q)
{
    if (p.variables() != q.variables())
        throw InvalidInput("subtract: polynomials have different variable counts");
    Polynomial out = p;
    for (const auto& [e, c] : q.terms())
        out.add_term(e, -c);
    return out;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return subtract(p, q); }

Polynomial generating_polynomial(std::span<const LabeledDiagram> tableaux, int n)
{
    Polynomial p(n);
    for (const LabeledDiagram& t : tableaux)
        p.add_term(weight_vector(t.diagram(), n), 1);
    return p;
}

Polynomial key_polynomial(const Composition& a)
{
    return generating_polynomial(enumerate_kkt(a), static_cast<int>(a.size()));
}

Polynomial lock_polynomial(const Composition& a)
{
    return generating_polynomial(enumerate_lkt(a), static_cast<int>(a.size()));
}

Polynomial schur_polynomial(const Composition& lambda, int n)
{
    std::vector<int> shape = lambda.vec();
    if (!std::is_sorted(shape.begin(), shape.end(), std::greater<>()))
        throw InvalidInput("schur_polynomial: shape " + lambda.to_string() + " is not a partition");
    while (!shape.empty() && shape.back() == 0)
        shape.pop_back();

    Polynomial p(n);
    if (static_cast<int>(shape.size()) > n)
        return p;

    // Fill row by row, top row of the English diagram first.
    std::vector<std::vector<int>> y(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r)
        y[r].assign(static_cast<std::size_t>(shape[r]), 0);
    Exponent counts(static_cast<std::size_t>(n), 0);

    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
        if (r == shape.size()) {
            p.add_term(counts, 1);
            return;
        }
        if (c == y[r].size()) {
            fill(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, y[r][c - 1]); // rows weakly increase
        if (r > 0)
            lo = std::max(lo, y[r - 1][c] + 1); // columns strictly increase
        for (int v = lo; v <= n; ++v) {
            y[r][c] = v;
            ++counts[static_cast<std::size_t>(v - 1)];
            fill(r, c + 1);
            --counts[static_cast<std::size_t>(v - 1)];
        }
    };
    fill(0, 0);
    return p;
}

bool is_symmetric(const Polynomial& p)
{
    const int n = p.variables();
    for (int i = 0; i + 1 < n; ++i)
        for (const auto& [e, c] : p.terms()) {
            Exponent s = e;
            std::swap(s[static_cast<std::size_t>(i)], s[static_cast<std::size_t>(i + 1)]);
            if (p.coefficient(s) != c)
                return false;
        }
    return true;
}

namespace {

// Calls f on every strictly increasing k-subset of {0..n-1}.
template <class F>
bool all_placements(int n, int k, F&& f)
{
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<bool(int, int)> rec = [&](int pos, int start) {
        if (pos == k)
            return f(idx);
        for (int v = start; v <= n - (k - pos); ++v) {
            idx[static_cast<std::size_t>(pos)] = v;
            if (!rec(pos + 1, v + 1))
                return false;
        }
        return true;
    };
    return rec(0, 0);
}

} // namespace

bool is_quasisymmetric(const Polynomial& p)
{
    const int n = p.variables();
    std::set<std::vector<int>> packed_seen;
    for (const auto& [e, c] : p.terms()) {
        std::vector<int> packed;
        for (int x : e)
            if (x != 0)
                packed.push_back(x);
        if (!packed_seen.insert(packed).second)
            continue;
        const Coefficient expected = c;
        const int k = static_cast<int>(packed.size());
        bool ok = all_placements(n, k, [&](const std::vector<int>& idx) {
            Exponent placed(static_cast<std::size_t>(n), 0);
            for (int j = 0; j < k; ++j)
                placed[static_cast<std::size_t>(idx[static_cast<std::size_t>(j)])] = packed[static_cast<std::size_t>(j)];
            return p.coefficient(placed) == expected;
        });
        if (!ok)
            return false;
    }
    return true;
}

bool is_monomial_positive(const Polynomial& p)
{
    return std::all_of(p.terms().begin(), p.terms().end(), [](const auto& t) { return t.second > 0; });
}

bool is_zeros_then_constant(const Composition& a)
{
    std::size_t i = 0;
    while (i < a.size() && a[i] == 0)
        ++i;
    if (i == a.size())
        return false;
    for (std::size_t j = i; j < a.size(); ++j)
        if (a[j] != a[i])
            return false;
    return true;
}

SymmetryClass classify_symmetry(const Composition& a)
{
    SymmetryClass s;
    s.key_sym = a.is_weakly_increasing();
    s.key_qsym = !a.has_zero_part() || a.is_weakly_increasing();
    s.lock_qsym = s.key_qsym;
    s.lock_sym = a.is_all_zero() || is_zeros_then_constant(a);
    return s;
}

} // namespace kohnert
