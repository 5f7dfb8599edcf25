#include "towertab/polynomial.hpp"

#include <stdexcept>

namespace towertab {

Monomial Monomial::variable(int v, int exp) {
    if (v < 1) throw std::invalid_argument("variable indices are 1-based");
    if (exp < 0) throw std::invalid_argument("exponents must be non-negative");
    Monomial m;
    if (exp > 0) m.exps_[v] = exp;
    return m;
}

Monomial& Monomial::operator*=(const Monomial& rhs) {
    for (const auto& [v, e] : rhs.exps_) exps_[v] += e;
    return *this;
}

int Monomial::exponent(int v) const {
    auto it = exps_.find(v);
    return it == exps_.end() ? 0 : it->second;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : exps_) d += e;
    return d;
}

std::string Monomial::str() const {
    std::string out;
    for (const auto& [v, e] : exps_) {
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(v);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    auto ia = a.exponents().begin(), ea = a.exponents().end();
    auto ib = b.exponents().begin(), eb = b.exponents().end();
    while (ia != ea || ib != eb) {
        const int va = ia == ea ? 1 << 30 : ia->first;
        const int vb = ib == eb ? 1 << 30 : ib->first;
        if (va < vb) return true;   // a uses a smaller variable with positive exponent
        if (vb < va) return false;
        if (ia->second != ib->second) return ia->second > ib->second;
        ++ia, ++ib;
    }
    return false;
}

Polynomial Polynomial::one() {
    Polynomial p;
    p.add_term(Monomial{}, 1);
    return p;
}

void Polynomial::add_term(const Monomial& m, std::int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        std::int64_t sum = 0;
        if (__builtin_add_overflow(it->second, coeff, &sum))
            throw std::overflow_error("coefficient overflow");
        if (sum == 0)
            terms_.erase(it);
        else
            it->second = sum;
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

std::int64_t Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (c != 1)
            out += std::to_string(c) + (m.exponents().empty() ? "" : "*");
        else if (m.exponents().empty())
            out += "1";
        out += m.exponents().empty() ? "" : m.str();
    }
    return out;
}

Polynomial swap_variables(const Polynomial& p, int i, int j) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Monomial swapped;
        for (const auto& [v, e] : m.exponents()) {
            const int target = v == i ? j : v == j ? i : v;
            swapped *= Monomial::variable(target, e);
        }
        out.add_term(swapped, c);
    }
    return out;
}

}  // namespace towertab
