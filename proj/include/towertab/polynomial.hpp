#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace towertab {

// Sparse monomial in x1, x2, ...: variable index -> positive exponent.
class Monomial {
public:
    Monomial() = default;  // the monomial 1
    static Monomial variable(int v, int exp = 1);

    Monomial& operator*=(const Monomial& rhs);
    friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

    int exponent(int v) const;
    int degree() const;
    const std::map<int, int>& exponents() const { return exps_; }

    std::string str() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::map<int, int> exps_;
};

// Graded order, then within a degree the monomial with the larger exponent
// at the first differing variable comes first (x1^2*x2 before x1*x2^2).
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Polynomial with 64-bit integer coefficients; addition detects overflow and
// throws std::overflow_error.  Terms iterate in MonomialOrder, which is also
// the printed order.
class Polynomial {
public:
    Polynomial() = default;  // zero
    static Polynomial one();

    void add_term(const Monomial& m, std::int64_t coeff);
    Polynomial& operator+=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    std::int64_t coefficient(const Monomial& m) const;
    const std::map<Monomial, std::int64_t, MonomialOrder>& terms() const { return terms_; }

    std::string str() const;  // e.g. "x1^2*x2 + x1*x2^2"; zero prints "0"

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::map<Monomial, std::int64_t, MonomialOrder> terms_;
};

// Exchange the variables x_i and x_j.
Polynomial swap_variables(const Polynomial& p, int i, int j);

}  // namespace towertab
