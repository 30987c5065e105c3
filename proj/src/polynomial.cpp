#include "mfkit/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "mfkit/error.hpp"

namespace mfkit {

namespace {

constexpr unsigned kMaxExponent = std::numeric_limits<Exponents::value_type>::max();

int var_index(char var)
{
    if (var < 'a' || var > 'z') {
        throw Error(ErrorCode::Parse, std::string("variable must be a lowercase letter, got '") + var + "'");
    }
    return var - 'a';
}

void append_variables(std::string& out, const Exponents& e)
{
    for (int v = 0; v < kNumVariables; ++v) {
        if (e[v] == 0) {
            continue;
        }
        out += static_cast<char>('a' + v);
        if (e[v] > 1) {
            out += '^';
            out += std::to_string(e[v]);
        }
    }
}

// Magnitude of a monomial without its sign.
void append_unsigned(std::string& out, const Monomial& m)
{
    Rational mag = abs(m.coefficient);
    if (m.exponents.is_constant()) {
        out += mag.get_str();
        return;
    }
    if (mag != 1) {
        out += mag.get_str();
    }
    append_variables(out, m.exponents);
}

}  // namespace

Exponents Exponents::of(char var, unsigned power)
{
    Exponents e;
    e.set(var_index(var), power);
    return e;
}

void Exponents::set(int var, unsigned power)
{
    if (power > kMaxExponent) {
        throw Error(ErrorCode::Overflow, "exponent " + std::to_string(power) + " exceeds " + std::to_string(kMaxExponent));
    }
    degree_ = degree_ - e_[static_cast<std::size_t>(var)] + power;
    e_[static_cast<std::size_t>(var)] = static_cast<value_type>(power);
}

int Exponents::num_variables() const
{
    return static_cast<int>(std::count_if(e_.begin(), e_.end(), [](value_type x) { return x != 0; }));
}

int Exponents::first_variable() const
{
    for (int v = 0; v < kNumVariables; ++v) {
        if (e_[static_cast<std::size_t>(v)] != 0) {
            return v;
        }
    }
    return -1;
}

Exponents Exponents::operator*(const Exponents& other) const
{
    Exponents r;
    for (std::size_t v = 0; v < e_.size(); ++v) {
        const unsigned sum = unsigned{e_[v]} + other.e_[v];
        if (sum > kMaxExponent) {
            throw Error(ErrorCode::Overflow, "exponent overflow in monomial product");
        }
        r.e_[v] = static_cast<value_type>(sum);
    }
    r.degree_ = degree_ + other.degree_;
    return r;
}

bool grlex_before(const Exponents& a, const Exponents& b)
{
    if (a.degree() != b.degree()) {
        return a.degree() > b.degree();
    }
    for (int v = 0; v < kNumVariables; ++v) {
        if (a[v] != b[v]) {
            return a[v] > b[v];
        }
    }
    return false;
}

Monomial Monomial::variable(char var, unsigned power, const Rational& c)
{
    return {c, Exponents::of(var, power)};
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    return {a.coefficient * b.coefficient, a.exponents * b.exponents};
}

Polynomial::Polynomial(const Monomial& m)
{
    if (!m.is_zero()) {
        terms_.push_back(m);
    }
}

Polynomial::Polynomial(long c) : Polynomial(Monomial::constant(Rational(c))) {}

Polynomial::Polynomial(const Rational& c) : Polynomial(Monomial::constant(c)) {}

Polynomial Polynomial::from_terms(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const Monomial& a, const Monomial& b) { return grlex_before(a.exponents, b.exponents); });
    Polynomial p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exponents == t.exponents) {
            p.terms_.back().coefficient += t.coefficient;
            if (sgn(p.terms_.back().coefficient) == 0) {
                p.terms_.pop_back();
            }
        } else if (!t.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const bool negative = sgn(terms_[i].coefficient) < 0;
        if (negative) {
            out += '-';
        } else if (i > 0) {
            out += '+';
        }
        append_unsigned(out, terms_[i]);
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        if (a->exponents == b->exponents) {
            Rational c = a->coefficient + b->coefficient;
            if (sgn(c) != 0) {
                merged.push_back({std::move(c), a->exponents});
            }
            ++a;
            ++b;
        } else if (grlex_before(a->exponents, b->exponents)) {
            merged.push_back(std::move(*a++));
        } else {
            merged.push_back(*b++);
        }
    }
    std::move(a, terms_.end(), std::back_inserter(merged));
    std::copy(b, other.terms_.end(), std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    return *this += -other;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    *this = *this * other;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    std::pair<const Polynomial*, const Polynomial*> pair{&a, &b};
    return sum_of_products(std::span(&pair, 1));
}

Polynomial operator-(const Polynomial& p)
{
    Polynomial r = p;
    for (auto& t : r.terms_) {
        t.coefficient = -t.coefficient;
    }
    return r;
}

Polynomial sum_of_products(std::span<const std::pair<const Polynomial*, const Polynomial*>> pairs)
{
    std::vector<Monomial> terms;
    std::size_t total = 0;
    for (const auto& [a, b] : pairs) {
        total += a->monomial_count() * b->monomial_count();
    }
    if (total == 0) {
        return {};
    }
    terms.reserve(total);
    for (const auto& [a, b] : pairs) {
        for (const auto& s : a->terms()) {
            for (const auto& t : b->terms()) {
                terms.push_back(s * t);
            }
        }
    }
    return Polynomial::from_terms(std::move(terms));
}

std::size_t monomial_count(const Polynomial& p)
{
    return p.monomial_count();
}

std::pair<Monomial, Monomial> leading_split(const Monomial& m)
{
    if (m.is_zero()) {
        throw Error(ErrorCode::UndefinedSplit, "cannot split the zero monomial");
    }
    const int first = m.exponents.first_variable();
    if (first < 0) {
        return {m, Monomial::constant(1)};
    }
    Exponents g;
    Exponents h = m.exponents;
    const unsigned power = m.exponents[first];
    if (m.exponents.num_variables() == 1 && power >= 2) {
        g.set(first, power / 2);
        h.set(first, power - power / 2);
    } else {
        g.set(first, power);
        h.set(first, 0);
    }
    return {{m.coefficient, g}, {Rational(1), h}};
}

std::string to_string(const Monomial& m)
{
    std::string out;
    if (sgn(m.coefficient) < 0) {
        out += '-';
    }
    append_unsigned(out, m);
    return out;
}

}  // namespace mfkit
