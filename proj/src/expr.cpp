#include "mfkit/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "mfkit/error.hpp"

namespace mfkit {

namespace {

struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const { return grlex_before(a, b); }
};

// Merges like terms into their first position and drops zeros.
class WrittenAccumulator {
public:
    void add(const Monomial& m)
    {
        if (m.is_zero()) {
            return;
        }
        auto [it, inserted] = index_.try_emplace(m.exponents, terms_.size());
        if (inserted) {
            terms_.push_back(m);
        } else {
            terms_[it->second].coefficient += m.coefficient;
        }
    }

    WrittenSum take()
    {
        WrittenSum out;
        for (auto& t : terms_) {
            if (!t.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        return out;
    }

private:
    std::vector<Monomial> terms_;
    std::map<Exponents, std::size_t, GrlexLess> index_;
};

void append_written(WrittenAccumulator& acc, const Term& term)
{
    if (const auto* m = std::get_if<MonomialTerm>(&term)) {
        acc.add(m->monomial);
        return;
    }
    const auto& factors = std::get<ProductTerm>(term).factors;
    std::vector<Monomial> current{Monomial::constant(1)};
    for (const auto& factor : factors) {
        std::vector<Monomial> next;
        next.reserve(current.size() * factor.size());
        for (const auto& b : factor) {
            for (const auto& a : current) {
                next.push_back(a * b);
            }
        }
        current = std::move(next);
    }
    for (const auto& m : current) {
        acc.add(m);
    }
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    std::vector<Term> parse_top()
    {
        skip_ws();
        if (at_end()) {
            throw Error(ErrorCode::EmptyInput, "empty expression");
        }
        auto terms = parse_sum();
        skip_ws();
        if (!at_end()) {
            fail(peek() == ')' ? "unbalanced ')'" : "unexpected character '" + std::string(1, peek()) + "'");
        }
        return terms;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool starts_factor()
    {
        skip_ws();
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || (c >= 'a' && c <= 'z') || c == '(' ||
               (c >= 'A' && c <= 'Z');
    }

    std::vector<Term> parse_sum()
    {
        std::vector<Term> terms;
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        while (true) {
            if (auto t = parse_term(negative)) {
                terms.push_back(std::move(*t));
            }
            skip_ws();
            if (peek() != '+' && peek() != '-') {
                break;
            }
            negative = peek() == '-';
            ++pos_;
        }
        return terms;
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    unsigned parse_power()
    {
        skip_ws();
        if (peek() != '^') {
            return 1;
        }
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const std::string d = digits();
        if (d.empty()) {
            fail("expected an integer exponent after '^'");
        }
        if (d.size() > 5 || std::stoul(d) > 65535) {
            pos_ = at;
            fail("exponent " + d + " is too large");
        }
        return static_cast<unsigned>(std::stoul(d));
    }

    Rational parse_number()
    {
        const std::string num = digits();
        skip_ws();
        if (peek() != '/') {
            return Rational(mpz_class(num));
        }
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        const std::string den = digits();
        if (den.empty()) {
            fail("expected a denominator after '/'");
        }
        mpz_class d(den);
        if (d == 0) {
            pos_ = at;
            fail("zero denominator");
        }
        Rational r(mpz_class(num), d);
        r.canonicalize();
        return r;
    }

    // Either a single monomial atom or a parenthesised sum with its power.
    struct Parsed {
        std::optional<Monomial> atom;
        WrittenSum group;
        unsigned power = 1;
    };

    Parsed parse_factor()
    {
        skip_ws();
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return {Monomial::constant(parse_number()), {}, 1};
        }
        if (c >= 'a' && c <= 'z') {
            ++pos_;
            return {Monomial::variable(c, parse_power()), {}, 1};
        }
        if (c >= 'A' && c <= 'Z') {
            fail("variables are lowercase letters a-z");
        }
        if (c == '(') {
            const std::size_t open = pos_;
            ++pos_;
            skip_ws();
            if (peek() == ')') {
                fail("empty parentheses");
            }
            const auto inner = parse_sum();
            skip_ws();
            if (peek() != ')') {
                fail(at_end() ? "missing ')'" : "expected ')'");
            }
            ++pos_;
            WrittenAccumulator acc;
            for (const auto& t : inner) {
                append_written(acc, t);
            }
            WrittenSum group = acc.take();
            if (group.empty()) {
                pos_ = open;
                fail("parenthesised factor is zero");
            }
            return {std::nullopt, std::move(group), parse_power()};
        }
        if (at_end()) {
            fail("unexpected end of input, expected a number, variable or '('");
        }
        fail("expected a number, variable or '(' but found '" + std::string(1, c) + "'");
    }

    std::optional<Term> parse_term(bool negative)
    {
        if (!starts_factor()) {
            fail(at_end() ? "unexpected end of input, expected a term" : "expected a term");
        }
        Monomial acc = Monomial::constant(1);
        bool have_atoms = false;
        std::size_t group_copies = 0;
        std::vector<WrittenSum> factors;
        auto flush_atoms = [&] {
            if (have_atoms) {
                factors.push_back({acc});
                acc = Monomial::constant(1);
                have_atoms = false;
            }
        };
        const std::size_t start = pos_;
        while (true) {
            Parsed p = parse_factor();
            if (p.atom) {
                acc = acc * *p.atom;
                have_atoms = true;
            } else {
                flush_atoms();
                for (unsigned k = 0; k < p.power; ++k) {
                    factors.push_back(p.group);
                }
                group_copies += p.power;
            }
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                if (!starts_factor()) {
                    fail("expected a factor after '*'");
                }
                continue;
            }
            if (!starts_factor()) {
                break;
            }
        }
        if (group_copies == 0) {
            // (g)^0 leaves only atoms; fold them back into one monomial.
            for (const auto& f : factors) {
                if (!f.empty()) {
                    acc = acc * f.front();
                }
            }
            if (negative) {
                acc.coefficient = -acc.coefficient;
            }
            if (acc.is_zero()) {
                return std::nullopt;
            }
            return MonomialTerm{acc};
        }
        flush_atoms();
        for (const auto& f : factors) {
            if (f.size() == 1 && f.front().is_zero()) {
                pos_ = start;
                fail("product has a zero factor");
            }
        }
        if (negative) {
            for (auto& m : factors.front()) {
                m.coefficient = -m.coefficient;
            }
        }
        return ProductTerm{std::move(factors)};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Matches e == (a + b)^2 or (a - b)^2 for monomials a, b with unit coefficients.
bool is_perfect_square(const Polynomial& e)
{
    if (e.monomial_count() != 3) {
        return false;
    }
    std::vector<Monomial> roots;
    for (const auto& t : e.terms()) {
        if (t.coefficient != 1) {
            continue;
        }
        Exponents half;
        bool even = true;
        for (int v = 0; v < kNumVariables; ++v) {
            if (t.exponents[v] % 2 != 0) {
                even = false;
                break;
            }
            half.set(v, t.exponents[v] / 2U);
        }
        if (even) {
            roots.push_back({Rational(1), half});
        }
    }
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (std::size_t j = i + 1; j < roots.size(); ++j) {
            const Polynomial a(roots[i]);
            const Polynomial b(roots[j]);
            if ((a + b) * (a + b) == e || (a - b) * (a - b) == e) {
                return true;
            }
        }
    }
    return false;
}

std::string format_product(const ProductTerm& p)
{
    std::string out;
    for (const auto& f : p.factors) {
        out += '(';
        out += format_sum(f);
        out += ')';
    }
    return out;
}

}  // namespace

Polynomial to_polynomial(std::span<const Monomial> sum)
{
    return Polynomial::from_terms({sum.begin(), sum.end()});
}

std::string format_sum(std::span<const Monomial> sum)
{
    if (sum.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < sum.size(); ++i) {
        std::string m = to_string(sum[i]);
        if (i > 0 && m.front() != '-') {
            out += '+';
        }
        out += m;
    }
    return out;
}

std::vector<Monomial> SummandForm::monomial_terms() const
{
    std::vector<Monomial> out;
    for (const auto& t : terms) {
        if (const auto* m = std::get_if<MonomialTerm>(&t)) {
            out.push_back(m->monomial);
        }
    }
    return out;
}

std::vector<const ProductTerm*> SummandForm::product_terms() const
{
    std::vector<const ProductTerm*> out;
    for (const auto& t : terms) {
        if (const auto* p = std::get_if<ProductTerm>(&t)) {
            out.push_back(p);
        }
    }
    return out;
}

std::size_t SummandForm::s() const
{
    return static_cast<std::size_t>(
        std::count_if(terms.begin(), terms.end(), [](const Term& t) { return std::holds_alternative<MonomialTerm>(t); }));
}

std::size_t SummandForm::l() const
{
    return terms.size() - s();
}

SummandForm parse(std::string_view text)
{
    SummandForm sf{Parser(text).parse_top()};
    if (sf.terms.empty() || expand(sf).is_zero()) {
        throw Error(ErrorCode::ZeroInput, "expression is identically zero");
    }
    return sf;
}

Polynomial parse_polynomial(std::string_view text)
{
    SummandForm sf{Parser(text).parse_top()};
    return expand(sf);
}

std::string to_string(const SummandForm& sf)
{
    std::string out;
    for (std::size_t i = 0; i < sf.terms.size(); ++i) {
        if (const auto* m = std::get_if<MonomialTerm>(&sf.terms[i])) {
            std::string s = to_string(m->monomial);
            if (i > 0) {
                out += s.front() == '-' ? " - " : " + ";
                if (s.front() == '-') {
                    s.erase(0, 1);
                }
            }
            out += s;
        } else {
            if (i > 0) {
                out += " + ";
            }
            out += format_product(std::get<ProductTerm>(sf.terms[i]));
        }
    }
    return out;
}

Polynomial expand(const ProductTerm& term)
{
    Polynomial p(1);
    for (const auto& f : term.factors) {
        p *= to_polynomial(f);
    }
    return p;
}

Polynomial expand(const SummandForm& sf)
{
    Polynomial out;
    for (const auto& t : sf.terms) {
        if (const auto* m = std::get_if<MonomialTerm>(&t)) {
            out += Polynomial(m->monomial);
        } else {
            out += expand(std::get<ProductTerm>(t));
        }
    }
    return out;
}

WrittenSum expand_written(const SummandForm& sf)
{
    WrittenAccumulator acc;
    for (const auto& t : sf.terms) {
        append_written(acc, t);
    }
    return acc.take();
}

const char* to_string(FormKind kind)
{
    switch (kind) {
    case FormKind::Plain: return "plain";
    case FormKind::SimpleSummandReduced: return "simple-summand-reduced";
    case FormKind::SummandReduced: return "summand-reduced";
    }
    return "plain";
}

Classification classify(const SummandForm& sf)
{
    Classification c;
    const auto products = sf.product_terms();
    const std::size_t s = sf.s();

    if (s == 0 && products.size() < 2) {
        c.reasons.push_back("without monomial terms at least two product terms are needed");
    } else if (s > 0 && products.empty()) {
        c.reasons.push_back("no product term");
    }
    bool has_multi_factor = false;
    bool all_two_factor = true;
    bool has_pq6 = false;
    for (std::size_t j = 0; j < products.size(); ++j) {
        const auto& factors = products[j]->factors;
        std::size_t sum = 0;
        for (const auto& f : factors) {
            sum += f.size();
        }
        const Polynomial e = expand(*products[j]);
        const std::string label = format_product(*products[j]);
        if (e.monomial_count() <= sum) {
            c.reasons.push_back(label + " expands to " + std::to_string(e.monomial_count()) +
                                " monomials, not more than the " + std::to_string(sum) + " written");
        }
        has_multi_factor = has_multi_factor || factors.size() >= 2;
        all_two_factor = all_two_factor && factors.size() == 2;
        if (factors.size() == 2) {
            has_pq6 = has_pq6 || factors[0].size() * factors[1].size() >= 6;
            const bool unit_pair = e.monomial_count() == 2 &&
                                   std::all_of(e.terms().begin(), e.terms().end(), [](const Monomial& m) {
                                       return abs(m.coefficient) == 1;
                                   });
            if (unit_pair) {
                c.lints.push_back(label + " expands to " + e.to_string() + "; write it expanded");
            } else if (is_perfect_square(e)) {
                c.lints.push_back(label + " is a perfect square " + e.to_string() + "; write it expanded");
            }
        }
    }
    if (!products.empty() && !has_multi_factor) {
        c.reasons.push_back("no product term has two or more factors");
    }
    if (!c.reasons.empty()) {
        c.kind = FormKind::Plain;
        return c;
    }
    const bool simple = sf.terms.size() >= 2 && all_two_factor && has_pq6;
    c.kind = simple ? FormKind::SimpleSummandReduced : FormKind::SummandReduced;
    return c;
}

SizePrediction predict_sizes(const SummandForm& sf)
{
    SizePrediction p;
    const std::size_t s = sf.s();
    long sum_all = 0;
    std::size_t prod_total = 0;
    for (const ProductTerm* t : sf.product_terms()) {
        long sum = 0;
        std::size_t prod = 1;
        for (const auto& f : t->factors) {
            sum += static_cast<long>(f.size());
            prod *= f.size();
        }
        sum_all += sum;
        prod_total += prod;
        p.theorem_ratio_exp += static_cast<long>(prod) - sum;
    }
    p.expanded_terms = expand(sf).monomial_count();
    p.no_cancel_terms = s + prod_total;
    p.standard_exp = static_cast<long>(p.expanded_terms) - 1;
    p.improved_exp = sum_all + static_cast<long>(s) - 1;
    p.cancellation = p.expanded_terms != p.no_cancel_terms;
    return p;
}

std::string pow2_string(long e)
{
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? "1/" + v.get_str() : v.get_str();
}

}  // namespace mfkit
