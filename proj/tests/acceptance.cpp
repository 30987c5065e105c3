// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mfkit/error.hpp"
#include "mfkit/reducer.hpp"
#include "mfkit/tensor_ops.hpp"
#include "support.hpp"

using namespace mfkit;
using testing_support::M;
using testing_support::P;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failed sub-checks for one criterion.
class Checks {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            failures_.push_back(what);
        }
    }

    // body runs once; fails if it takes longer than limit seconds
    template <typename F>
    void timed(const std::string& what, double limit, F&& body)
    {
        const auto t0 = Clock::now();
        body();
        const double s = seconds_since(t0);
        std::ostringstream msg;
        msg << what << " took " << s << " s (limit " << limit << " s)";
        expect(s < limit, msg.str());
    }

    void note(const std::string& text) { notes_.push_back(text); }

    [[nodiscard]] bool ok() const { return failures_.empty(); }
    [[nodiscard]] const std::vector<std::string>& failures() const { return failures_; }
    [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }

private:
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

MatrixFactorization standard(std::initializer_list<const char*> monomials)
{
    std::vector<Monomial> terms;
    for (const char* m : monomials) {
        terms.push_back(P(m).terms()[0]);
    }
    return standard_method(std::span<const Monomial>(terms));
}

Morphism scalar_morphism(const MatrixFactorization& x, const Polynomial& c)
{
    return morph_new(x, x, scalar_mat(c, x.size()), scalar_mat(c, x.size()));
}

Morphism shuffle_morphism(const MatrixFactorization& x, const MatrixFactorization& y, int variant)
{
    const PolyMatrix p = commutativity_witness(x, y, variant).to_matrix();
    return morph_new(mult_tensor(x, y, variant), mult_tensor(y, x, variant), p, p);
}

const char* kExampleOne = "xy + (xy+x^2z+yz^2)(x^2+z^2)";
const char* kExampleTwo = "x^3y^2 + (xy+x^2z+yz^2)(xz+y^2+y^2z)";
const char* kThreeTerm = "xy+(xy+x^2z+yz^2)(x^2+z^2)+(yz+xy^2+x^2)(x^3z^2+yx+y^2)";

void x2_plus_1_fixture(Checks& c)
{
    c.timed("x^2+1 fixture", 0.1, [&] {
        const auto x = standard({"x^2", "1"});
        c.expect(x.phi() == M({{"x", "-1"}, {"1", "x"}}), "phi differs");
        c.expect(x.psi() == M({{"x", "1"}, {"-1", "x"}}), "psi differs");
        c.expect(x.phi() * x.psi() == scalar_mat(P("x^2+1"), 2), "phi*psi != (x^2+1)I");
        c.expect(x.psi() * x.phi() == scalar_mat(P("x^2+1"), 2), "psi*phi != (x^2+1)I");
    });
}

void golden_fixtures(Checks& c)
{
    c.timed("M", 0.1, [&] {
        const auto m = standard({"x^2", "z^2"});
        c.expect(m.phi() == M({{"x", "-z"}, {"z", "x"}}) && m.psi() == M({{"x", "z"}, {"-z", "x"}}), "M differs");
    });
    c.timed("P", 0.1, [&] {
        const auto p = standard({"xy", "x^2z", "yz^2"});
        c.expect(p.phi() == M({{"x", "-x^2", "-y", "0"}, {"z", "y", "0", "-y"}, {"z^2", "0", "y", "x^2"},
                               {"0", "z^2", "-z", "x"}}) &&
                     p.psi() == M({{"y", "x^2", "y", "0"}, {"-z", "x", "0", "y"}, {"-z^2", "0", "x", "-x^2"},
                                   {"0", "-z^2", "z", "y"}}),
                 "P differs");
    });
    c.timed("N", 0.1, [&] {
        const auto n = standard({"xz", "y^2", "y^2z"});
        c.expect(n.phi() == M({{"x", "-y", "-y^2", "0"}, {"y", "z", "0", "-y^2"}, {"z", "0", "z", "y"},
                               {"0", "z", "-y", "x"}}) &&
                     n.psi() == M({{"z", "y", "y^2", "0"}, {"-y", "x", "0", "y^2"}, {"-z", "0", "x", "-y"},
                                   {"0", "-z", "y", "z"}}),
                 "N differs");
    });
}

void mult_tensor_fixtures(Checks& c)
{
    const auto x = one_by_one(P("x"), P("x^2"));
    const auto y = mult_tensor(x, one_by_one(P("y^2"), P("y^3")));
    c.expect(y.phi() == scalar_mat(P("xy^2"), 2) && y.psi() == scalar_mat(P("x^2y^3"), 2), "(x,x^2)(y^2,y^3)");
    const auto z = mult_tensor(y, one_by_one(P("z^3"), P("z^4")));
    c.expect(z.phi() == scalar_mat(P("xy^2z^3"), 4) && z.psi() == scalar_mat(P("x^2y^3z^4"), 4), "then (z^3,z^4)");

    const auto hg = mult_tensor(standard({"x^2", "z^2"}), standard({"xy", "x^2z", "yz^2"}));
    const PolyMatrix block = M({{"x^2", "-x^3", "-xy", "0", "-zx", "zx^2", "zy", "0"},
                                {"xz", "xy", "0", "-xy", "-z^2", "-zy", "0", "zy"},
                                {"xz^2", "0", "xy", "x^3", "-z^3", "0", "-zy", "-zx^2"},
                                {"0", "xz^2", "-xz", "x^2", "0", "-z^3", "z^2", "-zx"},
                                {"zx", "-zx^2", "-zy", "0", "x^2", "-x^3", "-xy", "0"},
                                {"z^2", "zy", "0", "-zy", "xz", "xy", "0", "-xy"},
                                {"z^3", "0", "zy", "zx^2", "xz^2", "0", "xy", "x^3"},
                                {"0", "z^3", "-z^2", "zx", "0", "xz^2", "-xz", "x^2"}});
    c.expect(hg.size() == 16, "M(x)P size");
    c.expect(hg.phi().block(0, 0, 8, 8) == block, "phi_h (x) phi_g block");
    c.expect(hg.phi().block(8, 8, 8, 8) == block, "second diagonal block");
}

void improved_sizes(Checks& c)
{
    // first example: improved 32, standard 64 built from the expanded form
    c.timed("size-32 build and verify", 1.0, [&] {
        const auto r = improved_factorize(parse(kExampleOne));
        c.expect(r.factorization.size() == 32, "first example improved size " + std::to_string(r.factorization.size()));
        c.expect(r.factorization.verify().ok, "first example improved does not verify");
    });
    c.timed("size-64 build and verify", 5.0, [&] {
        const auto s = standard_factorize_grlex(expand(parse(kExampleOne)));
        c.expect(s.size() == 64, "first example standard size " + std::to_string(s.size()));
        c.expect(s.verify().ok, "first example standard does not verify");
    });

    // second example: improved 64 built, standard 2^(N-1) with N from the expansion
    {
        const auto sf = parse(kExampleTwo);
        const auto r = improved_factorize(sf);
        c.expect(r.factorization.size() == 64 && r.factorization.verify().ok, "second example improved");
        const std::size_t n = expand(sf).monomial_count();
        c.expect(n == 10, "second example N = " + std::to_string(n));
        const std::size_t standard_size = std::size_t{1} << (n - 1);
        c.expect(standard_size == 512, "second example standard size " + std::to_string(standard_size));
        c.expect(standard_size / r.factorization.size() == 8, "second example ratio");
    }

    // three terms: improved 2^11 built; the expansion decides N
    {
        const auto sf = parse(kThreeTerm);
        const auto r = improved_factorize(sf);
        c.expect(r.factorization.size() == 2048, "three-term improved size " + std::to_string(r.factorization.size()));
        c.expect(r.factorization.verify().ok, "three-term improved does not verify");
        const std::size_t n = expand(sf).monomial_count();
        const long standard_exp = static_cast<long>(n) - 1;
        c.note("three-term: " + std::to_string(n) + " monomials after collecting, " +
               std::to_string(r.prediction.no_cancel_terms) + " before; standard 2^" +
               std::to_string(standard_exp) + ", ratio 2^" + std::to_string(standard_exp - 11));
        c.expect(standard_exp == 15, "three-term standard 2^" + std::to_string(standard_exp) + ", expected 2^15");
        c.expect(standard_exp - 11 == 4, "three-term ratio 2^" + std::to_string(standard_exp - 11) + ", expected 16");
    }
}

void closure_suite(Checks& c, int trials, bool check_size_only)
{
    std::mt19937_64 rng(501);
    int bad = 0;
    int size_bad = 0;
    for (int t = 0; t < trials; ++t) {
        const auto x = testing_support::random_mf(rng, 3);
        const auto y = testing_support::random_mf(rng, 3);
        const std::size_t want = 2 * x.size() * y.size();
        for (int k = 0; k <= 3; ++k) {
            const auto s = yoshino(x, y, k);
            size_bad += s.size() != want;
            bad += !(s.target() == x.target() + y.target() && s.verify().ok);
        }
        for (int k = 0; k <= 1; ++k) {
            const auto p = mult_tensor(x, y, k);
            size_bad += p.size() != want;
            bad += !(p.target() == x.target() * y.target() && p.verify().ok);
        }
    }
    if (check_size_only) {
        c.expect(size_bad == 0, std::to_string(size_bad) + " outputs not of size 2nm");
    } else {
        c.expect(bad == 0, std::to_string(bad) + " outputs failed to verify");
    }
    c.note(std::to_string(trials) + " trials, " + std::to_string(trials * 6) + " products");
}

void bifunctor_laws(Checks& c)
{
    std::mt19937_64 rng(701);
    int bad = 0;
    const int trials = 60;
    for (int t = 0; t < trials; ++t) {
        const int v = t % 2;
        const auto x = testing_support::random_mf(rng, 2);
        const auto y = testing_support::random_mf(rng, 2);
        bad += !(morph_mult_tensor(morph_identity(x), morph_identity(y), v) == morph_identity(mult_tensor(x, y, v)));

        std::uniform_int_distribution<int> k(-5, 5);
        const auto f1 = scalar_morphism(x, Polynomial(k(rng)));
        const auto f2 = scalar_morphism(x, testing_support::random_monomial(rng));
        const auto g1 = scalar_morphism(y, testing_support::random_monomial(rng));
        const auto g2 = scalar_morphism(y, Polynomial(k(rng)));
        bad += !(morph_mult_tensor(morph_compose(f2, f1), morph_compose(g2, g1), v) ==
                 morph_compose(morph_mult_tensor(f2, g2, v), morph_mult_tensor(f1, g1, v)));

        // morphisms from the commutativity construction
        const auto z = testing_support::random_mf(rng, 2);
        const auto there = shuffle_morphism(x, y, v);
        const auto back = shuffle_morphism(y, x, v);
        const auto zs = scalar_morphism(z, testing_support::random_monomial(rng));
        bad += !(morph_mult_tensor(morph_compose(back, there), morph_compose(zs, zs), v) ==
                 morph_compose(morph_mult_tensor(back, zs, v), morph_mult_tensor(there, zs, v)));
    }
    c.expect(bad == 0, std::to_string(bad) + " law violations");
    c.note(std::to_string(trials) + " trials");
}

void commutativity(Checks& c)
{
    std::mt19937_64 rng(801);
    int bad = 0;
    for (int t = 0; t < 60; ++t) {
        const auto x = testing_support::random_mf(rng, 3);
        const auto y = testing_support::random_mf(rng, 3);
        const int v = t % 2;
        const Permutation w = kron(Permutation::identity(2), perfect_shuffle(x.size(), y.size()));
        const auto xy = mult_tensor(x, y, v);
        const auto yx = mult_tensor(y, x, v);
        bad += !(conjugate(w, xy.phi()) == yx.phi() && conjugate(w, xy.psi()) == yx.psi());
        bad += !(commutativity_witness(x, y, v) == w);
    }
    c.expect(bad == 0, std::to_string(bad) + " mismatches");
}

void distributivity(Checks& c)
{
    std::mt19937_64 rng(901);
    int bad = 0;
    for (int t = 0; t < 30; ++t) {
        const auto terms = testing_support::random_distinct_monomials(rng, 2);
        std::vector<SplitPair> a;
        std::vector<SplitPair> b;
        for (const auto& m : terms) {
            const auto [g, h] = leading_split(m);
            a.emplace_back(g, h);
            b.emplace_back(Polynomial(m), Polynomial(1));
        }
        const auto x1 = standard_method(std::span<const SplitPair>(a));
        const auto x2 = standard_method(std::span<const SplitPair>(b));
        const auto y = testing_support::random_mf(rng, 3);
        const int v = t % 2;
        const auto w = distributivity_witness(x1, x2, y, DistSide::Left, v);
        bad += !is_permutation_similar(w, mult_tensor(mf_direct_sum(x1, x2), y, v),
                                       mf_direct_sum(mult_tensor(x1, y, v), mult_tensor(x2, y, v)));
    }
    c.expect(bad == 0, std::to_string(bad) + " mismatches");
}

void associativity(Checks& c)
{
    std::mt19937_64 rng(1001);
    int bad = 0;
    for (int t = 0; t < 30; ++t) {
        const auto x = testing_support::random_mf(rng, 1);
        const auto y = testing_support::random_mf(rng, 1);
        const auto z = testing_support::random_mf(rng, 1);
        for (int v = 0; v <= 1; ++v) {
            const auto r = associativity_check(x, y, z, v);
            bad += !(r.exact_equal && r.left == r.right);
        }
    }
    c.expect(bad == 0, std::to_string(bad) + " 1x1 triples not exactly equal");

    int exact = 0;
    int mixed = 0;
    bad = 0;
    for (int t = 0; t < 40; ++t) {
        auto x = testing_support::random_mf(rng, 3);
        const auto y = testing_support::random_mf(rng, 3);
        const auto z = testing_support::random_mf(rng, 3);
        if (x.size() == 1 && y.size() == 1 && z.size() == 1) {
            x = testing_support::random_mf_with_terms(rng, 2);
        }
        const int v = t % 2;
        const auto r = associativity_check(x, y, z, v);
        const Polynomial fgh = x.target() * y.target() * z.target();
        bad += !is_permutation_similar(r.witness, r.left, r.right);
        bad += !(r.left.verify().ok && r.right.verify().ok && r.left.target() == fgh && r.right.target() == fgh);
        exact += r.exact_equal;
        ++mixed;
    }
    c.expect(bad == 0, std::to_string(bad) + " mixed-size failures");
    c.note("mixed sizes: exact_equal true in " + std::to_string(exact) + " of " + std::to_string(mixed));
}

void ratio_formula(Checks& c)
{
    std::vector<std::vector<std::size_t>> products;
    for (std::size_t a = 1; a <= 3; ++a) {
        products.push_back({a});
        for (std::size_t b = 1; b <= 3; ++b) {
            products.push_back({a, b});
        }
    }
    int checked = 0;
    int cancelled = 0;
    int bad = 0;
    for (std::size_t s = 0; s <= 2; ++s) {
        for (std::size_t i = 0; i < products.size(); ++i) {
            for (std::size_t j = i; j <= products.size(); ++j) {
                Shape sh;
                sh.s = s;
                sh.p = {products[i]};
                if (j < products.size()) {
                    sh.p.push_back(products[j]);
                }
                if (sh.improved_exp() > 6 || (s == 0 && sh.p.size() < 2)) {
                    continue;
                }
                SummandForm sf;
                try {
                    sf = generate_instance(static_cast<std::uint64_t>(checked + cancelled), sh);
                } catch (const Error&) {
                    ++cancelled;
                    continue;
                }
                const auto r = compare_methods(sf);
                if (r.prediction.cancellation) {
                    ++cancelled;
                    continue;
                }
                bad += !(r.verified_improved && r.ratio_exp() == testing_support::closed_form_ratio_exp(sh.p));
                ++checked;
            }
        }
    }
    c.expect(checked >= 30, "only " + std::to_string(checked) + " instances");
    c.expect(bad == 0, std::to_string(bad) + " ratio mismatches");
    c.note(std::to_string(checked) + " instances, " + std::to_string(cancelled) + " skipped");
}

int run_cli(const std::string& args, std::string& out)
{
    const std::string file = (std::filesystem::temp_directory_path() /
                              ("mfkit_acceptance_" + std::to_string(::getpid()) + ".out"))
                                 .string();
    const std::string cmd = std::string("'") + MFKIT_CLI + "' " + args + " >'" + file + "' 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    std::filesystem::remove(file);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void cli_round_trip(Checks& c)
{
    const auto dir = std::filesystem::temp_directory_path() / ("mfkit_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const std::string good = (dir / "good.json").string();
    const std::string bad = (dir / "bad.json").string();
    std::string out;
    c.expect(run_cli(std::string("factor '") + kExampleOne + "' --format json --out '" + good + "'", out) == 0,
             "factor failed");
    c.expect(run_cli("verify '" + good + "'", out) == 0 && out == "ok\n", "verify of a fresh file failed");

    std::ifstream in(good);
    const auto base = nlohmann::json::parse(in);
    const std::size_t n = base["size"];
    std::mt19937_64 rng(1201);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    for (int t = 0; t < 5; ++t) {
        const std::size_t r = idx(rng);
        const std::size_t col = idx(rng);
        auto j = base;
        j["phi"][r][col] = j["phi"][r][col].get<std::string>() + "+w";
        std::size_t first = 0;
        while (base["psi"][col][first] == "0") {
            ++first;
        }
        std::ofstream(bad) << j.dump();
        const int code = run_cli("verify '" + bad + "'", out);
        const std::string want = "FAIL phi*psi row " + std::to_string(r) + " col " + std::to_string(first);
        c.expect(code == 2, "corrupted file exit " + std::to_string(code));
        c.expect(out.substr(0, out.find('\n')) == want, "got '" + out.substr(0, out.find('\n')) + "', want '" + want + "'");
    }
    std::filesystem::remove_all(dir);
}

}  // namespace

int main()
{
    struct Criterion {
        int number;
        const char* name;
        std::function<void(Checks&)> body;
    };
    const std::vector<Criterion> criteria{
        {1, "x^2+1 fixture", x2_plus_1_fixture},
        {2, "standard-method golden fixtures", golden_fixtures},
        {3, "multiplicative tensor fixtures", mult_tensor_fixtures},
        {4, "improved algorithm sizes", improved_sizes},
        {5, "closure under tensor products", [](Checks& c) { c.timed("suite", 30.0, [&] { closure_suite(c, 210, false); }); }},
        {6, "tensor products have size 2nm", [](Checks& c) { closure_suite(c, 210, true); }},
        {7, "bifunctor laws", bifunctor_laws},
        {8, "commutativity witness", commutativity},
        {9, "distributivity witness", distributivity},
        {10, "associativity report", associativity},
        {11, "size ratio formula", [](Checks& c) { c.timed("bench", 60.0, [&] { ratio_formula(c); }); }},
        {12, "CLI round trip", cli_round_trip},
    };

    int failed = 0;
    for (const auto& cr : criteria) {
        Checks checks;
        const auto t0 = Clock::now();
        try {
            cr.body(checks);
        } catch (const std::exception& e) {
            checks.expect(false, std::string("exception: ") + e.what());
        }
        const double s = seconds_since(t0);
        std::cout << (checks.ok() ? "PASS" : "FAIL") << " criterion " << cr.number << ": " << cr.name << " ("
                  << s << " s)\n";
        for (const auto& n : checks.notes()) {
            std::cout << "    " << n << "\n";
        }
        for (const auto& f : checks.failures()) {
            std::cout << "    failed: " << f << "\n";
        }
        failed += !checks.ok();
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
