// mfkit command-line front end. Talks to the library only through mfkit.h.
//
// Exit codes: 0 success, 1 bad input (parse error, malformed file, infeasible
// shape, bad flag), 2 verification failure, 3 I/O error.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfkit/mfkit.h"

namespace {

enum Exit { kOk = 0, kBadInput = 1, kVerifyFailed = 2, kIoError = 3 };

constexpr std::size_t kTextLimit = 64;

struct CliError {
    int code;
    std::string message;
};

int exit_for(mfk_status s)
{
    switch (s) {
    case MFK_OK: return kOk;
    case MFK_ERR_VERIFY:
    case MFK_ERR_INTERNAL: return kVerifyFailed;
    default: return kBadInput;
    }
}

void check(mfk_status s)
{
    if (s != MFK_OK) {
        throw CliError{exit_for(s), mfk_last_error()};
    }
}

struct StringDeleter {
    void operator()(char* p) const { mfk_string_free(p); }
};
struct FormDeleter {
    void operator()(mfk_form* p) const { mfk_form_free(p); }
};
struct FactorizationDeleter {
    void operator()(mfk_factorization* p) const { mfk_factorization_free(p); }
};
using FormPtr = std::unique_ptr<mfk_form, FormDeleter>;
using FactorizationPtr = std::unique_ptr<mfk_factorization, FactorizationDeleter>;

std::string take(char* p)
{
    std::unique_ptr<char, StringDeleter> owned(p);
    return owned ? std::string(owned.get()) : std::string();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError{kIoError, "cannot read " + path};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) {
        throw CliError{kIoError, "cannot write " + out_path};
    }
}

nlohmann::json pow2_json(long e)
{
    if (e >= 0 && e < 63) {
        return std::uint64_t{1} << e;
    }
    return e < 0 ? "1/2^" + std::to_string(-e) : "2^" + std::to_string(e);
}

std::string pow2(long e)
{
    if (e >= 0 && e < 63) {
        return std::to_string(1ULL << e);
    }
    return e < 0 ? "1/2^" + std::to_string(-e) : "2^" + std::to_string(e);
}

FormPtr parse_form(const std::string& text)
{
    mfk_form* form = nullptr;
    check(mfk_parse_form(text.c_str(), &form));
    return FormPtr(form);
}

FactorizationPtr load_factorization(const std::string& path)
{
    const std::string text = read_file(path);
    mfk_factorization* x = nullptr;
    const mfk_status s = mfk_factorization_from_json(text.c_str(), &x);
    if (s != MFK_OK) {
        throw CliError{exit_for(s), path + ": " + mfk_last_error()};
    }
    return FactorizationPtr(x);
}

// Writes the factorization as text or JSON; text above kTextLimit falls back
// to JSON unless forced.
void write_factorization(const mfk_factorization* x, const std::string& format, bool force_text,
                         const std::string& out_path, const std::string& report)
{
    char* buf = nullptr;
    const bool text = format == "text" && (force_text || mfk_factorization_size(x) <= kTextLimit);
    if (format == "text" && !text) {
        std::cerr << "size " << mfk_factorization_size(x) << " exceeds " << kTextLimit
                  << "; writing JSON (use --force-text for text)\n";
    }
    if (text) {
        check(mfk_factorization_to_text(x, &buf));
        emit(take(buf) + report, out_path);
    } else {
        check(mfk_factorization_to_json(x, &buf));
        emit(take(buf) + "\n", out_path);
        std::cerr << report;
    }
}

struct FactorArgs {
    std::string expr;
    std::string method = "improved";
    int yoshino_variant = 0;
    int mult_variant = 0;
    bool auto_expand = false;
    std::string format = "text";
    std::string out;
    bool force_text = false;
};

mfk_factor_options factor_options(const FactorArgs& a)
{
    return {a.method == "standard" ? MFK_METHOD_STANDARD : MFK_METHOD_IMPROVED, a.yoshino_variant, a.mult_variant,
            a.auto_expand ? 1 : 0};
}

int cmd_factor(const FactorArgs& a)
{
    FormPtr form = parse_form(a.expr);
    mfk_prediction p{};
    check(mfk_form_predict(form.get(), &p));
    mfk_form_kind kind = MFK_FORM_PLAIN;
    char* lints = nullptr;
    check(mfk_form_classify(form.get(), &kind, &lints));
    const std::string lint_text = take(lints);

    const mfk_factor_options options = factor_options(a);
    mfk_factorization* raw = nullptr;
    check(mfk_factor(form.get(), &options, &raw));
    FactorizationPtr x(raw);

    static const char* kinds[] = {"plain", "simple-summand-reduced", "summand-reduced"};
    std::ostringstream report;
    report << "method: " << a.method << "\nsize: " << mfk_factorization_size(x.get()) << "\nform: " << kinds[kind]
           << "\nstandard size: " << pow2(p.standard_exp) << " (" << p.expanded_terms << " monomials)"
           << "\nimproved size: " << pow2(p.improved_exp) << "\nverified: yes\n";
    if (p.cancellation) {
        report << "note: the expansion merges or cancels terms\n";
    }
    std::istringstream lint_lines(lint_text);
    for (std::string line; std::getline(lint_lines, line);) {
        report << "lint: " << line << "\n";
    }
    write_factorization(x.get(), a.format, a.force_text, a.out, report.str());
    return kOk;
}

int cmd_verify(const std::string& path)
{
    const std::string text = read_file(path);
    mfk_verify_report r{};
    char* detail = nullptr;
    const mfk_status s = mfk_verify_json(text.c_str(), &r, &detail);
    if (s != MFK_OK) {
        throw CliError{exit_for(s), path + ": " + mfk_last_error()};
    }
    const std::string d = take(detail);
    if (r.ok) {
        std::cout << "ok\n";
        return kOk;
    }
    std::cout << "FAIL " << (r.product == MFK_PRODUCT_PHI_PSI ? "phi*psi" : "psi*phi") << " row " << r.row
              << " col " << r.col << "\n"
              << d << "\n";
    return kVerifyFailed;
}

struct TensorArgs {
    std::string op;
    std::string lhs;
    std::string rhs;
    int variant = 0;
    std::string format = "json";
    std::string out;
    bool force_text = false;
};

int cmd_tensor(const TensorArgs& a)
{
    FactorizationPtr lhs = load_factorization(a.lhs);
    FactorizationPtr rhs = load_factorization(a.rhs);
    mfk_factorization* raw = nullptr;
    check(mfk_tensor(lhs.get(), rhs.get(), a.op == "add" ? MFK_TENSOR_ADD : MFK_TENSOR_MUL, a.variant, &raw));
    FactorizationPtr x(raw);
    char* target = nullptr;
    check(mfk_factorization_target(x.get(), &target));
    const std::string report = "size: " + std::to_string(mfk_factorization_size(x.get())) + "\nf: " + take(target) +
                               "\nverified: yes\n";
    write_factorization(x.get(), a.format, a.force_text, a.out, report);
    return kOk;
}

int cmd_compare(const FactorArgs& a)
{
    FormPtr form = parse_form(a.expr);
    const mfk_factor_options options = factor_options(a);
    char* buf = nullptr;
    check(mfk_compare_json(form.get(), &options, &buf));
    const std::string json = take(buf);
    const auto j = nlohmann::json::parse(json);
    if (a.format == "json") {
        emit(json + "\n", a.out);
    } else {
        std::ostringstream t;
        auto show = [](const nlohmann::json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
        t << "standard_size: " << show(j["standard_size"]) << "\nimproved_size: " << show(j["improved_size"])
          << "\nratio: " << show(j["ratio"]) << "\nverified_standard: "
          << (j["verified_standard"].is_null() ? "not built" : show(j["verified_standard"]))
          << "\nverified_improved: " << show(j["verified_improved"]) << "\ncancellation: " << show(j["cancellation"])
          << "\n";
        emit(t.str(), a.out);
    }
    const bool ok = j["verified_improved"].get<bool>() &&
                    (j["verified_standard"].is_null() || j["verified_standard"].get<bool>());
    return ok ? kOk : kVerifyFailed;
}

struct BenchArgs {
    std::size_t s = 1;
    std::string m;
    std::string p = "3,2";
    std::string vars = "xyz";
    unsigned max_deg = 3;
    std::uint64_t seed = 0;
    std::size_t count = 1;
    std::string format = "csv";
    std::string out;
};

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::size_t positive(const std::string& s, const char* what)
{
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty() || v == 0) {
        throw CliError{kBadInput, std::string("bad ") + what + " '" + s + "'"};
    }
    return v;
}

struct ParsedShape {
    std::vector<std::size_t> factor_counts;
    std::vector<std::size_t> monomial_counts;
    std::string m_text;
    std::string p_text;
};

ParsedShape parse_shape(const BenchArgs& a)
{
    ParsedShape shape;
    std::vector<std::string> m_parts;
    std::vector<std::string> p_parts;
    if (!a.p.empty()) {
        for (const auto& product : split(a.p, ';')) {
            std::vector<std::string> counts;
            for (const auto& c : split(product, ',')) {
                shape.monomial_counts.push_back(positive(c, "monomial count"));
                counts.push_back(c);
            }
            if (counts.empty()) {
                throw CliError{kBadInput, "empty product in --p"};
            }
            shape.factor_counts.push_back(counts.size());
            m_parts.push_back(std::to_string(counts.size()));
            std::string joined;
            for (std::size_t i = 0; i < counts.size(); ++i) {
                joined += (i ? ":" : "") + counts[i];
            }
            p_parts.push_back(joined);
        }
    }
    if (!a.m.empty()) {
        const auto given = split(a.m, ';');
        bool same = given.size() == shape.factor_counts.size();
        for (std::size_t j = 0; same && j < given.size(); ++j) {
            same = positive(given[j], "factor count") == shape.factor_counts[j];
        }
        if (!same) {
            throw CliError{kBadInput, "--m does not match the factor counts in --p"};
        }
    }
    for (std::size_t j = 0; j < m_parts.size(); ++j) {
        shape.m_text += (j ? ";" : "") + m_parts[j];
        shape.p_text += (j ? ";" : "") + p_parts[j];
    }
    return shape;
}

unsigned thread_count()
{
    const char* env = std::getenv("MFKIT_THREADS");
    if (env == nullptr) {
        return 1;
    }
    const long n = std::strtol(env, nullptr, 10);
    return n < 1 ? 1U : static_cast<unsigned>(std::min<long>(n, 64));
}

int cmd_bench(const BenchArgs& a)
{
    const ParsedShape shape = parse_shape(a);
    const mfk_shape c_shape{a.s,
                            shape.factor_counts.size(),
                            shape.factor_counts.data(),
                            shape.monomial_counts.data(),
                            a.vars.c_str(),
                            a.max_deg};

    struct Result {
        mfk_status status = MFK_OK;
        std::string error;
        mfk_bench_row row{};
        std::string expr;
    };
    std::vector<Result> results(a.count);
    auto run = [&](std::size_t k) {
        char* expr = nullptr;
        Result& r = results[k];
        r.status = mfk_bench_instance(&c_shape, a.seed + k, &r.row, &expr);
        if (r.status != MFK_OK) {
            r.error = mfk_last_error();
        }
        r.expr = take(expr);
    };
    const unsigned workers = std::min<std::size_t>(thread_count(), std::max<std::size_t>(a.count, 1));
    if (workers <= 1) {
        for (std::size_t k = 0; k < a.count; ++k) {
            run(k);
        }
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < a.count; k += workers) {
                    run(k);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    for (const auto& r : results) {
        if (r.status != MFK_OK) {
            throw CliError{exit_for(r.status), r.error};
        }
    }
    bool all_verified = true;
    std::ostringstream out;
    nlohmann::json rows = nlohmann::json::array();
    if (a.format == "csv") {
        out << "seed,s,l,m,p,standard_size,improved_size,ratio,verified\n";
    }
    for (std::size_t k = 0; k < results.size(); ++k) {
        const mfk_bench_row& row = results[k].row;
        all_verified = all_verified && row.verified;
        if (a.format == "csv") {
            out << a.seed + k << ',' << a.s << ',' << shape.factor_counts.size() << ',' << shape.m_text << ','
                << shape.p_text << ',' << pow2(row.standard_exp) << ',' << pow2(row.improved_exp) << ','
                << pow2(row.ratio_exp) << ',' << (row.verified ? "true" : "false") << '\n';
        } else {
            rows.push_back({{"seed", a.seed + k},
                            {"s", a.s},
                            {"l", shape.factor_counts.size()},
                            {"m", shape.m_text},
                            {"p", shape.p_text},
                            {"standard_size", pow2_json(row.standard_exp)},
                            {"improved_size", pow2_json(row.improved_exp)},
                            {"ratio", pow2_json(row.ratio_exp)},
                            {"theorem_ratio", pow2_json(row.theorem_ratio_exp)},
                            {"cancellation", row.cancellation != 0},
                            {"verified", row.verified != 0},
                            {"instance", results[k].expr}});
        }
    }
    if (a.format != "csv") {
        out << rows.dump(2) << '\n';
    }
    emit(out.str(), a.out);
    return all_verified ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"mfkit: matrix factorizations of polynomials"};
    app.require_subcommand(1);

    FactorArgs factor;
    auto* f = app.add_subcommand("factor", "Factor a polynomial expression");
    f->add_option("expr", factor.expr, "Expression, e.g. \"xy + (x^2+z^2)(xy+x^2z+yz^2)\"")->required();
    f->add_option("--method", factor.method)->check(CLI::IsMember({"standard", "improved"}));
    f->add_option("--yoshino-variant", factor.yoshino_variant)->check(CLI::Range(0, 3));
    f->add_option("--mult-variant", factor.mult_variant)->check(CLI::Range(0, 1));
    f->add_flag("--auto-expand", factor.auto_expand, "Expand products that are cheaper expanded");
    f->add_option("--format", factor.format)->check(CLI::IsMember({"text", "json"}));
    f->add_option("--out", factor.out, "Write the factorization here instead of stdout");
    f->add_flag("--force-text", factor.force_text, "Render text even above size 64");

    std::string verify_path;
    auto* v = app.add_subcommand("verify", "Check phi*psi == psi*phi == f*I for a JSON file");
    v->add_option("file", verify_path)->required();

    TensorArgs tensor;
    auto* t = app.add_subcommand("tensor", "Tensor two factorization files");
    t->add_option("op", tensor.op, "add (f+g) or mul (fg)")->required()->check(CLI::IsMember({"add", "mul"}));
    t->add_option("lhs", tensor.lhs)->required();
    t->add_option("rhs", tensor.rhs)->required();
    t->add_option("--variant", tensor.variant, "add: 0..3, mul: 0..1")->check(CLI::Range(0, 3));
    t->add_option("--format", tensor.format)->check(CLI::IsMember({"text", "json"}));
    t->add_option("--out", tensor.out);
    t->add_flag("--force-text", tensor.force_text);

    FactorArgs compare;
    compare.format = "json";
    auto* c = app.add_subcommand("compare", "Compare standard and improved sizes");
    c->add_option("expr", compare.expr)->required();
    c->add_option("--yoshino-variant", compare.yoshino_variant)->check(CLI::Range(0, 3));
    c->add_option("--mult-variant", compare.mult_variant)->check(CLI::Range(0, 1));
    c->add_flag("--auto-expand", compare.auto_expand);
    c->add_option("--format", compare.format)->check(CLI::IsMember({"text", "json"}));
    c->add_option("--out", compare.out);

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "Random instances of a shape, improved vs standard size");
    b->add_option("--s", bench.s, "Number of monomial terms");
    b->add_option("--m", bench.m, "Factor counts per product, e.g. \"2;2\" (optional check)");
    b->add_option("--p", bench.p, "Monomial counts, products split by ';', factors by ',', e.g. \"3,2;2,2\"");
    b->add_option("--vars", bench.vars);
    b->add_option("--max-deg", bench.max_deg)->check(CLI::Range(1, 20));
    b->add_option("--seed", bench.seed);
    b->add_option("--count", bench.count);
    b->add_option("--format", bench.format)->check(CLI::IsMember({"csv", "json"}));
    b->add_option("--out", bench.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    }

    try {
        if (f->parsed()) {
            return cmd_factor(factor);
        }
        if (v->parsed()) {
            return cmd_verify(verify_path);
        }
        if (t->parsed()) {
            return cmd_tensor(tensor);
        }
        if (c->parsed()) {
            return cmd_compare(compare);
        }
        return cmd_bench(bench);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
}
