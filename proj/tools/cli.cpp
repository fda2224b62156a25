#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "padicop/json_io.hpp"
#include "padicop/sampling.hpp"
#include "padicop/version.hpp"

namespace padicop::cli {

namespace {

using io::json;

struct GlobalOptions {
    std::optional<unsigned long> p;
    std::optional<int> prec;
    std::optional<int> guard;
    std::uint64_t seed = 42;
};

constexpr int kDefaultPrecision = 32;
constexpr std::size_t kDefaultMaxDim = 64;

json read_document(const std::string& path)
{
    if (path == "-")
        return json::parse(std::cin);
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    return json::parse(in);
}

std::size_t max_dimension()
{
    const char* env = std::getenv("PADIC_MAX_DIM");
    if (env == nullptr || *env == '\0')
        return kDefaultMaxDim;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0)
        throw Error(ErrorKind::InvalidArgument, std::string("PADIC_MAX_DIM must be a positive integer, got '") +
                                                    env + "'");
    return v;
}

// Everything a command needs besides its inputs; echoed into every report.
class Context {
public:
    Context(const GlobalOptions& opts, Prime p, std::optional<SeriesBudget> from_file)
        : p_(p), seed_(opts.seed)
    {
        if (opts.p && *opts.p != p.value())
            throw Error(ErrorKind::InvalidArgument, "--p " + std::to_string(*opts.p) +
                                                        " disagrees with the input's p = " +
                                                        std::to_string(p.value()));
        if (opts.prec || opts.guard || !from_file) {
            const int target = opts.prec.value_or(from_file ? from_file->target : kDefaultPrecision);
            budget_ = opts.guard ? SeriesBudget::with_guard(p, target, *opts.guard) : SeriesBudget::automatic(p, target);
        } else {
            budget_ = *from_file;
        }
    }

    Prime prime() const { return p_; }
    const SeriesBudget& budget() const { return budget_; }
    std::uint64_t seed() const { return seed_; }

    json config() const
    {
        return {{"p", p_.value()},
                {"prec", budget_.target},
                {"guard", budget_.guard},
                {"seed", seed_},
                {"version", kVersion}};
    }

private:
    Prime p_;
    SeriesBudget budget_{};
    std::uint64_t seed_;
};

void check_dimension(std::size_t n)
{
    const std::size_t cap = max_dimension();
    if (n > cap)
        throw Error(ErrorKind::InvalidArgument, "dimension " + std::to_string(n) + " exceeds PADIC_MAX_DIM = " +
                                                    std::to_string(cap));
}

struct LoadedGroup {
    Context ctx;
    OneParamGroup group;
};

LoadedGroup load_group(const GlobalOptions& opts, const std::string& path)
{
    const json doc = read_document(path);
    const PadicMatrix a = io::matrix_from_json(doc.contains("generator") ? doc.at("generator") : doc);
    check_dimension(a.dimension());
    std::optional<SeriesBudget> file_budget;
    if (doc.contains("budget"))
        file_budget = io::budget_from_json(doc.at("budget"));
    Context ctx(opts, a.prime(), file_budget);
    OneParamGroup group = doc.contains("generator") ? io::group_from_json(doc, ctx.budget())
                                                    : OneParamGroup::from_generator(a, ctx.budget());
    // Explicit flags take precedence over a budget stored in the file.
    if (!(group.budget() == ctx.budget()))
        group = OneParamGroup(group.generator(), ctx.budget());
    return {ctx, std::move(group)};
}

PrincipalUnit parse_unit(const std::string& text, const OneParamGroup& group)
{
    return PrincipalUnit(PadicInt::from_string(text, group.prime(), group.precision()));
}

json spectrum_json(const UnitaryOperator& u)
{
    json out = json::array();
    for (const auto& s : u.spectrum())
        out.push_back(io::to_json(s.value()));
    return out;
}

int cmd_certify(const GlobalOptions& opts, const std::string& path, std::ostream& out)
{
    const PadicMatrix a = io::matrix_from_json(read_document(path));
    check_dimension(a.dimension());
    const Context ctx(opts, a.prime(), std::nullopt);
    const auto cert = certify_strongly_normal(a);
    out << json{{"config", ctx.config()}, {"certificate", io::to_json(cert)}}.dump(2) << '\n';
    return kSuccess;
}

int cmd_group_eval(const GlobalOptions& opts, const std::string& path, const std::string& s_text,
                   std::ostream& out)
{
    const auto [ctx, group] = load_group(opts, path);
    const PrincipalUnit s = parse_unit(s_text, group);
    const UnitaryOperator u = evaluate(group, s);
    out << json{{"config", ctx.config()},
                {"s", io::to_json(s.value())},
                {"matrix", io::to_json(u.matrix())},
                {"spectrum", spectrum_json(u)}}
               .dump(2)
        << '\n';
    return kSuccess;
}

template <typename Check>
int cmd_sampled_check(const GlobalOptions& opts, const std::string& path, int samples, const char* name,
                      Check check, std::ostream& out)
{
    if (samples < 1)
        throw Error(ErrorKind::InvalidArgument, "--samples must be positive");
    const auto [ctx, group] = load_group(opts, path);
    Sampler sampler(ctx.seed());
    const int prec = group.precision();
    std::optional<int> min_margin;
    json failures = json::array();
    for (int i = 0; i < samples; ++i) {
        const PrincipalUnit s1 = sampler.principal_unit(group.prime(), prec, 3);
        const PrincipalUnit s2 = sampler.principal_unit(group.prime(), prec, 3);
        const GroupCheck result = check(group, s1, s2);
        min_margin = min_margin ? std::min(*min_margin, result.margin()) : result.margin();
        if (!result.pass)
            failures.push_back({{"sample", i},
                                {"s1", s1.value().to_string()},
                                {"s2", s2.value().to_string()},
                                {"observed", io::to_json(result.observed)},
                                {"required", result.required}});
    }
    out << json{{"check", name},
                {"samples", samples},
                {"seed", ctx.seed()},
                {"min_margin_valuation", *min_margin},
                {"pass", failures.empty()},
                {"failures", failures},
                {"config", ctx.config()}}
               .dump(2)
        << '\n';
    return kSuccess;
}

int cmd_stone(const GlobalOptions& opts, const std::string& path, std::ostream& out)
{
    const PadicMatrix u = io::matrix_from_json(read_document(path));
    check_dimension(u.dimension());
    const Context ctx(opts, u.prime(), std::nullopt);
    const OneParamGroup group = stone_recover(u, ctx.budget());
    json doc = io::to_json(group);
    doc["config"] = ctx.config();
    out << doc.dump(2) << '\n';
    return kSuccess;
}

int cmd_additive(const GlobalOptions& opts, const std::string& path, const std::string& z_text, std::ostream& out)
{
    const auto [ctx, group] = load_group(opts, path);
    const PadicInt z = PadicInt::from_string(z_text, group.prime(), group.precision());
    const PrincipalUnit s = additive_reparam(z, group.budget());
    out << json{{"config", ctx.config()},
                {"z", io::to_json(z)},
                {"s", io::to_json(s.value())},
                {"matrix", io::to_json(additive_evaluate(group, z))}}
               .dump(2)
        << '\n';
    return kSuccess;
}

int cmd_converge(const GlobalOptions& opts, const std::string& path, const std::string& s_text, int max_n,
                 std::ostream& out)
{
    if (max_n < 0)
        throw Error(ErrorKind::InvalidArgument, "--max-n must be nonnegative");
    const auto [ctx, group] = load_group(opts, path);
    const PrincipalUnit s = parse_unit(s_text, group);
    json rows = json::array();
    bool pass = true;
    for (const auto& row : convergence_table(group, s, max_n)) {
        rows.push_back({{"n", row.n},
                        {"error_valuation", io::to_json(row.error)},
                        {"bound", row.bound},
                        {"within_bound", row.within_bound}});
        pass = pass && row.within_bound;
    }
    out << json{{"config", ctx.config()},
                {"s", io::to_json(s.value())},
                {"zeta", io::to_json(zeta_of(s, group.budget()))},
                {"rows", rows},
                {"pass", pass}}
               .dump(2)
        << '\n';
    return kSuccess;
}

int exit_code_for(ErrorKind kind)
{
    if (is_refusal(kind))
        return kRefusal;
    if (is_precision_exhaustion(kind))
        return kPrecisionExhausted;
    return kInputError;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact p-adic operator toolkit: strongly normal matrices, unitary groups s^A, generator recovery",
                 "padicop"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    GlobalOptions opts;
    app.add_option("--p", opts.p, "Expected prime (must match the input files)");
    app.add_option("--prec", opts.prec, "Target precision in base-p digits (default 32)")->check(CLI::Range(1, 1 << 16));
    app.add_option("--guard", opts.guard, "Guard digits for series (default automatic)")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", opts.seed, "Sampling seed (default 42)");

    std::string file;
    std::string s_text;
    std::string z_text;
    int samples = 100;
    int max_n = 25;

    auto* certify = app.add_subcommand("certify", "Certify a matrix as strongly normal");
    certify->add_option("matrix-file", file)->required();
    auto* group_eval = app.add_subcommand("group-eval", "Evaluate U(s) = s^A");
    group_eval->add_option("group-file", file)->required();
    group_eval->add_option("--s", s_text, "Principal unit s (decimal)")->required();
    auto* check_law = app.add_subcommand("check-law", "Sample U(s1 s2) = U(s1) U(s2)");
    check_law->add_option("group-file", file)->required();
    check_law->add_option("--samples", samples);
    auto* lipschitz = app.add_subcommand("lipschitz", "Sample ||U(s1) - U(s2)|| <= |s1 - s2|");
    lipschitz->add_option("group-file", file)->required();
    lipschitz->add_option("--samples", samples);
    auto* stone = app.add_subcommand("stone", "Recover the generator A from U(1+p)");
    stone->add_option("matrix-file", file)->required();
    auto* additive = app.add_subcommand("additive", "Evaluate W(z) = exp(p z A)");
    additive->add_option("group-file", file)->required();
    additive->add_option("--z", z_text, "z in Z_p (decimal)")->required();
    auto* converge = app.add_subcommand("converge", "Digit-truncation convergence table for U(s)");
    converge->add_option("group-file", file)->required();
    converge->add_option("--s", s_text, "Principal unit s (decimal)")->required();
    converge->add_option("--max-n", max_n);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (opts.p)
            (void)Prime(*opts.p);
        if (*certify)
            return cmd_certify(opts, file, out);
        if (*group_eval)
            return cmd_group_eval(opts, file, s_text, out);
        if (*check_law)
            return cmd_sampled_check(
                opts, file, samples, "group-law",
                [](const OneParamGroup& g, const PrincipalUnit& a, const PrincipalUnit& b) {
                    return verify_group_law(g, a, b);
                },
                out);
        if (*lipschitz)
            return cmd_sampled_check(opts, file, samples, "lipschitz", lipschitz_check, out);
        if (*stone)
            return cmd_stone(opts, file, out);
        if (*additive)
            return cmd_additive(opts, file, z_text, out);
        if (*converge)
            return cmd_converge(opts, file, s_text, max_n, out);
    } catch (const Error& e) {
        const int code = exit_code_for(e.kind());
        if (code == kRefusal) {
            out << json{{"refusal", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump(2) << '\n';
        } else {
            err << "padicop: " << e.what() << '\n';
        }
        return code;
    } catch (const json::exception& e) {
        err << "padicop: malformed JSON: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace padicop::cli
