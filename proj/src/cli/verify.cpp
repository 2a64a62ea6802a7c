#include "kostka/cli/verify.hpp"

#include "kostka/errors.hpp"
#include "kostka/fusion.hpp"
#include "kostka/gp_ring.hpp"
#include "kostka/kostka.hpp"
#include "kostka/wedge.hpp"

#include <chrono>
#include <sstream>

namespace kostka::cli {

namespace {

using Clock = std::chrono::steady_clock;

struct Observed {
    Partition lambda;
    Partition mu;
    QPoly tilde;
    std::string source;
};

struct Context {
    Level level;
    std::vector<Observed> seen;
};

// A criterion returns an empty string on success, a description otherwise.
using Body = std::function<std::string(Context&)>;

std::string pair_text(const Partition& lambda, const Partition& mu)
{
    return "lambda=" + lambda.to_string() + " mu=" + mu.to_string();
}

std::string coinvariant_hilbert(Context& ctx)
{
    const int top = ctx.level == Level::quick ? 4 : 5;
    for (int N = 2; N <= top; ++N) {
        QPoly want = 1;
        for (int i = 1; i <= N; ++i) {
            QPoly qi;
            for (int e = 0; e < i; ++e)
                qi.add_term(e, 1);
            want *= qi;
        }
        const QPoly got = rmu_hilbert(Partition::column(N));
        if (!(got == want))
            return "N=" + std::to_string(N) + ": " + got.to_string() + " vs " + want.to_string();
    }
    return {};
}

std::string gp_theorem(Context& ctx)
{
    const int top = ctx.level == Level::quick ? 4 : 5;
    for (int N = 2; N <= top; ++N) {
        for (const Partition& mu : partitions_of(N)) {
            const GradedSNDecomposition dec = rmu_decompose(mu);
            for (const Partition& lambda : partitions_of(N)) {
                const QPoly want = tilde_transform(charge_kostka(lambda, mu), mu);
                const QPoly got = dec.component(lambda);
                if (!(got == want))
                    return pair_text(lambda, mu) + ": ring " + got.to_string() + ", charge " + want.to_string();
                ctx.seen.push_back({lambda, mu, got, "ring"});
            }
        }
    }
    return {};
}

std::string hook_consistency(Context& ctx)
{
    const int top = ctx.level == Level::quick ? 4 : 6;
    for (int N = 2; N <= top; ++N) {
        const Partition ones = Partition::column(N);
        const GradedSNDecomposition dec = rmu_decompose(ones);
        for (const Partition& lambda : partitions_of(N)) {
            const QPoly want = tilde_transform(kostka_hook(lambda), ones);
            if (!(dec.component(lambda) == want))
                return pair_text(lambda, ones) + ": ring " + dec.component(lambda).to_string() + ", hook " +
                       want.to_string();
            ctx.seen.push_back({lambda, ones, want, "hook"});
        }
    }
    return {};
}

std::string amu_route(Context& ctx)
{
    const int top = ctx.level == Level::quick ? 4 : 5;
    for (int N = 1; N <= top; ++N) {
        for (const Partition& mu : partitions_of(N)) {
            std::vector<int> want;
            for (const auto& c : rmu_hilbert(mu).coeff_list())
                want.push_back(static_cast<int>(c.get_si()));
            for (bool alt : {false, true}) {
                if (amu_graded_dims(mu, default_points(mu.length(), alt)) != want)
                    return "mu=" + mu.to_string() + (alt ? " (points 1,3,9,..)" : " (points 1,2,3,..)");
            }
        }
    }
    return {};
}

std::string fusion_theorem(Context& ctx)
{
    const int top = ctx.level == Level::quick ? 3 : 4;
    std::vector<std::pair<Partition, int>> cases;
    for (int N = 1; N <= top; ++N)
        for (const Partition& mu : partitions_of(N))
            for (int n : {2, 3})
                cases.emplace_back(mu, n);
    if (ctx.level == Level::full)
        cases.emplace_back(Partition::column(5), 2);

    for (const auto& [mu, n] : cases) {
        const int len = mu.length();
        const FilteredSpace fs = generate_filtration(mu.parts(), n, fusion_default_points(len));
        std::int64_t expected = 1;
        for (int m : mu.parts())
            expected *= sln_irrep_dim(Partition::row(m), n);
        if (fs.total_dim != expected)
            return "mu=" + mu.to_string() + " n=" + std::to_string(n) + ": dimension " +
                   std::to_string(fs.total_dim);
        const GradedSlnDecomposition dec = graded_decompose(fs);
        for (const Partition& lambda : partitions_of(mu.size(), n)) {
            const QPoly want = tilde_transform(charge_kostka(lambda, mu), mu);
            if (!(dec.component(lambda) == want))
                return pair_text(lambda, mu) + " n=" + std::to_string(n) + ": fusion " +
                       dec.component(lambda).to_string() + ", ~K " + want.to_string();
            ctx.seen.push_back({lambda, mu, dec.component(lambda), "fusion"});
        }
        if (fusion_character(mu.parts(), n, fusion_default_points(len, true)) != dec.assembled)
            return "mu=" + mu.to_string() + " n=" + std::to_string(n) + ": depends on the evaluation points";
    }
    for (int N = 1; N <= top; ++N)
        for (int n : {2, 3})
            schur_weyl_check(N, n);  // throws with the offending degree
    return {};
}

std::string reduced_wedge(Context& ctx)
{
    const int top = ctx.level == Level::quick ? 3 : 4;
    for (int N = 1; N <= top; ++N)
        for (int n : {2, 3})
            reduced_wedge_decompose(N, n);  // throws when the routes disagree
    return {};
}

std::string hook_factorization(Context& ctx)
{
    const int top = ctx.level == Level::quick ? 6 : 8;
    for (int n = 1; n <= 4; ++n)
        for (int size = 0; size <= top; ++size)
            for (const Partition& mu : partitions_of(size, n))
                hook_factorization_check(mu, n);
    if (hook_factorization_check(Partition{2, 1}, 2).printed_holds)
        return "printed exponent unexpectedly holds for mu=(2,1), n=2";
    return {};
}

std::string winf_limit(Context&)
{
    const std::vector<std::pair<Partition, int>> cases{{Partition{}, 0}, {Partition{1}, 1}, {Partition{2}, 0}};
    for (const auto& [mu_bar, i] : cases) {
        const StabilizationReport r = limit_stabilization(mu_bar, 2, i, 5, 8);
        if (!r.stable_from || *r.stable_from > 7)
            return "mu_bar=" + mu_bar.to_string() + ": window not stable by m=8";
        if (!r.matches_winf)
            return "mu_bar=" + mu_bar.to_string() + ": stabilized window differs from winf_char";
    }
    return {};
}

std::string specialization(Context& ctx)
{
    const int top = ctx.level == Level::quick ? 4 : 5;
    for (int N = 1; N <= top; ++N)
        for (const Partition& mu : partitions_of(N))
            for (const Partition& lambda : partitions_of(N))
                ctx.seen.push_back({lambda, mu, tilde_transform(charge_kostka(lambda, mu), mu), "charge"});
    for (const Observed& o : ctx.seen) {
        const std::string where = o.source + " " + pair_text(o.lambda, o.mu);
        if (o.tilde.at_one() != ssyt_count(o.lambda, o.mu.parts()))
            return where + ": value at q=1 is not the Kostka number";
        if (!o.tilde.nonnegative_coefficients() || o.tilde.has_negative_exponents())
            return where + ": not a polynomial with nonnegative coefficients";
        if (!o.tilde.is_zero() && !dominance_leq(o.mu, o.lambda))
            return where + ": nonzero outside dominance order";
    }
    return {};
}

}  // namespace

std::vector<CriterionResult> run_criteria(Level level, const std::function<void(const CriterionResult&)>& on_result)
{
    const std::vector<std::pair<std::string, Body>> criteria{
        {"coinvariant Hilbert series", coinvariant_hilbert},
        {"ring decomposition equals charge Kostka polynomials", gp_theorem},
        {"ring decomposition equals hook formula for (1^N)", hook_consistency},
        {"orbit evaluation dims equal Hilbert series", amu_route},
        {"fusion product character equals ~K", fusion_theorem},
        {"reduced wedge routes agree", reduced_wedge},
        {"hook product factorization", hook_factorization},
        {"W-limit stabilization", winf_limit},
        {"specialization, positivity, dominance", specialization},
    };
    Context ctx{level, {}};
    std::vector<CriterionResult> out;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        CriterionResult r;
        r.id = static_cast<int>(k) + 1;
        r.name = criteria[k].first;
        const auto t0 = Clock::now();
        try {
            r.detail = criteria[k].second(ctx);
            r.passed = r.detail.empty();
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        if (on_result)
            on_result(r);
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// Coinvariant ideal of S_3 plus z_1, which is not S_3-stable from degree 1.
std::vector<MultiPoly> corrupted_generators()
{
    std::vector<MultiPoly> gens = cmu_generators(Partition::column(3)).generators;
    gens.push_back(MultiPoly::variable(3, 0));
    return gens;
}

}  // namespace

Report cmd_verify(const VerifyArgs& args)
{
    const auto t0 = Clock::now();
    Report rep;
    rep.command = "verify";
    rep.inputs = {{"level", args.level == Level::quick ? "quick" : "full"}};

    Json rows = Json::array();
    std::ostringstream text;
    for (const CriterionResult& r : run_criteria(args.level)) {
        rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        text << "  " << r.id << ". " << (r.passed ? "pass " : "FAIL ") << r.name << "\n";
        rep.check("criterion_" + std::to_string(r.id), r.passed, r.detail);
    }
    rep.add("criteria", rows, text.str());

    // The negative control must be rejected with the degree where stability breaks.
    std::string failure;
    try {
        decompose_quotient(Partition::column(3), corrupted_generators());
    } catch (const CheckFailure& e) {
        failure = e.what();
    }
    if (args.corrupt_generators) {
        rep.check("corrupted_generators", failure.empty(), failure);
    } else {
        rep.check("negative_control_rejected", failure.find("degree 1") != std::string::npos,
                  "corrupted generator set was not rejected at degree 1");
    }
    rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

}  // namespace kostka::cli
