#include "kostka/cli/commands.hpp"

#include "kostka/errors.hpp"
#include "kostka/fusion.hpp"
#include "kostka/gp_ring.hpp"
#include "kostka/kostka.hpp"
#include "kostka/wedge.hpp"

#include <cctype>
#include <chrono>
#include <sstream>
#include <stdexcept>

namespace kostka::cli {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool is_column(const Partition& mu)
{
    return mu == Partition::column(mu.size());
}

std::string join(const std::vector<int>& v)
{
    std::string s;
    for (int x : v)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

std::string points_text(const std::vector<mpq_class>& pts)
{
    std::string s;
    for (const auto& p : pts)
        s += (s.empty() ? "" : ",") + p.get_str();
    return s;
}

std::string coeffs_text(const std::vector<mpz_class>& c)
{
    std::string s;
    for (const auto& x : c)
        s += (s.empty() ? "" : " ") + x.get_str();
    return s;
}

// sum_x c_x lambda(x) over the computed components
std::int64_t weighted_total(const std::map<Partition, QPoly>& comps, int n)
{
    std::int64_t total = 0;
    for (const auto& [lambda, p] : comps)
        total += sln_irrep_dim(lambda, n) * p.at_one().get_si();
    return total;
}

}  // namespace

std::vector<mpq_class> parse_points(const std::string& text)
{
    std::vector<mpq_class> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::erase_if(item, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (item.empty())
            throw std::invalid_argument("empty entry in point list \"" + text + "\"");
        mpq_class q;
        if (q.set_str(item, 10) != 0)
            throw std::invalid_argument("not a rational number: \"" + item + "\"");
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

Composition parse_composition(const std::string& text)
{
    Composition out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not an integer: \"" + item + "\"");
        }
        if (v < 0)
            throw std::invalid_argument("negative part in \"" + text + "\"");
        out.push_back(v);
    }
    return out;
}

// ---------------------------------------------------------------------------

Report cmd_kostka(const KostkaArgs& args)
{
    const auto t0 = Clock::now();
    Report rep;
    rep.command = "kostka";

    std::string method = args.method;
    std::optional<Partition> lambda = args.lambda;
    std::optional<Partition> mu = args.mu;
    if (args.mu_row) {
        if (method != "hook")
            throw std::invalid_argument("--mu-row only applies to --method hook");
        if (lambda && *lambda != *args.mu_row)
            throw std::invalid_argument("--mu-row and --lambda name different rows");
        lambda = args.mu_row;
    }
    if (!lambda)
        throw std::invalid_argument("kostka needs --lambda (or --mu-row with --method hook)");
    if (!mu) {
        if (method != "hook")
            throw std::invalid_argument("kostka needs --mu unless --method hook");
        mu = Partition::column(lambda->size());
    }
    if (lambda->size() != mu->size())
        throw std::invalid_argument("|lambda| and |mu| differ");
    if (method == "hook" && !is_column(*mu))
        throw std::invalid_argument("--method hook needs mu = (1^N)");
    if (method == "ring" && mu->size() > 8)
        throw std::invalid_argument("--method ring supports at most 8 variables");
    if (method != "hook" && method != "charge" && method != "ring")
        throw std::invalid_argument("unknown method \"" + method + "\" (hook, charge or ring)");

    rep.inputs = {{"lambda", lambda->to_string()}, {"mu", mu->to_string()}, {"method", method}};

    // every applicable route, keyed by method; ring is automatic up to N = 6
    std::map<std::string, QPoly> k_by_method;
    k_by_method["charge"] = charge_kostka(*lambda, *mu);
    if (is_column(*mu))
        k_by_method["hook"] = kostka_hook(*lambda);
    if (method == "ring" || mu->size() <= 6) {
        const QPoly tilde = rmu_decompose(*mu).component(*lambda);
        k_by_method["ring"] = tilde.invert_variable().shifted(nstat(*mu));
    }

    const QPoly& k = k_by_method.at(method);
    const QPoly kt = tilde_transform(k, *mu);
    rep.add("K", qpoly_json(k), k.to_string());
    rep.add("K_tilde", qpoly_json(kt), kt.to_string());

    Json methods = Json::object();
    std::string methods_text;
    bool agree = true;
    for (const auto& [name, p] : k_by_method) {
        methods[name] = qpoly_json(p);
        methods_text += "  " + name + ": " + p.to_string() + "\n";
        agree = agree && p == k;
    }
    rep.add("methods", methods, methods_text);
    if (k_by_method.size() > 1)
        rep.check("methods_agree", agree, "routes give different polynomials");
    rep.check("value_at_one", k.at_one() == ssyt_count(*lambda, mu->parts()),
              "K(1) differs from the number of semistandard tableaux");
    rep.check("dominance_vanishing", dominance_leq(*mu, *lambda) || k.is_zero(),
              "nonzero K although mu is not dominated by lambda");
    rep.check("nonnegative", k.nonnegative_coefficients());
    rep.seconds = since(t0);
    return rep;
}

Report cmd_ring(const RingArgs& args)
{
    const auto t0 = Clock::now();
    const Partition& mu = args.mu;
    if (mu.size() == 0 || mu.size() > 8)
        throw std::invalid_argument("ring needs 1 <= |mu| <= 8");
    const std::vector<mpq_class> pts = args.points.value_or(default_points(mu.length()));
    if (static_cast<int>(pts.size()) != mu.length())
        throw std::invalid_argument("--points needs one point per part of mu");

    Report rep;
    rep.command = "ring";
    rep.inputs = {{"mu", mu.to_string()}, {"points", points_text(pts)}};

    const QPoly hilbert = rmu_hilbert(mu);
    const GradedSNDecomposition dec = rmu_decompose(mu);
    const std::vector<int> amu = amu_graded_dims(mu, pts);

    rep.add("hilbert", qpoly_json(hilbert), hilbert.to_string());
    rep.add("decomposition", decomposition_json(dec.components), decomposition_text(dec.components));
    rep.add("amu_dims", Json(amu), join(amu));

    bool kostka_match = true;
    std::string bad;
    for (const Partition& lambda : partitions_of(mu.size())) {
        const QPoly want = tilde_transform(charge_kostka(lambda, mu), mu);
        if (!(dec.component(lambda) == want)) {
            kostka_match = false;
            bad = lambda.to_string();
        }
    }
    std::vector<int> hcoeffs;
    for (const auto& c : hilbert.coeff_list())
        hcoeffs.push_back(static_cast<int>(c.get_si()));

    rep.check("kostka_match", kostka_match, "component " + bad + " differs from the charge route");
    rep.check("fstar_match", amu == hcoeffs, "orbit ranks give " + join(amu));
    rep.check("hilbert_consistent", dec.hilbert == hilbert);
    rep.check("orbit_size", hilbert.at_one() == multinomial(mu));
    rep.check("top_degree", hilbert.max_degree() == nstat(mu));
    rep.seconds = since(t0);
    return rep;
}

Report cmd_fusion(const FusionArgs& args)
{
    const auto t0 = Clock::now();
    if (args.mu.empty())
        throw std::invalid_argument("fusion needs a nonempty --mu");
    if (args.n < 2)
        throw std::invalid_argument("fusion needs --n >= 2");
    const bool custom = args.points.has_value();
    const std::vector<mpq_class> pts = args.points.value_or(fusion_default_points(static_cast<int>(args.mu.size())));
    if (pts.size() != args.mu.size())
        throw std::invalid_argument("--points needs one point per factor");
    const Partition sorted = Partition::from_composition(args.mu);

    Report rep;
    rep.command = "fusion";
    rep.inputs = {{"mu", join(args.mu)}, {"n", args.n}, {"points", points_text(pts)}};

    const FilteredSpace fs = generate_filtration(args.mu, args.n, pts);
    const GradedSlnDecomposition dec = graded_decompose(fs);
    rep.add("dims_per_degree", Json(fs.graded_dims()), join(fs.graded_dims()));
    rep.add("decomposition", decomposition_json(dec.assembled), decomposition_text(dec.assembled));

    bool match = true;
    std::string bad;
    for (const Partition& lambda : partitions_of(sorted.size(), args.n)) {
        const QPoly want = tilde_transform(charge_kostka(lambda, sorted), sorted);
        if (!(dec.component(lambda) == want)) {
            match = false;
            bad = lambda.to_string();
        }
    }
    for (const auto& [lambda, p] : dec.assembled)
        if (lambda.length() > args.n)
            match = false;
    rep.check("kostka_match", match, "component " + bad + " differs from ~K");

    // the other built-in point set, or the default one when points were given
    const auto other = custom ? fusion_default_points(static_cast<int>(args.mu.size()))
                              : fusion_default_points(static_cast<int>(args.mu.size()), true);
    const auto other_char = fusion_character(args.mu, args.n, other);
    rep.check("z_independence", other_char == dec.assembled, "points " + points_text(other) + " disagree");

    std::int64_t expected = 1;
    for (int m : args.mu)
        expected *= sln_irrep_dim(Partition::row(m), args.n);
    rep.check("total_dimension", fs.total_dim == expected && weighted_total(dec.assembled, args.n) == expected);
    rep.seconds = since(t0);
    return rep;
}

Report cmd_wedge(const WedgeArgs& args)
{
    const auto t0 = Clock::now();
    if (args.N < 1 || args.N > 8)
        throw std::invalid_argument("wedge needs 1 <= N <= 8");
    if (args.n < 2)
        throw std::invalid_argument("wedge needs --n >= 2");
    Report rep;
    rep.command = "wedge";
    rep.inputs = {{"N", args.N}, {"n", args.n}};

    const auto character = wedge_char(args.N, args.n);
    const auto brute = wedge_brute_force(args.N, args.n);
    rep.add("decomposition", decomposition_json(character), decomposition_text(character));
    rep.add("brute_force", decomposition_json(brute), decomposition_text(brute));

    const int m = args.N / args.n, i = args.N % args.n;
    try {
        const auto normalized = normalized_wedge_char(i, m, args.n);
        rep.add("normalized", decomposition_json(normalized), decomposition_text(normalized));
        rep.check("normalization", true);
    } catch (const CheckFailure& e) {
        rep.check("normalization", false, e.what());
    }

    std::map<Partition, QPoly> nonzero_brute;
    for (const auto& [mu, p] : brute)
        if (!p.is_zero())
            nonzero_brute.emplace(mu, p);
    std::map<Partition, QPoly> nonzero_char;
    for (const auto& [mu, p] : character)
        if (!p.is_zero())
            nonzero_char.emplace(mu, p);
    rep.check("routes_agree", nonzero_brute == nonzero_char, "character and brute-force routes differ");

    std::int64_t syt_total = 0;
    for (const Partition& mu : partitions_of(args.N, args.n))
        syt_total += sln_irrep_dim(mu, args.n) * standard_tableaux_count(mu);
    rep.check("total_dimension", weighted_total(brute, args.n) == syt_total);
    bool nonpositive = true;
    for (const auto& [mu, p] : character)
        nonpositive = nonpositive && (p.is_zero() || p.max_degree() <= 0);
    rep.check("degrees_in_q_inverse", nonpositive);
    rep.seconds = since(t0);
    return rep;
}

Report cmd_winf(const WinfArgs& args)
{
    const auto t0 = Clock::now();
    if (args.n < 1)
        throw std::invalid_argument("winf needs --n >= 1");
    if (args.mu_bar.length() > args.n)
        throw std::invalid_argument("winf: mu has more than n rows");
    if (args.depth < 0 || args.m_max < 0)
        throw std::invalid_argument("winf: depth and mmax must be nonnegative");
    const int i = args.i.value_or(args.mu_bar.size() % args.n);

    Report rep;
    rep.command = "winf";
    rep.inputs = {{"mu", args.mu_bar.to_string()}, {"n", args.n}, {"i", i}, {"depth", args.depth},
                  {"mmax", args.m_max}};

    const std::int64_t lead = nstat(conjugate(args.mu_bar)) + args.mu_bar.size();
    const QSeries chi = winf_char(args.mu_bar, args.n, static_cast<int>(lead) + args.depth);
    rep.add("winf", Json{{"leading_exponent", lead}, {"coefficients", coeffs_json(chi.coeff_list(lead))}},
            chi.to_string());
    rep.check("winf_nonnegative", chi.poly().nonnegative_coefficients());

    if (args.n >= 2) {
        const StabilizationReport st = limit_stabilization(args.mu_bar, args.n, i, args.depth, args.m_max);
        Json seq = Json::array();
        std::string seq_text;
        bool factorization = true;
        std::vector<std::string> printed_fail;
        for (std::size_t k = 0; k < st.ms.size(); ++k) {
            seq.push_back({{"m", st.ms[k]},
                           {"mu", partition_json(st.shapes[k])},
                           {"leading_exponent", st.leading[k]},
                           {"window", coeffs_json(st.windows[k])}});
            seq_text += "  m=" + std::to_string(st.ms[k]) + " " + st.shapes[k].to_string() + " q^" +
                        std::to_string(st.leading[k]) + ": " + coeffs_text(st.windows[k]) + "\n";
            try {
                const auto h = hook_factorization_check(st.shapes[k], args.n);
                if (!h.printed_holds)
                    printed_fail.push_back(st.shapes[k].to_string());
            } catch (const CheckFailure&) {
                factorization = false;
            }
        }
        rep.add("sequence", seq, seq_text);
        Json lim = {{"stable_from", st.stable_from ? Json(*st.stable_from) : Json(nullptr)},
                    {"window", coeffs_json(st.limit_window)},
                    {"winf_window", coeffs_json(st.winf_window)},
                    {"monomial_shift", st.shift}};
        rep.add("limit", lim,
                st.stable_from ? "stable from m=" + std::to_string(*st.stable_from) + ": " +
                                     coeffs_text(st.limit_window) + " (winf: " + coeffs_text(st.winf_window) +
                                     ", shift q^" + std::to_string(st.shift) + ")"
                               : std::string("no stabilization up to m=") + std::to_string(args.m_max));
        rep.add("printed_factorization_fails_on", Json(printed_fail), std::to_string(printed_fail.size()) + " shapes");
        // a sequence that has not settled yet is reported, not failed
        if (st.stable_from)
            rep.check("matches_winf", st.matches_winf, "stabilized window differs from winf_char");
        rep.check("hook_factorization", factorization);
    }
    rep.seconds = since(t0);
    return rep;
}

}  // namespace kostka::cli
