/**
 * Subcommand dispatch behind the arrtop command-line tool.  run() is
 * callable in-process and returns the JSON report with its exit code:
 * 0 verified, 1 falsified (the checked property fails on this input),
 * 2 error.
 */

#ifndef ARRTOP_CLI_HPP
#define ARRTOP_CLI_HPP

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>
#include <json.hpp>
#include "arrangement.hpp"
#include "arrangement_complexes.hpp"
#include "budget.hpp"
#include "chambers.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "social_choice.hpp"
#include "sum_identity.hpp"

namespace arrtop::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kVerified = 0;
inline constexpr int kFalsified = 1;
inline constexpr int kError = 2;

struct Options
{
    std::string command;
    std::string input;                      // file path or braid-N / boolean-N
    std::optional<std::size_t> m;
    std::string complex = "M";
    std::optional<std::size_t> max_dim;
    std::optional<std::string> base_chamber;
    std::uint64_t max_candidates = kDefaultCandidateBudget;
    std::uint64_t max_simplices = kDefaultSimplexBudget;
    bool timing = true;
};

struct Report
{
    Json json;
    int exit_code = kError;
};

inline const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> names = {
        "chambers", "decompose", "circuits", "complex", "homology",
        "dual-check", "verify-arrow", "iia-metric", "sum-identity"};
    return names;
}

namespace detail {

/** Error carrying extra JSON fields (row locations for input errors). */
class InputError : public Error
{
    public:
        std::string type;
        Json extra;
        InputError(std::string type, const std::string& what, Json extra)
            : Error(what), type(std::move(type)), extra(std::move(extra)) {}
};

inline Json locationJson(const SourceLocation& loc)
{
    return Json{{"line", loc.line}, {"column", loc.column}};
}

inline Arrangement loadArrangement(const std::string& input)
{
    if (auto builtin = builtinArrangement(input))
        return *builtin;
    const std::string text = readTextFile(input);
    ArrangementFile file = readArrangementFile(text);
    try
    {
        return normalizeArrangement(file.dim, file.rows);
    }
    catch (const ZeroNormal& e)
    {
        throw InputError("ZeroNormal", e.what(),
                         Json{{"row", e.index}, {"location", locationJson(file.row_locations.at(e.index))}});
    }
    catch (const DuplicateHyperplane& e)
    {
        throw InputError("DuplicateHyperplane", e.what(),
                         Json{{"rows", {e.first, e.second}},
                              {"locations", {locationJson(file.row_locations.at(e.first)),
                                             locationJson(file.row_locations.at(e.second))}}});
    }
}

inline std::string errorType(const std::exception& e)
{
#define ARRTOP_ERROR_NAME(T) if (dynamic_cast<const T*>(&e)) return #T;
    ARRTOP_ERROR_NAME(ZeroNormal)
    ARRTOP_ERROR_NAME(DuplicateHyperplane)
    ARRTOP_ERROR_NAME(DimensionMismatch)
    ARRTOP_ERROR_NAME(IndexOutOfRange)
    ARRTOP_ERROR_NAME(BudgetExceeded)
    ARRTOP_ERROR_NAME(ArityMismatch)
    ARRTOP_ERROR_NAME(ArrangementMismatch)
    ARRTOP_ERROR_NAME(ShapeMismatch)
    ARRTOP_ERROR_NAME(EmptyInput)
    ARRTOP_ERROR_NAME(NonPureComplex)
    ARRTOP_ERROR_NAME(NotIIA)
    ARRTOP_ERROR_NAME(NotSimplicial)
    ARRTOP_ERROR_NAME(NotSphereLike)
    ARRTOP_ERROR_NAME(RankTooLow)
    ARRTOP_ERROR_NAME(PreconditionError)
    ARRTOP_ERROR_NAME(ParseError)
    ARRTOP_ERROR_NAME(ArithmeticOverflow)
#undef ARRTOP_ERROR_NAME
    if (dynamic_cast<const Error*>(&e))
        return "Error";
    return "InternalError";
}

inline Json bigJson(const BigInt& x)
{
    if (x >= INT64_MIN && x <= INT64_MAX)
        return static_cast<std::int64_t>(x);
    return x.str();
}

inline Json matrixJson(const IntMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
    {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(bigJson(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json profileJson(const ChamberSpace& space, const Profile& p)
{
    Json out = Json::array();
    for (std::size_t c : p)
        out.push_back(space.chamber(c).signs.toString());
    return out;
}

inline Json budgetJson(const std::string& kind, std::uint64_t used, std::uint64_t limit)
{
    return Json{{"kind", kind}, {"used", used}, {"limit", limit}};
}

struct Context
{
    const Options& opts;
    ChamberSpacePtr space;
    DecompositionReport decomposition;
    std::size_t rank = 0;
    Json payload = Json::object();
    Json budget;
    int exit_code = kVerified;
};

inline void chambersCommand(Context& ctx)
{
    const auto& space = *ctx.space;
    Json list = Json::array();
    for (const auto& c : space.chambers())
    {
        Json witness = Json::array();
        for (const auto& x : c.witness)
            witness.push_back(toString(x));
        list.push_back(Json{{"signs", c.signs.toString()}, {"witness", witness}});
    }
    ctx.payload["count"] = space.chamberCount();
    ctx.payload["chambers"] = std::move(list);
    const bool exhaustive = space.hyperplaneCount() <= 12;
    Json check{{"performed", exhaustive}};
    if (exhaustive)
    {
        auto all = enumerateChambersExhaustive(space.arrangement());
        bool same = all.size() == space.chamberCount();
        for (std::size_t i = 0; same && i < all.size(); ++i)
            same = all[i] == space.chamber(i).signs;
        check["matches"] = same;
        if (!same)
            ctx.exit_code = kFalsified;
    }
    ctx.payload["exhaustive_check"] = std::move(check);
    ctx.budget = budgetJson("none", 0, 0);
}

inline void decomposeCommand(Context& ctx)
{
    std::size_t sum = 0;
    for (std::size_t r : ctx.decomposition.part_ranks)
        sum += r;
    ctx.payload["parts"] = ctx.decomposition.parts;
    ctx.payload["part_ranks"] = ctx.decomposition.part_ranks;
    ctx.payload["indecomposable"] = ctx.decomposition.indecomposable();
    ctx.payload["rank_additive"] = sum == ctx.rank;
    ctx.payload["separable_hyperplanes"] = separableHyperplanes(ctx.space->arrangement());
    if (sum != ctx.rank)
        ctx.exit_code = kFalsified;
    ctx.budget = budgetJson("none", 0, 0);
}

inline void circuitsCommand(Context& ctx)
{
    const auto& arr = ctx.space->arrangement();
    const auto circuits = circuitsOf(arr);
    const auto gamma = gammaGraph(arr);
    Json edges = Json::array();
    for (std::size_t i = 0; i < arr.size(); ++i)
        for (std::size_t j : gamma.adjacency[i])
            if (i < j)
                edges.push_back({i, j});
    ctx.payload["circuits"] = circuits;
    ctx.payload["gamma_edges"] = std::move(edges);
    ctx.payload["gamma_connected"] = ctx.decomposition.indecomposable();
    ctx.budget = budgetJson("none", 0, 0);
}

inline std::size_t voters(const Context& ctx, std::size_t fallback)
{
    std::size_t m = ctx.opts.m.value_or(fallback);
    if (m == 0)
        throw PreconditionError("--m must be at least 1");
    return m;
}

/** The requested complex as an unlabeled structure plus vertex label strings. */
inline std::pair<std::shared_ptr<const SimplicialComplex>, std::vector<std::string> >
buildRequestedComplex(const Context& ctx, std::size_t m)
{
    std::vector<std::string> names;
    if (ctx.opts.complex == "M")
    {
        auto k = std::make_shared<const MComplex>(buildM(ctx.space, m, ctx.opts.max_simplices));
        for (const auto& l : k->labels())
            names.push_back(toString(l));
        return {k, names};
    }
    if (ctx.opts.complex == "B")
    {
        auto k = std::make_shared<const BComplex>(buildB(ctx.space, m, ctx.opts.max_simplices));
        for (const auto& l : k->labels())
            names.push_back(toString(l));
        return {k, names};
    }
    throw PreconditionError("--complex must be M or B");
}

inline void complexCommand(Context& ctx)
{
    const std::size_t m = voters(ctx, 1);
    auto [k, names] = buildRequestedComplex(ctx, m);
    const auto f = k->fVector(ctx.opts.max_simplices);
    std::uint64_t total = 0;
    for (auto x : f)
        total += x;
    ctx.payload["complex"] = ctx.opts.complex;
    ctx.payload["m"] = m;
    ctx.payload["vertex_count"] = k->vertexCount();
    ctx.payload["facet_count"] = k->facets().size();
    ctx.payload["dimension"] = k->dimension();
    ctx.payload["pure"] = k->isPure();
    ctx.payload["f_vector"] = f;
    ctx.payload["vertices"] = names;
    ctx.payload["facets"] = k->facets();
    ctx.budget = budgetJson("simplices", total, ctx.opts.max_simplices);
}

inline void homologyCommand(Context& ctx)
{
    const std::size_t m = voters(ctx, 1);
    const std::size_t max_dim = ctx.opts.max_dim.value_or(ctx.rank > 0 ? ctx.rank - 1 : 0);
    auto [k, names] = buildRequestedComplex(ctx, m);
    const ChainComplex cc = chainComplex(*k, max_dim + 1, ctx.opts.max_simplices);
    HomologyOptions ho;
    ho.simplex_limit = ctx.opts.max_simplices;
    const auto groups = homologyFromChains(cc, max_dim, ho);
    Json gj = Json::array();
    for (const auto& g : groups)
    {
        Json torsion = Json::array();
        for (const auto& t : g.torsion)
            torsion.push_back(bigJson(t));
        gj.push_back(Json{{"dim", g.dim}, {"betti", g.betti}, {"torsion", torsion}});
    }
    const bool dd = boundarySquaredZero(cc);
    ctx.payload["complex"] = ctx.opts.complex;
    ctx.payload["m"] = m;
    ctx.payload["max_dim"] = max_dim;
    ctx.payload["betti"] = bettiNumbers(groups);
    ctx.payload["groups"] = std::move(gj);
    ctx.payload["boundary_squared_zero"] = dd;
    if (!dd)
        ctx.exit_code = kFalsified;
    ctx.budget = budgetJson("simplices", cc.totalCells(), ctx.opts.max_simplices);
}

inline void dualCheckCommand(Context& ctx)
{
    const std::size_t m = voters(ctx, 1);
    const auto report = verifyDuality(ctx.space, m, ctx.opts.max_simplices);
    const BComplex b = buildB(ctx.space, m, ctx.opts.max_simplices);
    const auto dual = dualComplex(b);
    Json pairs = Json::array();
    if (report.holds)
        for (std::size_t p = 0; p < report.bijection.size(); ++p)
        {
            Json facet = Json::array();
            for (std::uint32_t v : dual.label(report.bijection[p]))
                facet.push_back(toString(b.label(v)));
            pairs.push_back(Json{{"profile", profileJson(*ctx.space, decodeProfile(*ctx.space, m, p))},
                                 {"b_facet", facet}});
        }
    ctx.payload["m"] = m;
    ctx.payload["holds"] = report.holds;
    ctx.payload["bijection"] = std::move(pairs);
    if (!report.holds)
        ctx.exit_code = kFalsified;
    ctx.budget = budgetJson("simplices", 0, ctx.opts.max_simplices);
}

inline void verifyArrowCommand(Context& ctx)
{
    const std::size_t m = voters(ctx, 2);
    Budget budget(ctx.opts.max_candidates, "candidate-profile checks");
    const auto maps = enumerateAdmissible(ctx.space, m, budget);
    const bool indecomposable = ctx.decomposition.indecomposable();
    const bool enough = ctx.space->hyperplaneCount() >= 3;

    std::size_t projections = 0;
    Json slots = Json::array();
    std::optional<std::size_t> first_bad;
    for (std::size_t i = 0; i < maps.size(); ++i)
    {
        if (auto slot = classifyProjection(maps[i]))
        {
            ++projections;
            slots.push_back(*slot);
        }
        else if (!first_bad)
        {
            first_bad = i;
        }
    }
    const bool all = projections == maps.size();
    ctx.payload["m"] = m;
    ctx.payload["hypotheses"] = Json{{"indecomposable", indecomposable},
                                     {"at_least_three_hyperplanes", enough},
                                     {"met", indecomposable && enough}};
    ctx.payload["admissible"] = maps.size();
    ctx.payload["projections"] = projections;
    ctx.payload["non_projections"] = maps.size() - projections;
    ctx.payload["all_projections"] = all;
    ctx.payload["projection_slots"] = std::move(slots);
    if (all && !maps.empty() && m <= 3)
    {
        Json ne = Json::array();
        for (const auto& phi : maps)
        {
            const std::size_t i0 = *classifyProjection(phi);
            const auto r = checkNonExpanding(phi, i0);
            ne.push_back(Json{{"slot", i0}, {"all_bijections", r.all_bijections},
                              {"non_expanding", r.non_expanding}, {"pairs_checked", r.pairs_checked}});
        }
        ctx.payload["non_expanding"] = std::move(ne);
    }
    if (first_bad)
    {
        const auto fam = checkIIA(maps[*first_bad]);
        ctx.payload["counterexample"] = Json{{"index", *first_bad}, {"family", familyToJson(*fam)}};
        if (!(indecomposable && enough))
            ctx.payload["note"] = "theorem hypothesis unmet";
        ctx.exit_code = kFalsified;
    }
    ctx.budget = budgetJson(budget.what(), budget.used(), budget.limit());
}

inline void iiaMetricCommand(Context& ctx)
{
    const auto bijections = iiaBijections(ctx.space);
    const auto separable = separableHyperplanes(ctx.space->arrangement());
    const auto min_distance = minDistanceFromId(ctx.space);
    Json names = Json::array();
    for (const auto& b : bijections)
        names.push_back(b.toString());

    const bool hamming_ok = satisfiesMetricAxioms(bijections, [](const IIABijection& a, const IIABijection& b) {
        return hammingDistance(a, b);
    });
    std::vector<std::size_t> chambers(ctx.space->chamberCount());
    std::iota(chambers.begin(), chambers.end(), 0);
    const auto& space = *ctx.space;
    const bool chamber_ok = satisfiesMetricAxioms(chambers, [&space](std::size_t a, std::size_t b) {
        return profileDistance(space, Profile{a}, Profile{b});
    });
    const bool hypothesis = separable.empty();
    const bool fact = !min_distance || *min_distance >= 2;

    ctx.payload["bijections"] = std::move(names);
    ctx.payload["count"] = bijections.size();
    ctx.payload["min_distance_from_id"] = min_distance ? Json(*min_distance) : Json(nullptr);
    ctx.payload["separable_hyperplanes"] = separable;
    ctx.payload["hypothesis_met"] = hypothesis;
    ctx.payload["distance_at_least_two"] = fact;
    ctx.payload["metric_axioms"] = Json{{"hamming", hamming_ok}, {"chamber", chamber_ok}};
    if (!fact)
    {
        for (const auto& b : bijections)
            if (!b.isIdentity() && static_cast<std::size_t>(std::popcount(b.flips)) == *min_distance)
            {
                ctx.payload["counterexample"] = b.toString();
                break;
            }
        if (!hypothesis)
            ctx.payload["note"] = "fact hypothesis unmet: some hyperplane splits off";
    }
    if (!fact || !hamming_ok || !chamber_ok)
        ctx.exit_code = kFalsified;
    ctx.budget = budgetJson("none", 0, 0);
}

inline void sumIdentityCommand(Context& ctx)
{
    const std::size_t m = voters(ctx, 2);
    std::size_t c0 = 0;
    if (ctx.opts.base_chamber)
    {
        SignVector s = SignVector::fromString(*ctx.opts.base_chamber);
        c0 = ctx.space->indexOf(s);
        if (c0 == ChamberSpace::npos)
            throw PreconditionError("--base-chamber " + *ctx.opts.base_chamber + " is not a chamber");
    }
    Budget budget(ctx.opts.max_candidates, "candidate-profile checks");
    const auto phis = enumerateAdmissible(ctx.space, m, budget);
    const auto report = verifySumIdentity(ctx.space, m, c0, phis, ctx.opts.max_simplices);

    Json rho = Json::array();
    for (const auto& r : report.rho_maps)
        rho.push_back(matrixJson(r));
    Json checks = Json::array();
    for (std::size_t i = 0; i < phis.size(); ++i)
    {
        Json summands = Json::array();
        for (const auto& s : report.phi_checks[i].summands)
            summands.push_back(matrixJson(s));
        auto slot = classifyProjection(phis[i]);
        checks.push_back(Json{{"projection_slot", slot ? Json(*slot) : Json(nullptr)},
                              {"summands", summands},
                              {"sum", matrixJson(report.phi_checks[i].sum)},
                              {"equals_identity", report.phi_checks[i].equals_identity}});
    }
    ctx.payload["m"] = m;
    ctx.payload["base_chamber"] = ctx.space->chamber(c0).signs.toString();
    ctx.payload["degree"] = report.degree;
    ctx.payload["source_betti"] = report.source_betti;
    ctx.payload["target_betti"] = report.target_betti;
    ctx.payload["rho_maps"] = std::move(rho);
    ctx.payload["rho_sum"] = matrixJson(report.rho_sum);
    ctx.payload["delta_map"] = matrixJson(report.delta_map);
    ctx.payload["rho_sum_equals_delta"] = report.rho_sum_equals_delta;
    ctx.payload["phi_checks"] = std::move(checks);
    if (!report.holds())
        ctx.exit_code = kFalsified;
    ctx.budget = budgetJson(budget.what(), budget.used(), budget.limit());
}

}   // namespace detail

/** Run one subcommand and build its report. */
inline Report run(const Options& opts)
{
    using namespace detail;
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.json["command"] = opts.command;
    report.json["input"] = opts.input;
    try
    {
        const auto& names = subcommands();
        if (std::find(names.begin(), names.end(), opts.command) == names.end())
            throw PreconditionError("unknown subcommand '" + opts.command + "'");

        Context ctx{opts, makeChamberSpace(loadArrangement(opts.input)), {}, 0, Json::object(), Json(), kVerified};
        const Arrangement& arr = ctx.space->arrangement();
        ctx.rank = rankOf(arr);
        ctx.decomposition = decompose(arr);
        report.json["arrangement"] = Json{{"n", arr.size()},
                                          {"dim", arr.dim()},
                                          {"rank", ctx.rank},
                                          {"indecomposable", ctx.decomposition.indecomposable()},
                                          {"parts", ctx.decomposition.parts}};

        if (opts.command == "chambers") chambersCommand(ctx);
        else if (opts.command == "decompose") decomposeCommand(ctx);
        else if (opts.command == "circuits") circuitsCommand(ctx);
        else if (opts.command == "complex") complexCommand(ctx);
        else if (opts.command == "homology") homologyCommand(ctx);
        else if (opts.command == "dual-check") dualCheckCommand(ctx);
        else if (opts.command == "verify-arrow") verifyArrowCommand(ctx);
        else if (opts.command == "iia-metric") iiaMetricCommand(ctx);
        else sumIdentityCommand(ctx);

        report.json["payload"] = std::move(ctx.payload);
        report.json["budget"] = std::move(ctx.budget);
        report.json["verified"] = ctx.exit_code == kVerified;
        report.exit_code = ctx.exit_code;
    }
    catch (const InputError& e)
    {
        Json err{{"type", e.type}, {"message", e.what()}};
        err.update(e.extra);
        report.json["error"] = std::move(err);
        report.exit_code = kError;
    }
    catch (const std::exception& e)
    {
        Json err{{"type", errorType(e)}, {"message", e.what()}};
        if (auto* b = dynamic_cast<const BudgetExceeded*>(&e))
        {
            err["count"] = b->count;
            err["limit"] = b->limit;
        }
        if (auto* p = dynamic_cast<const ParseError*>(&e))
            err["location"] = locationJson({p->line, p->column});
        report.json["error"] = std::move(err);
        report.exit_code = kError;
    }
    if (opts.timing)
    {
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.json["timing"] = Json{{"seconds", seconds}};
    }
    return report;
}

}   // namespace arrtop::cli

#endif
