#include <random>
#include <catch2/catch_amalgamated.hpp>
#include "oracles.hpp"

using namespace arrtop;

namespace {

ChamberSpacePtr braid3() { return makeChamberSpace(braidArrangement(3)); }

SimplicialComplex triangleBoundary() { return SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}}); }

long eulerOf(const SimplicialComplex& k)
{
    long chi = 0;
    auto f = k.fVector(10'000'000);
    for (std::size_t d = 0; d < f.size(); ++d)
        chi += (d % 2 ? -1 : 1) * static_cast<long>(f[d]);
    return chi;
}

/** Every subset of every facet is found by contains(). */
void checkSubsetClosure(const SimplicialComplex& k)
{
    for (const auto& f : k.facets())
    {
        if (f.size() > 12)
            continue;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << f.size()); ++mask)
        {
            Simplex s;
            for (std::size_t i = 0; i < f.size(); ++i)
                if ((mask >> i) & 1)
                    s.push_back(f[i]);
            REQUIRE(k.contains(s));
        }
    }
}

}   // namespace

TEST_CASE("SimplicialComplex keeps only maximal simplices", "[complex]")
{
    SimplicialComplex k(4, {{2, 1, 0}, {0, 1}, {3}, {1, 2, 0}});
    REQUIRE(k.facets() == std::vector<Simplex>{{0, 1, 2}, {3}});
    REQUIRE(k.dimension() == 2);
    REQUIRE_FALSE(k.isPure());
    REQUIRE(k.contains({2, 0}));
    REQUIRE_FALSE(k.contains({0, 3}));
    REQUIRE(k.fVector() == std::vector<std::size_t>{4, 3, 1});
    REQUIRE_THROWS_AS(SimplicialComplex(2, {{0, 5}}), IndexOutOfRange);
}

TEST_CASE("SimplicialMap validation and composition", "[complex]")
{
    auto k = std::make_shared<const SimplicialComplex>(triangleBoundary());
    auto rot = SimplicialMap(k, k, {1, 2, 0});
    auto back = compose(rot, compose(rot, rot));
    REQUIRE(back.vertexMap() == SimplicialMap::identity(k).vertexMap());

    auto edge = std::make_shared<const SimplicialComplex>(SimplicialComplex(2, {{0}, {1}}));
    REQUIRE_THROWS_AS(SimplicialMap(k, edge, {0, 1, 0}), NotSimplicial);
}

TEST_CASE("separates", "[complexes]")
{
    auto space = braid3();
    auto idx = [&](const char* s) { return space->indexOf(SignVector::fromString(s)); };
    REQUIRE_FALSE(separates(*space, 0, {{idx("+++")}}));
    REQUIRE(separates(*space, 0, {{idx("+++")}, {idx("---")}}));
    // both profiles read (+,+) on H2
    REQUIRE_FALSE(separates(*space, 2, {{idx("+++"), idx("+++")}, {idx("--+"), idx("+++")}}));
}

TEST_CASE("build_M", "[complexes]")
{
    auto m1 = buildM(braid3(), 1);
    REQUIRE(m1.vertexCount() == 6);
    REQUIRE(m1.facets().size() == 6);
    for (const auto& f : m1.facets())
        REQUIRE(f.size() == 3);
    REQUIRE(m1.fVector() == std::vector<std::size_t>{6, 12, 6});

    auto m2 = buildM(braid3(), 2);
    REQUIRE(m2.vertexCount() == 36);
    REQUIRE(m2.facets().size() == 12);
    for (const auto& f : m2.facets())
        REQUIRE(f.size() == 9);
    checkSubsetClosure(m2);

    auto b1 = buildM(makeChamberSpace(booleanArrangement(1)), 1);
    REQUIRE(b1.vertexCount() == 2);
    REQUIRE(b1.facets() == std::vector<Simplex>{{0}, {1}});
}

TEST_CASE("M_m simplices are the profile sets some hyperplane does not separate", "[complexes][oracle]")
{
    for (auto space : {braid3(), makeChamberSpace(booleanArrangement(2))})
    {
        auto m1 = buildM(space, 1);
        const std::size_t n = space->chamberCount();
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask)
        {
            Simplex s;
            std::vector<Profile> profiles;
            for (std::uint32_t c = 0; c < n; ++c)
                if ((mask >> c) & 1)
                {
                    s.push_back(c);
                    profiles.push_back({c});
                }
            bool expected = false;
            for (std::size_t h = 0; h < space->hyperplaneCount(); ++h)
                expected = expected || !separates(*space, h, profiles);
            REQUIRE(m1.contains(s) == expected);
        }
    }
}

TEST_CASE("build_B", "[complexes]")
{
    auto b1 = buildB(braid3(), 1);
    REQUIRE(b1.vertexCount() == 6);
    REQUIRE(b1.facets().size() == 6);

    auto square = buildB(makeChamberSpace(booleanArrangement(2)), 1);
    REQUIRE(square.vertexCount() == 4);
    REQUIRE(square.facets().size() == 4);
    for (const auto& f : square.facets())
        REQUIRE(f.size() == 2);
    auto f = square.fVector();
    REQUIRE(f == std::vector<std::size_t>{4, 4});

    auto b2 = buildB(braid3(), 2);
    REQUIRE(b2.vertexCount() == 12);
    REQUIRE(b2.facets().size() == 36);
    for (const auto& facet : b2.facets())
    {
        REQUIRE(facet.size() == 3);
        std::set<std::size_t> hs;
        for (auto v : facet)
            hs.insert(b2.label(v).hyperplane);
        REQUIRE(hs.size() == 3);
    }
}

TEST_CASE("nerves", "[complexes]")
{
    using Sets = std::vector<std::set<int> >;
    auto coveringOf = [](Sets sets) {
        Covering<int> cov;
        for (std::size_t i = 0; i < sets.size(); ++i)
            cov.labels.push_back(static_cast<int>(i));
        cov.intersects = [sets](const std::vector<std::uint32_t>& members) {
            std::set<int> common = sets[members[0]];
            for (std::size_t i = 1; i < members.size(); ++i)
            {
                std::set<int> next;
                for (int x : common)
                    if (sets[members[i]].count(x))
                        next.insert(x);
                common = std::move(next);
            }
            return !common.empty();
        };
        return cov;
    };
    auto disjoint = nerveOfCovering(coveringOf({{1}, {2}}));
    REQUIRE(disjoint.facets() == std::vector<Simplex>{{0}, {1}});
    auto circle = nerveOfCovering(coveringOf({{1, 2}, {2, 3}, {3, 1}}));
    REQUIRE(circle.facets() == triangleBoundary().facets());

    for (std::size_t m : {1, 2})
    {
        auto space = braid3();
        auto nerve = nerveOfCovering(arrangementCovering(space, m));
        auto b = buildB(space, m);
        REQUIRE(nerve.labels() == b.labels());
        REQUIRE(nerve.facets() == b.facets());
    }
}

TEST_CASE("dual complexes", "[complexes]")
{
    auto tri = dualComplex(triangleBoundary());
    REQUIRE(tri.facets() == triangleBoundary().facets());
    auto two = dualComplex(SimplicialComplex(4, {{0, 1}, {2, 3}}));
    REQUIRE(two.facets() == std::vector<Simplex>{{0}, {1}});
    REQUIRE_THROWS_AS(dualComplex(SimplicialComplex(3, {{0, 1}, {2}})), NonPureComplex);
}

TEST_CASE("M_m is dual to B_m", "[complexes]")
{
    for (const auto& [arr, m] : std::vector<std::pair<Arrangement, std::size_t> >{
             {braidArrangement(3), 1}, {braidArrangement(3), 2}, {booleanArrangement(2), 1},
             {booleanArrangement(2), 2}, {booleanArrangement(3), 1}, {booleanArrangement(3), 2}})
    {
        auto report = verifyDuality(makeChamberSpace(arr), m);
        REQUIRE(report.holds);
    }
}

TEST_CASE("induced maps on M", "[complexes]")
{
    auto space = braid3();
    auto m1 = std::make_shared<const MComplex>(buildM(space, 1));
    auto m2 = std::make_shared<const MComplex>(buildM(space, 2));

    auto delta = inducedMapM(deltaMap(space, 2), m1, m2);
    for (std::uint32_t c = 0; c < 6; ++c)
        REQUIRE(delta(c) == c * 6 + c);

    const std::size_t top = space->indexOf(SignVector::fromString("+++"));
    auto rho = inducedMapM(rhoMap(space, 1, {top}), m1, m2);
    std::set<std::uint32_t> image(rho.vertexMap().begin(), rho.vertexMap().end());
    REQUIRE(image.size() == 6);

    auto bij = iiaBijections(space);
    auto anti = inducedMapM(bij[1].toChamberMap(), m1, m1);
    for (const auto& f : m1.get()->facets())
        REQUIRE(std::find(m1->facets().begin(), m1->facets().end(), anti.image(f)) != m1->facets().end());

    auto broken = ChamberMap::fromFunction(space, 1, 1, [top](const Profile& p) {
        return Profile{p[0] == top ? top : (top + 1) % 6};
    });
    if (!checkIIA(broken))
        REQUIRE_THROWS_AS(inducedMapM(broken, m1, m1), NotIIA);
}

TEST_CASE("induced maps on M are functorial", "[complexes][property]")
{
    auto space = braid3();
    auto m1 = std::make_shared<const MComplex>(buildM(space, 1));
    auto m2 = std::make_shared<const MComplex>(buildM(space, 2));
    for (const auto& phi : enumerateAdmissible(space, 2))
        for (std::size_t i = 1; i <= 2; ++i)
            for (std::size_t c = 0; c < space->chamberCount(); ++c)
            {
                auto rho = rhoMap(space, i, {c});
                auto whole = inducedMapM(compose(phi, rho), m1, m1);
                auto parts = compose(inducedMapM(phi, m2, m1), inducedMapM(rho, m1, m2));
                REQUIRE(whole.vertexMap() == parts.vertexMap());
            }
}

TEST_CASE("index maps on B", "[complexes]")
{
    auto space = braid3();
    auto b1 = std::make_shared<const BComplex>(buildB(space, 1));
    auto b2 = std::make_shared<const BComplex>(buildB(space, 2));
    auto delta = deltaIndexMap(2, b1, b2);
    for (std::uint32_t v = 0; v < 6; ++v)
    {
        const auto& src = b1->label(v);
        REQUIRE(b2->label(delta(v)) == BVertex{src.hyperplane, src.signs + src.signs});
    }
    const std::size_t top = space->indexOf(SignVector::fromString("+++"));
    auto rho = rhoIndexMap(space, 1, {top}, b1, b2);
    for (std::uint32_t v = 0; v < 6; ++v)
    {
        const auto& src = b1->label(v);
        REQUIRE(b2->label(rho(v)) == BVertex{src.hyperplane, src.signs + "+"});
    }
}

TEST_CASE("barycentric subdivision", "[complexes]")
{
    auto edge = barycentricSubdivision(SimplicialComplex(2, {{0, 1}}));
    REQUIRE(edge.vertexCount() == 3);
    REQUIRE(edge.facets().size() == 2);

    auto hex = barycentricSubdivision(triangleBoundary());
    REQUIRE(hex.vertexCount() == 6);
    REQUIRE(hex.fVector() == std::vector<std::size_t>{6, 6});

    auto tri = barycentricSubdivision(SimplicialComplex(3, {{0, 1, 2}}));
    REQUIRE(tri.facets().size() == 6);
    REQUIRE_THROWS_AS(barycentricSubdivision(SimplicialComplex(12, {{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}), 1000),
                      BudgetExceeded);
}

TEST_CASE("subdivision preserves the Euler characteristic", "[complexes][property]")
{
    std::vector<SimplicialComplex> ks = {triangleBoundary(), SimplicialComplex(4, {{0, 1, 2}, {2, 3}}),
                                         buildM(braid3(), 1), buildB(braid3(), 2),
                                         buildB(makeChamberSpace(booleanArrangement(3)), 1)};
    for (const auto& k : ks)
    {
        REQUIRE(eulerOf(barycentricSubdivision(k)) == eulerOf(k));
        checkSubsetClosure(k);
    }
}

TEST_CASE("subdivision skeleton equals the skeleton of the full subdivision", "[complexes][property]")
{
    std::vector<SimplicialComplex> ks = {SimplicialComplex(4, {{0, 1, 2, 3}}), SimplicialComplex(5, {{0, 1, 2}, {2, 3}, {4}}),
                                         buildM(braid3(), 1)};
    for (const auto& k : ks)
    {
        auto full = barycentricSubdivision(k);
        for (std::size_t d = 0; d <= 3; ++d)
        {
            auto skel = subdivisionSkeleton(k, d);
            REQUIRE(skel.labels() == full.labels());
            Budget b(10'000'000);
            auto want = full.simplices(d, b);
            Budget b2(10'000'000);
            auto got = skel.simplices(d, b2);
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("sdMap is simplicial and functorial", "[complexes]")
{
    auto space = braid3();
    auto m1 = std::make_shared<const MComplex>(buildM(space, 1));
    auto sd = std::make_shared<const LabeledComplex<Simplex> >(barycentricSubdivision(*m1));
    auto anti = inducedMapM(iiaBijections(space)[1].toChamberMap(), m1, m1);
    auto sa = sdMap(anti, sd, sd);
    auto twice = compose(sa, sa);
    REQUIRE(twice.vertexMap() == SimplicialMap::identity(sd).vertexMap());
}
