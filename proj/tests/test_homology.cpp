#include <random>
#include <catch2/catch_amalgamated.hpp>
#include "oracles.hpp"

using namespace arrtop;

namespace {

ChamberSpacePtr braid3() { return makeChamberSpace(braidArrangement(3)); }

IntMatrix matrixOf(std::size_t rows, std::size_t cols, std::vector<long> values)
{
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = values[i * cols + j];
    return m;
}

std::vector<BigInt> bigs(std::initializer_list<long> xs)
{
    return std::vector<BigInt>(xs.begin(), xs.end());
}

std::vector<std::size_t> betti(const SimplicialComplex& k, std::size_t max_dim, bool coreduce = true)
{
    HomologyOptions opts;
    opts.coreduce = coreduce;
    opts.simplex_limit = 50'000'000;
    return bettiNumbers(homologyGroups(k, max_dim, opts));
}

/** The real projective plane, 6-vertex triangulation. */
SimplicialComplex rp2()
{
    return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                 {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
}

}   // namespace

TEST_CASE("Smith normal form examples", "[smith]")
{
    REQUIRE(smithNormalForm(IntMatrix::identity(2)).diagonal == bigs({1, 1}));
    REQUIRE(smithNormalForm(matrixOf(2, 2, {2, 0, 0, 4})).diagonal == bigs({2, 4}));
    REQUIRE(smithNormalForm(matrixOf(2, 2, {1, 1, 1, 1})).diagonal == bigs({1}));
    REQUIRE(smithNormalForm(matrixOf(2, 2, {2, 0, 0, 3})).diagonal == bigs({1, 6}));
    REQUIRE(smithNormalForm(IntMatrix(3, 0)).diagonal.empty());
}

TEST_CASE("Smith certificates verify on random matrices", "[smith][property]")
{
    std::mt19937 rng(23);
    SmithOptions both{true, true};
    for (int trial = 0; trial < 60; ++trial)
    {
        std::uniform_int_distribution<std::size_t> dim(1, 12);
        auto m = oracle::randomIntMatrix(rng, dim(rng), dim(rng), 1 + trial % 9);
        auto r = smithNormalForm(m, both);
        REQUIRE(verifySmith(m, r));
        REQUIRE(*r.U * m * *r.V == smithDiagonalMatrix(m.rows(), m.cols(), r.diagonal));
    }
}

TEST_CASE("Smith diagonal agrees with determinantal divisors", "[smith][oracle]")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial)
    {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        auto m = oracle::randomIntMatrix(rng, dim(rng), dim(rng), 6);
        REQUIRE(smithNormalForm(m).diagonal == oracle::determinantalInvariantFactors(m));
    }
}

TEST_CASE("int64 overflow falls back to big integers", "[smith]")
{
    const long big = 3'000'000'000'000'000'000L;
    IntMatrix m = matrixOf(2, 2, {big, 7, 5, big});
    auto r = smithNormalForm(m, SmithOptions{true, true});
    REQUIRE(verifySmith(m, r));
    REQUIRE(r.diagonal.back() == abs(BigInt(big) * big - 35));
}

TEST_CASE("unit pivot elimination preserves invariant factors", "[smith][property]")
{
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> entry(-1, 1);
    for (int trial = 0; trial < 40; ++trial)
    {
        SparseMatrix<std::int64_t> s(8, 10);
        for (std::size_t j = 0; j < 10; ++j)
            for (std::uint32_t i = 0; i < 8; ++i)
                if (int v = entry(rng) * (trial % 3 == 0 ? 2 : 1); v != 0)
                    s.columns[j].emplace_back(i, v);
        auto direct = smithNormalForm(toBigMatrix(s.toDense())).diagonal;
        REQUIRE(invariantFactors(s) == direct);
    }
}

TEST_CASE("chain complexes", "[homology]")
{
    auto circle = SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}});
    auto cc = chainComplex(circle, 1);
    auto d1 = cc.boundary(1).toDense();
    REQUIRE(d1.rows() == 3);
    REQUIRE(d1.cols() == 3);
    for (std::size_t j = 0; j < 3; ++j)
    {
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < 3; ++i)
            sum += d1(i, j);
        REQUIRE(sum == 0);
    }

    auto tri = chainComplex(SimplicialComplex(3, {{0, 1, 2}}), 2);
    REQUIRE(tri.count(0) == 3);
    auto d2 = tri.boundary(2).toDense();
    REQUIRE(d2.cols() == 1);
    for (std::size_t i = 0; i < 3; ++i)
        REQUIRE((d2(i, 0) == 1 || d2(i, 0) == -1));

    auto m1 = chainComplex(buildM(braid3(), 1), 2);
    REQUIRE(m1.count(0) == 6);
    REQUIRE(m1.count(1) == 12);
    REQUIRE(m1.count(2) == 6);
}

TEST_CASE("homology examples", "[homology]")
{
    REQUIRE(betti(SimplicialComplex(3, {{0, 1}, {1, 2}, {0, 2}}), 1) == std::vector<std::size_t>{1, 1});

    auto m1 = homologyGroups(buildM(braid3(), 1), 2);
    REQUIRE(bettiNumbers(m1) == std::vector<std::size_t>{1, 1, 0});
    for (const auto& g : m1)
        REQUIRE(g.torsion.empty());

    REQUIRE(betti(buildM(braid3(), 2), 1) == std::vector<std::size_t>{1, 2});

    auto p = homologyGroups(rp2(), 2);
    REQUIRE(bettiNumbers(p) == std::vector<std::size_t>{1, 0, 0});
    REQUIRE(p[1].torsion == bigs({2}));

    HomologyOptions reduced;
    reduced.reduced = true;
    REQUIRE(bettiNumbers(homologyGroups(SimplicialComplex(3, {{0}, {1}, {2}}), 0, reduced)) ==
            std::vector<std::size_t>{2});

    // degrees beyond the dimension are zero
    REQUIRE(betti(SimplicialComplex(2, {{0, 1}}), 3) == std::vector<std::size_t>{1, 0, 0, 0});
}

TEST_CASE("homology agrees with and without coreduction and with rational ranks", "[homology][oracle]")
{
    std::vector<SimplicialComplex> ks = {buildM(braid3(), 1), buildB(braid3(), 2), rp2(),
                                         buildM(makeChamberSpace(booleanArrangement(2)), 1),
                                         buildM(makeChamberSpace(booleanArrangement(3)), 1),
                                         SimplicialComplex(7, {{0, 1, 2}, {2, 3}, {3, 4, 5}, {5, 2}, {6}})};
    std::mt19937 rng(37);
    std::uniform_int_distribution<std::uint32_t> vtx(0, 8);
    for (int trial = 0; trial < 20; ++trial)
    {
        std::vector<Simplex> simplices;
        for (int s = 0; s < 8; ++s)
        {
            Simplex f;
            for (int i = 0; i < 3 + s % 2; ++i)
                f.push_back(vtx(rng));
            simplices.push_back(f);
        }
        ks.emplace_back(9, simplices);
    }
    for (const auto& k : ks)
    {
        const std::size_t top = static_cast<std::size_t>(std::max(k.dimension(), 0L));
        auto with = homologyGroups(k, top);
        HomologyOptions plain;
        plain.coreduce = false;
        REQUIRE(homologyGroups(k, top, plain) == with);
        REQUIRE(bettiNumbers(with) == oracle::rationalBetti(k, top));

        // Euler characteristic from cells and from Betti numbers
        auto cc = chainComplex(k, top);
        long chi = 0;
        for (std::size_t d = 0; d <= top; ++d)
            chi += (d % 2 ? -1 : 1) * static_cast<long>(with[d].betti);
        REQUIRE(cc.eulerCharacteristic() == chi);
        REQUIRE(boundarySquaredZero(cc));
    }
}

TEST_CASE("homology is unchanged by subdivision", "[homology][property]")
{
    std::vector<SimplicialComplex> ks = {buildM(braid3(), 1), buildB(braid3(), 1), buildB(braid3(), 2), rp2(),
                                         buildM(makeChamberSpace(booleanArrangement(2)), 1)};
    for (const auto& k : ks)
    {
        const std::size_t top = static_cast<std::size_t>(k.dimension());
        auto sd = barycentricSubdivision(k, 10'000'000);
        REQUIRE(homologyGroups(sd, top, HomologyOptions{false, true, 10'000'000}) == homologyGroups(k, top));
    }
}

TEST_CASE("large complexes go through the sparse path", "[homology]")
{
    auto m2 = buildM(braid3(), 2);
    auto skel = subdivisionSkeleton(m2, 2, 100'000'000);
    HomologyOptions opts;
    opts.simplex_limit = 100'000'000;
    REQUIRE(bettiNumbers(homologyGroups(skel, 1, opts)) == std::vector<std::size_t>{1, 2});
}

TEST_CASE("budgets stop oversized computations", "[homology]")
{
    HomologyOptions tiny;
    tiny.simplex_limit = 10;
    REQUIRE_THROWS_AS(homologyGroups(buildM(braid3(), 2), 1, tiny), BudgetExceeded);
}

TEST_CASE("homology bases", "[homology]")
{
    auto m1 = buildM(braid3(), 1);
    auto basis = homologyBasis(m1, 1);
    REQUIRE(basis.betti == 1);
    REQUIRE(basis.generators.cols() == 1);
    // the generator is a cycle with coordinate +-1
    std::vector<BigInt> gen(basis.generators.rows());
    for (std::size_t i = 0; i < gen.size(); ++i)
        gen[i] = basis.generators(i, 0);
    auto coords = basis.coordinates(gen);
    REQUIRE(coords == bigs({1}));
    IntMatrix g(gen.size(), 1, gen);
    REQUIRE((toBigMatrix(basis.chains->boundary(1).toDense()) * g).isZero());
}

TEST_CASE("induced maps on homology", "[homology]")
{
    auto space = braid3();
    auto m1 = std::make_shared<const MComplex>(buildM(space, 1));
    auto m2 = std::make_shared<const MComplex>(buildM(space, 2));

    auto id = inducedHomologyMap(SimplicialMap::identity(m1), 1);
    REQUIRE(id.matrix == IntMatrix::identity(1));

    auto delta = inducedHomologyMap(inducedMapM(deltaMap(space, 2), m1, m2), 1);
    REQUIRE(delta.matrix.rows() == 2);
    REQUIRE(delta.matrix.cols() == 1);
    for (std::size_t i = 0; i < 2; ++i)
        REQUIRE(abs(delta.matrix(i, 0)) == 1);

    auto anti = inducedMapM(iiaBijections(space)[1].toChamberMap(), m1, m1);
    auto a = inducedHomologyMap(anti, 1);
    REQUIRE(abs(a.matrix(0, 0)) == 1);
    REQUIRE(a.matrix * a.matrix == IntMatrix::identity(1));

    REQUIRE(degreeOfMap(SimplicialMap::identity(m1), 1) == 1);
    REQUIRE(degreeOfMap(anti, 1) == 1);

    // a constant vertex map factors through a point
    auto constant = SimplicialMap(m1, m1, std::vector<std::uint32_t>(6, 0));
    REQUIRE(degreeOfMap(constant, 1) == 0);
    REQUIRE_THROWS_AS(degreeOfMap(SimplicialMap::identity(m2), 1), NotSphereLike);
}

TEST_CASE("induced homology maps are functorial", "[homology][property]")
{
    auto space = braid3();
    auto m1 = std::make_shared<const MComplex>(buildM(space, 1));
    auto m2 = std::make_shared<const MComplex>(buildM(space, 2));
    auto b1 = homologyBasis(*m1, 1);
    auto b2 = homologyBasis(*m2, 1);
    for (const auto& phi : enumerateAdmissible(space, 2))
        for (std::size_t c = 0; c < space->chamberCount(); ++c)
            for (std::size_t i = 1; i <= 2; ++i)
            {
                auto rho = inducedMapM(rhoMap(space, i, {c}), m1, m2);
                auto f = inducedMapM(phi, m2, m1);
                auto whole = inducedHomologyMap(compose(f, rho), b1, b1);
                auto parts = inducedHomologyMap(f, b2, b1).matrix * inducedHomologyMap(rho, b1, b2).matrix;
                REQUIRE(whole.matrix == parts);
            }
}

TEST_CASE("IIA self-maps: bijective iff all flips iff degree +-1", "[homology][property]")
{
    auto space = braid3();
    auto m1 = std::make_shared<const MComplex>(buildM(space, 1));
    auto basis = homologyBasis(*m1, 1);
    std::size_t seen = 0;
    for (std::uint32_t bits = 0; bits < 64; ++bits)
    {
        PerHyperplaneFamily fam{1, 1, std::vector<std::vector<std::uint32_t> >(3, std::vector<std::uint32_t>(2))};
        bool all_flips = true;
        for (std::size_t h = 0; h < 3; ++h)
        {
            // phi_H as (image of +, image of -)
            fam.outputs[h][0] = (bits >> (2 * h)) & 1;
            fam.outputs[h][1] = (bits >> (2 * h + 1)) & 1;
            all_flips = all_flips && fam.outputs[h][0] != fam.outputs[h][1];
        }
        auto f = assembleFamily(space, fam);
        if (!f)
            continue;
        ++seen;
        REQUIRE(oracle::directIIA(*f));
        const bool bijective = isBijective(*f);
        auto degree = inducedHomologyMap(inducedMapM(*f, m1, m1), basis, basis).matrix(0, 0);
        REQUIRE(bijective == all_flips);
        REQUIRE(bijective == (abs(degree) == 1));
        if (!bijective)
            REQUIRE(degree == 0);
    }
    REQUIRE(seen > 2);
}

TEST_CASE("sum identity", "[homology]")
{
    auto space = braid3();
    const std::size_t top = space->indexOf(SignVector::fromString("+++"));
    auto phis = enumerateAdmissible(space, 2);
    auto report = verifySumIdentity(space, 2, top, phis);
    REQUIRE(report.degree == 1);
    REQUIRE(report.rho_sum_equals_delta);
    REQUIRE(report.holds());
    for (const auto& check : report.phi_checks)
    {
        REQUIRE(check.summands.size() == 2);
        BigInt a = abs(check.summands[0](0, 0)), b = abs(check.summands[1](0, 0));
        REQUIRE(((a == 1 && b == 0) || (a == 0 && b == 1)));
    }

    auto trivial = verifySumIdentity(space, 1, top);
    REQUIRE(trivial.holds());
    REQUIRE(trivial.rho_sum == IntMatrix::identity(1));

    REQUIRE_THROWS_AS(verifySumIdentity(makeChamberSpace(booleanArrangement(3)), 2, 0), PreconditionError);
    REQUIRE_THROWS_AS(verifySumIdentity(makeChamberSpace(booleanArrangement(1)), 2, 0), RankTooLow);
    auto constant = ChamberMap::fromFunction(space, 2, 1, [top](const Profile&) { return Profile{top}; });
    REQUIRE_THROWS_AS(verifySumIdentity(space, 2, top, {constant}), PreconditionError);
}
