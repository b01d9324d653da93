// Walk through the main objects on the braid arrangement in R^3 and the
// Boolean arrangement, printing the headline numbers.
#include <iostream>
#include "arrtop/arrtop.hpp"

using namespace arrtop;

static void summarize(const std::string& name, const Arrangement& arr)
{
    auto space = makeChamberSpace(arr);
    const auto parts = decompose(arr);
    std::cout << name << ": " << arr.size() << " hyperplanes, rank " << rankOf(arr)
              << ", " << space->chamberCount() << " chambers, "
              << (parts.indecomposable() ? "indecomposable" : "decomposable") << '\n';

    const auto maps = enumerateAdmissible(space, 2);
    std::size_t projections = 0;
    for (const auto& phi : maps)
        projections += classifyProjection(phi).has_value();
    std::cout << "  admissible maps Ch^2 -> Ch: " << maps.size() << " (" << projections << " projections)\n";

    auto d = minDistanceFromId(space);
    std::cout << "  IIA bijections: " << iiaBijections(space).size()
              << ", min distance from id: " << (d ? std::to_string(*d) : "none") << '\n';

    const auto m1 = buildM(space, 1);
    std::cout << "  betti(M_1):";
    for (auto b : bettiNumbers(homologyGroups(m1, rankOf(arr) - 1)))
        std::cout << ' ' << b;
    std::cout << '\n';
}

int main()
{
    summarize("braid-3", braidArrangement(3));
    summarize("boolean-3", booleanArrangement(3));

    auto space = makeChamberSpace(braidArrangement(3));
    const auto phis = enumerateAdmissible(space, 2);
    const auto report = verifySumIdentity(space, 2, 0, phis);
    std::cout << "sum identity on H_1 for braid-3, m = 2: " << (report.holds() ? "holds" : "fails") << '\n';
    return report.holds() ? 0 : 1;
}
