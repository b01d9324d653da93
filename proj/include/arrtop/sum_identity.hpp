/**
 * Homology-level identities behind the dictatorship argument, checked in
 * degree k = r(A) - 1 on the complexes M_1(A) and M_m(A):
 *
 *   sum_i (rho_{i,(c0,...,c0)})_*  =  Delta_*        (H_k(M_1) -> H_k(M_m))
 *   sum_i (Phi o rho_{i,(c0,...,c0)})_*  =  id       (H_k(M_1) -> H_k(M_1))
 *
 * the second for each supplied admissible Phi.
 */

#ifndef ARRTOP_SUM_IDENTITY_HPP
#define ARRTOP_SUM_IDENTITY_HPP

#include <cstddef>
#include <memory>
#include <vector>
#include "arrangement.hpp"
#include "arrangement_complexes.hpp"
#include "homology.hpp"
#include "social_choice.hpp"

namespace arrtop {

struct PhiSumCheck
{
    std::vector<IntMatrix> summands;   // (Phi o rho_i)_* for i = 1..m
    IntMatrix sum;
    bool equals_identity = false;
};

struct SumIdentityReport
{
    std::size_t degree = 0;
    std::size_t source_betti = 0;
    std::size_t target_betti = 0;
    std::vector<IntMatrix> rho_maps;   // (rho_i)_*
    IntMatrix rho_sum;
    IntMatrix delta_map;
    bool rho_sum_equals_delta = false;
    std::vector<PhiSumCheck> phi_checks;

    bool holds() const
    {
        if (!rho_sum_equals_delta)
            return false;
        for (const auto& p : phi_checks)
            if (!p.equals_identity)
                return false;
        return true;
    }
};

/**
 * @param c0   Base chamber index.
 * @param phis Admissible maps Ch^m -> Ch to test (may be empty).
 * @throws RankTooLow if r(A) < 2; PreconditionError if A is decomposable
 *         or a Phi is not admissible.
 */
inline SumIdentityReport verifySumIdentity(const ChamberSpacePtr& space, std::size_t m, std::size_t c0,
                                           const std::vector<ChamberMap>& phis = {},
                                           std::uint64_t simplex_limit = kDefaultSimplexBudget)
{
    const Arrangement& arr = space->arrangement();
    const std::size_t rank = rankOf(arr);
    if (rank < 2)
        throw RankTooLow("the identity lives in degree r(A) - 1 >= 1; rank is " + std::to_string(rank));
    if (!decompose(arr).indecomposable())
        throw PreconditionError("the sum identity is checked for indecomposable arrangements only");
    if (m == 0)
        throw PreconditionError("m must be at least 1");
    if (c0 >= space->chamberCount())
        throw IndexOutOfRange("base chamber out of range");
    for (const auto& phi : phis)
    {
        if (phi.inputArity() != m || phi.outputArity() != 1)
            throw ArityMismatch("Phi must map Ch^m to Ch");
        if (!checkIIA(phi) || !checkPAR(phi))
            throw PreconditionError("Phi must be admissible (IIA and PAR)");
    }

    SumIdentityReport report;
    report.degree = rank - 1;
    auto m1 = std::make_shared<const MComplex>(buildM(space, 1, simplex_limit));
    auto mm = m == 1 ? m1 : std::make_shared<const MComplex>(buildM(space, m, simplex_limit));
    const HomologyBasis b1 = homologyBasis(*m1, report.degree, simplex_limit);
    const HomologyBasis bm = m == 1 ? b1 : homologyBasis(*mm, report.degree, simplex_limit);
    report.source_betti = b1.betti;
    report.target_betti = bm.betti;

    const Profile context(m - 1, c0);
    std::vector<ChamberMap> rhos;
    report.rho_sum = IntMatrix(bm.betti, b1.betti);
    for (std::size_t i = 1; i <= m; ++i)
    {
        rhos.push_back(rhoMap(space, i, context));
        auto induced = inducedHomologyMap(inducedMapM(rhos.back(), m1, mm), b1, bm);
        report.rho_sum = report.rho_sum + induced.matrix;
        report.rho_maps.push_back(std::move(induced.matrix));
    }
    report.delta_map = inducedHomologyMap(inducedMapM(deltaMap(space, m), m1, mm), b1, bm).matrix;
    report.rho_sum_equals_delta = report.rho_sum == report.delta_map;

    for (const auto& phi : phis)
    {
        PhiSumCheck check;
        check.sum = IntMatrix(b1.betti, b1.betti);
        for (const auto& rho : rhos)
        {
            auto induced = inducedHomologyMap(inducedMapM(compose(phi, rho), m1, m1), b1, b1);
            check.sum = check.sum + induced.matrix;
            check.summands.push_back(std::move(induced.matrix));
        }
        check.equals_identity = check.sum == IntMatrix::identity(b1.betti);
        report.phi_checks.push_back(std::move(check));
    }
    return report;
}

}   // namespace arrtop

#endif
