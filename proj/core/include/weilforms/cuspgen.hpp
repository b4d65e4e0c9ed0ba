#pragma once

#include "weilforms/arith.hpp"
#include "weilforms/eisenstein.hpp"
#include "weilforms/parallel.hpp"
#include "weilforms/qexpansion.hpp"
#include "weilforms/quadmod.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace weilforms {

/// Index (m, beta) with m > 0 and m + Q(beta) in Z.
struct CuspIndex {
    Rational m;
    Element beta;
};

/// The antisymmetric cusp form R_{k,m,beta} for rho* of L, built from the Eisenstein series of
/// weight k - 3/2 for the enlarged lattice. Coefficient of q^n e_gamma:
///   -(1/2m) sum_{r in Z - <gamma,beta>, r^2 <= 4mn} r c_E(n - r^2/4m, (gamma - (r/2m) beta, r/2m)).
/// Requires k >= 4 with k + sig/2 odd.
QExpansion r_series(const EvenLattice& L, HalfInteger k, const CuspIndex& idx, const Rational& prec,
                    const ParallelFor& pfor = sequential_for(),
                    std::shared_ptr<const DensityCache> disk = nullptr);

struct CuspBasisOptions {
    /// Precision of the returned expansions; defaults to the working precision.
    std::optional<Rational> output_prec;
    ParallelFor pfor = sequential_for();
    std::shared_ptr<const DensityCache> disk;
};

struct CuspBasisEntry {
    CuspIndex index;
    QExpansion series;
};

/// Linearly independent R-series spanning S_k(rho*). Candidates are the indices (m, beta) with
/// beta != -beta an orbit representative and 0 < m <= dim S_k + 3, taken in order of (m, beta).
/// Independence is decided exactly on coefficients below ceil(k/12) + 2; one retry doubles
/// both that precision and the m cutoff before a precision error is raised.
std::vector<CuspBasisEntry> cusp_basis(const EvenLattice& L, HalfInteger k, const CuspBasisOptions& opts = {});

/// Holomorphic part, correction part and their sum b(n, x) for the weight-three form attached to
/// the cyclic module (1/N)Z/Z with Q(x/N) = -x^2/N and index (1/N, 1/N). All three expansions
/// live on the module of cyclic_module_lattice(N).
struct Weight3Parts {
    QExpansion holomorphic;
    QExpansion correction;
    QExpansion total;
};
Weight3Parts weight3_parts(long N, const Rational& prec);
QExpansion weight3_cyclic(long N, const Rational& prec);

}  // namespace weilforms
