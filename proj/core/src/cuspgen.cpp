#include "weilforms/cuspgen.hpp"

#include "weilforms/classnum.hpp"
#include "weilforms/dimensions.hpp"
#include "weilforms/error.hpp"
#include "weilforms/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace weilforms {

namespace {

// Orientation of R relative to the Eisenstein coefficients; fixed by the N = 2 and D = 5 anchors.
constexpr int kOrientation = -1;

void check_cusp_weight(const FiniteQuadraticModule& A, HalfInteger k) {
    if (!is_antisymmetric_weight(A, k))
        fail_input("wrong-parity", "weight " + k.str() + " is not antisymmetric for this module");
    if (k.twice() < 8)
        fail_input("unsupported-weight", "R-series need k >= 4 (Eisenstein weight at least 5/2)");
}

}  // namespace

QExpansion r_series(const EvenLattice& L, HalfInteger k, const CuspIndex& idx, const Rational& prec,
                    const ParallelFor& pfor, std::shared_ptr<const DensityCache> disk) {
    auto module = std::make_shared<const FiniteQuadraticModule>(L);
    const FiniteQuadraticModule& A = *module;
    check_cusp_weight(A, k);
    if (!A.contains(idx.beta)) fail_input("index-mismatch", "beta is not an element of the module");

    const RationalVector beta = A.dual_vector(idx.beta);
    const Rational& m = idx.m;
    const EvenLattice big = enlarge_lattice(L, m, beta);
    const EisensteinSeries E(big, HalfInteger(k.twice() - 3), std::move(disk));

    QExpansion out(module, k, prec);
    std::vector<std::pair<Element, Rational>> tasks;
    for (const auto& g : A.elements())
        for (const auto& n : out.exponents(g))
            if (n > 0) tasks.emplace_back(g, n);

    const std::size_t e = L.rank();
    std::vector<Rational> values(tasks.size());
    pfor(tasks.size(), [&](std::size_t t) {
        const auto& [g, n] = tasks[t];
        const RationalVector gv = A.dual_vector(g);
        const Rational r0 = frac(-L.bilinear(gv, beta));
        const Rational bound = 4 * m * n;
        const long reach = static_cast<long>(std::sqrt(bound.get_d())) + 2;
        Rational total = 0;
        for (long j = -reach - 1; j <= reach; ++j) {
            const Rational r = r0 + j;
            if (r == 0 || r * r > bound) continue;
            const Rational mu = r / (2 * m);
            RationalVector w(e + 1);
            for (std::size_t i = 0; i < e; ++i) w[i] = gv[i] - mu * beta[i];
            w[e] = mu;
            total += r * E.coefficient(w, n - r * r / (4 * m));
        }
        values[t] = kOrientation * total / (2 * m);
    });
    for (std::size_t t = 0; t < tasks.size(); ++t) out.set(tasks[t].first, tasks[t].second, values[t]);
    return out;
}

namespace {

std::vector<CuspIndex> candidate_indices(const FiniteQuadraticModule& A, const Rational& m_cutoff) {
    std::vector<CuspIndex> out;
    for (const auto& b : A.orbit_representatives()) {
        if (A.is_two_torsion(b)) continue;
        for (Rational m = frac(-A.qvalue(b)); m <= m_cutoff; m += 1)
            if (m > 0) out.push_back({m, b});
    }
    std::stable_sort(out.begin(), out.end(), [](const CuspIndex& x, const CuspIndex& y) {
        if (x.m != y.m) return x.m < y.m;
        return x.beta < y.beta;
    });
    return out;
}

}  // namespace

std::vector<CuspBasisEntry> cusp_basis(const EvenLattice& L, HalfInteger k, const CuspBasisOptions& opts) {
    const FiniteQuadraticModule A(L);
    check_cusp_weight(A, k);
    const DimensionReport dims = dim_antisymmetric(A, k);
    const auto target = static_cast<std::size_t>(dims.dim_s);
    if (target == 0) return {};

    Rational work_prec = Rational(ceil(k.value() / 12)) + 2;
    Rational m_cutoff = static_cast<long>(target) + 3;

    for (int attempt = 0; attempt < 2; ++attempt) {
        std::vector<CuspBasisEntry> picked;
        std::unique_ptr<RowEchelon> echelon;
        for (const auto& idx : candidate_indices(A, m_cutoff)) {
            QExpansion f = r_series(L, k, idx, work_prec, opts.pfor, opts.disk);
            const auto row = f.flatten(work_prec);
            if (!echelon) echelon = std::make_unique<RowEchelon>(row.size());
            if (!echelon->add(row)) continue;
            picked.push_back({idx, std::move(f)});
            if (echelon->rank() == target) break;
        }
        if (picked.size() == target) {
            if (opts.output_prec && *opts.output_prec != work_prec)
                for (auto& entry : picked)
                    entry.series = r_series(L, k, entry.index, *opts.output_prec, opts.pfor, opts.disk);
            return picked;
        }
        work_prec *= 2;
        m_cutoff *= 2;
    }
    fail_precision("basis-exhaustion", "R-series reached rank below dim S_k = " + std::to_string(target) +
                                           " at precision " + to_string(work_prec / 2) + " and m <= " +
                                           to_string(m_cutoff / 2));
}

Weight3Parts weight3_parts(long N, const Rational& prec) {
    if (N <= 1 || N % 4 != 1) fail_input("unsupported-module", "weight three needs N = 1 mod 4");
    if (N != 5 && N != 9)
        fail_input("unsupported-module", "the weight-three correction term is available for N = 5 and N = 9");
    const CyclicRealisation cyc = cyclic_module_lattice(N);
    auto module = std::make_shared<const FiniteQuadraticModule>(cyc.lattice);
    const HalfInteger three(6);
    Weight3Parts parts{QExpansion(module, three, prec), QExpansion(module, three, prec),
                       QExpansion(module, three, prec)};

    for (long x = 0; x < N; ++x) {
        const Element g = module->from_dual(cyc.residue_vectors[static_cast<std::size_t>(x)]);
        const Rational r0 = frac(ratio(2 * x, N));
        for (const auto& n : parts.total.exponents(g)) {
            if (n == 0) continue;
            // (1/2m) sum_{r in 2x/N + Z} r (-12) H(4n - N r^2) with 1/2m = N/2.
            Rational hol = 0;
            const long reach = static_cast<long>(std::sqrt(4.0 * n.get_d() / static_cast<double>(N))) + 2;
            for (long j = -reach - 1; j <= reach; ++j) {
                const Rational r = r0 + j;
                const Rational d = 4 * n - N * r * r;
                if (d < 0) continue;
                hol += r * -12 * hurwitz(to_integer(d).get_si());
            }
            hol *= ratio(N, 2);
            const Rational corr = unit_orbit_correction(n, x, N);
            parts.holomorphic.set(g, n, hol);
            parts.correction.set(g, n, corr);
            parts.total.set(g, n, hol + corr);
        }
    }
    return parts;
}

QExpansion weight3_cyclic(long N, const Rational& prec) { return weight3_parts(N, prec).total; }

}  // namespace weilforms
