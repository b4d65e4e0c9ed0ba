#pragma once

#include "weilforms/arith.hpp"
#include "weilforms/parallel.hpp"
#include "weilforms/qexpansion.hpp"
#include "weilforms/quadmod.hpp"

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace weilforms {

/// Normalised representation counts
///   delta_nu = p^{nu (1 - e)} #{x in L / p^nu L : Q(x + gamma) + n = 0 mod p^nu}
/// for nu = 0 .. stabilized_at; `value` is the stable limit.
struct LocalDensityRecord {
    Integer prime;
    long stabilized_at = 0;
    Rational value;
    std::vector<Rational> deltas;
};

/// Counts by exact p-adic digit recursion (any prime). Requires n + Q(gamma) in Z and n > 0.
LocalDensityRecord local_density(const Integer& p, const EvenLattice& L, const Rational& n,
                                 const RationalVector& gamma);

/// Closed form valid for odd p not dividing det L.
LocalDensityRecord local_density_good_prime(const Integer& p, const EvenLattice& L, const Rational& n);

/// Local factor sum_nu (delta_nu - delta_{nu-1}) X^nu with X = p^{e/2 - kappa}.
Rational local_factor(const LocalDensityRecord& rec, long rank, const Rational& kappa);

/// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli_number(unsigned n);
Rational bernoulli_polynomial(unsigned n, const Rational& x);
/// B_{n, chi} for the Kronecker character of the discriminant `d0` (d0 = 1 is the trivial character,
/// for which B_{1, chi} = 1/2).
Rational generalized_bernoulli(const Integer& d0, unsigned n);

/// On-disk store of density sequences, keyed by a content hash of (gram, p, n, gamma).
/// Every file starts with a schema header; files with another header are ignored.
class DensityCache {
public:
    explicit DensityCache(std::filesystem::path dir);
    std::optional<std::vector<Rational>> load(const std::string& key) const;
    void store(const std::string& key, const std::vector<Rational>& deltas) const;
    const std::filesystem::path& directory() const { return dir_; }

    static constexpr const char* kSchema = "weilforms-density-cache v1";

private:
    std::filesystem::path path_for(const std::string& key) const;
    std::filesystem::path dir_;
};

/// Fourier coefficients of the vector-valued Eisenstein series E_k(tau; L) for rho*,
/// normalised by c(0, 0) = 1. Coefficients are memoised and safe to request concurrently.
class EisensteinSeries {
public:
    EisensteinSeries(EvenLattice lattice, HalfInteger weight, std::shared_ptr<const DensityCache> disk = nullptr);

    const FiniteQuadraticModule& module() const { return *module_; }
    std::shared_ptr<const FiniteQuadraticModule> module_ptr() const { return module_; }
    HalfInteger weight() const { return weight_; }
    /// False for antisymmetric or mismatched weights, where the series vanishes.
    bool nonvanishing() const { return symmetric_; }

    /// c(n, gamma) for a dual-lattice vector gamma; zero unless n + Q(gamma) in Z.
    Rational coefficient(const RationalVector& gamma, const Rational& n) const;
    Rational coefficient(const Element& gamma, const Rational& n) const;

private:
    Rational compute(const RationalVector& gamma, const Rational& n) const;
    Rational local_term(const Integer& p, const RationalVector& gamma, const Rational& n) const;

    std::shared_ptr<const FiniteQuadraticModule> module_;
    HalfInteger weight_;
    bool symmetric_ = false;
    std::shared_ptr<const DensityCache> disk_;
    mutable std::shared_mutex memo_lock_;
    mutable std::unordered_map<std::string, Rational> memo_;
};

/// All coefficients below prec. Weight must be at least 5/2.
QExpansion eisenstein_qexp(const EvenLattice& L, HalfInteger k, const Rational& prec,
                           const ParallelFor& pfor = sequential_for(),
                           std::shared_ptr<const DensityCache> disk = nullptr);

}  // namespace weilforms
