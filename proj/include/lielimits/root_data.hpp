#pragma once

// Exact root-system data for the classical series A/B/C/D in Bourbaki
// numbering. Weights are always given in fundamental-weight coordinates
// (Dynkin labels); the invariant form is normalized so that long roots have
// squared length 2.

#include "lielimits/kernels.hpp"
#include "lielimits/rational.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lielimits {

enum class Series { A, B, C, D };

char series_letter(Series s);

// Coefficients on fundamental weights. Entries may be negative (roots).
using Labels = std::vector<int>;

class SimpleAlgebra {
public:
    // Rank floors: A >= 1, B >= 2, C >= 1, D >= 4. Smaller orthogonal ranks are
    // isomorphic to (or, for D2, not) other classical types and are rejected.
    SimpleAlgebra(Series series, int rank);

    // "A3", "B12", "C2", "D4".
    static SimpleAlgebra parse(std::string_view literal);

    Series series() const { return series_; }
    int rank() const { return rank_; }
    std::string name() const;

    // Dimension of the natural module: n+1, 2n+1, 2n, 2n.
    int natural_dimension() const;
    // Number of positive roots: n(n+1)/2, n^2, n^2, n(n-1).
    int positive_root_count() const;
    int dimension() const { return rank_ + 2 * positive_root_count(); }

    auto operator<=>(const SimpleAlgebra&) const = default;

private:
    Series series_;
    int rank_;
};

class DominantWeight {
public:
    // Validates length against the algebra's rank and non-negativity.
    DominantWeight(const SimpleAlgebra& alg, Labels labels);

    static DominantWeight zero(const SimpleAlgebra& alg);
    // The natural module's highest weight (first fundamental weight).
    static DominantWeight natural(const SimpleAlgebra& alg);
    static DominantWeight rho(const SimpleAlgebra& alg);
    // "1,0,2"
    static DominantWeight parse(const SimpleAlgebra& alg, std::string_view text);

    const Labels& labels() const { return labels_; }
    int rank() const { return static_cast<int>(labels_.size()); }
    bool is_zero() const;
    std::string str() const;

    auto operator<=>(const DominantWeight&) const = default;

private:
    Labels labels_;
};

// Throws DimensionError when the length is wrong.
void require_rank(const SimpleAlgebra& alg, const Labels& labels);

struct PositiveRoot {
    Labels simple;   // coefficients on simple roots
    Labels weight;   // fundamental-weight coordinates
    Labels coroot;   // coefficients of the coroot on simple coroots
    bool is_long = true;
};

// Everything derived from the Cartan matrix. Built once per algebra and
// cached (see root_system()); immutable afterwards.
class RootSystem {
public:
    explicit RootSystem(const SimpleAlgebra& alg);

    const SimpleAlgebra& algebra() const { return alg_; }
    int rank() const { return alg_.rank(); }

    // cartan()[i][j] = <alpha_i, alpha_j^vee>; row i is alpha_i in weight coordinates.
    const std::vector<Labels>& cartan() const { return cartan_; }
    // (alpha_j, alpha_j) / 2: 1 for long simple roots, 1/2 for short ones.
    const std::vector<Rational>& half_norms() const { return half_norms_; }
    // gram()[i][j] = (omega_i, omega_j).
    const std::vector<std::vector<Rational>>& gram() const { return gram_; }
    // Least common denominator of gram(); scaled_gram() = denominator * gram().
    const Integer& gram_denominator() const { return gram_den_; }
    const std::vector<std::vector<int>>& scaled_gram() const { return scaled_gram_; }

    const std::vector<PositiveRoot>& positive_roots() const { return roots_; }

    // Rows = positive roots, columns = simple coroots.
    const kernels::PairingMatrix& coroot_matrix() const { return coroot_matrix_; }
    // Row r holds scaled_gram() * alpha_r, so pairing a weight x against it
    // gives denominator * (x, alpha_r) for all roots at once.
    const kernels::PairingMatrix& scaled_root_matrix() const { return scaled_root_matrix_; }
    const kernels::PairingMatrix& scaled_gram_matrix() const { return scaled_gram_matrix_; }
    // denominator * (alpha_r, alpha_r)
    const std::vector<std::int64_t>& scaled_root_norms() const { return scaled_root_norms_; }

    Rational form(const Labels& lambda, const Labels& mu) const;

private:
    SimpleAlgebra alg_;
    std::vector<Labels> cartan_;
    std::vector<Rational> half_norms_;
    std::vector<std::vector<Rational>> gram_;
    Integer gram_den_;
    std::vector<std::vector<int>> scaled_gram_;
    std::vector<PositiveRoot> roots_;
    kernels::PairingMatrix coroot_matrix_;
    kernels::PairingMatrix scaled_root_matrix_;
    kernels::PairingMatrix scaled_gram_matrix_;
    std::vector<std::int64_t> scaled_root_norms_;
    Integer weyl_denominator_;

    friend Integer dimension(const SimpleAlgebra&, const DominantWeight&);
};

// Thread-safe cache; repeated calls return the same object.
const RootSystem& root_system(const SimpleAlgebra& alg);

// lambda^T * gram * mu. Throws DimensionError on length mismatch.
Rational weight_form(const SimpleAlgebra& alg, const Labels& lambda, const Labels& mu);

// Weyl dimension formula, exact.
Integer dimension(const SimpleAlgebra& alg, const DominantWeight& lambda);

// Highest weight of the dual module (action of -w0).
DominantWeight dual_weight(const SimpleAlgebra& alg, const DominantWeight& lambda);

// Positive roots in fundamental-weight coordinates.
std::vector<Labels> positive_roots(const SimpleAlgebra& alg);

}  // namespace lielimits
