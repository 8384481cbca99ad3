#include "lielimits/root_data.hpp"

#include "lielimits/error.hpp"
#include "lielimits/linalg.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace lielimits {

char series_letter(Series s) {
    switch (s) {
        case Series::A: return 'A';
        case Series::B: return 'B';
        case Series::C: return 'C';
        case Series::D: return 'D';
    }
    return '?';
}

namespace {

int rank_floor(Series s) {
    switch (s) {
        case Series::A: return 1;
        case Series::B: return 2;
        case Series::C: return 1;
        case Series::D: return 4;
    }
    return 1;
}

int parse_int(std::string_view text, const char* what) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(std::string("invalid ") + what + " '" + std::string(text) + "'");
    return value;
}

}  // namespace

SimpleAlgebra::SimpleAlgebra(Series series, int rank) : series_(series), rank_(rank) {
    if (rank < rank_floor(series))
        throw DomainError(std::string("rank ") + std::to_string(rank) + " is below the floor " +
                          std::to_string(rank_floor(series)) + " for series " + series_letter(series));
}

SimpleAlgebra SimpleAlgebra::parse(std::string_view literal) {
    while (!literal.empty() && literal.front() == ' ') literal.remove_prefix(1);
    while (!literal.empty() && literal.back() == ' ') literal.remove_suffix(1);
    if (literal.size() < 2) throw ParseError("invalid algebra literal '" + std::string(literal) + "'");
    Series s;
    switch (literal.front()) {
        case 'A': case 'a': s = Series::A; break;
        case 'B': case 'b': s = Series::B; break;
        case 'C': case 'c': s = Series::C; break;
        case 'D': case 'd': s = Series::D; break;
        default: throw ParseError("invalid algebra literal '" + std::string(literal) + "'");
    }
    std::string_view digits = literal.substr(1);
    for (char c : digits)
        if (c < '0' || c > '9') throw ParseError("invalid algebra literal '" + std::string(literal) + "'");
    return SimpleAlgebra(s, parse_int(digits, "algebra rank"));
}

std::string SimpleAlgebra::name() const { return std::string(1, series_letter(series_)) + std::to_string(rank_); }

int SimpleAlgebra::natural_dimension() const {
    switch (series_) {
        case Series::A: return rank_ + 1;
        case Series::B: return 2 * rank_ + 1;
        case Series::C:
        case Series::D: return 2 * rank_;
    }
    return 0;
}

int SimpleAlgebra::positive_root_count() const {
    switch (series_) {
        case Series::A: return rank_ * (rank_ + 1) / 2;
        case Series::B:
        case Series::C: return rank_ * rank_;
        case Series::D: return rank_ * (rank_ - 1);
    }
    return 0;
}

void require_rank(const SimpleAlgebra& alg, const Labels& labels) {
    if (static_cast<int>(labels.size()) != alg.rank())
        throw DimensionError("weight has " + std::to_string(labels.size()) + " labels but " + alg.name() +
                             " has rank " + std::to_string(alg.rank()));
}

DominantWeight::DominantWeight(const SimpleAlgebra& alg, Labels labels) : labels_(std::move(labels)) {
    require_rank(alg, labels_);
    for (int v : labels_)
        if (v < 0) throw DomainError("weight " + str() + " is not dominant");
}

DominantWeight DominantWeight::zero(const SimpleAlgebra& alg) { return DominantWeight(alg, Labels(alg.rank(), 0)); }

DominantWeight DominantWeight::natural(const SimpleAlgebra& alg) {
    Labels l(alg.rank(), 0);
    l[0] = 1;
    return DominantWeight(alg, std::move(l));
}

DominantWeight DominantWeight::rho(const SimpleAlgebra& alg) { return DominantWeight(alg, Labels(alg.rank(), 1)); }

DominantWeight DominantWeight::parse(const SimpleAlgebra& alg, std::string_view text) {
    Labels out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start),
                                "weight label"));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return DominantWeight(alg, std::move(out));
}

bool DominantWeight::is_zero() const {
    for (int v : labels_)
        if (v != 0) return false;
    return true;
}

std::string DominantWeight::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(labels_[i]);
    }
    return s + ")";
}

namespace {

std::vector<Labels> cartan_matrix(const SimpleAlgebra& alg) {
    const int n = alg.rank();
    std::vector<Labels> c(n, Labels(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    switch (alg.series()) {
        case Series::A:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case Series::B:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            c[n - 2][n - 1] = -2;
            break;
        case Series::C:
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            if (n >= 2) c[n - 1][n - 2] = -2;
            break;
        case Series::D:
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
    }
    return c;
}

std::vector<Rational> simple_half_norms(const SimpleAlgebra& alg) {
    const int n = alg.rank();
    std::vector<Rational> d(n, Rational(1));
    if (alg.series() == Series::B) d[n - 1] = Rational(1, 2);
    if (alg.series() == Series::C)
        for (int i = 0; i + 1 < n; ++i) d[i] = Rational(1, 2);
    return d;
}

}  // namespace

RootSystem::RootSystem(const SimpleAlgebra& alg)
    : alg_(alg), cartan_(cartan_matrix(alg)), half_norms_(simple_half_norms(alg)) {
    const int n = alg.rank();

    // (omega_i, alpha_k) = delta_ik d_k and omega_j = sum_k (C^-1)_{jk} alpha_k.
    linalg::Matrix cm(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cm.rows[i][j] = cartan_[i][j];
    linalg::Matrix cinv = linalg::inverse(cm);
    gram_.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram_[i][j] = cinv.rows[j][i] * half_norms_[i];

    gram_den_ = 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (gram_[i][j] != gram_[j][i]) throw InternalError("weight form is not symmetric for " + alg.name());
            mpz_lcm(gram_den_.get_mpz_t(), gram_den_.get_mpz_t(), gram_[i][j].get_den_mpz_t());
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // (omega_i, alpha_j^vee) = delta_ij, alpha_j^vee = (row j of C) / d_j.
            Rational s = 0;
            for (int k = 0; k < n; ++k) s += gram_[i][k] * cartan_[j][k];
            s /= half_norms_[j];
            if (s != (i == j ? 1 : 0)) throw InternalError("fundamental weights are not dual to coroots for " + alg.name());
        }
    scaled_gram_.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            scaled_gram_[i][j] = static_cast<int>(to_int64(Rational(gram_[i][j] * gram_den_), "scaled gram"));

    // Positive roots in simple-root coordinates, height by height. For a root
    // beta and simple alpha_i, p - q = <beta, alpha_i^vee> where p (q) counts
    // steps down (up) the alpha_i-string.
    std::set<Labels> known;
    std::vector<Labels> layer;
    std::vector<Labels> simple_coords;
    for (int i = 0; i < n; ++i) {
        Labels e(n, 0);
        e[i] = 1;
        layer.push_back(e);
        known.insert(e);
    }
    while (!layer.empty()) {
        std::vector<Labels> next;
        for (const Labels& beta : layer) {
            simple_coords.push_back(beta);
            for (int i = 0; i < n; ++i) {
                int pairing = 0;
                for (int k = 0; k < n; ++k) pairing += beta[k] * cartan_[k][i];
                int p = 0;
                Labels down = beta;
                while (down[i] > 0) {
                    --down[i];
                    if (!known.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    Labels up = beta;
                    ++up[i];
                    if (known.insert(up).second) next.push_back(up);
                }
            }
        }
        layer = std::move(next);
    }
    if (static_cast<int>(simple_coords.size()) != alg.positive_root_count())
        throw InternalError("positive root count mismatch for " + alg.name());

    Labels two_rho(n, 0);
    std::vector<std::vector<int>> coroot_rows, scaled_rows;
    weyl_denominator_ = 1;
    for (const Labels& c : simple_coords) {
        PositiveRoot r;
        r.simple = c;
        r.weight.assign(n, 0);
        for (int k = 0; k < n; ++k)
            for (int j = 0; j < n; ++j) r.weight[j] += c[k] * cartan_[k][j];
        Rational half_norm = 0;
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) half_norm += Rational(c[k] * c[l]) * half_norms_[l] * cartan_[k][l];
        half_norm /= 2;
        if (half_norm != 1 && half_norm != Rational(1, 2))
            throw InternalError("root of unexpected length in " + alg.name());
        r.is_long = half_norm == 1;
        r.coroot.resize(n);
        int height = 0;
        for (int k = 0; k < n; ++k) {
            r.coroot[k] = static_cast<int>(to_int64(Rational(c[k] * half_norms_[k] / half_norm), "coroot coefficient"));
            height += r.coroot[k];
        }
        weyl_denominator_ *= height;
        std::vector<int> srow(n);
        for (int k = 0; k < n; ++k)
            srow[k] = static_cast<int>(to_int64(Rational(gram_den_ * c[k] * half_norms_[k]), "scaled root"));
        scaled_rows.push_back(srow);
        scaled_root_norms_.push_back(to_int64(Rational(2 * half_norm * gram_den_), "scaled root norm"));
        coroot_rows.push_back(r.coroot);
        for (int j = 0; j < n; ++j) two_rho[j] += r.weight[j];
        roots_.push_back(std::move(r));
    }
    for (int v : two_rho)
        if (v != 2) throw InternalError("half-sum of positive roots is not rho for " + alg.name());

    coroot_matrix_ = kernels::PairingMatrix::from_rows(coroot_rows, n);
    scaled_root_matrix_ = kernels::PairingMatrix::from_rows(scaled_rows, n);
    scaled_gram_matrix_ = kernels::PairingMatrix::from_rows(scaled_gram_, n);
}

Rational RootSystem::form(const Labels& lambda, const Labels& mu) const {
    require_rank(alg_, lambda);
    require_rank(alg_, mu);
    Rational s = 0;
    const int n = rank();
    for (int i = 0; i < n; ++i) {
        if (lambda[i] == 0) continue;
        for (int j = 0; j < n; ++j)
            if (mu[j] != 0) s += gram_[i][j] * (static_cast<long>(lambda[i]) * mu[j]);
    }
    return s;
}

const RootSystem& root_system(const SimpleAlgebra& alg) {
    static std::mutex mu;
    static std::map<SimpleAlgebra, std::unique_ptr<RootSystem>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[alg];
    if (!slot) slot = std::make_unique<RootSystem>(alg);
    return *slot;
}

Rational weight_form(const SimpleAlgebra& alg, const Labels& lambda, const Labels& mu) {
    return root_system(alg).form(lambda, mu);
}

Integer dimension(const SimpleAlgebra& alg, const DominantWeight& lambda) {
    require_rank(alg, lambda.labels());
    const RootSystem& rs = root_system(alg);
    std::vector<std::int32_t> shifted(alg.rank());
    for (int i = 0; i < alg.rank(); ++i) shifted[i] = lambda.labels()[i] + 1;
    std::vector<std::int64_t> numerators(rs.coroot_matrix().rows);
    kernels::pair_rows(rs.coroot_matrix(), shifted, numerators);
    Integer product = 1;
    for (std::int64_t v : numerators) {
        Integer z;
        mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
        product *= z;
    }
    if (!mpz_divisible_p(product.get_mpz_t(), rs.weyl_denominator_.get_mpz_t()))
        throw InternalError("Weyl dimension is not an integer for " + alg.name() + " " + lambda.str());
    Integer out;
    mpz_divexact(out.get_mpz_t(), product.get_mpz_t(), rs.weyl_denominator_.get_mpz_t());
    return out;
}

DominantWeight dual_weight(const SimpleAlgebra& alg, const DominantWeight& lambda) {
    require_rank(alg, lambda.labels());
    Labels l = lambda.labels();
    const int n = alg.rank();
    if (alg.series() == Series::A) std::reverse(l.begin(), l.end());
    if (alg.series() == Series::D && n % 2 == 1) std::swap(l[n - 2], l[n - 1]);
    return DominantWeight(alg, std::move(l));
}

std::vector<Labels> positive_roots(const SimpleAlgebra& alg) {
    std::vector<Labels> out;
    for (const PositiveRoot& r : root_system(alg).positive_roots()) out.push_back(r.weight);
    return out;
}

}  // namespace lielimits
