#pragma once

// Shared test helpers: fixture access, seeded generators for subspaces,
// diagonal-type systems and index chains, and oracles that recompute the
// library's answers from first principles.

#include "lielimits/commands.hpp"
#include "lielimits/error.hpp"
#include "lielimits/index.hpp"
#include "lielimits/io.hpp"
#include "lielimits/oracle.hpp"
#include "lielimits/subspace.hpp"
#include "lielimits/system.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifndef LIELIMITS_FIXTURE_DIR
#error "LIELIMITS_FIXTURE_DIR must be defined"
#endif

namespace testsupport {

using namespace lielimits;

inline std::string fixture(const std::string& name) { return std::string(LIELIMITS_FIXTURE_DIR) + "/" + name; }

inline SystemSpec load_system(const std::string& name) {
    return io::system_from_json(io::read_json_file(fixture(name)), name);
}

inline Subspace load_subspace(const std::string& name) {
    return io::subspace_value_from_json(io::read_json_file(fixture(name)), name);
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Uniform integer in [lo, hi] from raw engine output (portable across
// standard libraries, unlike the distribution classes).
inline int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// ---------------------------------------------------------------- subspaces

inline FinSuppVec random_vector(std::mt19937_64& rng, int max_index) {
    FinSuppVec v;
    const int terms = draw(rng, 1, 3);
    for (int i = 0; i < terms; ++i) v[draw(rng, 1, max_index)] = draw(rng, -2, 2);
    return clean(v);
}

inline SubspaceDescriptor random_descriptor(std::mt19937_64& rng, Space space = Space::V) {
    SubspaceDescriptor d;
    d.space = space;
    const int gens = draw(rng, 0, 3);
    for (int i = 0; i < gens; ++i) d.generators.push_back(random_vector(rng, 6));
    if (draw(rng, 0, 2) > 0) d.tail_from = draw(rng, 1, 6);
    const int ks = draw(rng, 0, 2);
    for (int i = 0; i < ks; ++i) {
        EvConstFunctional f;
        const int head = draw(rng, 0, 5);
        for (int c = 0; c < head; ++c) f.head.push_back(draw(rng, -2, 2));
        f.tail = draw(rng, 0, 3) == 0 ? Rational(draw(rng, 1, 2)) : Rational(0);
        d.kernels.push_back(f);
    }
    return d;
}

// Vectors spanning W inside span{v_1..v_m}.
inline std::vector<FinSuppVec> sample_vectors(const Subspace& w, int m) {
    if (w.form() == Subspace::Form::Finite) return w.basis_vectors();
    return truncate(w, m).basis_vectors();
}

// Plain bilinear evaluation, written out rather than calling form_value.
inline Rational pair_by_hand(Pairing p, const FinSuppVec& x, const FinSuppVec& y) {
    Rational s = 0;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) {
            if (p == Pairing::Gl) {
                if (i == j) s += a * b;
            } else if (i % 2 == 1 && j == i + 1) {
                s += a * b;
            } else if (i % 2 == 0 && j == i - 1) {
                s += (p == Pairing::Symmetric ? 1 : -1) * a * b;
            }
        }
    return s;
}

// --------------------------------------------------------------- modules

inline Labels omega_labels(const SimpleAlgebra& a) {
    Labels l(static_cast<std::size_t>(a.rank()), 0);
    l[0] = 1;
    return l;
}

inline Labels omega_star_labels(const SimpleAlgebra& a) {
    Labels l = omega_labels(a);
    if (a.series() == Series::A) std::reverse(l.begin(), l.end());
    return l;
}

inline SimpleAlgebra type_a(int natural_dim) { return SimpleAlgebra(Series::A, natural_dim - 1); }

// Summand non-trivial on at most one factor: kind 1 = omega, 2 = omega*, 0 = trivial.
struct Piece {
    int factor = -1;
    int kind = 0;
    std::int64_t mult = 1;
};

inline Summand piece_summand(const SemisimpleAlgebra& alg, const Piece& p) {
    Summand s;
    for (std::size_t j = 0; j < alg.size(); ++j) {
        const SimpleAlgebra& a = alg.factors[j];
        if (static_cast<int>(j) == p.factor && p.kind == 1) s.weights.emplace_back(a, omega_labels(a));
        else if (static_cast<int>(j) == p.factor && p.kind == 2) s.weights.emplace_back(a, omega_star_labels(a));
        else s.weights.push_back(DominantWeight::zero(a));
    }
    s.multiplicity = p.mult;
    return s;
}

inline ModuleDecomposition pieces_module(const SemisimpleAlgebra& alg, const std::vector<Piece>& ps) {
    ModuleDecomposition d{alg, {}};
    for (const Piece& p : ps) d.summands.push_back(piece_summand(alg, p));
    return d;
}

inline std::int64_t pieces_dim(const SemisimpleAlgebra& alg, const std::vector<Piece>& ps) {
    std::int64_t n = 0;
    for (const Piece& p : ps) n += p.mult * (p.kind == 0 ? 1 : alg.factors[static_cast<std::size_t>(p.factor)].natural_dimension());
    return n;
}

// ------------------------------------------------- diagonal-type systems

// Random prefix of type-A algebras in type-A ambients whose branchings only
// use omega, omega* and trivial summands. Built bottom-up so that every
// component of level n sits non-trivially in level n+1; the ambient
// branchings are then fixed top-down by restriction, dropping a few trivial
// lines per level, which makes the consistency law hold by construction.
inline SystemSpec random_diagonal_system(std::mt19937_64& rng, int max_levels = 6, int max_width = 4,
                                         int max_natural = 40) {
    for (;;) {
        const int levels = draw(rng, 2, max_levels);
        std::vector<SemisimpleAlgebra> comps;
        std::vector<std::vector<std::vector<Piece>>> edge_pieces;  // [n][k] pieces over level n
        std::vector<SimpleAlgebra> first;
        const int w0 = draw(rng, 1, max_width);
        for (int j = 0; j < w0; ++j) first.push_back(type_a(draw(rng, 2, 4)));
        comps.emplace_back(first);
        bool too_big = false;
        for (int n = 1; n < levels && !too_big; ++n) {
            const SemisimpleAlgebra& below = comps.back();
            const int width = draw(rng, 1, max_width);
            std::vector<std::vector<Piece>> pieces(static_cast<std::size_t>(width));
            for (std::size_t j = 0; j < below.size(); ++j) {
                const int parents = draw(rng, 1, std::min(2, width));
                std::set<int> chosen;
                while (static_cast<int>(chosen.size()) < parents) chosen.insert(draw(rng, 0, width - 1));
                for (int k : chosen) {
                    const int kind = below.factors[j].rank() >= 2 ? draw(rng, 1, 2) : 1;
                    pieces[static_cast<std::size_t>(k)].push_back({static_cast<int>(j), kind, draw(rng, 1, 2)});
                }
            }
            std::vector<SimpleAlgebra> here;
            for (auto& ps : pieces) {
                const int t = draw(rng, 0, 2);
                std::int64_t d = pieces_dim(below, ps) + t;
                if (t > 0) ps.push_back({-1, 0, t});
                if (d < 2) {
                    ps.push_back({-1, 0, 2 - d});
                    d = 2;
                }
                if (d > max_natural) too_big = true;
                here.push_back(type_a(static_cast<int>(d)));
            }
            edge_pieces.push_back(pieces);
            comps.emplace_back(here);
        }
        if (too_big) continue;

        // Ambient branching at the top, then restrictions downward.
        std::vector<std::vector<Piece>> ambient(static_cast<std::size_t>(levels));
        {
            const SemisimpleAlgebra& top = comps.back();
            std::vector<Piece>& ps = ambient.back();
            for (std::size_t k = 0; k < top.size(); ++k)
                ps.push_back({static_cast<int>(k), top.factors[k].rank() >= 2 ? draw(rng, 1, 2) : 1, draw(rng, 1, 2)});
            if (const int t = draw(rng, 0, 2)) ps.push_back({-1, 0, t});
            if (pieces_dim(top, ps) > max_natural) continue;
        }
        for (int n = levels - 2; n >= 0; --n) {
            std::vector<Piece> restricted;
            std::int64_t trivial = 0;
            for (const Piece& p : ambient[static_cast<std::size_t>(n + 1)]) {
                if (p.kind == 0) {
                    trivial += p.mult;
                    continue;
                }
                for (const Piece& q : edge_pieces[static_cast<std::size_t>(n)][static_cast<std::size_t>(p.factor)]) {
                    if (q.kind == 0) {
                        trivial += p.mult * q.mult;
                        continue;
                    }
                    const int kind = p.kind == 1 ? q.kind : 3 - q.kind;
                    restricted.push_back({q.factor, kind, p.mult * q.mult});
                }
            }
            trivial -= draw(rng, 0, static_cast<int>(std::min<std::int64_t>(trivial, 2)));
            if (trivial > 0) restricted.push_back({-1, 0, trivial});
            ambient[static_cast<std::size_t>(n)] = restricted;
        }

        SystemSpec spec;
        for (int n = 0; n < levels; ++n) {
            const SemisimpleAlgebra& c = comps[static_cast<std::size_t>(n)];
            const auto& ps = ambient[static_cast<std::size_t>(n)];
            spec.levels.push_back(LevelSpec{c, type_a(static_cast<int>(pieces_dim(c, ps))), pieces_module(c, ps), std::nullopt});
        }
        for (int n = 0; n + 1 < levels; ++n) {
            EdgeSpec e;
            for (const auto& ps : edge_pieces[static_cast<std::size_t>(n)])
                e.branchings.push_back(pieces_module(comps[static_cast<std::size_t>(n)], ps));
            spec.edges.push_back(e);
        }
        return spec;
    }
}

// ----------------------------------------------------------- graph oracle

// Index of a module on one factor, from trace indices of its summands.
inline Integer module_index_by_trace(const ModuleDecomposition& d, std::size_t factor) {
    Integer total = 0;
    for (const Summand& s : d.summands) {
        if (s.weights[factor].is_zero()) continue;
        Integer rest = s.multiplicity;
        for (std::size_t i = 0; i < s.weights.size(); ++i)
            if (i != factor) rest *= dimension(d.algebra.factors[i], s.weights[i]);
        total += rest * oracle::trace_index(d.algebra.factors[factor], s.weights[factor]);
    }
    return total;
}

// Natural-module index, from the trace up to rank 12. Beyond that the
// Freudenthal recursion is too slow for a test, and the value is the series
// constant the smaller ranks establish: a long coroot acts on the natural
// module with eigenvalues +1 and -1 once each (A, C), twice each (B, D).
inline Integer natural_index_by_trace(const SimpleAlgebra& a) {
    if (a.rank() <= 12) return oracle::trace_index(a, DominantWeight::natural(a));
    return (a.series() == Series::B || a.series() == Series::D) ? 2 : 1;
}

struct GraphCheck {
    bool labels_match = true;    // alpha/beta equal the trace recomputation
    bool consistency = true;     // alpha_n^j = sum_k beta alpha_{n+1}^k
    bool monotone = true;        // level sums never increase
    bool strings = true;         // one-in/one-out above every stabilization level
    std::string detail;
};

inline GraphCheck check_graph(const SystemSpec& spec, const BratteliGraph& g) {
    GraphCheck out;
    const int L = static_cast<int>(spec.levels.size());
    std::vector<std::vector<Integer>> alpha(static_cast<std::size_t>(L));
    for (int n = 0; n < L; ++n) {
        const LevelSpec& lv = spec.levels[static_cast<std::size_t>(n)];
        const Integer nat = natural_index_by_trace(lv.ambient);
        for (std::size_t j = 0; j < lv.components.size(); ++j) {
            Integer a = module_index_by_trace(lv.ambient_branching, j);
            alpha[static_cast<std::size_t>(n)].push_back(a / nat);
            if (a % nat != 0 || g.alpha[static_cast<std::size_t>(n)][j] != a / nat) {
                out.labels_match = false;
                out.detail += "alpha mismatch at " + to_string(Vertex{n, static_cast<int>(j)}) + "; ";
            }
        }
    }
    for (int n = 0; n + 1 < L; ++n) {
        const EdgeSpec& e = spec.edges[static_cast<std::size_t>(n)];
        for (std::size_t j = 0; j < spec.levels[static_cast<std::size_t>(n)].components.size(); ++j) {
            Integer s = 0;
            for (std::size_t k = 0; k < e.branchings.size(); ++k) {
                const SimpleAlgebra& upper = spec.levels[static_cast<std::size_t>(n + 1)].components.factors[k];
                const Integer raw = module_index_by_trace(e.branchings[k], j);
                const Integer beta = raw / natural_index_by_trace(upper);
                if (g.beta[static_cast<std::size_t>(n)][j][k] != beta) {
                    out.labels_match = false;
                    out.detail += "beta mismatch; ";
                }
                s += beta * alpha[static_cast<std::size_t>(n + 1)][k];
            }
            if (s != alpha[static_cast<std::size_t>(n)][j]) {
                out.consistency = false;
                out.detail += "consistency fails at " + to_string(Vertex{n, static_cast<int>(j)}) + "; ";
            }
        }
    }
    // Reachability and sums by breadth-first search over non-zero beta.
    for (int n = 0; n < L; ++n)
        for (int j = 0; j < g.width(n); ++j) {
            std::vector<std::set<int>> layers{{j}};
            for (int m = n; m + 1 < L; ++m) {
                std::set<int> next;
                for (int a : layers.back())
                    for (int k = 0; k < g.width(m + 1); ++k)
                        if (g.beta[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] > 0)
                            next.insert(k);
                layers.push_back(next);
            }
            std::vector<Integer> sums;
            for (std::size_t i = 0; i < layers.size(); ++i) {
                Integer s = 0;
                for (int a : layers[i]) s += alpha[static_cast<std::size_t>(n) + i][static_cast<std::size_t>(a)];
                if (!sums.empty() && s > sums.back()) out.monotone = false;
                sums.push_back(s);
            }
            const auto m0 = stabilization(g, Vertex{n, j});
            if (!m0) continue;
            for (int m = *m0; m < L; ++m) {
                const auto& layer = layers[static_cast<std::size_t>(m - n)];
                if (m + 1 < L) {
                    for (int a : layer) {
                        int outdeg = 0;
                        for (int k = 0; k < g.width(m + 1); ++k)
                            outdeg += g.beta[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] > 0;
                        if (outdeg != 1) out.strings = false;
                    }
                    if (sums[static_cast<std::size_t>(m - n)] != sums[static_cast<std::size_t>(m - n + 1)]) out.strings = false;
                }
                if (m > *m0) {
                    const auto& prev = layers[static_cast<std::size_t>(m - n - 1)];
                    for (int b : layer) {
                        int indeg = 0;
                        for (int a : prev)
                            indeg += g.beta[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] > 0;
                        if (indeg != 1) out.strings = false;
                    }
                }
            }
            if (!out.strings && out.detail.find("string") == std::string::npos)
                out.detail += "string property fails from " + to_string(Vertex{n, j}) + "; ";
        }
    return out;
}

// ------------------------------------------------------------- chains

struct RandomChain {
    std::vector<Embedding> first;
    Embedding second;
    std::int64_t expected_sum = 0;  // recomputed from trace indices
};

// f = A_r -> k_1 + ... + k_l (type A) -> A_{D-1}; the first maps use
// omega/omega*/trivial pieces or the symmetric square of A1, the second map
// uses single-factor pieces and occasional outer products of two naturals.
inline RandomChain random_chain(std::mt19937_64& rng, int max_total = 200) {
    for (;;) {
        const SimpleAlgebra f(Series::A, draw(rng, 1, 3));
        const SemisimpleAlgebra fs = SemisimpleAlgebra::simple(f);
        const int l = draw(rng, 1, 3);
        std::vector<Embedding> first;
        std::vector<SimpleAlgebra> ks;
        for (int j = 0; j < l; ++j) {
            ModuleDecomposition br{fs, {}};
            std::int64_t d = 0;
            if (f.rank() == 1 && draw(rng, 0, 2) == 0) {
                br.summands.push_back({{DominantWeight(f, {2})}, 1});
                d += 3;
            } else {
                const std::int64_t m = draw(rng, 1, 2);
                br.summands.push_back({{DominantWeight(f, omega_labels(f))}, m});
                d += m * f.natural_dimension();
                if (f.rank() >= 2 && draw(rng, 0, 1)) {
                    br.summands.push_back({{DominantWeight(f, omega_star_labels(f))}, 1});
                    d += f.natural_dimension();
                }
            }
            if (const int t = draw(rng, 0, 2)) {
                br.summands.push_back({{DominantWeight::zero(f)}, t});
                d += t;
            }
            ks.push_back(type_a(static_cast<int>(d)));
            first.emplace_back(fs, ks.back(), br);
        }
        const SemisimpleAlgebra mid(ks);
        ModuleDecomposition br{mid, {}};
        std::int64_t D = 0;
        for (int j = 0; j < l; ++j) {
            Piece p{j, ks[static_cast<std::size_t>(j)].rank() >= 2 ? draw(rng, 1, 2) : 1, 1};
            br.summands.push_back(piece_summand(mid, p));
            D += ks[static_cast<std::size_t>(j)].natural_dimension();
        }
        if (l >= 2 && draw(rng, 0, 1)) {
            Summand s = piece_summand(mid, {0, 1, 1});
            s.weights[1] = DominantWeight(ks[1], omega_labels(ks[1]));
            br.summands.push_back(s);
            D += static_cast<std::int64_t>(ks[0].natural_dimension()) * ks[1].natural_dimension();
        }
        if (const int t = draw(rng, 0, 3)) {
            br.summands.push_back(piece_summand(mid, {-1, 0, t}));
            D += t;
        }
        if (D > max_total || D < 2) continue;
        Embedding second(mid, type_a(static_cast<int>(D)), br);

        Integer sum = 0;
        for (int j = 0; j < l; ++j) {
            const Integer inner = module_index_by_trace(first[static_cast<std::size_t>(j)].branching, 0) /
                                  natural_index_by_trace(ks[static_cast<std::size_t>(j)]);
            const Integer outer = module_index_by_trace(br, static_cast<std::size_t>(j)) / natural_index_by_trace(second.target);
            sum += inner * outer;
        }
        return {first, second, to_int64(sum, "chain sum")};
    }
}

// -------------------------------------------------------------- CLI

struct CliRun {
    int exit_code = -1;
    std::string out;
};

// Runs the command-line tool with `args`, capturing stdout in `capture`.
inline CliRun run_cli(const std::string& args, const std::string& capture) {
    const std::string cmd = std::string(LIELIMITS_CLI_PATH) + " " + args + " > " + capture + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    CliRun r;
    r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = slurp(capture);
    std::remove(capture.c_str());
    return r;
}

}  // namespace testsupport
