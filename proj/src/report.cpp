#include "lielimits/report.hpp"

#include "lielimits/error.hpp"

#include <sstream>

namespace lielimits::report {

using io::Json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& get(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::string sub(const std::string& where, const char* key) { return where + "." + key; }
std::string sub(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const Json& arr(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

std::int64_t i64(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<std::int64_t>();
}

bool boolean(const Json& j, const std::string& where) {
    if (!j.is_boolean()) fail(where, "expected true or false");
    return j.get<bool>();
}

std::string str(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

template <class T, class F>
std::vector<T> list(const Json& j, const std::string& where, F&& each) {
    std::vector<T> out;
    const Json& a = arr(j, where);
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(each(a[i], sub(where, i)));
    return out;
}

std::vector<std::int64_t> i64_list(const Json& j, const std::string& where) {
    return list<std::int64_t>(j, where, [](const Json& x, const std::string& w) { return i64(x, w); });
}

template <class T>
Json nullable(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

// Vertices, constituent ids and levels are 1-based in documents.
Json vertex_json(Vertex v) { return Json::array({v.level + 1, v.index + 1}); }

Vertex vertex_from(const Json& j, const std::string& where) {
    const auto p = i64_list(j, where);
    if (p.size() != 2 || p[0] < 1 || p[1] < 1) fail(where, "expected [level, index], both 1-based");
    return Vertex{static_cast<int>(p[0] - 1), static_cast<int>(p[1] - 1)};
}

Json vertices_json(const std::vector<Vertex>& vs) {
    Json out = Json::array();
    for (Vertex v : vs) out.push_back(vertex_json(v));
    return out;
}

std::vector<Vertex> vertices_from(const Json& j, const std::string& where) {
    return list<Vertex>(j, where, vertex_from);
}

Json ids_json(const std::vector<int>& ids) {
    Json out = Json::array();
    for (int id : ids) out.push_back(id + 1);
    return out;
}

std::vector<int> ids_from(const Json& j, const std::string& where) {
    std::vector<int> out;
    for (std::int64_t v : i64_list(j, where)) {
        if (v < 1) fail(where, "constituent ids are 1-based");
        out.push_back(static_cast<int>(v - 1));
    }
    return out;
}

DominantWeight weight_from(const SimpleAlgebra& alg, const Json& j, const std::string& where) {
    Labels l = io::labels_from_json(j, where);
    try {
        return DominantWeight(alg, std::move(l));
    } catch (const DomainError& e) {
        fail(where, e.what());
    }
}

Json decomposition_json(const ModuleDecomposition& d) {
    return {{"algebra", io::to_json(d.algebra)}, {"summands", io::summands_to_json(d)}};
}

ModuleDecomposition decomposition_from(const Json& j, const std::string& where) {
    const SemisimpleAlgebra alg = io::semisimple_from_json(get(j, "algebra", where), sub(where, "algebra"));
    return io::decomposition_from_json(get(j, "summands", where), alg, sub(where, "summands"));
}

ConstituentKind kind_from(const Json& j, const std::string& where) {
    const std::string s = str(j, where);
    for (auto k : {ConstituentKind::FiniteSimple, ConstituentKind::SlInf, ConstituentKind::SoInf, ConstituentKind::SpInf,
                   ConstituentKind::Undetermined})
        if (to_string(k) == s) return k;
    fail(where, "unknown constituent kind '" + s + "'");
}

Json constituent_json(const Constituent& c) {
    return {{"id", c.id + 1},
            {"kind", to_string(c.kind)},
            {"algebra", c.algebra ? Json(c.algebra->name()) : Json(nullptr)},
            {"string", vertices_json(c.string)},
            {"tail_assumed", c.tail_assumed}};
}

Constituent constituent_from(const Json& j, const std::string& where) {
    Constituent c;
    c.id = static_cast<int>(i64(get(j, "id", where), sub(where, "id")) - 1);
    c.kind = kind_from(get(j, "kind", where), sub(where, "kind"));
    const Json& a = get(j, "algebra", where);
    if (!a.is_null()) c.algebra = io::algebra_from_json(a, sub(where, "algebra"));
    c.string = vertices_from(get(j, "string", where), sub(where, "string"));
    c.tail_assumed = boolean(get(j, "tail_assumed", where), sub(where, "tail_assumed"));
    return c;
}

Json constituents_json(const std::vector<Constituent>& cs) {
    Json out = Json::array();
    for (const Constituent& c : cs) out.push_back(constituent_json(c));
    return out;
}

Json class_json(const EmbeddingClass& c) {
    const char* kind = c.kind == EmbeddingKind::Standard ? "Standard" : c.kind == EmbeddingKind::Diagonal ? "Diagonal" : "General";
    return {{"kind", kind}, {"k", c.k}, {"l", c.l}, {"t", c.t}};
}

EmbeddingClass class_from(const Json& j, const std::string& where) {
    EmbeddingClass c;
    const std::string k = str(get(j, "kind", where), sub(where, "kind"));
    if (k == "Standard") c.kind = EmbeddingKind::Standard;
    else if (k == "Diagonal") c.kind = EmbeddingKind::Diagonal;
    else if (k == "General") c.kind = EmbeddingKind::General;
    else fail(sub(where, "kind"), "unknown embedding kind '" + k + "'");
    c.k = i64(get(j, "k", where), sub(where, "k"));
    c.l = i64(get(j, "l", where), sub(where, "l"));
    c.t = i64(get(j, "t", where), sub(where, "t"));
    return c;
}

Json vector_json(const FinSuppVec& v) {
    Json out = Json::object();
    for (const auto& [i, c] : v) out[std::to_string(i)] = io::to_json(c);
    return out;
}

FinSuppVec vector_from(const Json& j, const std::string& where) {
    Json wrapper = {{"space", "V"}, {"generators", Json::array({j})}};
    return io::subspace_from_json(wrapper, where).generators.at(0);
}

Json multiplicities_json(const Multiplicities& m) { return {{"k", m.k}, {"l", m.l}}; }

Multiplicities multiplicities_from(const Json& j, const std::string& where) {
    return {i64(get(j, "k", where), sub(where, "k")), i64(get(j, "l", where), sub(where, "l"))};
}

// ---- per-report encoders -------------------------------------------------

Json encode(const IndexReport& r) {
    return {{"algebra", r.algebra.name()},
            {"weight", r.weight.labels()},
            {"dimension", io::to_json(r.dimension)},
            {"index", io::to_json(r.index)}};
}

IndexReport decode_index(const Json& j, const std::string& w) {
    const SimpleAlgebra alg = io::algebra_from_json(get(j, "algebra", w), sub(w, "algebra"));
    return {alg, weight_from(alg, get(j, "weight", w), sub(w, "weight")),
            io::integer_from_json(get(j, "dimension", w), sub(w, "dimension")),
            io::integer_from_json(get(j, "index", w), sub(w, "index"))};
}

Json encode(const EmbedReport& r) {
    return {{"embedding", io::to_json(r.embedding)},
            {"indices", r.indices},
            {"classification", r.classification ? class_json(*r.classification) : Json(nullptr)}};
}

EmbedReport decode_embed(const Json& j, const std::string& w) {
    EmbedReport r{io::embedding_from_json(get(j, "embedding", w), sub(w, "embedding")),
                  i64_list(get(j, "indices", w), sub(w, "indices")), std::nullopt};
    const Json& c = get(j, "classification", w);
    if (!c.is_null()) r.classification = class_from(c, sub(w, "classification"));
    return r;
}

Json encode(const ComposeReport& r) {
    return {{"chain", io::to_json(r.chain)},
            {"sum_side", r.result.sum_side},
            {"direct_side", r.result.direct_side},
            {"route", r.result.route},
            {"composite", r.result.composite ? decomposition_json(*r.result.composite) : Json(nullptr)}};
}

ComposeReport decode_compose(const Json& j, const std::string& w) {
    ComposeReport r{io::chain_from_json(get(j, "chain", w), sub(w, "chain")), {}};
    r.result.sum_side = i64(get(j, "sum_side", w), sub(w, "sum_side"));
    r.result.direct_side = i64(get(j, "direct_side", w), sub(w, "direct_side"));
    r.result.route = str(get(j, "route", w), sub(w, "route"));
    const Json& c = get(j, "composite", w);
    if (!c.is_null()) r.result.composite = decomposition_from(c, sub(w, "composite"));
    return r;
}

Json encode(const LimitReport& r) {
    Json levels = Json::array();
    for (int n = 0; n < r.graph.levels(); ++n) {
        Json algs = Json::array();
        for (const SimpleAlgebra& a : r.graph.algebras[n]) algs.push_back(a.name());
        levels.push_back({{"algebras", algs}, {"alpha", r.graph.alpha[n]}});
    }
    Json stability = Json::array();
    for (const VertexStability& s : r.stability)
        stability.push_back({{"origin", vertex_json(s.origin)},
                             {"level_sums", s.level_sums},
                             {"stabilization", s.stabilization ? Json(*s.stabilization + 1) : Json(nullptr)}});
    return {{"levels", levels},
            {"beta", r.graph.beta},
            {"stability", stability},
            {"stabilized", r.stabilized},
            {"constituents", constituents_json(r.constituents)},
            {"unstable", vertices_json(r.unstable)}};
}

LimitReport decode_limit(const Json& j, const std::string& w) {
    LimitReport r;
    const Json& levels = arr(get(j, "levels", w), sub(w, "levels"));
    for (std::size_t n = 0; n < levels.size(); ++n) {
        const std::string wl = sub(sub(w, "levels"), n);
        r.graph.algebras.push_back(list<SimpleAlgebra>(get(levels[n], "algebras", wl), sub(wl, "algebras"),
                                                       io::algebra_from_json));
        r.graph.alpha.push_back(i64_list(get(levels[n], "alpha", wl), sub(wl, "alpha")));
    }
    const Json& beta = arr(get(j, "beta", w), sub(w, "beta"));
    for (std::size_t n = 0; n < beta.size(); ++n) {
        std::vector<std::vector<std::int64_t>> rows;
        const Json& b = arr(beta[n], sub(sub(w, "beta"), n));
        for (std::size_t i = 0; i < b.size(); ++i) rows.push_back(i64_list(b[i], sub(sub(sub(w, "beta"), n), i)));
        r.graph.beta.push_back(std::move(rows));
    }
    r.stability = list<VertexStability>(get(j, "stability", w), sub(w, "stability"), [](const Json& x, const std::string& ws) {
        VertexStability s;
        s.origin = vertex_from(get(x, "origin", ws), sub(ws, "origin"));
        s.level_sums = i64_list(get(x, "level_sums", ws), sub(ws, "level_sums"));
        const Json& m = get(x, "stabilization", ws);
        if (!m.is_null()) s.stabilization = static_cast<int>(i64(m, sub(ws, "stabilization")) - 1);
        return s;
    });
    r.stabilized = boolean(get(j, "stabilized", w), sub(w, "stabilized"));
    r.constituents = list<Constituent>(get(j, "constituents", w), sub(w, "constituents"), constituent_from);
    r.unstable = vertices_from(get(j, "unstable", w), sub(w, "unstable"));
    return r;
}

Json encode(const RefineReport& r) {
    const Refinement& f = r.refinement;
    Json steps = Json::array();
    for (const RefinementStep& s : f.steps)
        steps.push_back({{"from", vertex_json(s.from)},
                         {"to", vertex_json(s.to)},
                         {"classification", s.classification},
                         {"standard", s.standard}});
    return {{"constituent", f.constituent + 1},
            {"chain", vertices_json(f.chain)},
            {"steps", steps},
            {"standard_from", f.standard_from ? Json(*f.standard_from + 1) : Json(nullptr)}};
}

RefineReport decode_refine(const Json& j, const std::string& w) {
    Refinement f;
    f.constituent = static_cast<int>(i64(get(j, "constituent", w), sub(w, "constituent")) - 1);
    f.chain = vertices_from(get(j, "chain", w), sub(w, "chain"));
    f.steps = list<RefinementStep>(get(j, "steps", w), sub(w, "steps"), [](const Json& x, const std::string& ws) {
        return RefinementStep{vertex_from(get(x, "from", ws), sub(ws, "from")), vertex_from(get(x, "to", ws), sub(ws, "to")),
                              str(get(x, "classification", ws), sub(ws, "classification")),
                              boolean(get(x, "standard", ws), sub(ws, "standard"))};
    });
    const Json& n0 = get(j, "standard_from", w);
    if (!n0.is_null()) f.standard_from = static_cast<int>(i64(n0, sub(w, "standard_from")) - 1);
    return {f};
}

Json encode(const SocleDocument& d) {
    const SocleReport& r = d.socle;
    Json infinite = Json::array();
    for (const InfinitePart& p : r.infinite)
        infinite.push_back({{"constituent", p.constituent + 1},
                            {"kind", to_string(p.kind)},
                            {"multiplicities", multiplicities_json(p.mult)},
                            {"natural_trivial", to_json(p.trivial.natural)},
                            {"conatural_trivial", to_json(p.trivial.conatural)}});
    Json finite = Json::array();
    for (const IsotypicEntry& e : r.finite_part)
        finite.push_back({{"constituents", ids_json(e.constituents)}, {"weights", e.weights}, {"multiplicity", e.multiplicity}});
    return {{"constituents", constituents_json(r.constituents)},
            {"infinite", infinite},
            {"finite_part", finite},
            {"quotient", to_json(r.quotient)},
            {"conatural_quotient", to_json(r.conatural_quotient)},
            {"socle_dim_top", r.socle_dim_top}};
}

SocleDocument decode_socle(const Json& j, const std::string& w) {
    SocleReport r;
    r.constituents = list<Constituent>(get(j, "constituents", w), sub(w, "constituents"), constituent_from);
    r.infinite = list<InfinitePart>(get(j, "infinite", w), sub(w, "infinite"), [](const Json& x, const std::string& ws) {
        InfinitePart p;
        p.constituent = static_cast<int>(i64(get(x, "constituent", ws), sub(ws, "constituent")) - 1);
        p.kind = kind_from(get(x, "kind", ws), sub(ws, "kind"));
        p.mult = multiplicities_from(get(x, "multiplicities", ws), sub(ws, "multiplicities"));
        p.trivial.natural = extended_dim_from_json(get(x, "natural_trivial", ws), sub(ws, "natural_trivial"));
        p.trivial.conatural = extended_dim_from_json(get(x, "conatural_trivial", ws), sub(ws, "conatural_trivial"));
        return p;
    });
    r.finite_part = list<IsotypicEntry>(get(j, "finite_part", w), sub(w, "finite_part"), [](const Json& x, const std::string& ws) {
        IsotypicEntry e;
        e.constituents = ids_from(get(x, "constituents", ws), sub(ws, "constituents"));
        e.weights = list<Labels>(get(x, "weights", ws), sub(ws, "weights"), io::labels_from_json);
        e.multiplicity = i64(get(x, "multiplicity", ws), sub(ws, "multiplicity"));
        return e;
    });
    r.quotient = extended_dim_from_json(get(j, "quotient", w), sub(w, "quotient"));
    r.conatural_quotient = extended_dim_from_json(get(j, "conatural_quotient", w), sub(w, "conatural_quotient"));
    r.socle_dim_top = i64(get(j, "socle_dim_top", w), sub(w, "socle_dim_top"));
    return {r};
}

Json encode(const InvariantsReport& r) {
    Json mult = Json::array();
    for (const auto& [id, m] : r.invariants.multiplicities)
        mult.push_back({{"constituent", id + 1}, {"k", m.k}, {"l", m.l}});
    Json subsets = Json::array();
    for (const SubsetInvariants& s : r.invariants.subsets)
        subsets.push_back({{"subset", ids_json(s.subset)},
                           {"natural_trivial", to_json(s.natural_trivial)},
                           {"conatural_trivial", to_json(s.conatural_trivial)},
                           {"natural_quotient", to_json(s.natural_quotient)},
                           {"conatural_quotient", to_json(s.conatural_quotient)}});
    return {{"multiplicities", mult}, {"subsets", subsets}};
}

InvariantsReport decode_invariants(const Json& j, const std::string& w) {
    StandardInvariants inv;
    const Json& mult = arr(get(j, "multiplicities", w), sub(w, "multiplicities"));
    for (std::size_t i = 0; i < mult.size(); ++i) {
        const std::string wm = sub(sub(w, "multiplicities"), i);
        const int id = static_cast<int>(i64(get(mult[i], "constituent", wm), sub(wm, "constituent")) - 1);
        inv.multiplicities[id] = multiplicities_from(mult[i], wm);
    }
    inv.subsets = list<SubsetInvariants>(get(j, "subsets", w), sub(w, "subsets"), [](const Json& x, const std::string& ws) {
        SubsetInvariants s;
        s.subset = ids_from(get(x, "subset", ws), sub(ws, "subset"));
        s.natural_trivial = extended_dim_from_json(get(x, "natural_trivial", ws), sub(ws, "natural_trivial"));
        s.conatural_trivial = extended_dim_from_json(get(x, "conatural_trivial", ws), sub(ws, "conatural_trivial"));
        s.natural_quotient = extended_dim_from_json(get(x, "natural_quotient", ws), sub(ws, "natural_quotient"));
        s.conatural_quotient = extended_dim_from_json(get(x, "conatural_quotient", ws), sub(ws, "conatural_quotient"));
        return s;
    });
    return {inv};
}

Json encode(const MaximalReport& r) {
    Json u = nullptr;
    if (r.uniqueness)
        u = {{"same_invariant", r.uniqueness->same_invariant},
             {"separating", r.uniqueness->separating ? vector_json(*r.uniqueness->separating) : Json(nullptr)}};
    return {{"input", r.input},
            {"subspace", r.subspace ? io::to_json(*r.subspace) : Json(nullptr)},
            {"verdict", to_json(r.verdict)},
            {"compared", r.compared ? to_json(*r.compared) : Json(nullptr)},
            {"uniqueness", u}};
}

MaximalReport decode_maximal(const Json& j, const std::string& w) {
    MaximalReport r;
    r.input = str(get(j, "input", w), sub(w, "input"));
    const Json& s = get(j, "subspace", w);
    if (!s.is_null()) r.subspace = io::subspace_value_from_json(s, sub(w, "subspace"));
    r.verdict = verdict_from_json(get(j, "verdict", w), sub(w, "verdict"));
    const Json& c = get(j, "compared", w);
    if (!c.is_null()) r.compared = verdict_from_json(c, sub(w, "compared"));
    const Json& u = get(j, "uniqueness", w);
    if (!u.is_null()) {
        const std::string wu = sub(w, "uniqueness");
        UniquenessReport ur;
        ur.same_invariant = boolean(get(u, "same_invariant", wu), sub(wu, "same_invariant"));
        const Json& sep = get(u, "separating", wu);
        if (!sep.is_null()) ur.separating = vector_from(sep, sub(wu, "separating"));
        r.uniqueness = ur;
    }
    return r;
}

Json encode(const OracleReport& r) {
    Json weights = Json::array();
    for (const auto& [mu, m] : r.weights) weights.push_back({{"weight", mu}, {"mult", m}});
    return {{"algebra", r.algebra.name()},
            {"weight", r.weight.labels()},
            {"weights", weights},
            {"total", r.total},
            {"weyl_symmetric", r.weyl_symmetric},
            {"trace_index", io::to_json(r.trace_index)},
            {"tensor_with", r.tensor_with ? Json(r.tensor_with->labels()) : Json(nullptr)},
            {"tensor", r.tensor ? decomposition_json(*r.tensor) : Json(nullptr)}};
}

OracleReport decode_oracle(const Json& j, const std::string& w) {
    const SimpleAlgebra alg = io::algebra_from_json(get(j, "algebra", w), sub(w, "algebra"));
    OracleReport r{alg, weight_from(alg, get(j, "weight", w), sub(w, "weight")), {}, 0, false, 0, std::nullopt, std::nullopt};
    const Json& ws = arr(get(j, "weights", w), sub(w, "weights"));
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const std::string wi = sub(sub(w, "weights"), i);
        r.weights[io::labels_from_json(get(ws[i], "weight", wi), sub(wi, "weight"))] = i64(get(ws[i], "mult", wi), sub(wi, "mult"));
    }
    r.total = i64(get(j, "total", w), sub(w, "total"));
    r.weyl_symmetric = boolean(get(j, "weyl_symmetric", w), sub(w, "weyl_symmetric"));
    r.trace_index = io::integer_from_json(get(j, "trace_index", w), sub(w, "trace_index"));
    const Json& t = get(j, "tensor_with", w);
    if (!t.is_null()) r.tensor_with = weight_from(alg, t, sub(w, "tensor_with"));
    const Json& d = get(j, "tensor", w);
    if (!d.is_null()) r.tensor = decomposition_from(d, sub(w, "tensor"));
    return r;
}

Json encode(const SampleReport& r) {
    Json rows = Json::array();
    for (const SampleRow& s : r.rows)
        rows.push_back({{"algebra", s.algebra.name()},
                        {"weight", s.weight.labels()},
                        {"dimension", io::to_json(s.dimension)},
                        {"formula_index", io::to_json(s.formula_index)},
                        {"trace_index", io::to_json(s.trace_index)}});
    return {{"seed", r.seed}, {"max_dimension", r.max_dimension}, {"rows", rows}, {"all_agree", r.all_agree}};
}

SampleReport decode_sample(const Json& j, const std::string& w) {
    SampleReport r;
    const Json& seed = get(j, "seed", w);
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0))
        fail(sub(w, "seed"), "expected a non-negative integer");
    r.seed = seed.get<std::uint64_t>();
    r.max_dimension = i64(get(j, "max_dimension", w), sub(w, "max_dimension"));
    r.rows = list<SampleRow>(get(j, "rows", w), sub(w, "rows"), [](const Json& x, const std::string& ws) {
        const SimpleAlgebra alg = io::algebra_from_json(get(x, "algebra", ws), sub(ws, "algebra"));
        return SampleRow{alg, weight_from(alg, get(x, "weight", ws), sub(ws, "weight")),
                         io::integer_from_json(get(x, "dimension", ws), sub(ws, "dimension")),
                         io::integer_from_json(get(x, "formula_index", ws), sub(ws, "formula_index")),
                         io::integer_from_json(get(x, "trace_index", ws), sub(ws, "trace_index"))};
    });
    r.all_agree = boolean(get(j, "all_agree", w), sub(w, "all_agree"));
    return r;
}

constexpr const char* kCommands[] = {"index", "embed", "compose", "limit", "refine",
                                     "socle", "invariants", "maximal", "oracle", "sample"};

}  // namespace

Json to_json(const ExtendedDim& d) {
    const char* kind = d.kind == ExtendedDim::Kind::Finite ? "finite" : d.kind == ExtendedDim::Kind::Countable ? "countable" : "undetermined";
    return {{"kind", kind}, {"value", d.value}, {"evidence", d.evidence}};
}

ExtendedDim extended_dim_from_json(const Json& j, const std::string& where) {
    ExtendedDim d;
    const std::string k = str(get(j, "kind", where), sub(where, "kind"));
    if (k == "finite") d.kind = ExtendedDim::Kind::Finite;
    else if (k == "countable") d.kind = ExtendedDim::Kind::Countable;
    else if (k == "undetermined") d.kind = ExtendedDim::Kind::Undetermined;
    else fail(sub(where, "kind"), "unknown dimension kind '" + k + "'");
    d.value = i64(get(j, "value", where), sub(where, "value"));
    d.evidence = i64_list(get(j, "evidence", where), sub(where, "evidence"));
    return d;
}

Json to_json(const Verdict& v) {
    Json inv = Json::array();
    for (const Subspace& s : v.invariants) inv.push_back(io::to_json(s));
    Json wit = nullptr;
    if (v.witness)
        wit = {{"description", v.witness->description},
               {"subspace", v.witness->subspace ? io::to_json(*v.witness->subspace) : Json(nullptr)},
               {"vector", v.witness->vector ? vector_json(*v.witness->vector) : Json(nullptr)}};
    return {{"algebra", to_string(v.algebra)},
            {"outcome", to_string(v.outcome)},
            {"tag", to_string(v.tag)},
            {"condition", v.condition},
            {"subalgebra", v.subalgebra},
            {"invariants", inv},
            {"witness", wit}};
}

Verdict verdict_from_json(const Json& j, const std::string& w) {
    Verdict v;
    v.algebra = parse_algebra_kind(str(get(j, "algebra", w), sub(w, "algebra")));
    const std::string o = str(get(j, "outcome", w), sub(w, "outcome"));
    if (o == "Maximal") v.outcome = Outcome::Maximal;
    else if (o == "NotMaximal") v.outcome = Outcome::NotMaximal;
    else if (o == "NotProper") v.outcome = Outcome::NotProper;
    else fail(sub(w, "outcome"), "unknown outcome '" + o + "'");
    v.tag = parse_case_tag(str(get(j, "tag", w), sub(w, "tag")));
    v.condition = str(get(j, "condition", w), sub(w, "condition"));
    v.subalgebra = str(get(j, "subalgebra", w), sub(w, "subalgebra"));
    v.invariants = list<Subspace>(get(j, "invariants", w), sub(w, "invariants"), io::subspace_value_from_json);
    const Json& wit = get(j, "witness", w);
    if (!wit.is_null()) {
        const std::string ww = sub(w, "witness");
        Witness x;
        x.description = str(get(wit, "description", ww), sub(ww, "description"));
        const Json& s = get(wit, "subspace", ww);
        if (!s.is_null()) x.subspace = io::subspace_value_from_json(s, sub(ww, "subspace"));
        const Json& vec = get(wit, "vector", ww);
        if (!vec.is_null()) x.vector = vector_from(vec, sub(ww, "vector"));
        v.witness = std::move(x);
    }
    return v;
}

std::string command_of(const Report& r) { return kCommands[r.index()]; }

Json to_json(const Report& r) {
    Json body = std::visit([](const auto& x) { return encode(x); }, r);
    body["format"] = kReportFormat;
    body["command"] = command_of(r);
    return body;
}

Report from_json(const Json& j) {
    const std::string w = "report";
    io::format_of(j, w, kReportFormat);
    const std::string c = str(get(j, "command", w), sub(w, "command"));
    if (c == "index") return decode_index(j, w);
    if (c == "embed") return decode_embed(j, w);
    if (c == "compose") return decode_compose(j, w);
    if (c == "limit") return decode_limit(j, w);
    if (c == "refine") return decode_refine(j, w);
    if (c == "socle") return decode_socle(j, w);
    if (c == "invariants") return decode_invariants(j, w);
    if (c == "maximal") return decode_maximal(j, w);
    if (c == "oracle") return decode_oracle(j, w);
    if (c == "sample") return decode_sample(j, w);
    fail(sub(w, "command"), "unknown command '" + c + "'");
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

// ---- human rendering -------------------------------------------------------

namespace {

std::string join(const std::vector<std::int64_t>& xs, const char* sep = " ") {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + std::to_string(xs[i]);
    return s;
}

std::string labels_str(const Labels& l) {
    std::string s = "(";
    for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
    return s + ")";
}

std::string path(const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " -> " : "") + to_string(vs[i]);
    return s;
}

std::string decomposition_str(const ModuleDecomposition& d) {
    std::string s;
    for (std::size_t i = 0; i < d.summands.size(); ++i) {
        const Summand& x = d.summands[i];
        s += i ? " + " : "";
        if (x.multiplicity != 1) s += std::to_string(x.multiplicity) + "*";
        for (std::size_t f = 0; f < x.weights.size(); ++f) s += (f ? "x" : "") + x.weights[f].str();
    }
    return s;
}

std::string constituent_str(const Constituent& c) {
    std::string s = "  #" + std::to_string(c.id + 1) + " " + to_string(c.kind);
    if (c.algebra) s += "(" + c.algebra->name() + ")";
    s += "  string " + path(c.string);
    if (c.tail_assumed) s += "  [tail assumed]";
    return s + "\n";
}

void human(std::ostream& o, const IndexReport& r) {
    o << "algebra:   " << r.algebra.name() << "\n"
      << "weight:    " << r.weight.str() << "\n"
      << "dimension: " << to_string(r.dimension) << "\n"
      << "index:     " << to_string(r.index) << "\n";
}

void human(std::ostream& o, const EmbedReport& r) {
    o << "embedding: " << r.embedding.source.name() << " -> " << r.embedding.target.name() << "\n"
      << "branching: " << decomposition_str(r.embedding.branching) << "\n"
      << "index:     " << join(r.indices, ", ") << "\n";
    if (r.classification) o << "class:     " << to_string(*r.classification) << "\n";
}

void human(std::ostream& o, const ComposeReport& r) {
    o << "chain: " << r.chain.first.front().source.name() << " -> " << r.chain.second.source.name() << " -> "
      << r.chain.second.target.name() << "\n"
      << "sum of products of indices: " << r.result.sum_side << "\n"
      << "index of the composite:     " << r.result.direct_side << "\n"
      << "route: " << r.result.route << "\n";
    if (r.result.composite) o << "composite branching: " << decomposition_str(*r.result.composite) << "\n";
}

void human(std::ostream& o, const LimitReport& r) {
    o << "levels: " << r.graph.levels() << "\n";
    for (int n = 0; n < r.graph.levels(); ++n) {
        o << "  level " << n + 1 << ":";
        for (int j = 0; j < r.graph.width(n); ++j)
            o << "  " << r.graph.algebras[n][j].name() << "[alpha=" << r.graph.alpha[n][j] << "]";
        o << "\n";
    }
    o << "edges (beta):\n";
    for (int n = 0; n + 1 < r.graph.levels(); ++n)
        for (int j = 0; j < r.graph.width(n); ++j)
            for (int k = 0; k < r.graph.width(n + 1); ++k)
                if (r.graph.beta[n][j][k] != 0)
                    o << "  " << to_string(Vertex{n, j}) << " -> " << to_string(Vertex{n + 1, k}) << "  beta=" << r.graph.beta[n][j][k]
                      << "\n";
    o << "level sums a_m and stabilization:\n";
    for (const VertexStability& s : r.stability)
        o << "  " << to_string(s.origin) << "  a = " << join(s.level_sums)
          << (s.stabilization ? "  m0 = " + std::to_string(*s.stabilization + 1) : std::string("  not stabilized")) << "\n";
    if (!r.stabilized) {
        o << "result: NotStabilized; origins without stabilization:";
        for (Vertex v : r.unstable) o << " " << to_string(v);
        o << "; lengthen the prefix\n";
        return;
    }
    o << "constituents:\n";
    for (const Constituent& c : r.constituents) o << constituent_str(c);
}

void human(std::ostream& o, const RefineReport& r) {
    const Refinement& f = r.refinement;
    o << "constituent #" << f.constituent + 1 << "\n"
      << "chain: " << path(f.chain) << "\n";
    for (const RefinementStep& s : f.steps) o << "  " << to_string(s.from) << " -> " << to_string(s.to) << "  " << s.classification << "\n";
    o << "standard from level: " << (f.standard_from ? std::to_string(*f.standard_from + 1) : std::string("none in prefix")) << "\n";
}

void human(std::ostream& o, const SocleDocument& d) {
    const SocleReport& r = d.socle;
    o << "constituents:\n";
    for (const Constituent& c : r.constituents) o << constituent_str(c);
    for (const InfinitePart& p : r.infinite)
        o << "  #" << p.constituent + 1 << " " << to_string(p.kind) << ": k=" << p.mult.k << ", l=" << p.mult.l
          << ", dim N = " << to_string(p.trivial.natural) << ", dim N_* = " << to_string(p.trivial.conatural) << "\n";
    if (!r.finite_part.empty()) {
        o << "finite constituents, isotypic components at the top level:\n";
        for (const IsotypicEntry& e : r.finite_part) {
            o << "  ";
            for (std::size_t i = 0; i < e.weights.size(); ++i) o << (i ? " x " : "") << labels_str(e.weights[i]);
            o << "  multiplicity " << e.multiplicity << "\n";
        }
    }
    o << "dim V/V'   = " << to_string(r.quotient) << "  evidence " << join(r.quotient.evidence) << "\n"
      << "dim V_*/V_*' = " << to_string(r.conatural_quotient) << "  evidence " << join(r.conatural_quotient.evidence) << "\n"
      << "socle dimension inside V(g_top): " << r.socle_dim_top << "\n";
}

void human(std::ostream& o, const InvariantsReport& r) {
    for (const auto& [id, m] : r.invariants.multiplicities) o << "#" << id + 1 << ": k=" << m.k << ", l=" << m.l << "\n";
    for (const SubsetInvariants& s : r.invariants.subsets) {
        o << "J = {";
        for (std::size_t i = 0; i < s.subset.size(); ++i) o << (i ? "," : "") << s.subset[i] + 1;
        o << "}: dim N^J = " << to_string(s.natural_trivial) << ", dim N_*^J = " << to_string(s.conatural_trivial)
          << ", dim V/V'_J = " << to_string(s.natural_quotient) << ", dim V_*/V_*'_J = " << to_string(s.conatural_quotient)
          << "\n";
    }
}

void verdict_lines(std::ostream& o, const Verdict& v) {
    o << "algebra:   " << to_string(v.algebra) << "\n"
      << "verdict:   " << to_string(v.outcome) << "\n";
    if (v.tag != CaseTag::None) o << "case:      (" << to_string(v.tag) << ")\n";
    o << "condition: " << v.condition << "\n";
    if (!v.subalgebra.empty()) o << "m:         " << v.subalgebra << "\n";
    for (const Subspace& s : v.invariants) o << "invariant: " << s.str() << "\n";
    if (v.witness) {
        o << "witness:   " << v.witness->description << "\n";
        if (v.witness->subspace) o << "           subspace " << v.witness->subspace->str() << "\n";
        if (v.witness->vector) o << "           vector " << to_string(*v.witness->vector) << "\n";
    }
}

void human(std::ostream& o, const MaximalReport& r) {
    o << "input:     " << (r.subspace ? r.subspace->str() : r.input) << "\n";
    verdict_lines(o, r.verdict);
    if (r.compared) {
        o << "compared with:\n";
        verdict_lines(o, *r.compared);
    }
    if (r.uniqueness) {
        o << "uniqueness: " << (r.uniqueness->same_invariant ? "same invariant, same subalgebra" : "different invariants");
        if (r.uniqueness->separating) o << "; separating vector " << to_string(*r.uniqueness->separating);
        o << "\n";
    }
}

void human(std::ostream& o, const OracleReport& r) {
    o << "algebra: " << r.algebra.name() << "  weight: " << r.weight.str() << "\n"
      << "weights (" << r.weights.size() << " distinct, total " << r.total << ", Weyl symmetric: " << (r.weyl_symmetric ? "yes" : "no")
      << "):\n";
    for (const auto& [mu, m] : r.weights) o << "  " << labels_str(mu) << "  x" << m << "\n";
    o << "trace index: " << to_string(r.trace_index) << "\n";
    if (r.tensor) o << r.weight.str() << " (x) " << r.tensor_with->str() << " = " << decomposition_str(*r.tensor) << "\n";
}

void human(std::ostream& o, const SampleReport& r) {
    o << "seed " << r.seed << ", max dimension " << r.max_dimension << ", " << r.rows.size() << " samples\n";
    for (const SampleRow& s : r.rows)
        o << "  " << s.algebra.name() << " " << s.weight.str() << "  dim " << to_string(s.dimension) << "  index "
          << to_string(s.formula_index) << "  trace " << to_string(s.trace_index)
          << (s.formula_index == s.trace_index ? "" : "  MISMATCH") << "\n";
    o << (r.all_agree ? "all samples agree\n" : "disagreement found\n");
}

}  // namespace

std::string render_human(const Report& r) {
    std::ostringstream o;
    std::visit([&](const auto& x) { human(o, x); }, r);
    return o.str();
}

}  // namespace lielimits::report
