#include "lielimits/io.hpp"

#include "lielimits/error.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace lielimits::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    return j;
}

std::string at(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

// Domain failures raised while building values keep their exit class but
// gain the field location.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    } catch (const DomainError& e) {
        throw SpecError(where + ": " + e.what());
    }
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& where) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(where, "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(path, "cannot open file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str(), path);
}

std::string format_of(const Json& j, const std::string& where, const std::string& expected) {
    const Json& f = field(j, "format", where);
    if (!f.is_string()) fail(where + ".format", "expected a string");
    const std::string s = f.get<std::string>();
    if (!expected.empty() && s != expected) fail(where + ".format", "expected '" + expected + "', got '" + s + "'");
    return s;
}

Json to_json(const Rational& q) {
    if (is_integer(q) && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
    return Json(to_string(q));
}

Json to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(to_string(z));
}

Rational rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
    if (j.is_string()) return located(where, [&] { return parse_rational(j.get<std::string>()); });
    fail(where, "expected an integer or a \"p/q\" string");
}

Integer integer_from_json(const Json& j, const std::string& where) {
    const Rational q = rational_from_json(j, where);
    if (!is_integer(q)) fail(where, "expected an integer");
    return q.get_num();
}

SimpleAlgebra algebra_from_json(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected an algebra name such as \"A3\"");
    return located(where, [&] { return SimpleAlgebra::parse(j.get<std::string>()); });
}

SemisimpleAlgebra semisimple_from_json(const Json& j, const std::string& where) {
    if (j.is_string()) return SemisimpleAlgebra::simple(algebra_from_json(j, where));
    std::vector<SimpleAlgebra> f;
    const Json& a = array_at(j, where);
    for (std::size_t i = 0; i < a.size(); ++i) f.push_back(algebra_from_json(a[i], at(where, i)));
    if (f.empty()) fail(where, "expected at least one simple factor");
    return SemisimpleAlgebra(std::move(f));
}

Json to_json(const SemisimpleAlgebra& a) {
    Json out = Json::array();
    for (const SimpleAlgebra& s : a.factors) out.push_back(s.name());
    return out;
}

Labels labels_from_json(const Json& j, const std::string& where) {
    Labels out;
    const Json& a = array_at(j, where);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_number_integer()) fail(at(where, i), "expected an integer label");
        const auto v = a[i].get<std::int64_t>();
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail(at(where, i), "label out of range");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

ModuleDecomposition decomposition_from_json(const Json& j, const SemisimpleAlgebra& alg, const std::string& where) {
    ModuleDecomposition d;
    d.algebra = alg;
    const Json& a = array_at(j, where);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string w = at(where, i);
        const Json& ws = array_at(field(a[i], "weights", w), w + ".weights");
        if (ws.size() != alg.size())
            fail(w + ".weights", "expected " + std::to_string(alg.size()) + " weights (one per factor of " + alg.name() +
                                     "), got " + std::to_string(ws.size()));
        Summand s;
        for (std::size_t f = 0; f < ws.size(); ++f) {
            const std::string wf = at(w + ".weights", f);
            Labels l = labels_from_json(ws[f], wf);
            s.weights.push_back(located(wf, [&] { return DominantWeight(alg.factors[f], std::move(l)); }));
        }
        if (a[i].contains("mult")) {
            const Json& m = a[i]["mult"];
            if (!m.is_number_integer()) fail(w + ".mult", "expected an integer");
            s.multiplicity = m.get<std::int64_t>();
        }
        d.summands.push_back(std::move(s));
    }
    located(where, [&] {
        d.validate();
        return 0;
    });
    return d;
}

Json summands_to_json(const ModuleDecomposition& d) {
    Json out = Json::array();
    for (const Summand& s : d.summands) {
        Json ws = Json::array();
        for (const DominantWeight& w : s.weights) ws.push_back(w.labels());
        out.push_back({{"weights", ws}, {"mult", s.multiplicity}});
    }
    return out;
}

SystemSpec system_from_json(const Json& j, const std::string& where) {
    format_of(j, where, kSystemFormat);
    SystemSpec spec;
    const Json& levels = array_at(field(j, "levels", where), where + ".levels");
    if (levels.empty()) fail(where + ".levels", "expected at least one level");
    for (std::size_t n = 0; n < levels.size(); ++n) {
        const std::string w = at(where + ".levels", n);
        SemisimpleAlgebra comps = semisimple_from_json(field(levels[n], "components", w), w + ".components");
        SimpleAlgebra ambient = algebra_from_json(field(levels[n], "ambient", w), w + ".ambient");
        ModuleDecomposition br =
            decomposition_from_json(field(levels[n], "ambient_branching", w), comps, w + ".ambient_branching");
        LevelSpec lv{std::move(comps), ambient, std::move(br), std::nullopt};
        if (levels[n].contains("conatural_branching"))
            lv.conatural_branching =
                decomposition_from_json(levels[n]["conatural_branching"], lv.components, w + ".conatural_branching");
        spec.levels.push_back(std::move(lv));
    }
    const Json& edges = j.contains("edges") ? array_at(j["edges"], where + ".edges") : Json::array();
    if (edges.size() + 1 != levels.size())
        fail(where + ".edges", "expected " + std::to_string(levels.size() - 1) + " edge blocks for " +
                                   std::to_string(levels.size()) + " levels, got " + std::to_string(edges.size()));
    for (std::size_t n = 0; n < edges.size(); ++n) {
        const std::string w = at(where + ".edges", n);
        const Json& br = array_at(field(edges[n], "branchings", w), w + ".branchings");
        if (br.size() != spec.levels[n + 1].components.size())
            fail(w + ".branchings", "expected one branching per component of level " + std::to_string(n + 2) + " (" +
                                        std::to_string(spec.levels[n + 1].components.size()) + "), got " +
                                        std::to_string(br.size()));
        EdgeSpec e;
        for (std::size_t k = 0; k < br.size(); ++k)
            e.branchings.push_back(decomposition_from_json(br[k], spec.levels[n].components, at(w + ".branchings", k)));
        spec.edges.push_back(std::move(e));
    }
    return spec;
}

Json to_json(const SystemSpec& s) {
    Json levels = Json::array();
    for (const LevelSpec& lv : s.levels) {
        Json l = {{"components", to_json(lv.components)},
                  {"ambient", lv.ambient.name()},
                  {"ambient_branching", summands_to_json(lv.ambient_branching)}};
        if (lv.conatural_branching) l["conatural_branching"] = summands_to_json(*lv.conatural_branching);
        levels.push_back(std::move(l));
    }
    Json edges = Json::array();
    for (const EdgeSpec& e : s.edges) {
        Json br = Json::array();
        for (const auto& b : e.branchings) br.push_back(summands_to_json(b));
        edges.push_back({{"branchings", br}});
    }
    return {{"format", kSystemFormat}, {"levels", levels}, {"edges", edges}};
}

namespace {

Embedding embedding_body(const Json& j, const std::string& where) {
    SemisimpleAlgebra src = semisimple_from_json(field(j, "source", where), where + ".source");
    SimpleAlgebra tgt = algebra_from_json(field(j, "target", where), where + ".target");
    ModuleDecomposition br = decomposition_from_json(field(j, "branching", where), src, where + ".branching");
    return located(where, [&] { return Embedding(src, tgt, br); });
}

Json embedding_body(const Embedding& e) {
    return {{"source", to_json(e.source)}, {"target", e.target.name()}, {"branching", summands_to_json(e.branching)}};
}

}  // namespace

Embedding embedding_from_json(const Json& j, const std::string& where) {
    format_of(j, where, kEmbeddingFormat);
    return embedding_body(j, where);
}

Json to_json(const Embedding& e) {
    Json j = embedding_body(e);
    j["format"] = kEmbeddingFormat;
    return j;
}

Chain chain_from_json(const Json& j, const std::string& where) {
    format_of(j, where, kChainFormat);
    const Json& first = array_at(field(j, "first", where), where + ".first");
    std::vector<Embedding> f;
    for (std::size_t i = 0; i < first.size(); ++i) f.push_back(embedding_body(first[i], at(where + ".first", i)));
    if (f.empty()) fail(where + ".first", "expected at least one embedding");
    return Chain{std::move(f), embedding_body(field(j, "second", where), where + ".second")};
}

Json to_json(const Chain& c) {
    Json first = Json::array();
    for (const Embedding& e : c.first) first.push_back(embedding_body(e));
    return {{"format", kChainFormat}, {"first", first}, {"second", embedding_body(c.second)}};
}

namespace {

Space space_from_json(const Json& j, const std::string& where) {
    if (j == "V") return Space::V;
    if (j == "V*") return Space::VStar;
    fail(where, "expected \"V\" or \"V*\"");
}

}  // namespace

SubspaceDescriptor subspace_from_json(const Json& j, const std::string& where) {
    if (j.contains("format")) format_of(j, where, kSubspaceFormat);
    SubspaceDescriptor d;
    d.space = space_from_json(field(j, "space", where), where + ".space");
    if (j.contains("generators")) {
        const Json& g = array_at(j["generators"], where + ".generators");
        for (std::size_t i = 0; i < g.size(); ++i) {
            const std::string w = at(where + ".generators", i);
            if (!g[i].is_object()) fail(w, "expected an object {\"index\": coefficient}");
            FinSuppVec v;
            for (const auto& [key, val] : g[i].items()) {
                int idx = 0;
                try {
                    std::size_t used = 0;
                    idx = std::stoi(key, &used);
                    if (used != key.size()) throw std::invalid_argument(key);
                } catch (const std::exception&) {
                    fail(w, "basis index '" + key + "' is not an integer");
                }
                if (idx < 1) fail(w, "basis index " + key + " is not positive");
                v[idx] = rational_from_json(val, w + "." + key);
            }
            d.generators.push_back(clean(std::move(v)));
        }
    }
    if (j.contains("tail_from") && !j["tail_from"].is_null()) {
        const Json& t = j["tail_from"];
        if (!t.is_number_integer() || t.get<std::int64_t>() < 1) fail(where + ".tail_from", "expected a positive integer");
        d.tail_from = static_cast<int>(t.get<std::int64_t>());
    }
    if (j.contains("kernels")) {
        const Json& k = array_at(j["kernels"], where + ".kernels");
        for (std::size_t i = 0; i < k.size(); ++i) {
            const std::string w = at(where + ".kernels", i);
            EvConstFunctional f;
            if (k[i].contains("head")) {
                const Json& h = array_at(k[i]["head"], w + ".head");
                for (std::size_t c = 0; c < h.size(); ++c) f.head.push_back(rational_from_json(h[c], at(w + ".head", c)));
            }
            f.tail = rational_from_json(field(k[i], "tail", w), w + ".tail");
            d.kernels.push_back(std::move(f));
        }
    }
    return d;
}

Json to_json(const SubspaceDescriptor& d) {
    Json gens = Json::array();
    for (const FinSuppVec& v : d.generators) {
        Json g = Json::object();
        for (const auto& [i, c] : v) g[std::to_string(i)] = to_json(c);
        gens.push_back(std::move(g));
    }
    Json kernels = Json::array();
    for (const EvConstFunctional& f : d.kernels) {
        Json head = Json::array();
        for (const Rational& q : f.head) head.push_back(to_json(q));
        kernels.push_back({{"head", head}, {"tail", to_json(f.tail)}});
    }
    Json j = {{"format", kSubspaceFormat}, {"space", to_string(d.space)}, {"generators", gens}, {"kernels", kernels}};
    j["tail_from"] = d.tail_from ? Json(*d.tail_from) : Json(nullptr);
    return j;
}

Json to_json(const Subspace& s) { return to_json(s.to_descriptor()); }

Subspace subspace_value_from_json(const Json& j, const std::string& where) {
    const SubspaceDescriptor d = subspace_from_json(j, where);
    return located(where, [&] { return Subspace::from_descriptor(d); });
}

}  // namespace lielimits::io
