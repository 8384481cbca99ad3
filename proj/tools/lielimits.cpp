// Command-line front end. Exit codes: 0 success, 1 domain error, 2 parse
// error, 3 the prefix is too short to decide.

#include "lielimits/commands.hpp"
#include "lielimits/error.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace lielimits;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<int> parse_subset(const std::string& s) {
    std::vector<int> ids;
    for (const std::string& t : split(s, ',')) {
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (const std::exception&) {
            throw ParseError("--subset: '" + t + "' is not a constituent number");
        }
        if (v < 1) throw ParseError("--subset: constituent numbers start at 1");
        ids.push_back(v - 1);
    }
    return ids;
}

SystemSpec load_system(const std::string& path, std::optional<int> levels) {
    return commands::truncate_levels(io::system_from_json(io::read_json_file(path), path), levels);
}

Subspace load_subspace(const std::string& path) { return io::subspace_value_from_json(io::read_json_file(path), path); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Index calculus, Bratteli analysis and maximal subalgebras for classical direct-limit Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "human";
    std::uint64_t seed = 0;
    std::optional<int> levels;
    std::int64_t bound = oracle::kDefaultBound;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "json"}));
    app.add_option("--seed", seed, "seed for randomized commands");

    auto* index = app.add_subcommand("index", "index and dimension of an irreducible module, or of an embedding");
    std::string alg_text, weight_text, embedding_path;
    index->add_option("algebra", alg_text, "e.g. A2");
    index->add_option("weight", weight_text, "Dynkin labels, e.g. 1,1");
    index->add_option("--embedding", embedding_path, "lielimits-embedding/1 file");

    auto* embed = app.add_subcommand("embed", "index and class of an embedding, or both sides of a composed chain");
    std::string embed_path;
    embed->add_option("file", embed_path, "lielimits-embedding/1 or lielimits-chain/1 file")->required();
    embed->add_option("--bound", bound, "dimension bound for oracle decompositions");

    std::string system_path;
    auto add_system = [&](CLI::App* c) {
        c->add_option("system", system_path, "lielimits-system/1 file")->required();
        c->add_option("--levels", levels, "use only the first N levels");
    };
    auto* limit = app.add_subcommand("limit", "labels, stabilization and constituents of a finite prefix");
    add_system(limit);
    auto* refine = app.add_subcommand("refine", "standard refinement of the exhaustion of one constituent");
    add_system(refine);
    std::optional<int> constituent;
    refine->add_option("--constituent", constituent, "constituent number (1-based)");
    auto* socle = app.add_subcommand("socle", "natural and conatural modules over the subalgebra");
    add_system(socle);
    auto* invariants = app.add_subcommand("invariants", "standard invariants per subset of infinite constituents");
    add_system(invariants);
    std::vector<std::string> subsets;
    invariants->add_option("--subset", subsets, "comma-separated constituent numbers; repeatable");

    auto* maximal = app.add_subcommand("maximal", "maximality of a stabilizer subalgebra");
    std::string kind_text, subspace_path, compare_path, form_text;
    bool derived = false;
    maximal->add_option("kind", kind_text, "gl, sl, so or sp")->required();
    maximal->add_option("subspace", subspace_path, "lielimits-subspace/1 file");
    maximal->add_flag("--derived", derived, "m = [g,g]");
    maximal->add_option("--form", form_text, "m = so(V) or sp(V): symmetric or symplectic")
        ->check(CLI::IsMember({"symmetric", "symplectic"}));
    maximal->add_option("--compare", compare_path, "second subspace for a uniqueness check");

    auto* oracle_cmd = app.add_subcommand("oracle", "weight multiplicities, trace index and tensor products");
    std::string oracle_alg, oracle_weight, tensor_text;
    int sample = 0;
    std::int64_t max_dim = 500;
    oracle_cmd->add_option("algebra", oracle_alg, "algebra, or a comma-separated list with --sample")->required();
    oracle_cmd->add_option("weight", oracle_weight, "Dynkin labels");
    oracle_cmd->add_option("--tensor", tensor_text, "second weight for a tensor product");
    oracle_cmd->add_option("--bound", bound, "dimension bound");
    oracle_cmd->add_option("--sample", sample, "compare the index formula with the trace on N random weights");
    oracle_cmd->add_option("--max-dim", max_dim, "dimension bound for sampled weights");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::optional<report::Report> out;
        int rc = 0;
        if (*index) {
            if (!embedding_path.empty()) {
                out = commands::embed_report(io::embedding_from_json(io::read_json_file(embedding_path), embedding_path));
            } else {
                if (alg_text.empty() || weight_text.empty()) throw ParseError("index: give ALGEBRA WEIGHT or --embedding FILE");
                const SimpleAlgebra alg = SimpleAlgebra::parse(alg_text);
                out = commands::index_report(alg, DominantWeight::parse(alg, weight_text));
            }
        } else if (*embed) {
            const io::Json j = io::read_json_file(embed_path);
            if (io::format_of(j, embed_path) == io::kChainFormat)
                out = commands::compose_report(io::chain_from_json(j, embed_path), bound);
            else
                out = commands::embed_report(io::embedding_from_json(j, embed_path));
        } else if (*limit) {
            const report::LimitReport r = commands::limit_report(load_system(system_path, levels));
            if (!r.stabilized) rc = 3;
            out = r;
        } else if (*refine) {
            std::optional<int> id;
            if (constituent) {
                if (*constituent < 1) throw ParseError("--constituent numbers start at 1");
                id = *constituent - 1;
            }
            out = commands::refine_report(load_system(system_path, levels), id);
        } else if (*socle) {
            out = commands::socle_report(load_system(system_path, levels));
        } else if (*invariants) {
            std::vector<std::vector<int>> js;
            for (const std::string& s : subsets) js.push_back(parse_subset(s));
            out = commands::invariants_report(load_system(system_path, levels), js);
        } else if (*maximal) {
            const AlgebraKind g = parse_algebra_kind(kind_text);
            const int given = static_cast<int>(!subspace_path.empty()) + static_cast<int>(derived) + static_cast<int>(!form_text.empty());
            if (given != 1) throw ParseError("maximal: give exactly one of SUBSPACE, --derived, --form");
            MaximalInput input = derived ? MaximalInput(DerivedToken{})
                                 : !form_text.empty()
                                     ? MaximalInput(FormToken{form_text == "symplectic" ? Pairing::Symplectic : Pairing::Symmetric})
                                     : MaximalInput(load_subspace(subspace_path));
            std::optional<MaximalInput> cmp;
            if (!compare_path.empty()) cmp = MaximalInput(load_subspace(compare_path));
            out = commands::maximal_report(g, input, cmp);
        } else if (*oracle_cmd) {
            if (sample > 0) {
                std::vector<SimpleAlgebra> algs;
                for (const std::string& a : split(oracle_alg, ',')) algs.push_back(SimpleAlgebra::parse(a));
                out = commands::sample_report(algs, sample, seed, max_dim);
            } else {
                if (oracle_weight.empty()) throw ParseError("oracle: give a weight or --sample N");
                const SimpleAlgebra alg = SimpleAlgebra::parse(oracle_alg);
                std::optional<DominantWeight> t;
                if (!tensor_text.empty()) t = DominantWeight::parse(alg, tensor_text);
                out = commands::oracle_report(alg, DominantWeight::parse(alg, oracle_weight), t, bound);
            }
        }
        std::cout << (format == "json" ? report::render_json(*out) : report::render_human(*out));
        if (rc == 3) std::cerr << "prefix too short: some origins have not stabilized\n";
        return rc;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    }
}
