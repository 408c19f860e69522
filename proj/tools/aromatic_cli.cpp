#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aromatic/json_io.hpp"
#include "aromatic/prelie.hpp"

using namespace aromatic;

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

std::vector<Rat> parse_point(const std::string& s) {
    std::vector<Rat> x;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) x.push_back(rat_from_string(tok));
    return x;
}

IntegratorSpec method_from_flags(const std::string& name, const std::string& tableau_path) {
    if (!tableau_path.empty()) {
        ButcherTableau t = tableau_from_json(load_json(tableau_path));
        return IntegratorSpec::rk(std::move(t));
    }
    return IntegratorSpec::by_name(name);
}

int enumerate_command(const std::string& kind, int order) {
    std::vector<AromaticGraph> gs;
    if (kind == "trees")
        gs = enumerate_trees(order);
    else if (kind == "molecules")
        gs = enumerate_molecules(order);
    else
        gs = enumerate_aromatic_trees(order);
    std::cout << kind << " of order " << order << ": " << gs.size() << "\n";
    for (auto& g : gs)
        std::cout << "  " << encode_targets(g) << "  sigma=" << symmetry(g) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Butcher/aromatic series engine and integrator classifier"};
    app.require_subcommand(1);

    int order = 1;
    std::string graph_text, field_path, tableau_path, method_name, affine_path,
        at_point, left_text, right_text;
    std::uint64_t seed = kDefaultSeed;

    auto* trees = app.add_subcommand("trees", "enumerate rooted trees");
    trees->add_option("--order", order, "number of vertices")->required();

    auto* molecules = app.add_subcommand("molecules", "enumerate aromatic molecules");
    molecules->add_option("--order", order)->required();

    auto* aromatic_cmd = app.add_subcommand("aromatic", "enumerate aromatic trees");
    aromatic_cmd->add_option("--order", order)->required();

    auto* eldiff_cmd = app.add_subcommand("eldiff", "elementary differential of a graph");
    eldiff_cmd->add_option("--graph", graph_text, "targets encoding, e.g. [0,1,1]")
        ->required();
    eldiff_cmd->add_option("--field", field_path, "field JSON file")->required();
    eldiff_cmd->add_option("--at", at_point, "evaluation point p/q,p/q,...");

    auto* graft_cmd = app.add_subcommand("graft", "free pre-Lie product of two trees");
    graft_cmd->add_option("--left", left_text)->required();
    graft_cmd->add_option("--right", right_text)->required();

    auto* expand_cmd = app.add_subcommand("expand", "h-jet expansion of a method");
    expand_cmd->add_option("--method", method_name);
    expand_cmd->add_option("--tableau", tableau_path, "custom RK tableau JSON");
    expand_cmd->add_option("--field", field_path)->required();
    expand_cmd->add_option("--order", order)->required();

    auto* weights_cmd = app.add_subcommand("weights", "elementary weights of a tableau");
    weights_cmd->add_option("--tableau", tableau_path)->required();
    weights_cmd->add_option("--order", order)->required();

    auto* classify_cmd = app.add_subcommand("classify", "classify an integrator");
    classify_cmd->add_option("--method", method_name);
    classify_cmd->add_option("--tableau", tableau_path);
    classify_cmd->add_option("--order", order)->required();
    classify_cmd->add_option("--seed", seed, "probe seed (fixed default)");

    auto* probe_cmd = app.add_subcommand("probe", "equivariance probe for related fields");
    probe_cmd->add_option("--method", method_name);
    probe_cmd->add_option("--tableau", tableau_path);
    std::vector<std::string> fields_paths;
    probe_cmd->add_option("--affine", affine_path)->required();
    probe_cmd->add_option("--fields", fields_paths, "source and target field JSON files")
        ->expected(2)
        ->required();
    probe_cmd->add_option("--order", order)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (trees->parsed()) return enumerate_command("trees", order);
        if (molecules->parsed()) return enumerate_command("molecules", order);
        if (aromatic_cmd->parsed()) return enumerate_command("aromatic", order);

        if (eldiff_cmd->parsed()) {
            AromaticGraph g = parse_graph(graph_text);
            PolyVectorField f = field_from_json(load_json(field_path));
            EldiffResult r = eldiff_hom(g, f);
            if (!at_point.empty()) {
                std::vector<Rat> x = parse_point(at_point);
                if (r.root_count == 0) {
                    std::cout << rat_to_string(r.scalar.eval(x)) << "\n";
                } else if (r.root_count == 1) {
                    json out = json::array();
                    for (auto& v : r.vec.eval(x)) out.push_back(rat_to_string(v));
                    std::cout << out.dump() << "\n";
                } else {
                    throw std::invalid_argument("--at supports graphs with <= 1 root");
                }
            } else if (r.root_count == 0) {
                std::cout << r.scalar.str() << "\n";
            } else if (r.root_count == 1) {
                std::cout << field_to_json(r.vec).dump(2) << "\n";
            } else {
                throw std::invalid_argument("printing supports graphs with <= 1 root");
            }
            return 0;
        }

        if (graft_cmd->parsed()) {
            TreeSeries s = graft(parse_graph(left_text), parse_graph(right_text));
            std::cout << series_to_json(s).dump(2) << "\n";
            return 0;
        }

        if (expand_cmd->parsed()) {
            IntegratorSpec m = method_from_flags(method_name, tableau_path);
            PolyVectorField f = field_from_json(load_json(field_path));
            JetExpansion j = expand(m, f, order);
            json out = json::array();
            for (int k = 1; k <= j.order(); ++k) out.push_back(field_to_json(j.term(k)));
            std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (weights_cmd->parsed()) {
            ButcherTableau t = tableau_from_json(load_json(tableau_path));
            for (int k = 1; k <= order; ++k)
                for (auto& tree : enumerate_trees(k)) {
                    std::cout << encode_targets(tree) << "  "
                              << rat_to_string(elementary_weights(t, tree)) << "\n";
                }
            return 0;
        }

        if (classify_cmd->parsed()) {
            IntegratorSpec m = method_from_flags(method_name, tableau_path);
            ClassificationVerdict v = classify_integrator(m, order, seed);
            std::cout << verdict_to_json(v).dump(2) << "\n";
            return v.overall() == OrderStatus::b_series ? 0 : 1;
        }

        if (probe_cmd->parsed()) {
            IntegratorSpec m = method_from_flags(method_name, tableau_path);
            AffineMap a = affine_from_json(load_json(affine_path));
            PolyVectorField f = field_from_json(load_json(fields_paths[0]));
            PolyVectorField g = field_from_json(load_json(fields_paths[1]));
            EquivarianceOutcome o = equivariance_probe(m, a, f, g, order);
            if (o.pass) {
                std::cout << "pass\n";
                return 0;
            }
            std::cout << "witness at order " << o.order << ": " << o.residual << "\n";
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
