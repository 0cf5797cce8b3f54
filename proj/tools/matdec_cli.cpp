#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "matdec/automata.hpp"
#include "matdec/decomp.hpp"
#include "matdec/errors.hpp"
#include "matdec/latticeparse.hpp"
#include "matdec/pigeonhole.hpp"
#include "matdec/suites.hpp"

namespace {

matdec::Instance load_instance(const std::string& path) {
    std::ostringstream text;
    if (path == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
        text << in.rdbuf();
    }
    return matdec::parse_instance(text.str());
}

matdec::subset_t mask_from_ids(const matdec::GroundSet& g, const std::vector<int>& ids) {
    return g.mask_of(ids);
}

void note_degenerate_width(const matdec::MatroidOracle& M) {
    if (M.ground.size() <= 2)
        std::cout << "note: ground sets with at most 2 elements have no cubic tree; the value "
                     "follows the degenerate-tree convention\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"matroid decomposition toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --seed and friends may follow the subcommand name

    uint64_t seed = 1;
    int max_elements = 0;
    std::string format = "text";
    app.add_option("--seed", seed, "seed for every randomized command");
    app.add_option("--max-elements", max_elements,
                   "size cap handed to instance generators (0 = per-kind default)");
    app.add_option("--format", format, "report format for suite output")
        ->check(CLI::IsMember({"csv", "text"}));

    // oracle <file> [ids...]
    auto* oracle_cmd = app.add_subcommand("oracle", "independence of one subset");
    std::string oracle_file;
    std::vector<int> oracle_ids;
    oracle_cmd->add_option("file", oracle_file, "instance file ('-' for stdin)")->required();
    oracle_cmd->add_option("ids", oracle_ids, "element ids of the queried subset");

    // classes <file> --u ids --relation sim|refine
    auto* classes_cmd = app.add_subcommand("classes", "class count over one side of a separation");
    std::string classes_file, relation = "sim";
    std::vector<int> classes_u;
    classes_cmd->add_option("file", classes_file, "instance file ('-' for stdin)")->required();
    classes_cmd->add_option("--u", classes_u, "element ids of the side U")->required();
    classes_cmd->add_option("--relation", relation, "sim (independence classes) or refine")
        ->check(CLI::IsMember({"sim", "refine"}));

    // width <file> --which bw|dw
    auto* width_cmd = app.add_subcommand("width", "exact branch or decomposition width");
    std::string width_file, which = "bw";
    width_cmd->add_option("file", width_file, "instance file ('-' for stdin)")->required();
    width_cmd->add_option("--which", which, "bw (connectivity) or dw (class counts)")
        ->check(CLI::IsMember({"bw", "dw"}));

    // parse-tree <file> --lambda N
    auto* parse_cmd = app.add_subcommand("parse-tree", "caterpillar parse tree and automaton of a "
                                                       "lattice path instance");
    std::string parse_file;
    int parse_lambda = 0;
    parse_cmd->add_option("file", parse_file, "lattice path instance file")->required();
    parse_cmd->add_option("--lambda", parse_lambda,
                          "width budget; 0 derives the least feasible value");

    // gen <kind>
    auto* gen_cmd = app.add_subcommand("gen", "write one seeded random instance to stdout");
    std::string gen_kind;
    gen_cmd->add_option("kind", gen_kind, "one of the generator kinds")
        ->required()
        ->check(CLI::IsMember(matdec::generator_kinds()));

    // suite <name|all>
    auto* suite_cmd = app.add_subcommand("suite", "run a named experiment suite");
    std::string suite_name;
    {
        auto names = matdec::suite_names();
        names.push_back("all");
        suite_cmd->add_option("name", suite_name, "suite name or 'all'")
            ->required()
            ->check(CLI::IsMember(names));
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (*oracle_cmd) {
            matdec::Instance inst = load_instance(oracle_file);
            matdec::MatroidOracle M = matdec::to_oracle(inst);
            matdec::subset_t X = mask_from_ids(M.ground, oracle_ids);
            std::cout << (M.indep(X) ? "independent" : "dependent") << "\n";
            return 0;
        }
        if (*classes_cmd) {
            matdec::Instance inst = load_instance(classes_file);
            matdec::MatroidOracle M = matdec::to_oracle(inst);
            matdec::subset_t U = mask_from_ids(M.ground, classes_u);
            int n;
            if (relation == "sim") {
                n = matdec::count_sim_classes(M, U);
            } else {
                auto key = matdec::refinement_key(inst, M, U);
                n = matdec::class_count_keys(U, key);
            }
            std::cout << "classes=" << n << "\n";
            return 0;
        }
        if (*width_cmd) {
            matdec::Instance inst = load_instance(width_file);
            matdec::MatroidOracle M = matdec::to_oracle(inst);
            int w = which == "bw" ? matdec::branch_width(M) : matdec::decomposition_width(M);
            std::cout << which << "=" << w << "\n";
            note_degenerate_width(M);
            return 0;
        }
        if (*parse_cmd) {
            matdec::Instance inst = load_instance(parse_file);
            const auto* L = std::get_if<matdec::LatticePathPresentation>(&inst);
            if (!L) throw std::domain_error("parse-tree needs a latticepath instance");
            int lambda = parse_lambda;
            if (lambda <= 0) {
                int maxcount = 0;
                for (const auto& sc : matdec::staircases(*L))
                    maxcount = std::max(maxcount, static_cast<int>(sc.vertices.size()));
                lambda = (maxcount + 3) / 3;
            }
            matdec::LatticeParse parse = matdec::lattice_parse(*L, lambda);
            std::cout << "lambda=" << lambda << "\n";
            std::cout << matdec::to_text(parse.tree);
            std::cout << "phi:";
            for (std::size_t i = 0; i < parse.phi.size(); ++i)
                std::cout << " " << i << "->" << parse.phi[i];
            std::cout << "\n" << matdec::to_text(parse.automaton);
            return 0;
        }
        if (*gen_cmd) {
            matdec::Lcg rng(seed);
            matdec::Instance inst = matdec::generate_instance(gen_kind, rng, max_elements);
            std::cout << matdec::write_instance(inst);
            return 0;
        }
        if (*suite_cmd) {
            std::vector<std::string> names =
                suite_name == "all" ? matdec::suite_names() : std::vector<std::string>{suite_name};
            bool all_pass = true;
            for (const auto& name : names) {
                matdec::SuiteResult res = matdec::run_suite(name, seed);
                all_pass = all_pass && res.pass;
                if (format == "csv")
                    std::cout << res.to_csv();
                else
                    std::cout << res.to_text();
            }
            return all_pass ? 0 : 1;
        }
    } catch (const matdec::size_guard_error& e) {
        std::cerr << "size guard: " << e.what() << "\n";
        return 2;
    } catch (const matdec::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
