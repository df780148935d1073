#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace acgw;
using namespace acgw::cli;

namespace {

std::string read_input(const std::string& path) {
    std::stringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology, snake and long exact sequences for chain complexes of finite sets and vector spaces"};
    app.require_subcommand(1);
    std::string output = "text";
    app.add_option("--output", output, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string file;
    auto with_file = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Document to read ('-' for stdin)")->required();
        return sub;
    };
    auto* validate = with_file("validate", "Check every complex, morphism and diagram");
    auto* homology = with_file("homology", "Homology at every degree");
    auto* exact = with_file("exact", "Report whether each complex is exact");
    auto* snake = with_file("snake", "Zigzag of a weak or strong snake diagram");
    auto* les = with_file("les", "Long exact sequence of a short exact sequence of complexes");
    auto* maph = with_file("map-homology", "Induced maps on homology and the quasi-isomorphism verdict");
    auto* oracle = with_file("oracle", "Compare with rank homology over F_2");
    auto* render = with_file("render", "Graph description of complexes and zigzags");
    std::string format = "dot", name;
    render->add_option("--format", format, "Output language")->check(CLI::IsMember({"dot"}));
    render->add_option("--name", name, "Only render this complex, snake or ses");

    GenRequest req;
    auto* gen = app.add_subcommand("gen", "Print a random document");
    gen->add_option("--kind", req.kind, "complex, map, ses or snake")
        ->check(CLI::IsMember({"complex", "map", "ses", "snake"}));
    gen->add_option("--seed", req.seed, "Random seed");
    gen->add_option("--size", req.size, "Maximum object size")->check(CLI::PositiveNumber);
    gen->add_flag("--strong", req.strong, "Strong snake diagram (with --kind snake)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kOk : kUsage;
    }

    try {
        Output out;
        if (gen->parsed()) {
            out = cmd_gen(req);
        } else {
            const auto doc = parse_document(read_input(file));
            if (validate->parsed()) out = cmd_validate(doc);
            else if (homology->parsed()) out = cmd_homology(doc);
            else if (exact->parsed()) out = cmd_exact(doc);
            else if (snake->parsed()) out = cmd_snake(doc);
            else if (les->parsed()) out = cmd_les(doc);
            else if (maph->parsed()) out = cmd_map_homology(doc);
            else if (oracle->parsed()) out = cmd_oracle(doc);
            else if (render->parsed()) out = cmd_render(doc, format, name);
        }
        if (output == "json") {
            out.json["exit_code"] = out.code;
            std::cout << out.json.dump(2) << '\n';
        } else {
            std::cout << out.text;
        }
        return out.code;
    } catch (const ParseError& e) {
        std::cerr << (file.empty() ? "<input>" : file) << ':' << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kSemantic;
    }
}
