#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "uniserial/iso.hpp"
#include "uniserial/presentation_io.hpp"
#include "uniserial/realize.hpp"

using namespace uniserial;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Presentation load(const std::string& file) {
    ParsedPresentation parsed = parse_presentation(read_file(file));
    for (const std::string& note : parsed.notes) std::cerr << "note: " << note << "\n";
    return parsed.presentation;
}

Path load_path(const Presentation& pres, const std::string& text) {
    return parse_path(pres.quiver, text);
}

std::vector<int> parse_vertex_list(const Quiver& q, const std::string& text) {
    std::vector<int> vs;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty vertex in list '" + text + "'");
        std::string name = tok.substr(a, b - a + 1);
        int v = q.vertex_index(name);
        if (v < 0) throw ParseError("unknown vertex '" + name + "'");
        vs.push_back(v);
    }
    if (vs.empty()) throw ParseError("empty vertex list");
    return vs;
}

void print_ideal(const IdealBasis& ideal) {
    if (ideal.polys.empty()) {
        std::cout << "0\n";
        return;
    }
    for (const Polynomial& p : ideal.polys) std::cout << p.str(ideal.order) << "\n";
}

int cmd_detours(const std::string& file, const std::string& path, bool json) {
    Presentation pres = load(file);
    DetourTable table = enumerate_detours(pres, load_path(pres, path));
    if (json) {
        std::cout << table.json(pres.quiver) << "\n";
    } else {
        std::cout << "variables: " << table.nvars << "\n";
        std::cout << table.variable_table(pres.quiver);
    }
    return 0;
}

int cmd_route(const std::string& file, const std::string& mast_text, const std::string& q_text) {
    Presentation pres = load(file);
    Mast mast = make_mast(pres.quiver, load_path(pres, mast_text));
    bool verdict = is_route(pres.quiver, mast, load_path(pres, q_text));
    std::cout << (verdict ? "route" : "not a route") << "\n";
    return verdict ? 0 : 1;
}

int cmd_variety(const std::string& file, const std::string& path, bool groebner, bool json,
                bool parallel) {
    Presentation pres = load(file);
    VarietyResult v = variety_generators(pres, load_path(pres, path), parallel);
    IdealBasis ideal = groebner ? groebner_basis(v.ideal) : v.ideal;
    if (json) {
        nlohmann::json root = nlohmann::json::parse(v.table.json(pres.quiver));
        nlohmann::json gens = nlohmann::json::array();
        for (const Polynomial& p : ideal.polys) gens.push_back(p.str(ideal.order));
        root["generators"] = gens;
        root["groebner"] = groebner;
        std::cout << root.dump(2) << "\n";
    } else {
        std::cout << "variables: " << v.table.nvars << "\n";
        std::cout << v.table.variable_table(pres.quiver);
        std::cout << (groebner ? "groebner basis:\n" : "generators:\n");
        print_ideal(ideal);
    }
    return 0;
}

int cmd_nonempty(const std::string& file, const std::string& path) {
    Presentation pres = load(file);
    bool verdict = is_nonempty_variety(pres, load_path(pres, path));
    std::cout << (verdict ? "nonempty" : "empty") << "\n";
    return verdict ? 0 : 1;
}

int cmd_module(const std::string& file, const std::string& path, const std::string& point,
               const std::string& graph, const std::string& top) {
    Presentation pres = load(file);
    VarietyResult v = variety_generators(pres, load_path(pres, path));
    Vector k = parse_point(pres.field, point, v.table.nvars);
    UniserialModule m = build_module(pres, v, k);
    if (!graph.empty()) {
        LayeredGraph g = top.empty()
                             ? layered_graph(m)
                             : layered_graph(m, parse_point(pres.field, top, m.dimension()));
        std::cout << (graph == "dot" ? graph_dot(g, pres.quiver) : graph_text(g, pres.quiver));
        return 0;
    }
    std::cout << "dimension: " << m.dimension() << "\n";
    for (size_t a = 0; a < pres.quiver.arrow_count(); ++a) {
        std::cout << pres.quiver.arrow(a).name << ":\n";
        for (const Vector& row : m.action[a]) {
            std::cout << " ";
            for (const FieldElement& e : row) std::cout << " " << e.str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_isosys(const std::string& file, const std::string& path) {
    Presentation pres = load(file);
    IsoSystem sys = iso_system(pres, load_path(pres, path));
    std::cout << "cyclic prefixes: " << sys.cyclic_lens.size() << "\n";
    std::cout << sys.str();
    return 0;
}

int cmd_iso(const std::string& file, const std::string& path, const std::string& a,
            const std::string& b) {
    Presentation pres = load(file);
    Path p = load_path(pres, path);
    VarietyResult v = variety_generators(pres, p);
    IsoSystem sys = iso_system(pres, p);
    Vector ka = parse_point(pres.field, a, v.table.nvars);
    Vector kb = parse_point(pres.field, b, v.table.nvars);
    IsoResult r = decide_iso(pres, v, sys, ka, kb);
    if (r.isomorphic) {
        std::cout << "isomorphic\nwitness: " << point_str(r.witness) << "\n";
        return 0;
    }
    std::cout << "not isomorphic\n";
    return 1;
}

int cmd_transport(const std::string& file, const std::string& p_text, const std::string& q_text,
                  const std::string& point) {
    Presentation pres = load(file);
    Path p = load_path(pres, p_text);
    Path q = load_path(pres, q_text);
    VarietyResult v = variety_generators(pres, p);
    Vector k = parse_point(pres.field, point, v.table.nvars);
    auto out = transport_mast(pres, p, q, k);
    if (!out) {
        std::cout << "not in overlap\n";
        return 1;
    }
    std::cout << point_str(*out) << "\n";
    return 0;
}

int cmd_masts(const std::string& file, const std::string& vertices, bool variety_all) {
    Presentation pres = load(file);
    std::vector<Path> masts = enumerate_masts(pres.quiver, parse_vertex_list(pres.quiver, vertices));
    for (const Path& p : masts) {
        std::cout << path_str(pres.quiver, p) << "\n";
        if (variety_all) {
            VarietyResult v = variety_generators(pres, p, true);
            std::cout << "  variables: " << v.table.nvars << "\n";
            if (v.ideal.polys.empty()) std::cout << "  0\n";
            for (const Polynomial& g : v.ideal.polys)
                std::cout << "  " << g.str(v.ideal.order) << "\n";
        }
    }
    return 0;
}

int cmd_realize(const std::string& file, unsigned long characteristic, unsigned nvars,
                const std::string& out_file, bool json) {
    RealizationInput input;
    input.field = Field(characteristic);
    std::istringstream in(read_file(file));
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    }
    unsigned maxvar = nvars;
    if (maxvar == 0) {
        // infer the ambient variable count from the highest index used
        for (const std::string& s : lines)
            for (size_t i = 0; i + 2 < s.size(); ++i)
                if (s[i] == 'X' && s[i + 1] == '[') {
                    unsigned idx = static_cast<unsigned>(std::strtoul(s.c_str() + i + 2, nullptr, 10));
                    maxvar = std::max(maxvar, idx);
                }
        if (maxvar == 0) maxvar = 1;
    }
    input.nvars = maxvar;
    for (const std::string& s : lines)
        input.polys.push_back(parse_polynomial(s, input.field, input.nvars));

    Realization r = realize_variety(input);
    std::string dsl = print_presentation(r.presentation);
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        out << dsl;
    } else {
        std::cout << dsl;
    }
    std::cout << "mast: " << path_str(r.presentation.quiver, r.mast) << "\n";
    if (json) std::cout << realization_json(r) << "\n";
    bool ok = verify_realization(r);
    std::cout << "verification: " << (ok ? "passed" : "FAILED") << "\n";
    return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniserial-variety toolkit for quiver algebras"};
    app.require_subcommand(1);

    std::string file, path, second, point_a, point_b, graph, top, vertices, out_file;
    bool json = false, groebner = false, parallel = false, variety_all = false;
    unsigned long characteristic = 0;
    unsigned nvars = 0;

    auto* detours = app.add_subcommand("detours", "variable table of a mast");
    detours->add_option("file", file)->required();
    detours->add_option("-p,--path", path, "mast path literal")->required();
    detours->add_flag("--json", json);

    auto* route = app.add_subcommand("route", "route verdict (exit 0 route / 1 not)");
    route->add_option("file", file)->required();
    route->add_option("-p,--path", path, "mast path literal")->required();
    route->add_option("-q,--query", second, "path to test")->required();

    auto* variety = app.add_subcommand("variety", "defining ideal of the uniserial variety");
    variety->add_option("file", file)->required();
    variety->add_option("-p,--path", path)->required();
    variety->add_flag("--groebner", groebner, "print the reduced basis");
    variety->add_flag("--json", json);
    variety->add_flag("--parallel", parallel);

    auto* nonempty = app.add_subcommand("nonempty", "exit 0 nonempty / 1 empty");
    nonempty->add_option("file", file)->required();
    nonempty->add_option("-p,--path", path)->required();

    auto* module_cmd = app.add_subcommand("module", "arrow-action matrices at a point");
    module_cmd->add_option("file", file)->required();
    module_cmd->add_option("-p,--path", path)->required();
    module_cmd->add_option("-k,--point", point_a)->required();
    module_cmd->add_option("--graph", graph, "emit the layered graph: dot|text")
        ->check(CLI::IsMember({"dot", "text"}));
    module_cmd->add_option("--top", top, "alternative top element (coefficients over b0..bl)");

    auto* isosys = app.add_subcommand("isosys", "the isomorphism system of a mast");
    isosys->add_option("file", file)->required();
    isosys->add_option("-p,--path", path)->required();

    auto* iso = app.add_subcommand("iso", "decide isomorphism (exit 0 yes / 1 no)");
    iso->add_option("file", file)->required();
    iso->add_option("-p,--path", path)->required();
    iso->add_option("--point-a", point_a)->required();
    iso->add_option("--point-b", point_b)->required();

    auto* transport = app.add_subcommand("transport", "move a point to another mast");
    transport->add_option("file", file)->required();
    transport->add_option("-p,--path", path, "source mast")->required();
    transport->add_option("-q,--target", second, "target mast")->required();
    transport->add_option("-k,--point", point_a)->required();

    auto* masts = app.add_subcommand("masts", "paths through a vertex sequence");
    masts->add_option("file", file)->required();
    masts->add_option("-e,--vertices", vertices, "comma-separated vertex list")->required();
    masts->add_flag("--variety-all", variety_all, "also print each mast's ideal");

    auto* realize = app.add_subcommand("realize", "present a polynomial system as a uniserial variety");
    realize->add_option("file", file, "one polynomial per line")->required();
    realize->add_option("--char", characteristic, "field characteristic (0 = rationals)");
    realize->add_option("-m,--vars", nvars, "ambient variable count (default: inferred)");
    realize->add_option("-o,--output", out_file, "write the presentation to a file");
    realize->add_flag("--json", json, "emit the variable-correspondence table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (*detours) return cmd_detours(file, path, json);
        if (*route) return cmd_route(file, path, second);
        if (*variety) return cmd_variety(file, path, groebner, json, parallel);
        if (*nonempty) return cmd_nonempty(file, path);
        if (*module_cmd) return cmd_module(file, path, point_a, graph, top);
        if (*isosys) return cmd_isosys(file, path);
        if (*iso) return cmd_iso(file, path, point_a, point_b);
        if (*transport) return cmd_transport(file, path, second, point_a);
        if (*masts) return cmd_masts(file, vertices, variety_all);
        if (*realize) return cmd_realize(file, characteristic, nvars, out_file, json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
