#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "oneplane/certify.hpp"
#include "oneplane/cliques.hpp"
#include "oneplane/constructions.hpp"
#include "oneplane/drawing.hpp"
#include "oneplane/invariants.hpp"
#include "oneplane/opg.hpp"
#include "oneplane/search.hpp"
#include "oneplane/svg.hpp"

namespace {

using nlohmann::ordered_json;
namespace op = oneplane;

std::string read_input(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) op::fail("SyntaxError", "cannot read " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

int run_validate(const std::string& input, const std::string& format) {
    op::drawing d = op::parse_opg(read_input(input));
    if (format == "json-lines") {
        ordered_json j;
        j["ok"] = true;
        j["n"] = d.n();
        j["m"] = d.m();
        j["x"] = d.x();
        j["faces"] = d.face_count();
        j["components"] = d.component_count();
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "ok n=" << d.n() << " m=" << d.m() << " x=" << d.x()
                  << " faces=" << d.face_count()
                  << " components=" << d.component_count() << "\n";
    }
    return 0;
}

int run_invariants(const std::string& input, const std::string& format) {
    op::drawing d = op::parse_opg(read_input(input));
    op::invariant_report rep = op::compute_invariants(d);
    if (format == "json-lines") {
        ordered_json j;
        j["n"] = rep.n;
        j["m"] = rep.m;
        j["x"] = rep.x;
        j["A"] = rep.A;
        j["twoB"] = rep.twoB;
        j["C"] = rep.C;
        j["identity_ok"] = rep.identity_ok;
        for (const auto& [deg, count] : rep.face_degree_histogram)
            j["face_hist." + std::to_string(deg)] = count;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n=" << rep.n << "\nm=" << rep.m << "\nx=" << rep.x
                  << "\nA=" << rep.A << "\ntwoB=" << rep.twoB << "\nC=" << rep.C
                  << "\nidentity_ok=" << (rep.identity_ok ? "true" : "false") << "\n";
        for (const auto& [deg, count] : rep.face_degree_histogram)
            std::cout << "face_hist." << deg << "=" << count << "\n";
    }
    return 0;
}

std::string walk_token(const op::drawing& d, int pv) {
    return d.is_fake(pv) ? "x" + std::to_string(pv - d.n()) : std::to_string(pv);
}

int run_faces(const std::string& input, const std::string& format) {
    op::drawing d = op::parse_opg(read_input(input));
    std::vector<op::face_info> info = op::classify_faces(d);
    for (const op::face_info& fi : info) {
        std::vector<std::string> walk;
        for (int dart : d.face_walk(fi.id))
            walk.push_back(walk_token(d, d.dart_origin(dart)));
        if (format == "json-lines") {
            ordered_json j;
            j["face"] = fi.id;
            j["deg"] = fi.degree;
            j["fakes"] = fi.fakes;
            j["class"] = op::face_class_name(fi);
            j["walk"] = walk;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "face " << fi.id << " deg=" << fi.degree
                      << " fakes=" << fi.fakes << " class=" << op::face_class_name(fi)
                      << " walk=";
            for (size_t i = 0; i < walk.size(); ++i)
                std::cout << (i ? "," : "") << walk[i];
            std::cout << "\n";
        }
    }
    return 0;
}

int emit_drawing(const op::drawing& d, const std::string& format) {
    if (format == "svg") {
        std::cout << op::svg_render(d);
    } else if (format == "json-lines") {
        ordered_json j;
        j["opg"] = op::serialize_opg(d);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << op::serialize_opg(d);
    }
    return 0;
}

int run_skeleton(const std::string& input, const std::string& format) {
    op::drawing d = op::parse_opg(read_input(input));
    return emit_drawing(op::crossing_skeleton(d), format);
}

void print_certificate(const op::certificate& c, const std::string& file,
                       const std::string& format) {
    if (format == "json-lines") {
        ordered_json j;
        if (!file.empty()) j["file"] = file;
        j["subject"] = c.subject;
        j["k"] = c.k;
        j["n"] = c.n;
        j["m"] = c.m;
        j["x"] = c.x;
        j["bound"] = c.claimed_bound;
        j["valid_drawing"] = c.valid_drawing;
        j["clique_free"] = c.clique_free;
        j["edge_count"] = c.edge_count;
        j["crossing_bounds"] = c.crossing_bounds;
        j["verdict"] = c.pass ? "pass" : "fail";
        j["extremal"] = c.extremal;
        std::cout << j.dump() << "\n";
    } else {
        if (!file.empty()) std::cout << "file=" << file << "\n";
        std::cout << op::certificate_text(c) << "\n";
    }
}

int run_certify(int k, const std::string& input, const std::string& all_dir,
                const std::string& format) {
    if (!all_dir.empty()) {
        std::vector<std::filesystem::path> files;
        for (const auto& entry : std::filesystem::directory_iterator(all_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".opg")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end(),
                  [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
        bool all_pass = true;
        for (const auto& path : files) {
            op::certificate c;
            try {
                c = op::certify(op::parse_opg(read_input(path.string())), k);
            } catch (const op::drawing_error&) {
                c = op::failed_certificate(path.filename().string(), k);
            }
            all_pass = all_pass && c.pass;
            print_certificate(c, path.filename().string(), format);
        }
        return all_pass ? 0 : 1;
    }
    op::certificate c = op::certify(op::parse_opg(read_input(input)), k);
    print_certificate(c, "", format);
    return c.pass ? 0 : 1;
}

int run_gen(const std::string& family, int n, int k, const std::string& format) {
    op::drawing d = [&] {
        if (family == "cube-g8") return op::gen_cube_g8();
        if (family == "ladder") {
            if (k < 0) op::fail("BadParam", "ladder needs --k");
            return op::gen_ladder_H(k);
        }
        if (family == "k5-optimal") {
            if (n < 0) op::fail("BadParam", "k5-optimal needs --n");
            return op::gen_k5_optimal(n);
        }
        if (family == "k4-extremal") {
            if (n < 0) op::fail("BadParam", "k4-extremal needs --n");
            return op::gen_k4_extremal(n);
        }
        if (family == "turan-drawing") {
            if (n < 0 || k < 0) op::fail("BadParam", "turan-drawing needs --n and --k");
            return op::gen_turan_drawing(n, k);
        }
        op::fail("BadParam", "unknown family '" + family +
                                 "', expected cube-g8, ladder, k5-optimal, "
                                 "k4-extremal or turan-drawing");
    }();
    return emit_drawing(d, format);
}

int run_turan(int n, int k, bool exhaustive, bool graph, const std::string& format) {
    const long long size = op::turan_size(n, k);
    long long exh = -1;
    if (exhaustive) exh = op::turan_exhaustive(n, k);
    if (format == "json-lines") {
        ordered_json j;
        j["n"] = n;
        j["k"] = k;
        j["turan_size"] = size;
        if (exhaustive) j["turan_exhaustive"] = exh;
        if (graph) j["edges"] = op::serialize_edge_list(op::turan_graph(n, k));
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "turan_size=" << size << "\n";
        if (exhaustive) std::cout << "turan_exhaustive=" << exh << "\n";
        if (graph) std::cout << op::serialize_edge_list(op::turan_graph(n, k));
    }
    return 0;
}

int run_search(const std::string& input, const std::string& format) {
    const std::string text = read_input(input);
    op::abstract_graph g = op::looks_like_opg(text)
                               ? op::abstract_of(op::parse_opg(text))
                               : op::parse_edge_list(text);
    op::search_result res = op::drawing_search(g);
    if (!res.found) {
        std::cerr << "SearchExhausted: " << res.reject_reason
                  << (res.exhausted_full_space ? " (full space covered)"
                                               : " (search incomplete)")
                  << "\n";
        return 1;
    }
    return emit_drawing(*res.found, format);
}

int run_fixtures(const std::string& name, const std::string& format) {
    if (!name.empty()) {
        op::drawing d = op::load_fixture(name);
        return emit_drawing(d, format);
    }
    for (const std::string& fx : op::fixture_names()) {
        op::drawing d = op::load_fixture(fx);
        if (format == "json-lines") {
            ordered_json j;
            j["name"] = fx;
            j["n"] = d.n();
            j["m"] = d.m();
            j["x"] = d.x();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << fx << " n=" << d.n() << " m=" << d.m() << " x=" << d.x()
                      << "\n";
        }
    }
    return 0;
}

}   // namespace

int main(int argc, char** argv) {
    CLI::App app{"toolkit for drawings with at most one crossing per edge"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("--verbose", verbose, "print the version banner to stderr");

    const std::vector<std::string> formats = {"text", "json-lines", "svg"};
    auto add_format = [&](CLI::App* sub, std::string& var) {
        sub->add_option("--format", var, "output format")
            ->check(CLI::IsMember(formats));
    };

    std::string v_input, v_format = "text";
    CLI::App* validate = app.add_subcommand("validate", "parse and validate a drawing");
    validate->add_option("input", v_input, "opg file or -")->required();
    add_format(validate, v_format);

    std::string i_input, i_format = "text";
    CLI::App* invariants = app.add_subcommand("invariants", "face and incidence invariants");
    invariants->add_option("input", i_input, "opg file or -")->required();
    add_format(invariants, i_format);

    std::string f_input, f_format = "text";
    CLI::App* faces = app.add_subcommand("faces", "face walks and their classes");
    faces->add_option("input", f_input, "opg file or -")->required();
    add_format(faces, f_format);

    std::string s_input, s_format = "text";
    CLI::App* skeleton = app.add_subcommand("skeleton", "sub-drawing of the crossed edges");
    skeleton->add_option("input", s_input, "opg file or -")->required();
    add_format(skeleton, s_format);

    std::string c_input, c_all, c_format = "text";
    int c_k = 0;
    CLI::App* certify = app.add_subcommand("certify", "check a drawing against the bound tables");
    certify->add_option("--k", c_k, "forbidden clique size")->required();
    certify->add_option("input", c_input, "opg file or -");
    certify->add_option("--all", c_all, "certify every .opg file in a directory");
    add_format(certify, c_format);

    std::string g_family, g_format = "text";
    int g_n = -1, g_k = -1;
    CLI::App* gen = app.add_subcommand("gen", "generate a drawing family member");
    gen->add_option("family", g_family,
                    "cube-g8, ladder, k5-optimal, k4-extremal or turan-drawing")
        ->required();
    gen->add_option("--n", g_n, "vertex count");
    gen->add_option("--k", g_k, "family parameter");
    add_format(gen, g_format);

    int t_n = 0, t_k = 0;
    bool t_exhaustive = false, t_graph = false;
    std::string t_format = "text";
    CLI::App* turan = app.add_subcommand("turan", "clique-free edge maxima");
    turan->add_option("--n", t_n, "vertex count")->required();
    turan->add_option("--k", t_k, "forbidden clique size")->required();
    turan->add_flag("--exhaustive", t_exhaustive, "cross-check by exhaustive sweep");
    turan->add_flag("--graph", t_graph, "emit the extremal graph as an edge list");
    add_format(turan, t_format);

    std::string se_input, se_format = "text";
    CLI::App* search = app.add_subcommand("search", "search for a drawing of a graph");
    search->add_option("input", se_input, "opg or edge-list file, or -")->required();
    add_format(search, se_format);

    std::string fx_name, fx_format = "text";
    CLI::App* fixtures = app.add_subcommand("fixtures", "bundled verified drawings");
    fixtures->add_option("--name", fx_name, "print one fixture as opg");
    add_format(fixtures, fx_format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    if (verbose) std::cerr << "oneplane 1.0.0\n";

    try {
        if (app.got_subcommand(validate)) return run_validate(v_input, v_format);
        if (app.got_subcommand(invariants)) return run_invariants(i_input, i_format);
        if (app.got_subcommand(faces)) return run_faces(f_input, f_format);
        if (app.got_subcommand(skeleton)) return run_skeleton(s_input, s_format);
        if (app.got_subcommand(certify)) {
            if (c_all.empty() && c_input.empty())
                op::fail("BadParam", "certify needs an input file or --all");
            return run_certify(c_k, c_input, c_all, c_format);
        }
        if (app.got_subcommand(gen)) return run_gen(g_family, g_n, g_k, g_format);
        if (app.got_subcommand(turan))
            return run_turan(t_n, t_k, t_exhaustive, t_graph, t_format);
        if (app.got_subcommand(search)) return run_search(se_input, se_format);
        if (app.got_subcommand(fixtures)) return run_fixtures(fx_name, fx_format);
    } catch (const op::drawing_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
