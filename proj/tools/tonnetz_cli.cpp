#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tonnetz/analysis.hpp"
#include "tonnetz/chains.hpp"
#include "tonnetz/complex.hpp"
#include "tonnetz/homology.hpp"
#include "tonnetz/lattice.hpp"
#include "tonnetz/render.hpp"
#include "tonnetz/topology.hpp"

using json = nlohmann::json;
using namespace tonnetz;

namespace {

json input_echo(int n, int k, const std::vector<int>& lengths) {
    return {{"n", n}, {"k", k}, {"lengths", lengths}};
}

json systole_json(const ShortestVectorResult& sv) {
    json j;
    auto [p, q] = sv.normalized_sq;
    j["normalized_sq"] = (q == 1) ? json(p) : json(std::to_string(p) + "/" + std::to_string(q));
    j["length_hint"] = std::sqrt(static_cast<double>(p) / static_cast<double>(q));
    j["witness_acoords"] = sv.witness;
    return j;
}

void emit(const std::string& command, const json& input, const json& result,
          std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    json report{{"command", command}, {"input", input}, {"result", result}, {"timing_ms", ms}};
    std::cout << report.dump(2) << std::endl;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw TonnetzError("io error", "cannot open " + path + " for writing");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized Tonnetz complexes, invariants, and lattice quotients"};
    app.require_subcommand(1);

    int n = 0, k = 0, rows = 4, cols = 5, radius = 1;
    std::vector<int> lengths;
    std::string out_path;
    bool permissive = false, no_oracle = false;

    auto add_lv = [&](CLI::App* cmd) {
        cmd->add_option("n", n, "modulus (number of vertices)")->required();
        cmd->add_option("k", k, "number of lengths")->required();
        cmd->add_option("lengths", lengths, "length vector l_1 ... l_k")->required();
    };

    auto* build = app.add_subcommand("build", "construct a complex and write its facet list");
    add_lv(build);
    build->add_option("-o,--out", out_path, "output path")->required();
    build->add_flag("--permissive", permissive, "allow non-generic length vectors");

    auto* analyze = app.add_subcommand("analyze", "full invariant report");
    add_lv(analyze);
    analyze->add_flag("--no-oracle", no_oracle, "skip the Smith-normal-form homology oracle");

    auto* render = app.add_subcommand("render", "SVG of the unfolded plane patch (k = 3)");
    add_lv(render);
    render->add_option("-o,--out", out_path, "output SVG path")->required();
    render->add_option("--rows", rows, "rows in the patch");
    render->add_option("--cols", cols, "columns in the patch");

    auto* classify = app.add_subcommand("classify", "isomorphism classes of generic vectors");
    classify->add_option("n", n, "modulus")->required();
    classify->add_option("k", k, "number of lengths")->required();

    auto* irrational = app.add_subcommand("irrational", "combinatorial Delone patch");
    irrational->add_option("k", k, "number of lengths")->required();
    irrational->add_option("radius", radius, "combinatorial radius")->required();
    irrational->add_option("-o,--out", out_path, "output path")->required();

    CLI11_PARSE(app, argc, argv);
    auto start = std::chrono::steady_clock::now();

    try {
        if (*build) {
            LengthVector L = LengthVector::validate(n, k, lengths);
            TonnetzComplex T = TonnetzComplex::build(L, permissive);
            write_file(out_path, to_text(L, T.facets()));
            emit("build", input_echo(n, k, lengths),
                 {{"facets", T.facets().size()},
                  {"generic", L.generic()},
                  {"reduced", L.reduced()},
                  {"permissive", T.permissive()},
                  {"out", out_path}},
                 start);
        } else if (*analyze) {
            LengthVector L = LengthVector::validate(n, k, lengths);
            TonnetzComplex T = TonnetzComplex::build(L);
            json result;
            result["generic"] = L.generic();
            result["reduced"] = L.reduced();
            result["f_vector"] = T.f_vector();
            result["euler_characteristic"] = T.euler_characteristic();
            PairingMatrix pm = pairing_matrix(n, k);
            result["pairing_determinant"] = pm.det;
            if (!no_oracle) {
                HomologyProfile h = simplicial_homology(T);
                result["betti"] = h.betti;
                result["torsion"] = h.torsion;
            }
            if (L.reduced()) {
                SubLattice sub = lambda_L(L);
                result["lattice"] = {{"hnf", sub.hnf}, {"index", sub.index}};
                result["systole"] = systole_json(shortest_vector(sub));
                result["main_theorem"] = verify_main_theorem(L);
            }
            ManifoldReport mr = verify_manifold(T);
            result["manifold"] = {{"pass", mr.pass},
                                  {"connected", mr.connected},
                                  {"sphere_certified", mr.sphere_certified}};
            emit("analyze", input_echo(n, k, lengths), result, start);
        } else if (*render) {
            LengthVector L = LengthVector::validate(n, k, lengths);
            write_file(out_path, render_svg(L, rows, cols));
            emit("render", input_echo(n, k, lengths),
                 {{"rows", rows}, {"cols", cols}, {"out", out_path}}, start);
        } else if (*classify) {
            auto classes = tonnetz::classify(n, k);
            json jclasses = json::array();
            for (const auto& cls : classes) {
                json jcls = json::array();
                for (const auto& L : cls) jcls.push_back(L.lengths());
                jclasses.push_back(std::move(jcls));
            }
            emit("classify", {{"n", n}, {"k", k}}, {{"classes", jclasses}}, start);
        } else if (*irrational) {
            DelonePatch P = irrational_patch(k, radius);
            write_file(out_path, P.to_text());
            emit("irrational", {{"k", k}, {"radius", radius}},
                 {{"vertices", P.vertices.size()},
                  {"facets", P.facets.size()},
                  {"out", out_path}},
                 start);
        }
    } catch (const TonnetzError& e) {
        json err{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
        std::cout << err.dump(2) << std::endl;
        return 2;
    }
    return 0;
}
