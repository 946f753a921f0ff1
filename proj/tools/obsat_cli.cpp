// Command-line front door: generate graphs, encode SAT instances, solve,
// verify drawings, and run the encode-solve pipeline with run manifests.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "obsat/chirotope.hpp"
#include "obsat/encode.hpp"
#include "obsat/graph.hpp"
#include "obsat/solver.hpp"
#include "obsat/verify.hpp"

namespace {

constexpr const char* kToolVersion = "1.0.0";

// Exit codes (documented in the README):
//   0  conclusive result (solve: SAT; prove: lower bound proved; verify: valid)
//   20 solve: UNSAT
//   30 solve: INDETERMINATE (budget exhausted)
//   10 prove: no conclusion, instance satisfiable
//   11 prove: no conclusion, budget exhausted
//   12 verify: drawing invalid
//   2  usage error, 3 I/O error, 4 input format error
constexpr int kExitSat = 0, kExitUnsat = 20, kExitIndet = 30;
constexpr int kExitProved = 0, kExitNoConclSat = 10, kExitNoConclBudget = 11;
constexpr int kExitInvalidDrawing = 12;
constexpr int kExitIo = 3, kExitFormat = 4;

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << content;
}

const char* outcome_name(obsat::Outcome o) {
    switch (o) {
        case obsat::Outcome::Sat: return "SAT";
        case obsat::Outcome::Unsat: return "UNSAT";
        default: return "INDETERMINATE";
    }
}

nlohmann::json stats_json(const obsat::SolverStats& s) {
    return {{"decisions", s.decisions},
            {"propagations", s.propagations},
            {"conflicts", s.conflicts},
            {"restarts", s.restarts},
            {"wall_seconds", s.wall_seconds}};
}

nlohmann::json manifest_json(const std::string& command_line, const obsat::SolverConfig& cfg,
                             const obsat::SolverResult& res,
                             const nlohmann::json& instance_info) {
    nlohmann::json m;
    m["tool_version"] = kToolVersion;
    m["command_line"] = command_line;
    m["instance"] = instance_info;
    m["solver_config"] = {
        {"conflict_budget", cfg.conflict_budget ? nlohmann::json(*cfg.conflict_budget)
                                                : nlohmann::json()},
        {"time_budget_seconds", cfg.time_budget_seconds
                                    ? nlohmann::json(*cfg.time_budget_seconds)
                                    : nlohmann::json()},
        {"seed", cfg.seed}};
    m["outcome"] = outcome_name(res.outcome);
    m["stats"] = stats_json(res.stats);
    return m;
}

void print_summary(const obsat::EncodeSummary& s) {
    std::cout << "variables: " << (s.triple_vars + s.side_vars + s.keypath_vars)
              << " (triple " << s.triple_vars << ", side " << s.side_vars << ", key-path "
              << s.keypath_vars << ")\n";
    std::cout << "clauses:   " << s.total_clauses() << " (four-point " << s.four_point
              << ", five-point " << s.five_point;
    if (s.path) std::cout << ", path " << s.path;
    if (s.keypath_def) std::cout << ", key-path-def " << s.keypath_def;
    if (s.keypath_side) std::cout << ", key-path-side " << s.keypath_side;
    std::cout << ")\n";
}

// Runs `cmd instance.cnf`, interprets SAT-competition style output.
obsat::SolverResult run_external_solver(const std::string& cmd, const obsat::CnfInstance& inst) {
    std::string path = "obsat_external_instance.cnf";
    write_file(path, obsat::write_dimacs(inst));
    std::string full = cmd + " " + path;
    FILE* pipe = popen(full.c_str(), "r");
    if (!pipe) throw std::ios_base::failure("cannot run external solver: " + full);
    std::string output;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    pclose(pipe);

    obsat::SolverResult res;
    if (output.find("UNSATISFIABLE") != std::string::npos) {
        res.outcome = obsat::Outcome::Unsat;
    } else if (output.find("SATISFIABLE") != std::string::npos) {
        res.outcome = obsat::Outcome::Sat;
        res.model = obsat::parse_model(output, inst.num_vars);
        if (!obsat::eval_model(inst, *res.model).satisfied)
            throw std::runtime_error("external solver model does not satisfy the instance");
    }
    return res;
}

struct SolveFlags {
    std::optional<uint64_t> conflict_budget;
    std::optional<double> time_budget;
    uint64_t seed = 0;
    std::string external_solver;
    std::string manifest_path;

    void attach(CLI::App* app) {
        app->add_option("--conflict-budget", conflict_budget, "stop after this many conflicts");
        app->add_option("--time-budget", time_budget, "stop after this many seconds");
        app->add_option("--seed", seed, "solver seed (branching tie-breaks)");
        app->add_option("--external-solver", external_solver,
                        "run `CMD instance.cnf` instead of the embedded solver");
        app->add_option("--manifest", manifest_path, "write a run manifest JSON here");
    }

    obsat::SolverConfig config() const {
        obsat::SolverConfig cfg;
        cfg.conflict_budget = conflict_budget;
        cfg.time_budget_seconds = time_budget;
        cfg.seed = seed;
        return cfg;
    }
};

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i) s += " ";
        s += argv[i];
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"obstacle-number lower bounds via SAT, with exact geometric certification"};
    app.require_subcommand(1);
    std::string command_line = join_args(argc, argv);

    // ---- graph ----
    auto* graph_cmd = app.add_subcommand("graph", "generate a graph, print canonical JSON");
    graph_cmd->require_subcommand(1);
    int gyro_n = 0, kstar_a = 0, kstar_b = 0;
    std::string named_name, convert_path, union_a, union_b;
    auto* gyro = graph_cmd->add_subcommand("gyro", "gyroelongated n-bipyramid X_n");
    gyro->add_option("n", gyro_n, "base polygon size")->required();
    auto* kstar = graph_cmd->add_subcommand("kstar", "K_{a,b} minus a perfect matching on the small class");
    kstar->add_option("a", kstar_a)->required();
    kstar->add_option("b", kstar_b)->required();
    auto* named = graph_cmd->add_subcommand("named", "catalog graph by name");
    named->add_option("name", named_name)->required();
    auto* convert = graph_cmd->add_subcommand("convert", "read JSON or graph6, print canonical JSON");
    convert->add_option("file", convert_path, "input file or - for stdin")->required();
    auto* gunion = graph_cmd->add_subcommand("union", "disjoint union of two graph files");
    gunion->add_option("first", union_a)->required();
    gunion->add_option("second", union_b)->required();

    // ---- encode ----
    auto* encode_cmd = app.add_subcommand("encode", "build a SAT instance from a graph");
    std::string enc_graph, enc_mode = "outside", enc_out = "-";
    std::optional<int> enc_cap;
    bool enc_shared = false;
    encode_cmd->add_option("graph", enc_graph, "graph file (JSON or graph6), - for stdin")->required();
    encode_cmd->add_option("--mode", enc_mode, "outside|single")
        ->check(CLI::IsMember({"outside", "single"}));
    encode_cmd->add_option("--max-path-len", enc_cap, "cap on path length in edges");
    encode_cmd->add_option("--out", enc_out, "DIMACS output file, - for stdout");
    encode_cmd->add_flag("--shared-vertex-pairs", enc_shared,
                         "experimental: key-path clauses for non-edge pairs sharing a vertex");

    // ---- solve ----
    auto* solve_cmd = app.add_subcommand("solve", "solve a DIMACS file");
    std::string solve_path;
    SolveFlags solve_flags;
    solve_cmd->add_option("cnf", solve_path, "DIMACS file, - for stdin")->required();
    solve_flags.attach(solve_cmd);

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "certify an obstacle drawing");
    std::string verify_drawing, verify_assign_mode;
    bool verify_json = false;
    verify_cmd->add_option("--drawing", verify_drawing, "drawing JSON file")->required();
    verify_cmd->add_flag("--json", verify_json, "print the report as JSON");
    verify_cmd->add_option("--assign-mode", verify_assign_mode,
                           "outside|single: also derive a model and check it against the encoding")
        ->check(CLI::IsMember({"outside", "single"}));

    // ---- prove ----
    auto* prove_cmd = app.add_subcommand("prove", "encode, solve, and state the verdict");
    std::string prove_graph, prove_mode = "outside";
    std::optional<int> prove_cap;
    SolveFlags prove_flags;
    prove_cmd->add_option("graph", prove_graph, "graph file, - for stdin")->required();
    prove_cmd->add_option("--mode", prove_mode, "outside|single")
        ->check(CLI::IsMember({"outside", "single"}));
    prove_cmd->add_option("--max-path-len", prove_cap, "cap on path length in edges");
    prove_flags.attach(prove_cmd);

    // ---- perturb ----
    auto* perturb_cmd = app.add_subcommand(
        "perturb", "deterministic integer perturbation of a point set into general position");
    std::string perturb_path;
    perturb_cmd->add_option("points", perturb_path, "point-set JSON, - for stdin")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gyro->parsed()) {
            std::cout << obsat::serialize_graph(obsat::gyro_bipyramid(gyro_n)) << "\n";
        } else if (kstar->parsed()) {
            std::cout << obsat::serialize_graph(obsat::k_star(kstar_a, kstar_b)) << "\n";
        } else if (named->parsed()) {
            std::cout << obsat::serialize_graph(obsat::named_graph(named_name)) << "\n";
        } else if (convert->parsed()) {
            std::cout << obsat::serialize_graph(obsat::parse_graph(read_file(convert_path)))
                      << "\n";
        } else if (gunion->parsed()) {
            auto g = obsat::disjoint_union(obsat::parse_graph(read_file(union_a)),
                                           obsat::parse_graph(read_file(union_b)));
            std::cout << obsat::serialize_graph(g) << "\n";
        } else if (encode_cmd->parsed()) {
            obsat::Graph g = obsat::parse_graph(read_file(enc_graph));
            obsat::EncodeOptions opt{enc_cap, enc_shared};
            auto enc = obsat::encode(
                g, enc_mode == "outside" ? obsat::EncodeMode::Outside : obsat::EncodeMode::Single,
                opt);
            write_file(enc_out, obsat::write_dimacs(enc.cnf));
            if (enc_out != "-") print_summary(enc.summary);
        } else if (solve_cmd->parsed()) {
            obsat::CnfInstance inst = obsat::parse_dimacs(read_file(solve_path));
            obsat::SolverConfig cfg = solve_flags.config();
            obsat::SolverResult res = solve_flags.external_solver.empty()
                                          ? obsat::solve(inst, cfg)
                                          : run_external_solver(solve_flags.external_solver, inst);
            std::cout << "s " << outcome_name(res.outcome) << "\n";
            if (res.outcome == obsat::Outcome::Sat) {
                std::cout << "v";
                for (int v = 1; v <= inst.num_vars; ++v)
                    std::cout << " " << (res.model->value[static_cast<size_t>(v)] ? v : -v);
                std::cout << " 0\n";
            }
            nlohmann::json info{{"source", solve_path},
                                {"num_vars", inst.num_vars},
                                {"num_clauses", inst.clauses.size()}};
            for (const auto& c : inst.comments)
                if (c.rfind("mode=", 0) == 0) info["metadata"] = c;
            if (!solve_flags.manifest_path.empty())
                write_file(solve_flags.manifest_path,
                           manifest_json(command_line, cfg, res, info).dump(2) + "\n");
            return res.outcome == obsat::Outcome::Sat
                       ? kExitSat
                       : (res.outcome == obsat::Outcome::Unsat ? kExitUnsat : kExitIndet);
        } else if (verify_cmd->parsed()) {
            obsat::ObstacleDrawing d = obsat::parse_drawing(read_file(verify_drawing));
            obsat::VerificationReport rep = obsat::check_representation(d);
            nlohmann::json jrep;
            jrep["valid"] = rep.valid;
            jrep["unblocked_non_edges"] = nlohmann::json::array();
            for (auto [u, v] : rep.unblocked_non_edges)
                jrep["unblocked_non_edges"].push_back({u, v});
            jrep["pierced_edges"] = nlohmann::json::array();
            for (auto& [e, o] : rep.pierced_edges)
                jrep["pierced_edges"].push_back({{"edge", {e.first, e.second}}, {"obstacle", o}});
            jrep["vertex_hits"] = nlohmann::json::array();
            for (auto& [v, o] : rep.vertex_hits)
                jrep["vertex_hits"].push_back({{"vertex", v}, {"obstacle", o}});
            jrep["outside_checks"] = nlohmann::json::array();
            for (auto& oc : rep.outside_checks)
                jrep["outside_checks"].push_back(
                    {{"obstacle", oc.obstacle}, {"pass", oc.pass}, {"detail", oc.detail}});
            if (verify_json) {
                std::cout << jrep.dump(2) << "\n";
            } else {
                std::cout << (rep.valid ? "valid" : "INVALID") << " obstacle representation\n";
                for (auto [u, v] : rep.unblocked_non_edges)
                    std::cout << "  unblocked non-edge {" << u << "," << v << "}\n";
                for (auto& [e, o] : rep.pierced_edges)
                    std::cout << "  edge {" << e.first << "," << e.second << "} meets obstacle "
                              << o << "\n";
                for (auto& [v, o] : rep.vertex_hits)
                    std::cout << "  vertex " << v << " lies inside obstacle " << o << "\n";
                for (auto& oc : rep.outside_checks)
                    std::cout << "  outside obstacle " << oc.obstacle << ": "
                              << (oc.pass ? "ok" : "FAIL") << " (" << oc.detail << ")\n";
            }
            if (!verify_assign_mode.empty() && rep.valid) {
                auto mode = verify_assign_mode == "outside" ? obsat::EncodeMode::Outside
                                                            : obsat::EncodeMode::Single;
                auto enc = obsat::encode(d.graph, mode);
                obsat::Model m = obsat::assignment_of_drawing(d, enc, mode);
                bool sat = obsat::eval_model(enc.cnf, m).satisfied;
                std::cout << "derived assignment " << (sat ? "satisfies" : "VIOLATES") << " the "
                          << verify_assign_mode << " instance\n";
                if (!sat) return kExitInvalidDrawing;
            }
            return rep.valid ? 0 : kExitInvalidDrawing;
        } else if (prove_cmd->parsed()) {
            obsat::Graph g = obsat::parse_graph(read_file(prove_graph));
            obsat::EncodeOptions opt{prove_cap, false};
            bool outside = prove_mode == "outside";
            auto enc = obsat::encode(
                g, outside ? obsat::EncodeMode::Outside : obsat::EncodeMode::Single, opt);
            print_summary(enc.summary);
            obsat::SolverConfig cfg = prove_flags.config();
            obsat::SolverResult res =
                prove_flags.external_solver.empty()
                    ? obsat::solve(enc.cnf, cfg)
                    : run_external_solver(prove_flags.external_solver, enc.cnf);
            nlohmann::json info{{"graph", nlohmann::json::parse(obsat::serialize_graph(g))},
                                {"mode", prove_mode},
                                {"max_path_len", prove_cap ? nlohmann::json(*prove_cap)
                                                           : nlohmann::json()},
                                {"num_vars", enc.cnf.num_vars},
                                {"num_clauses", enc.cnf.clauses.size()}};
            if (!prove_flags.manifest_path.empty())
                write_file(prove_flags.manifest_path,
                           manifest_json(command_line, cfg, res, info).dump(2) + "\n");
            const char* bound = outside ? "obsout" : "obs";
            if (res.outcome == obsat::Outcome::Unsat) {
                std::cout << bound << " >= 2 PROVED\n";
                return kExitProved;
            }
            if (res.outcome == obsat::Outcome::Sat) {
                std::cout << "no conclusion (instance satisfiable)\n";
                return kExitNoConclSat;
            }
            std::cout << "no conclusion (budget)\n";
            return kExitNoConclBudget;
        } else if (perturb_cmd->parsed()) {
            auto pts = obsat::parse_point_set(read_file(perturb_path));
            // Scale onto an integer grid and shift point i by (i, i*i) along
            // the moment curve; retry with a finer grid until no triple is
            // collinear. Deterministic.
            for (obsat::BigInt scale = 16;; scale *= 16) {
                std::vector<obsat::ExactPoint> out;
                for (size_t i = 0; i < pts.size(); ++i) {
                    obsat::Rational sx = pts[i].x * scale * scale, sy = pts[i].y * scale * scale;
                    obsat::BigInt ix = numerator(sx) / denominator(sx);
                    obsat::BigInt iy = numerator(sy) / denominator(sy);
                    out.push_back({obsat::Rational(ix + obsat::BigInt(i)),
                                   obsat::Rational(iy + obsat::BigInt(i * i))});
                }
                bool ok = true;
                for (size_t a = 0; a < out.size() && ok; ++a)
                    for (size_t b = a + 1; b < out.size() && ok; ++b)
                        for (size_t c = b + 1; c < out.size() && ok; ++c)
                            ok = obsat::orient(out[a], out[b], out[c]) !=
                                 obsat::Orientation::COLLINEAR;
                if (ok) {
                    std::cout << obsat::serialize_point_set(out) << "\n";
                    break;
                }
            }
        }
    } catch (const std::ios_base::failure& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFormat;
    }
    return 0;
}
