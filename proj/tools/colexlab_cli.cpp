#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "colexlab/css.hpp"
#include "colexlab/decode.hpp"
#include "colexlab/gates.hpp"
#include "colexlab/thermal.hpp"

using json = nlohmann::json;
using namespace colexlab;

namespace {

std::uint64_t default_seed() {
    if (const char* env = std::getenv("COLEXLAB_SEED")) return std::stoull(env);
    return 0;
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << text;
}

json support_lists(const std::vector<Pauli>& ps, bool x_part) {
    json arr = json::array();
    for (const Pauli& p : ps) arr.push_back((x_part ? p.x : p.z).indices());
    return arr;
}

json describe(const CssCode& code, const json& meta) {
    json j;
    j["n"] = code.n;
    j["x_gens"] = support_lists(code.x_gens, true);
    j["z_gens"] = support_lists(code.z_gens, false);
    j["logical_x"] = support_lists(code.logical_x, true);
    j["logical_z"] = support_lists(code.logical_z, false);
    j["meta"] = meta;
    return j;
}

CssCode build_family(const std::string& family, int D, int d, int L) {
    if (family == "toric") {
        if (d < 0 || d > D) throw std::invalid_argument("toric: need 0 <= d <= D");
        CssCode code = toric_code(D, L, d);
        install_toric_decoder(code);
        return code;
    }
    if (family == "color" || family == "simplicial") {
        if (family == "simplicial" && d < 0) d = D - 1;
        if (d < 0 || d > D) throw std::invalid_argument("color: need 0 <= d <= D");
        Colex cx = build_hypercube_colex(D);
        if (family == "simplicial") cx = puncture(cx);
        CssCode code = color_code(cx, d);
        install_color_decoder(code);
        return code;
    }
    throw std::invalid_argument("unknown family: " + family);
}

CssCode named_code(const std::string& name) {
    if (name == "steane") {
        CssCode code = color_code(puncture(build_hypercube_colex(2)), 1);
        install_min_weight_decoder(code, 3);
        return code;
    }
    if (name == "15qubit") {
        CssCode code = color_code(puncture(build_hypercube_colex(3)), 2);
        install_min_weight_decoder(code, 3);
        return code;
    }
    throw std::invalid_argument("unknown code: " + name);
}

std::string csv_row(const std::string& model, double beta, double p, int L,
                    const std::string& metric, const EstimateReport& r) {
    std::ostringstream os;
    os.precision(12);
    os << model << ',' << beta << ',' << p << ',' << L << ',' << metric << ','
       << r.estimate << ',' << r.stderr_ << ',' << r.samples << ',' << r.seed
       << '\n';
    return os.str();
}

int cmd_build(const std::string& family, int D, int d, int L, std::size_t w_max,
              const std::string& out) {
    CssCode code = build_family(family, D, d, L);
    json meta{{"family", family}, {"D", D}, {"L", L}};
    meta["d"] = code.d;
    emit(out, describe(code, meta).dump(2) + "\n");
    auto dist = distance(code, w_max);
    std::cerr << "[[" << code.n << ", " << code.k() << ", "
              << (dist ? std::to_string(*dist) : "> " + std::to_string(w_max))
              << "]]\n";
    return 0;
}

int cmd_thermal(const std::string& model, int D, int d, int L,
                const std::vector<double>& betas, const std::vector<double>& ps,
                bool exact, const SamplerParams& base, const std::string& out) {
    CssCode built = (model == "steane" || model == "15qubit")
                        ? named_code(model)
                        : build_family(model, D, d, L);
    auto code = std::make_shared<const CssCode>(std::move(built));
    if (code->logical_z.empty()) throw std::invalid_argument("model encodes no qubit");
    const Pauli N = code->logical_z[0];
    std::string csv = "model,beta,p,L,metric,estimate,stderr,samples,seed\n";
    for (double beta : betas) {
        ThermalModel m = make_thermal_model(code, beta);
        if (ps.empty()) {
            EstimateReport r;
            if (exact) {
                r.estimate = gibbs_exact(m, N);
                r.seed = base.seed;
            } else {
                r = estimate_p_crit(m, N, base);
            }
            csv += csv_row(model, beta, 0.0, L, "p_crit", r);
        } else {
            for (double p : ps)
                csv += csv_row(model, beta, p, L, "overlap",
                               depolarize_overlap(m, N, p, base));
        }
    }
    emit(out, csv);
    return 0;
}

int cmd_goodness(int D, int j, int k, const std::string& out) {
    const Colex cx = build_hypercube_colex(D);
    auto to_json = [&](const GoodnessCertificate& c) {
        json jj{{"colex", "hypercube-D" + std::to_string(D)},
                {"j", c.j},
                {"k", c.k},
                {"verdict", c.verdict},
                {"method", c.method}};
        jj["witness"] = c.witness ? json(c.witness->indices()) : json();
        return jj;
    };
    const GoodnessCertificate brute = is_good_bruteforce(cx, j, k);
    const GoodnessCertificate theo = is_good_theorem(cx, j, k);
    json rep{{"bruteforce", to_json(brute)},
             {"theorem", to_json(theo)},
             {"agree", brute.verdict == theo.verdict}};
    emit(out, rep.dump(2) + "\n");
    return 0;
}

int cmd_anneal(int D, int d, int L, double beta, const AnnealParams& params,
               const std::string& out) {
    const double frac = anneal_init(D, d, L, beta, params);
    json rep{{"D", D},      {"d", d},       {"L", L},
             {"beta", beta}, {"sweeps", params.ramp_sweeps},
             {"replicas", params.replicas}, {"seed", params.seed},
             {"fraction", frac}};
    emit(out, rep.dump(2) + "\n");
    return 0;
}

int cmd_gates(const std::string& name, const std::string& gate,
              const std::string& out) {
    const CssCode code = named_code(name);
    TransversalGate g;
    if (gate == "H")
        g = TransversalGate::AllH;
    else if (gate == "X")
        g = TransversalGate::AllX;
    else if (gate == "Z")
        g = TransversalGate::AllZ;
    else if (gate == "R1")
        g = TransversalGate::AllR1;
    else if (gate == "CNOT")
        g = TransversalGate::PairCnot;
    else
        throw std::invalid_argument("unknown gate: " + gate);
    const LogicalAction act = apply_transversal_clifford(code, g);
    json rep{{"code", name},
             {"gate", gate},
             {"stabilizer_preserved", act.stabilizer_preserved}};
    json images = json::array();
    for (std::size_t i = 0; i < act.images.size(); ++i)
        images.push_back(json{{"combo", act.images[i].indices()},
                              {"phase", act.phases[i]}});
    rep["logical_images"] = images;
    emit(out, rep.dump(2) + "\n");
    return 0;
}

ExcitationGraph named_graph(const std::string& name, CssCode& keep_alive) {
    if (name == "path") {
        ExcitationGraph g;
        g.num_nodes = 32;
        g.adj.assign(g.num_nodes, {});
        for (std::size_t i = 0; i + 1 < g.num_nodes; ++i) {
            g.adj[i].push_back(i + 1);
            g.adj[i + 1].push_back(i);
        }
        g.mu = 2;
        return g;
    }
    if (name == "grid2d") {
        keep_alive = toric_code(2, 6, 1);
        return excitation_graph(keep_alive, SyndromeType::Z);
    }
    if (name == "grid3d") {
        keep_alive = toric_code(3, 4, 1);
        return excitation_graph(keep_alive, SyndromeType::Z);
    }
    throw std::invalid_argument("unknown graph: " + name);
}

int cmd_clusters(const std::string& graph, std::size_t l, const std::string& out) {
    CssCode keep;
    const ExcitationGraph g = named_graph(graph, keep);
    const std::size_t count = count_connected(g, 0, l);
    const double bound = std::exp(static_cast<double>(g.mu) * std::log(2.0) *
                                  static_cast<double>(l));
    json rep{{"graph", graph}, {"l", l},       {"node", 0},
             {"count", count}, {"mu", g.mu},   {"bound", bound},
             {"within_bound", static_cast<double>(count) <= bound}};
    emit(out, rep.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"colexlab: homological stabilizer codes, thermal stability, "
                 "transversal gates"};
    app.require_subcommand(1);

    std::string family = "toric", model = "steane", code_name = "steane";
    std::string gate = "H", graph = "grid2d", out;
    int D = 2, d = -1, L = 2, j = 1, k = 1;
    std::size_t w_max = 3, l = 4;
    std::vector<double> betas{1.0}, ps;
    double beta = 1.0;
    bool exact = false;
    SamplerParams sp;
    sp.seed = default_seed();
    AnnealParams ap;
    ap.seed = default_seed();

    auto* b = app.add_subcommand("build", "construct a code, write its descriptor");
    b->add_option("--family", family)->check(CLI::IsMember({"toric", "color", "simplicial"}));
    b->add_option("--D", D)->check(CLI::Range(1, 5));
    b->add_option("--d", d);
    b->add_option("--L", L)->check(CLI::Range(2, 64));
    b->add_option("--w-max", w_max);
    b->add_option("--out", out);

    auto* t = app.add_subcommand("thermal", "P_crit / overlap estimates as CSV");
    t->add_option("--model", model);
    t->add_option("--D", D);
    t->add_option("--d", d);
    t->add_option("--L", L);
    t->add_option("--beta", betas);
    t->add_option("--p", ps);
    t->add_flag("--exact", exact);
    t->add_option("--samples", sp.samples);
    t->add_option("--burn-in", sp.burn_in_sweeps);
    t->add_option("--chains", sp.chains);
    t->add_option("--seed", sp.seed);
    t->add_option("--out", out);

    auto* g = app.add_subcommand("goodness", "goodness certificates for a colex");
    g->add_option("--D", D)->check(CLI::Range(1, 5));
    g->add_option("--j", j);
    g->add_option("--k", k)->check(CLI::Range(0, 8));
    g->add_option("--out", out);

    auto* a = app.add_subcommand("anneal", "field-ramp initialization fraction");
    a->add_option("--D", D);
    a->add_option("--d", d);
    a->add_option("--L", L);
    a->add_option("--beta", beta);
    a->add_option("--sweeps", ap.ramp_sweeps);
    a->add_option("--replicas", ap.replicas);
    a->add_option("--seed", ap.seed);
    a->add_option("--out", out);

    auto* ga = app.add_subcommand("gates", "transversal Clifford report");
    ga->add_option("--code", code_name);
    ga->add_option("--gate", gate);
    ga->add_option("--out", out);

    auto* c = app.add_subcommand("clusters", "connected-set counts and bounds");
    c->add_option("--graph", graph);
    c->add_option("--l", l)->check(CLI::Range(std::size_t{1}, std::size_t{8}));
    c->add_option("--out", out);

    try {
        app.parse(argc, argv);
        if (b->parsed()) return cmd_build(family, D, d < 0 && family == "toric" ? 1 : d, L, w_max, out);
        if (t->parsed()) return cmd_thermal(model, D, d < 0 ? 1 : d, L, betas, ps, exact, sp, out);
        if (g->parsed()) return cmd_goodness(D, j, k, out);
        if (a->parsed()) return cmd_anneal(D, d < 0 ? 2 : d, L, beta, ap, out);
        if (ga->parsed()) return cmd_gates(code_name, gate, out);
        if (c->parsed()) return cmd_clusters(graph, l, out);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
