#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "colexlab/css.hpp"

namespace colexlab {

/// Adjacency structure of the Hamiltonian generator terms of one type.
/// Nodes are the overcomplete generators; a qubit touches a node when a
/// single-qubit error there flips it.
struct ExcitationGraph {
    SyndromeType type = SyndromeType::Z;
    std::size_t num_nodes = 0;
    std::vector<std::vector<std::size_t>> adj;   // sorted, no self loops
    std::vector<std::vector<std::size_t>> touch; // qubit -> nodes
    std::size_t lambda = 0; // max nodes touched by one qubit
    std::size_t mu = 0;     // max node degree
};

ExcitationGraph excitation_graph(const CssCode& code, SyndromeType type);

/// Excitation bits of every overcomplete generator implied by a syndrome
/// over the independent basis, via the dependency matrix.
BitChain node_excitations(const CssCode& code, const Syndrome& b);

struct Cluster {
    std::vector<std::size_t> nodes; // ascending
    BitChain node_chain;            // indicator over graph nodes
};

/// Connected components of the excited-node set under the graph links,
/// ordered by least node id.
std::vector<Cluster> cluster_decompose(const ExcitationGraph& g, const BitChain& exc);

bool clusters_linked(const ExcitationGraph& g, const BitChain& a, const BitChain& b);

/// Correction for one toric-code cluster: an error chain supported on
/// qubit cells inside the cluster's bounding hypercube whose boundary is
/// the cluster. nullopt when the cluster wraps the torus or no in-box
/// solution exists.
std::optional<Pauli> toric_box_corr(const CssCode& code, SyndromeType type,
                                    const Cluster& cluster);

/// Full toric correction: cluster decomposition plus per-cluster box
/// filling, merged in cluster order.
std::optional<Pauli> toric_corr(const CssCode& code, const Syndrome& b);
std::optional<Pauli> toric_corr(const CssCode& code, const Syndrome& b,
                                const ExcitationGraph& g);

/// Color-code correction for one cluster: first remove every excitation
/// whose colors contain the distinguished first color, then clear the
/// remaining color combinations, solving over a vertex neighborhood of
/// the cluster (widened to the whole colex when too tight).
std::optional<Pauli> color_cluster_corr(const CssCode& code, SyndromeType type,
                                        const Cluster& cluster);

std::optional<Pauli> color_corr(const CssCode& code, const Syndrome& b);

void install_toric_decoder(CssCode& code);
void install_color_decoder(CssCode& code);

/// Table-driven minimum-weight decoder; enumerates pure-type errors by
/// weight and keeps the first hit per syndrome. Needs small basis sizes.
void install_min_weight_decoder(CssCode& code, std::size_t w_max);

/// Exact number of connected node sets of size l containing `node`.
std::size_t count_connected(const ExcitationGraph& g, std::size_t node, std::size_t l);

/// Closed form |Γ|^{2ν} e^{−δ·ceil(ξL/λμ)} / (1 − e^{−δ}) with
/// δ = β·t_min − μ·ln 2; throws when δ ≤ 0.
double peierls_bound(double gamma_size, double nu, double xi, double L,
                     double lambda, double mu, double beta, double t_min);

struct ConditionsRow {
    int L;
    std::size_t lambda, mu;
};

struct ConditionsReport {
    std::vector<ConditionsRow> rows;
    bool lambda_constant = false;
    bool mu_constant = false;
    std::size_t factorization_checked = 0;
    bool factorization_ok = false;
};

/// Conditions (i)-(iv) over a toric family at several sizes: constant
/// lambda and mu, plus spot checks of corr(b+b') = corr(b) corr(b') on
/// random unlinked syndrome pairs.
ConditionsReport verify_conditions(int D, int d, const std::vector<int>& Ls,
                                   std::size_t pairs, std::uint64_t seed);

} // namespace colexlab
