#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "colexlab/css.hpp"

namespace colexlab {

struct GoodnessCertificate {
    int j = 0, k = 0;
    bool verdict = false;
    std::string method; // "enumeration", "theorem", "sampled"
    std::optional<BitChain> witness; // weight not 0 mod 2^{k+1} when false
};

/// Generators of the boundary subgroup checked by goodness: the vertex-set
/// chains of the (j+1)-cells (for j = D, the single all-vertices chain of
/// the cell the closed colex bounds).
std::vector<BitChain> boundary_group_generators(const Colex& cx, int j);

GoodnessCertificate is_good_bruteforce(const Colex& cx, int j, int k);

GoodnessCertificate is_good_theorem(const Colex& cx, int j, int k);

int min_dimension(int d_bar, int k);

/// Restriction of a vertex chain of cx to the vertex set of a cell,
/// expressed over the cell's subcolex vertex ordering.
BitChain restrict_chain(const Colex& cx, const ColexCell& lam, const BitChain& c);

/// The lift sending the subcolex generator chain of a cell nu inside lam
/// to the chain of the supercell of nu with colors Q - (colors(lam) -
/// colors(nu)); defined on nice colexes.
BitChain lift_generator(const Colex& cx, const ColexCell& lam, const ColexCell& nu);

// Transversal Clifford machinery. Rows carry an i-power phase so that
// conjugation rules for H and R_1 stay exact.
struct PhasedPauli {
    BitChain x, z;
    int phase = 0; // operator = i^phase X^x Z^z, phase mod 4

    std::size_t n() const { return x.size(); }
};

PhasedPauli phased(const Pauli& p);
PhasedPauli pp_mul(const PhasedPauli& a, const PhasedPauli& b);
bool pp_equal(const PhasedPauli& a, const PhasedPauli& b);

enum class TransversalGate { AllX, AllZ, AllH, AllR1, PairCnot };

/// Conjugate a row by the transversal gate. PairCnot expects rows over 2n
/// qubits, controls in the first half, targets in the second.
PhasedPauli conjugate(const PhasedPauli& row, TransversalGate gate);

struct LogicalAction {
    bool stabilizer_preserved = false;
    // Image of each logical generator (X logicals then Z logicals) as a
    // combination over the logical generators, plus the phase picked up.
    std::vector<BitChain> images;
    std::vector<int> phases;
};

/// Tableau over stabilizer plus logical generators of one code (or two
/// copies for PairCnot); verifies that conjugated stabilizer generators
/// stay in the stabilizer group with trivial phase.
LogicalAction apply_transversal_clifford(const CssCode& code, TransversalGate gate);

bool check_transversal_clifford(const CssCode& code, TransversalGate gate);

struct RkResult {
    bool preserved = false;
    int s = 0; // logical R_k power, modulo 2^{k+1}
};

/// Dense state-vector check that transversal R_k preserves the codespace,
/// and extraction of the induced logical power. n <= 15.
RkResult apply_transversal_rk(const CssCode& code, int k);

/// Destructive transversal measurement in the given basis of a logical
/// eigenstate with value ±1, after the error E, with classical correction
/// of the outcomes.
int transversal_measure(const CssCode& code, SyndromeType basis, int value,
                        const Pauli& E, std::uint64_t seed);

} // namespace colexlab
