#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "colexlab/bitchain.hpp"
#include "colexlab/colex.hpp"
#include "colexlab/lattice.hpp"
#include "colexlab/z2.hpp"

namespace colexlab {

/// A Pauli operator up to sign: sign * X^x Z^z. The constructions here are
/// all CSS, so i-phases never arise and sign stays in {+1, -1}.
struct Pauli {
    BitChain x;
    BitChain z;
    int sign = 1;

    explicit Pauli(std::size_t n) : x(n), z(n) {}
    Pauli(BitChain xs, BitChain zs, int s = 1)
        : x(std::move(xs)), z(std::move(zs)), sign(s) {}

    std::size_t n() const { return x.size(); }
    std::size_t weight() const;
    bool is_identity() const { return !x.any() && !z.any(); }

    static Pauli x_on(std::size_t n, const BitChain& supp) { return Pauli(supp, BitChain(n)); }
    static Pauli z_on(std::size_t n, const BitChain& supp) { return Pauli(BitChain(n), supp); }
    static Pauli single(std::size_t n, std::size_t qubit, bool xbit, bool zbit);
};

bool commutes(const Pauli& P, const Pauli& Q);
Pauli operator*(const Pauli& P, const Pauli& Q);
bool operator==(const Pauli& P, const Pauli& Q);

enum class SyndromeType { X, Z };

/// Syndrome bits over the independent generator basis of one type. A
/// Z-type syndrome is measured by the Z basis and diagnoses X errors.
struct Syndrome {
    BitChain bits;
    SyndromeType type;
};

struct CssCode {
    std::size_t n = 0;
    std::vector<Pauli> x_gens; // overcomplete, the Hamiltonian terms
    std::vector<Pauli> z_gens;
    std::vector<std::size_t> x_basis; // indices of an independent subset
    std::vector<std::size_t> z_basis;
    Z2Matrix x_dep{0, 0}; // gen i = product over basis j of x_dep(i, j)
    Z2Matrix z_dep{0, 0};
    std::vector<Pauli> logical_x;
    std::vector<Pauli> logical_z;

    using CorrMap = std::function<std::optional<Pauli>(const Syndrome&)>;
    CorrMap corr_x; // for X-type syndromes, returns a Z-type correction
    CorrMap corr_z;

    // Geometry the code was built from, when any.
    std::shared_ptr<TorusLattice> lattice;
    std::shared_ptr<Colex> colex;
    int d = -1;

    std::size_t k() const { return n - x_basis.size() - z_basis.size(); }
    Syndrome zero_syndrome(SyndromeType t) const;
    std::optional<Pauli> corr(const Syndrome& b) const;
};

std::pair<Syndrome, Syndrome> syndrome_of(const CssCode& code, const Pauli& E);

/// CSS code of a three-term chain complex: qubits on the middle group,
/// X generators from boundaries of top generators, Z generators from
/// coboundaries of bottom generators, logicals from homology classes.
CssCode code_from_complex(const ChainComplex& cx);

CssCode toric_code(int D, int L, int d);

CssCode color_code(const Colex& cx, int d);

std::pair<Pauli, Pauli> simplicial_logicals(const CssCode& code);

std::optional<std::size_t> distance(const CssCode& code, std::size_t w_max);

int s_sign(const CssCode& code, const Pauli& N, const Pauli& E, const Syndrome& b);

bool is_critical(const CssCode& code, const Pauli& N, const Syndrome& b);

/// Fill x_basis/z_basis and the dependency matrices from the generator
/// supports; used by every constructor.
void finalize_generators(CssCode& code);

} // namespace colexlab
