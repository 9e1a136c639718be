#include "colexlab/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "colexlab/decode.hpp"

namespace colexlab {

namespace {

double vec_min(const std::vector<double>& a, const std::vector<double>& b) {
    double m = std::numeric_limits<double>::infinity();
    for (double v : a) m = std::min(m, v);
    for (double v : b) m = std::min(m, v);
    return m;
}

double vec_max(const std::vector<double>& a, const std::vector<double>& b) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : a) m = std::max(m, v);
    for (double v : b) m = std::max(m, v);
    return m;
}

SyndromeType sector_of(const Pauli& N) {
    const bool has_x = N.x.any(), has_z = N.z.any();
    if (has_z && !has_x) return SyndromeType::Z; // X errors flip a Z-type N
    if (has_x && !has_z) return SyndromeType::X;
    throw std::invalid_argument("sector_of: observable must be pure X or pure Z type");
}

std::size_t sector_size(const CssCode& code, SyndromeType t) {
    return (t == SyndromeType::Z) ? code.z_basis.size() : code.x_basis.size();
}

Syndrome bits_to_syndrome(std::uint64_t bits, std::size_t g, SyndromeType t) {
    return Syndrome{BitChain::from_mask(g, bits), t};
}

} // namespace

double ThermalModel::t_min() const { return vec_min(t_x, t_z); }
double ThermalModel::t_max() const { return vec_max(t_x, t_z); }

ThermalModel make_thermal_model(std::shared_ptr<const CssCode> code, double beta,
                                double coupling) {
    if (coupling <= 0) throw std::invalid_argument("couplings must be positive");
    ThermalModel m;
    m.code = std::move(code);
    m.beta = beta;
    m.t_x.assign(m.code->x_gens.size(), coupling);
    m.t_z.assign(m.code->z_gens.size(), coupling);
    return m;
}

double energy(const ThermalModel& m, const Syndrome& b) {
    const BitChain exc = node_excitations(*m.code, b);
    const auto& t_same = (b.type == SyndromeType::Z) ? m.t_z : m.t_x;
    const auto& t_other = (b.type == SyndromeType::Z) ? m.t_x : m.t_z;
    double e = 0.0;
    for (std::size_t i = 0; i < t_same.size(); ++i)
        e -= exc.get(i) ? -t_same[i] : t_same[i];
    for (double t : t_other) e -= t;
    return e;
}

double gibbs_exact(const ThermalModel& m, const Pauli& N) {
    const SyndromeType type = sector_of(N);
    const std::size_t g = sector_size(*m.code, type);
    if (g > 20) throw std::runtime_error("gibbs_exact: syndrome space too large");
    double z = 0.0, crit = 0.0;
    for (std::uint64_t bits = 0; bits < (1ull << g); ++bits) {
        const Syndrome b = bits_to_syndrome(bits, g, type);
        const double w = std::exp(-m.beta * energy(m, b));
        z += w;
        if (is_critical(*m.code, N, b)) crit += w;
    }
    return crit / z;
}

SyndromeSampler::SyndromeSampler(const ThermalModel& m, SyndromeType type,
                                 std::uint64_t seed)
    : m_(&m), type_(type), rng_(seed) {
    const CssCode& code = *m.code;
    const auto& gens = (type == SyndromeType::Z) ? code.z_gens : code.x_gens;
    t_ = (type == SyndromeType::Z) ? &m.t_z : &m.t_x;
    touch_.assign(code.n, {});
    for (std::size_t q = 0; q < code.n; ++q)
        for (std::size_t i = 0; i < gens.size(); ++i) {
            const BitChain& s = (type == SyndromeType::Z) ? gens[i].z : gens[i].x;
            if (s.get(q)) touch_[q].push_back(i);
        }
    err_ = BitChain(code.n);
    exc_ = BitChain(gens.size());
}

void SyndromeSampler::step() {
    std::uniform_int_distribution<std::size_t> pick(0, m_->code->n - 1);
    const std::size_t q = pick(rng_);
    double de = 0.0;
    for (std::size_t i : touch_[q]) de += exc_.get(i) ? -2.0 * (*t_)[i] : 2.0 * (*t_)[i];
    bool accept = de <= 0.0;
    if (!accept) {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        accept = u(rng_) < std::exp(-m_->beta * de);
    }
    if (accept) {
        err_.flip(q);
        for (std::size_t i : touch_[q]) exc_.flip(i);
    }
    if (++steps_ % 10000 == 0) audit();
}

void SyndromeSampler::sweep() {
    for (std::size_t i = 0; i < m_->code->n; ++i) step();
}

Syndrome SyndromeSampler::current() const {
    const CssCode& code = *m_->code;
    const auto& basis = (type_ == SyndromeType::Z) ? code.z_basis : code.x_basis;
    Syndrome b{BitChain(basis.size()), type_};
    for (std::size_t j = 0; j < basis.size(); ++j) b.bits.set(j, exc_.get(basis[j]));
    return b;
}

double SyndromeSampler::current_energy() const {
    double e = 0.0;
    for (std::size_t i = 0; i < t_->size(); ++i)
        e -= exc_.get(i) ? -(*t_)[i] : (*t_)[i];
    const auto& other = (type_ == SyndromeType::Z) ? m_->t_x : m_->t_z;
    for (double t : other) e -= t;
    return e;
}

void SyndromeSampler::audit() const {
    const CssCode& code = *m_->code;
    const Pauli e = (type_ == SyndromeType::Z) ? Pauli::x_on(code.n, err_)
                                               : Pauli::z_on(code.n, err_);
    auto [sx, sz] = syndrome_of(code, e);
    const Syndrome& fresh = (type_ == SyndromeType::Z) ? sz : sx;
    if (fresh.bits != current().bits)
        throw std::logic_error("sampler audit: cached syndrome diverged");
}

EstimateReport estimate_p_crit(const ThermalModel& m, const Pauli& N,
                               const SamplerParams& params) {
    const SyndromeType type = sector_of(N);
    const std::size_t burn =
        params.burn_in_sweeps ? params.burn_in_sweeps : 100 * m.code->n;
    std::unordered_map<BitChain, bool, BitChainHash> cache;
    std::size_t hits = 0, total = 0;
    const std::size_t chains = std::max<std::size_t>(1, params.chains);
    for (std::size_t c = 0; c < chains; ++c) {
        std::size_t quota = params.samples / chains + (c < params.samples % chains);
        SyndromeSampler s(m, type, params.seed + c);
        for (std::size_t i = 0; i < burn; ++i) s.sweep();
        for (std::size_t i = 0; i < quota; ++i) {
            s.sweep();
            const Syndrome b = s.current();
            auto it = cache.find(b.bits);
            if (it == cache.end())
                it = cache.emplace(b.bits, is_critical(*m.code, N, b)).first;
            hits += it->second;
            ++total;
        }
    }
    EstimateReport rep;
    rep.samples = total;
    rep.burn_in = burn;
    rep.seed = params.seed;
    rep.estimate = total ? static_cast<double>(hits) / total : 0.0;
    rep.stderr_ = total ? std::sqrt(rep.estimate * (1.0 - rep.estimate) / total) : 0.0;
    return rep;
}

std::pair<double, double> decay_bound(const ThermalModel& m, const Pauli& N,
                                      double h_max) {
    const SyndromeType type = sector_of(N);
    const std::size_t g = sector_size(*m.code, type);
    if (g > 20) throw std::runtime_error("decay_bound: syndrome space too large");
    const CssCode& code = *m.code;
    double z = 0.0, acc = 0.0, pcrit = 0.0;
    for (std::uint64_t bits = 0; bits < (1ull << g); ++bits) {
        const Syndrome b = bits_to_syndrome(bits, g, type);
        const double w = std::exp(-m.beta * energy(m, b));
        z += w;
        double term = 0.0;
        for (std::size_t q = 0; q < code.n; ++q) {
            // One flip operator per site, of the type acting on N.
            const Pauli sigma = Pauli::single(code.n, q, type == SyndromeType::Z,
                                              type == SyndromeType::X);
            int s;
            try {
                s = s_sign(code, N, sigma, b);
            } catch (const std::runtime_error&) {
                s = -1;
            }
            term += 1.0 - s;
        }
        acc += w * term;
        if (is_critical(code, N, b)) pcrit += w;
    }
    return {8.0 * h_max * acc / z, 16.0 * h_max * code.n * (pcrit / z)};
}

EstimateReport depolarize_overlap(const ThermalModel& m, const Pauli& N, double p,
                                  const SamplerParams& params) {
    if (p < 0.0 || p >= 0.5) throw std::invalid_argument("depolarize_overlap: need 0 <= p < 1/2");
    const SyndromeType type = sector_of(N);
    const CssCode& code = *m.code;
    const std::size_t burn =
        params.burn_in_sweeps ? params.burn_in_sweeps : 100 * code.n;
    const double p_any = 3.0 * p / (1.0 + 2.0 * p); // P(non-identity) per qubit
    std::size_t flips = 0, total = 0;
    const std::size_t chains = std::max<std::size_t>(1, params.chains);
    for (std::size_t c = 0; c < chains; ++c) {
        std::size_t quota = params.samples / chains + (c < params.samples % chains);
        SyndromeSampler s(m, type, params.seed + c);
        std::mt19937_64 noise(params.seed + 0x9e3779b9u + c);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::uniform_int_distribution<int> pauli3(1, 3);
        for (std::size_t i = 0; i < burn; ++i) s.sweep();
        for (std::size_t i = 0; i < quota; ++i) {
            s.sweep();
            Pauli e(code.n);
            for (std::size_t q = 0; q < code.n; ++q) {
                if (u(noise) >= p_any) continue;
                const int t = pauli3(noise);
                if (t & 1) e.x.set(q, true);
                if (t & 2) e.z.set(q, true);
            }
            int sgn;
            try {
                sgn = s_sign(code, N, e, s.current());
            } catch (const std::runtime_error&) {
                sgn = -1;
            }
            flips += sgn < 0;
            ++total;
        }
    }
    EstimateReport rep;
    rep.samples = total;
    rep.burn_in = burn;
    rep.seed = params.seed;
    const double pc = total ? static_cast<double>(flips) / total : 0.0;
    rep.estimate = 1.0 - 2.0 * pc;
    rep.stderr_ = total ? 2.0 * std::sqrt(pc * (1.0 - pc) / total) : 0.0;
    return rep;
}

double anneal_init(int D, int d, int L, double beta, const AnnealParams& params) {
    if (d < 1) throw std::invalid_argument("anneal_init: need d >= 1");
    CssCode code = toric_code(D, L, d);
    install_toric_decoder(code);
    std::vector<std::vector<std::size_t>> touch(code.n);
    for (std::size_t q = 0; q < code.n; ++q)
        for (std::size_t i = 0; i < code.z_gens.size(); ++i)
            if (code.z_gens[i].z.get(q)) touch[q].push_back(i);
    std::size_t good = 0;
    for (std::size_t r = 0; r < params.replicas; ++r) {
        std::mt19937_64 rng(params.seed + r);
        std::uniform_int_distribution<std::size_t> pick(0, code.n - 1);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        BitChain a(code.n);
        BitChain exc(code.z_gens.size());
        for (std::size_t sw = 0; sw < params.ramp_sweeps; ++sw) {
            const double g0 =
                1.0 - static_cast<double>(sw + 1) / params.ramp_sweeps;
            for (std::size_t pr = 0; pr < code.n; ++pr) {
                const std::size_t q = pick(rng);
                double de = a.get(q) ? -2.0 * g0 : 2.0 * g0;
                for (std::size_t i : touch[q]) de += exc.get(i) ? -2.0 : 2.0;
                if (de <= 0.0 || u(rng) < std::exp(-beta * de)) {
                    a.flip(q);
                    for (std::size_t i : touch[q]) exc.flip(i);
                }
            }
        }
        Syndrome b{BitChain(code.z_basis.size()), SyndromeType::Z};
        for (std::size_t j = 0; j < code.z_basis.size(); ++j)
            b.bits.set(j, exc.get(code.z_basis[j]));
        auto c = code.corr(b);
        if (!c) continue; // oversize at readout counts as failure
        const BitChain resid = a ^ c->x;
        bool trivial = true;
        for (const Pauli& lz : code.logical_z)
            trivial = trivial && !BitChain::and_parity(resid, lz.z);
        good += trivial;
    }
    return params.replicas ? static_cast<double>(good) / params.replicas : 0.0;
}

} // namespace colexlab
