#include "mixdisc/approx.hpp"

#include <cmath>
#include <sstream>

#include "mixdisc/exact.hpp"

namespace mixdisc {

PolydiscInstance::PolydiscInstance(SymmetricTuple t, std::vector<Complex> zs, double rho_,
                                   double eps_)
    : tuple(std::move(t)), points(std::move(zs)), rho(rho_), eps(eps_) {
    if (tuple.count() != tuple.dim())
        throw InputError("polydisc instance needs n matrices of dimension n");
    if (static_cast<int>(points.size()) != tuple.count())
        throw InputError("polydisc instance needs one point per matrix");
    if (!(rho > 0.0 && rho < 1.0)) throw InputError("rho must lie in (0, 1)");
    if (!(eps > 0.0 && eps < 1.0)) throw InputError("eps must lie in (0, 1)");
}

DomainReport check_domain(const PolydiscInstance& inst) {
    const double tol = 1e-9;
    const double gamma0 = StabilityConstants::get().gamma0;
    DomainReport rep;
    rep.pass = true;
    for (int k = 0; k < inst.tuple.count(); ++k) {
        double nrm = operator_norm(inst.tuple[k]);
        bool ok = nrm <= gamma0 + tol;
        rep.matrix_norms.push_back({k, nrm, gamma0, ok});
        rep.pass = rep.pass && ok;
    }
    for (int k = 0; k < static_cast<int>(inst.points.size()); ++k) {
        double mod = std::abs(inst.points[static_cast<std::size_t>(k)]);
        bool ok = mod <= inst.rho + tol;
        rep.point_moduli.push_back({k, mod, inst.rho, ok});
        rep.pass = rep.pass && ok;
    }
    return rep;
}

namespace {

// Elementary symmetric functions e_1..e_kmax of the eigenvalues of m, via
// power-sum traces and Newton's identities.
void elementary_symmetric(const Eigen::MatrixXcd& m, int kmax, std::vector<Complex>& e,
                          std::vector<Complex>& p, Eigen::MatrixXcd& power,
                          Eigen::MatrixXcd& scratch) {
    p.assign(static_cast<std::size_t>(kmax) + 1, Complex{0.0});
    power = m;
    for (int i = 1; i <= kmax; ++i) {
        if (i > 1) {
            scratch.noalias() = power * m;
            power.swap(scratch);
        }
        p[static_cast<std::size_t>(i)] = power.trace();
    }
    e.assign(static_cast<std::size_t>(kmax) + 1, Complex{0.0});
    e[0] = 1.0;
    for (int k = 1; k <= kmax; ++k) {
        Complex s{0.0};
        for (int i = 1; i <= k; ++i) {
            Complex term = e[static_cast<std::size_t>(k - i)] * p[static_cast<std::size_t>(i)];
            s += (i % 2 == 1) ? term : -term;
        }
        e[static_cast<std::size_t>(k)] = s / static_cast<double>(k);
    }
}

std::vector<Complex> derivatives_subset_sums(std::span<const Eigen::MatrixXcd> as, int kmax,
                                             const DerivOptions& opts) {
    const int n = static_cast<int>(as.size());

    // S[t][k] = sum over |T| = t of e_k(sum_{j in T} A_j), k = t..kmax.
    std::vector<std::vector<Complex>> subset_sums(static_cast<std::size_t>(kmax) + 1);
    for (int t = 1; t <= kmax; ++t) {
        const std::uint64_t total = binomial_u64(n, t);
        std::vector<std::vector<ComplexKahanSum>> slots(block_grid(total).blocks);
        blocked_for(total, opts.threads,
                    [&](std::size_t block, std::uint64_t begin, std::uint64_t end) {
                        auto& slot = slots[block];
                        slot.resize(static_cast<std::size_t>(kmax) + 1);
                        std::vector<Complex> e, p;
                        Eigen::MatrixXcd sum(n, n), power(n, n), scratch(n, n);
                        std::uint64_t mask = subset_mask_at_rank(n, t, begin);
                        for (std::uint64_t r = begin; r < end; ++r) {
                            sum.setZero();
                            for (int j = 0; j < n; ++j)
                                if (mask & (std::uint64_t{1} << j))
                                    sum += as[static_cast<std::size_t>(j)];
                            elementary_symmetric(sum, kmax, e, p, power, scratch);
                            for (int k = t; k <= kmax; ++k)
                                slot[static_cast<std::size_t>(k)].add(
                                    e[static_cast<std::size_t>(k)]);
                            if (r + 1 < end) mask = next_subset_mask(mask);
                        }
                    });
        std::vector<Complex> level(static_cast<std::size_t>(kmax) + 1, Complex{0.0});
        for (const auto& slot : slots) {
            if (slot.empty()) continue;
            for (int k = t; k <= kmax; ++k)
                level[static_cast<std::size_t>(k)] += slot[static_cast<std::size_t>(k)].value();
        }
        subset_sums[static_cast<std::size_t>(t)] = std::move(level);
    }

    // g^(k)(0)/(k! n!) = [(n-k)!/n!] sum_t (-1)^{k-t} C(n-t, k-t) S[t][k].
    std::vector<Complex> out(static_cast<std::size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
        Complex s{0.0};
        for (int t = 1; t <= k; ++t) {
            double w = binomial(n - t, k - t);
            Complex term = w * subset_sums[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)];
            s += ((k - t) % 2 == 0) ? term : -term;
        }
        out[static_cast<std::size_t>(k - 1)] = s * reciprocal_falling_factorial(n, k);
    }
    return out;
}

std::vector<Complex> derivatives_padded_enumeration(std::span<const ComplexMatrix> as, int kmax,
                                                    const DerivOptions& opts) {
    const int n = static_cast<int>(as.size());
    std::vector<Complex> out(static_cast<std::size_t>(kmax));
    std::vector<ComplexMatrix> picked;
    for (int k = 1; k <= kmax; ++k) {
        ComplexKahanSum acc;
        std::uint64_t mask = (std::uint64_t{1} << k) - 1;
        const std::uint64_t last = ((std::uint64_t{1} << k) - 1) << (n - k);
        for (;;) {
            picked.clear();
            for (int j = 0; j < n; ++j)
                if (mask & (std::uint64_t{1} << j)) picked.push_back(as[static_cast<std::size_t>(j)]);
            acc.add(padded_mixed_discriminant_normalized(n, picked));
            if (mask == last) break;
            mask = next_subset_mask(mask);
        }
        out[static_cast<std::size_t>(k - 1)] = acc.value();
    }
    (void)opts;
    return out;
}

}  // namespace

std::vector<Complex> discriminant_derivatives(std::span<const ComplexMatrix> as, int kmax,
                                              const DerivOptions& opts) {
    const int n = static_cast<int>(as.size());
    if (n < 1) throw InputError("need at least one matrix");
    for (const auto& a : as)
        if (a.dim() != n) throw InputError("derivatives need n matrices of dimension n");
    if (kmax < 0 || kmax > n) throw InputError("derivative order must lie in [0, n]");
    if (kmax == 0) return {};

    double terms = 0.0;
    for (int t = 1; t <= kmax; ++t) terms += binomial(n, t);
    if (terms > static_cast<double>(opts.max_terms))
        throw ResourceError("derivative subset enumeration exceeds the configured cap");

    if (opts.mode == DerivOptions::Mode::PaddedEnumeration)
        return derivatives_padded_enumeration(as, kmax, opts);

    std::vector<Eigen::MatrixXcd> raw;
    raw.reserve(static_cast<std::size_t>(n));
    for (const auto& a : as) raw.push_back(a.mat());
    return derivatives_subset_sums(raw, kmax, opts);
}

ApproxResult approx_log_mixed_discriminant(const PolydiscInstance& inst,
                                           const DerivOptions& opts) {
    DomainReport rep = check_domain(inst);
    if (!rep.pass) {
        std::ostringstream oss;
        oss << "instance rejected:";
        for (const auto& e : rep.matrix_norms)
            if (!e.ok) oss << " matrix " << e.index << " norm " << e.value << " > " << e.limit << ";";
        for (const auto& e : rep.point_moduli)
            if (!e.ok) oss << " point " << e.index << " modulus " << e.value << " > " << e.limit << ";";
        throw DomainError(oss.str());
    }

    const int n = inst.tuple.dim();
    const double beta = 1.0 / inst.rho;
    const int m = degree_for_accuracy(n, beta, inst.eps);
    if (m > opts.max_degree) {
        std::ostringstream oss;
        oss << "required Taylor degree " << m << " exceeds the configured cap " << opts.max_degree;
        throw ResourceError(oss.str());
    }

    std::vector<ComplexMatrix> scaled;
    scaled.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        scaled.emplace_back(Eigen::MatrixXcd(inst.points[static_cast<std::size_t>(k)] *
                                             inst.tuple[k].mat().cast<Complex>()));

    std::vector<Complex> derivs = discriminant_derivatives(scaled, std::min(m, n), opts);
    derivs.resize(static_cast<std::size_t>(m), Complex{0.0});  // degree of g is n

    auto d = DerivativeSequence::from_log_g0(Complex{log_factorial(n), 0.0}, std::move(derivs));
    return taylor_log_at_one(d, n, beta);
}

}  // namespace mixdisc
