#include "riesz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riesz/common.hpp"
#include "riesz/gammafn.hpp"
#include "riesz/kahan.hpp"
#include "riesz/parallel.hpp"
#include "riesz/quadrature.hpp"

namespace riesz {

namespace {

void check_dl(int d, int ell) {
    if (d < 2) throw std::invalid_argument("spectral: d must be >= 2");
    if (ell < 0) throw std::invalid_argument("spectral: ell must be >= 0");
}

// Streams lambda_ell(r) for ell = 1, 2, ... through the antiderivative
// identity; one Gegenbauer recurrence of order (d+1)/2 at t0 = 1 - r^2/2.
struct LambdaSeq {
    int d;
    double t0;
    double front;
    double alpha;
    double cm1 = 0.0, cm2 = 0.0;
    int ell = 0;

    LambdaSeq(int d_, double r) : d(d_) {
        const double h = 0.5 * r * r;
        t0 = 1.0 - h;
        const double one_minus_t2 = h * (2.0 - h);  // 1 - t0^2, cancellation-free
        front = sphere_area(d - 1) * std::pow(one_minus_t2, 0.5 * d) * (d - 1.0);
        alpha = 0.5 * (d + 1);
    }

    double next() {
        ++ell;
        const int m = ell - 1;  // degree of C^{(d+1)/2} needed
        double cm;
        if (m == 0) {
            cm = 1.0;
        } else if (m == 1) {
            cm = 2.0 * alpha * t0;
        } else {
            cm = (2.0 * t0 * (m + alpha - 1.0) * cm1 - (m + 2.0 * alpha - 2.0) * cm2) / m;
        }
        cm2 = cm1;
        cm1 = cm;
        return front * cm / (static_cast<double>(ell) * (ell + d - 1.0) * gegenbauer_at_one(d, ell));
    }
};

// Recurrence coefficients for Q_ell = C_ell^{(d-1)/2}(t)/C_ell^{(d-1)/2}(1):
// Q_ell = ((2 ell + d - 3) t Q_{ell-1} - (ell - 1) Q_{ell-2}) / (ell + d - 2).
struct RatioSeq {
    int d;
    double t;
    double q1 = 1.0;  // Q_{ell-1}
    double q2 = 0.0;  // Q_{ell-2}
    int ell = 0;

    double next() {
        double q;
        if (ell == 0) {
            q = 1.0;
        } else if (ell == 1) {
            q = t;
        } else {
            q = ((2.0 * ell + d - 3.0) * t * q1 - (ell - 1.0) * q2) / (ell + d - 2.0);
        }
        q2 = q1;
        q1 = q;
        ++ell;
        return q;
    }
};

}  // namespace

double gegenbauer(double alpha, int ell, double t) {
    if (!(alpha > 0.0)) throw std::invalid_argument("gegenbauer: alpha must be positive");
    if (ell < 0) throw std::invalid_argument("gegenbauer: ell must be >= 0");
    if (!(std::abs(t) <= 1.0 + 1e-12)) throw std::invalid_argument("gegenbauer: t must lie in [-1, 1]");
    if (ell == 0) return 1.0;
    double p0 = 1.0;
    double p1 = 2.0 * alpha * t;
    for (int k = 2; k <= ell; ++k) {
        const double p2 = (2.0 * t * (k + alpha - 1.0) * p1 - (k + 2.0 * alpha - 2.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double gegenbauer_at_one(int d, int ell) {
    check_dl(d, ell);
    double v = 1.0;
    for (int k = 1; k <= d - 2; ++k) v *= static_cast<double>(ell + k) / k;
    return v;  // binom(ell + d - 2, d - 2)
}

double gegenbauer_ratio(int d, int ell, double t) {
    check_dl(d, ell);
    if (!(std::abs(t) <= 1.0 + 1e-12)) throw std::invalid_argument("gegenbauer_ratio: t must lie in [-1, 1]");
    RatioSeq seq{d, t};
    double q = 1.0;
    for (int k = 0; k <= ell; ++k) q = seq.next();
    return q;
}

long long harmonic_dimension(int d, int ell) {
    check_dl(d, ell);
    if (ell == 0) return 1;
    long long binom = 1;  // binom(ell + d - 2, d - 2), exact via stepwise division
    for (int k = 1; k <= d - 2; ++k) binom = binom * (ell + k) / k;
    return binom * (2LL * ell + d - 1) / (d - 1);
}

double zonal_kernel(int d, int ell, double t) {
    return static_cast<double>(harmonic_dimension(d, ell)) / sphere_area(d) * gegenbauer_ratio(d, ell, t);
}

double hyp3f2_terminating(int ell, double b, double c, double e, double f) {
    if (ell < 0) throw std::invalid_argument("hyp3f2_terminating: ell must be >= 0");
    KahanSum sum;
    double term = 1.0;
    sum.add(term);
    for (int n = 0; n < ell; ++n) {
        const double den = (e + n) * (f + n) * (n + 1.0);
        if (den == 0.0 || std::abs(e + n) < 1e-300 || std::abs(f + n) < 1e-300)
            throw std::invalid_argument("hyp3f2_terminating: zero denominator Pochhammer factor");
        term *= (-ell + n) * (b + n) * (c + n) / den;
        sum.add(term);
    }
    return sum.value();
}

double riesz_eigenvalue(int d, double s, int ell) {
    check_dl(d, ell);
    if (!(s >= 0.0 && s < d)) throw std::invalid_argument("riesz_eigenvalue: s must lie in [0, d)");
    const double logpi = std::log(kPi);
    if (s == 0.0) {
        if (ell == 0) return sphere_area(d) * continuous_energy(RieszParams::logarithmic(d));
        return std::exp((d - 1.0) * std::log(2.0) + 0.5 * d * logpi + std::lgamma(0.5 * d) +
                        std::lgamma(static_cast<double>(ell)) - std::lgamma(static_cast<double>(d + ell)));
    }
    return std::exp((d - s) * std::log(2.0) + 0.5 * d * logpi + std::lgamma(0.5 * (d - s)) +
                    std::lgamma(0.5 * s + ell) - std::lgamma(0.5 * s) - std::lgamma(d - 0.5 * s + ell));
}

double riesz_eigenvalue_quadrature(int d, double s, int ell) {
    check_dl(d, ell);
    if (!(s >= 0.0 && s < d)) throw std::invalid_argument("riesz_eigenvalue_quadrature: s must lie in [0, d)");
    const double ring = sphere_area(d - 1);
    const double half_dm2 = 0.5 * (d - 2);
    if (s == 0.0) {
        // Profile -log(2-2t)/2. Subtract the endpoint value of the smooth
        // factor so the log singularity integrates analytically:
        // int log(2-2t) dt = 4 log 2 - 2 over [-1, 1].
        const double g1 = d == 2 ? 1.0 : 0.0;  // ratio * (1-t^2)^{(d-2)/2} at t = 1
        auto f = [&](double t) {
            const double g = gegenbauer_ratio(d, ell, t) *
                             std::pow(std::max((1.0 - t) * (1.0 + t), 0.0), half_dm2);
            const double u = std::max(2.0 - 2.0 * t, 1e-300);
            return std::log(u) * (g - g1);
        };
        const double analytic = 4.0 * std::log(2.0) - 2.0;
        return ring * -0.5 * (integrate(f, -1.0, 1.0, 3e-12) + g1 * analytic);
    }
    const double q = 0.5 * (d - s);
    double integral;
    if (q >= 1.0) {
        auto f = [&](double t) {
            return gegenbauer_ratio(d, ell, t) * std::pow(1.0 - t, q - 1.0) *
                   std::pow(1.0 + t, half_dm2);
        };
        integral = integrate(f, -1.0, 1.0, 3e-12);
    } else {
        // Substitute v = (1-t)^q to absorb the endpoint singularity:
        // int (1-t)^{q-1} g(t) dt = (1/q) int_0^{2^q} g(1 - v^{1/q}) dv.
        auto f = [&](double v) {
            const double t = 1.0 - std::pow(v, 1.0 / q);
            return gegenbauer_ratio(d, ell, t) * std::pow(1.0 + t, half_dm2);
        };
        integral = integrate(f, 0.0, std::pow(2.0, q), 3e-12) / q;
    }
    return ring * std::pow(2.0, -0.5 * s) * integral;
}

double cap_multiplier(int d, int ell, double r) {
    check_dl(d, ell);
    if (!(r > 0.0 && r <= 2.0)) throw std::invalid_argument("cap_multiplier: r must lie in (0, 2]");
    if (ell == 0) return cap_area(d, r);
    const double ring = sphere_area(d - 1);
    const double h = 0.5 * r * r;  // 1 - t0
    const double half_dm2 = 0.5 * (d - 2);
    // t = 1 - h v keeps 1 - t^2 = h v (2 - h v) stable for small caps.
    auto f = [&](double v) {
        const double t = 1.0 - h * v;
        return gegenbauer_ratio(d, ell, t) * std::pow(h * v * (2.0 - h * v), half_dm2);
    };
    const double tol = 1e-13 / std::max(h, 1e-300);
    return ring * h * integrate(f, 0.0, 1.0, tol);
}

std::vector<double> cap_multipliers(int d, int L, double r) {
    check_dl(d, L);
    if (!(r > 0.0 && r <= 2.0)) throw std::invalid_argument("cap_multipliers: r must lie in (0, 2]");
    std::vector<double> lam(static_cast<std::size_t>(L) + 1);
    lam[0] = cap_area(d, r);
    if (L == 0) return lam;
    LambdaSeq seq(d, r);
    for (int ell = 1; ell <= L; ++ell) lam[ell] = seq.next();
    return lam;
}

SpectralTable SpectralTable::build(const RieszParams& params, int L, double r) {
    if (L < 0) throw std::invalid_argument("SpectralTable: L must be >= 0");
    SpectralTable t;
    t.d = params.d;
    t.s = params.s;
    t.is_log = params.is_log;
    t.L = L;
    t.r = r;
    t.A.resize(static_cast<std::size_t>(L) + 1);
    t.h.resize(static_cast<std::size_t>(L) + 1);
    for (int ell = 0; ell <= L; ++ell) {
        t.A[ell] = riesz_eigenvalue(params.d, params.s, ell);
        t.h[ell] = harmonic_dimension(params.d, ell);
    }
    if (r > 0.0) t.lam = cap_multipliers(params.d, L, r);
    return t;
}

namespace {

// Persistent Gegenbauer-ratio state for every unordered pair of a
// configuration; advancing one degree yields T_ell = sum_{i,j} Q_ell(t_ij)
// (diagonal included: Q_ell(1) = 1). Chunked over pairs with a fixed layout,
// combined in chunk order, hence worker-count independent.
class ZonalPairSums {
public:
    ZonalPairSums(const Configuration& config, int workers) : workers_(workers), n_(config.size()) {
        const int width = config.dim() + 1;
        d_ = config.dim();
        const std::size_t n_pairs = static_cast<std::size_t>(n_) * (n_ - 1) / 2;
        t_.resize(n_pairs);
        q1_.assign(n_pairs, 1.0);
        q2_.assign(n_pairs, 0.0);
        const double* pts = config.coords().data();
        std::size_t idx = 0;
        for (int i = 0; i < n_; ++i) {
            const double* a = pts + static_cast<std::size_t>(i) * width;
            for (int j = i + 1; j < n_; ++j) {
                const double* b = pts + static_cast<std::size_t>(j) * width;
                double dot = 0.0;
                for (int k = 0; k < width; ++k) dot += a[k] * b[k];
                t_[idx++] = std::clamp(dot, -1.0, 1.0);
            }
        }
        constexpr std::size_t kPairsPerChunk = 1 << 15;
        chunk_begin_.push_back(0);
        std::size_t begin = 0;
        while (begin < n_pairs) {
            begin = std::min(begin + kPairsPerChunk, n_pairs);
            chunk_begin_.push_back(begin);
        }
        if (chunk_begin_.size() == 1) chunk_begin_.push_back(0);
    }

    /// Advances through degrees [ell, ell + count) and appends T for each.
    void advance(int count, std::vector<double>& t_out) {
        const std::size_t n_chunks = chunk_begin_.size() - 1;
        std::vector<std::vector<double>> partial(n_chunks, std::vector<double>(count, 0.0));
        const int d = d_;
        const int ell0 = ell_;
        parallel_chunks(n_chunks, workers_, [&](std::size_t c) {
            std::vector<KahanSum> acc(count);
            for (std::size_t p = chunk_begin_[c]; p < chunk_begin_[c + 1]; ++p) {
                const double t = t_[p];
                double q1 = q1_[p];
                double q2 = q2_[p];
                for (int m = 0; m < count; ++m) {
                    const int ell = ell0 + m;
                    double q;
                    if (ell == 0) {
                        q = 1.0;
                    } else if (ell == 1) {
                        q = t;
                    } else {
                        q = ((2.0 * ell + d - 3.0) * t * q1 - (ell - 1.0) * q2) / (ell + d - 2.0);
                    }
                    q2 = q1;
                    q1 = q;
                    acc[m].add(q);
                }
                q1_[p] = q1;
                q2_[p] = q2;
            }
            for (int m = 0; m < count; ++m) partial[c][m] = acc[m].value();
        });
        for (int m = 0; m < count; ++m) {
            KahanSum sum;
            for (std::size_t c = 0; c < n_chunks; ++c) sum.add(partial[c][m]);
            t_out.push_back(static_cast<double>(n_) + 2.0 * sum.value());
        }
        ell_ += count;
    }

    int degree() const { return ell_; }

private:
    int workers_;
    int n_;
    int d_;
    int ell_ = 0;
    std::vector<double> t_;
    std::vector<double> q1_;
    std::vector<double> q2_;
    std::vector<std::size_t> chunk_begin_;
};

}  // namespace

namespace detail {

MuEnergySum spectral_mu_sum(const Configuration& config, double r,
                            const std::function<double(int)>& weight, double tol, int L_max,
                            int workers, bool zero_multipliers) {
    const int d = config.dim();
    const double n = config.size();
    const double sigma = cap_area(d, r);
    const double omega = sphere_area(d);
    const std::vector<double> lam = cap_multipliers(d, L_max, r);

    ZonalPairSums sums(config, workers);
    std::vector<double> t_block;
    MuEnergySum out;
    KahanSum total;
    int consecutive_small = 0;
    double last_terms[10] = {0.0};
    int terms_seen = 0;

    constexpr int kBlock = 64;
    int ell = 0;
    bool done = false;
    while (!done && ell <= L_max) {
        const int count = std::min(kBlock, L_max - ell + 1);
        t_block.clear();
        sums.advance(count, t_block);
        for (int m = 0; m < count && !done; ++m, ++ell) {
            if (ell == 0) continue;  // mu(S^d) = 0 kills the constant term
            const double mult = zero_multipliers ? 0.0 : lam[ell];
            const double factor = mult / (n * sigma);
            const double s_ell = static_cast<double>(harmonic_dimension(d, ell)) / omega * t_block[m];
            const double term = weight(ell) * factor * factor * s_ell;
            total.add(term);
            last_terms[terms_seen % 10] = term;
            ++terms_seen;
            out.L_used = ell;
            if (std::abs(term) < 0.1 * tol * (std::abs(total.value()) + 1e-300)) {
                if (++consecutive_small >= 10) done = true;
            } else {
                consecutive_small = 0;
            }
        }
    }
    out.sum = total.value();
    double tail = 0.0;
    for (int k = 0; k < std::min(terms_seen, 10); ++k) tail += std::abs(last_terms[k]);
    out.tail = tail;
    return out;
}

MuEnergySum spectral_mu_converged(const Configuration& config, double r,
                                  const std::function<double(int)>& weight, double rel_tol,
                                  double abs_floor, int workers) {
    const int d = config.dim();
    const double n = config.size();
    const double sigma = cap_area(d, r);
    const double omega = sphere_area(d);
    constexpr long kHardCap = 3000000;

    ZonalPairSums sums(config, workers);
    LambdaSeq lam_seq(d, r);
    std::vector<double> t_block;
    KahanSum total;
    MuEnergySum out;
    long block = 512;
    long ell = 0;
    double prev = 0.0;
    bool have_prev = false;
    double last_delta = 0.0;

    while (ell <= kHardCap) {
        const long count = std::min(block, kHardCap - ell + 1);
        t_block.clear();
        sums.advance(static_cast<int>(count), t_block);
        for (long m = 0; m < count; ++m, ++ell) {
            if (ell == 0) continue;
            const double lam = lam_seq.next();
            const double factor = lam / (n * sigma);
            const double s_ell = static_cast<double>(harmonic_dimension(d, static_cast<int>(ell))) /
                                 omega * t_block[m];
            total.add(weight(static_cast<int>(ell)) * factor * factor * s_ell);
        }
        const double cur = total.value();
        last_delta = std::abs(cur - prev);
        if (have_prev && last_delta <= std::max(rel_tol * std::abs(cur), abs_floor)) {
            out.sum = cur;
            out.L_used = static_cast<int>(ell - 1);
            out.tail = last_delta;
            return out;
        }
        prev = cur;
        have_prev = true;
        block *= 2;
    }
    throw convergence_error("spectral_mu_converged: series did not settle within the degree cap",
                            total.value());
}

}  // namespace detail

SobolevDiscrepancyResult sobolev_discrepancy(const Configuration& config, const RieszParams& params,
                                             double epsilon, double tol, int workers) {
    if (config.dim() != params.d)
        throw std::invalid_argument("sobolev_discrepancy: dimension mismatch");
    if (!(epsilon > 0.0)) throw std::invalid_argument("sobolev_discrepancy: epsilon must be positive");
    if (!(tol > 0.0)) throw std::invalid_argument("sobolev_discrepancy: tol must be positive");
    const double n = config.size();
    const double r = epsilon * std::pow(n, -1.0 / params.d);
    if (!(r <= 2.0))
        throw std::invalid_argument("sobolev_discrepancy: cap radius epsilon*N^{-1/d} exceeds 2");
    const double expo = 0.5 * (params.s - params.d);
    auto weight = [expo](int ell) {
        return std::exp(expo * std::log1p(static_cast<double>(ell) * ell));
    };
    const int L_max =
        20 * static_cast<int>(std::ceil(std::pow(n, 1.0 / params.d) / r)) + 200;
    const auto sum = detail::spectral_mu_sum(config, r, weight, tol, L_max, workers);

    SobolevDiscrepancyResult out;
    out.value = std::sqrt(std::max(sum.sum, 0.0));
    out.epsilon = epsilon;
    out.radius = r;
    out.L_used = sum.L_used;
    out.tail_estimate = out.value > 0.0 ? sum.tail / (2.0 * out.value) : sum.tail;
    return out;
}

namespace {

// Streams A_ell (lambda_ell/sigma)^2 h_ell/omega Q_ell(t) term by term with
// O(1) state; the ell = 0 term is E_s(sigma~) for every s including the log
// kernel (A_{0}/omega = E_s(sigma~), lambda_0 = sigma).
class CapSeriesStream {
public:
    CapSeriesStream(const RieszParams& params, double r, double sigma, double t)
        : params_(params), sigma_(sigma), omega_(sphere_area(params.d)),
          lam_seq_(params.d, r), q_seq_{params.d, t} {}

    double next() {
        const int ell = ell_++;
        const double q = q_seq_.next();
        if (ell == 0) return continuous_energy(params_);
        const double lam = lam_seq_.next();
        if (ell == 1) {
            a_ = riesz_eigenvalue(params_.d, params_.s, 1);
        } else {
            a_ *= params_.is_log ? (ell - 1.0) / (params_.d + ell - 1.0)
                                 : (0.5 * params_.s + ell - 1.0) / (params_.d - 0.5 * params_.s + ell - 1.0);
        }
        const double factor = lam / sigma_;
        return a_ * factor * factor *
               static_cast<double>(harmonic_dimension(params_.d, ell)) / omega_ * q;
    }

private:
    RieszParams params_;
    double sigma_;
    double omega_;
    LambdaSeq lam_seq_;
    RatioSeq q_seq_;
    double a_ = 0.0;
    int ell_ = 0;
};

double chord_from_inner(double t) { return std::sqrt(std::max(2.0 - 2.0 * t, 0.0)); }

double kernel_from_inner(const RieszParams& params, double t) {
    const double d2 = std::max(2.0 - 2.0 * t, 1e-300);
    if (params.is_log) return -0.5 * std::log(d2);
    return std::pow(d2, -0.5 * params.s);
}

}  // namespace

PairCapEvaluator::PairCapEvaluator(const RieszParams& params, double r, double tol)
    : params_(params), r_(r), tol_(tol) {
    if (!(r > 0.0 && r <= 2.0)) throw std::invalid_argument("PairCapEvaluator: r must lie in (0, 2]");
    if (!(tol > 0.0)) throw std::invalid_argument("PairCapEvaluator: tol must be positive");
    sigma_ = cap_area(params.d, r);
    theta_ = 2.0 * std::asin(0.5 * r);
}

// Product Gauss rule in the zonal frames of both caps. With f0 = R_s at the
// center distance subtracted, the integrand is smooth and small, so the
// average is f0 plus a well-conditioned correction. Node count scales with
// the separation-to-radius ratio.
double PairCapEvaluator::quadrature_route(double t) const {
    const int d = params_.d;
    const double gamma = std::acos(std::clamp(t, -1.0, 1.0));
    const double ratio = chord_from_inner(t) / r_;
    const int n = ratio >= 25.0 ? 4 : ratio >= 12.0 ? 6 : ratio >= 7.0 ? 10 : 16;
    const GaussNodes& rule = gauss_rule(n);

    const double f0 = kernel_from_inner(params_, t);
    const double cos_g = std::cos(gamma);
    const double sin_g = std::sin(gamma);

    // Precompute per-axis nodes: theta in [0, theta_], phi in [0, pi].
    std::vector<double> ct(n), st(n), wt(n), cp(n), wp(n);
    for (int i = 0; i < n; ++i) {
        const double theta = 0.5 * theta_ * (rule.node[i] + 1.0);
        ct[i] = std::cos(theta);
        st[i] = std::sin(theta);
        wt[i] = rule.weight[i] * std::pow(st[i], d - 1);
        const double phi = 0.5 * kPi * (rule.node[i] + 1.0);
        cp[i] = std::cos(phi);
        wp[i] = rule.weight[i] * std::pow(std::sin(phi), d - 2);
    }

    double num = 0.0;
    double den = 0.0;
    for (int i1 = 0; i1 < n; ++i1) {
        for (int j1 = 0; j1 < n; ++j1) {
            const double c = ct[i1] * cos_g + st[i1] * sin_g * cp[j1];  // <x, b>
            const double root = std::sqrt(std::max(1.0 - c * c, 0.0));
            const double w1 = wt[i1] * wp[j1];
            for (int i2 = 0; i2 < n; ++i2) {
                const double base = ct[i2] * c;
                const double swing = st[i2] * root;
                const double w12 = w1 * wt[i2];
                for (int j2 = 0; j2 < n; ++j2) {
                    const double m = base + swing * cp[j2];
                    const double w = w12 * wp[j2];
                    num += w * (kernel_from_inner(params_, m) - f0);
                    den += w;
                }
            }
        }
    }
    return f0 + num / den;
}

// Zonal series with degree doubling; terms decay algebraically, so equal
// consecutive partial sums at a relative tolerance bound the tail by a
// comparable amount.
double PairCapEvaluator::series_route(double t) const {
    constexpr long kHardCap = 4000000;
    CapSeriesStream stream(params_, r_, sigma_, t);
    KahanSum sum;
    long block = std::max<long>(static_cast<long>(std::ceil(16.0 / theta_)), 128);
    long ell = 0;
    double prev = 0.0;
    bool have_prev = false;
    while (ell <= kHardCap) {
        const long target = std::min(kHardCap + 1, ell + block);
        for (; ell < target; ++ell) sum.add(stream.next());
        const double cur = sum.value();
        if (have_prev && std::abs(cur - prev) <= tol_ * (std::abs(cur) + 1e-300)) return cur;
        prev = cur;
        have_prev = true;
        block *= 2;
    }
    throw convergence_error("pair_cap_energy: series did not settle within the degree cap",
                            sum.value());
}

double PairCapEvaluator::evaluate(double t) const {
    if (!(std::abs(t) <= 1.0 + 1e-12))
        throw std::invalid_argument("PairCapEvaluator::evaluate: t must lie in [-1, 1]");
    t = std::clamp(t, -1.0, 1.0);
    // Caps are disjoint when the center distance exceeds one cap diameter;
    // ask for two diameters so the integrand stays far from the singularity.
    if (chord_from_inner(t) >= 4.0 * r_) return quadrature_route(t);
    return series_route(t);
}

double pair_cap_energy(const RieszParams& params, double r, double t, double tol) {
    return PairCapEvaluator(params, r, tol).evaluate(t);
}

}  // namespace riesz
