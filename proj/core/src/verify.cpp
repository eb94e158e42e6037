// Copyright 2026 The csgeom Authors
// SPDX-License-Identifier: Apache-2.0

#include "csgeom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "csgeom/combinatorics.hpp"
#include "csgeom/rng.hpp"

namespace csgeom {
namespace verify {

namespace {

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string fmt_complex(const Complex& z) {
    std::string s = fmt(z.real());
    s += (z.imag() < 0.0 ? "-" : "+");
    s += fmt(std::abs(z.imag()));
    s += "i";
    return s;
}

std::string point_str(const ChartPoint& z) {
    std::string s;
    for (std::size_t r = 0; r < z.rows(); ++r) {
        if (r) s += ";";
        for (std::size_t c = 0; c < z.cols(); ++c) {
            if (c) s += ",";
            s += fmt_complex(z(r, c));
        }
    }
    return s;
}

struct TrialMax {
    double err = -std::numeric_limits<double>::infinity();
    long long idx = -1;
};

template <class F>
TrialMax max_over_trials(long long trials, int threads, F&& f) {
    if (trials < 1) throw std::invalid_argument("campaign: trials must be >= 1");
    if (threads < 1) threads = 1;
    auto scan = [&f](long long lo, long long hi) {
        TrialMax m;
        for (long long i = lo; i < hi; ++i) {
            const double e = f(i);
            if (e > m.err) {
                m.err = e;
                m.idx = i;
            }
        }
        return m;
    };
    if (threads == 1 || trials < 4 * threads) return scan(0, trials);
    const long long chunk = (trials + threads - 1) / threads;
    std::vector<std::future<TrialMax>> futures;
    for (int t = 0; t < threads; ++t) {
        const long long lo = t * chunk;
        const long long hi = std::min(trials, lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    TrialMax best;
    for (auto& fu : futures) {
        const TrialMax m = fu.get();
        if (m.err > best.err || (m.err == best.err && m.idx < best.idx)) best = m;
    }
    return best;
}

struct PairSample {
    ChartPoint z1, z2;
};

PairSample sample_pair(const Model& model, std::uint64_t seed, long long trial) {
    RngStream rng(seed, static_cast<std::uint64_t>(trial));
    PairSample p{sample_point(model, rng), sample_point(model, rng)};
    return p;
}

template <class ErrFn, class WitnessFn>
CheckReport run_check(std::string check, std::string model, long long trials, std::uint64_t seed,
                      double tol, int threads, ErrFn&& err_fn, WitnessFn&& witness_fn) {
    const TrialMax tm = max_over_trials(trials, threads, err_fn);
    CheckReport r;
    r.check = std::move(check);
    r.model = std::move(model);
    r.trials = trials;
    r.seed = seed;
    r.tolerance = tol;
    r.max_abs_error = std::max(0.0, tm.err);
    r.pass = r.max_abs_error <= tol;
    if (!r.pass) r.witnesses.push_back(witness_fn(tm.idx));
    return r;
}

void require_compact(const Model& model, const char* who) {
    if (!is_compact(model))
        throw std::invalid_argument(std::string(who) + ": compact models only");
}

/// Unit ray in C^dim from the trial's stream.
CVector random_ray(int dim, RngStream& rng) {
    CVector v(static_cast<std::size_t>(dim));
    for (Complex& x : v) x = rng.complex_gaussian();
    return normalized(v);
}

int level1_dim(const Model& model) {
    if (const auto* cp = std::get_if<ProjSpace>(&model)) return cp->n + 1;
    if (const auto* gr = std::get_if<Grassmann>(&model)) return gr->n;
    throw std::invalid_argument("level1_dim: compact models only");
}

/// Diagonal of the level-m torus energy on the section basis: exponent-
/// weighted sums for cp, subset sums for gr.
std::vector<double> induced_diagonal(const Model& model, const std::vector<double>& h) {
    std::vector<double> diag;
    if (const auto* cp = std::get_if<ProjSpace>(&model)) {
        for (const auto& exps : monomial_exponents(cp->n + 1, cp->m)) {
            double s = 0.0;
            for (std::size_t i = 0; i < exps.size(); ++i) s += exps[i] * h[i];
            diag.push_back(s);
        }
    } else {
        const auto& gr = std::get<Grassmann>(model);
        for (const auto& subset : k_subsets(gr.n, gr.k)) {
            double s = 0.0;
            for (int i : subset) s += h[static_cast<std::size_t>(i)];
            diag.push_back(s);
        }
    }
    return diag;
}

/// Section vector of the chart point after relocating the chart by a
/// level-1 unitary acting on the homogeneous/frame coordinates.
CVector located_section(const Model& model, const CMatrix& v, const ChartPoint& z) {
    if (const auto* cp = std::get_if<ProjSpace>(&model)) {
        CVector u(static_cast<std::size_t>(cp->n) + 1);
        u[0] = 1.0;
        for (int i = 0; i < cp->n; ++i) u[static_cast<std::size_t>(i) + 1] = z(0, static_cast<std::size_t>(i));
        CVector ur(u.size());
        for (std::size_t j = 0; j < u.size(); ++j) {
            Complex s = 0.0;
            for (std::size_t k = 0; k < u.size(); ++k) s += u[k] * v(k, j);
            ur[j] = s;
        }
        return veronese_map(ur, cp->m);
    }
    const auto& gr = std::get<Grassmann>(model);
    CMatrix a(static_cast<std::size_t>(gr.k), static_cast<std::size_t>(gr.n));
    for (int r = 0; r < gr.k; ++r) {
        a(static_cast<std::size_t>(r), static_cast<std::size_t>(r)) = 1.0;
        for (int c = 0; c < gr.n - gr.k; ++c)
            a(static_cast<std::size_t>(r), static_cast<std::size_t>(gr.k + c)) =
                z(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
    return minor_map(a * v);
}

double section_energy(const CVector& w, const std::vector<double>& diag) {
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        const double p = std::norm(w[j]);
        num += diag[j] * p;
        den += p;
    }
    return num / den;
}

CMatrix random_unitary(int n, RngStream& rng) {
    CMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (Complex& x : g.data()) x = rng.complex_gaussian();
    return orthonormalize_columns(g);
}

/// Permutation relocation that carries the torus fixed point with the given
/// index into the chart origin.
CMatrix fixed_point_relocation(const Model& model, std::size_t fp_index) {
    const int amb = level1_dim(model);
    CMatrix v(static_cast<std::size_t>(amb), static_cast<std::size_t>(amb));
    if (std::holds_alternative<ProjSpace>(model)) {
        std::vector<int> rows(static_cast<std::size_t>(amb));
        for (int i = 0; i < amb; ++i) rows[static_cast<std::size_t>(i)] = i;
        std::swap(rows[0], rows[fp_index]);
        for (int i = 0; i < amb; ++i) v(static_cast<std::size_t>(i), static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])) = 1.0;
        return v;
    }
    const auto& gr = std::get<Grassmann>(model);
    const auto subsets = k_subsets(gr.n, gr.k);
    const std::vector<int>& s = subsets[fp_index];
    std::vector<bool> taken(static_cast<std::size_t>(amb), false);
    std::vector<int> rows;
    for (int i : s) {
        rows.push_back(i);
        taken[static_cast<std::size_t>(i)] = true;
    }
    for (int i = 0; i < amb; ++i)
        if (!taken[static_cast<std::size_t>(i)]) rows.push_back(i);
    for (int i = 0; i < amb; ++i) v(static_cast<std::size_t>(i), static_cast<std::size_t>(rows[static_cast<std::size_t>(i)])) = 1.0;
    return v;
}

struct MinimizeResult {
    std::vector<double> x;
    double value = 0.0;
    bool converged = false;
};

/// Plain gradient descent with central-difference gradients and Armijo
/// backtracking. Good enough for the smooth desk-scale energies here.
template <class F>
MinimizeResult minimize_fd(F&& f, std::vector<double> x, double gtol, int max_iters) {
    const double h = 1e-6;
    const std::size_t n = x.size();
    std::vector<double> g(n), xn(n), q(n);
    double fx = f(x);
    double alpha = 1.0;
    for (int it = 0; it < max_iters; ++it) {
        q = x;
        double gmax = 0.0, g2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = x[i] + h;
            const double fp = f(q);
            q[i] = x[i] - h;
            const double fm = f(q);
            q[i] = x[i];
            g[i] = (fp - fm) / (2.0 * h);
            gmax = std::max(gmax, std::abs(g[i]));
            g2 += g[i] * g[i];
        }
        if (gmax <= gtol) return {std::move(x), fx, true};
        double a = alpha;
        bool stepped = false;
        for (int bt = 0; bt < 60; ++bt) {
            for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] - a * g[i];
            const double fn = f(xn);
            if (fn <= fx - 1e-4 * a * g2) {
                x = xn;
                fx = fn;
                alpha = std::min(2.0 * a, 1e3);
                stepped = true;
                break;
            }
            a *= 0.5;
        }
        // Stalled below finite-difference resolution: accept when the
        // gradient is already near the target, otherwise give up.
        if (!stepped) return {std::move(x), fx, gmax <= 100.0 * gtol};
    }
    return {std::move(x), fx, false};
}

/// Gaussian elimination with partial pivoting; false on a (near-)singular
/// system.
bool solve_real(std::vector<std::vector<double>> a, std::vector<double> b,
                std::vector<double>& out) {
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (std::abs(a[r][k]) > std::abs(a[piv][k])) piv = r;
        if (std::abs(a[piv][k]) < 1e-14) return false;
        std::swap(a[piv], a[k]);
        std::swap(b[piv], b[k]);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = a[r][k] / a[k][k];
            for (std::size_t c = k; c < n; ++c) a[r][c] -= f * a[k][c];
            b[r] -= f * b[k];
        }
    }
    out.assign(n, 0.0);
    for (std::size_t k = n; k-- > 0;) {
        double s = b[k];
        for (std::size_t c = k + 1; c < n; ++c) s -= a[k][c] * out[c];
        out[k] = s / a[k][k];
    }
    return true;
}

template <class F>
std::vector<double> fd_gradient(F&& f, const std::vector<double>& x, double h) {
    std::vector<double> g(x.size()), q = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
        q[i] = x[i] + h;
        const double fp = f(q);
        q[i] = x[i] - h;
        const double fm = f(q);
        q[i] = x[i];
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

/// Newton refinement of a near-critical point. Gradient descent stalls at
/// the finite-difference noise floor, which is coarser than the 1e-6
/// deduplication radius; a few Newton steps on the finite-difference
/// Hessian push the residual down to ~1e-9.
template <class F>
void newton_polish(F&& f, std::vector<double>& x, double gscale) {
    const std::size_t n = x.size();
    const double hh = 1e-4;
    for (int iter = 0; iter < 8; ++iter) {
        const std::vector<double> g = fd_gradient(f, x, 1e-6);
        double gmax = 0.0;
        for (double v : g) gmax = std::max(gmax, std::abs(v));
        if (gmax <= 1e-10 * gscale) return;
        const double f0 = f(x);
        std::vector<std::vector<double>> hess(n, std::vector<double>(n, 0.0));
        std::vector<double> q = x;
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = x[i] + hh;
            const double fp = f(q);
            q[i] = x[i] - hh;
            const double fm = f(q);
            q[i] = x[i];
            hess[i][i] = (fp - 2.0 * f0 + fm) / (hh * hh);
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                q[i] = x[i] + hh;
                q[j] = x[j] + hh;
                const double fpp = f(q);
                q[j] = x[j] - hh;
                const double fpm = f(q);
                q[i] = x[i] - hh;
                const double fmm = f(q);
                q[j] = x[j] + hh;
                const double fmp = f(q);
                q[i] = x[i];
                q[j] = x[j];
                hess[i][j] = hess[j][i] = (fpp - fpm - fmp + fmm) / (4.0 * hh * hh);
            }
        std::vector<double> rhs(n), step;
        for (std::size_t i = 0; i < n; ++i) rhs[i] = -g[i];
        if (!solve_real(hess, rhs, step)) return;
        double smax = 0.0;
        for (double v : step) smax = std::max(smax, std::abs(v));
        if (smax > 0.3) return;  // not in the basin, leave the point alone
        for (std::size_t i = 0; i < n; ++i) x[i] += step[i];
    }
}

std::vector<double> pack(const ChartPoint& z) {
    std::vector<double> x(2 * z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
        x[2 * j] = z.data()[j].real();
        x[2 * j + 1] = z.data()[j].imag();
    }
    return x;
}

ChartPoint unpack(std::size_t rows, std::size_t cols, const std::vector<double>& x) {
    ChartPoint z(rows, cols);
    for (std::size_t j = 0; j < z.size(); ++j) z.data()[j] = Complex{x[2 * j], x[2 * j + 1]};
    return z;
}

/// Exact maximum clique by Bron-Kerbosch with pivoting.
void bron_kerbosch(const std::vector<std::vector<bool>>& adj, std::vector<int>& r,
                   std::vector<int> p, std::vector<int> x, std::vector<int>& best) {
    if (p.empty() && x.empty()) {
        if (r.size() > best.size()) best = r;
        return;
    }
    int pivot = -1;
    std::size_t best_deg = 0;
    for (const auto& pool : {p, x})
        for (int v : pool) {
            std::size_t deg = 0;
            for (int u : p)
                if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) ++deg;
            if (pivot < 0 || deg > best_deg) {
                pivot = v;
                best_deg = deg;
            }
        }
    std::vector<int> candidates;
    for (int v : p)
        if (!adj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)]) candidates.push_back(v);
    for (int v : candidates) {
        std::vector<int> p2, x2;
        for (int u : p)
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) p2.push_back(u);
        for (int u : x)
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) x2.push_back(u);
        r.push_back(v);
        bron_kerbosch(adj, r, std::move(p2), std::move(x2), best);
        r.pop_back();
        p.erase(std::find(p.begin(), p.end(), v));
        x.push_back(v);
    }
}

}  // namespace

EnergyFunction default_energy(const Model& model) {
    require_compact(model, "default_energy");
    EnergyFunction ef;
    ef.model = model;
    const int amb = level1_dim(model);
    for (int i = 1; i <= amb; ++i) ef.h.push_back(static_cast<double>(i));
    return ef;
}

void validate_energy(const EnergyFunction& ef) {
    require_compact(ef.model, "EnergyFunction");
    if (ef.h.size() != static_cast<std::size_t>(level1_dim(ef.model)))
        throw std::invalid_argument("EnergyFunction: h must match the level-1 ambient dimension");
    for (std::size_t i = 0; i + 1 < ef.h.size(); ++i)
        if (!(ef.h[i] < ef.h[i + 1]))
            throw std::invalid_argument("EnergyFunction: entries must be strictly increasing");
}

CheckReport check_cauchy(const Model& model, long long trials, std::uint64_t seed, double tol,
                         int threads) {
    require_compact(model, "check_cauchy");
    auto eval = [&](long long i) {
        const PairSample p = sample_pair(model, seed, i);
        const Complex o = overlap(model, p.z1, p.z2);
        const EmbeddedVector w1 = iota(model, p.z1);
        const EmbeddedVector w2 = iota(model, p.z2);
        const Complex ip = hermitian_inner(w1.vec, w2.vec) / (norm2(w1.vec) * norm2(w2.vec));
        return std::abs(o - ip);
    };
    auto witness = [&](long long i) {
        const PairSample p = sample_pair(model, seed, i);
        return "trial=" + std::to_string(i) + " z1=(" + point_str(p.z1) + ") z2=(" +
               point_str(p.z2) + ") err=" + fmt(eval(i));
    };
    return run_check("cauchy", model_name(model), trials, seed, tol, threads, eval, witness);
}

CheckReport check_cauchy_angle(const Model& model, long long trials, std::uint64_t seed,
                               double tol, int threads) {
    require_compact(model, "check_cauchy_angle");
    auto eval = [&](long long i) {
        const PairSample p = sample_pair(model, seed, i);
        const double lhs = clamped_arccos(std::min(1.0, std::abs(overlap(model, p.z1, p.z2))));
        const double rhs = cayley_distance(iota(model, p.z1), iota(model, p.z2));
        return std::abs(lhs - rhs);
    };
    auto witness = [&](long long i) {
        const PairSample p = sample_pair(model, seed, i);
        return "trial=" + std::to_string(i) + " z1=(" + point_str(p.z1) + ") z2=(" +
               point_str(p.z2) + ") err=" + fmt(eval(i));
    };
    return run_check("cauchy_angle", model_name(model), trials, seed, tol, threads, eval, witness);
}

CheckReport check_diastasis(const Model& model, long long trials, std::uint64_t seed, double tol,
                            int threads) {
    const bool compact = is_compact(model);
    auto eval = [&](long long i) {
        const PairSample p = sample_pair(model, seed, i);
        const double d = diastasis(model, p.z1, p.z2);
        if (compact) {
            const double theta = cayley_distance(iota(model, p.z1), iota(model, p.z2));
            return std::abs(d + 2.0 * std::log(std::cos(theta)));
        }
        const Disc& disc = std::get<Disc>(model);
        const double delta = pseudo_distance(disc, p.z1, p.z2);
        double err = std::abs(std::exp(-d / 2.0) * std::cosh(delta) - 1.0);
        if (disc.twok == 1) {
            const EmbeddedVector l1 = iota_lorentz(disc, p.z1);
            const EmbeddedVector l2 = iota_lorentz(disc, p.z2);
            const double num = std::abs(hermitian_inner(l1.vec, l2.vec, Signature::Lorentz));
            const double den =
                std::sqrt(hermitian_inner(l1.vec, l1.vec, Signature::Lorentz).real() *
                          hermitian_inner(l2.vec, l2.vec, Signature::Lorentz).real());
            const double delta_lorentz = std::acosh(std::max(1.0, num / den));
            err = std::max(err, std::abs(delta - delta_lorentz));
        }
        return err;
    };
    auto witness = [&](long long i) {
        const PairSample p = sample_pair(model, seed, i);
        return "trial=" + std::to_string(i) + " z1=(" + point_str(p.z1) + ") z2=(" +
               point_str(p.z2) + ") err=" + fmt(eval(i));
    };
    return run_check("diastasis", model_name(model), trials, seed, tol, threads, eval, witness);
}

CheckReport check_two_point_homogeneity(const Model& model, long long trials, std::uint64_t seed,
                                        double bin_width, int threads) {
    require_compact(model, "check_two_point_homogeneity");
    if (trials < 1) throw std::invalid_argument("check_two_point_homogeneity: trials must be >= 1");
    if (!(bin_width > 0.0)) throw std::invalid_argument("check_two_point_homogeneity: bad bin width");

    std::vector<double> dist(static_cast<std::size_t>(trials));
    std::vector<double> ov(static_cast<std::size_t>(trials));
    auto fill = [&](long long lo, long long hi) {
        for (long long i = lo; i < hi; ++i) {
            const PairSample p = sample_pair(model, seed, i);
            dist[static_cast<std::size_t>(i)] = intrinsic_distance(model, p.z1, p.z2);
            ov[static_cast<std::size_t>(i)] = std::abs(overlap(model, p.z1, p.z2));
        }
    };
    if (threads > 1 && trials >= 4 * threads) {
        const long long chunk = (trials + threads - 1) / threads;
        std::vector<std::future<void>> futures;
        for (int t = 0; t < threads; ++t) {
            const long long lo = t * chunk;
            const long long hi = std::min(trials, lo + chunk);
            if (lo >= hi) break;
            futures.push_back(std::async(std::launch::async, fill, lo, hi));
        }
        for (auto& fu : futures) fu.get();
    } else {
        fill(0, trials);
    }

    std::map<long long, std::vector<std::size_t>> bins;
    for (std::size_t i = 0; i < dist.size(); ++i)
        bins[static_cast<long long>(std::floor(dist[i] / bin_width))].push_back(i);

    double max_spread = 0.0;
    long long worst_bin = 0;
    std::size_t worst_count = 0;
    for (const auto& [key, members] : bins) {
        if (members.size() < 2) continue;
        double mx = 0.0, my = 0.0;
        for (std::size_t i : members) {
            mx += dist[i];
            my += ov[i];
        }
        mx /= static_cast<double>(members.size());
        my /= static_cast<double>(members.size());
        double sxx = 0.0, sxy = 0.0;
        for (std::size_t i : members) {
            sxx += (dist[i] - mx) * (dist[i] - mx);
            sxy += (dist[i] - mx) * (ov[i] - my);
        }
        const double slope = sxx < 1e-20 ? 0.0 : sxy / sxx;
        double rmin = std::numeric_limits<double>::infinity();
        double rmax = -rmin;
        for (std::size_t i : members) {
            const double resid = ov[i] - (my + slope * (dist[i] - mx));
            rmin = std::min(rmin, resid);
            rmax = std::max(rmax, resid);
        }
        const double spread = rmax - rmin;
        if (spread > max_spread) {
            max_spread = spread;
            worst_bin = key;
            worst_count = members.size();
        }
    }

    CheckReport r;
    r.check = "homogeneity";
    r.model = model_name(model);
    r.trials = trials;
    r.seed = seed;
    r.tolerance = 1e-6;
    r.max_abs_error = max_spread;

    std::string family_witness;
    if (const auto* gr = std::get_if<Grassmann>(&model); gr && gr->k == 2 && gr->n - gr->k >= 2) {
        // Equal-distance family with unequal overlaps: principal angles
        // (a, 0) against (a/sqrt2, a/sqrt2) at a = 0.8.
        const double a0 = 0.8;
        const auto pa = construct_subspace_pair(*gr, {a0, 0.0});
        const auto pb = construct_subspace_pair(*gr, {a0 / std::numbers::sqrt2, a0 / std::numbers::sqrt2});
        const double da = intrinsic_distance(model, pa.first, pa.second);
        const double db = intrinsic_distance(model, pb.first, pb.second);
        const double oa = std::abs(overlap(model, pa.first, pa.second));
        const double ob = std::abs(overlap(model, pb.first, pb.second));
        if (std::abs(da - db) <= 1e-12) {
            const double gap = std::abs(oa - ob);
            r.max_abs_error = std::max(r.max_abs_error, gap);
            family_witness = "constructed family a=0.8: delta1=" + fmt(da) + " delta2=" + fmt(db) +
                             " |delta1-delta2|=" + fmt(std::abs(da - db)) +
                             " overlap gap=" + fmt(gap);
        }
    }

    r.pass = r.max_abs_error <= r.tolerance;
    if (!r.pass) {
        r.witnesses.push_back("worst bin [" + fmt(static_cast<double>(worst_bin) * bin_width) +
                              "," + fmt(static_cast<double>(worst_bin + 1) * bin_width) +
                              ") points=" + std::to_string(worst_count) +
                              " detrended spread=" + fmt(max_spread));
        if (!family_witness.empty()) r.witnesses.push_back(family_witness);
    }
    return r;
}

CheckReport check_geodesic_additivity(int dim, long long trials, std::uint64_t seed, double tol,
                                      int threads) {
    if (dim < 2) throw std::invalid_argument("check_geodesic_additivity: dim must be >= 2");
    auto draw_pair = [&](long long i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        const CVector u1 = random_ray(dim, rng);
        CVector u2 = random_ray(dim, rng);
        // near-orthogonal rays have no unique geodesic; redraw
        int guard = 0;
        while (std::abs(hermitian_inner(u1, u2)) < 1e-6 && ++guard < 64) u2 = random_ray(dim, rng);
        return std::pair{EmbeddedVector{u1, Signature::Definite},
                         EmbeddedVector{u2, Signature::Definite}};
    };
    auto eval = [&](long long i) {
        const auto [w1, w2] = draw_pair(i);
        const double rho = wick_distance(w1, w2);
        double err = 0.0;
        for (int step = 1; step <= 9; ++step) {
            const double t = 0.1 * step;
            const EmbeddedVector g = ray_geodesic_point(w1, w2, t);
            err = std::max(err, std::abs(rho - wick_distance(w1, g) - wick_distance(g, w2)));
        }
        return err;
    };
    auto witness = [&](long long i) {
        return "trial=" + std::to_string(i) + " err=" + fmt(eval(i));
    };
    return run_check("geodesic", "rays:dim=" + std::to_string(dim), trials, seed, tol, threads,
                     eval, witness);
}

CheckReport check_anandan_aharonov(int dim, long long trials, std::uint64_t seed, double tol,
                                   int threads) {
    if (dim < 2) throw std::invalid_argument("check_anandan_aharonov: dim must be >= 2");
    auto eval = [&](long long i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        const CVector u1 = random_ray(dim, rng);
        const CVector u2 = random_ray(dim, rng);
        const double p = std::norm(hermitian_inner(u1, u2));
        const double rho = study_distance({u1, Signature::Definite}, {u2, Signature::Definite});
        const double c = std::cos(rho / 2.0);
        return std::abs(p - c * c);
    };
    auto witness = [&](long long i) {
        return "trial=" + std::to_string(i) + " err=" + fmt(eval(i));
    };
    return run_check("anandan", "rays:dim=" + std::to_string(dim), trials, seed, tol, threads,
                     eval, witness);
}

CheckReport check_bargmann_bounds(int dim, long long trials, std::uint64_t seed, double tol,
                                  int threads) {
    if (dim < 2) throw std::invalid_argument("check_bargmann_bounds: dim must be >= 2");
    const double lower_factor = 2.0 * std::numbers::sqrt2 / std::numbers::pi;
    auto eval = [&](long long i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        const EmbeddedVector w1{random_ray(dim, rng), Signature::Definite};
        const EmbeddedVector w2{random_ray(dim, rng), Signature::Definite};
        const double dc = cayley_distance(w1, w2);
        const double db = bargmann_distance(w1, w2);
        return std::max({0.0, db - dc, lower_factor * dc - db});
    };
    auto witness = [&](long long i) {
        return "trial=" + std::to_string(i) + " violation=" + fmt(eval(i));
    };
    return run_check("bargmann", "rays:dim=" + std::to_string(dim), trials, seed, tol, threads,
                     eval, witness);
}

CheckReport check_injectivity(const Model& model, long long trials, std::uint64_t seed,
                              int threads) {
    require_compact(model, "check_injectivity");
    const int expected_rank = chart_dim(model);
    auto draw = [&](long long i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        const ChartPoint z1 = sample_point(model, rng);
        ChartPoint z2 = sample_point(model, rng);
        int guard = 0;
        while (frobenius_distance(z1, z2) <= 1e-4 && ++guard < 64) z2 = sample_point(model, rng);
        return std::pair{z1, z2};
    };
    auto eval = [&](long long i) {
        const auto [z1, z2] = draw(i);
        const double image_sep = cayley_distance(iota(model, z1), iota(model, z2));
        const bool ok = image_sep > 1e-8 && differential_rank(model, z1) == expected_rank &&
                        differential_rank(model, z2) == expected_rank;
        return ok ? 0.0 : 1.0;
    };
    auto witness = [&](long long i) {
        const auto [z1, z2] = draw(i);
        return "trial=" + std::to_string(i) + " z1=(" + point_str(z1) + ") z2=(" + point_str(z2) +
               ") image separation=" + fmt(cayley_distance(iota(model, z1), iota(model, z2))) +
               " rank=(" + std::to_string(differential_rank(model, z1)) + "," +
               std::to_string(differential_rank(model, z2)) + ")";
    };
    return run_check("injectivity", model_name(model), trials, seed, 0.0, threads, eval, witness);
}

MorseResult morse_count(const EnergyFunction& ef, int starts, std::uint64_t seed) {
    validate_energy(ef);
    const auto fps = fixed_points(ef.model);
    if (starts < 20 * static_cast<int>(fps.size()))
        throw std::invalid_argument("morse_count: starts must be >= 20 * expected critical count");

    const std::vector<double> diag = induced_diagonal(ef.model, ef.h);
    const double hscale = std::max(1.0, ef.h.back() - ef.h.front());
    const double gtol = 1e-8 * hscale;
    const int amb = level1_dim(ef.model);

    std::vector<CVector> accepted;
    auto try_accept = [&](const CVector& w) {
        const CVector u = normalized(w);
        for (const CVector& c : accepted)
            if (cayley_distance({u, Signature::Definite}, {c, Signature::Definite}) <= 1e-6) return;
        accepted.push_back(u);
    };

    // chart shape
    std::size_t rows = 1, cols = 1;
    if (const auto* cp = std::get_if<ProjSpace>(&ef.model)) {
        rows = 1;
        cols = static_cast<std::size_t>(cp->n);
    } else {
        const auto& gr = std::get<Grassmann>(ef.model);
        rows = static_cast<std::size_t>(gr.k);
        cols = static_cast<std::size_t>(gr.n - gr.k);
    }

    int discarded = 0;
    auto descend = [&](const CMatrix& v, const ChartPoint& z0) {
        auto f = [&](const std::vector<double>& x) {
            return section_energy(located_section(ef.model, v, unpack(rows, cols, x)), diag);
        };
        MinimizeResult res = minimize_fd(f, pack(z0), gtol, 10000);
        if (!res.converged) {
            ++discarded;
            return;
        }
        newton_polish(f, res.x, hscale);
        const std::vector<double> g = fd_gradient(f, res.x, 1e-6);
        double gmax = 0.0;
        for (double v2 : g) gmax = std::max(gmax, std::abs(v2));
        if (gmax > 1e-6 * hscale) {  // stalled short of an actual critical point
            ++discarded;
            return;
        }
        try_accept(located_section(ef.model, v, unpack(rows, cols, res.x)));
    };

    for (std::size_t i = 0; i < fps.size(); ++i)
        descend(fixed_point_relocation(ef.model, i), ChartPoint(rows, cols));
    for (int s = 0; s < starts; ++s) {
        RngStream rng(seed, 1000000ULL + static_cast<std::uint64_t>(s));
        const CMatrix v = random_unitary(amb, rng);
        descend(v, sample_point(ef.model, rng));
    }
    return {static_cast<int>(accepted.size()), discarded, starts};
}

int max_orthogonal_set(const Model& model, int augment_trials, std::uint64_t seed) {
    require_compact(model, "max_orthogonal_set");
    if (augment_trials < 0) throw std::invalid_argument("max_orthogonal_set: negative trials");
    const auto fps = fixed_points(model);
    const int n = static_cast<int>(fps.size());

    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool orth = std::abs(hermitian_inner(fps[static_cast<std::size_t>(i)].vec,
                                                       fps[static_cast<std::size_t>(j)].vec)) < 1e-9;
            adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = orth;
            adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = orth;
        }
    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
    std::vector<int> best, r;
    bron_kerbosch(adj, r, all, {}, best);

    std::vector<CVector> clique;
    for (int i : best) clique.push_back(fps[static_cast<std::size_t>(i)].vec);

    std::size_t rows = 1, cols = 1;
    if (const auto* cp = std::get_if<ProjSpace>(&model)) {
        rows = 1;
        cols = static_cast<std::size_t>(cp->n);
    } else {
        const auto& gr = std::get<Grassmann>(model);
        rows = static_cast<std::size_t>(gr.k);
        cols = static_cast<std::size_t>(gr.n - gr.k);
    }
    const int amb = level1_dim(model);

    for (int t = 0; t < augment_trials; ++t) {
        RngStream rng(seed, 2000000ULL + static_cast<std::uint64_t>(t));
        const CMatrix v = random_unitary(amb, rng);
        const ChartPoint z0 = sample_point(model, rng);
        auto f = [&](const std::vector<double>& x) {
            const CVector w = located_section(model, v, unpack(rows, cols, x));
            double s = 0.0, den = 0.0;
            for (const Complex& c : w) den += std::norm(c);
            for (const CVector& member : clique) s += std::norm(hermitian_inner(w, member));
            return s / den;
        };
        const MinimizeResult res = minimize_fd(f, pack(z0), 1e-10, 10000);
        const CVector w = normalized(located_section(model, v, unpack(rows, cols, res.x)));
        bool orth_to_all = true;
        for (const CVector& member : clique)
            if (std::abs(hermitian_inner(w, member)) >= 1e-9) {
                orth_to_all = false;
                break;
            }
        if (orth_to_all) clique.push_back(w);
    }
    return static_cast<int>(clique.size());
}

int minimal_n(const Model& model, long long samples, std::uint64_t seed) {
    require_compact(model, "minimal_n");
    if (samples < 3LL * embedding_dim(model))
        throw std::invalid_argument("minimal_n: need samples >= 3 * embedding dimension");
    std::vector<CVector> vs;
    vs.reserve(static_cast<std::size_t>(samples));
    for (long long i = 0; i < samples; ++i) {
        RngStream rng(seed, static_cast<std::uint64_t>(i));
        vs.push_back(iota(model, sample_point(model, rng)).vec);
    }
    return numerical_rank(vs, 1e-8);
}

SevenNumbersReport seven_numbers(const Model& model, const FlagSpec& flag, std::uint64_t seed) {
    require_compact(model, "seven_numbers");
    validate_flag_spec(flag);
    const FlagSpec want = flag_spec_for(model);
    if (flag.type != want.type || flag.rank != want.rank || flag.crossed != want.crossed ||
        flag.weight != want.weight)
        throw std::invalid_argument("seven_numbers: model/flag pairing mismatch, expected " +
                                    want.to_string());

    SevenNumbersReport r;
    r.model = model_name(model);
    r.flag = flag.to_string();
    r.seed = seed;
    r.n1_max_orthogonal = max_orthogonal_set(model, 48, seed);
    r.n2_sections = section_count(model);
    r.n3_bwb_dim = weyl_dimension(flag);
    r.n4_minimal_n = minimal_n(model, 3LL * embedding_dim(model), seed);
    const int fp_count = static_cast<int>(fixed_points(model).size());
    r.n5_morse_count = morse_count(default_energy(model), 20 * fp_count, seed).count;
    r.n6_euler_char = euler_characteristic(flag);
    r.n7_cell_count = schubert_cell_count(flag);
    r.all_equal = r.n1_max_orthogonal == r.n2_sections && r.n2_sections == r.n3_bwb_dim &&
                  r.n3_bwb_dim == r.n4_minimal_n && r.n4_minimal_n == r.n5_morse_count &&
                  r.n5_morse_count == r.n6_euler_char && r.n6_euler_char == r.n7_cell_count;
    r.method = {
        "exact max clique over torus fixed points, then randomized extension (lower bound)",
        "explicit enumeration of the monomial/minor section basis",
        "Weyl dimension formula in exact rational arithmetic",
        "rank of the span of sampled section images",
        "multistart gradient descent on the torus energy, deduplicated critical points",
        "Weyl group order quotient |W| / |W_Levi|",
        "coset partition of the explicitly generated Weyl group",
    };
    return r;
}

}  // namespace verify
}  // namespace csgeom
