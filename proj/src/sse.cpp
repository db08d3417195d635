#include "layoutkit/sse.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace layoutkit {

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t k) {
    if (k == 0) throw validation_error("rng_below(0)");
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % k;
}

namespace {

void shuffle_vec(std::vector<int>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng_below(rng, i)]);
}

// One pairing-model attempt; empty result when the matching is not simple.
bool try_pairing(int n, int d, std::mt19937_64& rng, std::vector<std::pair<int, int>>& out) {
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);
    shuffle_vec(stubs, rng);
    std::set<std::pair<int, int>> seen;
    out.clear();
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u == v) return false;
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) return false;
        out.emplace_back(u, v);
    }
    return true;
}

} // namespace

UGraph gen_random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1) throw validation_error("need at least one vertex");
    if (d < 0 || d >= n) throw validation_error("regular degree must satisfy 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw validation_error("n*d must be even");
    if (d == 0) return UGraph(n, {});
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int attempt = 0; attempt < 2000; ++attempt)
        if (try_pairing(n, d, rng, edges)) return UGraph(n, std::move(edges));
    throw validation_error("pairing model retries exhausted");
}

Rational PlantedInstance::max_block_expansion() const {
    Rational best(0, 1);
    for (const auto& b : blocks) {
        Rational phi = expansion(graph, b);
        if (best < phi) best = phi;
    }
    return best;
}

PlantedInstance gen_planted(int q, int block_size, int d, long long cross_edges,
                            std::uint64_t seed) {
    if (q < 1 || block_size < 1) throw validation_error("need q >= 1 and block_size >= 1");
    if (cross_edges < 0 || cross_edges % 2 != 0)
        throw validation_error("cross edge count must be even (edges move in swapped pairs)");
    if (q == 1 && cross_edges != 0)
        throw validation_error("a single block admits no cross edges");
    if (d >= block_size) throw validation_error("block degree must be below block size");
    if ((static_cast<long long>(d) * block_size) % 2 != 0)
        throw validation_error("d*block_size must be even");

    std::mt19937_64 rng(seed);
    int n = q * block_size;
    std::set<std::pair<int, int>> edge_set;
    std::vector<std::vector<std::pair<int, int>>> intra(q);
    for (int b = 0; b < q; ++b) {
        UGraph blockg = gen_random_regular(block_size, d, rng());
        for (auto [u, v] : blockg.edges()) {
            int gu = b * block_size + u, gv = b * block_size + v;
            edge_set.insert({gu, gv});
            intra[b].emplace_back(gu, gv);
        }
    }

    long long swaps = cross_edges / 2;
    for (long long t = 0; t < swaps; ++t) {
        bool done = false;
        for (int attempt = 0; attempt < 500 && !done; ++attempt) {
            int a = static_cast<int>(rng_below(rng, q));
            int b = static_cast<int>(rng_below(rng, q));
            if (a == b || intra[a].empty() || intra[b].empty()) continue;
            size_t ia = rng_below(rng, intra[a].size());
            size_t ib = rng_below(rng, intra[b].size());
            auto [u1, v1] = intra[a][ia];
            auto [u2, v2] = intra[b][ib];
            auto norm = [](int x, int y) { return x < y ? std::make_pair(x, y) : std::make_pair(y, x); };
            auto c1 = norm(u1, u2), c2 = norm(v1, v2);
            if (edge_set.count(c1) || edge_set.count(c2) || c1 == c2) continue;
            edge_set.erase(norm(u1, v1));
            edge_set.erase(norm(u2, v2));
            edge_set.insert(c1);
            edge_set.insert(c2);
            intra[a].erase(intra[a].begin() + ia);
            intra[b].erase(intra[b].begin() + ib);
            done = true;
        }
        if (!done) throw validation_error("infeasible parameter combination after bounded retries");
    }

    PlantedInstance inst;
    inst.graph = UGraph(n, {edge_set.begin(), edge_set.end()});
    inst.q = q;
    inst.block_size = block_size;
    inst.degree = d;
    inst.seed = seed;
    for (int b = 0; b < q; ++b) {
        VertexSet s(n);
        for (int j = 0; j < block_size; ++j) s.add(b * block_size + j);
        inst.blocks.push_back(s);
        inst.block_cuts.push_back(cut_edges(inst.graph, s));
    }
    long long total = 0;
    for (long long c : inst.block_cuts) total += c;
    inst.cross_edges = total / 2;
    return inst;
}

Ordering block_ordering(const PlantedInstance& inst) {
    std::vector<int> seq;
    seq.reserve(inst.graph.num_vertices());
    for (const auto& b : inst.blocks)
        for (int v : b.members()) seq.push_back(v);
    return Ordering::from_sequence(std::move(seq));
}

// ── Gaussian noise stability ────────────────────────────────────────

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double normal_quantile(double p) {
    if (p <= 0.0 || p >= 1.0) throw validation_error("quantile needs p in (0,1)");
    // Acklam's rational approximation, then Halley refinement.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double dd[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425, phigh = 1 - plow;
    double x;
    if (p < plow) {
        double u = std::sqrt(-2 * std::log(p));
        x = (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
            ((((dd[0] * u + dd[1]) * u + dd[2]) * u + dd[3]) * u + 1);
    } else if (p > phigh) {
        double u = std::sqrt(-2 * std::log(1 - p));
        x = -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
            ((((dd[0] * u + dd[1]) * u + dd[2]) * u + dd[3]) * u + 1);
    } else {
        double u = p - 0.5, t = u * u;
        x = (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * u /
            (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1);
    }
    for (int it = 0; it < 2; ++it) {
        double e = normal_cdf(x) - p;
        double u = e * std::sqrt(2 * M_PI) * std::exp(x * x / 2);
        x = x - u / (1 + x * u / 2);
    }
    return x;
}

namespace {

double phi_density(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2 * M_PI); }

template <typename F>
double adaptive_simpson(F f, double lo, double hi, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
    double mid = 0.5 * (lo + hi);
    double lm = 0.5 * (lo + mid), rm = 0.5 * (mid + hi);
    double flm = f(lm), frm = f(rm);
    double left = (mid - lo) / 6 * (fa + 4 * flm + fm);
    double right = (hi - mid) / 6 * (fm + 4 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15 * tol)
        return left + right + (left + right - whole) / 15;
    return adaptive_simpson(f, lo, mid, fa, flm, fm, left, tol / 2, depth - 1) +
           adaptive_simpson(f, mid, hi, fm, frm, fb, right, tol / 2, depth - 1);
}

template <typename F>
double integrate(F f, double lo, double hi, double tol) {
    double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    double whole = (hi - lo) / 6 * (fa + 4 * fm + fb);
    return adaptive_simpson(f, lo, hi, fa, fm, fb, whole, tol, 48);
}

} // namespace

double gamma_rho(double rho, double mu) {
    if (rho < -1.0 || rho > 1.0) throw validation_error("rho must lie in [-1,1]");
    if (mu < 0.0 || mu > 1.0) throw validation_error("mu must lie in [0,1]");
    if (mu == 0.0) return 0.0;
    if (mu == 1.0) return 1.0;
    if (rho == 1.0) return mu;
    if (rho == -1.0) return std::max(0.0, 2 * mu - 1);
    double h = normal_quantile(mu);
    double s = std::sqrt(1 - rho * rho);
    auto f = [&](double x) { return phi_density(x) * normal_cdf((h - rho * x) / s); };
    double lo = std::min(h, 0.0) - 12.0;
    return integrate(f, lo, h, 1e-12);
}

double no_case_bound(double eps, double gamma, double mu) {
    if (mu <= 0.0) throw validation_error("mu must be positive");
    return 1.0 - (gamma_rho(1.0 - eps / 2.0, mu) + gamma) / mu;
}

GammaFactReport check_gamma_fact(const std::vector<double>& eps_grid,
                                 const std::vector<double>& mu_grid) {
    GammaFactReport rep;
    bool first = true;
    for (double eps : eps_grid) {
        for (double mu : mu_grid) {
            double g = gamma_rho(1.0 - eps, mu);
            double c = (1.0 - g / mu) / std::sqrt(eps);
            if (first || c < rep.c_witness) {
                rep.c_witness = c;
                rep.worst_eps = eps;
                rep.worst_mu = mu;
                first = false;
            }
        }
    }
    rep.positive = !first && rep.c_witness > 0.0;
    return rep;
}

} // namespace layoutkit
