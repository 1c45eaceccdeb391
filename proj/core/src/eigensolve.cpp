#include "pulsefront/eigensolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pulsefront/errors.hpp"

namespace pulsefront {

namespace {

using ld = long double;

constexpr long kIterationCap = 200000;
constexpr double kVectorTol = 1e-13;

// Cyclic tridiagonal discretization of the unit-cell operator. The first
// derivative terms are folded as 2 L lam a phi' + L lam a' phi
// = L lam [(a phi)' + a phi'], so no explicit a' is ever needed and the
// stencil stays second order for every profile kind:
//   sub_i  = a_{i-1/2}/h^2 - L lam (a_{i-1}+a_i)/(2h)
//   sup_i  = a_{i+1/2}/h^2 + L lam (a_{i+1}+a_i)/(2h)
//   diag_i = -(a_{i+1/2}+a_{i-1/2})/h^2 + L^2 lam^2 a_i + L^2 mu_i
// The skew part is exactly transposed under lam -> -lam, so the discrete
// eigenvalue inherits the evenness identity of the continuous problem.
struct Stencil {
  int n = 0;
  std::vector<ld> sub, diag, sup;

  void apply(const std::vector<ld>& v, std::vector<ld>& out) const {
    const int m = n;
    out[0] = diag[0] * v[0] + sup[0] * v[1] + sub[0] * v[m - 1];
    for (int i = 1; i < m - 1; ++i)
      out[i] = sub[i] * v[i - 1] + diag[i] * v[i] + sup[i] * v[i + 1];
    out[m - 1] = sub[m - 1] * v[m - 2] + diag[m - 1] * v[m - 1] + sup[m - 1] * v[0];
  }
};

Stencil assemble(const ProfilePair& p, double lambda, double L, int n) {
  Stencil st;
  st.n = n;
  st.sub.resize(n);
  st.diag.resize(n);
  st.sup.resize(n);

  const double h = 1.0 / n;
  const bool a_piecewise = p.a.kind() == ProfileKind::PiecewiseConstant;
  // Non-smooth growth rates (jumps or interpolation kinks off the eigen
  // grid) are cell-averaged onto the nodes; the averages tile the period,
  // which keeps the discrete k(0,L) >= <mu>_A identity exact.
  const bool mu_averaged = p.mu.kind() == ProfileKind::PiecewiseConstant ||
                           p.mu.kind() == ProfileKind::Grid;

  std::vector<ld> a_node(n), mu_node(n), a_half(n);  // a_half[i] = a_{i+1/2}
  for (int i = 0; i < n; ++i) {
    const double xi = i * h;
    a_node[i] = a_piecewise ? p.a.mean_on(xi - 0.5 * h, xi + 0.5 * h) : p.a(xi);
    mu_node[i] = mu_averaged ? p.mu.mean_on(xi - 0.5 * h, xi + 0.5 * h) : p.mu(xi);
    a_half[i] = a_piecewise ? p.a.harmonic_mean_on(xi, xi + h) : p.a(xi + 0.5 * h);
  }

  const ld inv_h2 = static_cast<ld>(1.0) / (static_cast<ld>(h) * h);
  const ld conv = static_cast<ld>(L) * lambda / (2.0L * h);
  const ld zoa = static_cast<ld>(L) * L * lambda * lambda;
  const ld L2 = static_cast<ld>(L) * L;
  for (int i = 0; i < n; ++i) {
    const int im = (i + n - 1) % n;
    const int ip = (i + 1) % n;
    st.sub[i] = a_half[im] * inv_h2 - conv * (a_node[im] + a_node[i]);
    st.sup[i] = a_half[i] * inv_h2 + conv * (a_node[ip] + a_node[i]);
    st.diag[i] = -(a_half[i] + a_half[im]) * inv_h2 + zoa * a_node[i] + L2 * mu_node[i];
  }
  return st;
}

// Thomas solve of the cyclic system (sigma I - M) x = rhs via
// Sherman-Morrison on the wrap-around corners.
class ShiftedSolver {
public:
  ShiftedSolver(const Stencil& st, ld sigma) : n_(st.n) {
    d_.resize(n_);
    lo_.resize(n_);
    up_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      d_[i] = sigma - st.diag[i];
      lo_[i] = -st.sub[i];
      up_[i] = -st.sup[i];
    }
    corner_top_ = lo_[0];       // (0, n-1) entry
    corner_bot_ = up_[n_ - 1];  // (n-1, 0) entry
    gamma_ = -d_[0];

    dmod_ = d_;
    dmod_[0] -= gamma_;
    dmod_[n_ - 1] -= corner_top_ * corner_bot_ / gamma_;

    // q solves T' q = u with u = (gamma, 0, ..., corner_bot).
    std::vector<ld> u(n_, 0.0L);
    u[0] = gamma_;
    u[n_ - 1] = corner_bot_;
    q_.resize(n_);
    thomas(u, q_);
    vq_ = q_[0] + corner_top_ / gamma_ * q_[n_ - 1];
  }

  void solve(const std::vector<ld>& rhs, std::vector<ld>& x) const {
    thomas(rhs, x);
    const ld vy = x[0] + corner_top_ / gamma_ * x[n_ - 1];
    const ld factor = vy / (1.0L + vq_);
    for (int i = 0; i < n_; ++i) x[i] -= factor * q_[i];
  }

private:
  void thomas(const std::vector<ld>& rhs, std::vector<ld>& x) const {
    scratch_c_.resize(n_);
    ld beta = dmod_[0];
    x[0] = rhs[0] / beta;
    for (int i = 1; i < n_; ++i) {
      scratch_c_[i] = up_[i - 1] / beta;
      beta = dmod_[i] - lo_[i] * scratch_c_[i];
      x[i] = (rhs[i] - lo_[i] * x[i - 1]) / beta;
    }
    for (int i = n_ - 2; i >= 0; --i) x[i] -= scratch_c_[i + 1] * x[i + 1];
  }

  int n_;
  std::vector<ld> d_, lo_, up_, dmod_, q_;
  ld corner_top_ = 0.0L, corner_bot_ = 0.0L, gamma_ = 0.0L, vq_ = 0.0L;
  mutable std::vector<ld> scratch_c_;
};

ld dot_h(const std::vector<ld>& u, const std::vector<ld>& v, ld h) {
  ld s = 0.0L;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s * h;
}

struct SolveOutcome {
  ld k_tilde = 0.0L;
  std::vector<ld> phi;
  ld residual_sup = 0.0L;  // sup-norm of M phi - ktilde phi
  long iterations = 0;
};

// Perron pair of the assembled stencil. A power-iteration warmup on the
// nonnegative matrix B = I + tau M settles the iterate into the positive
// cone and yields a Rayleigh estimate; shifted-inverse iterations with
// sigma > ktilde then contract at a mesh-independent rate. Both operators
// are nonnegative and irreducible (off-diagonals of M >= 0, checked at
// assembly), so positivity of the iterate certifies the Perron pair.
SolveOutcome perron_pair(const Stencil& st, const ProfilePair& profiles,
                         double L, const std::vector<double>* guess) {
  const int n = st.n;
  const ld h = 1.0L / n;

  for (int i = 0; i < n; ++i) {
    if (st.sub[i] < 0.0L || st.sup[i] < 0.0L)
      throw PerronFailure(
          "off-diagonal entries lost nonnegativity; grid too coarse for the "
          "requested lambda*L (n=" + std::to_string(n) + ")");
  }

  // tau = 0.45 h^2 / alpha_2, halved until the diagonal of I + tau M stays
  // positive; off-diagonal nonnegativity is the grid condition checked above.
  const double alpha2 = profiles.a.max_value();
  ld tau = 0.45L * h * h / alpha2;
  {
    ld min_diag = std::numeric_limits<ld>::max();
    for (int i = 0; i < n; ++i) min_diag = std::min(min_diag, st.diag[i]);
    while (1.0L + tau * min_diag <= 0.0L) tau *= 0.5L;
  }

  std::vector<ld> v(n, 1.0L), w(n), mv(n);
  if (guess && static_cast<int>(guess->size()) == n) {
    bool positive = true;
    for (double g : *guess) positive = positive && g > 0.0;
    if (positive)
      for (int i = 0; i < n; ++i) v[i] = (*guess)[i];
  }
  {
    const ld nrm = std::sqrt(dot_h(v, v, h));
    for (auto& x : v) x /= nrm;
  }

  long iterations = 0;
  bool converged = false;
  ld k_now = 0.0L, res_now = 0.0L;

  auto step_change = [&](const std::vector<ld>& a, const std::vector<ld>& b) {
    ld c = 0.0L;
    for (int i = 0; i < n; ++i) c = std::max(c, std::fabs(a[i] - b[i]));
    return c;
  };
  // Rayleigh quotient plus the residual contract: the result may only be
  // reported once sup|M v - ktilde v| <= 1e-10 max(1, |k|).
  auto contract_holds = [&]() {
    st.apply(v, mv);
    k_now = dot_h(v, mv, h);
    res_now = 0.0L;
    for (int i = 0; i < n; ++i)
      res_now = std::max(res_now, std::fabs(mv[i] - k_now * v[i]));
    const ld k_phys = std::fabs(k_now) / (static_cast<ld>(L) * L);
    return res_now <= 1e-10L * std::max<ld>(1.0L, k_phys);
  };

  // Phase 1: power iteration on B = I + tau M.
  const long warmup = (guess != nullptr) ? 40 : 250;
  for (long it = 0; it < warmup && !converged; ++it, ++iterations) {
    st.apply(v, mv);
    for (int i = 0; i < n; ++i) w[i] = v[i] + tau * mv[i];
    const ld nrm = std::sqrt(dot_h(w, w, h));
    if (!(nrm > 0.0L)) throw PerronFailure("power iterate collapsed to zero");
    for (auto& x : w) x /= nrm;
    bool positive = true;
    for (int i = 0; i < n; ++i) positive = positive && w[i] > 0.0L;
    if (!positive)
      throw PerronFailure("positivity of the power iterate was lost");
    const bool settled = step_change(v, w) < kVectorTol;
    v.swap(w);
    if (settled) converged = contract_holds();
  }
  st.apply(v, mv);
  ld k_est = dot_h(v, mv, h);

  // Phase 2: shifted-inverse refinement, sigma held above ktilde. The
  // resolvent of an M-matrix is nonnegative, so the iterate stays in the
  // Perron cone whenever sigma really is above the principal eigenvalue;
  // a sign flip means the shift dipped below it and must back off.
  ld delta = std::max<ld>(1e-2L, 1e-3L * std::fabs(k_est));
  int rebuilds = 0;
  while (!converged) {
    ShiftedSolver solver(st, k_est + delta);
    bool sigma_ok = true;
    while (!converged) {
      if (++iterations > kIterationCap)
        throw NonConvergence("eigen iteration cap " +
                             std::to_string(kIterationCap) + " exceeded");
      solver.solve(v, w);
      ld nrm = std::sqrt(dot_h(w, w, h));
      if (!(nrm > 0.0L) || !std::isfinite(static_cast<double>(nrm))) {
        sigma_ok = false;
        break;
      }
      for (auto& x : w) x /= nrm;
      bool positive = true;
      for (int i = 0; i < n; ++i) positive = positive && w[i] > 0.0L;
      if (!positive) {
        sigma_ok = false;
        break;
      }
      const bool settled = step_change(v, w) < kVectorTol;
      v.swap(w);
      if (settled) converged = contract_holds();
    }
    if (!sigma_ok) {
      if (++rebuilds > 80)
        throw PerronFailure("could not find a positivity-preserving shift");
      delta *= 4.0L;
      st.apply(v, mv);
      k_est = dot_h(v, mv, h);
      continue;
    }
  }

  SolveOutcome out;
  out.k_tilde = k_now;
  out.iterations = iterations;
  out.residual_sup = res_now;
  out.phi = std::move(v);
  return out;
}

EigenResult solve_once(const EigenRequest& req, const EigenOptions& opts, int n) {
  const Stencil st = assemble(req.profiles, req.lambda, req.L, n);
  SolveOutcome sol = perron_pair(st, req.profiles, req.L, opts.initial_guess);

  const double L2 = req.L * req.L;
  EigenResult res;
  res.n = n;
  res.iterations = sol.iterations;
  res.k_tilde = static_cast<double>(sol.k_tilde);
  res.k = static_cast<double>(sol.k_tilde / L2);
  res.residual = static_cast<double>(sol.residual_sup);
  if (req.lambda == 0.0) res.rho1 = -res.k;

  res.phi.resize(n);
  for (int i = 0; i < n; ++i) res.phi[i] = static_cast<double>(sol.phi[i]);
  return res;
}

}  // namespace

void EigenRequest::validate() const {
  if (!(L > 0.0) || !std::isfinite(L)) throw InvalidRequest("L must be > 0");
  if (!std::isfinite(lambda)) throw InvalidRequest("lambda must be finite");
  if (n < 16 || (n & (n - 1)) != 0)
    throw InvalidRequest("grid size n must be a power of two >= 16");
}

EigenResult principal_eigenvalue(const EigenRequest& req, const EigenOptions& opts) {
  req.validate();
  if (!opts.auto_refine || req.n < 32) return solve_once(req, opts, req.n);

  int n = req.n;
  EigenResult coarse = solve_once(req, opts, n / 2);
  EigenResult fine = solve_once(req, opts, n);
  // Order-2 scheme: the Richardson error estimate of the fine value is a
  // third of the grid-to-grid difference.
  while (std::abs(fine.k - coarse.k) / 3.0 >
             opts.rel_tol * std::max(1.0, std::abs(fine.k)) &&
         2 * n <= opts.max_n) {
    n *= 2;
    coarse = std::move(fine);
    fine = solve_once(req, opts, n);
  }
  return fine;
}

double rho1(const ProfilePair& profiles, double L, int n) {
  EigenRequest req{profiles, 0.0, L, n};
  return *principal_eigenvalue(req).rho1;
}

}  // namespace pulsefront
