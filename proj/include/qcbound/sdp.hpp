#ifndef QCBOUND_SDP_HPP
#define QCBOUND_SDP_HPP

// Dense primal-dual interior-point solver for block-diagonal real symmetric
// SDPs in standard form
//
//   min <C, X>  s.t.  <A_i, X> = b_i,  X >= 0
//   max b.y     s.t.  sum_i y_i A_i + Z = C,  Z >= 0
//
// with Nesterov-Todd scaling and a Mehrotra predictor-corrector step. Data
// matrices are given as sparse entry lists; an entry (r, c, w) stands for the
// functional w * X_rc, i.e. the symmetric matrix w (E_rc + E_cr) / 2.

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qcbound/linalg.hpp"

namespace qcbound::sdp {

struct Entry {
  int block = 0;
  int row = 0;
  int col = 0;
  double weight = 0.0;
};

using Functional = std::vector<Entry>;

struct Constraint {
  Functional terms;
  double rhs = 0.0;
};

enum class Sense { Minimize, Maximize };

struct Problem {
  std::vector<int> blocks;
  Functional objective;
  std::vector<Constraint> constraints;
  Sense sense = Sense::Minimize;

  int add_block(int n) {
    if (n < 1) throw DimensionError("sdp::Problem: block dimension must be positive");
    blocks.push_back(n);
    return static_cast<int>(blocks.size()) - 1;
  }

  void add_constraint(Functional terms, double rhs) {
    constraints.push_back({std::move(terms), rhs});
  }

  void validate() const {
    auto check = [&](const Functional& f, const char* what) {
      for (const Entry& e : f) {
        if (e.block < 0 || e.block >= static_cast<int>(blocks.size())) {
          throw DimensionError(std::string("sdp::Problem: ") + what + " references unknown block");
        }
        const int n = blocks[e.block];
        if (e.row < 0 || e.col < 0 || e.row >= n || e.col >= n) {
          throw DimensionError(std::string("sdp::Problem: ") + what + " entry out of range");
        }
        if (!std::isfinite(e.weight)) {
          throw DomainError(std::string("sdp::Problem: ") + what + " has a non-finite weight");
        }
      }
    };
    if (blocks.empty()) throw DimensionError("sdp::Problem: no blocks");
    check(objective, "objective");
    for (const Constraint& c : constraints) {
      check(c.terms, "constraint");
      if (!std::isfinite(c.rhs)) throw DomainError("sdp::Problem: non-finite right-hand side");
    }
  }
};

/// Dense symmetric block of a functional (entries summed, symmetrized).
inline RealMatrix dense_block(const Functional& f, int block, int n) {
  RealMatrix m = RealMatrix::Zero(n, n);
  for (const Entry& e : f) {
    if (e.block != block) continue;
    m(e.row, e.col) += 0.5 * e.weight;
    m(e.col, e.row) += 0.5 * e.weight;
  }
  return m;
}

inline double evaluate(const Functional& f, const std::vector<RealMatrix>& x) {
  double acc = 0.0;
  for (const Entry& e : f) acc += e.weight * x[e.block](e.row, e.col);
  return acc;
}

struct Options {
  double gap_tol = 1e-7;
  double feas_tol = 1e-8;
  int max_iter = 200;
};

enum class Status { Optimal, Infeasible, DualInfeasible, MaxIter };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Optimal: return "optimal";
    case Status::Infeasible: return "infeasible";
    case Status::DualInfeasible: return "dual_infeasible";
    case Status::MaxIter: return "max_iter";
  }
  return "unknown";
}

struct IterationRecord {
  int iteration = 0;
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double relative_gap = 0.0;
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  double mu = 0.0;
  double primal_step = 0.0;
  double dual_step = 0.0;
};

/// Values are reported in the problem's own sense: for Maximize the dual
/// value is an upper bound on the primal value.
struct Solution {
  Status status = Status::MaxIter;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;  // relative |primal - dual| / (1 + |primal| + |dual|)
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  int iterations = 0;
  std::vector<RealMatrix> primal_matrix;
  RealVector dual_vector;
  std::vector<RealMatrix> dual_slack;
  std::vector<IterationRecord> log;

  [[nodiscard]] bool optimal() const { return status == Status::Optimal; }
};

inline std::string format_log(const std::vector<IterationRecord>& log) {
  std::ostringstream os;
  os.precision(6);
  os << "iter  pobj  dobj  gap  pinf  dinf  mu  ap  ad\n";
  for (const auto& r : log) {
    os << r.iteration << "  " << r.primal_objective << "  " << r.dual_objective << "  "
       << r.relative_gap << "  " << r.primal_infeasibility << "  " << r.dual_infeasibility << "  "
       << r.mu << "  " << r.primal_step << "  " << r.dual_step << "\n";
  }
  return os.str();
}

namespace detail {

struct Coef {
  int row;
  int col;
  double w;
};

struct BlockPart {
  int con;
  std::vector<Coef> coefs;
};

// Canonical form of the problem: entries merged with row <= col, every
// constraint row scaled to unit Frobenius norm, objective negated for max.
struct Canonical {
  std::vector<int> n;
  int m = 0;
  std::vector<std::vector<BlockPart>> by_block;                  // block -> parts
  std::vector<std::vector<std::pair<int, std::vector<Coef>>>> by_con;  // con -> (block, coefs)
  std::vector<RealMatrix> c;
  RealVector b;
  RealVector row_scale;  // original row = row_scale * canonical row
};

inline std::map<std::pair<int, std::pair<int, int>>, double> merge(const Functional& f) {
  std::map<std::pair<int, std::pair<int, int>>, double> acc;
  for (const Entry& e : f) {
    const int r = std::min(e.row, e.col);
    const int c = std::max(e.row, e.col);
    acc[{e.block, {r, c}}] += e.weight;
  }
  return acc;
}

inline Canonical canonicalize(const Problem& p) {
  Canonical k;
  k.n = p.blocks;
  k.m = static_cast<int>(p.constraints.size());
  const int nb = static_cast<int>(p.blocks.size());
  k.by_block.assign(nb, {});
  k.by_con.assign(k.m, {});
  k.b.resize(k.m);
  k.row_scale.resize(k.m);
  const double sign = p.sense == Sense::Maximize ? -1.0 : 1.0;
  k.c.resize(nb);
  for (int blk = 0; blk < nb; ++blk) k.c[blk] = sign * dense_block(p.objective, blk, p.blocks[blk]);

  for (int i = 0; i < k.m; ++i) {
    const auto merged = merge(p.constraints[i].terms);
    double norm2 = 0.0;
    for (const auto& [key, w] : merged) {
      norm2 += key.second.first == key.second.second ? w * w : 0.5 * w * w;
    }
    const double norm = std::sqrt(norm2);
    if (!(norm > 0.0)) {
      throw DomainError("sdp::solve: constraint " + std::to_string(i) + " is identically zero");
    }
    k.row_scale(i) = norm;
    k.b(i) = p.constraints[i].rhs / norm;
    std::map<int, std::vector<Coef>> parts;
    for (const auto& [key, w] : merged) {
      if (w == 0.0) continue;
      parts[key.first].push_back({key.second.first, key.second.second, w / norm});
    }
    for (auto& [blk, coefs] : parts) {
      k.by_block[blk].push_back({i, coefs});
      k.by_con[i].emplace_back(blk, std::move(coefs));
    }
  }
  return k;
}

inline RealVector apply_a(const Canonical& k, const std::vector<RealMatrix>& x) {
  RealVector out = RealVector::Zero(k.m);
  for (int i = 0; i < k.m; ++i) {
    double acc = 0.0;
    for (const auto& [blk, coefs] : k.by_con[i]) {
      for (const Coef& c : coefs) acc += c.w * x[blk](c.row, c.col);
    }
    out(i) = acc;
  }
  return out;
}

inline std::vector<RealMatrix> apply_at(const Canonical& k, const RealVector& y) {
  std::vector<RealMatrix> out(k.n.size());
  for (std::size_t blk = 0; blk < k.n.size(); ++blk) {
    out[blk] = RealMatrix::Zero(k.n[blk], k.n[blk]);
    for (const BlockPart& part : k.by_block[blk]) {
      const double yi = y(part.con);
      for (const Coef& c : part.coefs) {
        out[blk](c.row, c.col) += 0.5 * yi * c.w;
        out[blk](c.col, c.row) += 0.5 * yi * c.w;
      }
    }
  }
  return out;
}

inline double inner(const std::vector<RealMatrix>& a, const std::vector<RealMatrix>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].cwiseProduct(b[i]).sum();
  return acc;
}

inline double frob(const std::vector<RealMatrix>& a) { return std::sqrt(inner(a, a)); }

// Schur complement M_ij = <A_i, W A_j W>, accumulated over blocks from the
// sparse entries of both constraints.
inline RealMatrix schur(const Canonical& k, const std::vector<RealMatrix>& w) {
  RealMatrix m = RealMatrix::Zero(k.m, k.m);
  for (std::size_t blk = 0; blk < k.n.size(); ++blk) {
    const RealMatrix& wb = w[blk];
    const auto& parts = k.by_block[blk];
    const std::size_t np = parts.size();
    for (std::size_t a = 0; a < np; ++a) {
      const auto& fa = parts[a].coefs;
      for (std::size_t bb = a; bb < np; ++bb) {
        const auto& fb = parts[bb].coefs;
        double acc = 0.0;
        for (const Coef& f : fa) {
          for (const Coef& e : fb) {
            acc += f.w * e.w *
                   (wb(f.row, e.row) * wb(e.col, f.col) + wb(f.row, e.col) * wb(e.row, f.col));
          }
        }
        acc *= 0.5;
        const int i = parts[a].con;
        const int j = parts[bb].con;
        m(i, j) += acc;
        if (i != j) m(j, i) += acc;
      }
    }
  }
  return m;
}

struct Scaling {
  RealMatrix g;      // X = G D G^T, Z = G^{-T} D G^{-1}
  RealMatrix g_inv;  // G^{-1}
  RealVector d;
  RealMatrix w;      // G G^T
  RealMatrix lx;     // Cholesky factor of X
  RealMatrix lz;     // Cholesky factor of Z
};

inline bool cholesky(const RealMatrix& a, RealMatrix& l) {
  Eigen::LLT<RealMatrix> llt(a);
  if (llt.info() != Eigen::Success) return false;
  l = llt.matrixL();
  return l.allFinite() && l.diagonal().minCoeff() > 0.0;
}

inline bool nt_scaling(const RealMatrix& x, const RealMatrix& z, Scaling& s) {
  if (!cholesky(x, s.lx) || !cholesky(z, s.lz)) return false;
  const RealMatrix rl = s.lz.transpose() * s.lx;
  Eigen::BDCSVD<RealMatrix> svd(rl, Eigen::ComputeFullU | Eigen::ComputeFullV);
  s.d = svd.singularValues();
  if (!(s.d.minCoeff() > 0.0)) return false;
  const RealVector dinv_sqrt = s.d.cwiseSqrt().cwiseInverse();
  s.g = s.lx * svd.matrixV() * dinv_sqrt.asDiagonal();
  // G^{-1} = D^{1/2} V^T L^{-1}
  const RealMatrix linv =
      s.lx.triangularView<Eigen::Lower>().solve(RealMatrix::Identity(x.rows(), x.cols()));
  s.g_inv = s.d.cwiseSqrt().asDiagonal() * svd.matrixV().transpose() * linv;
  s.w = s.g * s.g.transpose();
  s.w = 0.5 * (s.w + s.w.transpose()).eval();
  return s.g.allFinite() && s.g_inv.allFinite();
}

// Largest step a <= inf with x + a dx >= 0, given the Cholesky factor of x.
inline double max_step(const RealMatrix& l, const RealMatrix& dx) {
  const auto tri = l.triangularView<Eigen::Lower>();
  RealMatrix t = tri.solve(dx);
  t = tri.solve(t.transpose()).transpose();
  t = 0.5 * (t + t.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<RealMatrix> es(t, Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues()(0);
  if (lmin >= 0.0) return 1e30;
  return -1.0 / lmin;
}

class SchurSolver {
 public:
  explicit SchurSolver(const RealMatrix& m) : m_(m) {
    const double scale = std::max(1.0, m.diagonal().cwiseAbs().maxCoeff());
    double reg = 0.0;
    for (int attempt = 0; attempt < 8; ++attempt) {
      RealMatrix a = m_;
      if (reg > 0.0) a.diagonal().array() += reg;
      llt_.compute(a);
      if (llt_.info() == Eigen::Success && llt_.matrixLLT().diagonal().minCoeff() > 0.0) {
        ok_ = true;
        return;
      }
      reg = reg == 0.0 ? 1e-14 * scale : reg * 100.0;
    }
  }
  [[nodiscard]] bool ok() const { return ok_; }
  [[nodiscard]] RealVector solve(const RealVector& r) const { return llt_.solve(r); }

 private:
  RealMatrix m_;
  Eigen::LLT<RealMatrix> llt_;
  bool ok_ = false;
};

struct Direction {
  std::vector<RealMatrix> dx;
  std::vector<RealMatrix> dz;
  RealVector dy;
};

inline Direction newton(const Canonical& k, const SchurSolver& solver,
                        const std::vector<Scaling>& sc, const RealVector& rp,
                        const std::vector<RealMatrix>& rd, const std::vector<RealMatrix>& rc) {
  const std::size_t nb = k.n.size();
  std::vector<RealMatrix> tmp(nb);
  for (std::size_t b = 0; b < nb; ++b) tmp[b] = rc[b] - sc[b].w * rd[b] * sc[b].w;
  Direction dir;
  dir.dy = solver.solve(rp - apply_a(k, tmp));
  const auto aty = apply_at(k, dir.dy);
  dir.dz.resize(nb);
  dir.dx.resize(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    dir.dz[b] = rd[b] - aty[b];
    dir.dx[b] = rc[b] - sc[b].w * dir.dz[b] * sc[b].w;
    dir.dx[b] = 0.5 * (dir.dx[b] + dir.dx[b].transpose()).eval();
    dir.dz[b] = 0.5 * (dir.dz[b] + dir.dz[b].transpose()).eval();
  }
  return dir;
}

}  // namespace detail

/// Solves p; deterministic for fixed input. Throws NumericalError (with the
/// iteration log) when the scaling or the Schur complement breaks down.
inline Solution solve(const Problem& p, const Options& opts = {}) {
  using namespace detail;
  p.validate();
  const Canonical k = canonicalize(p);
  const std::size_t nb = k.n.size();
  int ntot = 0;
  for (int n : k.n) ntot += n;

  // Interior start scaled to the data.
  std::vector<RealMatrix> x(nb), z(nb);
  RealVector y = RealVector::Zero(k.m);
  for (std::size_t blk = 0; blk < nb; ++blk) {
    const double n = k.n[blk];
    double xi = std::max(10.0, std::sqrt(n));
    double eta = std::max({10.0, std::sqrt(n), k.c[blk].norm()});
    for (const BlockPart& part : k.by_block[blk]) {
      double an = 0.0;
      for (const Coef& c : part.coefs) an += c.row == c.col ? c.w * c.w : 0.5 * c.w * c.w;
      an = std::sqrt(an);
      xi = std::max(xi, n * (1.0 + std::abs(k.b(part.con))) / (1.0 + an));
      eta = std::max(eta, an);
    }
    x[blk] = xi * RealMatrix::Identity(k.n[blk], k.n[blk]);
    z[blk] = eta * RealMatrix::Identity(k.n[blk], k.n[blk]);
  }

  const double b_norm = k.b.norm();
  const double c_norm = frob(k.c);
  Solution sol;
  double gamma = 0.9;
  int stalled = 0;

  auto finish = [&](Status st) {
    const double sign = p.sense == Sense::Maximize ? -1.0 : 1.0;
    sol.status = st;
    sol.primal_value = sign * inner(k.c, x);
    sol.dual_value = sign * k.b.dot(y);
    sol.primal_matrix = x;
    sol.dual_slack = z;
    // Undo row scaling: original A_i = s_i * canonical A_i, so y_orig = y / s.
    sol.dual_vector = sign * y.cwiseQuotient(k.row_scale);
    return sol;
  };

  for (int it = 0; it <= opts.max_iter; ++it) {
    const RealVector rp = k.b - apply_a(k, x);
    const auto aty = apply_at(k, y);
    std::vector<RealMatrix> rd(nb);
    for (std::size_t b = 0; b < nb; ++b) rd[b] = k.c[b] - z[b] - aty[b];
    const double pobj = inner(k.c, x);
    const double dobj = k.b.dot(y);
    const double mu = inner(x, z) / ntot;
    IterationRecord rec;
    rec.iteration = it;
    rec.primal_objective = pobj;
    rec.dual_objective = dobj;
    rec.relative_gap = std::abs(pobj - dobj) / (1.0 + std::abs(pobj) + std::abs(dobj));
    rec.primal_infeasibility = rp.norm() / (1.0 + b_norm);
    rec.dual_infeasibility = frob(rd) / (1.0 + c_norm);
    rec.mu = mu;
    sol.iterations = it;
    sol.gap = rec.relative_gap;
    sol.primal_infeasibility = rec.primal_infeasibility;
    sol.dual_infeasibility = rec.dual_infeasibility;

    if (!std::isfinite(pobj) || !std::isfinite(dobj) || !std::isfinite(mu)) {
      sol.log.push_back(rec);
      throw NumericalError("sdp::solve: non-finite iterate\n" + format_log(sol.log));
    }
    if (rec.relative_gap <= opts.gap_tol && rec.primal_infeasibility <= opts.feas_tol &&
        rec.dual_infeasibility <= opts.feas_tol) {
      sol.log.push_back(rec);
      return finish(Status::Optimal);
    }
    // Farkas-type certificates: b.y > 0 with A^T y + Z ~ 0 proves primal
    // infeasibility; <C,X> < 0 with A(X) ~ 0 proves dual infeasibility.
    {
      std::vector<RealMatrix> atyz(nb);
      for (std::size_t b = 0; b < nb; ++b) atyz[b] = aty[b] + z[b];
      if (dobj > 0.0 && frob(atyz) / dobj < opts.feas_tol) {
        sol.log.push_back(rec);
        return finish(Status::Infeasible);
      }
      const RealVector ax = apply_a(k, x);
      if (pobj < 0.0 && ax.norm() / (-pobj) < opts.feas_tol) {
        sol.log.push_back(rec);
        return finish(Status::DualInfeasible);
      }
    }
    if (it == opts.max_iter || stalled >= 5) {
      sol.log.push_back(rec);
      break;
    }

    std::vector<Scaling> sc(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      if (!nt_scaling(x[b], z[b], sc[b])) {
        sol.log.push_back(rec);
        throw NumericalError("sdp::solve: lost positive definiteness in block " +
                             std::to_string(b) + "\n" + format_log(sol.log));
      }
    }
    std::vector<RealMatrix> w(nb);
    for (std::size_t b = 0; b < nb; ++b) w[b] = sc[b].w;
    const SchurSolver solver(schur(k, w));
    if (!solver.ok()) {
      sol.log.push_back(rec);
      throw NumericalError("sdp::solve: Schur complement factorization failed\n" +
                           format_log(sol.log));
    }

    // Predictor (affine scaling).
    std::vector<RealMatrix> rc(nb);
    for (std::size_t b = 0; b < nb; ++b) rc[b] = -x[b];
    const Direction aff = newton(k, solver, sc, rp, rd, rc);
    double ap = 1.0, ad = 1.0;
    for (std::size_t b = 0; b < nb; ++b) {
      ap = std::min(ap, max_step(sc[b].lx, aff.dx[b]));
      ad = std::min(ad, max_step(sc[b].lz, aff.dz[b]));
    }
    double mu_aff = 0.0;
    for (std::size_t b = 0; b < nb; ++b) {
      mu_aff += (x[b] + ap * aff.dx[b]).cwiseProduct(z[b] + ad * aff.dz[b]).sum();
    }
    mu_aff /= ntot;
    const double ratio = std::clamp(mu_aff / mu, 0.0, 1.0);
    const double sigma = ratio * ratio * ratio;

    // Corrector in the NT-scaled space, where X and Z both become D.
    for (std::size_t b = 0; b < nb; ++b) {
      const RealMatrix dxs = sc[b].g_inv * aff.dx[b] * sc[b].g_inv.transpose();
      const RealMatrix dzs = sc[b].g.transpose() * aff.dz[b] * sc[b].g;
      const RealMatrix prod = dxs * dzs;
      RealMatrix rhs = -0.5 * (prod + prod.transpose());
      const RealVector& d = sc[b].d;
      for (int i = 0; i < d.size(); ++i) rhs(i, i) += sigma * mu - d(i) * d(i);
      RealMatrix s(d.size(), d.size());
      for (int j = 0; j < d.size(); ++j) {
        for (int i = 0; i < d.size(); ++i) s(i, j) = 2.0 * rhs(i, j) / (d(i) + d(j));
      }
      rc[b] = sc[b].g * s * sc[b].g.transpose();
    }
    const Direction dir = newton(k, solver, sc, rp, rd, rc);
    double sp = 1e30, sd = 1e30;
    for (std::size_t b = 0; b < nb; ++b) {
      sp = std::min(sp, max_step(sc[b].lx, dir.dx[b]));
      sd = std::min(sd, max_step(sc[b].lz, dir.dz[b]));
    }
    const double alpha_p = std::min(1.0, gamma * sp);
    const double alpha_d = std::min(1.0, gamma * sd);
    for (std::size_t b = 0; b < nb; ++b) {
      x[b] += alpha_p * dir.dx[b];
      z[b] += alpha_d * dir.dz[b];
    }
    y += alpha_d * dir.dy;
    rec.primal_step = alpha_p;
    rec.dual_step = alpha_d;
    sol.log.push_back(rec);
    gamma = 0.9 + 0.09 * std::min(alpha_p, alpha_d);
    stalled = (alpha_p < 1e-8 && alpha_d < 1e-8) ? stalled + 1 : 0;
  }
  return finish(Status::MaxIter);
}

// ---------------------------------------------------------------------------
// Hermitian variables through the real embedding.

/// [[Re h, -Im h], [Im h, Re h]]; its spectrum is that of h, doubled.
inline RealMatrix embed_hermitian(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw DimensionError("embed_hermitian: matrix must be square");
  if (!is_hermitian(h)) throw DomainError("embed_hermitian: matrix is not Hermitian");
  const int n = static_cast<int>(h.rows());
  RealMatrix y(2 * n, 2 * n);
  const RealMatrix re = h.real();
  const RealMatrix im = h.imag();
  y.topLeftCorner(n, n) = re;
  y.bottomRightCorner(n, n) = re;
  y.topRightCorner(n, n) = -im;
  y.bottomLeftCorner(n, n) = im;
  return 0.5 * (y + y.transpose());
}

/// The Hermitian matrix a PSD embedding variable Y represents: the average
/// over the two copies, which is PSD whenever Y is.
inline ComplexMatrix extract_hermitian(const RealMatrix& y) {
  const int n = static_cast<int>(y.rows()) / 2;
  const RealMatrix re = 0.5 * (y.topLeftCorner(n, n) + y.bottomRightCorner(n, n));
  const RealMatrix im = 0.5 * (y.bottomLeftCorner(n, n) - y.topRightCorner(n, n));
  ComplexMatrix h(n, n);
  h.real() = re;
  h.imag() = im;
  return hermitian_part(h);
}

/// n x n Hermitian variable stored as a 2n x 2n real block.
struct HermitianVar {
  int block = 0;
  int n = 0;

  /// coeff * Re H_pq
  void add_re(Functional& f, int p, int q, double coeff) const {
    f.push_back({block, p, q, 0.5 * coeff});
    f.push_back({block, n + p, n + q, 0.5 * coeff});
  }
  /// coeff * Im H_pq
  void add_im(Functional& f, int p, int q, double coeff) const {
    if (p == q) return;
    f.push_back({block, n + p, q, 0.5 * coeff});
    f.push_back({block, p, n + q, -0.5 * coeff});
  }
  void add_trace(Functional& f, double coeff) const {
    for (int p = 0; p < n; ++p) add_re(f, p, p, coeff);
  }
};

inline HermitianVar add_hermitian(Problem& p, int n) { return {p.add_block(2 * n), n}; }

/// Real part of the (p, q) entry constraint on a linear combination of
/// Hermitian entries; helper for "for all p <= q" constraint families.
struct EntryConstraintSet {
  // Visits every independent real coordinate of an n x n Hermitian matrix:
  // the real parts for p <= q and the imaginary parts for p < q.
  template <typename Fn>
  static void for_each(int n, Fn&& fn) {
    for (int p = 0; p < n; ++p) {
      for (int q = p; q < n; ++q) {
        fn(p, q, false);
        if (p < q) fn(p, q, true);
      }
    }
  }
};

inline double component(const ComplexMatrix& m, int p, int q, bool imag) {
  return imag ? m(p, q).imag() : m(p, q).real();
}

inline void add_component(const HermitianVar& v, Functional& f, int p, int q, bool imag,
                          double coeff) {
  if (imag) {
    v.add_im(f, p, q, coeff);
  } else {
    v.add_re(f, p, q, coeff);
  }
}

}  // namespace qcbound::sdp

#endif  // QCBOUND_SDP_HPP
