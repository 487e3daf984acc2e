#include "polyadp/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace polyadp {

void SdpCoeffs::add(int block, int i, int j, double value) {
  if (value == 0.0) return;
  if (i > j) std::swap(i, j);
  entries.push_back({block, i, j, value});
}

void SdpCoeffs::canonicalize() {
  auto key_less = [](const SdpEntry& a, const SdpEntry& b) {
    return std::tie(a.block, a.i, a.j) < std::tie(b.block, b.i, b.j);
  };
  std::sort(entries.begin(), entries.end(), key_less);
  std::vector<SdpEntry> merged;
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().block == e.block &&
        merged.back().i == e.i && merged.back().j == e.j)
      merged.back().value += e.value;
    else
      merged.push_back(e);
  }
  std::erase_if(merged, [](const SdpEntry& e) { return e.value == 0.0; });
  entries = std::move(merged);
}

void SdpProblem::validate() const {
  if (rhs.size() != constraints.size())
    throw std::invalid_argument("SdpProblem: rhs size must match constraint count");
  auto check = [&](const SdpCoeffs& c) {
    for (const auto& e : c.entries) {
      if (e.block < 0 || e.block >= static_cast<int>(blocks.size()))
        throw std::invalid_argument("SdpProblem: entry references unknown block");
      const auto& blk = blocks[e.block];
      if (e.i < 0 || e.j < e.i || e.j >= blk.dim)
        throw std::invalid_argument("SdpProblem: entry indices out of range");
      if (blk.diagonal && e.i != e.j)
        throw std::invalid_argument("SdpProblem: off-diagonal entry in diagonal block");
      if (!std::isfinite(e.value))
        throw std::invalid_argument("SdpProblem: non-finite coefficient");
    }
  };
  check(objective);
  for (const auto& a : constraints) check(a);
  for (double b : rhs)
    if (!std::isfinite(b)) throw std::invalid_argument("SdpProblem: non-finite rhs");
  for (const auto& b : blocks)
    if (b.dim < 1) throw std::invalid_argument("SdpProblem: block dim must be >= 1");
}

bool SdpProblem::structurally_equal(const SdpProblem& other) const {
  if (blocks.size() != other.blocks.size()) return false;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (blocks[i].dim != other.blocks[i].dim ||
        blocks[i].diagonal != other.blocks[i].diagonal)
      return false;
  if (rhs != other.rhs) return false;
  if (constraints.size() != other.constraints.size()) return false;
  auto canon = [](SdpCoeffs c) {
    c.canonicalize();
    return c.entries;
  };
  auto entries_equal = [&](const SdpCoeffs& a, const SdpCoeffs& b) {
    auto ea = canon(a), eb = canon(b);
    if (ea.size() != eb.size()) return false;
    for (std::size_t i = 0; i < ea.size(); ++i)
      if (ea[i].block != eb[i].block || ea[i].i != eb[i].i ||
          ea[i].j != eb[i].j || ea[i].value != eb[i].value)
        return false;
    return true;
  };
  if (!entries_equal(objective, other.objective)) return false;
  for (std::size_t k = 0; k < constraints.size(); ++k)
    if (!entries_equal(constraints[k], other.constraints[k])) return false;
  return true;
}

const char* to_string(SdpStatus s) {
  switch (s) {
    case SdpStatus::optimal: return "optimal";
    case SdpStatus::infeasible: return "infeasible";
    case SdpStatus::unbounded: return "unbounded";
    case SdpStatus::max_iter: return "max_iter";
    case SdpStatus::numerical_error: return "numerical_error";
  }
  return "unknown";
}

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Dense symmetric matrix from upper-triangle entries restricted to one block.
MatrixXd dense_block(const SdpCoeffs& c, int block, int dim) {
  MatrixXd m = MatrixXd::Zero(dim, dim);
  for (const auto& e : c.entries) {
    if (e.block != block) continue;
    m(e.i, e.j) = e.value;
    m(e.j, e.i) = e.value;
  }
  return m;
}

VectorXd diag_block(const SdpCoeffs& c, int block, int dim) {
  VectorXd v = VectorXd::Zero(dim);
  for (const auto& e : c.entries)
    if (e.block == block) v(e.i) += e.value;
  return v;
}

double inner(const MatrixXd& a, const MatrixXd& b) {
  return (a.array() * b.array()).sum();
}

// Largest step alpha with X + alpha*D staying PSD; X given by its Cholesky.
double max_step_psd(const Eigen::LLT<MatrixXd>& llt, const MatrixXd& d) {
  MatrixXd t = llt.matrixL().solve(d);
  MatrixXd w = llt.matrixL().solve(t.transpose()).transpose();
  Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (w + w.transpose()),
                                             Eigen::EigenvaluesOnly);
  const double lmin = es.eigenvalues().minCoeff();
  if (lmin >= 0) return std::numeric_limits<double>::infinity();
  return -1.0 / lmin;
}

double max_step_diag(const VectorXd& x, const VectorXd& d) {
  double a = std::numeric_limits<double>::infinity();
  for (int i = 0; i < x.size(); ++i)
    if (d(i) < 0) a = std::min(a, -x(i) / d(i));
  return a;
}

struct BlockState {
  bool diagonal;
  int dim;
  // iterates
  MatrixXd x, s;
  VectorXd xd, sd;
  // static data: objective (min form) and constraint coefficient matrices
  MatrixXd c;
  VectorXd cd;
  std::vector<int> active;            // constraints with entries in this block
  std::vector<MatrixXd> a;            // active-indexed dense matrices
  std::vector<std::vector<std::pair<int, double>>> a_sparse;  // diag entries
  // per-iteration NT scaling
  MatrixXd r, rinv;
  VectorXd d;   // NT eigenvalues
  VectorXd r2;  // diagonal scaling (diag blocks)
  // per-iteration work
  MatrixXd rd, rd_scaled, g, dx, ds, dx_aff, ds_aff;
  VectorXd rd_d, rd_scaled_d, g_d, dx_d, ds_d, dx_aff_d, ds_aff_d;
  std::vector<MatrixXd> a_scaled;
  MatrixXd a_scaled_diag;  // rows: active constraints, cols: dim
  Eigen::LLT<MatrixXd> x_llt, s_llt;
};

struct Solver {
  const SdpProblem& prob;
  SdpOptions opts;
  std::vector<BlockState> blk;
  int m;       // number of equality constraints
  int n_total; // sum of block dims
  VectorXd b, y;
  double b_norm, c_norm;

  explicit Solver(const SdpProblem& p, const SdpOptions& o) : prob(p), opts(o) {
    m = static_cast<int>(prob.constraints.size());
    b = Eigen::Map<const VectorXd>(prob.rhs.data(), m);
    y = VectorXd::Zero(m);
    n_total = 0;
    blk.resize(prob.blocks.size());
    for (std::size_t bi = 0; bi < prob.blocks.size(); ++bi) {
      BlockState& s = blk[bi];
      s.diagonal = prob.blocks[bi].diagonal;
      s.dim = prob.blocks[bi].dim;
      n_total += s.dim;
      if (s.diagonal) {
        s.cd = -diag_block(prob.objective, static_cast<int>(bi), s.dim);
        for (int k = 0; k < m; ++k) {
          std::vector<std::pair<int, double>> ent;
          for (const auto& e : prob.constraints[k].entries)
            if (e.block == static_cast<int>(bi)) ent.emplace_back(e.i, e.value);
          if (!ent.empty()) {
            s.active.push_back(k);
            s.a_sparse.push_back(std::move(ent));
          }
        }
      } else {
        s.c = -dense_block(prob.objective, static_cast<int>(bi), s.dim);
        for (int k = 0; k < m; ++k) {
          bool any = false;
          for (const auto& e : prob.constraints[k].entries)
            if (e.block == static_cast<int>(bi)) {
              any = true;
              break;
            }
          if (any) {
            s.active.push_back(k);
            s.a.push_back(dense_block(prob.constraints[k], static_cast<int>(bi), s.dim));
          }
        }
      }
    }
    b_norm = b.norm();
    c_norm = 0.0;
    for (const auto& s : blk)
      c_norm += s.diagonal ? s.cd.squaredNorm() : s.c.squaredNorm();
    c_norm = std::sqrt(c_norm);
  }

  void init_point() {
    // Identity-scaled start, sized to the problem data.
    double a_scale = 1.0;
    for (int k = 0; k < m; ++k) {
      double nrm = 0.0;
      for (const auto& e : prob.constraints[k].entries) nrm += e.value * e.value;
      a_scale = std::max(a_scale, (1.0 + std::abs(b(k))) / (1.0 + std::sqrt(nrm)));
    }
    const double eta = std::max(1.0, a_scale) * std::sqrt(static_cast<double>(n_total));
    const double kappa = 1.0 + std::max(b_norm, c_norm);
    for (auto& s : blk) {
      if (s.diagonal) {
        s.xd = VectorXd::Constant(s.dim, eta);
        s.sd = VectorXd::Constant(s.dim, kappa);
      } else {
        s.x = MatrixXd::Identity(s.dim, s.dim) * eta;
        s.s = MatrixXd::Identity(s.dim, s.dim) * kappa;
      }
    }
  }

  double apply_constraint(int k, bool on_x) const {
    // <A_k, X> (or <A_k, S>)
    double v = 0.0;
    for (const auto& e : prob.constraints[k].entries) {
      const BlockState& s = blk[e.block];
      const double xv = s.diagonal
                            ? (on_x ? s.xd(e.i) : s.sd(e.i))
                            : (on_x ? s.x(e.i, e.j) : s.s(e.i, e.j));
      v += (e.i == e.j) ? e.value * xv : 2.0 * e.value * xv;
    }
    return v;
  }

  double dot_c_x() const {  // <Cmin, X>
    double v = 0.0;
    for (const auto& s : blk)
      v += s.diagonal ? s.cd.dot(s.xd) : inner(s.c, s.x);
    return v;
  }

  double mu() const {
    double v = 0.0;
    for (const auto& s : blk)
      v += s.diagonal ? s.xd.dot(s.sd) : inner(s.x, s.s);
    return v / n_total;
  }

  // Residuals: r_p = b - A(X); R_d = Cmin - S - A^T(y) per block.
  VectorXd primal_residual() const {
    VectorXd r(m);
    for (int k = 0; k < m; ++k) r(k) = b(k) - apply_constraint(k, true);
    return r;
  }

  void dual_residual_blocks() {
    for (auto& s : blk) {
      if (s.diagonal)
        s.rd_d = s.cd - s.sd;
      else
        s.rd = s.c - s.s;
    }
    for (int k = 0; k < m; ++k) {
      if (y(k) == 0.0) continue;
      for (const auto& e : prob.constraints[k].entries) {
        BlockState& s = blk[e.block];
        if (s.diagonal) {
          s.rd_d(e.i) -= y(k) * e.value;
        } else {
          s.rd(e.i, e.j) -= y(k) * e.value;
          if (e.i != e.j) s.rd(e.j, e.i) -= y(k) * e.value;
        }
      }
    }
  }

  double dual_residual_norm() const {
    double v = 0.0;
    for (const auto& s : blk)
      v += s.diagonal ? s.rd_d.squaredNorm() : s.rd.squaredNorm();
    return std::sqrt(v);
  }

  // Nesterov-Todd scaling for the current iterate. Returns false on a failed
  // factorization (numerically lost positive definiteness).
  bool compute_scaling() {
    for (auto& s : blk) {
      if (s.diagonal) {
        s.d = (s.xd.array() * s.sd.array()).sqrt();
        s.r2 = (s.xd.array() / s.sd.array()).sqrt();
        if (!s.d.allFinite() || (s.d.array() <= 0).any()) return false;
      } else {
        s.x_llt.compute(s.x);
        s.s_llt.compute(s.s);
        if (s.x_llt.info() != Eigen::Success || s.s_llt.info() != Eigen::Success)
          return false;
        const MatrixXd lx = s.x_llt.matrixL();
        const MatrixXd ls = s.s_llt.matrixL();
        Eigen::JacobiSVD<MatrixXd> svd(ls.transpose() * lx,
                                       Eigen::ComputeFullU | Eigen::ComputeFullV);
        s.d = svd.singularValues();
        if ((s.d.array() <= 0).any()) return false;
        const VectorXd dis = s.d.array().sqrt().inverse();
        s.r = lx * svd.matrixV() * dis.asDiagonal();
        s.rinv = s.d.array().sqrt().matrix().asDiagonal() *
                 svd.matrixV().transpose() *
                 lx.triangularView<Eigen::Lower>().solve(
                     MatrixXd::Identity(s.dim, s.dim));
      }
    }
    return true;
  }

  void scale_constraints() {
    for (auto& s : blk) {
      if (s.diagonal) {
        s.a_scaled_diag = MatrixXd::Zero(static_cast<int>(s.active.size()), s.dim);
        for (std::size_t i = 0; i < s.active.size(); ++i)
          for (const auto& [idx, val] : s.a_sparse[i])
            s.a_scaled_diag(static_cast<int>(i), idx) = val * s.r2(idx);
        s.rd_scaled_d = s.r2.array() * s.rd_d.array();
      } else {
        s.a_scaled.resize(s.active.size());
        for (std::size_t i = 0; i < s.active.size(); ++i)
          s.a_scaled[i] = s.r.transpose() * s.a[i] * s.r;
        s.rd_scaled = s.r.transpose() * s.rd * s.r;
      }
    }
  }

  MatrixXd schur() const {
    MatrixXd mm = MatrixXd::Zero(m, m);
    for (const auto& s : blk) {
      if (s.active.empty()) continue;
      const int na = static_cast<int>(s.active.size());
      if (s.diagonal) {
        const MatrixXd sub = s.a_scaled_diag * s.a_scaled_diag.transpose();
        for (int i = 0; i < na; ++i)
          for (int j = 0; j < na; ++j)
            mm(s.active[i], s.active[j]) += sub(i, j);
      } else {
        MatrixXd vecs(na, s.dim * s.dim);
        for (int i = 0; i < na; ++i)
          vecs.row(i) = Eigen::Map<const VectorXd>(s.a_scaled[i].data(),
                                                   s.dim * s.dim);
        const MatrixXd sub = vecs * vecs.transpose();
        for (int i = 0; i < na; ++i)
          for (int j = 0; j < na; ++j)
            mm(s.active[i], s.active[j]) += sub(i, j);
      }
    }
    return mm;
  }

  // rhs_k = r_p(k) - <A~_k, G - Rd_scaled>, then direction recovery:
  // dS = Rd - A^T(dy), dX = R (G - R^T dS R) R^T.
  VectorXd direction_rhs(const VectorXd& rp) const {
    VectorXd rhs = rp;
    for (const auto& s : blk) {
      if (s.diagonal) {
        const VectorXd t = s.g_d - s.rd_scaled_d;
        for (std::size_t i = 0; i < s.active.size(); ++i)
          rhs(s.active[i]) -= s.a_scaled_diag.row(static_cast<int>(i)).dot(t);
      } else {
        const MatrixXd t = s.g - s.rd_scaled;
        for (std::size_t i = 0; i < s.active.size(); ++i)
          rhs(s.active[i]) -= inner(s.a_scaled[i], t);
      }
    }
    return rhs;
  }

  void recover_direction(const VectorXd& dy, bool affine) {
    for (auto& s : blk) {
      if (s.diagonal) {
        VectorXd ds = s.rd_d;
        for (std::size_t i = 0; i < s.active.size(); ++i) {
          const double w = dy(s.active[i]);
          if (w == 0.0) continue;
          for (const auto& [idx, val] : s.a_sparse[i]) ds(idx) -= w * val;
        }
        const VectorXd dx =
            (s.r2.array() * s.g_d.array() - s.r2.array().square() * ds.array())
                .matrix();
        if (affine) {
          s.ds_aff_d = ds;
          s.dx_aff_d = dx;
        } else {
          s.ds_d = ds;
          s.dx_d = dx;
        }
      } else {
        MatrixXd ds = s.rd;
        for (std::size_t i = 0; i < s.active.size(); ++i) {
          const double w = dy(s.active[i]);
          if (w == 0.0) continue;
          ds -= w * s.a[i];
        }
        const MatrixXd dx =
            s.r * (s.g - s.r.transpose() * ds * s.r) * s.r.transpose();
        if (affine) {
          s.ds_aff = ds;
          s.dx_aff = 0.5 * (dx + dx.transpose());
        } else {
          s.ds = ds;
          s.dx = 0.5 * (dx + dx.transpose());
        }
      }
    }
  }

  std::pair<double, double> step_lengths(bool affine, double tau) const {
    double ap = std::numeric_limits<double>::infinity();
    double ad = std::numeric_limits<double>::infinity();
    for (const auto& s : blk) {
      if (s.diagonal) {
        ap = std::min(ap, max_step_diag(s.xd, affine ? s.dx_aff_d : s.dx_d));
        ad = std::min(ad, max_step_diag(s.sd, affine ? s.ds_aff_d : s.ds_d));
      } else {
        ap = std::min(ap, max_step_psd(s.x_llt, affine ? s.dx_aff : s.dx));
        ad = std::min(ad, max_step_psd(s.s_llt, affine ? s.ds_aff : s.ds));
      }
    }
    return {std::min(1.0, tau * ap), std::min(1.0, tau * ad)};
  }

  bool solve_schur(const MatrixXd& mm, const VectorXd& rhs, VectorXd& out) const {
    MatrixXd work = mm;
    double ridge = 0.0;
    const double base = 1e-14 * (1.0 + work.diagonal().cwiseAbs().maxCoeff());
    for (int attempt = 0; attempt < 6; ++attempt) {
      Eigen::LLT<MatrixXd> llt(work);
      if (llt.info() == Eigen::Success) {
        out = llt.solve(rhs);
        if (out.allFinite()) return true;
      }
      ridge = (ridge == 0.0) ? base : ridge * 100.0;
      work = mm + ridge * MatrixXd::Identity(m, m);
    }
    return false;
  }

  SdpSolution run() {
    SdpSolution sol;
    init_point();
    const double tau = 0.98;
    SdpStatus status = SdpStatus::max_iter;
    int iter = 0;
    double mu_prev = std::numeric_limits<double>::infinity();
    int stall_count = 0;

    for (iter = 0; iter < opts.max_iter; ++iter) {
      const VectorXd rp = primal_residual();
      dual_residual_blocks();
      const double pobj_min = dot_c_x();
      const double dobj_min = b.dot(y);
      const double mu_v = mu();
      const double rp_rel = rp.norm() / (1.0 + b_norm);
      const double rd_rel = dual_residual_norm() / (1.0 + c_norm);
      const double gap_rel = std::abs(pobj_min - dobj_min) /
                             (1.0 + std::max(std::abs(pobj_min), std::abs(dobj_min)));
      if (opts.verbose)
        std::fprintf(stderr, "it %3d  pobj % .8e  dobj % .8e  gap %.2e  rp %.2e  rd %.2e  mu %.2e\n",
                     iter, -pobj_min, -dobj_min, gap_rel, rp_rel, rd_rel, mu_v);

      if (gap_rel <= opts.tol && rp_rel <= opts.tol && rd_rel <= opts.tol) {
        status = SdpStatus::optimal;
        break;
      }

      // Divergence heuristics: a feasible primal ray means the maximization is
      // unbounded; a feasible dual ray certifies primal infeasibility.
      double x_norm = 0.0;
      for (const auto& s : blk)
        x_norm += s.diagonal ? s.xd.squaredNorm() : s.x.squaredNorm();
      x_norm = std::sqrt(x_norm);
      if (x_norm > 1e10 && rp_rel < 1e-6 && -pobj_min > 1e8) {
        status = SdpStatus::unbounded;
        break;
      }
      if (y.lpNorm<Eigen::Infinity>() > 1e9 && rd_rel < 1e-6 && dobj_min > 1e8) {
        status = SdpStatus::infeasible;
        break;
      }

      if (mu_v > 0.9999 * mu_prev)
        ++stall_count;
      else
        stall_count = 0;
      if (stall_count >= 10) break;  // stalled; report best effort
      mu_prev = mu_v;

      if (!compute_scaling()) {
        status = SdpStatus::numerical_error;
        break;
      }
      scale_constraints();
      const MatrixXd mm = schur();

      // Predictor (affine scaling direction): G = -D.
      for (auto& s : blk) {
        if (s.diagonal)
          s.g_d = -s.d;
        else
          s.g = -s.d.asDiagonal().toDenseMatrix();
      }
      VectorXd dy_aff;
      if (!solve_schur(mm, direction_rhs(rp), dy_aff)) {
        status = SdpStatus::numerical_error;
        break;
      }
      recover_direction(dy_aff, true);
      const auto [ap_aff, ad_aff] = step_lengths(true, 1.0);

      // Mehrotra centering parameter.
      double gap_aff = 0.0;
      for (const auto& s : blk) {
        if (s.diagonal)
          gap_aff += (s.xd + ap_aff * s.dx_aff_d).dot(s.sd + ad_aff * s.ds_aff_d);
        else
          gap_aff += inner(s.x + ap_aff * s.dx_aff, s.s + ad_aff * s.ds_aff);
      }
      gap_aff = std::max(gap_aff / n_total, 0.0);
      double sigma = std::pow(gap_aff / mu_v, 3);
      sigma = std::clamp(sigma, 1e-8, 1.0);

      // Corrector: G_ij = (sigma*mu*I - D^2 - sym(dXhat_aff * dShat_aff))_ij
      //                   * 2 / (d_i + d_j).
      for (auto& s : blk) {
        if (s.diagonal) {
          const VectorXd dxh = (s.dx_aff_d.array() / s.r2.array()).matrix();
          const VectorXd dsh = (s.r2.array() * s.ds_aff_d.array()).matrix();
          s.g_d = ((sigma * mu_v - s.d.array().square() -
                    dxh.array() * dsh.array()) /
                   s.d.array())
                      .matrix();
        } else {
          const MatrixXd dxh = s.rinv * s.dx_aff * s.rinv.transpose();
          const MatrixXd dsh = s.r.transpose() * s.ds_aff * s.r;
          const MatrixXd cross = dxh * dsh;
          MatrixXd num = -0.5 * (cross + cross.transpose());
          num.diagonal().array() += sigma * mu_v;
          num -= s.d.array().square().matrix().asDiagonal().toDenseMatrix();
          s.g.resize(s.dim, s.dim);
          for (int i = 0; i < s.dim; ++i)
            for (int j = 0; j < s.dim; ++j)
              s.g(i, j) = num(i, j) * 2.0 / (s.d(i) + s.d(j));
        }
      }
      VectorXd dy;
      if (!solve_schur(mm, direction_rhs(rp), dy)) {
        status = SdpStatus::numerical_error;
        break;
      }
      recover_direction(dy, false);
      const auto [ap, ad] = step_lengths(false, tau);
      if (ap < 1e-12 && ad < 1e-12) break;  // no progress possible

      for (auto& s : blk) {
        if (s.diagonal) {
          s.xd += ap * s.dx_d;
          s.sd += ad * s.ds_d;
        } else {
          s.x += ap * s.dx;
          s.s += ad * s.ds;
        }
      }
      y += ad * dy;
    }

    // Package the solution in the max-form convention: S = A^T(y) - C with
    // dual objective b^T y, so y_user = -y_internal.
    sol.status = status;
    sol.iterations = iter;
    sol.y = -y;
    sol.x_blocks.reserve(blk.size());
    sol.s_blocks.reserve(blk.size());
    for (const auto& s : blk) {
      if (s.diagonal) {
        sol.x_blocks.push_back(s.xd.asDiagonal().toDenseMatrix());
        sol.s_blocks.push_back(s.sd.asDiagonal().toDenseMatrix());
      } else {
        sol.x_blocks.push_back(s.x);
        sol.s_blocks.push_back(s.s);
      }
    }
    const double pobj_min = dot_c_x();
    const double dobj_min = b.dot(y);
    sol.primal_objective = -pobj_min;
    sol.dual_objective = -dobj_min;
    sol.gap = std::abs(pobj_min - dobj_min) /
              (1.0 + std::max(std::abs(pobj_min), std::abs(dobj_min)));
    sol.primal_residual = primal_residual().norm() / (1.0 + b_norm);
    dual_residual_blocks();
    sol.dual_residual = dual_residual_norm() / (1.0 + c_norm);
    return sol;
  }
};

}  // namespace

SdpSolution solve(const SdpProblem& prob, const SdpOptions& opts) {
  prob.validate();
  if (prob.constraints.empty()) {
    // No equalities: sup <C,X> over X >= 0 is 0 (attained at X = 0) unless C
    // has a direction of positive curvature, in which case it is unbounded.
    SdpSolution sol;
    sol.y = Eigen::VectorXd::Zero(0);
    bool unbounded = false;
    for (std::size_t bi = 0; bi < prob.blocks.size(); ++bi) {
      const int dim = prob.blocks[bi].dim;
      Eigen::MatrixXd c = Eigen::MatrixXd::Zero(dim, dim);
      for (const auto& e : prob.objective.entries)
        if (e.block == static_cast<int>(bi)) {
          c(e.i, e.j) = e.value;
          c(e.j, e.i) = e.value;
        }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c, Eigen::EigenvaluesOnly);
      if (dim > 0 && es.eigenvalues().maxCoeff() > 0) unbounded = true;
      sol.x_blocks.push_back(Eigen::MatrixXd::Zero(dim, dim));
      sol.s_blocks.push_back(-c);
    }
    sol.status = unbounded ? SdpStatus::unbounded : SdpStatus::optimal;
    return sol;
  }
  Solver solver(prob, opts);
  return solver.run();
}

KktReport check_kkt(const SdpProblem& prob, const SdpSolution& sol) {
  KktReport rep;
  const int m = static_cast<int>(prob.constraints.size());
  Eigen::VectorXd rp(m);
  for (int k = 0; k < m; ++k) {
    double v = 0.0;
    for (const auto& e : prob.constraints[k].entries) {
      const double xv = sol.x_blocks[e.block](e.i, e.j);
      v += (e.i == e.j) ? e.value * xv : 2.0 * e.value * xv;
    }
    rp(k) = prob.rhs[k] - v;
  }
  rep.primal_residual = rp.norm();

  double rd2 = 0.0, comp = 0.0;
  double minx = std::numeric_limits<double>::infinity();
  double mins = std::numeric_limits<double>::infinity();
  for (std::size_t bi = 0; bi < prob.blocks.size(); ++bi) {
    const int dim = prob.blocks[bi].dim;
    Eigen::MatrixXd r = -sol.s_blocks[bi];
    for (const auto& e : prob.objective.entries)
      if (e.block == static_cast<int>(bi)) {
        r(e.i, e.j) -= e.value;
        if (e.i != e.j) r(e.j, e.i) -= e.value;
      }
    for (int k = 0; k < m; ++k)
      for (const auto& e : prob.constraints[k].entries)
        if (e.block == static_cast<int>(bi)) {
          r(e.i, e.j) += sol.y(k) * e.value;
          if (e.i != e.j) r(e.j, e.i) += sol.y(k) * e.value;
        }
    rd2 += r.squaredNorm();
    comp += (sol.x_blocks[bi].array() * sol.s_blocks[bi].array()).sum();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ex(sol.x_blocks[bi],
                                                      Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sol.s_blocks[bi],
                                                      Eigen::EigenvaluesOnly);
    if (dim > 0) {
      minx = std::min(minx, ex.eigenvalues().minCoeff());
      mins = std::min(mins, es.eigenvalues().minCoeff());
    }
  }
  rep.dual_residual = std::sqrt(rd2);
  rep.complementarity = comp;
  rep.min_eigenvalue_x = minx;
  rep.min_eigenvalue_s = mins;
  return rep;
}

}  // namespace polyadp
