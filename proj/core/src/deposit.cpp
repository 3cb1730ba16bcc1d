#include "vstokes/deposit.hpp"

#include <cmath>
#include <stdexcept>

#include "vstokes/parallel.hpp"
#include "vstokes/summation.hpp"

namespace vstokes {

CicStencil cic_stencil(const Vec3& x, int n, double box_length) {
  const double h = box_length / n;
  std::array<int, 3> lo{}, hi{};
  std::array<double, 3> f{};
  for (int a = 0; a < 3; ++a) {
    double s = wrap_coordinate(x[a], box_length) / h - 0.5;
    double fl = std::floor(s);
    f[a] = s - fl;
    int i0 = static_cast<int>(fl);
    if (i0 < 0) i0 += n;
    lo[a] = i0;
    hi[a] = (i0 + 1 == n) ? 0 : i0 + 1;
  }
  CicStencil st{};
  int q = 0;
  for (int di = 0; di < 2; ++di) {
    int i = di ? hi[0] : lo[0];
    double wx = di ? f[0] : 1.0 - f[0];
    for (int dj = 0; dj < 2; ++dj) {
      int j = dj ? hi[1] : lo[1];
      double wy = dj ? f[1] : 1.0 - f[1];
      for (int dk = 0; dk < 2; ++dk) {
        int k = dk ? hi[2] : lo[2];
        double wz = dk ? f[2] : 1.0 - f[2];
        st.index[q] = (static_cast<std::size_t>(i) * n + j) * n + k;
        st.weight[q] = wx * wy * wz;
        ++q;
      }
    }
  }
  return st;
}

namespace {

// Deposits sum_i w_i K(x - x_i) (and optionally w_i v_i K) without the 1/h^3
// factor into the given buffers.
void accumulate(std::span<const Vec3> x, std::span<const double> w, const Vec3* v, std::size_t begin,
                std::size_t end, int n, double box_length, double* rho, double* jx, double* jy,
                double* jz) {
  for (std::size_t p = begin; p < end; ++p) {
    CicStencil st = cic_stencil(x[p], n, box_length);
    double wp = w[p];
    for (int q = 0; q < 8; ++q) {
      double c = wp * st.weight[q];
      rho[st.index[q]] += c;
      if (v) {
        jx[st.index[q]] += c * v[p][0];
        jy[st.index[q]] += c * v[p][1];
        jz[st.index[q]] += c * v[p][2];
      }
    }
  }
}

Moments deposit_impl(std::span<const Vec3> x, std::span<const double> w, std::span<const Vec3> v,
                     bool with_current, int n, double box_length, int threads) {
  if (x.empty()) throw std::invalid_argument("deposit: ensemble is empty");
  Moments m{ScalarField(n, box_length), with_current ? VectorField(n, box_length) : VectorField()};
  threads = std::max(1, threads);
  const Vec3* vp = with_current ? v.data() : nullptr;
  if (threads == 1) {
    accumulate(x, w, vp, 0, x.size(), n, box_length, m.rho.data(),
               with_current ? m.j[0].data() : nullptr, with_current ? m.j[1].data() : nullptr,
               with_current ? m.j[2].data() : nullptr);
  } else {
    std::vector<Moments> parts(threads);
    for (auto& part : parts) {
      part.rho = ScalarField(n, box_length);
      if (with_current) part.j = VectorField(n, box_length);
    }
    parallel_chunks(x.size(), threads, [&](int t, std::size_t b, std::size_t e) {
      auto& part = parts[t];
      accumulate(x, w, vp, b, e, n, box_length, part.rho.data(),
                 with_current ? part.j[0].data() : nullptr, with_current ? part.j[1].data() : nullptr,
                 with_current ? part.j[2].data() : nullptr);
    });
    for (int t = 0; t < threads; ++t) {
      m.rho += parts[t].rho;
      if (with_current) m.j += parts[t].j;
    }
  }
  const double inv_vol = 1.0 / m.rho.cell_volume();
  m.rho *= inv_vol;
  if (with_current) m.j *= inv_vol;
  return m;
}

}  // namespace

ScalarField deposit_density(const PhaseEnsemble& e, int n, int threads) {
  return deposit_impl(e.positions(), e.weights(), e.velocities(), false, n, e.box_length(), threads)
      .rho;
}

VectorField deposit_current(const PhaseEnsemble& e, int n, int threads) {
  return deposit_impl(e.positions(), e.weights(), e.velocities(), true, n, e.box_length(), threads).j;
}

Moments deposit_moments(const PhaseEnsemble& e, int n, int threads) {
  return deposit_impl(e.positions(), e.weights(), e.velocities(), true, n, e.box_length(), threads);
}

ScalarField deposit_points(std::span<const Vec3> positions, std::span<const double> weights, int n,
                           double box_length, int threads) {
  if (positions.size() != weights.size())
    throw std::invalid_argument("deposit_points: positions and weights differ in length");
  return deposit_impl(positions, weights, {}, false, n, box_length, threads).rho;
}

ParticleCoupling::ParticleCoupling(const PhaseEnsemble& e, int n, int threads)
    : n_(n),
      box_length_(e.box_length()),
      threads_(std::max(1, threads)),
      stencils_(e.size()),
      weights_(e.weights().begin(), e.weights().end()) {
  auto xs = e.positions();
  parallel_chunks(e.size(), threads_, [&](int, std::size_t b, std::size_t end) {
    for (std::size_t p = b; p < end; ++p) stencils_[p] = cic_stencil(xs[p], n_, box_length_);
  });
}

VectorField ParticleCoupling::apply(const VectorField& u) const {
  if (u.n() != n_) throw std::invalid_argument("ParticleCoupling: grid size differs");
  std::vector<VectorField> parts(threads_, VectorField(n_, box_length_));
  parallel_chunks(stencils_.size(), threads_, [&](int t, std::size_t b, std::size_t e) {
    VectorField& out = parts[t];
    for (std::size_t p = b; p < e; ++p) {
      const CicStencil& st = stencils_[p];
      Vec3 up = Vec3::Zero();
      for (int q = 0; q < 8; ++q)
        for (int c = 0; c < 3; ++c) up[c] += st.weight[q] * u[c][st.index[q]];
      up *= weights_[p];
      for (int q = 0; q < 8; ++q)
        for (int c = 0; c < 3; ++c) out[c][st.index[q]] += st.weight[q] * up[c];
    }
  });
  for (int t = 1; t < threads_; ++t) parts[0] += parts[t];
  parts[0] *= 1.0 / parts[0].cell_volume();
  return std::move(parts[0]);
}

double ParticleCoupling::weighted_square(const VectorField& u) const {
  CompensatedSum s;
  for (std::size_t p = 0; p < stencils_.size(); ++p) {
    const CicStencil& st = stencils_[p];
    Vec3 up = Vec3::Zero();
    for (int q = 0; q < 8; ++q)
      for (int c = 0; c < 3; ++c) up[c] += st.weight[q] * u[c][st.index[q]];
    s.add(weights_[p] * up.squaredNorm());
  }
  return s.value();
}

VectorField mean_velocity(const ScalarField& rho, const VectorField& j) {
  if (!j.same_grid(rho)) throw std::invalid_argument("mean_velocity: grids differ");
  VectorField v(rho.n(), rho.box_length());
  const double floor = kDensityFloorFraction * rho.max();
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (rho[i] > floor) {
      for (int c = 0; c < 3; ++c) v[c][i] = j[c][i] / rho[i];
    }
  }
  return v;
}

Vec3 interpolate(const VectorField& f, const Vec3& x) {
  CicStencil st = cic_stencil(x, f.n(), f.box_length());
  Vec3 r = Vec3::Zero();
  for (int q = 0; q < 8; ++q)
    for (int c = 0; c < 3; ++c) r[c] += st.weight[q] * f[c][st.index[q]];
  return r;
}

double interpolate(const ScalarField& f, const Vec3& x) {
  CicStencil st = cic_stencil(x, f.n(), f.box_length());
  double r = 0.0;
  for (int q = 0; q < 8; ++q) r += st.weight[q] * f[st.index[q]];
  return r;
}

}  // namespace vstokes
