#include "kappa/liealg.hpp"

namespace kappa {

LieAlgebra::LieAlgebra(Metric g, bool with_dilatation)
    : g_(std::move(g)), with_d_(with_dilatation) {
  const int n = g_.dim();
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu + 1; nu < n; ++nu) basis_.push_back(Gen::rotation(mu, nu));
  for (int mu = 0; mu < n; ++mu) basis_.push_back(Gen::momentum(mu));
  if (with_d_) basis_.push_back(Gen::dilatation());
  const int d = dim();
  f_.assign(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d)));
}

int LieAlgebra::index_of(const Gen& g) const {
  for (int i = 0; i < dim(); ++i)
    if (basis_[i] == g) return i;
  return -1;
}

void LieAlgebra::set_bracket(const Gen& x, const Gen& y,
                             const std::vector<std::pair<Scalar, Gen>>& value) {
  const int a = index_of(x), b = index_of(y);
  for (const auto& [coef, gen] : value) {
    if (coef.is_zero()) continue;
    const int c = index_of(gen);
    f_[a][b][c] += coef;
    f_[b][a][c] -= coef;
  }
}

std::vector<Scalar> LieAlgebra::bracket(int a, int b) const {
  return f_[a][b];
}

RelationSet LieAlgebra::relations(int series_order) const {
  RelationSet R;
  for (const auto& g : basis_) R.admit(g);
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) {
      if (!(basis_[b] < basis_[a])) continue;  // rules keyed (hi, lo)
      Poly rhs(1);
      for (int c = 0; c < dim(); ++c)
        if (!f_[a][b][c].is_zero())
          rhs.add_term(single_word({basis_[c]}),
                       Series(f_[a][b][c], series_order));
      if (!rhs.is_zero()) R.add_rule(basis_[a], basis_[b], rhs);
    }
  return R;
}

namespace {

// M_{mu nu} with arbitrary index order resolved to the canonical basis label
// and sign; zero for coincident indices.
std::vector<std::pair<Scalar, Gen>> rot_lower(const Scalar& coef, int mu,
                                              int nu) {
  if (mu == nu || coef.is_zero()) return {};
  if (mu < nu) return {{coef, Gen::rotation(mu, nu)}};
  return {{-coef, Gen::rotation(nu, mu)}};
}

}  // namespace

LieAlgebra build_poincare(const Metric& g) {
  LieAlgebra L(g, false);
  const int n = g.dim();
  const Scalar I = Scalar::i();

  // [M_{mu nu}, P_lam] = i(g_{nu lam} P_mu - g_{mu lam} P_nu)
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu + 1; nu < n; ++nu)
      for (int lam = 0; lam < n; ++lam) {
        std::vector<std::pair<Scalar, Gen>> v;
        v.push_back({I * Scalar(g.g(nu, lam)), Gen::momentum(mu)});
        v.push_back({-(I * Scalar(g.g(mu, lam))), Gen::momentum(nu)});
        L.set_bracket(Gen::rotation(mu, nu), Gen::momentum(lam), v);
      }

  // [M_{mu nu}, M_{lam sig}] = i(g_{mu sig} M_{nu lam} - g_{nu sig} M_{mu lam}
  //                             + g_{nu lam} M_{mu sig} - g_{mu lam} M_{nu sig})
  for (int mu = 0; mu < n; ++mu)
    for (int nu = mu + 1; nu < n; ++nu)
      for (int lam = 0; lam < n; ++lam)
        for (int sig = lam + 1; sig < n; ++sig) {
          if (std::make_pair(mu, nu) <= std::make_pair(lam, sig)) continue;
          std::vector<std::pair<Scalar, Gen>> v;
          auto acc = [&](const Scalar& c, int p, int q) {
            for (auto& t : rot_lower(c, p, q)) v.push_back(t);
          };
          acc(I * Scalar(g.g(mu, sig)), nu, lam);
          acc(-(I * Scalar(g.g(nu, sig))), mu, lam);
          acc(I * Scalar(g.g(nu, lam)), mu, sig);
          acc(-(I * Scalar(g.g(mu, lam))), nu, sig);
          L.set_bracket(Gen::rotation(mu, nu), Gen::rotation(lam, sig), v);
        }
  return L;
}

LieAlgebra build_weyl(const Metric& g) {
  LieAlgebra W(g, true);
  LieAlgebra P = build_poincare(g);
  // shared sector copies over verbatim
  for (int a = 0; a < P.dim(); ++a)
    for (int b = 0; b < P.dim(); ++b) {
      int wa = W.index_of(P.basis()[a]);
      int wb = W.index_of(P.basis()[b]);
      for (int c = 0; c < P.dim(); ++c)
        W.f_mut(wa, wb, W.index_of(P.basis()[c])) = P.f(a, b, c);
    }
  // [M_{mu nu}, D] = 0; [P_mu, D] = -i P_mu
  const int n = g.dim();
  for (int mu = 0; mu < n; ++mu)
    W.set_bracket(Gen::momentum(mu), Gen::dilatation(),
                  {{-Scalar::i(), Gen::momentum(mu)}});
  return W;
}

std::optional<TripleViolation> jacobi_check(const LieAlgebra& L) {
  const int d = L.dim();
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (int c = b + 1; c < d; ++c)
        for (int e = 0; e < d; ++e) {
          Scalar acc;
          for (int m = 0; m < d; ++m) {
            acc += L.f(a, b, m) * L.f(m, c, e);
            acc += L.f(b, c, m) * L.f(m, a, e);
            acc += L.f(c, a, m) * L.f(m, b, e);
          }
          if (!acc.is_zero()) {
            return TripleViolation{L.basis()[a], L.basis()[b], L.basis()[c],
                                   "coefficient of " + L.basis()[e].str() +
                                       ": " + acc.str()};
          }
        }
  return std::nullopt;
}

bool antisymmetry_check(const LieAlgebra& L) {
  const int d = L.dim();
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        if (L.f(a, b, c) != -L.f(b, a, c)) return false;
  return true;
}

namespace {

using Mat = std::vector<std::vector<Scalar>>;

Mat rot_matrix(const Metric& g, int al, int be) {
  const int n = g.dim();
  Mat m(n, std::vector<Scalar>(n));
  const Scalar I = Scalar::i();
  // (M_{al be})^mu_nu = i(delta^mu_al g_{nu be} - delta^mu_be g_{nu al})
  for (int mu = 0; mu < n; ++mu)
    for (int nu = 0; nu < n; ++nu) {
      Scalar v;
      if (mu == al) v += I * Scalar(g.g(nu, be));
      if (mu == be) v -= I * Scalar(g.g(nu, al));
      m[mu][nu] = v;
    }
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.size());
  Mat r(n, std::vector<Scalar>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

}  // namespace

bool matrix_rep_check(const Metric& g, std::string* detail) {
  const int n = g.dim();
  LieAlgebra L = build_poincare(g);
  for (int a1 = 0; a1 < n; ++a1)
    for (int b1 = a1 + 1; b1 < n; ++b1)
      for (int a2 = 0; a2 < n; ++a2)
        for (int b2 = a2 + 1; b2 < n; ++b2) {
          Mat x = rot_matrix(g, a1, b1), y = rot_matrix(g, a2, b2);
          Mat lhs = mat_mul(x, y);
          Mat yx = mat_mul(y, x);
          const int ia = L.index_of(Gen::rotation(a1, b1));
          const int ib = L.index_of(Gen::rotation(a2, b2));
          Mat rhs(n, std::vector<Scalar>(n));
          for (int c = 0; c < L.dim(); ++c) {
            const Scalar& fc = L.f(ia, ib, c);
            if (fc.is_zero()) continue;
            const Gen& gc = L.basis()[c];
            if (gc.sort != Sort::Rotation) {
              if (detail) *detail = "M-M bracket left the rotation sector";
              return false;
            }
            Mat mc = rot_matrix(g, gc.a, gc.b);
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j) rhs[i][j] += fc * mc[i][j];
          }
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
              Scalar got = lhs[i][j] - yx[i][j];
              if (got != rhs[i][j]) {
                if (detail)
                  *detail = "mismatch at [M_{" + std::to_string(a1) + "," +
                            std::to_string(b1) + "}, M_{" + std::to_string(a2) +
                            "," + std::to_string(b2) + "}] entry (" +
                            std::to_string(i) + "," + std::to_string(j) + ")";
                return false;
              }
            }
        }
  return true;
}

}  // namespace kappa
