#include "kappa/runner.hpp"

#include <ctime>

#include "kappa/duality.hpp"
#include "kappa/qalg.hpp"
#include "kappa/qgroup.hpp"
#include "kappa/rmatrix.hpp"

namespace kappa {

namespace {

std::string now_utc() {
  char buf[64];
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Ctx {
  const RunConfig& cfg;
  Metric g;
  GroupKind kind;
  int N;
  std::string base_params;
};

void classical_layer(const Ctx& c, std::vector<CheckResult>* out) {
  const bool weyl = c.kind == GroupKind::Weyl;
  LieAlgebra L = weyl ? build_weyl(c.g) : build_poincare(c.g);

  out->push_back(run_check("liealg/antisymmetry", c.base_params,
                           [&](std::string*, int*) {
                             return antisymmetry_check(L);
                           }));
  out->push_back(run_check("liealg/jacobi", c.base_params,
                           [&](std::string* detail, int*) {
                             auto bad = jacobi_check(L);
                             if (bad) {
                               *detail = "triple (" + bad->x.str() + ", " +
                                         bad->y.str() + ", " + bad->z.str() +
                                         "): " + bad->residual;
                               return false;
                             }
                             return true;
                           }));
  out->push_back(run_check("liealg/matrix-rep", c.base_params,
                           [&](std::string* detail, int*) {
                             return matrix_rep_check(c.g, detail);
                           }));
  out->push_back(run_check(
      "liealg/jacobi-random-metrics",
      c.base_params + " samples=" + std::to_string(c.cfg.samples) +
          " seed=" + std::to_string(c.cfg.seed),
      [&](std::string* detail, int*) {
        std::mt19937_64 rng(c.cfg.seed);
        for (int t = 0; t < c.cfg.samples; ++t) {
          Metric g = random_metric(c.g.dim(), rng, t % 2 == 0);
          for (bool w : {false, true}) {
            LieAlgebra A = w ? build_weyl(g) : build_poincare(g);
            auto bad = jacobi_check(A);
            if (bad) {
              *detail = "sample " + std::to_string(t) + " metric " + g.str();
              return false;
            }
          }
        }
        return true;
      }));

  LieAlgebra LP = build_poincare(c.g);
  Wedge r = build_r(c.g, LP, c.N);
  out->push_back(run_check("rmatrix/build-crosscheck", c.base_params,
                           [&](std::string* detail, int*) {
                             if (!(r == build_r_from_components(c.g, LP, c.N))) {
                               *detail =
                                   "direct contraction and component display "
                                   "disagree";
                               return false;
                             }
                             return true;
                           }));
  Wedge s = schouten(r, LP);
  out->push_back(run_check(
      "rmatrix/schouten-closed-form", c.base_params,
      [&](std::string* detail, int*) {
        if (!(s == schouten_closed_form(c.g, LP, c.N))) {
          *detail = "[r,r] != (i g00 / 2 kappa^2) M ^ P ^ P; got " +
                    s.str(LP);
          return false;
        }
        return true;
      }));
  out->push_back(run_check(
      "rmatrix/cybe", c.base_params, [&](std::string* detail, int*) {
        const bool cybe = s.is_zero();
        if (cybe) {
          *detail = "holds (g00 = 0)";
          return true;
        }
        if (c.kind == GroupKind::Poincare) {
          for (const auto& x : LP.basis())
            if (!ad_invariant(s, LP, x)) {
              *detail = "[r,r] != 0 and not ad-invariant under " + x.str();
              return false;
            }
          *detail = "modified: [r,r] != 0 but ad-invariant";
          return true;
        }
        *detail =
            "fails: g00 != 0, the r-matrix does not extend to the Weyl "
            "group";
        return false;
      }));
  out->push_back(run_check(
      "rmatrix/cybe-dichotomy-random",
      c.base_params + " samples=" + std::to_string(c.cfg.samples) +
          " seed=" + std::to_string(c.cfg.seed),
      [&](std::string* detail, int*) {
        std::mt19937_64 rng(c.cfg.seed + 1);
        for (int t = 0; t < c.cfg.samples; ++t) {
          Metric g = random_metric(c.g.dim(), rng, t % 2 == 0);
          LieAlgebra A = build_poincare(g);
          Wedge rr = schouten(build_r(g, A, c.N), A);
          if (rr.is_zero() != g.g00_zero()) {
            *detail = "dichotomy fails at sample metric " + g.str();
            return false;
          }
          if (!(rr == schouten_closed_form(g, A, c.N))) {
            *detail = "closed form fails at sample metric " + g.str();
            return false;
          }
        }
        return true;
      }));
  out->push_back([&] {
    if (c.g.g00_zero())
      return skipped_check("rmatrix/dilatation-invariance-broken",
                           c.base_params, "g00 = 0: [r,r] vanishes");
    return run_check("rmatrix/dilatation-invariance-broken", c.base_params,
                     [&](std::string* detail, int*) {
                       LieAlgebra W = build_weyl(c.g);
                       Wedge rw = schouten(build_r(c.g, W, c.N), W);
                       for (const auto& x : LP.basis())
                         if (!ad_invariant(rw, W, x)) {
                           *detail = "[r,r] not invariant under " + x.str();
                           return false;
                         }
                       if (ad_invariant(rw, W, Gen::dilatation())) {
                         *detail =
                             "[r,r] unexpectedly invariant under the "
                             "dilatation";
                         return false;
                       }
                       return true;
                     });
  }());

  PoissonStructure P = build_poisson(c.kind, c.g, c.N);
  out->push_back(run_check("poisson/field-closure", c.base_params,
                           [&](std::string* detail, int*) {
                             return field_closure_check(P, detail);
                           }));
  out->push_back(run_check("poisson/lr-commute", c.base_params,
                           [&](std::string* detail, int*) {
                             return lr_commute_check(P, detail);
                           }));
  out->push_back(run_check(
      "poisson/coordinate-brackets",
      c.base_params + " normalization=" +
          std::to_string(kSklyaninNormalization),
      [&](std::string* detail, int*) {
        auto bad = verify_coordinate_brackets(P);
        if (!bad.empty()) {
          *detail = "{" + bad.front().x.str() + ", " + bad.front().y.str() +
                    "}: got " + bad.front().got + ", want " + bad.front().want;
          return false;
        }
        return true;
      }));
  out->push_back(run_check(
      "poisson/coordinate-brackets-random",
      c.base_params + " samples=" + std::to_string(c.cfg.samples) +
          " seed=" + std::to_string(c.cfg.seed),
      [&](std::string* detail, int*) {
        std::mt19937_64 rng(c.cfg.seed + 2);
        for (int t = 0; t < c.cfg.samples; ++t) {
          Metric g = random_metric(c.g.dim(), rng, t % 2 == 0);
          PoissonStructure Q = build_poisson(c.kind, g, c.N);
          auto bad = verify_coordinate_brackets(Q);
          if (!bad.empty()) {
            *detail = "sample " + std::to_string(t) + " metric " + g.str() +
                      ": {" + bad.front().x.str() + ", " +
                      bad.front().y.str() + "} mismatch";
            return false;
          }
        }
        return true;
      }));

  // Jacobi triples: exhaustive for n <= 3; for larger n the families that
  // can fail (mixing Lam with a, and the b sector) plus the pure-a triples.
  auto jacobi_triples = [&]() {
    std::vector<std::array<Gen, 3>> ts;
    const auto& cs = P.coordinates;
    if (c.g.dim() <= 3) {
      for (size_t i = 0; i < cs.size(); ++i)
        for (size_t j = i + 1; j < cs.size(); ++j)
          for (size_t k = j + 1; k < cs.size(); ++k)
            ts.push_back({cs[i], cs[j], cs[k]});
    } else {
      for (const auto& x : cs) {
        if (x.sort != Sort::LorentzEntry && x.sort != Sort::BCoord &&
            x.sort != Sort::ExpB)
          continue;
        for (const auto& y : cs) {
          if (y.sort != Sort::TransCoord) continue;
          for (const auto& z : cs) {
            if (z.sort != Sort::TransCoord || !(y < z)) continue;
            ts.push_back({x, y, z});
          }
        }
      }
      for (const auto& x : cs)
        for (const auto& y : cs)
          for (const auto& z : cs)
            if (x.sort == Sort::TransCoord && y.sort == Sort::TransCoord &&
                z.sort == Sort::TransCoord && x < y && y < z)
              ts.push_back({x, y, z});
    }
    return ts;
  };

  OrthoReducer full(c.g, OrthoMode::Complete);
  out->push_back(run_check(
      "poisson/jacobi",
      c.base_params + (c.g.dim() <= 3 ? " triples=all" : " triples=mixed-a"),
      [&](std::string* detail, int*) {
        for (const auto& t : jacobi_triples()) {
          Poly J = poisson_jacobi(P, Poly::gen(t[0], c.N),
                                  Poly::gen(t[1], c.N), Poly::gen(t[2], c.N));
          if (!full.reduces_to_zero(J, P.ring)) {
            *detail = "triple (" + t[0].str() + ", " + t[1].str() + ", " +
                      t[2].str() + "): residual " +
                      full.reduce(J, P.ring).str();
            return false;
          }
        }
        return true;
      }));
  out->push_back([&] {
    if (!(c.kind == GroupKind::Weyl) || c.g.g00_zero())
      return skipped_check("poisson/jacobi-violation-form", c.base_params,
                           "applies to the Weyl bracket with g00 != 0");
    return run_check(
        "poisson/jacobi-violation-form", c.base_params,
        [&](std::string* detail, int*) {
          const int n = c.g.dim();
          bool nonzero = false;
          for (int al = 0; al < n; ++al)
            for (int be = 0; be < n; ++be)
              for (int rho = 0; rho < n; ++rho)
                for (int sig = 0; sig < n; ++sig) {
                  Poly J = poisson_jacobi(
                      P, Poly::gen(Gen::lorentz(al, be), c.N),
                      Poly::gen(Gen::coord(rho), c.N),
                      Poly::gen(Gen::coord(sig), c.N));
                  Poly want = weyl_jacobi_closed_form(P, al, be, rho, sig);
                  if (!full.reduces_to_zero(J - want, P.ring)) {
                    *detail = "triple indices (" + std::to_string(al) + "," +
                              std::to_string(be) + ";" + std::to_string(rho) +
                              "," + std::to_string(sig) + ")";
                    return false;
                  }
                  if (!J.is_zero()) nonzero = true;
                }
          if (!nonzero) {
            *detail = "jacobiator vanished despite g00 != 0";
            return false;
          }
          return true;
        });
  }());
}

void group_layer(const Ctx& c, std::vector<CheckResult>* out) {
  const bool weyl = c.kind == GroupKind::Weyl;
  GroupPresentation H = weyl ? build_kappa_weyl_group(c.g, c.N)
                             : build_kappa_poincare_group(c.g, c.N);
  for (auto& r : hopf_axiom_suite(H, HopfSuiteScope::Full))
    out->push_back(std::move(r));

  out->push_back([&] {
    if (!weyl)
      return skipped_check("qgroup/jacobiator-closed-form", c.base_params,
                           "identity specific to the Weyl relations");
    return run_check(
        "qgroup/jacobiator-closed-form", c.base_params,
        [&](std::string* detail, int* bad) {
          const int n = c.g.dim();
          for (int al = 0; al < n; ++al)
            for (int be = 0; be < n; ++be)
              for (int rho = 0; rho < n; ++rho)
                for (int sig = 0; sig < n; ++sig) {
                  Poly got = jacobiator(H, Gen::lorentz(al, be),
                                        Gen::coord(rho), Gen::coord(sig));
                  Poly want =
                      weyl_jacobiator_closed_form(H, al, be, rho, sig);
                  Poly res = got - want;
                  if (!res.is_zero()) {
                    *detail = "indices (" + std::to_string(al) + "," +
                              std::to_string(be) + ";" + std::to_string(rho) +
                              "," + std::to_string(sig) + "): residual " +
                              res.str();
                    *bad = res.first_nonzero_lambda_order();
                    return false;
                  }
                }
          return true;
        });
  }());

  for (auto& r : star_reality_check(H)) out->push_back(std::move(r));

  out->push_back([&] {
    if (!weyl)
      return skipped_check("qgroup/weyl-b0-reduction", c.base_params,
                           "applies to the Weyl presentation");
    return run_check("qgroup/weyl-b0-reduction", c.base_params,
                     [&](std::string* detail, int*) {
                       GroupPresentation Pg =
                           build_kappa_poincare_group(c.g, c.N);
                       return weyl_reduces_to_poincare_at_b0(H, Pg, detail);
                     });
  }());

  out->push_back(run_check(
      "qgroup/lambda-grading", c.base_params, [&](std::string* detail, int*) {
        for (const auto& [key, rhs] : H.rels.rules())
          for (const auto& [w, cf] : rhs.terms())
            for (int k = 0; k <= cf.order(); ++k)
              if (k != 1 && !cf.coeff(k).is_zero()) {
                *detail = "relation [" + key.first.str() + ", " +
                          key.second.str() + "] carries lam^" +
                          std::to_string(k);
                return false;
              }
        return true;
      }));

  out->push_back(run_check(
      "qgroup/quantization-consistency", c.base_params,
      [&](std::string* detail, int*) {
        PoissonStructure P = build_poisson(c.kind, c.g, c.N);
        for (const auto& x : P.coordinates)
          for (const auto& y : P.coordinates) {
            Poly q = commutator(Poly::gen(x, c.N), Poly::gen(y, c.N), H.rels)
                         .scaled(Scalar::i().inverse());
            Poly cl = sklyanin_bracket(P, Poly::gen(x, c.N), Poly::gen(y, c.N));
            if (!H.ortho.reduces_to_zero(q - cl, H.rels)) {
              *detail = "pair (" + x.str() + ", " + y.str() +
                        "): (1/i)[x,y] != {x,y}";
              return false;
            }
          }
        return true;
      }));
}

void algebra_layer(const Ctx& c, std::vector<CheckResult>* out) {
  const bool weyl = c.kind == GroupKind::Weyl;
  AlgebraPresentation A = weyl ? build_kappa_weyl_algebra(c.g, c.N)
                               : build_kappa_poincare_algebra(c.g, c.N);
  for (auto& r : algebra_axiom_suite(A)) out->push_back(std::move(r));

  out->push_back(run_check(
      "qalg/classical-limit",
      c.base_params + " note=[D,P]|lam0=+iP matches classical [P,D]=-iP",
      [&](std::string* detail, int*) {
        return classical_limit_matches(A, detail);
      }));

  out->push_back(run_check(
      "qalg/antipode-derivation", c.base_params,
      [&](std::string* detail, int*) {
        AntipodeResult R = derive_antipode(A);
        if (!R.ok || !R.antihom_ok) {
          *detail = R.detail;
          return false;
        }
        if (!(R.antipode.at(Gen::momentum(0)) ==
              -Poly::gen(Gen::momentum(0), c.N))) {
          *detail = "S(P_0) != -P_0";
          return false;
        }
        for (const auto& x : A.gens)
          if (x.sort == Sort::Rotation && x.a > 0 &&
              !(R.antipode.at(x) == -Poly::gen(x, c.N))) {
            *detail = "S(" + x.str() + ") != -" + x.str();
            return false;
          }
        return true;
      }));

  out->push_back(run_check(
      "qalg/lorentz-sector-undeformed", c.base_params,
      [&](std::string* detail, int*) {
        for (const auto& x : A.gens)
          for (const auto& y : A.gens) {
            if (x.sort != Sort::Rotation || y.sort != Sort::Rotation) continue;
            Poly cm = commutator(Poly::gen(x, c.N), Poly::gen(y, c.N), A.rels);
            for (const auto& [w, cf] : cm.terms())
              for (int k = 1; k <= cf.order(); ++k)
                if (!cf.coeff(k).is_zero()) {
                  *detail = "[" + x.str() + ", " + y.str() +
                            "] carries lam^" + std::to_string(k);
                  return false;
                }
          }
        // classical subalgebra: Delta M^{ij} and Delta P_0 primitive
        for (const auto& x : A.gens) {
          bool classical = (x.sort == Sort::Rotation && x.a > 0) ||
                           (x.sort == Sort::Momentum && x.a == 0);
          if (!classical) continue;
          Poly d = A.coproduct.at(x);
          Poly want(2);
          want += Poly::gen(x, c.N).embedded(0, 2);
          want += Poly::gen(x, c.N).embedded(1, 2);
          if (!(d == want)) {
            *detail = "Delta " + x.str() + " is not primitive";
            return false;
          }
        }
        return true;
      }));
}

void duality_layer(const Ctx& c, std::vector<CheckResult>* out) {
  const bool weyl = c.kind == GroupKind::Weyl;
  const int cap_order = std::min(c.N, c.cfg.degree);  // duality runs at d, N caps
  GroupPresentation H = weyl ? build_kappa_weyl_group(c.g, cap_order)
                             : build_kappa_poincare_group(c.g, cap_order);
  AlgebraPresentation A = weyl ? build_kappa_weyl_algebra(c.g, cap_order)
                               : build_kappa_poincare_algebra(c.g, cap_order);
  Pairing P = build_pairing(H, A, c.cfg.degree, cap_order);
  if (!weyl)
    out->push_back(skipped_check(
        "duality/bn-D-rows", c.base_params,
        "the b/D sector exists only in the Weyl pairing"));
  for (auto& r : pairing_well_defined(H, A, P)) out->push_back(std::move(r));
  for (auto& r : verify_structure_maps(H, A, P)) out->push_back(std::move(r));
}

}  // namespace

CheckReport run(const RunConfig& cfg) {
  cfg.validate();
  CheckReport report;
  report.generated_at = now_utc();
  report.config_echo = cfg.echo();

  Ctx c{cfg,
        cfg.validated_metric(),
        cfg.deformation,
        cfg.order,
        std::string(cfg.deformation == GroupKind::Weyl ? "weyl" : "poincare") +
            " n=" + std::to_string(cfg.n) +
            " order=" + std::to_string(cfg.order)};

  using L = RunConfig::Layer;
  const L l = cfg.layer;
  if (l == L::Classical || l == L::All) classical_layer(c, &report.checks);
  if (l == L::Group || l == L::All) group_layer(c, &report.checks);
  if (l == L::Algebra || l == L::All) algebra_layer(c, &report.checks);
  if (l == L::Duality || l == L::All) duality_layer(c, &report.checks);
  return report;
}

}  // namespace kappa
