#include "qtoda/pipeline.hpp"

#include <chrono>
#include <stdexcept>

#include "qtoda/flat_sections.hpp"
#include "qtoda/toda.hpp"

namespace qtoda {

const std::vector<std::string> kFaultKeys = {
    "classical-b", "spurious-q", "wrong-q", "drop-fk-term", "perturb-omega"};

void apply_fault_B(const std::string& key, std::vector<QMatrix>& B,
                   const SchubertBasis& basis) {
  auto qv = B[0].vars();
  if (key == "classical-b") {
    for (auto& b : B) b = b.at_q_zero();
  } else if (key == "spurious-q") {
    B[0](static_cast<std::size_t>(basis.longest_pos),
         static_cast<std::size_t>(basis.identity_pos)) +=
        SparsePoly::variable(qv, 0);
  } else if (key == "wrong-q") {
    if (qv->size() < 2)
      throw std::invalid_argument("fault wrong-q needs rank >= 2");
    B[0](static_cast<std::size_t>(basis.longest_pos),
         static_cast<std::size_t>(basis.identity_pos)) +=
        SparsePoly::variable(qv, 1);
  }
}

void apply_fault_F(const std::string& key, std::vector<SparsePoly>& F) {
  if (key != "drop-fk-term") return;
  SparsePoly& f = F[0];
  if (f.is_zero()) throw std::invalid_argument("fault drop-fk-term: F_1 is zero");
  auto last = std::prev(f.terms().end());
  f.add_term(last->first, -last->second);
}

void apply_fault_Omega(const std::string& key, std::vector<NOElement>& Omega) {
  if (key != "perturb-omega") return;
  Omega.back() += NOElement::lambda_gen(Omega.back().rank(), 0);
}

void validate_fault_key(const std::string& key) {
  if (key.empty()) return;
  for (const auto& k : kFaultKeys)
    if (k == key) return;
  throw std::invalid_argument("unknown fault-inject key: " + key);
}

namespace {

struct StageClock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

}  // namespace

Json PipelineReport::to_json() const {
  Json j;
  j["type"] = std::string(1, type);
  j["rank"] = rank;
  j["order"] = order;
  j["fault_inject"] = fault_inject;
  j["pass"] = pass;
  Json st = Json::array();
  for (const auto& s : stages) {
    Json js;
    js["name"] = s.name;
    js["pass"] = s.pass;
    js["checks"] = checks_to_json(s.checks);
    if (s.millis >= 0) js["millis"] = s.millis;
    st.push_back(std::move(js));
  }
  j["stages"] = std::move(st);
  return j;
}

PipelineReport run_pipeline(const PipelineOptions& opts) {
  validate_fault_key(opts.fault_inject);
  if (!RootSystem::supported(opts.type, opts.rank))
    throw UnsupportedType(std::string("unsupported type ") + opts.type +
                          std::to_string(opts.rank));

  PipelineReport report;
  report.type = opts.type;
  report.rank = opts.rank;
  report.order = opts.order;
  report.fault_inject = opts.fault_inject;

  auto run_stage = [&](const std::string& name, auto&& body) -> bool {
    StageClock clock;
    StageReport stage;
    stage.name = name;
    try {
      body(stage.checks);
      stage.pass = true;
      for (const auto& c : stage.checks)
        if (!c.pass) stage.pass = false;
    } catch (const std::exception& e) {
      stage.pass = false;
      stage.checks.push_back({"exception", false, e.what()});
    }
    if (opts.timings) stage.millis = clock.elapsed_ms();
    report.stages.push_back(std::move(stage));
    return report.stages.back().pass;
  };

  const RootSystem rs(opts.type, opts.rank);
  const std::size_t l = static_cast<std::size_t>(opts.rank);
  WeylGroup W;
  InvariantSet inv;
  std::vector<NOElement> Omega;
  std::vector<SparsePoly> F;
  std::vector<QMatrix> B;
  SchubertBasis basis;

  bool ok = run_stage("root-system", [&](std::vector<CheckResult>& checks) {
    W = WeylGroup::generate(rs);
    bool lengths_ok = true;
    for (std::size_t w = 0; w < W.size(); ++w)
      if (W[w].length != W.inversion_count(rs, w)) lengths_ok = false;
    checks.push_back({"weyl-order", W.size() > 0,
                      "|W| = " + std::to_string(W.size())});
    checks.push_back({"lengths-vs-inversions", lengths_ok,
                      lengths_ok ? "all lengths match inversion counts"
                                 : "length/inversion mismatch"});
  });
  if (!ok) {
    report.pass = false;
    return report;
  }

  ok = run_stage("invariants", [&](std::vector<CheckResult>& checks) {
    inv = chevalley_generators(rs, W);
    long prod = 1;
    for (int d : inv.degrees) prod *= d;
    const bool order_ok = prod == static_cast<long>(W.size());
    checks.push_back({"degree-product", order_ok,
                      "prod d_k = " + std::to_string(prod) + ", |W| = " +
                          std::to_string(W.size())});
    const SparsePoly jac = jacobian_det(inv);
    const bool jac_ok =
        !jac.is_zero() &&
        jac.degree() == static_cast<long>(rs.positive_roots().size());
    checks.push_back({"jacobian", jac_ok,
                      "deg = " + std::to_string(jac.degree()) + ", |Phi+| = " +
                          std::to_string(rs.positive_roots().size())});
  });
  if (!ok) {
    report.pass = false;
    return report;
  }

  ok = run_stage("omega-solve", [&](std::vector<CheckResult>& checks) {
    const NOElement Om = build_Omega(rs);
    for (std::size_t k = 0; k < inv.u.size(); ++k) {
      Omega.push_back(solve_Omega_k(rs, inv.u[k]));
      const bool commutes = commutator_uenv(Omega.back(), Om).is_zero();
      const bool projects = mu_projection(Omega.back()) == inv.u[k];
      checks.push_back({"omega-" + std::to_string(k + 1), commutes && projects,
                        commutes ? "commutes with Omega" : "commutator nonzero"});
    }
    if (!opts.fault_inject.empty()) apply_fault_Omega(opts.fault_inject, Omega);
  });
  if (!ok) {
    report.pass = false;
    return report;
  }

  ok = run_stage("fk-extraction", [&](std::vector<CheckResult>& checks) {
    for (std::size_t k = 0; k < Omega.size(); ++k) {
      FkSplit split = split_F_f(Omega[k]);
      F.push_back(split.F);
      const bool hom = split.F.is_homogeneous();
      checks.push_back({"fk-" + std::to_string(k + 1), hom,
                        "terms = " + std::to_string(split.F.term_count())});
    }
    for (std::size_t k = 0; k < F.size(); ++k) {
      const bool p = poisson_check(F[k], F[0]);
      checks.push_back({"poisson-" + std::to_string(k + 1), p,
                        p ? "{F_k, F_1} = 0" : "Poisson bracket nonzero"});
    }
    if (!opts.fault_inject.empty()) apply_fault_F(opts.fault_inject, F);
  });
  if (!ok) {
    report.pass = false;
    return report;
  }

  std::vector<DiffOp> D;
  const DiffOp H = build_H(rs);
  ok = run_stage("operator-commutators", [&](std::vector<CheckResult>& checks) {
    auto qlv = ql_vars(opts.rank);
    for (std::size_t k = 0; k < Omega.size(); ++k) {
      D.push_back(rho_Dk(Omega[k], rs));
      const std::string id = std::to_string(k + 1);
      const bool comm = commutator_diffop(D.back(), H).is_zero();
      checks.push_back({"commutator-D" + id + "-H", comm,
                        comm ? "[D_k, H] = 0" : "commutator nonzero"});
      // e^t -> 0 limit must be u_k(2 Lambda), with no h left over.
      std::vector<SparsePoly> twoL;
      for (std::size_t i = 0; i < l; ++i)
        twoL.push_back(SparsePoly::variable(qlv, l + i) * Rational(2));
      const bool et_ok = et_zero_part(D.back()) == inv.u[k].substitute(twoL);
      checks.push_back({"et-limit-D" + id, et_ok,
                        et_ok ? "matches u_k(2 Lambda)" : "limit mismatch"});
      // h -> 0 symbol must be 2^{d_k} F_k(-G_ii Q_i, Lambda_i).
      if (k < F.size() && opts.fault_inject != "drop-fk-term") {
        std::vector<SparsePoly> images;
        for (std::size_t i = 0; i < l; ++i)
          images.push_back(SparsePoly::variable(qlv, i) *
                           (-rs.coroot_gram()(i, i)));
        for (std::size_t i = 0; i < l; ++i)
          images.push_back(SparsePoly::variable(qlv, l + i));
        Rational scale(1);
        for (int t = 0; t < inv.degrees[k]; ++t) scale *= 2;
        const bool sym_ok =
            h_zero_symbol(D.back()) == F[k].substitute(images) * scale;
        checks.push_back({"symbol-D" + id, sym_ok,
                          sym_ok ? "matches 2^{d_k} F_k" : "symbol mismatch"});
      }
    }
  });
  if (!ok) {
    report.pass = false;
    return report;
  }

  ok = run_stage("hypotheses", [&](std::vector<CheckResult>& checks) {
    basis = SchubertBasis::build(W);
    for (int i = 0; i < opts.rank; ++i)
      B.push_back(quantum_chevalley(rs, W, basis, i));
    if (!opts.fault_inject.empty()) apply_fault_B(opts.fault_inject, B, basis);
    checks = verify_hypotheses(rs, W, basis, B);
  });
  report.pass = ok;

  ok = run_stage("relations", [&](std::vector<CheckResult>& checks) {
    checks = verify_relations(F, B, rs, basis);
  });
  report.pass = report.pass && ok;

  ok = run_stage("flat-sections", [&](std::vector<CheckResult>& checks) {
    const PairingData pd = pairing_data(W, basis, B);
    auto series_ok = [&](const auto& s) {
      return opts.h_value ? s.is_zero_at_h(*opts.h_value) : s.is_zero();
    };
    // Every dual class for small groups; representative corner classes for
    // the large ones, where a full sweep would dominate the run.
    std::vector<std::size_t> sample;
    if (W.size() <= 24)
      for (std::size_t a = 0; a < W.size(); ++a) sample.push_back(a);
    else
      sample = {0, W.size() / 2, W.size() - 1};
    for (std::size_t a : sample) {
      std::vector<Rational> e(W.size(), Rational(0));
      e[a] = 1;
      const FormalSection s = solve_flat_section(pd.A, e, opts.order);
      bool residuals = true;
      for (std::size_t i = 0; i < l; ++i)
        if (!series_ok(flat_residual(pd.A, s, i))) residuals = false;
      bool annihilated = series_ok(annihilation_check(H, s, basis));
      for (const auto& d : D)
        if (!series_ok(annihilation_check(d, s, basis))) annihilated = false;
      checks.push_back({"section-" + std::to_string(a), residuals && annihilated,
                        residuals ? (annihilated ? "residuals and D_k.(s,1) vanish"
                                                 : "annihilation check nonzero")
                                  : "flatness residual nonzero"});
    }
    const KimCertificate cert = kim_lemma_certificate(rs);
    checks.push_back({"gram-positive", cert.positive_definite,
                      "leading principal minors positive"});
  });
  report.pass = report.pass && ok;

  return report;
}

}  // namespace qtoda
