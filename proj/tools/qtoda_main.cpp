#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "qtoda/flat_sections.hpp"
#include "qtoda/pipeline.hpp"
#include "qtoda/toda.hpp"

using namespace qtoda;

namespace {

struct CommonOpts {
  std::string type = "A";
  int rank = 1;
  bool json = false;
  std::string out;
  int order = 3;
  std::string h_value;
  std::string fault;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_order = false) {
  cmd->add_option("--type", o.type, "Lie type (A, B, C, D or G)")
      ->check(CLI::IsMember({"A", "B", "C", "D", "G"}));
  cmd->add_option("--rank", o.rank, "rank of the root system")->required();
  cmd->add_flag("--json", o.json, "emit JSON instead of text");
  cmd->add_option("--out", o.out, "write output to PATH instead of stdout");
  if (with_order) {
    cmd->add_option("--order", o.order, "e^t truncation order");
    cmd->add_option("--h-value", o.h_value,
                    "evaluate residuals at a rational h instead of symbolic h");
  }
  cmd->add_option("--fault-inject", o.fault, "corrupt a named artifact (testing only)");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + out + " for writing");
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit_json(const Json& j, const std::string& out) { emit(j.dump(2), out); }

RootSystem make_rs(const CommonOpts& o) {
  if (o.type.size() != 1 || !RootSystem::supported(o.type[0], o.rank))
    throw UnsupportedType("unsupported type " + o.type + std::to_string(o.rank));
  return RootSystem(o.type[0], o.rank);
}

std::optional<Rational> parse_h(const CommonOpts& o) {
  if (o.h_value.empty()) return std::nullopt;
  Rational h = rat_from_string(o.h_value);
  if (is_zero(h)) throw std::invalid_argument("--h-value must be nonzero");
  return h;
}

// Shared derived artifacts for the verify subcommands.
struct Artifacts {
  RootSystem rs;
  WeylGroup W;
  InvariantSet inv;
  std::vector<NOElement> Omega;
  std::vector<SparsePoly> F;
  SchubertBasis basis;
  std::vector<QMatrix> B;

  explicit Artifacts(const CommonOpts& o, bool need_toda, bool need_qcoh)
      : rs(make_rs(o)), W(WeylGroup::generate(rs)) {
    validate_fault_key(o.fault);
    if (need_toda) {
      inv = chevalley_generators(rs, W);
      for (const auto& u : inv.u) Omega.push_back(solve_Omega_k(rs, u));
      for (const auto& om : Omega) F.push_back(split_F_f(om).F);
      if (!o.fault.empty()) {
        apply_fault_Omega(o.fault, Omega);
        apply_fault_F(o.fault, F);
      }
    }
    if (need_qcoh) {
      basis = SchubertBasis::build(W);
      for (int i = 0; i < rs.rank(); ++i)
        B.push_back(quantum_chevalley(rs, W, basis, i));
      if (!o.fault.empty()) apply_fault_B(o.fault, B, basis);
    }
  }
};

int report_checks(const std::vector<CheckResult>& checks, const CommonOpts& o) {
  bool pass = true;
  for (const auto& c : checks) pass = pass && c.pass;
  if (o.json) {
    Json j;
    j["pass"] = pass;
    j["checks"] = checks_to_json(checks);
    emit_json(j, o.out);
  } else {
    std::string text;
    for (const auto& c : checks)
      text += (c.pass ? "PASS " : "FAIL ") + c.id +
              (c.detail.empty() ? "" : ": " + c.detail) + "\n";
    text += pass ? "all checks passed\n" : "verification failed\n";
    emit(text, o.out);
  }
  return pass ? 0 : 1;
}

std::vector<CheckResult> commutator_checks(const Artifacts& art) {
  std::vector<CheckResult> checks;
  const DiffOp H = build_H(art.rs);
  for (std::size_t k = 0; k < art.Omega.size(); ++k) {
    const DiffOp D = rho_Dk(art.Omega[k], art.rs);
    const bool ok = commutator_diffop(D, H).is_zero();
    checks.push_back({"commutator-D" + std::to_string(k + 1) + "-H", ok,
                      ok ? "[D_k, H] = 0" : "commutator nonzero"});
  }
  return checks;
}

std::vector<CheckResult> flat_section_checks(const Artifacts& art,
                                             const CommonOpts& o) {
  std::vector<CheckResult> checks;
  const std::optional<Rational> h = parse_h(o);
  const PairingData pd = pairing_data(art.W, art.basis, art.B);
  const DiffOp H = build_H(art.rs);
  std::vector<DiffOp> D;
  for (const auto& om : art.Omega) D.push_back(rho_Dk(om, art.rs));
  auto ok_series = [&](const auto& s) { return h ? s.is_zero_at_h(*h) : s.is_zero(); };
  for (std::size_t a = 0; a < art.W.size(); ++a) {
    std::vector<Rational> e(art.W.size(), Rational(0));
    e[a] = 1;
    const FormalSection s = solve_flat_section(pd.A, e, o.order);
    bool residuals = true;
    for (int i = 0; i < art.rs.rank(); ++i)
      if (!ok_series(flat_residual(pd.A, s, static_cast<std::size_t>(i))))
        residuals = false;
    bool annihilated = ok_series(annihilation_check(H, s, art.basis));
    for (const auto& d : D)
      if (!ok_series(annihilation_check(d, s, art.basis))) annihilated = false;
    checks.push_back({"section-" + std::to_string(a), residuals && annihilated,
                      residuals ? (annihilated ? "residuals and D_k.(s,1) vanish"
                                               : "annihilation check nonzero")
                                : "flatness residual nonzero"});
  }
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quantum Toda / quantum cohomology toolkit"};
  app.require_subcommand(1);

  CommonOpts o;

  CLI::App* c_root = app.add_subcommand("root-system", "Cartan data and Weyl group");
  add_common(c_root, o);
  CLI::App* c_inv = app.add_subcommand("invariants", "Chevalley generators u_k");
  add_common(c_inv, o);
  CLI::App* c_toda = app.add_subcommand("toda", "conserved quantities F_k, f_k");
  add_common(c_toda, o);
  CLI::App* c_present =
      app.add_subcommand("present", "quantum cohomology presentation data");
  add_common(c_present, o);

  CLI::App* c_verify = app.add_subcommand("verify", "run verification suites");
  c_verify->require_subcommand(1);
  CLI::App* v_hyp = c_verify->add_subcommand("hypotheses", "theorem hypotheses (i)-(vi)");
  CLI::App* v_rel = c_verify->add_subcommand("relations", "Kim relations F_k = 0");
  CLI::App* v_comm = c_verify->add_subcommand("commutators", "[D_k, H] = 0");
  CLI::App* v_flat = c_verify->add_subcommand("flat-sections",
                                              "flatness and annihilation checks");
  CLI::App* v_all = c_verify->add_subcommand("all", "every verification suite");
  for (CLI::App* v : {v_hyp, v_rel, v_comm, v_flat, v_all}) add_common(v, o, true);

  CLI::App* c_pipe = app.add_subcommand("pipeline", "end-to-end theorem pipeline");
  add_common(c_pipe, o, true);
  bool timings = false;
  c_pipe->add_flag("--timings", timings,
                   "include per-stage wall time (non-reproducible output)");

  CLI::App* c_fix = app.add_subcommand("fixtures", "write golden fixtures to a directory");
  add_common(c_fix, o);
  std::string fixture_dir;
  c_fix->add_option("--dir", fixture_dir, "target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_root->parsed()) {
      const RootSystem rs = make_rs(o);
      const WeylGroup W = WeylGroup::generate(rs);
      Json j;
      j["type"] = o.type;
      j["rank"] = o.rank;
      j["cartan"] = ratmat_to_json(rs.cartan());
      j["coroot_gram"] = ratmat_to_json(rs.coroot_gram());
      Json roots = Json::array();
      for (const auto& r : rs.positive_roots()) {
        Json jr;
        Json wc = Json::array();
        for (const auto& c : r.weight_coords) wc.push_back(rat_to_string(c));
        jr["weight_coords"] = std::move(wc);
        jr["norm2"] = rat_to_string(r.norm2);
        jr["coroot_height"] = r.coroot_height;
        roots.push_back(std::move(jr));
      }
      j["positive_roots"] = std::move(roots);
      j["weyl_order"] = W.size();
      if (o.json || !o.out.empty()) {
        emit_json(j, o.out);
      } else {
        emit("type " + o.type + std::to_string(o.rank) + ": |Phi+| = " +
                 std::to_string(rs.positive_roots().size()) +
                 ", |W| = " + std::to_string(W.size()),
             o.out);
      }
      return 0;
    }

    if (c_inv->parsed()) {
      const Artifacts art(o, /*need_toda=*/false, /*need_qcoh=*/false);
      const InvariantSet inv = chevalley_generators(art.rs, art.W);
      Json j = Json::array();
      for (std::size_t k = 0; k < inv.u.size(); ++k) {
        Json ju;
        ju["k"] = k + 1;
        ju["degree"] = inv.degrees[k];
        ju["u"] = poly_to_json(inv.u[k]);
        j.push_back(std::move(ju));
      }
      if (o.json || !o.out.empty()) {
        emit_json(j, o.out);
      } else {
        std::string text;
        for (std::size_t k = 0; k < inv.u.size(); ++k)
          text += "u_" + std::to_string(k + 1) + " = " + inv.u[k].to_string() + "\n";
        emit(text, o.out);
      }
      return 0;
    }

    if (c_toda->parsed()) {
      const Artifacts art(o, /*need_toda=*/true, /*need_qcoh=*/false);
      Json j = Json::array();
      for (std::size_t k = 0; k < art.Omega.size(); ++k) {
        const FkSplit split = split_F_f(art.Omega[k]);
        Json jk;
        jk["k"] = k + 1;
        jk["omega"] = no_element_to_json(art.Omega[k]);
        jk["F"] = poly_to_json(split.F);
        jk["f"] = poly_to_json(split.f);
        j.push_back(std::move(jk));
      }
      if (o.json || !o.out.empty()) {
        emit_json(j, o.out);
      } else {
        std::string text;
        for (std::size_t k = 0; k < art.F.size(); ++k)
          text += "F_" + std::to_string(k + 1) + " = " + art.F[k].to_string() + "\n";
        emit(text, o.out);
      }
      return 0;
    }

    if (c_present->parsed()) {
      const Artifacts art(o, /*need_toda=*/true, /*need_qcoh=*/true);
      Json j;
      Json ju = Json::array();
      Json jf = Json::array();
      Json jrel = Json::array();
      auto qv = q_vars(o.rank);
      auto wv = weight_vars(o.rank);
      std::vector<std::string> mixed_names = qv->names();
      mixed_names.insert(mixed_names.end(), wv->names().begin(), wv->names().end());
      std::vector<int> mixed_weights = qv->weights();
      mixed_weights.insert(mixed_weights.end(), wv->weights().begin(),
                           wv->weights().end());
      auto mixed = VarSet::make(mixed_names, mixed_weights);
      for (std::size_t k = 0; k < art.F.size(); ++k) {
        ju.push_back(poly_to_json(art.inv.u[k]));
        jf.push_back(poly_to_json(art.F[k]));
        // Relation polynomial: F_k with Q_i |-> -G_ii q_i, L_i |-> l_i.
        std::vector<SparsePoly> images;
        for (int i = 0; i < o.rank; ++i)
          images.push_back(SparsePoly::variable(mixed, static_cast<std::size_t>(i)) *
                           (-art.rs.coroot_gram()(static_cast<std::size_t>(i),
                                                  static_cast<std::size_t>(i))));
        for (int i = 0; i < o.rank; ++i)
          images.push_back(
              SparsePoly::variable(mixed, static_cast<std::size_t>(o.rank + i)));
        jrel.push_back(poly_to_json(art.F[k].substitute(images)));
      }
      j["u"] = std::move(ju);
      j["F"] = std::move(jf);
      j["relations"] = std::move(jrel);
      Json jb = Json::array();
      for (int pos : art.basis.order) jb.push_back(art.W[static_cast<std::size_t>(pos)].word);
      j["basis_words"] = std::move(jb);
      Json jB = Json::array();
      for (const auto& b : art.B) jB.push_back(qmatrix_to_json(b));
      j["B"] = std::move(jB);
      emit_json(j, o.out);
      return 0;
    }

    if (c_fix->parsed()) {
      const Artifacts art(o, /*need_toda=*/true, /*need_qcoh=*/true);
      const std::string stem = fixture_dir + "/" + o.type + std::to_string(o.rank);
      for (std::size_t k = 0; k < art.Omega.size(); ++k) {
        emit(no_element_to_json(art.Omega[k]).dump(2),
             stem + "_omega" + std::to_string(k + 1) + ".json");
        emit(poly_to_json(art.F[k]).dump(2),
             stem + "_F" + std::to_string(k + 1) + ".json");
      }
      for (std::size_t i = 0; i < art.B.size(); ++i)
        emit(qmatrix_to_json(art.B[i]).dump(2),
             stem + "_B" + std::to_string(i + 1) + ".json");
      return 0;
    }

    if (c_pipe->parsed()) {
      PipelineOptions po;
      po.type = o.type[0];
      po.rank = o.rank;
      po.order = o.order;
      po.fault_inject = o.fault;
      po.timings = timings;
      if (!o.h_value.empty()) po.h_value = parse_h(o);
      const PipelineReport report = run_pipeline(po);
      emit_json(report.to_json(), o.out);
      return report.pass ? 0 : 1;
    }

    // verify subcommands
    const bool all = v_all->parsed();
    const bool need_toda = all || v_rel->parsed() || v_comm->parsed() || v_flat->parsed();
    const bool need_qcoh = all || v_hyp->parsed() || v_rel->parsed() || v_flat->parsed();
    const Artifacts art(o, need_toda, need_qcoh);
    std::vector<CheckResult> checks;
    if (all || v_hyp->parsed()) {
      auto c = verify_hypotheses(art.rs, art.W, art.basis, art.B);
      checks.insert(checks.end(), c.begin(), c.end());
    }
    if (all || v_rel->parsed()) {
      auto c = verify_relations(art.F, art.B, art.rs, art.basis);
      checks.insert(checks.end(), c.begin(), c.end());
    }
    if (all || v_comm->parsed()) {
      auto c = commutator_checks(art);
      checks.insert(checks.end(), c.begin(), c.end());
    }
    if (all || v_flat->parsed()) {
      auto c = flat_section_checks(art, o);
      checks.insert(checks.end(), c.begin(), c.end());
    }
    return report_checks(checks, o);
  } catch (const UnsupportedType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const JsonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
