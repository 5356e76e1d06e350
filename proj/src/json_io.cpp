#include "qtoda/json_io.hpp"

namespace qtoda {

namespace {

void require(bool cond, const std::string& path, const std::string& msg) {
  if (!cond) throw JsonError(path + ": " + msg);
}

std::vector<int> int_array(const Json& j, const std::string& path) {
  require(j.is_array(), path, "expected an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const Json& v = j[i];
    require(v.is_number_integer(), path + "[" + std::to_string(i) + "]",
            "expected an integer");
    out.push_back(v.get<int>());
  }
  return out;
}

MultiIndex exps_from_json(const Json& j, const std::string& path, std::size_t nvars) {
  std::vector<int> e = int_array(j, path);
  require(e.size() == nvars, path, "expected " + std::to_string(nvars) + " exponents");
  for (std::size_t i = 0; i < e.size(); ++i)
    require(e[i] >= 0, path + "[" + std::to_string(i) + "]",
            "exponents must be nonnegative");
  MultiIndex m(nvars);
  for (std::size_t i = 0; i < nvars; ++i) m[i] = e[i];
  return m;
}

Rational coeff_from_json(const Json& j, const std::string& path) {
  require(j.is_string(), path, "expected a rational as a string \"p/q\"");
  try {
    Rational c = rat_from_string(j.get<std::string>());
    require(!qtoda::is_zero(c), path, "zero coefficients must be omitted");
    return c;
  } catch (const std::invalid_argument& e) {
    throw JsonError(path + ": " + e.what());
  }
}

std::shared_ptr<const VarSet> varset_from_json(const Json& j, const std::string& path) {
  require(j.is_object(), path, "expected an object");
  require(j.contains("vars"), path, "missing \"vars\"");
  require(j.contains("weights"), path, "missing \"weights\"");
  const Json& jn = j["vars"];
  require(jn.is_array(), path + ".vars", "expected an array of strings");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < jn.size(); ++i) {
    require(jn[i].is_string(), path + ".vars[" + std::to_string(i) + "]",
            "expected a string");
    names.push_back(jn[i].get<std::string>());
  }
  std::vector<int> weights = int_array(j["weights"], path + ".weights");
  require(weights.size() == names.size(), path, "\"vars\" and \"weights\" disagree in length");
  return VarSet::make(std::move(names), std::move(weights));
}

Json terms_to_json(const SparsePoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json t;
    t["coeff"] = rat_to_string(c);
    t["exps"] = m.e;
    terms.push_back(std::move(t));
  }
  return terms;
}

SparsePoly terms_from_json(const Json& j, const std::string& path,
                           std::shared_ptr<const VarSet> vars) {
  require(j.is_array(), path, "expected an array of terms");
  SparsePoly p(vars);
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string tp = path + "[" + std::to_string(i) + "]";
    const Json& t = j[i];
    require(t.is_object(), tp, "expected a term object");
    require(t.contains("coeff"), tp, "missing \"coeff\"");
    require(t.contains("exps"), tp, "missing \"exps\"");
    MultiIndex m = exps_from_json(t["exps"], tp + ".exps", vars->size());
    require(qtoda::is_zero(p.coeff(m)), tp, "duplicate exponent vector");
    p.add_term(m, coeff_from_json(t["coeff"], tp + ".coeff"));
  }
  return p;
}

}  // namespace

Json poly_to_json(const SparsePoly& p) {
  Json j;
  j["vars"] = p.vars()->names();
  j["weights"] = p.vars()->weights();
  j["terms"] = terms_to_json(p);
  return j;
}

SparsePoly poly_from_json(const Json& j) {
  auto vars = varset_from_json(j, "$");
  require(j.contains("terms"), "$", "missing \"terms\"");
  return terms_from_json(j["terms"], "$.terms", vars);
}

Json no_element_to_json(const NOElement& e) {
  Json j;
  j["rank"] = e.rank();
  Json terms = Json::array();
  for (const auto& [k, c] : e.terms()) {
    Json t;
    t["coeff"] = rat_to_string(c);
    t["x"] = k.x.e;
    t["l"] = k.l.e;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

NOElement no_element_from_json(const Json& j) {
  require(j.is_object(), "$", "expected an object");
  require(j.contains("rank") && j["rank"].is_number_integer(), "$.rank",
          "expected an integer rank");
  int rank = j["rank"].get<int>();
  require(rank >= 1, "$.rank", "rank must be positive");
  require(j.contains("terms"), "$", "missing \"terms\"");
  const Json& jt = j["terms"];
  require(jt.is_array(), "$.terms", "expected an array of terms");
  NOElement e(rank);
  for (std::size_t i = 0; i < jt.size(); ++i) {
    std::string tp = "$.terms[" + std::to_string(i) + "]";
    const Json& t = jt[i];
    require(t.is_object(), tp, "expected a term object");
    require(t.contains("coeff") && t.contains("x") && t.contains("l"), tp,
            "term needs \"coeff\", \"x\" and \"l\"");
    XLKey k{exps_from_json(t["x"], tp + ".x", rank),
            exps_from_json(t["l"], tp + ".l", rank)};
    require(qtoda::is_zero(e.coeff(k)), tp, "duplicate monomial");
    e.add_term(k, coeff_from_json(t["coeff"], tp + ".coeff"));
  }
  return e;
}

Json diffop_to_json(const DiffOp& d) {
  Json j;
  j["rank"] = d.rank();
  Json terms = Json::array();
  for (const auto& [k, c] : d.terms()) {
    Json t;
    t["coeff"] = rat_to_string(c);
    t["et"] = k.et.e;
    t["hd"] = k.hd.e;
    t["h"] = k.hpow;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

DiffOp diffop_from_json(const Json& j) {
  require(j.is_object(), "$", "expected an object");
  require(j.contains("rank") && j["rank"].is_number_integer(), "$.rank",
          "expected an integer rank");
  int rank = j["rank"].get<int>();
  require(rank >= 1, "$.rank", "rank must be positive");
  require(j.contains("terms"), "$", "missing \"terms\"");
  const Json& jt = j["terms"];
  require(jt.is_array(), "$.terms", "expected an array of terms");
  DiffOp d(rank);
  for (std::size_t i = 0; i < jt.size(); ++i) {
    std::string tp = "$.terms[" + std::to_string(i) + "]";
    const Json& t = jt[i];
    require(t.is_object(), tp, "expected a term object");
    require(t.contains("coeff") && t.contains("et") && t.contains("hd") &&
                t.contains("h"),
            tp, "term needs \"coeff\", \"et\", \"hd\" and \"h\"");
    require(t["h"].is_number_integer(), tp + ".h", "expected an integer");
    DOKey k{exps_from_json(t["et"], tp + ".et", rank),
            exps_from_json(t["hd"], tp + ".hd", rank), t["h"].get<int>()};
    require(qtoda::is_zero(d.coeff(k)), tp, "duplicate monomial");
    d.add_term(k, coeff_from_json(t["coeff"], tp + ".coeff"));
  }
  return d;
}

Json qmatrix_to_json(const QMatrix& m) {
  Json j;
  j["n"] = m.size();
  j["vars"] = m.vars()->names();
  j["weights"] = m.vars()->weights();
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(terms_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

QMatrix qmatrix_from_json(const Json& j) {
  require(j.is_object(), "$", "expected an object");
  require(j.contains("n") && j["n"].is_number_integer(), "$.n",
          "expected an integer size");
  std::size_t n = j["n"].get<std::size_t>();
  auto vars = varset_from_json(j, "$");
  require(j.contains("entries"), "$", "missing \"entries\"");
  const Json& rows = j["entries"];
  require(rows.is_array() && rows.size() == n, "$.entries",
          "expected " + std::to_string(n) + " rows");
  QMatrix m(n, vars);
  for (std::size_t r = 0; r < n; ++r) {
    std::string rp = "$.entries[" + std::to_string(r) + "]";
    const Json& row = rows[r];
    require(row.is_array() && row.size() == n, rp,
            "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = terms_from_json(row[c], rp + "[" + std::to_string(c) + "]", vars);
  }
  return m;
}

Json ratmat_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json checks_to_json(const std::vector<CheckResult>& checks) {
  Json arr = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["id"] = c.id;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace qtoda
