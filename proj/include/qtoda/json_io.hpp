#pragma once

#include <json.hpp>

#include "qtoda/diff_op.hpp"
#include "qtoda/invariants.hpp"
#include "qtoda/no_element.hpp"
#include "qtoda/qcoh.hpp"
#include "qtoda/sparse_poly.hpp"

namespace qtoda {

using Json = nlohmann::ordered_json;

struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Canonical form: {"vars": [...], "weights": [...],
//                  "terms": [{"coeff": "p/q", "exps": [...]}]}.
// Terms appear in graded-lexicographic order.
Json poly_to_json(const SparsePoly& p);
SparsePoly poly_from_json(const Json& j);

Json no_element_to_json(const NOElement& e);
NOElement no_element_from_json(const Json& j);

Json diffop_to_json(const DiffOp& d);
DiffOp diffop_from_json(const Json& j);

Json qmatrix_to_json(const QMatrix& m);
QMatrix qmatrix_from_json(const Json& j);

Json ratmat_to_json(const RatMat& m);

Json checks_to_json(const std::vector<CheckResult>& checks);

}  // namespace qtoda
