#include "qlie/json_io.hpp"

#include <stdexcept>

namespace qlie {

Json to_json(const Rational& r) { return rational_to_string(r); }

Json to_json(const Quaternion& q) {
  return Json::array({rational_to_string(q.re), rational_to_string(q.im_i),
                      rational_to_string(q.im_j), rational_to_string(q.im_k)});
}

Json to_json(const MatrixQ& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries) entries.push_back(to_json(e));
  return Json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(entries)}};
}

Json to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& row : s.basis()) {
    Json jr = Json::array();
    for (const auto& x : row) jr.push_back(rational_to_string(x));
    basis.push_back(std::move(jr));
  }
  return Json{{"ambient_dim", s.ambient_dim()}, {"basis", std::move(basis)}};
}

Json to_json(const LieAlgebra& algebra) {
  Json basis = Json::array();
  for (const auto& m : algebra.basis) basis.push_back(to_json(m));
  Json structure = Json::array();
  const int d = algebra.dim();
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (const auto& [e, v] : algebra.structure.at_upper(a, b))
        structure.push_back(Json::array({a, b, e, rational_to_string(v)}));
  return Json{{"name", algebra.name},
              {"matrix_size", algebra.matrix_size()},
              {"basis", std::move(basis)},
              {"structure", std::move(structure)}};
}

Rational rational_from_json(const Json& j) {
  auto r = rational_from_string(j.get<std::string>());
  if (!r) throw std::invalid_argument("malformed rational literal");
  return *r;
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("quaternion must be a 4-array of rationals");
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
          rational_from_json(j[3])};
}

MatrixQ matrix_from_json(const Json& j) {
  MatrixQ m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const Json& entries = j.at("entries");
  if (entries.size() != m.entries.size())
    throw std::invalid_argument("matrix entry count does not match shape");
  for (std::size_t t = 0; t < m.entries.size(); ++t)
    m.entries[t] = quaternion_from_json(entries[t]);
  return m;
}

Subspace subspace_from_json(const Json& j) {
  int ambient = j.at("ambient_dim").get<int>();
  std::vector<RealVector> rows;
  for (const Json& jr : j.at("basis")) {
    RealVector row;
    for (const Json& x : jr) row.push_back(rational_from_json(x));
    if (static_cast<int>(row.size()) != ambient)
      throw std::invalid_argument("subspace basis vector has wrong length");
    rows.push_back(std::move(row));
  }
  return Subspace::from_spanning(ambient, rows);
}

LieAlgebra lie_algebra_from_json(const Json& j) {
  LieAlgebra algebra;
  algebra.name = j.at("name").get<std::string>();
  for (const Json& jm : j.at("basis")) algebra.basis.push_back(matrix_from_json(jm));
  const int d = algebra.dim();
  algebra.structure = StructureTensor::empty(d);
  std::vector<SparseCoords> upper(static_cast<std::size_t>(d) * d);
  for (const Json& t : j.at("structure")) {
    int a = t.at(0).get<int>(), b = t.at(1).get<int>(), e = t.at(2).get<int>();
    if (a < 0 || b <= a || b >= d || e < 0 || e >= d)
      throw std::invalid_argument("structure triple out of range");
    upper[static_cast<std::size_t>(a) * d + b].emplace_back(e, rational_from_json(t.at(3)));
  }
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      algebra.structure.set_upper(a, b, std::move(upper[static_cast<std::size_t>(a) * d + b]));
  algebra.is_closed = true;
  return algebra;
}

}  // namespace qlie
