#include "conelab/json_io.hpp"

#include "conelab/version.hpp"

namespace conelab {

namespace {

template <class S>
json scalar_json(const HurwitzScalar<S>& x) {
  json coeffs = json::array();
  for (int k = 0; k < x.dim(); ++k) {
    if constexpr (scalar_traits<S>::exact)
      coeffs.push_back(x[k].str());
    else
      coeffs.push_back(x[k]);
  }
  return json{{"algebra", algebra_name(x.algebra())}, {"coeffs", coeffs}};
}

template <class S>
HurwitzScalar<S> scalar_from(const json& j) {
  const Algebra alg = algebra_from_name(j.at("algebra").get<std::string>());
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != algebra_dim(alg))
    throw std::invalid_argument("coefficient count does not match the algebra");
  HurwitzScalar<S> x(alg);
  for (int k = 0; k < algebra_dim(alg); ++k) {
    const auto& c = coeffs.at(static_cast<std::size_t>(k));
    if constexpr (scalar_traits<S>::exact) {
      if (c.is_string())
        x[k] = Rational::from_string(c.get<std::string>());
      else if (c.is_number_integer())
        x[k] = Rational(c.get<long>());
      else
        throw std::invalid_argument("exact scalars need integer or \"p/q\" coefficients");
    } else {
      if (c.is_string())
        x[k] = Rational::from_string(c.get<std::string>()).to_double();
      else
        x[k] = c.get<double>();
    }
  }
  return x;
}

template <class S>
json vector_json(const ConeVector<S>& v) {
  json comps = json::array();
  for (int l = 0; l < v.size(); ++l) comps.push_back(scalar_json(v[l]));
  return json{{"algebra", algebra_name(v.algebra())}, {"n", v.size()}, {"components", comps}};
}

template <class S>
json hermitian_json(const HermitianMatrix<S>& X) {
  json rows = json::array();
  for (int l = 0; l < X.size(); ++l) {
    json row = json::array();
    for (int m = 0; m < X.size(); ++m) row.push_back(scalar_json(X.entry(l, m)));
    rows.push_back(row);
  }
  return json{{"algebra", algebra_name(X.algebra())}, {"n", X.size()}, {"entries", rows}};
}

template <class S>
HermitianMatrix<S> hermitian_from(const json& j) {
  const Algebra alg = algebra_from_name(j.at("algebra").get<std::string>());
  const int n = j.at("n").get<int>();
  const auto& rows = j.at("entries");
  if (static_cast<int>(rows.size()) != n) throw std::invalid_argument("entry row count mismatch");
  DenseMatrix<S> raw(alg, n);
  for (int l = 0; l < n; ++l) {
    const auto& row = rows.at(static_cast<std::size_t>(l));
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("entry column count mismatch");
    for (int m = 0; m < n; ++m) raw.at(l, m) = scalar_from<S>(row.at(static_cast<std::size_t>(m)));
  }
  return HermitianMatrix<S>::from_dense(raw);  // validates symmetry
}

}  // namespace

json to_json(const HurwitzScalar<double>& x) { return scalar_json(x); }
json to_json(const HurwitzScalar<Rational>& x) { return scalar_json(x); }
HurwitzScalar<double> hurwitz_from_json(const json& j) { return scalar_from<double>(j); }
HurwitzScalar<Rational> hurwitz_exact_from_json(const json& j) { return scalar_from<Rational>(j); }

json to_json(const ConeVector<double>& v) { return vector_json(v); }
json to_json(const ConeVector<Rational>& v) { return vector_json(v); }

json to_json(const HermitianMatrix<double>& X) { return hermitian_json(X); }
json to_json(const HermitianMatrix<Rational>& X) { return hermitian_json(X); }
HermitianMatrix<double> hermitian_from_json(const json& j) { return hermitian_from<double>(j); }
HermitianMatrix<Rational> hermitian_exact_from_json(const json& j) {
  return hermitian_from<Rational>(j);
}

json to_json(const ConeMap& A) {
  json rows = json::array();
  for (int i = 0; i < A.dim(); ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < A.dim(); ++j2) row.push_back(A.matrix()(i, j2));
    rows.push_back(row);
  }
  return json{{"algebra", algebra_name(A.algebra())},
              {"n", A.n()},
              {"dim", A.dim()},
              {"label", A.label()},
              {"matrix", rows}};
}

ConeMap cone_map_from_json(const json& j) {
  const Algebra alg = algebra_from_name(j.at("algebra").get<std::string>());
  const int n = j.at("n").get<int>();
  const int N = jordan_space_dim(n, alg);
  const auto& rows = j.at("matrix");
  if (static_cast<int>(rows.size()) != N) throw std::invalid_argument("operator row count mismatch");
  Eigen::MatrixXd m(N, N);
  for (int a = 0; a < N; ++a) {
    const auto& row = rows.at(static_cast<std::size_t>(a));
    if (static_cast<int>(row.size()) != N)
      throw std::invalid_argument("operator column count mismatch");
    for (int b = 0; b < N; ++b) m(a, b) = row.at(static_cast<std::size_t>(b)).get<double>();
  }
  return ConeMap(n, alg, std::move(m), j.value("label", ""));
}

json to_json(const SampleCheckReport& r) {
  json out{{"check", r.check},
           {"params", json{{"n", r.n}, {"algebra", algebra_name(r.alg)}, {"eps", r.eps}}},
           {"samples", r.samples},
           {"seed", r.seed},
           {"min_value", r.min_value},
           {"max_abs", r.max_abs},
           {"pass", r.pass},
           {"version", kVersion}};
  if (r.witness) {
    out["witness"] =
        json{{"u", to_json(r.witness->u)}, {"v", to_json(r.witness->v)}, {"value", r.witness->value}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{
        {"name", c.name}, {"min_value", c.min_value}, {"pass", c.pass}, {"count", c.count}});
  json out{{"check", "cross_positive"},
           {"mode", r.mode},
           {"params", json{{"n", r.n},
                           {"algebra", algebra_name(r.alg)},
                           {"eps", r.eps},
                           {"component_floor", r.component_floor}}},
           {"samples", r.samples},
           {"seed", r.seed},
           {"min_value", r.min_value},
           {"pass", r.pass},
           {"checks", checks},
           {"version", kVersion}};
  if (r.witness) {
    out["witness"] =
        json{{"u", to_json(r.witness->u)}, {"v", to_json(r.witness->v)}, {"value", r.witness->value}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const Certificate& c) {
  json steps = json::array();
  for (const auto& s : c.steps)
    steps.push_back(json{{"kind", s.kind}, {"description", s.description}, {"verified", s.verified}});
  return json{{"check", "indecomposability_certificate"},
              {"params", json{{"n", c.n}, {"algebra", algebra_name(c.alg)}}},
              {"steps", steps},
              {"residual", c.residual.str()},
              {"indecomposable", c.indecomposable},
              {"inconclusive", c.inconclusive},
              {"all_verified", c.all_verified},
              {"version", kVersion}};
}

json to_json(const LpReport& r) {
  json out{{"check", "decomposition_lp"},
           {"params", json{{"n", r.n}, {"algebra", algebra_name(r.alg)}}},
           {"constraints", r.constraint_count},
           {"equalities", r.equality_count},
           {"structural_forcing", r.structural_forcing_used},
           {"replay_ok", r.replay_ok},
           {"version", kVersion}};
  switch (r.status) {
    case LpReport::Status::Feasible: out["status"] = "feasible"; break;
    case LpReport::Status::Infeasible: out["status"] = "infeasible"; break;
    case LpReport::Status::NumericalFailure: out["status"] = "numerical_failure"; break;
  }
  if (r.H) {
    json rows = json::array();
    for (int l = 0; l < r.H->size(); ++l) {
      json row = json::array();
      for (int m = 0; m < r.H->size(); ++m) row.push_back(to_json(r.H->at(l, m)));
      rows.push_back(row);
    }
    out["H"] = rows;
  }
  if (r.witness) {
    json mult = json::array();
    for (const auto& q : r.witness->multipliers) mult.push_back(q.str());
    out["farkas_multipliers"] = mult;
  }
  return out;
}

}  // namespace conelab
