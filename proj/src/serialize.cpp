#include "pgca/serialize.hpp"

#include <algorithm>

#include "pgca/error.hpp"

namespace pgca {

namespace {

Error config_error(const std::string& what) { return Error(ErrorKind::ConfigError, what); }

}  // namespace

void require_keys(const Json& obj, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!obj.is_object()) throw config_error(std::string(where) + " must be a JSON object");
  for (const auto& [key, value] : obj.items())
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw config_error("unknown key '" + key + "' in " + std::string(where));
}

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw config_error("scalars must be strings or integers, got " + j.dump());
}

Json to_json(const BivariatePolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"xexp", e.x}, {"yexp", e.y}, {"coeff", to_json(c)}});
  return out;
}

BivariatePolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) return BivariatePolynomial(scalar_from_json(j));
  BivariatePolynomial out;
  for (const auto& term : j) {
    require_keys(term, {"xexp", "yexp", "coeff"}, "polynomial term");
    const int x = term.value("xexp", 0);
    const int y = term.value("yexp", 0);
    if (x < 0 || y < 0) throw config_error("polynomial exponents must be non-negative");
    out += BivariatePolynomial::monomial(x, y, scalar_from_json(term.at("coeff")));
  }
  return out;
}

Json to_json(const OmegaSpec& spec) {
  Json out{{"variant", std::string(variant_name(spec.variant))}, {"lambda", to_json(spec.lambda)}};
  if (spec.variant == OmegaVariant::DeltaOnly) {
    out["delta"] = to_json(spec.delta);
  } else {
    out["eta"] = to_json(spec.eta);
    out["sigma"] = to_json(spec.sigma);
  }
  return out;
}

OmegaSpec omega_spec_from_json(const Json& j) {
  require_keys(j, {"variant", "lambda", "eta", "sigma", "delta"}, "omega spec");
  OmegaSpec spec;
  spec.variant = parse_variant(j.at("variant").get<std::string>());
  spec.lambda = scalar_from_json(j.at("lambda"));
  if (spec.variant == OmegaVariant::DeltaOnly) {
    if (j.contains("eta") || j.contains("sigma")) throw config_error("delta_only specs take lambda and delta only");
    spec.sigma = BivariatePolynomial();
    spec.delta = polynomial_from_json(j.at("delta"));
  } else {
    if (j.contains("delta")) throw config_error("sigma variants take lambda, eta and sigma");
    spec.eta = j.contains("eta") ? scalar_from_json(j.at("eta")) : Scalar();
    spec.sigma = polynomial_from_json(j.at("sigma"));
  }
  spec.validate();
  return spec;
}

Json to_json(const WhittakerDatum& d) {
  Json values = Json::object();
  for (const auto& [g, v] : d.values) values[g.to_string()] = to_json(v);
  return {{"m", d.m},
          {"n", d.n},
          {"values", values},
          {"centrals", {{"c1", to_json(d.centrals[0])}, {"c2", to_json(d.centrals[1])}, {"c3", to_json(d.centrals[2])}}}};
}

WhittakerDatum datum_from_json(const Json& j) {
  require_keys(j, {"m", "n", "values", "centrals"}, "whittaker datum");
  if (!j.contains("m") || !j.at("m").is_number_integer()) throw config_error("whittaker datum needs integer m");
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw config_error("whittaker datum needs integer n");
  std::map<Generator, Scalar> raw;
  if (j.contains("values")) {
    if (!j.at("values").is_object()) throw config_error("datum values must be an object");
    for (const auto& [key, value] : j.at("values").items()) {
      const Generator g = Generator::parse(key);
      if (g.central()) throw config_error("central charges belong under \"centrals\"");
      raw[g] = scalar_from_json(value);
    }
  }
  if (j.contains("centrals")) {
    require_keys(j.at("centrals"), {"c1", "c2", "c3"}, "centrals");
    for (const auto& [key, value] : j.at("centrals").items()) raw[Generator::parse(key)] = scalar_from_json(value);
  }
  return validate_whittaker(raw, j.at("m").get<std::int64_t>(), j.at("n").get<std::int64_t>());
}

Json to_json(const EnvelopingElement& v) {
  Json out = Json::array();
  for (const auto& [w, c] : v) out.push_back({{"monomial", format_monomial(w)}, {"coeff", to_json(c)}});
  return out;
}

EnvelopingElement enveloping_from_json(const Json& j) {
  EnvelopingElement raw;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) raw.add_term(parse_monomial(key), scalar_from_json(value));
  } else if (j.is_array()) {
    for (const auto& term : j) {
      require_keys(term, {"monomial", "coeff"}, "vector term");
      raw.add_term(parse_monomial(term.at("monomial").get<std::string>()), scalar_from_json(term.at("coeff")));
    }
  } else {
    throw config_error("vectors must be an object or a list of terms");
  }
  Straightener s;
  return s.straighten(raw);
}

Json to_json(const AlgebraElement& x) {
  Json out = Json::array();
  for (const auto& [g, c] : x) out.push_back({{"generator", g.to_string()}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const ScalarMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const ScalarVector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(to_json(s));
  return out;
}

Json to_json(const ExponentVector& e) { return e.to_string(); }

Json to_json(const DegreePair& d) { return Json::array({to_json(d.first), to_json(d.second)}); }

Json to_json(const TensorVector& t) {
  Json out = Json::array();
  for (const auto& [e, v] : tensor_components(t))
    out.push_back({{"xexp", e.x}, {"yexp", e.y}, {"vector", to_json(v)}});
  return out;
}

Json to_json(const SearchReport& r) {
  Json kernel = Json::array();
  for (const auto& v : r.kernel) kernel.push_back(to_json(v));
  Json out{{"found", r.found()},
           {"weight_bound", r.weight_bound},
           {"index_max", r.index_max},
           {"basis_size", r.basis_size},
           {"equations", r.equations},
           {"kernel_dimension", r.kernel.size()},
           {"kernel", kernel},
           {"spot_check_ok", r.spot_check_ok}};
  out["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return out;
}

Json to_json(const TwistResult& r) {
  Json leakage = Json::array();
  for (const auto& g : r.leakage) leakage.push_back(g.to_string());
  return {{"a", to_json(r.a)},
          {"b", to_json(r.b)},
          {"x", to_json(r.translation.x())},
          {"twisted", to_json(r.twisted)},
          {"leakage", leakage}};
}

Json to_json(const ClosureReport& r) {
  return {{"dimension", r.dimension}, {"contains_one", r.contains_one}, {"truncated", r.truncated}};
}

Json to_json(const DegreeReductionReport& r) {
  Json attempts = Json::array();
  for (const auto& a : r.attempts)
    attempts.push_back({{"operator", a.y.to_string()},
                        {"shift", to_json(a.shift)},
                        {"observed", a.observed ? to_json(*a.observed) : Json(nullptr)}});
  return {{"case", std::string(case_name(r.reduction_case))},
          {"block_length", r.block_length},
          {"degree", to_json(r.degree)},
          {"predicted", to_json(r.predicted)},
          {"attempts", attempts},
          {"holds", r.holds}};
}

Json to_json(const TensorProbeReport& r) {
  Json out{{"reached_one_tensor", r.reached_one_tensor},
           {"regen_degree", r.regen_degree},
           {"regenerated", r.regenerated},
           {"targets", r.targets},
           {"steps", r.steps}};
  out["obstruction"] = r.obstruction ? Json(*r.obstruction) : Json(nullptr);
  out["one_tensor"] = r.reached_one_tensor ? to_json(r.one_tensor) : Json(nullptr);
  return out;
}

}  // namespace pgca
