#include "monocone/json_io.hpp"

#include "monocone/error.hpp"

namespace monocone {

namespace {

Json matrix_to_json(const RationalMatrix& rows) {
  Json out = Json::array();
  for (const auto& row : rows) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    out.push_back(std::move(r));
  }
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError("expected an exact rational (string \"p/q\" or integer), got " + j.dump());
}

template <class F>
auto guarded(F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

Json entropy_values(const EntropyVector& h) {
  Json values = Json::object();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << h.n); ++mask) {
    values[SystemSet(mask, h.n).key()] = to_string(h.values[mask - 1]);
  }
  return values;
}

EntropyVector entropy_from_json(const Json& j) {
  EntropyVector h;
  h.n = j.at("n").get<int>();
  h.exact = j.at("exact").get<bool>();
  h.precision_bits = j.value("precision_bits", kDefaultEntropyPrecision);
  h.values.assign(coordinate_count(h.n), Rational(0));
  for (const auto& [key, value] : j.at("values").items()) {
    h.values[parse_system_set(key, h.n).coordinate()] = rational_from_json(value);
  }
  return h;
}

const char* operation_name(LocalOperation op) {
  return op == LocalOperation::TraceAuxiliary ? "trace-auxiliary" : "append-auxiliary";
}

}  // namespace

Json to_json(const Functional& alpha) {
  Json coeffs = Json::object();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << alpha.n()); ++mask) {
    const Rational& c = alpha.coeffs()[mask - 1];
    if (sgn(c) != 0) coeffs[SystemSet(mask, alpha.n()).key()] = to_string(c);
  }
  return Json{{"n", alpha.n()}, {"coeffs", coeffs}};
}

Functional functional_from_json(const Json& j) {
  return guarded([&] {
    const int n = j.at("n").get<int>();
    if (n < 1 || n > kMaxSystems) throw ParseError("functional system count out of range");
    Functional alpha(n);
    for (const auto& [key, value] : j.at("coeffs").items()) {
      SystemSet s = parse_system_set(key, n);
      if (s.empty()) throw ParseError("the empty subset has no coefficient");
      alpha[s] = rational_from_json(value);
    }
    return alpha;
  });
}

Json to_json(const JointDistribution& d) {
  Json atoms = Json::array();
  for (const auto& atom : d.atoms) atoms.push_back({{"outcome", atom.outcome}, {"p", to_string(atom.p)}});
  return Json{{"variables", d.variables}, {"cardinalities", d.cardinalities}, {"atoms", atoms}};
}

JointDistribution distribution_from_json(const Json& j) {
  return guarded([&] {
    JointDistribution d;
    d.variables = j.at("variables").get<std::vector<int>>();
    d.cardinalities = j.at("cardinalities").get<std::vector<int>>();
    for (const auto& atom : j.at("atoms")) {
      d.atoms.push_back({atom.at("outcome").get<std::vector<int>>(), rational_from_json(atom.at("p"))});
    }
    d.validate();
    return d;
  });
}

Json to_json(const EntropyVector& h) {
  Json out{{"n", h.n}, {"exact", h.exact}, {"values", entropy_values(h)}};
  if (!h.exact) out["precision_bits"] = h.precision_bits;
  return out;
}

Json to_json(const HRep& h) {
  Json out{{"dim", h.dim}, {"inequalities", matrix_to_json(h.inequalities)}, {"equalities", matrix_to_json(h.equalities)}};
  if (h.n > 0) out["n"] = h.n;
  if (!h.name.empty()) out["name"] = h.name;
  return out;
}

Json to_json(const VRep& v) {
  Json out{{"dim", v.dim}, {"rays", matrix_to_json(v.rays)}, {"lineality", matrix_to_json(v.lineality)}};
  if (v.n > 0) out["n"] = v.n;
  if (!v.name.empty()) out["name"] = v.name;
  return out;
}

Json to_json(const LowerSetFamily& family) {
  Json members = Json::array();
  for (SystemSet s : family.members()) members.push_back(s.members());
  return Json{{"anchor", family.anchor()}, {"n", family.n()}, {"members", members}};
}

Json to_json(const DecompositionCertificate& certificate) {
  Json v = Json::array();
  for (const auto& [term, coefficient] : certificate.v) {
    v.push_back({{"j", term.j}, {"conditioning", term.conditioning.members()}, {"coefficient", to_string(coefficient)}});
  }
  Json w = Json::array();
  for (const auto& [subset, coefficient] : certificate.w) {
    w.push_back({{"subset", subset.members()}, {"coefficient", to_string(coefficient)}});
  }
  return Json{{"system", certificate.anchor}, {"n", certificate.n}, {"v", v}, {"w", w}};
}

DecompositionCertificate decomposition_from_json(const Json& j) {
  return guarded([&] {
    DecompositionCertificate certificate;
    certificate.anchor = j.at("system").get<int>();
    certificate.n = j.at("n").get<int>();
    const int n = certificate.n;
    for (const auto& term : j.at("v")) {
      SsaTerm key{term.at("j").get<int>(), SystemSet::from_members(term.at("conditioning").get<std::vector<int>>(), n)};
      certificate.v[key] = rational_from_json(term.at("coefficient"));
    }
    for (const auto& term : j.at("w")) {
      certificate.w[SystemSet::from_members(term.at("subset").get<std::vector<int>>(), n)] =
          rational_from_json(term.at("coefficient"));
    }
    return certificate;
  });
}

Json to_json(const ViolationCertificate& certificate) {
  Json out{{"functional", to_json(certificate.target)},
           {"system", certificate.system},
           {"operation", operation_name(certificate.operation)},
           {"auxiliary_label", certificate.target.n() + 1},
           {"distribution", to_json(certificate.witness)},
           {"entropy_before", to_json(certificate.before)},
           {"entropy_after", to_json(certificate.after)},
           {"value_before", to_string(certificate.value_before)},
           {"value_after", to_string(certificate.value_after)}};
  if (certificate.lower_set) out["lower_set"] = to_json(*certificate.lower_set);
  return out;
}

ViolationCertificate violation_certificate_from_json(const Json& j) {
  return guarded([&] {
    ViolationCertificate certificate;
    certificate.target = functional_from_json(j.at("functional"));
    certificate.system = j.at("system").get<int>();
    const std::string op = j.at("operation").get<std::string>();
    if (op == "trace-auxiliary") {
      certificate.operation = LocalOperation::TraceAuxiliary;
    } else if (op == "append-auxiliary") {
      certificate.operation = LocalOperation::AppendAuxiliary;
    } else {
      throw ParseError("unknown local operation '" + op + "'");
    }
    certificate.witness = distribution_from_json(j.at("distribution"));
    certificate.before = entropy_from_json(j.at("entropy_before"));
    certificate.after = entropy_from_json(j.at("entropy_after"));
    certificate.value_before = rational_from_json(j.at("value_before"));
    certificate.value_after = rational_from_json(j.at("value_after"));
    if (j.contains("lower_set")) {
      const auto& family = j.at("lower_set");
      std::vector<SystemSet> members;
      const int n = family.at("n").get<int>();
      for (const auto& m : family.at("members")) members.push_back(SystemSet::from_members(m.get<std::vector<int>>(), n));
      certificate.lower_set = LowerSetFamily::from_members(family.at("anchor").get<int>(), n, members);
    }
    return certificate;
  });
}

}  // namespace monocone
