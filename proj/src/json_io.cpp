#include "signdeg/json_io.hpp"

namespace signdeg {

Json rational_to_json(const Rational& r) { return rat_to_string(r); }

Rational rational_from_json(const Json& j) {
  return parse_rational(j.get<std::string>());
}

Json vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(rat_to_string(r));
  return out;
}

Json sparse_vector_to_json(const RationalVector& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.push_back({i, rat_to_string(v[i])});
  return out;
}

RationalVector sparse_vector_from_json(const Json& j, std::size_t size) {
  RationalVector v(size, Rational(0));
  for (const auto& entry : j) v.at(entry.at(0).get<std::size_t>()) =
      parse_rational(entry.at(1).get<std::string>());
  return v;
}

Json to_json(const PointSet& ps) {
  Json out;
  out["dim"] = ps.dim();
  out["cube"] = ps.is_cube();
  if (ps.is_cube()) {
    out["n"] = ps.cube_n();
  } else {
    Json pts = Json::array();
    for (std::size_t i = 0; i < ps.size(); ++i) pts.push_back(ps.point(i));
    out["points"] = std::move(pts);
  }
  return out;
}

PointSet point_set_from_json(const Json& j) {
  if (j.at("cube").get<bool>()) return PointSet::cube(j.at("n").get<int>());
  const int dim = j.at("dim").get<int>();
  std::vector<std::vector<std::int64_t>> pts;
  for (const auto& p : j.at("points"))
    pts.push_back(p.get<std::vector<std::int64_t>>());
  return PointSet::from_points(dim, std::move(pts));
}

Json to_json(const BooleanFunction& f) {
  Json out;
  out["type"] = "boolean_function";
  out["domain"] = to_json(f.domain());
  if (!f.name().empty()) out["name"] = f.name();
  Json vals = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) vals.push_back(f.value(i));
  out["values"] = std::move(vals);
  return out;
}

BooleanFunction boolean_function_from_json(const Json& j) {
  PointSet dom = point_set_from_json(j.at("domain"));
  std::vector<int> values = j.at("values").get<std::vector<int>>();
  std::string name = j.value("name", std::string{});
  return BooleanFunction(std::move(dom), values, std::move(name));
}

Json to_json(const Halfspace& h) {
  Json out;
  out["type"] = "halfspace";
  out["n"] = h.n;
  Json coeffs = Json::array();
  coeffs.push_back(h.c0.get_str());
  for (const auto& c : h.coeffs) coeffs.push_back(c.get_str());
  out["coeffs"] = std::move(coeffs);
  return out;
}

Halfspace halfspace_from_json(const Json& j) {
  Halfspace h;
  h.n = j.at("n").get<int>();
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != h.n + 1)
    throw Error("halfspace coefficient count mismatch");
  h.c0 = Int(coeffs[0].get<std::string>());
  for (int i = 1; i <= h.n; ++i)
    h.coeffs.emplace_back(coeffs[i].get<std::string>());
  return h;
}

Json to_json(const Polynomial& p) {
  Json out;
  out["type"] = "polynomial";
  out["vars"] = p.nvars();
  out["degree"] = p.degree();
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t;
    t["exps"] = e;
    t["coeff"] = rat_to_string(c);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  Polynomial p(j.at("vars").get<int>());
  for (const auto& t : j.at("terms"))
    p.add_term(t.at("exps").get<std::vector<std::uint32_t>>(),
               parse_rational(t.at("coeff").get<std::string>()));
  return p;
}

Json to_json(const FourierSpectrum& s) {
  Json out;
  out["type"] = "fourier_spectrum";
  out["n"] = s.n;
  Json coeffs = Json::array();
  for (std::size_t mask = 0; mask < s.coeffs.size(); ++mask)
    if (sgn(s.coeffs[mask]) != 0)
      coeffs.push_back({mask, rat_to_string(s.coeffs[mask])});
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json to_json(const DegreeCertificate& c) {
  Json out;
  out["type"] = "degree_certificate";
  out["function"] = c.function_id;
  out["degree"] = c.degree;
  out["witness"] = to_json(c.witness);
  Json lower = Json::array();
  for (std::size_t d = 0; d < c.lower_bound_certs.size(); ++d) {
    Json entry;
    entry["degree"] = d;
    entry["farkas"] = sparse_vector_to_json(c.lower_bound_certs[d]);
    lower.push_back(std::move(entry));
  }
  out["lower_bound_certificates"] = std::move(lower);
  return out;
}

Json to_json(const DensityResult& r) {
  Json out;
  out["type"] = "density_result";
  out["function"] = r.function_id;
  out["cap"] = r.cap;
  if (r.found) {
    out["status"] = "found";
    out["density"] = r.family.size();
    out["family"] = r.family;
    out["lambda"] = vector_to_json(r.lambda);
  } else {
    out["status"] = "exceeds_cap";
  }
  return out;
}

Json to_json(const ApproxBracket& b) {
  Json out;
  out["type"] = "approx_bracket";
  out["function"] = b.function_id;
  out["degree"] = b.degree;
  out["lo"] = rat_to_string(b.lo);
  out["hi"] = rat_to_string(b.hi);
  out["tol"] = rat_to_string(b.tol);
  out["witness_p"] = to_json(b.p);
  out["witness_q"] = to_json(b.q);
  out["lo_certificate"] = sparse_vector_to_json(b.lo_certificate);
  return out;
}

Json to_json(const SpectrumReport& r) {
  Json out;
  out["type"] = "spectrum_report";
  out["eps"] = rat_to_string(r.eps);
  out["zeta"] = rat_to_string(r.zeta);
  out["order_bound"] = r.order_bound;
  out["exponent"] = r.exponent;  // comparison uses 2^-ceil(zeta n)
  out["bound"] = rat_to_string(r.bound);
  out["pass"] = r.pass;
  out["worst"] = rat_to_string(r.worst);
  out["worst_class"] = r.worst_class;
  out["worst_mask"] = r.worst_mask;
  Json per_class = Json::array();
  for (const auto& c : r.per_class) {
    Json e;
    e["s"] = c.s;
    e["worst"] = rat_to_string(c.worst);
    e["worst_mask"] = c.worst_mask;
    per_class.push_back(std::move(e));
  }
  out["per_class"] = std::move(per_class);
  return out;
}

Json to_json(const MomentMatchedFamily& fam) {
  Json out;
  out["type"] = "moment_matched_family";
  out["n"] = fam.partition.w.n;
  out["k"] = fam.partition.w.k;
  out["seed"] = fam.partition.w.seed;
  out["weights"] = fam.partition.w.weights;
  out["cutoff"] = fam.cutoff;
  out["family"] = fam.family;
  Json classes = Json::array();
  for (std::size_t s = 0; s < fam.mu.size(); ++s) {
    Json c;
    c["s"] = s;
    c["points"] = fam.partition.classes[s];
    c["mu"] = vector_to_json(fam.mu[s]);
    c["alpha"] = vector_to_json(fam.certs[s].alpha);
    c["normalizer"] = rat_to_string(fam.certs[s].normalizer);
    classes.push_back(std::move(c));
  }
  out["classes"] = std::move(classes);
  Json moments = Json::array();
  for (std::size_t i = 0; i < fam.monomials.size(); ++i)
    moments.push_back({fam.monomials[i], rat_to_string(fam.moments[i])});
  out["moments"] = std::move(moments);
  return out;
}

Json to_json(const HardnessReport& r) {
  Json out;
  out["type"] = "hardness_report";
  out["n"] = r.n;
  out["k"] = r.k;
  out["d"] = r.d;
  out["seed"] = r.seed;
  out["eps"] = rat_to_string(r.eps);
  out["zeta"] = rat_to_string(r.zeta);
  out["tol"] = rat_to_string(r.tol);
  out["cutoff"] = r.cutoff;
  out["spectrum"] = to_json(r.spectrum);
  out["moment_ok"] = r.moment_ok;
  out["moment_detail"] = r.moment_detail;
  out["reduction_ok"] = r.reduction_ok;
  out["reduction_trials"] = r.reduction_trials;
  if (r.grid_bracket) out["grid_bracket"] = to_json(*r.grid_bracket);
  if (r.hard_bracket) out["hard_bracket"] = to_json(*r.hard_bracket);
  out["bracket_ok"] = r.bracket_ok;
  out["converse_chain_d"] = r.converse_chain_d;
  out["degthr_lower_bound"] = r.degthr_lower_bound;
  out["deterministic_ok"] = r.deterministic_ok;
  Json stages = Json::array();
  for (const auto& s : r.stages) {
    Json e;
    e["name"] = s.name;
    e["ran"] = s.ran;
    e["pass"] = s.pass;
    e["detail"] = s.detail;
    stages.push_back(std::move(e));
  }
  out["stages"] = std::move(stages);
  return out;
}

}  // namespace signdeg
