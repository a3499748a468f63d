#include "hrp/json_io.hpp"

#include "hrp/errors.hpp"

namespace hrp {

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw InputError("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  throw InputError("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected a rational, got " + j.dump());
}

Json coeffs_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(integer_json(c));
  return a;
}

IntPoly intpoly_from_json(const Json& j) {
  const Json& arr = j.is_object() ? j.at("coeffs") : j;
  if (!arr.is_array()) throw InputError("expected a coefficient array");
  std::vector<Integer> c;
  for (const auto& x : arr) c.push_back(integer_from_json(x));
  return IntPoly(std::move(c));
}

Json intpoly_json(const IntPoly& p) { return Json{{"coeffs", coeffs_json(p)}}; }

Json minpoly_json(const MinPoly& m) { return intpoly_json(m.poly()); }

MinPoly minpoly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs")) throw InputError("minimal polynomial needs a \"coeffs\" array");
  return MinPoly(intpoly_from_json(j));
}

Json ball_json(const ComplexBall& b, int digits) {
  return Json{{"center", Json::array({to_scientific(b.re, digits), to_scientific(b.im, digits)})},
              {"radius", to_scientific(b.radius, 6, Rounding::Up)}};
}

Json field_elem_json(const FieldElem& x) {
  Json a = Json::array();
  for (const auto& q : x.coords()) a.push_back(to_fraction(q));
  return a;
}

Json classification_json(const AlgebraicNumber& a, const Classification& c) {
  Json conj = Json::array();
  for (std::size_t v = 0; v < a.place_count(); ++v) {
    const RootDisk& z = a.conjugate(v);
    conj.push_back(ball_json({z.center_re(), z.center_im(), z.radius}));
  }
  return Json{{"alpha", minpoly_json(a.minpoly())},
              {"kind", to_string(c.kind)},
              {"has_hrp", c.has_hrp()},
              {"is_root_of_unity", c.is_root_of_unity},
              {"self_reciprocal", c.self_reciprocal},
              {"r", a.r()},
              {"s", a.s()},
              {"conjugates", conj}};
}

Json digit_set_json(const DigitSet& F) {
  Json digits = Json::array();
  for (const auto& d : F.digits()) {
    Json cp = Json::array();
    for (const auto& iv : d.c_per_place) cp.push_back(to_fixed(iv.hi, 12, Rounding::Up));
    digits.push_back(Json{{"rep", coeffs_json(d.rep)},
                          {"h", coeffs_json(d.h)},
                          {"coset", integer_json(d.coset)},
                          {"orthant", d.orthant.label()},
                          {"margin", to_fraction(d.margin)},
                          {"c_per_place", cp}});
  }
  return Json{{"alpha", minpoly_json(F.alpha())},
              {"card", F.size()},
              {"bound", integer_json(F.cardinality_bound())},
              {"digits", digits},
              {"c", to_fixed(F.c(), 12, Rounding::Up)}};
}

DigitSet digit_set_from_json(const Json& j, const Embedder& emb) {
  const AlgebraicNumber& a = emb.number();
  if (!j.is_object() || !j.contains("alpha") || !j.contains("digits")) throw InputError("not a digit set file");
  if (!(minpoly_from_json(j.at("alpha")) == a.minpoly())) throw InputError("digit set is for a different alpha");
  std::vector<Digit> digits;
  for (const auto& e : j.at("digits")) {
    Digit d = certify_digit(intpoly_from_json(e.at("rep")), emb);
    if (e.contains("coset") && integer_from_json(e.at("coset")) != d.coset)
      throw InputError("stored coset of digit " + d.rep.to_string() + " is wrong");
    if (e.contains("orthant") && e.at("orthant").get<std::string>() != d.orthant.label())
      throw InputError("stored orthant of digit " + d.rep.to_string() + " is wrong");
    digits.push_back(std::move(d));
  }
  return DigitSet(a.minpoly(), a.r(), a.s(), std::move(digits));
}

namespace {

std::string decimal(const Rational& x) { return to_fixed(x, 15); }

}  // namespace

Json trace_json(const ExpansionTrace& t, const DigitSet& F, const AuditReport& audit) {
  Json ids = Json::array();
  for (std::size_t id : t.digits_out) ids.push_back(id);
  Json steps = Json::array();
  for (const auto& st : t.steps) {
    Json abs = Json::array();
    for (const auto& iv : st.abs_values) abs.push_back(decimal(iv.mid()));
    steps.push_back(Json{{"beta", coeffs_json(st.beta)},
                         {"digit", st.digit ? Json(*st.digit) : Json(nullptr)},
                         {"abs", abs}});
  }
  Json au = Json::array();
  for (const auto& e : audit.entries)
    au.push_back(Json{{"step", e.step},
                      {"place", e.place},
                      {"before", decimal(e.before.mid())},
                      {"after", decimal(e.after.mid())},
                      {"bound", decimal(e.bound)},
                      {"pass", e.pass}});
  Json out{{"alpha", minpoly_json(F.alpha())},
           {"beta0", coeffs_json(t.beta0)},
           {"digits", ids},
           {"tail", coeffs_json(t.tail)},
           {"status", to_string(t.status)}};
  if (t.status == ExpansionStatus::Cycle) out["cycle"] = Json{{"entry", t.cycle_entry}, {"period", t.cycle_period}};
  out["steps"] = steps;
  out["audit"] = au;
  out["verdict"] = Json{{"recomposition", audit.recomposition},
                        {"audit", audit.passed()},
                        {"decrease_violations", audit.decrease_violations},
                        {"sign_violations", audit.sign_violations},
                        {"angle_violations", audit.angle_violations},
                        {"digit_violations", audit.digit_violations}};
  return out;
}

ExpansionTrace trace_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("beta0") || !j.contains("status")) throw InputError("not a trace file");
  ExpansionTrace t;
  t.beta0 = intpoly_from_json(j.at("beta0"));
  t.tail = intpoly_from_json(j.value("tail", Json::array()));
  const std::string status = j.at("status").get<std::string>();
  if (status == "zero")
    t.status = ExpansionStatus::Zero;
  else if (status == "cycle")
    t.status = ExpansionStatus::Cycle;
  else if (status == "budget")
    t.status = ExpansionStatus::Budget;
  else
    throw InputError("unknown trace status '" + status + "'");
  if (j.contains("cycle")) {
    t.cycle_entry = j.at("cycle").at("entry").get<long>();
    t.cycle_period = j.at("cycle").at("period").get<long>();
  }
  for (const auto& id : j.at("digits")) t.digits_out.push_back(id.get<std::size_t>());
  for (const auto& st : j.value("steps", Json::array())) {
    TraceStep s;
    s.beta = intpoly_from_json(st.at("beta"));
    if (st.contains("digit") && !st.at("digit").is_null()) s.digit = st.at("digit").get<std::size_t>();
    t.steps.push_back(std::move(s));
  }
  return t;
}

Json attractor_json(const Attractor& A, const MinPoly& m, const SeedBox& box, long max_steps) {
  Json states = Json::array();
  for (const auto& s : A.states) states.push_back(coeffs_json(s));
  Json cycles = Json::array();
  for (const auto& c : A.cycles) {
    Json cyc = Json::array();
    for (const auto& s : c) cyc.push_back(coeffs_json(s));
    cycles.push_back(cyc);
  }
  Json fails = Json::array();
  for (const auto& s : A.budget_failures) fails.push_back(coeffs_json(s));
  return Json{{"alpha", minpoly_json(m)},
              {"seed_box", box.empty() ? Json("empty") : Json{{"lo", box.lo}, {"hi", box.hi}}},
              {"max_steps", max_steps},
              {"size", A.states.size()},
              {"states", states},
              {"cycles", cycles},
              {"seeds", A.seed_count},
              {"zero", A.zero_count},
              {"cycle", A.cycle_count},
              {"budget_failures", fails},
              {"max_steps_used", A.max_steps_used}};
}

Json coverage_json(const CoverageReport& r, const MinPoly& m) {
  Json misses = Json::array();
  for (const auto& x : r.misses) misses.push_back(field_elem_json(x));
  return Json{{"alpha", minpoly_json(m)},
              {"alphabet_size", r.alphabet_size},
              {"max_length", r.max_length},
              {"length_used", r.length_used},
              {"region", r.region},
              {"region_size", r.region_size},
              {"covered", r.covered},
              {"misses", misses}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hrp
