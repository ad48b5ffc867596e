#include "tiltwall/report_json.hpp"

#include "tiltwall/error.hpp"

namespace tiltwall {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorKind::Config, "malformed input: " + what);
}

BigInt bigint_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) {
    const Rational r = Rational::parse(j.get<std::string>());
    if (!r.is_integer()) bad(std::string(what) + " must be an integer");
    return r.num();
  }
  bad(std::string(what) + " must be an integer");
}

std::int64_t int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) bad(std::string("field '") + key + "'");
  return j.at(key).get<std::int64_t>();
}

Json opt_rational(const std::optional<Rational>& v, const RenderOptions& r) {
  return v ? to_json(*v, r) : Json(nullptr);
}

}  // namespace

Json to_json(const Rational& v, const RenderOptions& r) {
  return r.decimal ? v.to_decimal(*r.decimal) : v.to_string();
}

Json to_json(const Surd& v, const RenderOptions& r) {
  if (r.decimal) return v.to_decimal(*r.decimal);
  // Exact form as a 3-tuple alongside a readable string.
  return Json{{"a", v.a().to_string()},
              {"b", v.b().to_string()},
              {"radicand", v.radicand().to_string()},
              {"text", v.to_string()}};
}

Json to_json(const FirstWallReport& rep, const RenderOptions& r) {
  Json cands = Json::array();
  for (const auto& c : rep.candidates) {
    Json filters = Json::array();
    for (const auto& f : c.filters) {
      filters.push_back({{"name", f.name}, {"passed", f.passed}, {"applicable", f.applicable}});
    }
    cands.push_back({{"c", to_json(c.c, r)},
                     {"w0", to_json(c.w0, r)},
                     {"b1", c.b1 ? to_json(*c.b1, r) : Json(nullptr)},
                     {"b2", c.b2 ? to_json(*c.b2, r) : Json(nullptr)},
                     {"filters", filters},
                     {"eliminated_by", c.eliminated_by ? Json(*c.eliminated_by) : Json(nullptr)},
                     {"survived", c.survived()}});
  }
  Json surv = Json::array();
  for (const auto& s : rep.surviving()) surv.push_back(to_json(s, r));
  return Json{{"betaH", to_json(rep.betaH, r)},
              {"m", to_json(rep.m, r)},
              {"n", rep.n},
              {"granularity", rep.granularity},
              {"b0", to_json(rep.b0, r)},
              {"w_f", to_json(rep.w_f, r)},
              {"w_JS", to_json(rep.w_JS, r)},
              {"c_lower_exact", to_json(rep.c_lower_exact, r)},
              {"asymptotic_regime", rep.asymptotic_regime},
              {"candidates", cands},
              {"surviving", surv},
              {"unique", rep.unique},
              {"empty_moduli", rep.empty_moduli}};
}

Json to_json(const QSeries& s, const RenderOptions& r) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c, r));
  return Json{{"offset", to_json(s.offset(), r)}, {"coeffs", coeffs}, {"order", s.order()}};
}

Json to_json(const Charge& c, const RenderOptions& r) {
  return Json{{"ch0", to_json(c.r, r)},
              {"ch1H2", to_json(c.c1H2, r)},
              {"ch2H", to_json(c.c2H, r)},
              {"ch3", to_json(c.c3, r)},
              {"ch1sqH", opt_rational(c.c1sqH, r)},
              {"ch1c2", opt_rational(c.c1c2, r)}};
}

Json to_json(const CurveCharge& cc, const RenderOptions& r) {
  return Json{{"betaH", to_json(cc.betaH, r)},
              {"m", to_json(cc.m, r)},
              {"n", cc.n},
              {"Q", opt_rational(cc.Q, r)}};
}

Json to_json(const ComplexMatrix& M) {
  Json rows = Json::array();
  for (const auto& row : M) {
    Json jr = Json::array();
    for (const auto& z : row) jr.push_back(Json::array({z.real() + 0.0, z.imag() + 0.0}));
    rows.push_back(jr);
  }
  return rows;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) bad("expected a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Surd surd_from_json(const Json& j) {
  if (j.is_object()) {
    return Surd(rational_from_json(j.at("a")), rational_from_json(j.at("b")),
                rational_from_json(j.at("radicand")));
  }
  return Surd(rational_from_json(j));
}

FirstWallReport first_wall_from_json(const Json& j) {
  try {
    FirstWallReport rep;
    rep.betaH = rational_from_json(j.at("betaH"));
    rep.m = rational_from_json(j.at("m"));
    rep.n = j.at("n").get<std::int64_t>();
    rep.granularity = j.at("granularity").get<std::int64_t>();
    rep.b0 = rational_from_json(j.at("b0"));
    rep.w_f = rational_from_json(j.at("w_f"));
    rep.w_JS = rational_from_json(j.at("w_JS"));
    rep.c_lower_exact = rational_from_json(j.at("c_lower_exact"));
    rep.asymptotic_regime = j.at("asymptotic_regime").get<bool>();
    rep.unique = j.at("unique").get<bool>();
    rep.empty_moduli = j.at("empty_moduli").get<bool>();
    for (const auto& jc : j.at("candidates")) {
      WallCandidate c;
      c.c = rational_from_json(jc.at("c"));
      c.w0 = rational_from_json(jc.at("w0"));
      if (!jc.at("b1").is_null()) c.b1 = surd_from_json(jc.at("b1"));
      if (!jc.at("b2").is_null()) c.b2 = surd_from_json(jc.at("b2"));
      for (const auto& jf : jc.at("filters")) {
        c.filters.push_back({jf.at("name").get<std::string>(), jf.at("passed").get<bool>(),
                             jf.at("applicable").get<bool>()});
      }
      if (!jc.at("eliminated_by").is_null()) c.eliminated_by = jc.at("eliminated_by").get<std::string>();
      rep.candidates.push_back(std::move(c));
    }
    return rep;
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

QSeries qseries_from_json(const Json& j) {
  try {
    std::vector<Rational> c;
    for (const auto& x : j.at("coeffs")) c.push_back(rational_from_json(x));
    QSeries s(rational_from_json(j.at("offset")), std::move(c));
    if (s.order() != j.at("order").get<std::int64_t>()) bad("order does not match coeffs");
    return s;
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

Json provenance(const std::string& command, const std::string& config_hash) {
  return Json{{"command", command}, {"config_hash", config_hash}, {"version", kVersion}};
}

std::pair<InvariantTable, InvariantTable> invariant_tables_from_json(const Json& j) {
  if (!j.is_array()) bad("invariant table must be an array of records");
  InvariantTable I;
  InvariantTable P;
  for (const auto& rec : j) {
    if (!rec.is_object() || !rec.contains("type") || !rec.at("type").is_string()) bad("record without type");
    const std::string type = rec.at("type").get<std::string>();
    if (type != "I" && type != "P") bad("type must be \"I\" or \"P\"");
    InvariantTable& t = type == "I" ? I : P;
    const std::int64_t degree = int_field(rec, "degree");
    if (rec.contains("below")) {
      t.set_empty_below(degree, int_field(rec, "below"));
    } else {
      if (!rec.contains("value")) bad("record without value");
      t.set(degree, int_field(rec, "charge"), bigint_from_json(rec.at("value"), "value"));
    }
  }
  return {std::move(I), std::move(P)};
}

NLTable nl_table_from_json(const Json& j) {
  if (!j.is_array()) bad("NL table must be an array of records");
  NLTable t;
  for (const auto& rec : j) {
    if (!rec.is_object() || !rec.contains("d") || !rec.contains("value")) bad("NL record needs d and value");
    const Rational d = rational_from_json(rec.at("d"));
    const std::int64_t gamma = int_field(rec, "gamma");
    const BigInt v = bigint_from_json(rec.at("value"), "value");
    auto [it, inserted] = t.emplace(std::make_pair(d, gamma), v);
    if (!inserted) bad("duplicate NL key (" + d.to_string() + ", " + std::to_string(gamma) + ")");
  }
  return t;
}

}  // namespace tiltwall
