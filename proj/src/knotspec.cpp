#include "cgk/knotspec.hpp"

#include "cgk/error.hpp"
#include "cgk/seifert.hpp"

namespace cgk {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorKind::InvalidInput, std::string("knot spec is missing field '") + key + "'");
  return j.at(key);
}

long int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) fail(ErrorKind::InvalidInput, std::string("field '") + key + "' must be an integer");
  return v.get<long>();
}

IntMatrix parse_matrix(const json& m) {
  if (!m.is_array()) fail(ErrorKind::InvalidInput, "matrix must be an array of rows");
  const std::size_t n = m.size();
  IntMatrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n) fail(ErrorKind::InvalidInput, "matrix must be square");
    for (std::size_t j = 0; j < n; ++j) {
      const json& e = m[i][j];
      if (e.is_number_integer())
        v(i, j) = e.get<long>();
      else if (e.is_string())
        v(i, j) = Int(e.get<std::string>());
      else
        fail(ErrorKind::InvalidInput, "matrix entries must be integers");
    }
  }
  return v;
}

Infection make_infection(std::string curve, const json& companion, bool mirrored, std::vector<i64> values) {
  Infection inf;
  inf.curve = std::move(curve);
  inf.companion_id = (mirrored ? "-" : "") + canonical_id(companion);
  IntMatrix c = build_matrix(companion);
  inf.companion = mirrored ? mirror(c) : c;
  inf.values = std::move(values);
  return inf;
}

KnotModel single(Summand s) {
  KnotModel m;
  m.summands.push_back(std::move(s));
  return m;
}

}  // namespace

std::string canonical_id(const json& spec) { return spec.dump(); }

IntMatrix KnotModel::seifert() const {
  std::vector<IntMatrix> parts;
  for (const auto& s : summands) parts.push_back(s.sign > 0 ? s.base : mirror(s.base));
  IntMatrix v = block_sum(parts);
  validate_seifert(v);
  return v;
}

IntMatrix build_matrix(const json& spec) { return build(spec).seifert(); }

KnotModel build(const json& spec) {
  const std::string kind = field(spec, "kind").get<std::string>();
  Summand s;
  s.family = kind;
  s.id = canonical_id(spec);
  if (kind == "matrix") {
    s.base = parse_matrix(field(spec, "matrix"));
    validate_seifert(s.base);
    return single(std::move(s));
  }
  if (kind == "torus") {
    long p = int_field(spec, "p"), q = int_field(spec, "q");
    s.base = torus_matrix(p, q);
    return single(std::move(s));
  }
  if (kind == "twisted_double") {
    long a = int_field(spec, "a");
    require(a >= 1, ErrorKind::InvalidInput, "twisted double needs a >= 1");
    s.base = twisted_double_matrix(a);
    s.degree = 2;
    s.prime = 2 * a + 1;
    // The band with core (a,-1) carries a (-a, a+1) torus knot; j = 1 on the
    // chosen lift is a modeling assumption.
    s.infections.push_back(make_infection("U", torus_spec(-a, a + 1), false, {1}));
    return single(std::move(s));
  }
  if (kind == "order_two") {
    const json& comps = field(spec, "companions");
    require(comps.is_array(), ErrorKind::InvalidInput, "order_two companions must be a list");
    json t = json{{"kind", "sum"}, {"summands", json::array()}};
    for (const auto& c : comps) t["summands"].push_back(json{{"knot", c}, {"sign", 1}});
    s.base = order_two_base_matrix();
    s.degree = 2;
    s.prime = 5;
    s.infections.push_back(make_infection("B1", t, false, {1}));
    s.infections.push_back(make_infection("B2", t, true, {2}));
    return single(std::move(s));
  }
  if (kind == "kj") {
    const json& j = field(spec, "companion");
    bool mut = spec.value("mutant", true);
    s.base = z49_model_matrix();
    s.degree = 3;
    s.prime = 7;
    s.infections.push_back(make_infection("B1", j, false, {1, 1}));
    if (mut)
      s.infections.push_back(make_infection("B2*", j, true, {-1, -1}));
    else
      s.infections.push_back(make_infection("B2", j, true, {1, 1}));
    return single(std::move(s));
  }
  if (kind == "satellite") {
    KnotModel base = build(field(spec, "base"));
    require(base.summands.size() == 1 && base.summands[0].infections.empty(), ErrorKind::InvalidInput,
            "satellite base must be a single knot without infections");
    s.base = base.summands[0].base;
    s.degree = static_cast<int>(int_field(spec, "degree"));
    s.prime = int_field(spec, "prime");
    require(s.degree >= 2 && is_prime(s.prime), ErrorKind::InvalidInput,
            "satellite needs degree >= 2 and a prime");
    for (const auto& inf : field(spec, "infections")) {
      std::vector<i64> vals;
      for (const auto& v : field(inf, "values")) vals.push_back(v.get<i64>());
      s.infections.push_back(make_infection(inf.value("curve", std::string("U")), field(inf, "companion"),
                                            inf.value("mirror", false), std::move(vals)));
    }
    return single(std::move(s));
  }
  if (kind == "sum") {
    KnotModel out;
    for (const auto& entry : field(spec, "summands")) {
      int sign = entry.contains("sign") ? entry.at("sign").get<int>() : 1;
      require(sign == 1 || sign == -1, ErrorKind::InvalidInput, "summand sign must be +1 or -1");
      for (auto part : build(field(entry, "knot")).summands) {
        part.sign *= sign;
        out.summands.push_back(std::move(part));
      }
    }
    return out;
  }
  fail(ErrorKind::InvalidInput, "unknown knot spec kind '" + kind + "'");
}

KnotModel mutant(const KnotModel& m) {
  KnotModel out = m;
  for (auto& s : out.summands) {
    const std::size_t n = s.base.rows();
    IntMatrix p = IntMatrix::identity(n);
    for (std::size_t i = n / 2; i < n; ++i) p(i, i) = -1;
    s.base = p * s.base * p.transpose();
    if (s.infections.size() >= 2) {
      Infection& b = s.infections[1];
      for (auto& v : b.values) v = -v;
      if (b.curve == "B2")
        b.curve = "B2*";
      else if (b.curve == "B2*")
        b.curve = "B2";
    }
  }
  return out;
}

json twisted_double_spec(long a) { return json{{"kind", "twisted_double"}, {"a", a}}; }

json torus_spec(long p, long q) { return json{{"kind", "torus"}, {"p", p}, {"q", q}}; }

json torus_sum_spec(long p, long q, int copies) {
  if (copies == 0) return json{{"kind", "matrix"}, {"matrix", json::array()}};
  json s{{"kind", "sum"}, {"summands", json::array()}};
  for (int i = 0; i < copies; ++i) s["summands"].push_back(json{{"knot", torus_spec(p, q)}, {"sign", 1}});
  return s;
}

json order_two_spec(const json& companion) {
  return json{{"kind", "order_two"}, {"companions", json::array({companion})}};
}

json kj_spec(const json& companion, bool mutant_flag) {
  return json{{"kind", "kj"}, {"companion", companion}, {"mutant", mutant_flag}};
}

}  // namespace cgk
