#include "ucalg/serialize.hpp"

#include <stdexcept>

#include "ucalg/error.hpp"

namespace ucalg {

namespace {

int json_int(const OJson& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<int>();
}

int parse_key_int(const std::string& key, const char* what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput(std::string(what) + " key '" + key + "' is not an integer");
  }
}

OJson exponents_to_json(const std::vector<std::pair<int, int>>& e) {
  OJson j = OJson::object();
  for (auto& [index, power] : e) j[std::to_string(index)] = power;
  return j;
}

Monomial monomial_from_json(const OJson& jt) {
  if (!jt.is_object() || !jt.contains("x") || !jt.contains("y") || !jt.contains("c"))
    throw InvalidInput("term must be an object with x, y, c");
  Monomial m;
  auto read = [](const OJson& je, std::vector<std::pair<int, int>>& out) {
    if (!je.is_object()) throw InvalidInput("exponent map must be an object");
    std::map<int, int> sorted;
    for (auto it = je.begin(); it != je.end(); ++it) {
      int index = parse_key_int(it.key(), "exponent");
      int power = json_int(it.value(), "exponent power");
      if (index < 1 || power < 1) throw InvalidInput("exponent entries must be positive");
      if (!sorted.emplace(index, power).second)
        throw InvalidInput("duplicate exponent key " + it.key());
    }
    out.assign(sorted.begin(), sorted.end());
  };
  read(jt.at("x"), m.xe);
  read(jt.at("y"), m.ye);
  return m;
}

template <class Dom, class CoeffOut>
OJson poly_to_json_impl(const Poly<Dom>& p, CoeffOut&& coeff_out) {
  OJson j = OJson::object();
  j["cutoffs"] = OJson::array({p.nx(), p.ny()});
  j["coeff_domain"] = p.dom().tag();
  OJson terms = OJson::array();
  for (auto& [m, c] : p.terms()) {
    OJson jt = OJson::object();
    jt["x"] = exponents_to_json(m.xe);
    jt["y"] = exponents_to_json(m.ye);
    jt["c"] = coeff_out(c);
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j;
}

void check_poly_shape(const OJson& j) {
  if (!j.is_object() || !j.contains("cutoffs") || !j.contains("coeff_domain") ||
      !j.contains("terms"))
    throw InvalidInput("polynomial JSON needs cutoffs, coeff_domain, terms");
  if (!j.at("cutoffs").is_array() || j.at("cutoffs").size() != 2)
    throw InvalidInput("cutoffs must be a two-element array");
  if (!j.at("terms").is_array()) throw InvalidInput("terms must be an array");
}

}  // namespace

OJson series_to_json(const TruncSeries& s) {
  OJson j = OJson::object();
  for (auto& [e, c] : s.terms()) j[std::to_string(e)] = rat_str(c);
  return j;
}

TruncSeries series_from_json(const OJson& j, const std::string& param, int cap) {
  if (!j.is_object()) throw InvalidInput("series JSON must be an object");
  TruncSeries s(param, cap);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int e = parse_key_int(it.key(), "series exponent");
    if (e > cap) throw InvalidInput("series exponent above cap");
    if (!it.value().is_string()) throw InvalidInput("series coefficient must be a string");
    s.set_coeff(e, parse_rat(it.value().get<std::string>()));
  }
  return s;
}

OJson poly_to_json(const PolyQ& p) {
  return poly_to_json_impl(p, [](const Rat& c) { return OJson(rat_str(c)); });
}

OJson poly_to_json(const PolyS& p) {
  return poly_to_json_impl(p, [](const TruncSeries& c) { return series_to_json(c); });
}

PolyQ poly_q_from_json(const OJson& j) {
  check_poly_shape(j);
  if (j.at("coeff_domain") != "rational")
    throw InvalidInput("expected rational coefficient domain");
  int nx = json_int(j.at("cutoffs")[0], "cutoff");
  int ny = json_int(j.at("cutoffs")[1], "cutoff");
  PolyQ p(RationalDomain{}, nx, ny);
  for (const auto& jt : j.at("terms")) {
    if (!jt.at("c").is_string()) throw InvalidInput("rational coefficient must be a string");
    p.add_term(monomial_from_json(jt), parse_rat(jt.at("c").get<std::string>()));
  }
  return p;
}

PolyS poly_s_from_json(const OJson& j) {
  check_poly_shape(j);
  if (!j.at("coeff_domain").is_string())
    throw InvalidInput("coeff_domain must be a string");
  std::string tag = j.at("coeff_domain").get<std::string>();
  auto first = tag.find(':');
  auto last = tag.rfind(':');
  if (tag.compare(0, 7, "series:") != 0 || first == last)
    throw InvalidInput("expected series:<param>:<cap> coefficient domain");
  std::string param = tag.substr(first + 1, last - first - 1);
  int cap = parse_key_int(tag.substr(last + 1), "series cap");
  if (param.empty()) throw InvalidInput("series parameter name is empty");
  int nx = json_int(j.at("cutoffs")[0], "cutoff");
  int ny = json_int(j.at("cutoffs")[1], "cutoff");
  PolyS p(SeriesDomain{param, cap}, nx, ny);
  for (const auto& jt : j.at("terms"))
    p.add_term(monomial_from_json(jt), series_from_json(jt.at("c"), param, cap));
  return p;
}

OJson fock_to_json(const FockVec& v) {
  OJson j = OJson::object();
  for (auto& [s, c] : v) j[s.str()] = rat_str(c);
  return j;
}

FockVec fock_from_json(const OJson& j) {
  if (!j.is_object()) throw InvalidInput("state vector JSON must be an object");
  FockVec v;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_string()) throw InvalidInput("coefficient must be a string");
    Rat c = parse_rat(it.value().get<std::string>());
    if (c != 0) v[OccState::parse(it.key())] = c;
  }
  return v;
}

OJson qseries_to_json(const QSeries& q) {
  OJson j = OJson::array();
  for (const Rat& c : q.q_coefficients()) j.push_back(rat_str(c));
  return j;
}

OJson report_to_json(const Report& r) { return OJson(r.to_json()); }

}  // namespace ucalg
