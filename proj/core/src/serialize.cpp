#include "wittforge/serialize.hpp"

#include <cctype>

namespace wittforge {

namespace {

bool valid_integer(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

FieldElem parse_field_elem(const std::string& text, const BaseField& field) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!valid_integer(num))
    throw ParseError("coefficient \"" + text + "\": bad numerator");
  if (slash == std::string::npos) {
    return FieldElem(field, Rational(Int(num)));
  }
  if (!field.is_rationals())
    throw ParseError("coefficient \"" + text + "\": fractions are not residues mod p");
  const std::string den = text.substr(slash + 1);
  if (!valid_integer(den) || den[0] == '-')
    throw ParseError("coefficient \"" + text + "\": bad denominator");
  Int d(den);
  if (d == 0) throw ParseError("coefficient \"" + text + "\": zero denominator");
  return FieldElem(field, Rational(Int(num), d));
}

BaseField field_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return BaseField::rationals();
    throw ParseError("field: expected \"Q\" or {\"Fp\": p}");
  }
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    try {
      return BaseField::prime_field(j["Fp"].get<std::uint32_t>());
    } catch (const std::domain_error& e) {
      throw ParseError(std::string("field.Fp: ") + e.what());
    }
  }
  throw ParseError("field: expected \"Q\" or {\"Fp\": p}");
}

Json field_to_json(const BaseField& f) {
  if (f.is_rationals()) return Json("Q");
  return Json{{"Fp", f.p}};
}

DiagonalForm form_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field")) throw ParseError("form: missing \"field\"");
  const BaseField field = field_from_json(j["field"]);
  if (j.contains("gram")) {
    const Json& g = j["gram"];
    if (!g.is_array() || g.empty()) throw ParseError("form.gram: expected a nonempty matrix");
    std::vector<std::vector<FieldElem>> m;
    for (const Json& row : g) {
      if (!row.is_array() || row.size() != g.size())
        throw ParseError("form.gram: matrix is not square");
      std::vector<FieldElem> r;
      for (const Json& cell : row) {
        if (!cell.is_string()) throw ParseError("form.gram: entries must be strings");
        r.push_back(parse_field_elem(cell.get<std::string>(), field));
      }
      m.push_back(std::move(r));
    }
    try {
      return diagonalize(m);
    } catch (const std::domain_error& e) {
      throw ParseError(std::string("form.gram: ") + e.what());
    }
  }
  if (!j.contains("diag") || !j["diag"].is_array())
    throw ParseError("form: missing \"diag\" list");
  std::vector<FieldElem> coeffs;
  for (const Json& c : j["diag"]) {
    if (!c.is_string()) throw ParseError("form.diag: coefficients must be strings");
    FieldElem e = parse_field_elem(c.get<std::string>(), field);
    if (e.is_zero()) throw ParseError("form.diag: zero coefficient \"" + c.get<std::string>() + "\"");
    coeffs.push_back(std::move(e));
  }
  return DiagonalForm(field, std::move(coeffs));
}

Json form_to_json(const DiagonalForm& q) {
  Json diag = Json::array();
  for (const FieldElem& c : q.coefficients()) diag.push_back(to_string(c));
  return Json{{"field", field_to_json(q.field())}, {"diag", std::move(diag)}};
}

PfisterSlots slots_from_json(const Json& j, const BaseField& field) {
  if (!j.is_object()) throw ParseError("slots: expected an object");
  if (!j.contains("sign") || !j["sign"].is_string()) throw ParseError("slots: missing \"sign\"");
  const std::string sgn = j["sign"].get<std::string>();
  if (sgn != "+" && sgn != "-") throw ParseError("slots.sign: expected \"+\" or \"-\"");
  if (!j.contains("slots") || !j["slots"].is_array())
    throw ParseError("slots: missing \"slots\" list");
  std::vector<FieldElem> slots;
  for (const Json& s : j["slots"]) {
    if (!s.is_string()) throw ParseError("slots.slots: entries must be strings");
    slots.push_back(parse_field_elem(s.get<std::string>(), field));
  }
  if (j.contains("fold") &&
      (!j["fold"].is_number_unsigned() || j["fold"].get<std::size_t>() != slots.size()))
    throw ParseError("slots.fold: does not match the slot count");
  try {
    return PfisterSlots(sgn == "+" ? +1 : -1, std::move(slots));
  } catch (const std::domain_error& e) {
    throw ParseError(std::string("slots: ") + e.what());
  }
}

Json slots_to_json(const PfisterSlots& p) {
  Json slots = Json::array();
  for (const FieldElem& s : p.slots) slots.push_back(to_string(s));
  return Json{{"fold", p.fold()}, {"sign", p.sign > 0 ? "+" : "-"}, {"slots", std::move(slots)}};
}

Json invariants_to_json(const WittInvariants& inv) {
  Json symbols = Json::object();
  for (const auto& [v, s] : inv.hasse_symbols) symbols[to_string(v)] = s;
  Json out{{"field", field_to_json(inv.field)},
           {"dimension", inv.dimension},
           {"signed_discriminant", to_string(inv.signed_discriminant)}};
  if (inv.field.is_rationals()) {
    out["signature"] = inv.signature;
    out["hasse_symbols"] = std::move(symbols);
  }
  return out;
}

Json summary_to_json(const GroupSummary& s) {
  Json center = Json::array();
  for (const auto& x : s.center_elements) center.push_back(to_string(x));
  return Json{{"n", s.n},
              {"order", s.order},
              {"center_kind", to_string(s.center_kind)},
              {"center_elements", std::move(center)},
              {"commutator_subgroup_order", s.commutator_subgroup_order},
              {"exponent", s.exponent},
              {"ed", s.ed_value}};
}

Json report_to_json(const BoundReport& r) {
  Json out{{"name", r.name}, {"n", r.n}};
  if (r.exact) {
    out["value"] = to_string(r.value);
  } else {
    out["enclosure"] = Json{{"lo", to_string(r.enclosure.lo)}, {"hi", to_string(r.enclosure.hi)}};
  }
  out["vacuous"] = r.vacuous;
  out["validity"] = r.validity;
  return out;
}

}  // namespace wittforge
