#include "vfilt/serialize.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace vfilt {
namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(std::string("expected an integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

Json window_json(const std::optional<int>& w) { return w ? Json(*w) : Json(nullptr); }

std::vector<std::string> header_weights(const FiltrationTable& t) {
  std::vector<std::string> out;
  for (int w = t.lowest_weight; w <= t.weight_cutoff; ++w) out.push_back(std::to_string(w));
  return out;
}

std::string family_label(const FiltrationTable& t) { return family_name(t.family); }

}  // namespace

Json preset_to_json(const AlgebraPreset& preset) {
  if (preset.kind() == AlgebraPreset::Kind::heisenberg) return Json{{"kind", "heisenberg"}};
  return Json{{"kind", "lattice"}, {"gram", preset.gram()}};
}

AlgebraPreset preset_from_json(const Json& j) {
  if (j.is_string()) return AlgebraPreset::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw std::invalid_argument("preset must be an object with a string 'kind'");
  }
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "heisenberg") return AlgebraPreset::heisenberg();
  if (kind == "lattice") return AlgebraPreset::lattice(int_field(j, "gram"));
  throw std::invalid_argument("unknown preset kind '" + kind + "'");
}

std::string coefficient_to_string(const Scalar& c) {
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Scalar coefficient_from_string(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("bad coefficient '" + std::string(text) + "' (expected p/q)");
  }
  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Scalar out(p);
  out /= Scalar(q);
  return out;
}

Json state_to_json(const AlgebraPreset& preset, const State& s) {
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) {
    terms.push_back(Json{{"hpart", m.hpart}, {"lpoint", m.lpoint}, {"coef", coefficient_to_string(c)}});
  }
  return Json{{"preset", preset_to_json(preset)}, {"terms", terms}};
}

TaggedState state_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("preset") || !j.contains("terms") || !j.at("terms").is_array()) {
    throw std::invalid_argument("state must be an object with 'preset' and a 'terms' list");
  }
  TaggedState out{preset_from_json(j.at("preset")), State{}};
  for (const auto& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("hpart") || !t.at("hpart").is_array() || !t.contains("coef") ||
        !t.at("coef").is_string()) {
      throw std::invalid_argument("term must carry 'hpart' (list) and 'coef' (string)");
    }
    Monomial m;
    for (const auto& k : t.at("hpart")) {
      if (!k.is_number_integer()) throw std::invalid_argument("hpart entries must be integers");
      m.hpart.push_back(k.get<int>());
    }
    m.lpoint = t.contains("lpoint") ? int_field(t, "lpoint") : 0;
    if (!out.preset.admits(m)) {
      throw std::invalid_argument("term " + t.dump() + " is not a basis monomial of " + out.preset.name() +
                                  " (hpart must be weakly decreasing and >= 1)");
    }
    out.state.add_term(m, coefficient_from_string(t.at("coef").get<std::string>()));
  }
  return out;
}

GeneratorSet generators_from_json(const Json& j, const AlgebraPreset& preset) {
  const Json* list = &j;
  GeneratorSet out;
  if (j.is_object()) {
    if (!j.contains("vectors")) throw std::invalid_argument("generator object needs 'vectors'");
    list = &j.at("vectors");
    if (j.contains("order")) {
      std::vector<std::size_t> order;
      for (const auto& r : j.at("order")) {
        if (!r.is_number_integer() || r.get<long long>() < 0) throw std::invalid_argument("order entries must be non-negative integers");
        order.push_back(r.get<std::size_t>());
      }
      out.order = std::move(order);
    }
  }
  if (!list->is_array()) throw std::invalid_argument("generators must be a JSON list of states");
  for (const auto& item : *list) {
    TaggedState s = state_from_json(item);
    if (!(s.preset == preset)) {
      throw std::invalid_argument("generator preset " + s.preset.name() + " does not match " + preset.name());
    }
    out.vectors.push_back(std::move(s.state));
  }
  if (out.order && out.order->size() != out.vectors.size()) {
    throw std::invalid_argument("generator order has the wrong length");
  }
  return out;
}

Json table_to_json(const FiltrationTable& t) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < t.ns.size(); ++r) {
    Json quot = Json::array();
    for (std::size_t c = 0; c < t.ambient.size(); ++c) quot.push_back(t.quotient(r, c));
    rows.push_back(Json{{"n", t.ns[r]}, {"dims", t.dims[r]}, {"quotients", quot}});
  }
  Json weights = Json::array();
  for (int w = t.lowest_weight; w <= t.weight_cutoff; ++w) weights.push_back(w);
  return Json{{"schema_version", 1},
              {"kind", "filtration_table"},
              {"preset", preset_to_json(t.preset)},
              {"family", family_label(t)},
              {"cutoff", t.weight_cutoff},
              {"window", window_json(t.lattice_window)},
              {"lowest_weight", t.lowest_weight},
              {"max_n", t.max_n},
              {"weights", weights},
              {"ambient", t.ambient},
              {"rows", rows}};
}

std::string table_to_csv(const FiltrationTable& t) {
  std::ostringstream out;
  out << "quantity,n";
  for (const auto& w : header_weights(t)) out << ',' << w;
  out << "\nambient,";
  for (auto d : t.ambient) out << ',' << d;
  out << '\n';
  for (std::size_t r = 0; r < t.ns.size(); ++r) {
    out << "dim," << t.ns[r];
    for (auto d : t.dims[r]) out << ',' << d;
    out << "\nquotient," << t.ns[r];
    for (std::size_t c = 0; c < t.ambient.size(); ++c) out << ',' << t.quotient(r, c);
    out << '\n';
  }
  return out.str();
}

std::string table_to_markdown(const FiltrationTable& t) {
  std::ostringstream out;
  out << "# " << family_label(t) << " filtration, " << t.preset.name() << ", weights " << t.lowest_weight
      << ".." << t.weight_cutoff;
  if (t.lattice_window) out << ", window " << *t.lattice_window;
  out << "\n\nCells are dim F_n(w) / dim V(w)/F_n(w).\n\n| n |";
  for (const auto& w : header_weights(t)) out << " w=" << w << " |";
  out << "\n|---|";
  for (std::size_t c = 0; c < t.ambient.size(); ++c) out << "---|";
  out << "\n| V |";
  for (auto d : t.ambient) out << ' ' << d << " |";
  out << '\n';
  for (std::size_t r = 0; r < t.ns.size(); ++r) {
    out << "| " << t.ns[r] << " |";
    for (std::size_t c = 0; c < t.ambient.size(); ++c) out << ' ' << t.dims[r][c] << " / " << t.quotient(r, c) << " |";
    out << '\n';
  }
  return out.str();
}

Json report_to_json(const VerificationReport& report, const AlgebraPreset& preset, const Json& config) {
  Json checks = Json::array();
  for (const auto& rec : report.records()) {
    Json c{{"name", rec.name}, {"params", rec.params}, {"status", status_name(rec.status)}};
    if (rec.witness) c["witness"] = state_to_json(preset, *rec.witness);
    if (!rec.note.empty()) c["note"] = rec.note;
    checks.push_back(std::move(c));
  }
  return Json{{"schema_version", 1},
              {"preset", preset_to_json(preset)},
              {"config", config},
              {"summary",
               {{"pass", report.count(CheckStatus::pass)},
                {"fail", report.count(CheckStatus::fail)},
                {"skipped", report.count(CheckStatus::skipped)}}},
              {"checks", checks}};
}

std::string report_to_markdown(const Json& report) {
  std::ostringstream out;
  const auto& s = report.at("summary");
  out << "# Verification report\n\npreset `" << report.at("preset").dump() << "`, config `"
      << report.at("config").dump() << "`\n\n"
      << s.at("pass").get<std::size_t>() << " pass, " << s.at("fail").get<std::size_t>() << " fail, "
      << s.at("skipped").get<std::size_t>() << " skipped\n\n| status | check | params | detail |\n|---|---|---|---|\n";
  for (const auto& c : report.at("checks")) {
    std::string detail = c.value("note", "");
    if (c.contains("witness")) {
      if (!detail.empty()) detail += "; ";
      detail += "witness " + c.at("witness").at("terms").dump();
    }
    // keep pipes from breaking the table
    std::string params = c.at("params").dump();
    for (std::string* f : {&params, &detail}) {
      std::string escaped;
      for (char ch : *f) escaped += ch == '|' ? std::string("\\|") : std::string(1, ch);
      *f = escaped;
    }
    out << "| " << c.at("status").get<std::string>() << " | " << c.at("name").get<std::string>() << " | `"
        << params << "` | " << detail << " |\n";
  }
  return out.str();
}

}  // namespace vfilt
