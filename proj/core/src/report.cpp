#include "k3ns/report.hpp"

#include <algorithm>
#include <sstream>

namespace k3ns {

OutputFormat output_format_from_string(const std::string& s) {
  if (s == "md" || s == "markdown") return OutputFormat::kMarkdown;
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  throw domain_error("unknown output format: " + s);
}

namespace {

long json_int(const Int& v) {
  if (!v.fits_slong_p()) throw domain_error("integer too large for JSON emission: " + to_string(v));
  return v.get_si();
}

}  // namespace

json lattice_json(const Lattice& l) {
  json gram = json::array();
  for (int i = 0; i < l.rank(); ++i)
    for (int j = 0; j < l.rank(); ++j) gram.push_back(json_int(l.gram(i, j)));
  return json{{"label", l.label}, {"gram", gram}, {"rank", l.rank()}};
}

json lattice_invariants_json(const LatticeInvariants& inv) {
  json j{{"rank", inv.rank},
         {"signature", {inv.s_plus, inv.s_minus}},
         {"det", to_string(inv.det)},
         {"unimodular", inv.unimodular}};
  json factors = json::array();
  for (const Int& f : inv.factors) factors.push_back(to_string(f));
  j["invariant_factors"] = factors;
  if (inv.elementary)
    j["elementary"] = {{"p", to_string(inv.elementary->first)}, {"a", inv.elementary->second}};
  else
    j["elementary"] = nullptr;
  if (inv.delta)
    j["delta"] = *inv.delta;
  else
    j["delta"] = nullptr;
  return j;
}

json cyclotomic_json(const Cyclotomic& x) {
  json coeffs = json::array();
  for (const Rat& c : x.coeffs()) coeffs.push_back(to_string(c));
  return json{{"p", x.prime()}, {"coeffs", coeffs}};
}

json linear_in_alpha_json(const LinearInAlpha& v) {
  return json{{"c0", to_string(v.c0)}, {"c1", to_string(v.c1)}};
}

std::string linear_in_alpha_str(const LinearInAlpha& v) {
  if (v.c1 == 0) return to_string(v.c0);
  std::string out;
  if (v.c1 == -1)
    out = "-a";
  else if (v.c1 == 1)
    out = "a";
  else
    out = to_string(v.c1) + "a";
  if (v.c0 > 0) out += "+" + to_string(v.c0);
  if (v.c0 < 0) out += to_string(v.c0);
  return out;
}

std::string alpha_of_r_str(const AffineInR& v) {
  if (v.c1 == 0) return to_string(v.c0);
  // All solved rows have c1 = 1/q with q * c0 integral.
  Rat q = Rat(1) / v.c1;
  if (is_integer(q) && is_integer(v.c0 * q)) {
    Int offset = to_integer(v.c0 * q);
    std::string inner = "r";
    if (offset > 0) inner += "+" + to_string(offset);
    if (offset < 0) inner += to_string(offset);
    if (q == 1) return inner;
    return "(" + inner + ")/" + to_string(to_integer(q));
  }
  return to_string(v.c0) + "+" + to_string(v.c1) + "r";
}

json table1_json(const LefschetzSolution& sol) {
  json nt = json::array();
  for (const auto& v : sol.n_t) nt.push_back(linear_in_alpha_json(v));
  return json{{"p", sol.p},
              {"alpha_of_r", {{"c0", to_string(sol.alpha_of_r.c0)}, {"c1", to_string(sol.alpha_of_r.c1)}}},
              {"alpha_of_r_str", alpha_of_r_str(sol.alpha_of_r)},
              {"n_t", nt},
              {"n_total", linear_in_alpha_json(sol.n_total)},
              {"n_total_str", linear_in_alpha_str(sol.n_total)}};
}

namespace {

std::vector<std::vector<std::string>> table1_rows(const std::vector<LefschetzSolution>& sols) {
  std::size_t max_types = 0;
  for (const auto& s : sols) max_types = std::max(max_types, s.n_t.size());
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"p", "alpha"};
  for (std::size_t t = 1; t <= max_types; ++t) header.push_back("n_" + std::to_string(t));
  header.push_back("n");
  rows.push_back(header);
  for (const auto& s : sols) {
    std::vector<std::string> row{std::to_string(s.p), alpha_of_r_str(s.alpha_of_r)};
    for (std::size_t t = 0; t < max_types; ++t)
      row.push_back(t < s.n_t.size() ? linear_in_alpha_str(s.n_t[t]) : "");
    row.push_back(linear_in_alpha_str(s.n_total));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string table1_markdown(const std::vector<LefschetzSolution>& sols) {
  return markdown_table(table1_rows(sols));
}

std::string table1_csv(const std::vector<LefschetzSolution>& sols) {
  return csv_table(table1_rows(sols));
}

namespace {

json opt_int(const std::optional<Int>& v) {
  if (!v) return nullptr;
  return json_int(*v);
}

std::string opt_str(const std::optional<Int>& v) { return v ? to_string(*v) : "-"; }

}  // namespace

json classification_row_json(const ClassificationRow& row) {
  json genera = json::array();
  for (int g : row.profile.curve_genera) genera.push_back(g);
  json nt = json::array();
  for (const Int& v : row.profile.points) nt.push_back(json_int(v));
  json j{{"p", row.p},
         {"r", row.r},
         {"a", row.a},
         {"delta", row.delta ? json(*row.delta) : json(nullptr)},
         {"m", row.m},
         {"special", to_string(row.profile.special)},
         {"curve_genera", genera},
         {"n_t", nt},
         {"n", json_int(row.profile.n)},
         {"alpha", json_int(row.profile.alpha)},
         {"g_thm", opt_int(row.g_thm)},
         {"k_thm", opt_int(row.k_thm)},
         {"table_g", opt_int(row.table_g)},
         {"table_k", opt_int(row.table_k)},
         {"S", row.S_name ? json(*row.S_name) : json(nullptr)},
         {"T", row.T_name ? json(*row.T_name) : json(nullptr)},
         {"moduli_dim", json_int(row.moduli_dim)}};
  return j;
}

json classification_table_json(const std::vector<ClassificationRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) arr.push_back(classification_row_json(r));
  return arr;
}

namespace {

std::vector<std::vector<std::string>> classification_rows(
    const std::vector<ClassificationRow>& rows) {
  const bool with_delta = !rows.empty() && rows.front().p == 2;
  std::size_t max_types = 0;
  for (const auto& r : rows) max_types = std::max(max_types, r.profile.points.size());

  std::vector<std::string> header{"r", "a"};
  if (with_delta) header.push_back("delta");
  header.push_back("m");
  for (std::size_t t = 1; t <= max_types; ++t) header.push_back("n_" + std::to_string(t));
  header.insert(header.end(), {"n", "alpha", "genera", "g", "k", "S", "T", "dim"});

  std::vector<std::vector<std::string>> out{header};
  for (const auto& r : rows) {
    std::vector<std::string> row{std::to_string(r.r), std::to_string(r.a)};
    if (with_delta) row.push_back(r.delta ? std::to_string(*r.delta) : "-");
    row.push_back(std::to_string(r.m));
    for (std::size_t t = 0; t < max_types; ++t)
      row.push_back(t < r.profile.points.size() ? to_string(r.profile.points[t]) : "");
    row.push_back(to_string(r.profile.n));
    row.push_back(to_string(r.profile.alpha));
    std::string genera;
    if (r.profile.special == SpecialLocus::kGeneric) {
      for (std::size_t i = 0; i < r.profile.curve_genera.size(); ++i) {
        if (i) genera += " ";
        genera += std::to_string(r.profile.curve_genera[i]);
      }
      if (genera.empty()) genera = "(none)";
    } else {
      genera = to_string(r.profile.special);
    }
    row.push_back(genera);
    row.push_back(opt_str(r.table_g));
    row.push_back(opt_str(r.table_k));
    row.push_back(r.S_name.value_or(""));
    row.push_back(r.T_name.value_or(""));
    row.push_back(to_string(r.moduli_dim));
    out.push_back(row);
  }
  return out;
}

}  // namespace

std::string classification_markdown(const std::vector<ClassificationRow>& rows) {
  return markdown_table(classification_rows(rows));
}

std::string classification_csv(const std::vector<ClassificationRow>& rows) {
  return csv_table(classification_rows(rows));
}

json moduli_json(const std::vector<ModuliComponent>& components) {
  json arr = json::array();
  for (const auto& c : components)
    arr.push_back(json{{"p", c.p},
                       {"S", c.S_expr},
                       {"display", c.display},
                       {"rank", c.rank},
                       {"dim", json_int(c.dim)}});
  return arr;
}

std::string moduli_markdown(const std::vector<ModuliComponent>& components) {
  std::vector<std::vector<std::string>> rows{{"p", "S", "rank", "dim"}};
  for (const auto& c : components)
    rows.push_back({std::to_string(c.p), c.display, std::to_string(c.rank), to_string(c.dim)});
  return markdown_table(rows);
}

std::string moduli_csv(const std::vector<ModuliComponent>& components) {
  std::vector<std::vector<std::string>> rows{{"p", "S", "rank", "dim"}};
  for (const auto& c : components)
    rows.push_back({std::to_string(c.p), c.display, std::to_string(c.rank), to_string(c.dim)});
  return csv_table(rows);
}

namespace {

json ord_json(int ord) {
  if (ord >= kOrdInfinity) return nullptr;
  return ord;
}

}  // namespace

json fibers_json(const WeierstrassModel& model, const FiberSummary& summary) {
  json places = json::array();
  for (const auto& rep : summary.places)
    places.push_back(json{{"factor", rep.place},
                          {"at_infinity", rep.at_infinity},
                          {"ord_f", ord_json(rep.ord_f)},
                          {"ord_g", ord_json(rep.ord_g)},
                          {"ord_delta", rep.ord_delta},
                          {"type", rep.type.str()},
                          {"euler", rep.euler_each()},
                          {"count", rep.count}});
  json bindings = json::object();
  for (const auto& [name, value] : model.bindings) bindings[name] = to_string(value);
  return json{{"label", model.label},
              {"f", model.f.str()},
              {"g", model.g.str()},
              {"bindings", bindings},
              {"places", places},
              {"euler_total", summary.euler_total}};
}

std::string fibers_markdown(const WeierstrassModel& model, const FiberSummary& summary) {
  std::ostringstream out;
  out << "model: y^2 = x^3 + (" << model.f.str() << ") x + (" << model.g.str() << ")\n";
  if (!model.bindings.empty()) {
    out << "bindings:";
    for (const auto& [name, value] : model.bindings) out << " " << name << "=" << to_string(value);
    out << "\n";
  }
  std::vector<std::vector<std::string>> rows{
      {"place", "ord_f", "ord_g", "ord_delta", "type", "euler", "count"}};
  for (const auto& rep : summary.places) {
    auto ord_str = [](int o) { return o >= kOrdInfinity ? std::string("inf") : std::to_string(o); };
    rows.push_back({rep.place, ord_str(rep.ord_f), ord_str(rep.ord_g),
                    std::to_string(rep.ord_delta), rep.type.str(), std::to_string(rep.euler_each()),
                    std::to_string(rep.count)});
  }
  out << markdown_table(rows);
  out << "euler total: " << summary.euler_total << "\n";
  return out.str();
}

std::string fibers_csv(const FiberSummary& summary) {
  std::vector<std::vector<std::string>> rows{
      {"place", "ord_f", "ord_g", "ord_delta", "type", "euler", "count"}};
  for (const auto& rep : summary.places) {
    auto ord_str = [](int o) { return o >= kOrdInfinity ? std::string("inf") : std::to_string(o); };
    rows.push_back({rep.place, ord_str(rep.ord_f), ord_str(rep.ord_g),
                    std::to_string(rep.ord_delta), rep.type.str(), std::to_string(rep.euler_each()),
                    std::to_string(rep.count)});
  }
  return csv_table(rows);
}

std::string markdown_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::vector<std::size_t> width(rows.front().size(), 1);
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    out << "|";
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << " " << row[i] << std::string(width[i] - row[i].size(), ' ') << " |";
    }
    out << "\n";
  };
  emit(rows.front());
  out << "|";
  for (std::size_t i = 0; i < width.size(); ++i) out << std::string(width[i] + 2, '-') << "|";
  out << "\n";
  for (std::size_t r = 1; r < rows.size(); ++r) emit(rows[r]);
  return out.str();
}

std::string csv_table(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ",";
      bool needs_quotes = row[i].find_first_of(",\"\n") != std::string::npos;
      if (needs_quotes) {
        out << '"';
        for (char c : row[i]) {
          if (c == '"') out << '"';
          out << c;
        }
        out << '"';
      } else {
        out << row[i];
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace k3ns
