#include "phigraph/io.hpp"

#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"

#include "phigraph/errors.hpp"

namespace phigraph {

using ordered_json = nlohmann::ordered_json;

namespace {

std::uint64_t parse_u64(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw UsageError("malformed label '" + std::string(whole) + "'");
  }
  return v;
}

std::string braces(const std::vector<std::uint64_t>& xs) {
  std::string out = "{";
  for (std::size_t j = 0; j < xs.size(); ++j) out += (j ? "," : "") + std::to_string(xs[j]);
  return out + "}";
}

template <class T>
ordered_json exact_json(const Exact<T>& e) {
  if (e) return *e;
  return to_string(e.status);
}

template <class T>
std::string exact_text(const Exact<T>& e) {
  if (!e) return to_string(e.status);
  if constexpr (std::is_same_v<T, bool>) {
    return *e ? "yes" : "no";
  } else {
    return std::to_string(*e);
  }
}

}  // namespace

Label parse_label(std::string_view text) {
  if (text.substr(0, 2) != "v_" || text.size() < 3) {
    throw UsageError("malformed label '" + std::string(text) + "'");
  }
  std::string_view rest = text.substr(2);
  if (rest.front() != '{') return Label::integer(parse_u64(rest, text));
  const auto close = rest.find('}');
  const auto comma = rest.find(',');
  if (close == std::string_view::npos || comma == std::string_view::npos || comma > close) {
    throw UsageError("malformed label '" + std::string(text) + "'");
  }
  const auto s = parse_u64(rest.substr(1, comma - 1), text);
  const auto i = parse_u64(rest.substr(comma + 1, close - comma - 1), text);
  std::string_view tail = rest.substr(close + 1);
  if (tail.empty()) return Label::subset(static_cast<unsigned>(s), static_cast<unsigned>(i));
  if (tail.front() != '(' || tail.back() != ')' || tail.size() < 3) {
    throw UsageError("malformed label '" + std::string(text) + "'");
  }
  std::string digits(tail.substr(1, tail.size() - 2));
  if (digits.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("malformed label '" + std::string(text) + "'");
  }
  return Label::subset(static_cast<unsigned>(s), static_cast<unsigned>(i), BigNat(digits));
}

std::string to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (const auto& l : g.labels()) out += "  \"" + l.render() + "\";\n";
  for (auto [u, v] : g.edges()) {
    out += "  \"" + g.label(u).render() + "\" -- \"" + g.label(v).render() + "\";\n";
  }
  out += "}\n";
  return out;
}

Graph parse_dot(std::string_view text) {
  std::vector<Label> labels;
  std::vector<std::pair<Label, Label>> edges;
  std::istringstream in{std::string(text)};
  std::string line;
  bool opened = false;
  bool closed = false;
  auto quoted = [](std::string_view s, std::size_t& pos) {
    const auto a = s.find('"', pos);
    const auto b = a == std::string_view::npos ? a : s.find('"', a + 1);
    if (b == std::string_view::npos) throw UsageError("DOT: expected a quoted label");
    pos = b + 1;
    return parse_label(s.substr(a + 1, b - a - 1));
  };
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::string_view s(line);
    s = s.substr(first);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\r' || s.back() == '\t')) s.remove_suffix(1);
    if (!opened) {
      if (s != "graph G {") throw UsageError("DOT: expected 'graph G {'");
      opened = true;
      continue;
    }
    if (s == "}") {
      closed = true;
      continue;
    }
    if (closed) throw UsageError("DOT: content after closing brace");
    if (s.back() != ';') throw UsageError("DOT: statement without ';'");
    std::size_t pos = 0;
    Label a = quoted(s, pos);
    const auto arrow = s.find("--", pos);
    if (arrow == std::string_view::npos) {
      labels.push_back(std::move(a));
    } else {
      pos = arrow + 2;
      edges.emplace_back(std::move(a), quoted(s, pos));
    }
  }
  if (!opened || !closed) throw UsageError("DOT: incomplete graph");
  try {
    return build_graph(std::move(labels), edges);
  } catch (const ConstructionError& e) {
    throw UsageError(std::string("DOT: ") + e.what());
  }
}

std::string to_json(const Graph& g) {
  ordered_json j;
  j["labels"] = ordered_json::array();
  for (const auto& l : g.labels()) j["labels"].push_back(l.render());
  j["edges"] = ordered_json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump(2) + "\n";
}

std::string to_table(const Graph& g) {
  std::ostringstream out;
  out << "order " << g.order() << ", size " << g.size() << "\n";
  for (VertexId v = 0; v < g.order(); ++v) {
    out << g.label(v).render() << " (" << g.degree(v) << "):";
    for (VertexId w : g.neighbors(v)) out << ' ' << g.label(w).render();
    out << "\n";
  }
  return out.str();
}

std::string to_csv(const WeightTable& table) {
  std::string out = "weight,multiplicity\n";
  for (const auto& [w, m] : table.entries) out += w.str() + "," + std::to_string(m) + "\n";
  return out;
}

std::string phiset_text(const PhiContext& ctx) {
  std::string out = "n=" + std::to_string(ctx.n) + "\n";
  out += "phi=" + std::to_string(ctx.phi) + "\n";
  out += "S_phi=" + braces(ctx.phi_set) + "\n";
  out += "S_theta=" + braces(ctx.theta_set) + "\n";
  out += "x=" + (ctx.min_above_one ? std::to_string(*ctx.min_above_one) : std::string("none")) + "\n";
  return out;
}

std::string phiset_json(const PhiContext& ctx) {
  ordered_json j;
  j["n"] = ctx.n;
  j["phi"] = ctx.phi;
  j["S_phi"] = ctx.phi_set;
  j["S_theta"] = ctx.theta_set;
  j["x"] = ctx.min_above_one ? ordered_json(*ctx.min_above_one) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string invariants_text(const InvariantReport& r) {
  std::ostringstream out;
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "order               " << r.order << "\n"
      << "size                " << r.size << "\n"
      << "min degree          " << r.min_degree << "\n"
      << "max degree          " << r.max_degree << "\n"
      << "degree sequence     ";
  for (std::size_t j = 0; j < r.degree_sequence.size(); ++j) out << (j ? " " : "") << r.degree_sequence[j];
  out << "\n"
      << "connected           " << yn(r.is_connected) << "\n"
      << "acyclic             " << yn(r.is_acyclic) << "\n"
      << "complete            " << yn(r.is_complete) << "\n"
      << "eulerian            " << yn(r.is_eulerian) << "\n"
      << "universal vertex    " << yn(r.has_universal_vertex) << "\n"
      << "triangles           " << r.triangle_count << "\n"
      << "chromatic number    " << exact_text(r.chromatic_number) << "\n"
      << "clique number       " << exact_text(r.clique_number) << "\n"
      << "domination number   " << exact_text(r.domination_number) << "\n"
      << "perfect             " << exact_text(r.is_perfect) << "\n";
  return out.str();
}

std::string invariants_json(const InvariantReport& r) {
  ordered_json j;
  j["order"] = r.order;
  j["size"] = r.size;
  j["min_degree"] = r.min_degree;
  j["max_degree"] = r.max_degree;
  j["degree_sequence"] = r.degree_sequence;
  j["connected"] = r.is_connected;
  j["acyclic"] = r.is_acyclic;
  j["complete"] = r.is_complete;
  j["eulerian"] = r.is_eulerian;
  j["universal_vertex"] = r.has_universal_vertex;
  j["triangles"] = r.triangle_count;
  j["chromatic_number"] = exact_json(r.chromatic_number);
  j["clique_number"] = exact_json(r.clique_number);
  j["domination_number"] = exact_json(r.domination_number);
  j["perfect"] = exact_json(r.is_perfect);
  return j.dump(2) + "\n";
}

namespace {

ordered_json report_object(const ClaimReport& r) {
  ordered_json j;
  j["claim_id"] = r.claim_id;
  j["quote"] = r.quote;
  j["range"] = r.range;
  j["summary"] = to_string(r.summary);
  j["verdicts"] = ordered_json::array();
  for (const auto& v : r.verdicts) {
    ordered_json vj;
    vj["param"] = v.param;
    vj["result"] = to_string(v.result);
    if (v.witness) vj["witness"] = *v.witness;
    vj["parts"] = ordered_json::array();
    for (const auto& p : v.parts) {
      ordered_json pj;
      pj["name"] = p.name;
      pj["result"] = to_string(p.result);
      if (!p.detail.empty()) pj["detail"] = p.detail;
      vj["parts"].push_back(std::move(pj));
    }
    j["verdicts"].push_back(std::move(vj));
  }
  j["counterexamples"] = ordered_json::array();
  for (const auto& c : r.counterexamples) j["counterexamples"].push_back({{"param", c.param}, {"witness", c.witness}});
  j["skipped"] = r.skipped;
  j["part_summaries"] = ordered_json::object();
  for (const auto& [name, s] : r.part_summaries) j["part_summaries"][name] = to_string(s);
  j["scopes"] = ordered_json::array();
  for (const auto& s : r.scopes) {
    j["scopes"].push_back({{"scope", s.scope},
                           {"summary", to_string(s.summary)},
                           {"evaluated", s.evaluated},
                           {"counterexamples", s.counterexamples}});
  }
  return j;
}

}  // namespace

std::string report_json(const ClaimReport& report) { return report_object(report).dump(2) + "\n"; }

std::string reports_json(const std::vector<ClaimReport>& reports) {
  ordered_json j = ordered_json::array();
  for (const auto& r : reports) j.push_back(report_object(r));
  return j.dump(2) + "\n";
}

std::string report_table(const ClaimReport& r) {
  std::ostringstream out;
  std::size_t holds = 0;
  for (const auto& v : r.verdicts) holds += v.result == Outcome::holds ? 1 : 0;
  out << r.claim_id << "  " << to_string(r.summary) << "  [" << r.range << "]  holds " << holds
      << ", refuted " << r.counterexamples.size() << ", skipped " << r.skipped.size() << "\n";
  for (const auto& [name, s] : r.part_summaries) out << "  part " << name << ": " << to_string(s) << "\n";
  for (const auto& s : r.scopes) {
    out << "  scope " << s.scope << ": " << to_string(s.summary) << " (" << s.evaluated << " evaluated, "
        << s.counterexamples << " refuted)\n";
  }
  for (const auto& c : r.counterexamples) out << "  counterexample " << c.param << ": " << c.witness << "\n";
  return out.str();
}

std::string reports_table(const std::vector<ClaimReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += report_table(r);
  return out;
}

std::string claims_table(const std::vector<ClaimInfo>& claims) {
  std::ostringstream out;
  for (const auto& c : claims) {
    out << c.id << (c.variant ? " (variant)" : "") << "\n"
        << "  " << c.statement << "\n"
        << "  formula: " << c.quote << "\n"
        << "  domain: " << c.domain << "\n";
    if (!c.guards.empty()) {
      out << "  guards:";
      for (const auto& g : c.guards) out << ' ' << g;
      out << "\n";
    }
  }
  return out.str();
}

std::string claims_json(const std::vector<ClaimInfo>& claims) {
  ordered_json j = ordered_json::array();
  for (const auto& c : claims) {
    j.push_back({{"id", c.id},
                 {"statement", c.statement},
                 {"quote", c.quote},
                 {"domain", c.domain},
                 {"guards", c.guards},
                 {"variant", c.variant}});
  }
  return j.dump(2) + "\n";
}

}  // namespace phigraph
