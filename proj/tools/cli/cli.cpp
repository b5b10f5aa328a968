#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "garside/centralizer.hpp"
#include "garside/errors.hpp"
#include "garside/genericity.hpp"

namespace garside::cli {

using nlohmann::json;

namespace {

struct Token {
  std::string_view text;
  std::size_t pos;
};

std::optional<long> to_long(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<Token> split(std::string_view text, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '.') {
      out.push_back({text.substr(i, 1), offset + i});
      ++i;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) && text[j] != '.') ++j;
      out.push_back({text.substr(i, j - i), offset + i});
      i = j;
    }
  }
  return out;
}

void append_delta_power(std::vector<GeneratorLetter>& out, StrandCount n, long k) {
  const auto dw = simple_word(delta(n));
  for (long i = 0; i < k; ++i) out.insert(out.end(), dw.begin(), dw.end());
  for (long i = 0; i < -k; ++i) {
    for (auto it = dw.rbegin(); it != dw.rend(); ++it) out.push_back({it->index, -1});
  }
}

json perm_json(const SimpleElement& s) {
  json a = json::array();
  for (int i = 0; i < s.size(); ++i) a.push_back(s[i] + 1);
  return a;
}

json nf_json(const NormalForm& x) {
  json f = json::array();
  for (const auto& s : x.factors()) f.push_back(perm_json(s));
  return {{"inf", x.inf()}, {"factors", f}};
}

json nf_full_json(const NormalForm& x) {
  json j = nf_json(x);
  j["n"] = x.strands().value();
  j["sup"] = x.sup();
  j["canonical_length"] = x.canonical_length();
  j["normal_form"] = format_normal_form(x);
  return j;
}

std::string text_word(const NormalForm& x) {
  const std::string s = format_compact(x);
  return s.empty() ? "e" : s;
}

int count_orbits(const UssGraph& g) {
  std::unordered_set<NormalForm> assigned;
  int orbits = 0;
  for (const auto& v : g.vertices) {
    if (assigned.contains(v)) continue;
    ++orbits;
    if (v.is_delta_power()) {
      assigned.insert(v);
      continue;
    }
    for (const auto& e : cycling_orbit(v).elements) assigned.insert(e);
  }
  return orbits;
}

json graph_json(const UssGraph& g) {
  json vs = json::array();
  for (const auto& v : g.vertices) vs.push_back(nf_json(v));
  json as = json::array();
  for (const auto& a : g.arrows) {
    as.push_back({{"src", a.source},
                  {"dst", a.target},
                  {"label", perm_json(a.label)},
                  {"color", std::string(to_string(a.color))}});
  }
  return {{"n", g.n.value()}, {"summit_len", g.summit_len}, {"base", g.base},
          {"vertices", vs},   {"arrows", as}};
}

struct Options {
  std::string braid;
  std::string format = "text";
  std::string out_file;
  std::uint64_t seed = 1;
  int trials = 100;
  int n = 4;
  std::vector<int> lengths{4, 8, 16, 24};
  std::size_t cap = kDefaultVertexCap;
  unsigned threads = 0;
};

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidArgument("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

void emit_json(std::ostream& os, const json& j) { os << j.dump(2) << '\n'; }

int cmd_nf(const Options& o, bool inverse, std::ostream& out) {
  NormalForm x = normalize(parse_braid(o.braid));
  if (inverse) x = invert(x);
  Sink sink(o.out_file, out);
  if (o.format == "json") {
    emit_json(sink.stream(), nf_full_json(x));
  } else {
    sink.stream() << format_normal_form(x) << '\n';
  }
  return 0;
}

int cmd_sc(const Options& o, std::ostream& out) {
  const NormalForm x = normalize(parse_braid(o.braid));
  const ConjugationStep st = slide_to_circuit(x);
  const bool rigid = st.element.canonical_length() > 0 && is_rigid(st.element);
  Sink sink(o.out_file, out);
  if (o.format == "json") {
    emit_json(sink.stream(), {{"element", nf_full_json(st.element)},
                              {"conjugator", nf_full_json(st.conjugator)},
                              {"rigid", rigid}});
  } else {
    sink.stream() << "element: " << format_normal_form(st.element) << '\n'
                  << "conjugator: " << format_normal_form(st.conjugator) << '\n'
                  << "rigid: " << (rigid ? "true" : "false") << '\n';
  }
  return 0;
}

int cmd_uss(const Options& o, std::ostream& out) {
  const NormalForm x = normalize(parse_braid(o.braid));
  GraphOptions go;
  go.vertex_cap = o.cap;
  const UssGraph g = build_uss_graph(x, go);
  const int orbits = count_orbits(g);
  const bool minimal = check_minimal_uss(g.vertices[static_cast<std::size_t>(g.base)]);
  json gj = graph_json(g);
  if (o.format == "json") {
    gj["orbits"] = orbits;
    gj["minimal"] = minimal;
    Sink sink(o.out_file, out);
    emit_json(sink.stream(), gj);
    return 0;
  }
  out << "vertices: " << g.vertices.size() << ", orbits: " << orbits
      << ", minimal: " << (minimal ? "true" : "false") << '\n';
  if (!o.out_file.empty()) {
    Sink sink(o.out_file, out);
    emit_json(sink.stream(), gj);
  }
  return 0;
}

int cmd_centralizer(const Options& o, std::ostream& out) {
  const NormalForm y = normalize(parse_braid(o.braid));
  GraphOptions go;
  go.vertex_cap = o.cap;
  const CentralizerOutput c = centralizer_generators(y, go);
  Sink sink(o.out_file, out);
  if (o.format == "json") {
    json gens = json::array();
    for (const auto& g : c.generators) gens.push_back(format_compact(g));
    emit_json(sink.stream(), {{"case", std::string(to_string(c.case_tag))},
                              {"k", c.k},
                              {"uss_size", c.uss_size},
                              {"conjugator", format_compact(c.conjugator)},
                              {"generators", gens}});
    return 0;
  }
  auto& os = sink.stream();
  os << "case: " << to_string(c.case_tag) << '\n'
     << "k: " << c.k << '\n'
     << "uss_size: " << c.uss_size << '\n'
     << "conjugator: " << text_word(c.conjugator) << '\n'
     << "generators:\n";
  for (const auto& g : c.generators) os << "  " << text_word(g) << '\n';
  return 0;
}

int cmd_experiment(const Options& o, std::ostream& out) {
  ExperimentConfig cfg{StrandCount(o.n), o.lengths, o.trials, o.seed, 0, o.threads, {}};
  cfg.graph.vertex_cap = o.cap;
  const ExperimentReport r = run_experiment(cfg);
  Sink sink(o.out_file, out);
  if (o.format == "json") {
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"n", row.n},
                      {"l", row.l},
                      {"trials", row.trials},
                      {"rigid", row.rigid},
                      {"minimal", row.minimal},
                      {"two_orbits", row.two_orbits},
                      {"tau_shift", row.tau_shift},
                      {"tau_fixed", row.tau_fixed},
                      {"fallback", row.fallback},
                      {"failures", row.failures},
                      {"proxy", row.proxy},
                      {"proxy_minimal", row.proxy_minimal},
                      {"mean_ms", row.mean_ms}});
    }
    emit_json(sink.stream(), {{"seed", o.seed}, {"rows", rows}});
  } else {
    sink.stream() << to_csv(r);
  }
  return 0;
}

}  // namespace

BraidWord parse_braid(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("missing ':' after strand count", text.size());
  std::size_t b = 0;
  while (b < colon && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  std::size_t e = colon;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  const auto nv = to_long(text.substr(b, e - b));
  if (!nv) throw ParseError("malformed strand count", b);
  if (*nv < 2 || *nv > kMaxStrands) {
    throw ParseError("strand count must be between 2 and " + std::to_string(kMaxStrands), b);
  }
  const StrandCount n(static_cast<int>(*nv));
  std::vector<GeneratorLetter> letters;
  for (const auto& tok : split(text.substr(colon + 1), colon + 1)) {
    if (tok.text == ".") continue;
    if (tok.text.front() == 'D') {
      long k = 1;
      if (tok.text.size() > 1) {
        if (tok.text[1] != '^') throw ParseError("malformed Δ token '" + std::string(tok.text) + "'", tok.pos);
        const auto kv = to_long(tok.text.substr(2));
        if (!kv) throw ParseError("malformed Δ exponent '" + std::string(tok.text) + "'", tok.pos);
        k = *kv;
      }
      if (k > 10000 || k < -10000) throw ParseError("Δ exponent out of range", tok.pos);
      append_delta_power(letters, n, k);
      continue;
    }
    const auto v = to_long(tok.text);
    if (!v) throw ParseError("malformed generator '" + std::string(tok.text) + "'", tok.pos);
    if (*v == 0) throw ParseError("generator index 0 is not allowed", tok.pos);
    if (*v >= n.value() || -*v >= n.value()) {
      throw ParseError("generator index " + std::to_string(*v) + " out of range for " +
                           std::to_string(n.value()) + " strands",
                       tok.pos);
    }
    letters.push_back({static_cast<int>(*v > 0 ? *v : -*v), *v > 0 ? 1 : -1});
  }
  return BraidWord(n, std::move(letters));
}

std::string format_simple(const SimpleElement& s) {
  std::string out;
  for (const auto& l : simple_word(s)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.index);
  }
  return out;
}

std::string format_normal_form(const NormalForm& x) {
  std::string out = "D^" + std::to_string(x.inf());
  for (const auto& s : x.factors()) out += " . " + format_simple(s);
  return out;
}

std::string format_compact(const NormalForm& x) {
  std::string out;
  if (x.inf() != 0) out = "D^" + std::to_string(x.inf());
  for (const auto& s : x.factors()) {
    if (!out.empty()) out += ' ';
    out += format_simple(s);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Garside normal forms, ultra summit sets and centralizers of braids", "garside"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool braid) {
    if (braid) sub->add_option("braid", o.braid, "braid word, e.g. \"3: 1 1 2\"")->required();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", o.out_file, "write the main output to FILE");
  };
  auto* nf = app.add_subcommand("nf", "left normal form");
  auto* inv = app.add_subcommand("inv", "normal form of the inverse");
  auto* sc = app.add_subcommand("sc", "slide into the sliding circuits");
  auto* uss = app.add_subcommand("uss", "ultra summit graph");
  auto* cen = app.add_subcommand("centralizer", "generators of the centralizer");
  auto* exp = app.add_subcommand("experiment", "genericity experiment (CSV)");
  for (auto* s : {nf, inv, sc, uss, cen}) add_common(s, true);
  add_common(exp, false);
  for (auto* s : {uss, cen, exp}) {
    s->add_option("--cap", o.cap, "vertex cap for ultra summit graphs")->check(CLI::PositiveNumber);
  }
  exp->add_option("--n", o.n, "strand count")->check(CLI::Range(3, kMaxStrands));
  exp->add_option("--lengths", o.lengths, "canonical lengths, comma separated")->delimiter(',');
  exp->add_option("--trials", o.trials, "trials per length")->check(CLI::PositiveNumber);
  exp->add_option("--seed", o.seed, "random seed");
  exp->add_option("--threads", o.threads, "worker threads (0 = all cores)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (nf->parsed()) return cmd_nf(o, false, out);
    if (inv->parsed()) return cmd_nf(o, true, out);
    if (sc->parsed()) return cmd_sc(o, out);
    if (uss->parsed()) return cmd_uss(o, out);
    if (cen->parsed()) return cmd_centralizer(o, out);
    return cmd_experiment(o, out);
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << " [" << e.limit() << "]\n";
    return 2;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace garside::cli
