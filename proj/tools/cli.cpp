#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "cgtk/cancellation.hpp"
#include "cgtk/dehn.hpp"
#include "cgtk/error.hpp"
#include "cgtk/families.hpp"
#include "cgtk/hnn.hpp"
#include "cgtk/invgen.hpp"
#include "cgtk/permgroup.hpp"
#include "cgtk/presentation.hpp"

namespace cgtk::cli {

void Fnv1a::add(std::string_view bytes) {
  for (unsigned char c : bytes) {
    h_ ^= c;
    h_ *= 0x100000001b3ULL;
  }
  // Field separator so that ("ab","c") and ("a","bc") differ.
  h_ ^= 0xff;
  h_ *= 0x100000001b3ULL;
}

std::string Fnv1a::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
  return buf;
}

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Collected output of one subcommand.
struct Report {
  std::string command;
  Fnv1a digest;
  Json verdicts = Json::object();
  Json witnesses = Json::array();
  Json result = Json::object();
  std::ostringstream text;
  int exit_code = kExitPass;
};

std::string read_file(Report& r, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.digest.add(ss.str());
  return ss.str();
}

std::vector<std::string> split_on(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    std::string tok(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    const auto b = tok.find_first_not_of(" \t");
    if (b != std::string::npos) out.push_back(tok.substr(b, tok.find_last_not_of(" \t") - b + 1));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

/// "a=b, c=d" into name pairs.
std::vector<std::pair<std::string, std::string>> parse_pairs(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& item : split_on(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected name=name, got '" + item + "'");
    auto a = detail::split_ws(item.substr(0, eq));
    auto b = detail::split_ws(item.substr(eq + 1));
    if (a.size() != 1 || b.size() != 1) throw UsageError("expected name=name, got '" + item + "'");
    out.emplace_back(a[0], b[0]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Small cancellation

Word member_word(const SymmetrizedSet& rs, std::size_t i) { return rs.member_word(i); }

Word arc(const Word& cyc, std::size_t offset, std::size_t len) { return rotate(cyc, offset).subword(0, len); }

Json piece_json(const SymmetrizedSet& rs, const PieceWitness& w) {
  const auto& al = rs.alphabet();
  const Word host = member_word(rs, w.host);
  return {{"kind", "piece"},
          {"host", format_word(host, al)},
          {"other", format_word(member_word(rs, w.other), al)},
          {"length", w.length},
          {"shared", format_word(host.subword(0, w.length), al)}};
}

Json self_piece_json(const SymmetrizedSet& rs, const SelfPieceWitness& w) {
  const auto& al = rs.alphabet();
  const Word& cyc = rs.relators()[w.relator].word;
  return {{"kind", "self-piece"},
          {"relator", format_word(cyc, al)},
          {"first", w.first},
          {"second", w.second},
          {"length", w.length},
          {"inverse", w.inverse},
          {"firstArc", format_word(arc(cyc, w.first, w.length), al)},
          {"secondArc", format_word(arc(cyc, w.second, w.length), al)}};
}

Json k_piece_json(const SymmetrizedSet& rs, const KPieceWitness& w, const KDescriptor& k) {
  const auto& al = rs.alphabet();
  const Word& cyc = rs.relators()[w.relator].word;
  return {{"kind", "k-piece"},
          {"relator", format_word(cyc, al)},
          {"offset", w.offset},
          {"length", w.length},
          {"descriptor", k.describe(al)},
          {"arc", format_word(arc(cyc, w.offset, w.length), al)}};
}

Json violation_json(const SymmetrizedSet& rs, const Violation& v, std::span<const KDescriptor> ks) {
  Json j;
  j["item"] = std::string(to_string(v.item));
  j["relator"] = format_word(rs.relators()[v.relator].word, rs.alphabet());
  j["length"] = v.length;
  if (v.piece) j["piece"] = piece_json(rs, *v.piece);
  if (v.self_piece) j["selfPiece"] = self_piece_json(rs, *v.self_piece);
  if (v.k_piece) j["kPiece"] = k_piece_json(rs, *v.k_piece, ks[v.k_piece->descriptor]);
  return j;
}

std::string opt_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

Json opt_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

void print_rows(Report& r, const SymmetrizedSet& rs, const PieceReport& rep, const Json& rows) {
  r.text << std::left << std::setw(6) << "row" << std::setw(8) << "length" << std::setw(10) << "maxPiece"
         << std::setw(14) << "maxSelfPiece" << std::setw(12) << "maxKPiece" << std::setw(9) << "verdict"
         << "relator\n";
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& row = rep.rows[i];
    std::string kp;
    for (std::size_t k : row.max_k_piece) kp += (kp.empty() ? "" : ",") + std::to_string(k);
    r.text << std::setw(6) << i << std::setw(8) << row.length << std::setw(10) << opt_str(row.max_piece)
           << std::setw(14) << opt_str(row.max_self_piece) << std::setw(12) << (kp.empty() ? "-" : kp)
           << std::setw(9) << rows[i]["verdict"].get<std::string>()
           << format_word(rs.relators()[row.relator].word, rs.alphabet()) << "\n";
  }
}

Presentation load_presentation(Report& r, const std::string& path) { return parse_presentation(read_file(r, path)); }

struct KOptions {
  std::vector<std::string> subalpha;
  std::vector<std::string> power;
  std::vector<std::string> list;
};

std::vector<KDescriptor> build_ks(const Alphabet& al, const KOptions& ko) {
  std::vector<KDescriptor> ks;
  for (const auto& s : ko.subalpha) {
    std::vector<GenIndex> gens;
    for (const auto& name : detail::split_ws(s)) gens.push_back(al.index_of(name));
    ks.push_back(KDescriptor::sub_alphabet(std::move(gens)));
  }
  for (const auto& s : ko.power) ks.push_back(KDescriptor::cyclic_powers(parse_word(s, al)));
  for (const auto& s : ko.list) {
    std::vector<Word> words;
    for (const auto& w : split_on(s, ';')) words.push_back(parse_word(w, al));
    ks.push_back(KDescriptor::finite_list(std::move(words)));
  }
  return ks;
}

void sc_pieces(Report& r, const std::string& file, const KOptions& ko) {
  const auto p = load_presentation(r, file);
  const auto& rs = p.relators;
  const auto ks = build_ks(p.alphabet, ko);
  const auto rep = analyze_pieces(rs, ks);
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json j;
    j["relator"] = format_word(rs.relators()[row.relator].word, p.alphabet);
    j["length"] = row.length;
    j["maxPiece"] = opt_json(row.max_piece);
    j["maxSelfPiece"] = opt_json(row.max_self_piece);
    j["maxKPiece"] = row.max_k_piece;
    j["verdict"] = "reported";
    Json w = Json::array();
    if (row.piece_witness) w.push_back(piece_json(rs, *row.piece_witness));
    if (row.self_witness) w.push_back(self_piece_json(rs, *row.self_witness));
    for (std::size_t k = 0; k < row.k_witness.size(); ++k)
      if (row.k_witness[k]) w.push_back(k_piece_json(rs, *row.k_witness[k], ks[k]));
    j["witnesses"] = std::move(w);
    rows.push_back(std::move(j));
  }
  r.verdicts["maxPiece"] = rep.max_piece();
  r.verdicts["maxSelfPiece"] = rep.max_self_piece();
  r.result["rows"] = rows;
  print_rows(r, rs, rep, rows);
}

void sc_check(Report& r, const std::string& file, const std::string& mu, std::size_t rho, const KOptions& ko) {
  const auto p = load_presentation(r, file);
  const auto& rs = p.relators;
  const auto ks = build_ks(p.alphabet, ko);
  const CancellationParams params{Rational::parse(mu), rho};
  const auto v = check_condition(rs, params, ks);

  Json rows = Json::array();
  for (const auto& row : v.report.rows) {
    Json j;
    j["relator"] = format_word(rs.relators()[row.relator].word, p.alphabet);
    j["length"] = row.length;
    j["maxPiece"] = opt_json(row.max_piece);
    j["maxSelfPiece"] = opt_json(row.max_self_piece);
    j["maxKPiece"] = row.max_k_piece;
    Json w = Json::array();
    for (const auto& viol : v.violations)
      if (viol.relator == row.relator) w.push_back(violation_json(rs, viol, ks));
    j["verdict"] = w.empty() ? "pass" : "fail";
    j["witnesses"] = std::move(w);
    rows.push_back(std::move(j));
  }
  for (const auto& viol : v.violations) r.witnesses.push_back(violation_json(rs, viol, ks));
  r.verdicts = {{"longWords", v.long_words}, {"quasigeodesic", v.quasigeodesic}, {"pieces", v.pieces},
                {"kPieces", v.k_pieces},     {"selfPieces", v.self_pieces},     {"pass", v.pass()}};
  r.result["mu"] = params.mu.str();
  r.result["rho"] = rho;
  r.result["rows"] = rows;
  print_rows(r, rs, v.report, rows);
  r.text << "condition mu=" << params.mu.str() << " rho=" << rho << ": " << (v.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& w : r.witnesses) r.text << "  violation " << w.dump() << "\n";
  r.exit_code = v.pass() ? kExitPass : kExitFail;
}

void sc_family(Report& r, std::size_t m, const std::string& mu, std::size_t rho, bool certify, const std::string& out_path) {
  FamilySpec spec{m, Rational::parse(mu), rho};
  const auto words = generate_family(spec);
  const auto& al = formal_alphabet();
  std::ostringstream listing;
  Json jwords = Json::array();
  for (const auto& w : words) {
    listing << format_word(w, al) << "\n";
    jwords.push_back({{"word", format_word(w, al)}, {"length", w.size()}});
  }
  r.result["n"] = spec.n();
  r.result["words"] = jwords;
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << listing.str())) throw UsageError("cannot write " + out_path);
    r.result["out"] = out_path;
  } else {
    r.text << listing.str();
  }
  if (!certify) return;
  const auto v = certify_family(spec);
  r.verdicts = {{"longWords", v.long_words}, {"pieces", v.pieces}, {"selfPieces", v.self_pieces},
                {"maxPiece", v.report.max_piece()}, {"maxSelfPiece", v.report.max_self_piece()}, {"pass", v.pass()}};
  const auto rs = symmetrize(al, words);
  for (const auto& viol : v.violations) r.witnesses.push_back(violation_json(rs, viol, {}));
  r.text << "# N=" << spec.n() << " maxPiece=" << v.report.max_piece() << " maxSelfPiece=" << v.report.max_self_piece()
         << " certify: " << (v.pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& w : r.witnesses) r.text << "# violation " << w.dump() << "\n";
  r.exit_code = v.pass() ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// Dehn

Json certificate_json(const Alphabet& al, const std::vector<CertificateEntry>& cert) {
  Json out = Json::array();
  for (const auto& e : cert) out.push_back({{"conjugator", format_word(e.conjugator, al)}, {"relator", format_word(e.relator, al)}});
  return out;
}

void dehn_reduce_cmd(Report& r, const std::string& file, const std::string& word) {
  const auto p = load_presentation(r, file);
  const Word w = parse_word(word, p.alphabet);
  const auto res = dehn_reduce(p, w);
  const auto& al = p.alphabet;
  Json steps = Json::array();
  r.text << "input    " << format_word(w, al) << "\n";
  for (const auto& s : res.trace.steps) {
    steps.push_back({{"position", s.position},
                     {"u", format_word(s.u, al)},
                     {"relator", format_word(s.relator, al)},
                     {"complement", format_word(s.complement, al)}});
    r.text << "step     at " << s.position << ": " << format_word(s.u, al) << " -> "
           << format_word(invert(s.complement), al) << "  (relator " << format_word(s.relator, al) << ")\n";
  }
  r.text << "residual " << format_word(res.residual, al) << "\n";
  r.result = {{"input", format_word(w, al)},
              {"residual", format_word(res.residual, al)},
              {"steps", steps},
              {"certificate", certificate_json(al, res.trace.certificate)}};
  r.verdicts["c16Certified"] = p.c16_certified;
}

void dehn_decide_cmd(Report& r, const std::string& file, const std::string& word) {
  const auto p = load_presentation(r, file);
  const Word w = parse_word(word, p.alphabet);
  const auto v = decide(p, w);
  const auto& al = p.alphabet;
  const auto ab = abelianization_vector(p, w);
  r.verdicts = {{"outcome", std::string(to_string(v.outcome))}, {"c16Certified", p.c16_certified},
                {"abelianizationInLattice", ab.in_lattice}};
  r.result = {{"input", format_word(w, al)}, {"residual", format_word(v.residual, al)}, {"abelianization", ab.vector}};
  Json wit = {{"kind", "certificate"},
              {"input", format_word(w, al)},
              {"residual", format_word(v.residual, al)},
              {"certificate", certificate_json(al, v.trace.certificate)}};
  r.text << "outcome  " << to_string(v.outcome) << "\n"
         << "residual " << format_word(v.residual, al) << "\n"
         << "certificate entries " << v.trace.certificate.size() << "\n";
  if (v.outcome == DehnOutcome::Trivial) {
    r.result["certificate"] = wit["certificate"];
    return;
  }
  r.witnesses.push_back(std::move(wit));
  r.exit_code = kExitFail;
}

// ---------------------------------------------------------------------------
// HNN

HnnPresentation load_hnn(Report& r, const std::string& file) { return parse_hnn(read_file(r, file)); }

void hnn_build_cmd(Report& r, const std::string& file, const std::string& phi, const std::string& swaps) {
  const auto h = load_hnn(r, file);
  const auto& al = h.alphabet;
  r.text << format_hnn(h);
  Json rels = Json::array();
  for (const auto& w : h.induced_relators()) {
    rels.push_back(format_word(w, al));
    r.text << "relator " << format_word(w, al) << "\n";
  }
  r.result["relators"] = rels;

  const auto acyl = acylindricity_precheck_free(h);
  Json entries = Json::array();
  for (const auto& e : acyl.entries) {
    Json j = {{"x", format_word(edge_generator(h, e.x), al)},
              {"y", format_word(edge_generator(h, e.y), al)},
              {"violation", e.violation}};
    if (e.witness)
      j["witness"] = {{"m", e.witness->m}, {"n", e.witness->n}, {"conjugator", format_word(e.witness->conjugator, al)}};
    if (e.root) j["root"] = format_word(*e.root, al);
    if (e.violation) r.witnesses.push_back(j);
    entries.push_back(std::move(j));
  }
  r.result["acylindricity"] = entries;
  r.verdicts["acylindricityPrecheck"] = acyl.holds();
  r.text << "acylindricity precheck: " << (acyl.holds() ? "holds" : "violated") << "\n";
  bool ok = acyl.holds();

  if (!phi.empty() || !swaps.empty()) {
    const auto base_phi = WordMap::swapping(h.base.alphabet, parse_pairs(phi));
    try {
      const auto ext = extend_involution(h, base_phi, parse_pairs(swaps));
      Json imgs = Json::object();
      for (GenIndex g = 0; g < al.size(); ++g) imgs[al.name(g)] = format_word(ext.image(g), ext.alphabet());
      r.result["involution"] = imgs;
      r.verdicts["involution"] = true;
      r.text << "involution: extends\n";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotInvolution && e.code() != ErrorCode::IncompatibleAssociations) throw;
      r.verdicts["involution"] = false;
      r.witnesses.push_back({{"kind", std::string(to_string(e.code()))}, {"detail", e.what()}});
      r.text << "involution: " << e.what() << "\n";
      ok = false;
    }
  }
  r.exit_code = ok ? kExitPass : kExitFail;
}

void hnn_reduce_cmd(Report& r, const std::string& file, const std::string& word) {
  const auto h = load_hnn(r, file);
  const Word w = parse_word(word, h.alphabet);
  const Word out = britton_reduce(h, w);
  r.result = {{"input", format_word(w, h.alphabet)},
              {"output", format_word(out, h.alphabet)},
              {"stableBefore", stable_count(h, w)},
              {"stableAfter", stable_count(h, out)}};
  r.verdicts["stableLetterFree"] = stable_count(h, out) == 0;
  r.text << format_word(out, h.alphabet) << "\n";
}

void hnn_hexagon_cmd(Report& r, const std::string& file, const std::string& phi, const std::string& xsub,
                     const std::string& xi, const std::string& xi_prime) {
  const auto h = load_hnn(r, file);
  const auto& al = h.base.alphabet;
  const auto map = WordMap::swapping(al, parse_pairs(phi));
  std::vector<GenIndex> sub;
  for (const auto& name : detail::split_ws(xsub)) sub.push_back(al.index_of(name));
  const Word a = parse_word(xi, al);
  const Word b = parse_word(xi_prime, al);
  const auto v = hexagon_check_free(a, b, map, sub);
  r.verdicts["hexagonHolds"] = v.holds;
  r.result = {{"xi", format_word(a, al)}, {"xiPrime", format_word(b, al)}, {"phiXiPrime", format_word(apply_map(map, b), al)}};
  r.text << (v.holds ? "HexagonHolds" : "HexagonViolated") << "\n";
  if (v.holds) return;
  r.witnesses.push_back({{"kind", "conjugator"},
                         {"conjugator", format_word(*v.conjugator, al)},
                         {"xi", format_word(a, al)},
                         {"phiXiPrime", format_word(apply_map(map, b), al)}});
  r.text << "conjugator " << format_word(*v.conjugator, al) << "\n";
  r.exit_code = kExitFail;
}

// ---------------------------------------------------------------------------
// Groups

PermGroup load_group(Report& r, const std::string& arg) {
  if (std::filesystem::exists(arg)) return parse_group(read_file(r, arg));
  const auto names = library_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) {
    r.digest.add("library:" + arg);
    return library_group(arg);
  }
  throw UsageError("no group file or library group named " + arg);
}

Json elements_json(const PermGroup& g, const std::vector<ElementId>& ids) {
  Json out = Json::array();
  for (ElementId x : ids) out.push_back(g.element(x).str());
  return out;
}

std::string join_elements(const PermGroup& g, const std::vector<ElementId>& ids) {
  std::string s;
  for (ElementId x : ids) s += (s.empty() ? "" : ";") + g.element(x).str();
  return s.empty() ? "{}" : s;
}

void group_lattice_cmd(Report& r, const std::string& file) {
  const auto g = load_group(r, file);
  const auto lat = subgroup_lattice(g);
  Json subs = Json::array();
  r.text << "order " << g.order() << ", " << lat.size() << " subgroups\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& h = lat[i];
    subs.push_back({{"order", h.order}, {"normal", h.normal}, {"maximal", h.maximal}, {"elements", elements_json(g, h.elements())}});
    r.text << std::setw(4) << i << "  order " << std::setw(4) << h.order << (h.normal ? "  normal " : "         ")
           << (h.maximal ? "maximal " : "        ") << join_elements(g, h.elements()) << "\n";
  }
  r.verdicts = {{"order", g.order()}, {"subgroups", lat.size()}};
  r.result["subgroups"] = subs;
}

void group_classes_cmd(Report& r, const std::string& file) {
  const auto g = load_group(r, file);
  const auto cc = conjugacy_classes(g);
  Json classes = Json::array();
  r.text << "order " << g.order() << ", " << cc.count() << " classes\n";
  for (std::size_t c = 0; c < cc.count(); ++c) {
    classes.push_back({{"representative", g.element(cc.representatives[c]).str()},
                       {"size", cc.sizes[c]},
                       {"members", elements_json(g, cc.members(c))}});
    r.text << std::setw(4) << c << "  size " << std::setw(4) << cc.sizes[c] << "  " << g.element(cc.representatives[c]).str()
           << "\n";
  }
  r.verdicts = {{"order", g.order()}, {"classes", cc.count()}};
  r.result["classes"] = classes;
}

// ---------------------------------------------------------------------------
// Invariable generation

Json ig_witness_json(const PermGroup& g, const std::vector<ElementId>& s, const IgVerdict& v) {
  Json j = {{"kind", std::string(to_string(v.kind))}, {"set", elements_json(g, s)}};
  if (v.subgroup) {
    j["subgroupOrder"] = v.subgroup->order;
    j["subgroup"] = elements_json(g, v.subgroup->elements());
  }
  if (!v.conjugates.empty()) {
    j["conjugates"] = elements_json(g, v.conjugates);
    j["conjugators"] = elements_json(g, v.conjugators);
  }
  return j;
}

IgVerdict run_method(const AnalyzedGroup& ag, const std::vector<ElementId>& s, const std::string& method) {
  if (method == "subgroups") return ig_by_subgroups(ag, s);
  if (method == "bruteforce") return ig_by_bruteforce(ag, s);
  return ig_by_actions(ag, s);
}

void ig_check_cmd(Report& r, const std::string& file, const std::string& set, const std::string& method) {
  const AnalyzedGroup ag(load_group(r, file));
  const auto& g = ag.group();
  const auto s = parse_element_set(g, set);
  const std::vector<std::string> methods =
      method == "all" ? std::vector<std::string>{"subgroups", "bruteforce", "actions"} : std::vector<std::string>{method};
  std::optional<bool> first;
  bool agree = true;
  for (const auto& m : methods) {
    const auto v = run_method(ag, s, m);
    r.verdicts[m] = v.invariably_generates;
    if (!v.invariably_generates) r.witnesses.push_back(ig_witness_json(g, s, v));
    if (first && *first != v.invariably_generates) agree = false;
    if (!first) first = v.invariably_generates;
    r.text << std::left << std::setw(11) << m << (v.invariably_generates ? "invariably generates" : "does not invariably generate");
    if (v.subgroup) r.text << "  witness subgroup of order " << v.subgroup->order << ": " << join_elements(g, v.subgroup->elements());
    if (!v.conjugates.empty()) r.text << "  failing conjugates: " << join_elements(g, v.conjugates);
    r.text << "\n";
  }
  r.result["set"] = elements_json(g, s);
  r.verdicts["agree"] = agree;
  r.exit_code = *first && agree ? kExitPass : kExitFail;
}

/// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    f(idx);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

void ig_min_cmd(Report& r, const std::string& file, std::size_t bound) {
  const AnalyzedGroup ag(load_group(r, file));
  const auto& g = ag.group();
  const auto m = min_ig_size(ag, bound);
  r.verdicts["found"] = m.has_value();
  r.result["bound"] = bound;
  if (m) {
    r.verdicts["size"] = m->size;
    r.result["set"] = elements_json(g, m->witness);
    r.text << "minimum size " << m->size << ": " << join_elements(g, m->witness) << "\n";
    return;
  }
  // Every candidate subset gets its conjugacy-complete maximal subgroup.
  const auto reps = ag.nontrivial_representatives();
  for (std::size_t k = 1; k <= bound && k <= reps.size(); ++k)
    for_each_subset(reps.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<ElementId> s;
      for (std::size_t i : idx) s.push_back(reps[i]);
      r.witnesses.push_back(ig_witness_json(g, s, ig_by_subgroups(ag, s)));
    });
  r.text << "no invariably generating set of at most " << bound << " class representatives\n";
  r.exit_code = kExitFail;
}

void ig_equiv_cmd(Report& r, const std::string& file, std::size_t samples, std::uint64_t seed) {
  const AnalyzedGroup ag(load_group(r, file));
  const auto& g = ag.group();
  const auto& reps = ag.classes().representatives;
  std::vector<std::vector<ElementId>> sets{{}};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    sets.push_back({reps[i]});
    for (std::size_t j = i + 1; j < reps.size(); ++j) sets.push_back({reps[i], reps[j]});
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    std::vector<ElementId> s;
    for (int i = 0; i < 3; ++i) s.push_back(static_cast<ElementId>(rng() % g.order()));
    sets.push_back(std::move(s));
  }
  std::size_t disagreements = 0, generating = 0, skipped = 0;
  for (const auto& s : sets) {
    const auto a = ig_by_subgroups(ag, s);
    const auto c = ig_by_actions(ag, s);
    std::optional<IgVerdict> b;
    try {
      b = ig_by_bruteforce(ag, s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchBoundExceeded) throw;
      ++skipped;
    }
    generating += a.invariably_generates;
    const bool same = a.invariably_generates == c.invariably_generates &&
                      (!b || b->invariably_generates == a.invariably_generates);
    if (same) continue;
    ++disagreements;
    r.witnesses.push_back({{"kind", "disagreement"},
                           {"set", elements_json(g, s)},
                           {"subgroups", a.invariably_generates},
                           {"bruteforce", b ? Json(b->invariably_generates) : Json(nullptr)},
                           {"actions", c.invariably_generates}});
  }
  r.verdicts = {{"sets", sets.size()}, {"generating", generating}, {"bruteforceSkipped", skipped},
                {"disagreements", disagreements}};
  r.text << sets.size() << " sets, " << generating << " invariably generating, " << disagreements << " disagreements";
  if (skipped) r.text << ", " << skipped << " beyond the brute-force bound";
  r.text << "\n";
  r.exit_code = disagreements == 0 ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------

void emit(const Report& r, bool json, double ms, std::ostream& out) {
  if (!json) {
    out << r.text.str();
    return;
  }
  Json j;
  j["command"] = r.command;
  j["inputsDigest"] = r.digest.hex();
  j["verdicts"] = r.verdicts;
  j["witnesses"] = r.witnesses;
  j["result"] = r.result;
  j["exitCode"] = r.exit_code;
  j["wallTimeMs"] = ms;
  out << j.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorial group theory toolkit", "cgtk"};
  app.require_subcommand(1);
  bool json = false;

  std::string file, word, mu = "1/6", phi, swaps, xsub, xi, xi_prime, set, method = "subgroups", out_path;
  std::size_t rho = 1, m = 1, bound = 3, samples = 0;
  std::uint64_t seed = 1;
  bool certify = false;
  KOptions ko;

  auto leaf = [&](CLI::App* parent, const char* name, const char* desc) {
    auto* s = parent->add_subcommand(name, desc);
    s->add_flag("--json", json, "Emit a JSON report");
    return s;
  };
  auto k_flags = [&](CLI::App* s) {
    s->add_option("--k-subalpha", ko.subalpha, "K = words over these generators")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    s->add_option("--k-power", ko.power, "K = subwords of powers of this word")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    s->add_option("--k-list", ko.list, "K = subwords of these ';'-separated words")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  };

  auto* sc = app.add_subcommand("sc", "Small cancellation")->require_subcommand(1);
  auto* sc_p = leaf(sc, "pieces", "Piece report for a presentation");
  sc_p->add_option("file", file, "Presentation file")->required();
  k_flags(sc_p);
  auto* sc_c = leaf(sc, "check", "Check the small-cancellation condition");
  sc_c->add_option("file", file, "Presentation file")->required();
  sc_c->add_option("--mu", mu, "p/q")->required();
  sc_c->add_option("--rho", rho, "Minimum relator length");
  k_flags(sc_c);
  auto* sc_f = leaf(sc, "family", "Generate the W / W' family");
  sc_f->add_option("--m", m, "Words per half")->required();
  sc_f->add_option("--mu", mu, "p/q")->required();
  sc_f->add_option("--rho", rho, "rho'")->required();
  sc_f->add_flag("--certify", certify, "Check the condition on the family");
  sc_f->add_option("--out", out_path, "Write the words here");

  auto* dehn = app.add_subcommand("dehn", "Dehn's algorithm")->require_subcommand(1);
  auto* d_r = leaf(dehn, "reduce", "Reduce a word");
  auto* d_d = leaf(dehn, "decide", "Decide triviality");
  for (auto* s : {d_r, d_d}) {
    s->add_option("file", file, "Presentation file")->required();
    s->add_option("word", word, "Word")->required();
  }

  auto* hnn = app.add_subcommand("hnn", "HNN extensions over a free base")->require_subcommand(1);
  auto* h_b = leaf(hnn, "build", "Build and precheck an HNN presentation");
  h_b->add_option("file", file, "HNN file")->required();
  h_b->add_option("--phi", phi, "Base involution as swaps a=b,c=d");
  h_b->add_option("--swap", swaps, "Stable letter swaps s=t");
  auto* h_r = leaf(hnn, "reduce", "Britton-reduce a word");
  h_r->add_option("file", file, "HNN file")->required();
  h_r->add_option("word", word, "Word")->required();
  auto* h_h = leaf(hnn, "hexagon", "Free-base hexagon test");
  h_h->add_option("file", file, "HNN or presentation file")->required();
  h_h->add_option("--phi", phi, "Involution as swaps a=b,c=d")->required();
  h_h->add_option("--xsub", xsub, "Generators of the sub-alphabet")->required();
  h_h->add_option("--xi", xi, "xi")->required();
  h_h->add_option("--xi-prime", xi_prime, "xi'")->required();

  auto* group = app.add_subcommand("group", "Finite permutation groups")->require_subcommand(1);
  auto* g_l = leaf(group, "lattice", "Subgroup lattice");
  auto* g_c = leaf(group, "classes", "Conjugacy classes");
  for (auto* s : {g_l, g_c}) s->add_option("file", file, "Group file or library name")->required();

  auto* ig = app.add_subcommand("ig", "Invariable generation")->require_subcommand(1);
  auto* i_c = leaf(ig, "check", "Does the set invariably generate?");
  i_c->add_option("file", file, "Group file or library name")->required();
  i_c->add_option("--set", set, "Elements as (0 1);(0 1 2)")->required();
  i_c->add_option("--method", method, "subgroups, bruteforce, actions or all")
      ->check(CLI::IsMember({"subgroups", "bruteforce", "actions", "all"}));
  auto* i_m = leaf(ig, "min", "Smallest invariably generating set");
  i_m->add_option("file", file, "Group file or library name")->required();
  i_m->add_option("--bound", bound, "At most 4")->check(CLI::Range(0, 4));
  auto* i_e = leaf(ig, "equiv", "Three-way checker agreement");
  i_e->add_option("file", file, "Group file or library name")->required();
  i_e->add_option("--samples", samples, "Random three-element sets");
  i_e->add_option("--seed", seed, "Sampling seed");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Report r;
  for (const auto* parent : {sc, dehn, hnn, group, ig}) {
    if (!parent->parsed()) continue;
    r.command = parent->get_name() + " " + parent->get_subcommands().front()->get_name();
  }
  r.digest.add(r.command);
  for (const auto& a : args) r.digest.add(a);

  const auto start = std::chrono::steady_clock::now();
  try {
    if (sc_p->parsed()) sc_pieces(r, file, ko);
    else if (sc_c->parsed()) sc_check(r, file, mu, rho, ko);
    else if (sc_f->parsed()) sc_family(r, m, mu, rho, certify, out_path);
    else if (d_r->parsed()) dehn_reduce_cmd(r, file, word);
    else if (d_d->parsed()) dehn_decide_cmd(r, file, word);
    else if (h_b->parsed()) hnn_build_cmd(r, file, phi, swaps);
    else if (h_r->parsed()) hnn_reduce_cmd(r, file, word);
    else if (h_h->parsed()) hnn_hexagon_cmd(r, file, phi, xsub, xi, xi_prime);
    else if (g_l->parsed()) group_lattice_cmd(r, file);
    else if (g_c->parsed()) group_classes_cmd(r, file);
    else if (i_c->parsed()) ig_check_cmd(r, file, set, method);
    else if (i_m->parsed()) ig_min_cmd(r, file, bound);
    else if (i_e->parsed()) ig_equiv_cmd(r, file, samples, seed);
  } catch (const Error& e) {
    err << "cgtk " << r.command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "cgtk " << r.command << ": " << e.what() << "\n";
    return kExitUsage;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(r, json, ms, out);
  return r.exit_code;
}

}  // namespace cgtk::cli
