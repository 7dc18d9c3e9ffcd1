#include "lpgram/io.hpp"

#include "lpgram/parse.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lpgram {

namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

// Accessors that turn nlohmann's type errors into invalid_argument.
template <class T>
T get(const Json& j, const char* field) {
  try {
    return j.at(field).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad or missing field '") + field +
                                "': " + e.what());
  }
}

Json vec_json(const Vec& v) { return Json(v); }

Vec vec_from(const Json& j, const char* what) {
  try {
    return j.get<Vec>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad ") + what + ": " + e.what());
  }
}

StateId state_index(const BvassamSystem& sys, const std::string& name) {
  for (StateId i = 0; i < sys.states.size(); ++i)
    if (sys.states[i] == name) return i;
  throw std::invalid_argument("unknown state: " + name);
}

}  // namespace

std::string grammar_to_json(const LpGrammar& g) {
  Json j;
  j["alphabet"] = g.alphabet;
  j["distinguished"] = g.distinguished->text();
  Json lex = Json::array();
  for (const auto& [sym, t] : g.lexicon)
    lex.push_back(Json::array({sym, t->text()}));
  j["lexicon"] = std::move(lex);
  return dump(j);
}

LpGrammar grammar_from_json(const std::string& text) {
  Json j = parse_json(text);
  LpGrammar g;
  g.alphabet = get<std::vector<std::string>>(j, "alphabet");
  g.distinguished = parse_type(get<std::string>(j, "distinguished"));
  for (const Json& e : get<Json>(j, "lexicon")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("lexicon entry must be a [symbol, type] pair");
    g.lexicon.emplace_back(e.at(0).get<std::string>(),
                           parse_type(e.at(1).get<std::string>()));
  }
  validate(g);
  return g;
}

std::string system_to_json(const BvassamSystem& sys,
                           std::optional<std::uint64_t> linear_bound) {
  Json j;
  j["K"] = sys.full_dim;
  j["k"] = sys.visible_dim;
  j["states"] = sys.states;
  j["accepting"] = sys.states.at(sys.accepting);
  Json axioms = Json::array();
  for (const auto& ax : sys.axioms)
    axioms.push_back(Json::array({sys.states.at(ax.state), vec_json(ax.vec)}));
  j["axioms"] = std::move(axioms);
  Json unary = Json::array();
  for (const auto& r : sys.unary)
    unary.push_back(Json::array({sys.states.at(r.target),
                                 sys.states.at(r.source), vec_json(r.delta1),
                                 vec_json(r.delta2)}));
  j["unary"] = std::move(unary);
  Json binary = Json::array();
  for (const auto& r : sys.binary)
    binary.push_back(Json::array({sys.states.at(r.target),
                                  sys.states.at(r.left),
                                  sys.states.at(r.right)}));
  j["binary"] = std::move(binary);
  if (linear_bound) j["C"] = *linear_bound;
  return dump(j);
}

SystemFile system_from_json(const std::string& text) {
  Json j = parse_json(text);
  SystemFile out;
  auto& sys = out.system;
  sys.full_dim = get<std::size_t>(j, "K");
  sys.visible_dim = get<std::size_t>(j, "k");
  sys.states = get<std::vector<std::string>>(j, "states");
  sys.accepting = state_index(sys, get<std::string>(j, "accepting"));
  for (const Json& e : get<Json>(j, "axioms")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("axiom must be a [state, vector] pair");
    sys.axioms.push_back(BvAxiom{state_index(sys, e.at(0).get<std::string>()),
                                 vec_from(e.at(1), "axiom vector")});
  }
  for (const Json& e : get<Json>(j, "unary")) {
    if (!e.is_array() || e.size() != 4)
      throw std::invalid_argument(
          "unary rule must be [target, source, delta1, delta2]");
    sys.unary.push_back(BvUnary{state_index(sys, e.at(0).get<std::string>()),
                                state_index(sys, e.at(1).get<std::string>()),
                                vec_from(e.at(2), "unary delta"),
                                vec_from(e.at(3), "unary delta")});
  }
  for (const Json& e : get<Json>(j, "binary")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("binary rule must be [target, left, right]");
    sys.binary.push_back(BvBinary{state_index(sys, e.at(0).get<std::string>()),
                                  state_index(sys, e.at(1).get<std::string>()),
                                  state_index(sys, e.at(2).get<std::string>())});
  }
  if (j.contains("C")) out.linear_bound = get<std::uint64_t>(j, "C");
  validate(sys);
  return out;
}

namespace {

Json proof_node(const ProofPtr& p) {
  Json j;
  j["rule"] = std::string(rule_name(p->rule));
  j["conclusion"] = p->conclusion.to_string();
  if (p->principal) j["principal"] = p->principal->text();
  Json prems = Json::array();
  for (const auto& q : p->premises) prems.push_back(proof_node(q));
  j["premises"] = std::move(prems);
  return j;
}

ProofPtr proof_node_from(const Json& j) {
  static const std::map<std::string, Rule> kRules = {
      {"axiom", Rule::Axiom},
      {"div-left", Rule::DivLeft},
      {"div-right", Rule::DivRight},
      {"prod-left", Rule::ProdLeft},
      {"prod-right", Rule::ProdRight},
  };
  auto name = get<std::string>(j, "rule");
  auto it = kRules.find(name);
  if (it == kRules.end()) throw std::invalid_argument("unknown rule: " + name);
  Sequent conclusion = parse_sequent(get<std::string>(j, "conclusion"));
  TypeRef principal = nullptr;
  if (j.contains("principal"))
    principal = parse_type(get<std::string>(j, "principal"));
  std::vector<ProofPtr> premises;
  for (const Json& e : get<Json>(j, "premises"))
    premises.push_back(proof_node_from(e));
  return std::make_shared<Proof>(it->second, std::move(conclusion), principal,
                                 std::move(premises));
}

}  // namespace

std::string proof_to_json(const ProofPtr& p) {
  if (!p) throw std::invalid_argument("missing proof");
  return dump(proof_node(p));
}

ProofPtr proof_from_json(const std::string& text) {
  ProofPtr p = proof_node_from(parse_json(text));
  if (!check_proof(p))
    throw std::invalid_argument("proof does not validate");
  return p;
}

namespace {

Json derivation_node(const BvassamSystem& sys, const BvDerivPtr& d) {
  Json j;
  switch (d->kind) {
    case BvDerivation::Kind::Axiom: j["kind"] = "axiom"; break;
    case BvDerivation::Kind::Unary: j["kind"] = "unary"; break;
    case BvDerivation::Kind::Binary: j["kind"] = "binary"; break;
  }
  j["rule"] = d->rule_index;
  j["fact"] = Json{{"state", sys.states.at(d->fact.state)},
                   {"vector", vec_json(d->fact.vec)}};
  Json prems = Json::array();
  if (d->child_a) prems.push_back(derivation_node(sys, d->child_a));
  if (d->child_b) prems.push_back(derivation_node(sys, d->child_b));
  j["premises"] = std::move(prems);
  return j;
}

BvDerivPtr derivation_node_from(const BvassamSystem& sys, const Json& j) {
  auto kind_name = get<std::string>(j, "kind");
  BvDerivation::Kind kind;
  if (kind_name == "axiom")
    kind = BvDerivation::Kind::Axiom;
  else if (kind_name == "unary")
    kind = BvDerivation::Kind::Unary;
  else if (kind_name == "binary")
    kind = BvDerivation::Kind::Binary;
  else
    throw std::invalid_argument("unknown node kind: " + kind_name);
  const Json& fact = get<Json>(j, "fact");
  Fact f{state_index(sys, get<std::string>(fact, "state")),
         vec_from(get<Json>(fact, "vector"), "fact vector")};
  std::vector<BvDerivPtr> premises;
  for (const Json& e : get<Json>(j, "premises"))
    premises.push_back(derivation_node_from(sys, e));
  std::size_t expected =
      kind == BvDerivation::Kind::Axiom ? 0
      : kind == BvDerivation::Kind::Unary ? 1 : 2;
  if (premises.size() != expected)
    throw std::invalid_argument("wrong premise count for " + kind_name);
  return std::make_shared<BvDerivation>(BvDerivation{
      kind, get<std::size_t>(j, "rule"), std::move(f),
      expected >= 1 ? premises[0] : nullptr,
      expected >= 2 ? premises[1] : nullptr});
}

}  // namespace

std::string derivation_to_json(const BvassamSystem& sys, const BvDerivPtr& d) {
  if (!d) throw std::invalid_argument("missing derivation");
  return dump(derivation_node(sys, d));
}

BvDerivPtr derivation_from_json(const BvassamSystem& sys,
                                const std::string& text) {
  BvDerivPtr d = derivation_node_from(sys, parse_json(text));
  if (!check_derivation(sys, d))
    throw std::invalid_argument("derivation does not validate");
  return d;
}

std::string equiv_report_to_json(const std::string& instance,
                                 const std::string& direction,
                                 const EquivReport& rep) {
  Json j;
  j["instance"] = instance;
  j["direction"] = direction;
  j["agree"] = rep.agree;
  Json cs = Json::array();
  for (const auto& m : rep.mismatches)
    cs.push_back(Json{{"vector", vec_json(m.vector)},
                      {"in_system", m.in_system},
                      {"in_grammar", m.in_grammar}});
  j["counterexamples"] = std::move(cs);
  return dump(j);
}

std::string quadratic_report_to_json(const QuadraticCheck& rep) {
  Json j;
  j["agree"] = rep.agree;
  Json ds = Json::array();
  for (const auto& d : rep.disagreements)
    ds.push_back(Json{{"n", d.n},
                      {"l", d.l},
                      {"member", d.member},
                      {"expected", d.expected}});
  j["disagreements"] = std::move(ds);
  return dump(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw std::runtime_error("cannot read file: " + path);
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("cannot write file: " + path);
}

}  // namespace lpgram
