#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpgram/convert.hpp"
#include "lpgram/derive.hpp"
#include "lpgram/io.hpp"
#include "lpgram/parse.hpp"
#include "lpgram/prover.hpp"
#include "lpgram/quadratic.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace lpgram;

// Flags shared by the commands that run a search.
struct SearchFlags {
  bool json = false;
  bool witness = false;
  std::uint64_t max_nodes = 1'000'000;
};

void add_search_flags(CLI::App* cmd, SearchFlags& f, bool with_witness = true) {
  cmd->add_flag("--json", f.json, "emit machine-readable JSON");
  if (with_witness)
    cmd->add_flag("--witness", f.witness, "include the full proof tree");
  cmd->add_option("--max-nodes", f.max_nodes,
                  "search expansion budget, 0 for unlimited")
      ->capture_default_str();
}

ProveOptions prove_options(const SearchFlags& f) {
  return ProveOptions{f.max_nodes, true};
}

DeriveOptions derive_options(const SearchFlags& f) {
  return DeriveOptions{f.max_nodes};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

LpGrammar load_grammar(const std::string& path) {
  return grammar_from_json(read_file(path));
}

// Commands that search derivations need the linear bound, so a bare system
// file without "C" is rejected up front.
LBvassam load_bounded_system(const std::string& path) {
  SystemFile f = system_from_json(read_file(path));
  if (!f.linear_bound)
    throw std::invalid_argument(path + ": system file carries no \"C\" bound");
  LBvassam g{std::move(f.system), *f.linear_bound};
  validate(g);
  return g;
}

Word word_of(const std::vector<std::string>& symbols) {
  Word w;
  for (const auto& s : symbols) ++w[s];
  return w;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void print_proof(std::ostream& os, const ProofPtr& p, std::size_t depth = 0) {
  os << std::string(2 * depth, ' ') << rule_name(p->rule);
  if (p->principal) os << " [" << p->principal->text() << "]";
  os << ": " << p->conclusion.to_string() << "\n";
  for (const auto& q : p->premises) print_proof(os, q, depth + 1);
}

void print_derivation(std::ostream& os, const BvassamSystem& sys,
                      const BvDerivPtr& d, std::size_t depth = 0) {
  os << std::string(2 * depth, ' ');
  switch (d->kind) {
    case BvDerivation::Kind::Axiom: os << "axiom "; break;
    case BvDerivation::Kind::Unary: os << "unary "; break;
    case BvDerivation::Kind::Binary: os << "binary "; break;
  }
  os << d->rule_index << ": " << fact_to_string(sys, d->fact) << "\n";
  if (d->child_a) print_derivation(os, sys, d->child_a, depth + 1);
  if (d->child_b) print_derivation(os, sys, d->child_b, depth + 1);
}

Json word_json(const Word& w) {
  Json a = Json::array();
  for (const auto& [sym, n] : w)
    for (std::uint32_t i = 0; i < n; ++i) a.push_back(sym);
  return a;
}

std::string word_text(const Word& w) {
  std::string out;
  for (const auto& [sym, n] : w)
    for (std::uint32_t i = 0; i < n; ++i) {
      if (!out.empty()) out += ' ';
      out += sym;
    }
  return out;
}

int run_prove(const std::string& text, const SearchFlags& f) {
  Sequent s = parse_sequent(text);
  Prover prover(prove_options(f));
  ProofPtr proof = prover.prove(s);
  if (f.json) {
    Json j;
    j["provable"] = proof != nullptr;
    if (proof && f.witness) j["proof"] = Json::parse(proof_to_json(proof));
    std::cout << dump(j);
  } else if (proof) {
    std::cout << "provable\n";
    if (f.witness) print_proof(std::cout, proof);
  } else {
    std::cout << "not provable\n";
  }
  return proof ? 0 : 1;
}

int run_grammar_member(const std::string& path,
                       const std::vector<std::string>& symbols,
                       const SearchFlags& f) {
  LpGrammar g = load_grammar(path);
  Prover prover(prove_options(f));
  std::optional<MembershipWitness> w = member(g, word_of(symbols), prover);
  if (f.json) {
    Json j;
    j["member"] = w.has_value();
    if (w && f.witness) {
      Json types = Json::array();
      for (const auto& [t, n] : w->types.items())
        for (std::uint32_t i = 0; i < n; ++i) types.push_back(t->text());
      j["types"] = std::move(types);
      j["proof"] = Json::parse(proof_to_json(w->proof));
    }
    std::cout << dump(j);
  } else if (w) {
    std::cout << "member\n";
    if (f.witness) {
      std::cout << "types:";
      for (const auto& [t, n] : w->types.items())
        for (std::uint32_t i = 0; i < n; ++i) std::cout << " " << t->text();
      std::cout << "\n";
      print_proof(std::cout, w->proof);
    }
  } else {
    std::cout << "not a member\n";
  }
  return w ? 0 : 1;
}

int run_system_member(const std::string& path, const Vec& v,
                      const SearchFlags& f) {
  LBvassam g = load_bounded_system(path);
  BvDerivPtr d = member(g, v, derive_options(f));
  if (f.json) {
    Json j;
    j["member"] = d != nullptr;
    if (d && f.witness) {
      j["size"] = derivation_size(d);
      j["derivation"] = Json::parse(derivation_to_json(g.system, d));
    }
    std::cout << dump(j);
  } else if (d) {
    std::cout << "member\n";
    if (f.witness) {
      std::cout << "size " << derivation_size(d) << "\n";
      print_derivation(std::cout, g.system, d);
    }
  } else {
    std::cout << "not a member\n";
  }
  return d ? 0 : 1;
}

int run_convert(const std::string& mode, const std::string& in,
                const std::string& out) {
  std::string text;
  if (mode == "lp-to-sys") {
    LbamConstruction con = lbam_of(load_grammar(in));
    text = system_to_json(con.lbam.system, con.lbam.linear_bound);
  } else if (mode == "sys-to-lp") {
    text = grammar_to_json(lpg_of(load_bounded_system(in)));
  } else {
    text = grammar_to_json(lpg_division_only(load_bounded_system(in)));
  }
  emit(text, out);
  return 0;
}

int run_enumerate_grammar(const std::string& path, std::uint64_t max_len,
                          const SearchFlags& f) {
  LpGrammar g = load_grammar(path);
  Prover prover(prove_options(f));
  std::vector<Word> words = enumerate_language(g, max_len, prover);
  if (f.json) {
    Json j;
    Json a = Json::array();
    for (const Word& w : words) a.push_back(word_json(w));
    j["words"] = std::move(a);
    std::cout << dump(j);
  } else {
    for (const Word& w : words) std::cout << word_text(w) << "\n";
  }
  return 0;
}

int run_enumerate_system(const std::string& path, const Vec& cap,
                         const SearchFlags& f) {
  LBvassam g = load_bounded_system(path);
  std::vector<Vec> vs = enumerate_language(g, cap, derive_options(f));
  if (f.json) {
    Json j;
    Json a = Json::array();
    for (const Vec& v : vs) a.push_back(Json(v));
    j["vectors"] = std::move(a);
    std::cout << dump(j);
  } else {
    for (const Vec& v : vs) std::cout << vec_to_string(v) << "\n";
  }
  return 0;
}

int report_equiv(const std::string& instance, const std::string& direction,
                 const EquivReport& rep, bool json) {
  if (json) {
    std::cout << equiv_report_to_json(instance, direction, rep);
  } else if (rep.agree) {
    std::cout << "agree\n";
  } else {
    std::cout << "disagree\n";
    for (const auto& m : rep.mismatches)
      std::cout << "  " << vec_to_string(m.vector) << ": system "
                << (m.in_system ? "yes" : "no") << ", grammar "
                << (m.in_grammar ? "yes" : "no") << "\n";
  }
  return rep.agree ? 0 : 1;
}

int run_check_bvass_to_lp(const std::string& path, const Vec& cap,
                          const SearchFlags& f) {
  LBvassam g = load_bounded_system(path);
  EquivReport rep =
      check_theorem_bvass_to_lp(g, cap, derive_options(f), prove_options(f));
  return report_equiv(path, "system-to-grammar", rep, f.json);
}

int run_check_lp_to_bvass(const std::string& path, std::uint64_t max_len,
                          const SearchFlags& f) {
  LpGrammar g = load_grammar(path);
  EquivReport rep = check_theorem_lp_to_bvass(g, max_len, derive_options(f),
                                              prove_options(f));
  return report_equiv(path, "grammar-to-system", rep, f.json);
}

int run_check_quadratic(std::uint64_t n_max, std::uint64_t l_max,
                        const SearchFlags& f) {
  QuadraticCheck rep = check_quadratic_language(n_max, l_max, derive_options(f));
  if (f.json) {
    std::cout << quadratic_report_to_json(rep);
  } else if (rep.agree) {
    std::cout << "agree\n";
  } else {
    std::cout << "disagree\n";
    for (const auto& d : rep.disagreements)
      std::cout << "  n=" << d.n << " l=" << d.l << ": member "
                << (d.member ? "yes" : "no") << ", expected "
                << (d.expected ? "yes" : "no") << "\n";
  }
  return rep.agree ? 0 : 1;
}

int run_example(const std::string& out) {
  LBvassam g = quadratic_system();
  emit(system_to_json(g.system, g.linear_bound), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Derivability, membership and conversions for commutative Lambek "
      "grammars and branching counter systems"};
  app.require_subcommand(1);

  std::string sequent_text;
  SearchFlags prove_flags;
  auto* prove_cmd = app.add_subcommand("prove", "decide a sequent");
  prove_cmd->add_option("sequent", sequent_text, "e.g. \"p/q, q -> p\"")
      ->required();
  add_search_flags(prove_cmd, prove_flags);

  std::string gm_path;
  std::vector<std::string> gm_word;
  SearchFlags gm_flags;
  auto* gm_cmd =
      app.add_subcommand("grammar-member", "test a word against a grammar");
  gm_cmd->add_option("grammar", gm_path, "grammar JSON file")->required();
  gm_cmd->add_option("--word", gm_word, "comma-separated symbols")
      ->required()
      ->delimiter(',');
  add_search_flags(gm_cmd, gm_flags);

  std::string sm_path;
  Vec sm_vec;
  SearchFlags sm_flags;
  auto* sm_cmd =
      app.add_subcommand("system-member", "test a vector against a system");
  sm_cmd->add_option("system", sm_path, "system JSON file")->required();
  sm_cmd->add_option("--vector", sm_vec, "comma-separated coordinates")
      ->required()
      ->delimiter(',');
  add_search_flags(sm_cmd, sm_flags);

  std::string cv_mode, cv_in, cv_out;
  auto* cv_cmd =
      app.add_subcommand("convert", "translate between the two formalisms");
  cv_cmd->add_option("mode", cv_mode, "conversion direction")
      ->required()
      ->check(CLI::IsMember(
          {"lp-to-sys", "sys-to-lp", "sys-to-lp-division-only"}));
  cv_cmd->add_option("input", cv_in, "input JSON file")->required();
  cv_cmd->add_option("-o,--output", cv_out, "write here instead of stdout");

  auto* en_cmd = app.add_subcommand("enumerate", "list language members");
  en_cmd->require_subcommand(1);
  std::string eg_path;
  std::uint64_t eg_max_len = 0;
  SearchFlags eg_flags;
  auto* eg_cmd = en_cmd->add_subcommand("grammar", "words up to a length");
  eg_cmd->add_option("grammar", eg_path, "grammar JSON file")->required();
  eg_cmd->add_option("--max-len", eg_max_len, "maximum word length")
      ->required();
  add_search_flags(eg_cmd, eg_flags, false);
  std::string es_path;
  Vec es_cap;
  SearchFlags es_flags;
  auto* es_cmd = en_cmd->add_subcommand("system", "vectors below a cap");
  es_cmd->add_option("system", es_path, "system JSON file")->required();
  es_cmd->add_option("--cap", es_cap, "componentwise bound")
      ->required()
      ->delimiter(',');
  add_search_flags(es_cmd, es_flags, false);

  auto* ck_cmd =
      app.add_subcommand("check", "compare languages on a bounded range");
  ck_cmd->require_subcommand(1);
  std::string cb_path;
  Vec cb_cap;
  SearchFlags cb_flags;
  auto* cb_cmd = ck_cmd->add_subcommand(
      "bvass-to-lp", "system language against its grammar encoding");
  cb_cmd->add_option("system", cb_path, "system JSON file")->required();
  cb_cmd->add_option("--cap", cb_cap, "componentwise bound")
      ->required()
      ->delimiter(',');
  add_search_flags(cb_cmd, cb_flags, false);
  std::string cl_path;
  std::uint64_t cl_max_len = 0;
  SearchFlags cl_flags;
  auto* cl_cmd = ck_cmd->add_subcommand(
      "lp-to-bvass", "grammar language against its system encoding");
  cl_cmd->add_option("grammar", cl_path, "grammar JSON file")->required();
  cl_cmd->add_option("--max-len", cl_max_len, "maximum word length")
      ->required();
  add_search_flags(cl_cmd, cl_flags, false);
  std::uint64_t cq_n_max = 0, cq_l_max = 0;
  SearchFlags cq_flags;
  auto* cq_cmd = ck_cmd->add_subcommand(
      "quadratic", "bundled fixture against its closed form");
  cq_cmd->add_option("--n-max", cq_n_max, "largest n")->required();
  cq_cmd->add_option("--l-max", cq_l_max, "largest l")->required();
  add_search_flags(cq_cmd, cq_flags, false);

  std::string ex_name, ex_out;
  auto* ex_cmd = app.add_subcommand("example", "write a bundled fixture");
  ex_cmd->add_option("name", ex_name, "fixture name")
      ->required()
      ->check(CLI::IsMember({"quadratic"}));
  ex_cmd->add_option("-o,--output", ex_out, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (prove_cmd->parsed()) return run_prove(sequent_text, prove_flags);
    if (gm_cmd->parsed()) return run_grammar_member(gm_path, gm_word, gm_flags);
    if (sm_cmd->parsed()) return run_system_member(sm_path, sm_vec, sm_flags);
    if (cv_cmd->parsed()) return run_convert(cv_mode, cv_in, cv_out);
    if (eg_cmd->parsed())
      return run_enumerate_grammar(eg_path, eg_max_len, eg_flags);
    if (es_cmd->parsed()) return run_enumerate_system(es_path, es_cap, es_flags);
    if (cb_cmd->parsed()) return run_check_bvass_to_lp(cb_path, cb_cap, cb_flags);
    if (cl_cmd->parsed())
      return run_check_lp_to_bvass(cl_path, cl_max_len, cl_flags);
    if (cq_cmd->parsed()) return run_check_quadratic(cq_n_max, cq_l_max, cq_flags);
    if (ex_cmd->parsed()) return run_example(ex_out);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
