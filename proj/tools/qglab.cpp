#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "qglab/cfl.hpp"
#include "qglab/distortion.hpp"
#include "qglab/metric.hpp"
#include "qglab/quasigeodesic.hpp"
#include "qglab/refuter.hpp"
#include "qglab/word_families.hpp"

using namespace qgl;

namespace {

constexpr int kOk = 0, kError = 1, kNegative = 2, kInconclusive = 3, kUsage = 64;

struct ModelSpec {
  std::string name = "z2";
  std::int64_t m = 2, n = 3;
  std::size_t rank = 2;
};

void add_model_options(CLI::App* cmd, ModelSpec& s) {
  cmd->add_option("--model", s.name, "z2, zr, heisenberg or bs")->check(CLI::IsMember({"z2", "zr", "heisenberg", "bs"}));
  cmd->add_option("--m", s.m, "BS parameter m");
  cmd->add_option("--n", s.n, "BS parameter n");
  cmd->add_option("--rank", s.rank, "rank for zr")->check(CLI::PositiveNumber);
}

template <class F>
int with_model(const ModelSpec& s, F&& f) {
  if (s.name == "z2" || s.name == "zr") {
    const auto model = AbelianModel::standard(s.name == "z2" ? 2 : s.rank);
    return f(model);
  }
  if (s.name == "heisenberg") {
    const auto model = HeisenbergModel::standard();
    return f(model);
  }
  const BSModel model(BSParams{s.m, s.n});
  return f(model);
}

const GeneratorAlphabet& model_alphabet(const ModelSpec& s) {
  static GeneratorAlphabet holder;
  if (s.name == "bs") return bs_alphabet();
  holder = s.name == "zr" ? AbelianModel::standard(s.rank).alphabet() : AbelianModel::standard(2).alphabet();
  return holder;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidParameter("cannot write '" + path + "'");
  out << text;
}

struct WordInput {
  std::string text, file;
  Word get(const GeneratorAlphabet& a) const {
    if (!file.empty()) return parse_word(read_file(file), a);
    return parse_word(text, a);
  }
};

void add_word_options(CLI::App* cmd, WordInput& w, bool required = false) {
  auto* g = cmd->add_option_group("word");
  g->add_option("--word", w.text, "word such as \"a^2 b^-1\"");
  g->add_option("--word-file", w.file, "file holding the word");
  if (required) g->require_option(1);
  else g->require_option(0, 1);
}

Grammar load_grammar(const std::string& source, const GeneratorAlphabet& a) {
  if (source == "sigma-star") return sigma_star_grammar(a);
  return parse_grammar(read_file(source), a);
}

std::set<std::size_t> parse_marks(const std::string& text, std::size_t length) {
  std::set<std::size_t> marks;
  if (text.empty() || text == "all") {
    for (std::size_t i = 0; i < length; ++i) marks.insert(i);
    return marks;
  }
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    const auto dash = part.find('-');
    try {
      if (dash == std::string::npos) {
        marks.insert(std::stoul(part));
      } else {
        const auto lo = std::stoul(part.substr(0, dash)), hi = std::stoul(part.substr(dash + 1));
        for (auto i = lo; i <= hi; ++i) marks.insert(i);
      }
    } catch (const std::logic_error&) {
      throw InvalidParameter("bad mark range '" + part + "'");
    }
  }
  return marks;
}

// dist -----------------------------------------------------------------

struct DistArgs {
  ModelSpec model;
  WordInput word;
  int cap = 64;
  int ball = -1;
  std::size_t budget = kDefaultNodeBudget;
  std::string out;
};

int run_dist(const DistArgs& a) {
  return with_model(a.model, [&](const auto& model) {
    using M = std::decay_t<decltype(model)>;
    if (a.ball >= 0) {
      emit(a.out, export_ball(model, bfs_ball(model, a.ball, a.budget)));
      return kOk;
    }
    const auto g = model.evaluate(a.word.get(model.alphabet()));
    typename DistanceOracle<M>::Options opts;
    opts.forward_budget = a.budget;
    DistanceOracle<M> oracle(model, opts);
    std::ostringstream out;
    out << "element=" << model.describe(model.key(g)) << "\n";
    DistanceBound d;
    try {
      d = oracle.distance(g, a.cap);
    } catch (const BudgetExceeded& e) {
      std::cerr << e.what() << "\n";
      d = oracle.ball_bound(g);
    }
    if constexpr (std::is_same_v<M, BSModel>) {
      auto lb = bs_lower_bound(g);
      if (!d.is_exact() && lb.value > d.value) d = lb;
    }
    out << "distance=" << to_string(d.value) << "\n";
    out << "kind=" << to_string(d.kind) << "\n";
    out << "provenance=" << to_string(d.provenance) << "\n";
    emit(a.out, out.str());
    return d.is_exact() ? kOk : kInconclusive;
  });
}

// qg-check -------------------------------------------------------------

struct CheckArgs {
  ModelSpec model;
  WordInput word;
  std::string lambda = "1", eps = "0";
  bool min_lambda = false;
  std::size_t budget = kDefaultNodeBudget;
  std::string out;
};

int run_check(const CheckArgs& a) {
  const Rational lambda = parse_rational(a.lambda), eps = parse_rational(a.eps);
  return with_model(a.model, [&](const auto& model) {
    using M = std::decay_t<decltype(model)>;
    const Word w = a.word.get(model.alphabet());
    typename DistanceOracle<M>::Options opts;
    opts.forward_budget = a.budget;
    DistanceOracle<M> oracle(model, opts);
    QGReport r = check(w, lambda, eps, model, oracle);
    if (a.min_lambda) {
      auto ml = min_lambda(w, eps, model, oracle, MinLambdaMode::Cascade);
      r.min_lambda_infinite = ml.infinite;
      if (!ml.infinite) r.min_lambda = ml.value;
      if (!ml.exact) std::cerr << "min_lambda is an upper bound (" << ml.unresolved << " subwords unresolved)\n";
    }
    emit(a.out, r.serialize());
    std::cerr << to_string(r.verdict) << "\n";
    if (r.verdict == Verdict::Violated) return kNegative;
    return r.verdict == Verdict::Certified ? kOk : kInconclusive;
  });
}

// family ---------------------------------------------------------------

struct FamilyArgsCli {
  std::string name;
  FamilyArgs args;
  std::int64_t m = 2, n = 3;
  bool eval = false;
  std::string out;
};

int run_family(FamilyArgsCli a) {
  a.args.bs = BSParams{a.m, a.n};
  const auto w = make_family(a.name, a.args);
  const auto group = family_group(a.name);
  const auto& alphabet = group == "bs" ? bs_alphabet() : AbelianModel::standard(2).alphabet();
  std::ostringstream out;
  out << serialize(w.expand(), alphabet) << "\n";
  if (a.eval) {
    out << "length=" << w.length() << "\n";
    if (group == "bs") {
      out << "value=" << BSModel(a.args.bs).describe(serialize(bs_normalize(w, a.args.bs))) << "\n";
    } else if (group == "heisenberg") {
      const auto h = HeisenbergModel::standard();
      out << "value=" << h.describe(h.key(h.evaluate(w.expand()))) << "\n";
    } else {
      const auto z = AbelianModel::standard(2);
      out << "value=" << z.describe(z.key(z.evaluate(w.expand()))) << "\n";
    }
  }
  emit(a.out, out.str());
  return kOk;
}

}  // namespace

namespace {

// grammar --------------------------------------------------------------

struct GrammarArgs {
  ModelSpec model;
  std::string grammar = "sigma-star";
  WordInput word;
  bool cnf = false;
  std::string out;
};

int run_grammar(const GrammarArgs& a) {
  const auto& alphabet = model_alphabet(a.model);
  const Grammar g = load_grammar(a.grammar, alphabet);
  const Grammar c = to_cnf(g);
  std::ostringstream out;
  out << "digest=" << grammar_digest(g) << "\n";
  out << "nonterminals=" << c.nonterminals().size() << "\n";
  out << "ogden_constant=" << ogden_constant(c) << "\n";
  if (language_empty(c)) std::cerr << "warning: the language is empty\n";
  if (a.cnf) out << c.to_text();
  int code = kOk;
  if (!a.word.text.empty() || !a.word.file.empty()) {
    const auto tree = cyk(c, a.word.get(alphabet));
    out << "member=" << (tree ? "true" : "false") << "\n";
    if (tree) out << "parse_fingerprint=" << tree->fingerprint() << "\n";
    if (!tree) code = kNegative;
  }
  emit(a.out, out.str());
  return code;
}

// pump -----------------------------------------------------------------

struct PumpArgs {
  ModelSpec model;
  std::string grammar = "sigma-star";
  WordInput word;
  std::string marks = "all";
  std::string out;
};

int run_pump(const PumpArgs& a) {
  const auto& alphabet = model_alphabet(a.model);
  const Grammar c = to_cnf(load_grammar(a.grammar, alphabet));
  const Word w = a.word.get(alphabet);
  const auto marks = parse_marks(a.marks, w.size());
  const auto d = ogden_decompose(c, w, marks);
  std::ostringstream out;
  out << "p=" << d.p << "\n";
  out << "u=" << serialize(d.u, alphabet) << "\n";
  out << "x=" << serialize(d.x, alphabet) << "\n";
  out << "z=" << serialize(d.z, alphabet) << "\n";
  out << "y=" << serialize(d.y, alphabet) << "\n";
  out << "v=" << serialize(d.v, alphabet) << "\n";
  out << "verified=" << (d.verify(c, w, marks) ? "true" : "false") << "\n";
  emit(a.out, out.str());
  return kOk;
}

// refute / verify ------------------------------------------------------

struct RefuteArgs {
  ModelSpec model;
  std::string grammar = "sigma-star";
  std::string lambda = "1", eps = "0";
  std::string lambda0, eps0 = "0";
  std::uint64_t seed = RefuteOptions{}.seed;
  std::size_t samples = RefuteOptions{}.random_samples;
  std::string out;
};

int run_refute(const RefuteArgs& a) {
  const auto& alphabet = model_alphabet(a.model);
  const Grammar g = load_grammar(a.grammar, alphabet);
  RefuteOptions opts;
  if (!a.lambda0.empty()) opts.lambda0 = parse_rational(a.lambda0);
  opts.epsilon0 = parse_rational(a.eps0);
  opts.seed = a.seed;
  opts.random_samples = a.samples;
  const Rational lambda = parse_rational(a.lambda), eps = parse_rational(a.eps);
  try {
    WitnessCertificate c;
    if (a.model.name == "z2")
      c = refute_z2(g, lambda, eps, opts);
    else if (a.model.name == "bs")
      c = refute_bs(g, lambda, eps, a.model.m, a.model.n, opts);
    else
      throw UnsupportedParameters("refute supports --model z2 or bs");
    emit(a.out, c.serialize());
    std::cerr << "witness of length " << c.witness.size() << " violates (" << to_string(lambda) << ","
              << to_string(eps) << ")\n";
  } catch (const SamplingRefutedPremise& e) {
    emit(a.out, std::string("premise_refuted=") + e.word + "\n");
    std::cerr << e.what() << "\n";
  }
  return kNegative;
}

struct VerifyArgs {
  std::string cert;
};

int run_verify(const VerifyArgs& a) {
  const auto r = verify_certificate(WitnessCertificate::parse(read_file(a.cert)));
  std::cout << "valid=" << (r.ok ? "true" : "false") << "\nreason=" << r.reason << "\n";
  return r.ok ? kOk : kNegative;
}

// distortion -----------------------------------------------------------

struct DistortionArgs {
  std::string mode = "center";
  std::int64_t k_max = 120;
  int n_max = 16;
  std::int64_t n = 3;
  std::size_t budget = kDefaultNodeBudget;
  std::string csv;
};

int run_distortion(const DistortionArgs& a) {
  if (a.mode == "center") {
    const auto pts = center_power_distance(a.k_max, a.budget);
    std::ostringstream csv;
    csv << "k,distance\n";
    for (const auto& [k, d] : pts) csv << k << "," << d << "\n";
    emit(a.csv, csv.str());
    const auto fit = fit_exponent(pts);
    std::cerr << "exponent=" << fit.exponent << " ci=[" << fit.ci_low() << "," << fit.ci_high() << "]\n";
    return kOk;
  }
  if (a.mode == "profile") {
    const auto model = HeisenbergModel::standard();
    const Word center = parse_word("a^-1 b^-1 a b", model.alphabet());
    const auto prof = distortion_profile(model, {center}, a.n_max, a.budget);
    emit(a.csv, prof.to_csv());
    std::cerr << prof.summary();
    return kOk;
  }
  if (a.mode == "commutator") {
    for (std::int64_t i = 1; i <= a.n; ++i) std::cout << "n=" << i << " ratio=" << to_string(commutator_ratio(i)) << "\n";
    return kOk;
  }
  throw InvalidParameter("unknown distortion mode '" + a.mode + "'");
}

// trace ----------------------------------------------------------------

struct TraceArgs {
  ModelSpec model;
  WordInput word;
  std::string family;
  FamilyArgs args;
  std::string out;
};

int run_trace(TraceArgs a) {
  Word w;
  const GeneratorAlphabet* alphabet = &model_alphabet(a.model);
  if (!a.family.empty()) {
    a.args.bs = BSParams{a.model.m, a.model.n};
    w = make_family(a.family, a.args).expand();
    alphabet = family_group(a.family) == "bs" ? &bs_alphabet() : &model_alphabet(ModelSpec{});
  } else {
    w = a.word.get(*alphabet);
  }
  emit(a.out, trace_dot(w, *alphabet, standard_projection(*alphabet)));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasigeodesic language laboratory"};
  app.require_subcommand(1);
  std::function<int()> action;

  DistArgs dist;
  auto* c_dist = app.add_subcommand("dist", "word-metric distance of a word's element");
  add_model_options(c_dist, dist.model);
  add_word_options(c_dist, dist.word);
  c_dist->add_option("--cap", dist.cap, "largest distance searched")->check(CLI::NonNegativeNumber);
  c_dist->add_option("--ball", dist.ball, "export the ball of this radius instead");
  c_dist->add_option("--budget", dist.budget, "node budget")->check(CLI::PositiveNumber);
  c_dist->add_option("--out", dist.out, "output file");
  c_dist->callback([&] { action = [&] { return run_dist(dist); }; });

  CheckArgs chk;
  auto* c_chk = app.add_subcommand("qg-check", "decide (lambda,eps)-quasigeodesicity");
  add_model_options(c_chk, chk.model);
  add_word_options(c_chk, chk.word, true);
  c_chk->add_option("--lambda", chk.lambda, "rational p/q");
  c_chk->add_option("--eps", chk.eps, "rational p/q");
  c_chk->add_flag("--min-lambda", chk.min_lambda, "also report min_lambda for eps");
  c_chk->add_option("--budget", chk.budget, "node budget")->check(CLI::PositiveNumber);
  c_chk->add_option("--out", chk.out, "output file");
  c_chk->callback([&] { action = [&] { return run_check(chk); }; });

  FamilyArgsCli fam;
  auto* c_fam = app.add_subcommand("family", "print a word family member");
  c_fam->add_option("name", fam.name)->required()->check(CLI::IsMember(family_names()));
  c_fam->add_option("--q", fam.args.q, "index (n for nil-spiral, p for commutator)");
  c_fam->add_option("--q2", fam.args.q2, "second commutator exponent");
  c_fam->add_option("--m", fam.m, "BS parameter m");
  c_fam->add_option("--n", fam.n, "BS parameter n");
  c_fam->add_flag("--eval", fam.eval, "also print length and value");
  c_fam->add_option("--out", fam.out, "output file");
  c_fam->callback([&] { action = [&] { return run_family(fam); }; });

  GrammarArgs gram;
  auto* c_gram = app.add_subcommand("grammar", "inspect a grammar and test membership");
  add_model_options(c_gram, gram.model);
  add_word_options(c_gram, gram.word, true);
  c_gram->add_option("--grammar", gram.grammar, "grammar file or sigma-star");
  c_gram->add_flag("--cnf", gram.cnf, "print the CNF grammar");
  c_gram->add_option("--out", gram.out, "output file");
  c_gram->callback([&] { action = [&] { return run_grammar(gram); }; });

  PumpArgs pmp;
  auto* c_pmp = app.add_subcommand("pump", "Ogden decomposition of a member word");
  add_model_options(c_pmp, pmp.model);
  add_word_options(c_pmp, pmp.word, true);
  c_pmp->add_option("--grammar", pmp.grammar, "grammar file or sigma-star");
  c_pmp->add_option("--marks", pmp.marks, "positions such as 0-4,9 or all");
  c_pmp->add_option("--out", pmp.out, "output file");
  c_pmp->callback([&] { action = [&] { return run_pump(pmp); }; });

  RefuteArgs ref;
  auto* c_ref = app.add_subcommand("refute", "pump a grammar into a non-quasigeodesic witness");
  add_model_options(c_ref, ref.model);
  c_ref->add_option("--grammar", ref.grammar, "grammar file or sigma-star");
  c_ref->add_option("--lambda", ref.lambda, "rational p/q");
  c_ref->add_option("--eps", ref.eps, "rational p/q");
  c_ref->add_option("--lambda0", ref.lambda0, "premise lambda");
  c_ref->add_option("--eps0", ref.eps0, "premise epsilon");
  c_ref->add_option("--seed", ref.seed, "sampling seed");
  c_ref->add_option("--samples", ref.samples, "random premise samples");
  c_ref->add_option("--out", ref.out, "certificate file");
  c_ref->callback([&] { action = [&] { return run_refute(ref); }; });

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "replay a certificate");
  c_ver->add_option("--cert", ver.cert, "certificate file")->required();
  c_ver->callback([&] { action = [&] { return run_verify(ver); }; });

  DistortionArgs dis;
  auto* c_dis = app.add_subcommand("distortion", "Heisenberg distortion measurements");
  c_dis->add_option("--mode", dis.mode, "center, profile or commutator")
      ->check(CLI::IsMember({"center", "profile", "commutator"}));
  c_dis->add_option("--kmax", dis.k_max, "largest central power")->check(CLI::PositiveNumber);
  c_dis->add_option("--nmax", dis.n_max, "largest radius")->check(CLI::NonNegativeNumber);
  c_dis->add_option("--n", dis.n, "largest commutator index")->check(CLI::PositiveNumber);
  c_dis->add_option("--budget", dis.budget, "node budget")->check(CLI::PositiveNumber);
  c_dis->add_option("--csv", dis.csv, "CSV output file");
  c_dis->callback([&] { action = [&] { return run_distortion(dis); }; });

  TraceArgs tr;
  auto* c_tr = app.add_subcommand("trace", "DOT path of a word projected to the plane");
  add_model_options(c_tr, tr.model);
  add_word_options(c_tr, tr.word);
  c_tr->add_option("--family", tr.family, "family name instead of a word")->check(CLI::IsMember(family_names()));
  c_tr->add_option("--q", tr.args.q, "family index");
  c_tr->add_option("--q2", tr.args.q2, "second commutator exponent");
  c_tr->add_option("--out", tr.out, "DOT file");
  c_tr->callback([&] { action = [&] { return run_trace(tr); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
