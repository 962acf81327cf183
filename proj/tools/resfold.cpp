#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "resfold/backward.hpp"
#include "resfold/determinantal.hpp"
#include "resfold/forward.hpp"
#include "resfold/io.hpp"

using namespace resfold;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kHypothesis = 2, kVerification = 3, kIo = 4 };

struct Options {
  std::string field = "q";
  std::uint64_t seed = 0;
  int budget = -1;
  std::string out = "-";
  std::string input = "-";
  // gen
  std::string kind;
  int n = 3, p = 1, q = 3;
  // a2b / b2a / roundtrip
  std::string c_choice = "auto";
  std::string h_choice = "auto";
  std::string level = "acyclic";
};

std::ostream& report_stream(const Options& o) { return o.out == "-" ? std::cerr : std::cout; }

Json grade_json(const GradeReport& g) {
  Json j = Json::object();
  if (g.value == kInfiniteGrade)
    j["value"] = "inf";
  else
    j["value"] = g.value;
  j["exact"] = g.exact;
  j["generators"] = g.generators_used;
  return j;
}

Json acyclicity_json(const AcyclicityVerdict& v) {
  Json j = Json::object();
  j["acyclic"] = v.acyclic;
  j["rank_ok"] = v.rank_ok;
  j["undetermined"] = v.undetermined;
  Json e = Json::array();
  for (const auto& a : v.entries) {
    Json x = Json::object();
    x["i"] = a.i;
    x["expected_rank"] = a.expected_rank;
    x["rank"] = a.rank;
    x["required_grade"] = a.required_grade;
    x["grade"] = grade_json(a.grade);
    x["ok"] = a.ok;
    e.push_back(x);
  }
  j["entries"] = e;
  return j;
}

Json complex_json(const ComplexReport& r) {
  Json j = Json::object();
  j["ok"] = r.ok;
  if (!r.shapes_ok) j["shape_error"] = r.shape_error;
  Json c = Json::array();
  for (const auto& k : r.checks) {
    Json x = Json::object();
    x["i"] = k.i;
    x["zero"] = k.zero;
    if (k.entry) x["entry"] = {k.entry->first, k.entry->second};
    c.push_back(x);
  }
  j["compositions"] = c;
  return j;
}

void finish(const Options& o, Document doc, const Json& report) {
  doc.report = report.dump();
  write_text_file(o.out, write_document(doc));
  report_stream(o) << report.dump(2) << "\n";
}

const FreeComplex& need_complex(const Document& d, int length) {
  if (!d.complex) throw IoError("complex", "missing");
  if (d.complex->length() != length)
    throw IoError("complex.differentials", "expected a complex of length " + std::to_string(length));
  return *d.complex;
}

SelfDualExample need_selfdual(const Document& d) {
  const FreeComplex& b = need_complex(d, 4);
  if (!d.selfdual) throw IoError("selfdual", "missing");
  if (!d.frame) throw IoError("frame", "missing");
  return {b, *d.selfdual, *d.frame};
}

Document from_example(const SelfDualExample& e) {
  Document d;
  d.ring = e.complex.ring;
  d.complex = e.complex;
  d.selfdual = e.structure;
  d.frame = e.frame;
  return d;
}

RingPtr standard_ring(std::vector<std::string> names, Field f) {
  std::vector<std::vector<int>> deg(names.size(), std::vector<int>{1});
  return make_ring(std::move(names), f, deg);
}

int run_gen(const Options& o) {
  Field f = Field::parse(o.field == "q" ? "QQ" : o.field);
  Document doc;
  Json rep = Json::object();
  rep["command"] = "gen";
  rep["kind"] = o.kind;
  if (o.kind == "gn") {
    if (o.n < 2) throw Error("gn needs --n >= 2");
    doc = from_example(gn_complex(o.n, f));
  } else if (o.kind == "split-a") {
    auto r = make_ring({"x"}, f);
    doc.ring = r;
    doc.complex = split_A(r, o.p, o.q);
    doc.multiplication = split_multiplication(r, o.p, o.q, zero_bmap(r, o.p, o.q));
  } else if (o.kind == "split-b") {
    doc = from_example(split_B(make_ring({"x"}, f), o.p, o.q));
  } else if (o.kind == "square") {
    auto r = standard_ring({"x", "y", "z"}, f);
    std::vector<Poly> gens;
    for (const char* s : {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}) gens.push_back(Poly::parse(r, s));
    doc.ring = r;
    doc.complex = resolve_ideal(r, gens);
  } else if (o.kind == "two-by-four") {
    auto r = standard_ring({"a", "b", "c", "d", "e", "f", "g", "h"}, f);
    auto x = PolyMatrix::parse(r, {{"a", "b", "c", "d"}, {"e", "f", "g", "h"}});
    doc.ring = r;
    doc.complex = resolve_ideal(r, minors_ideal(x, 2));
  } else {
    throw IoError("kind", "unknown generator '" + o.kind + "' (gn, split-a, split-b, square, two-by-four)");
  }
  rep["format"] = doc.complex->format();
  finish(o, doc, rep);
  return kOk;
}

int run_mult(const Options& o) {
  Document doc = read_document_file(o.input);
  const FreeComplex& a = need_complex(doc, 3);
  Json rep = Json::object();
  rep["command"] = "mult";
  try {
    doc.multiplication = build_multiplication(a);
  } catch (const LiftFailed& e) {
    rep["error"] = e.what();
    report_stream(o) << rep.dump(2) << "\n";
    return kVerification;
  }
  rep["verified"] = verify_multiplication(a, *doc.multiplication).ok;
  finish(o, doc, rep);
  return kOk;
}

struct ForwardRun {
  int code = kOk;
  std::optional<ForwardVerdict> verdict;
  std::optional<SplittingChoice> choice;
  Json report = Json::object();
};

ForwardRun forward(const Options& o, const FreeComplex& a, const MultiplicationStructure& m, const std::string& c) {
  ForwardRun run;
  if (c == "auto") {
    int budget = o.budget < 0 ? 25 : o.budget;
    auto s = search_C(a, m, budget, o.seed);
    run.report["search_C"] = {{"budget", budget}, {"seed", o.seed}, {"found", s.has_value()}};
    if (!s) {
      run.code = kHypothesis;
      return run;
    }
    run.report["search_C"]["trial"] = s->trial;
    run.choice = s->choice;
  } else {
    Document cd = read_document_file(c);
    if (!cd.basis_change) throw IoError(c + ": basis_change", "missing");
    run.choice = SplittingChoice{cd.basis_change->embed(a.ring, [&] {
      std::vector<int> id(a.ring->nvars());
      for (int i = 0; i < a.ring->nvars(); ++i) id[i] = i;
      return id;
    }())};
  }
  run.verdict = theorem_AB(a, m, *run.choice);
  const auto& v = *run.verdict;
  run.report["grade_J"] = grade_json(v.grade_j);
  run.report["hypothesis"] = v.hypothesis;
  run.report["complex_ok"] = v.complex_ok;
  run.report["selfdual_ok"] = v.selfdual_ok;
  if (v.acyclicity) run.report["acyclicity"] = acyclicity_json(*v.acyclicity);
  run.report["format"] = v.b.complex.format();
  if (!v.complex_ok || !v.selfdual_ok)
    run.code = kVerification;
  else if (!v.hypothesis)
    run.code = kHypothesis;
  else if (!v.acyclic())
    run.code = kVerification;
  return run;
}

int run_a2b(const Options& o) {
  Document doc = read_document_file(o.input);
  const FreeComplex& a = need_complex(doc, 3);
  MultiplicationStructure m = doc.multiplication ? *doc.multiplication : build_multiplication(a);
  ForwardRun run = forward(o, a, m, o.c_choice);
  Json head{{"command", "a2b"}};
  head.update(run.report);
  run.report = head;
  if (!run.verdict) {
    report_stream(o) << run.report.dump(2) << "\n";
    return run.code;
  }
  Document out = from_example(run.verdict->b);
  out.basis_change = run.choice->basis_change;
  finish(o, out, run.report);
  return run.code;
}

struct BackwardRun {
  int code = kOk;
  std::optional<BackwardResult> result;
  Json report = Json::object();
};

BackwardRun backward(const Options& o, const SelfDualExample& b, const std::string& h) {
  BackwardRun run;
  HyperbolicFrame frame = b.frame;
  if (h == "paper") {
    frame = gn_paper_H(b);
  } else if (h == "auto") {
    int budget = o.budget < 0 ? 100 : o.budget;
    auto s = search_H(b.complex, b.frame, budget, o.seed);
    run.report["search_H"] = {{"budget", budget}, {"seed", o.seed}, {"found", s.has_value()}};
    if (!s) {
      run.code = kHypothesis;
      return run;
    }
    run.report["search_H"]["trial"] = s->trial;
    run.report["search_H"]["grade"] = grade_json(s->grade);
    frame = s->frame;
  } else if (h != "given") {
    Document fd = read_document_file(h);
    if (!fd.frame) throw IoError(h + ": frame", "missing");
    frame = *fd.frame;
  }
  try {
    run.result = theorem_BA(b.complex, frame);
  } catch (const WrongComponent& e) {
    run.report["error"] = e.what();
    run.code = kHypothesis;
    return run;
  } catch (const NoLift& e) {
    run.report["error"] = e.what();
    run.code = kVerification;
    return run;
  }
  const FreeComplex& a = run.result->a;
  auto cr = check_complex(a);
  run.report["complex"] = complex_json(cr);
  auto v = certify_grade_I(a);
  run.report["grade_I"] = grade_json(v.direct);
  if (v.via_d2) run.report["grade_I_n-1_d2"] = grade_json(*v.via_d2);
  run.report["hypothesis"] = v.hypothesis;
  if (v.acyclicity) run.report["acyclicity"] = acyclicity_json(*v.acyclicity);
  run.report["format"] = a.format();
  if (!cr.ok)
    run.code = kVerification;
  else if (!v.hypothesis)
    run.code = kHypothesis;
  else if (!v.acyclic())
    run.code = kVerification;
  return run;
}

int run_b2a(const Options& o) {
  Document doc = read_document_file(o.input);
  SelfDualExample b = need_selfdual(doc);
  BackwardRun run = backward(o, b, o.h_choice);
  Json head{{"command", "b2a"}};
  head.update(run.report);
  run.report = head;
  if (!run.result) {
    report_stream(o) << run.report.dump(2) << "\n";
    return run.code;
  }
  Document out;
  out.ring = doc.ring;
  out.complex = run.result->a;
  out.frame = run.result->frame;
  out.spinor = run.result->lambda;
  out.w = run.result->w;
  finish(o, out, run.report);
  return run.code;
}

int run_verify(const Options& o) {
  Document doc = read_document_file(o.input);
  if (!doc.complex) throw IoError("complex", "missing");
  const FreeComplex& f = *doc.complex;
  static const std::vector<std::string> levels = {"complex", "selfdual", "grade2", "acyclic"};
  auto lv = std::find(levels.begin(), levels.end(), o.level);
  if (lv == levels.end()) throw IoError("level", "unknown level '" + o.level + "'");
  int level = static_cast<int>(lv - levels.begin());
  Json rep = Json::object();
  rep["command"] = "verify";
  rep["level"] = o.level;
  bool ok = true;
  auto cr = check_complex(f);
  rep["complex"] = complex_json(cr);
  ok = ok && cr.ok;
  if (level == 1 && !doc.selfdual) throw IoError("selfdual", "missing");
  if (level >= 1 && doc.selfdual) {
    auto s = check_selfdual(f, *doc.selfdual);
    rep["selfdual"] = {{"ok", s.ok}, {"reason", s.reason}};
    ok = ok && s.ok;
  }
  if (ok && level == 2) {
    auto v = acyclic_in_grade(f, 2);
    rep["grade2"] = acyclicity_json(v);
    ok = v.acyclic;
  }
  if (ok && level == 3) {
    GradeOptions opt;
    opt.seed = o.seed + 1;
    auto v = be_acyclicity(f, opt);
    rep["acyclicity"] = acyclicity_json(v);
    ok = v.acyclic;
  }
  rep["ok"] = ok;
  std::cout << rep.dump(2) << "\n";
  return ok ? kOk : kVerification;
}

int run_roundtrip(const Options& o) {
  Document doc = read_document_file(o.input);
  if (!doc.complex) throw IoError("complex", "missing");
  Json rep = Json::object();
  rep["command"] = "roundtrip";
  FreeComplex start = *doc.complex, end;
  if (start.length() == 4) {
    auto bw = backward(o, need_selfdual(doc), o.h_choice);
    rep["b2a"] = bw.report;
    if (!bw.result || bw.code != kOk) {
      report_stream(o) << rep.dump(2) << "\n";
      return bw.code == kOk ? kVerification : bw.code;
    }
    const FreeComplex& a = bw.result->a;
    auto fw = forward(o, a, build_multiplication(a), "auto");
    rep["a2b"] = fw.report;
    if (!fw.verdict || fw.code != kOk) {
      report_stream(o) << rep.dump(2) << "\n";
      return fw.code == kOk ? kVerification : fw.code;
    }
    end = fw.verdict->b.complex;
  } else if (start.length() == 3) {
    auto fw = forward(o, start, doc.multiplication ? *doc.multiplication : build_multiplication(start), "auto");
    rep["a2b"] = fw.report;
    if (!fw.verdict || fw.code != kOk) {
      report_stream(o) << rep.dump(2) << "\n";
      return fw.code == kOk ? kVerification : fw.code;
    }
    auto bw = backward(o, fw.verdict->b, "auto");
    rep["b2a"] = bw.report;
    if (!bw.result || bw.code != kOk) {
      report_stream(o) << rep.dump(2) << "\n";
      return bw.code == kOk ? kVerification : bw.code;
    }
    end = bw.result->a;
  } else {
    throw IoError("complex.differentials", "expected a complex of length 3 or 4");
  }
  bool same = ideal_equal(start.ring, resolved_ideal(start), resolved_ideal(end));
  rep["ideal_equal"] = same;
  Document out;
  out.ring = end.ring;
  out.complex = end;
  finish(o, out, rep);
  return same ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resfold: self-dual length four resolutions and length three resolutions"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--field", o.field, "q or fp:P")->capture_default_str();
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--budget", o.budget, "search trials (default 25 for C, 100 for H)");
  app.add_option("--out", o.out, "output file, - for stdout")->capture_default_str();

  auto* gen = app.add_subcommand("gen", "write an example complex");
  gen->add_option("kind", o.kind, "gn, split-a, split-b, square, two-by-four")->required();
  gen->add_option("--n", o.n, "matrix size for gn")->capture_default_str();
  gen->add_option("--p", o.p)->capture_default_str();
  gen->add_option("--q", o.q)->capture_default_str();

  auto* mult = app.add_subcommand("mult", "multiplication on a length three resolution");
  auto* a2b = app.add_subcommand("a2b", "length three to self-dual length four");
  a2b->add_option("--C", o.c_choice, "auto or a file with a basis_change block")->capture_default_str();
  auto* b2a = app.add_subcommand("b2a", "self-dual length four to length three");
  b2a->add_option("--H", o.h_choice, "auto, paper, given, or a file with a frame block")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "check a complex");
  verify->add_option("--level", o.level, "complex, selfdual, grade2 or acyclic")->capture_default_str();
  auto* roundtrip = app.add_subcommand("roundtrip", "run both constructions and compare ideals");
  roundtrip->add_option("--H", o.h_choice, "frame choice for the backward step")->capture_default_str();
  for (auto* s : {mult, a2b, b2a, verify, roundtrip}) s->add_option("input", o.input, "input file, - for stdin");
  for (auto* s : {gen, mult, a2b, b2a, verify, roundtrip}) {
    s->add_option("--field", o.field);
    s->add_option("--seed", o.seed);
    s->add_option("--budget", o.budget);
    s->add_option("--out", o.out);
  }

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen) return run_gen(o);
    if (*mult) return run_mult(o);
    if (*a2b) return run_a2b(o);
    if (*b2a) return run_b2a(o);
    if (*verify) return run_verify(o);
    if (*roundtrip) return run_roundtrip(o);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerification;
  }
  return kOk;
}
