#include "hypdiv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "hypdiv/json_io.hpp"

namespace hypdiv {

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::not_on_curve:
    case Errc::gram_mismatch:
    case Errc::not_in_qc:
    case Errc::not_orthogonal:
    case Errc::degenerate_result:
    case Errc::factorization_needs_extension:
    case Errc::not_in_ambient:
    case Errc::rationals_need_hint:
      return 2;
    case Errc::search_exhausted:
    case Errc::budget_exhausted:
    case Errc::field_too_large:
      return 3;
    default:
      return 1;
  }
}

namespace {

struct Options {
  std::string curve, t1, t2, matrix, form, hint, out, mode = "class";
  int ext = 2;
  std::int64_t p = 0;
  int m = 1;
  std::optional<std::int64_t> budget;
  std::uint64_t seed = 0;
};

Json load(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(Errc::parse_error, std::string("missing required input --") + flag);
  const auto first = value.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (value[first] == '{' || value[first] == '[')) return parse_json(value);
  std::ifstream in(value);
  if (!in) throw Error(Errc::parse_error, "cannot read " + value);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

std::string_view sign_name(InfinitySign s) {
  switch (s) {
    case InfinitySign::plus: return "plus";
    case InfinitySign::minus: return "minus";
    case InfinitySign::none: break;
  }
  return "none";
}

Json relation_json(const ClassRelation& rel) {
  Json j;
  j["kind"] = std::string(kind_name(rel.kind));
  if (rel.witness) j["witness"] = matrix_to_json(rel.witness->entries());
  if (rel.conjugate_witness) j["conjugate_witness"] = matrix_to_json(rel.conjugate_witness->entries());
  j["search_domain"] = field_to_json(rel.search_field);
  if (rel.witness) j["witness_field"] = field_to_json(rel.witness->field());
  if (rel.conjugate_witness) j["conjugate_witness_field"] = field_to_json(rel.conjugate_witness->field());
  return j;
}

using Handler = std::function<Json(const Options&)>;

Json curve_validate(const Options& o) {
  const Curve c = curve_from_json(load(o.curve, "curve"));
  const InfinityData inf = infinity_points(c);
  Json j;
  j["valid"] = true;
  j["genus"] = c.genus();
  j["field"] = field_to_json(c.field());
  Json infj;
  infj["leading"] = scalar_to_json(inf.leading);
  infj["status"] = inf.status == SqrtStatus::square_in_base ? "square_in_base" : "square_in_quadratic_extension";
  infj["root_field"] = field_to_json(inf.root_field);
  infj["roots"] = Json::array({scalar_to_json(inf.roots[0]), scalar_to_json(inf.roots[1])});
  j["infinity"] = infj;
  return j;
}

Json triple_validate(const Options& o) {
  const Json cj = load(o.curve, "curve"), tj = load(o.t1, "t1");
  triple_from_json(tj, curve_from_json(cj));
  Json j;
  j["valid"] = true;
  return j;
}

Json triple_canonical(const Options& o) {
  const Json cj = load(o.curve, "curve"), tj = load(o.t1, "t1");
  const Triple t = triple_from_json(tj, curve_from_json(cj));
  const CanonicalForm c = b_canonical_with_word(t);
  const DivisorData d = divisor_data(t);
  Json j;
  j["canonical"] = triple_to_json(c.triple);
  j["word"] = {{"scale", scalar_to_json(c.word.scale)}, {"shift", scalar_to_json(c.word.shift)}};
  j["matrix"] = matrix_to_json(b_word_matrix(c.word).entries());
  j["divisor"] = {{"U", poly_to_json(d.U_monic)},
                  {"W", poly_to_json(d.W_repr)},
                  {"infinity_multiplicity", d.infinity_multiplicity},
                  {"infinity_sign", std::string(sign_name(d.infinity_sign))}};
  return j;
}

Json triple_support(const Options& o) {
  const Json cj = load(o.curve, "curve"), tj = load(o.t1, "t1");
  const Triple t = triple_from_json(tj, curve_from_json(cj));
  const Support s = support(t, o.ext);
  Json j;
  j["field"] = field_to_json(s.field);
  j["complete"] = s.complete;
  Json pts = Json::array();
  for (const auto& p : s.affine)
    pts.push_back({{"x", scalar_to_json(p.x)}, {"y", scalar_to_json(p.y)}, {"multiplicity", p.multiplicity}});
  j["affine"] = pts;
  j["infinity"] = {{"multiplicity", s.infinity_multiplicity}, {"sign", std::string(sign_name(s.infinity_sign))}};
  return j;
}

Json group_act(const Options& o) {
  const Json cj = load(o.curve, "curve"), tj = load(o.t1, "t1"), mj = load(o.matrix, "matrix");
  const Triple t = triple_from_json(tj, curve_from_json(cj));
  const OrthMatrix a = orth_from_json(mj, t.field());
  const Triple r = act(a, t);
  Json j;
  j["orthogonality"] = a.is_proper() ? "proper" : "improper";
  j["triple"] = triple_to_json(r);
  return j;
}

Json group_enumerate(const Options& o) {
  if (o.p == 0) throw Error(Errc::parse_error, "missing required option --p");
  const Field f = Field::finite(o.p, o.m);
  const auto& group = enumerate_so3(f);
  const std::uint64_t q = f.order();
  Json j;
  j["field"] = field_to_json(f);
  j["order"] = group.size();
  j["expected"] = q * q * q - q;
  j["matches"] = group.size() == q * q * q - q;
  return j;
}

Json class_relation(const Options& o) {
  const Json cj = load(o.curve, "curve"), aj = load(o.t1, "t1"), bj = load(o.t2, "t2");
  const Curve c = curve_from_json(cj);
  const Triple a = triple_from_json(aj, c), b = triple_from_json(bj, c);
  return relation_json(same_class(a, b, SearchDomain{o.ext}));
}

Json form_gram(const Options& o) {
  const Json cj = load(o.curve, "curve"), tj = load(o.t1, "t1");
  const GramForm s = gram(triple_from_json(tj, curve_from_json(cj)));
  Json j;
  j["field"] = field_to_json(s.field());
  j["entries"] = matrix_to_json(s.entries());
  return j;
}

Json form_rank(const Options& o) {
  const Json cj = load(o.curve, "curve"), fj = load(o.form, "form");
  const Curve c = curve_from_json(cj);
  const GramForm s = gram_from_json(fj, c.field());
  const RankRadical rr = rank_radical(s);
  Json j;
  j["rank"] = rr.rank;
  Json rad = Json::array();
  for (Index k = 0; k < rr.radical.cols(); ++k) {
    Json v = Json::array();
    for (Index i = 0; i < rr.radical.rows(); ++i) v.push_back(scalar_to_json(rr.radical(i, k)));
    rad.push_back(v);
  }
  j["radical"] = rad;
  j["lambda"] = poly_to_json(lambda_of_form(s));
  j["in_qc"] = in_qc(s, c);
  return j;
}

Json form_decompose(const Options& o) {
  const Json cj = load(o.curve, "curve"), fj = load(o.form, "form");
  std::optional<Json> hj;
  if (!o.hint.empty()) hj = load(o.hint, "hint");
  const Curve c = curve_from_json(cj);
  const GramForm s = gram_from_json(fj, c.field());
  std::optional<Vector> hint;
  if (hj) {
    if (!hj->is_array()) throw Error(Errc::parse_error, "hint must be an array of scalars");
    Vector v(static_cast<Index>(hj->size()));
    for (Index i = 0; i < v.size(); ++i) v(i) = scalar_from_json((*hj)[i], s.field());
    hint = v;
  }
  const int budget = static_cast<int>(o.budget.value_or(2));
  return triple_to_json(decompose(s, c, budget, hint));
}

Json galois_rational(const Options& o) {
  const Json cj = load(o.curve, "curve"), tj = load(o.t1, "t1");
  if (o.mode != "class" && o.mode != "mod-conj") throw Error(Errc::parse_error, "--mode must be class or mod-conj");
  const Curve c = curve_from_json(cj);
  const Triple t = triple_from_json(tj, c);
  Json j;
  j["mode"] = o.mode;
  if (!c.field().is_finite()) {
    bool rational = true;
    for (Index i = 0; i < t.matrix().size(); ++i) rational = rational && t.matrix()(i).in_prime_subfield();
    j["rational"] = rational;
    j["syntactic"] = true;
    j["base"] = field_to_json(Field::rationals());
    return j;
  }
  const GaloisContext ctx = make_context(c.field(), o.ext);
  if (o.mode == "mod-conj") {
    j["rational"] = class_rational_mod_conj(t, ctx);
  } else {
    const RationalityVerdict v = class_rationality(t, ctx);
    j["rational"] = v.rational;
    j["relation"] = relation_json(v.relation);
  }
  j["base"] = field_to_json(ctx.base);
  j["ambient"] = field_to_json(ctx.ambient);
  return j;
}

Json search_caveat(const Options& o) {
  const Curve c = curve_from_json(load(o.curve, "curve"));
  const std::int64_t budget = o.budget.value_or(10000);
  if (budget < 0) throw Error(Errc::parse_error, "--budget must be non-negative");
  const GaloisContext ctx = make_context(c.field(), o.ext);
  const CaveatReport r = find_caveat_example(c, ctx, static_cast<std::uint64_t>(budget), o.seed);
  Json j;
  j["found"] = r.witness.has_value();
  j["base"] = field_to_json(ctx.base);
  j["ambient"] = field_to_json(ctx.ambient);
  j["seed"] = r.seed;
  j["budget"] = r.budget;
  j["searched"] = r.searched;
  j["gram_rational_samples"] = r.gram_rational_samples;
  j["implication_violations"] = r.violations;
  if (r.witness) {
    j["witness"] = triple_to_json(*r.witness);
    j["gram"] = matrix_to_json(gram(*r.witness).entries());
    j["relation"] = relation_json(*r.relation);
  }
  return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  CLI::App app{"Divisor classes on hyperelliptic curves via triples of linear forms", "hypdiv"};
  app.require_subcommand(1);
  Options o;
  std::map<CLI::App*, Handler> handlers;
  auto add = [&](const char* name, const char* help, Handler h, std::initializer_list<const char*> inputs) {
    CLI::App* sub = app.add_subcommand(name, help);
    for (const char* in : inputs) {
      const std::string flag = in;
      if (flag == "curve") sub->add_option("--curve", o.curve, "curve JSON (path or inline)");
      if (flag == "t1") sub->add_option("--t1", o.t1, "triple JSON (path or inline)");
      if (flag == "t2") sub->add_option("--t2", o.t2, "second triple JSON");
      if (flag == "matrix") sub->add_option("--matrix", o.matrix, "3x3 matrix JSON");
      if (flag == "form") sub->add_option("--form", o.form, "Gram matrix JSON");
      if (flag == "hint") sub->add_option("--hint", o.hint, "isotropic vector JSON (rank 3 over Q)");
      if (flag == "ext") sub->add_option("--ext", o.ext, "extension degree")->check(CLI::Range(1, kMaxExtensionDegree));
      if (flag == "budget") sub->add_option("--budget", o.budget, "search or extension budget");
      if (flag == "seed") sub->add_option("--seed", o.seed, "random seed");
      if (flag == "mode") sub->add_option("--mode", o.mode, "class or mod-conj");
      if (flag == "pm") {
        sub->add_option("--p", o.p, "characteristic");
        sub->add_option("--m", o.m, "extension degree")->check(CLI::Range(1, kMaxExtensionDegree));
      }
    }
    sub->add_option("--out", o.out, "output path (default stdout)");
    handlers[sub] = std::move(h);
  };
  add("curve-validate", "validate a curve", curve_validate, {"curve"});
  add("triple-validate", "validate a triple on a curve", triple_validate, {"curve", "t1"});
  add("triple-canonical", "canonical form under B", triple_canonical, {"curve", "t1"});
  add("triple-support", "support of the divisor", triple_support, {"curve", "t1", "ext"});
  add("group-act", "apply an orthogonal matrix", group_act, {"curve", "t1", "matrix"});
  add("group-enumerate", "enumerate SO3 over a small field", group_enumerate, {"pm"});
  add("class-relation", "compare two divisor classes", class_relation, {"curve", "t1", "t2", "ext"});
  add("form-gram", "Gram matrix of a triple", form_gram, {"curve", "t1"});
  add("form-rank", "rank and radical of a form", form_rank, {"curve", "form"});
  add("form-decompose", "triple with a given Gram matrix", form_decompose, {"curve", "form", "budget", "hint"});
  add("galois-rational", "rationality of a class", galois_rational, {"curve", "t1", "ext", "mode"});
  add("search-caveat", "search for a rational form with an irrational class", search_caveat,
      {"curve", "ext", "budget", "seed"});

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    Json j;
    j["error"] = "UsageError";
    j["message"] = e.what();
    result.exit_code = 1;
    result.output = render(j);
    return result;
  }
  result.out_path = o.out;
  CLI::App* chosen = app.get_subcommands().front();
  const bool validating = chosen->get_name() == "curve-validate" || chosen->get_name() == "triple-validate";
  try {
    result.output = render(handlers.at(chosen)(o));
  } catch (const Error& e) {
    Json j;
    if (validating) j["valid"] = false;
    j.update(errc_json(e));
    result.exit_code = exit_code_for(e.code());
    result.output = render(j);
  } catch (const nlohmann::json::exception& e) {
    Json j;
    if (validating) j["valid"] = false;
    j["error"] = "ParseError";
    j["message"] = e.what();
    result.exit_code = 1;
    result.output = render(j);
  }
  return result;
}

}  // namespace hypdiv
