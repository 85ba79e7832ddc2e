#include <algorithm>

#include "args.hpp"
#include "cli_common.hpp"
#include "sdw/algebra_ops.hpp"
#include "sdw/commutator.hpp"
#include "sdw/congruence.hpp"
#include "sdw/io.hpp"
#include "sdw/malcev.hpp"
#include "sdw/product.hpp"

namespace sdw::cli {

namespace {

Json partition_json(const Partition& p) { return Json::parse(partition_to_json(p)); }

Json term_json(const Signature& sig, const Term& t) { return t.to_string(sig); }

std::string malcev_stamp(MalcevStatus s) {
  switch (s) {
    case MalcevStatus::verified:
      return "malcev-verified";
    case MalcevStatus::none:
      return "term-condition closure (non-modular caveat)";
    default:
      return "term-condition closure (modularity unknown)";
  }
}

}  // namespace

Report cmd_alg(const Context& ctx, const std::vector<std::string>& args) {
  Report r;
  r.outcome = "verified";
  if (args.empty())
    throw InputError(
        "alg: verbs: check <a.json> | product <a.json> <b.json>.. [--out F] | "
        "quotient <a.json> --congruence <c.json> [--out F] | closure <a.json> --gens L "
        "| eval <a.json> --term T --args L | hom <a.json> <b.json> --map <m.json>");
  const std::string verb = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());

  if (verb == "check") {
    Args a(rest, {}, {});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    r.data["name"] = A->name();
    r.data["size"] = A->size();
    Json sig = Json::array();
    for (const auto& s : A->signature().symbols())
      sig.push_back({{"name", s.name}, {"arity", s.arity}});
    r.data["signature"] = sig;
    return r;
  }
  if (verb == "product") {
    Args a(rest, {}, {"out"});
    std::vector<AlgebraPtr> factors;
    for (const std::string& p : a.positional()) factors.push_back(load_algebra(p));
    DirectProduct prod = direct_product(factors, ctx.caps);
    r.data["size"] = prod.algebra->size();
    r.data["name"] = prod.algebra->name();
    if (a.has("out")) {
      save_algebra(*prod.algebra, a.value("out"));
      r.data["written"] = a.value("out");
    }
    return r;
  }
  if (verb == "quotient") {
    Args a(rest, {}, {"congruence", "out"});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    Partition theta = load_partition(a.require("congruence"), A->size());
    Quotient q = quotient(*A, theta);
    r.data["size"] = q.algebra->size();
    Json surj = Json::array();
    for (int v : q.surjection) surj.push_back(v);
    r.data["surjection"] = surj;
    if (a.has("out")) {
      save_algebra(*q.algebra, a.value("out"));
      r.data["written"] = a.value("out");
    }
    return r;
  }
  if (verb == "closure") {
    Args a(rest, {"recipes"}, {"gens"});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    std::vector<int> gens = parse_int_list(a.value("gens", ""));
    std::vector<El> X(gens.begin(), gens.end());
    auto derived = subuniverse_closure(*A, X, ctx.caps);
    r.data["generators"] = gens;
    r.data["size"] = static_cast<int>(derived.size());
    Json elems = Json::array();
    for (const auto& d : derived) {
      if (a.flag("recipes"))
        elems.push_back({{"element", d.element},
                         {"recipe", term_json(A->signature(), d.recipe)}});
      else
        elems.push_back(d.element);
    }
    r.data["elements"] = elems;
    return r;
  }
  if (verb == "eval") {
    Args a(rest, {}, {"term", "args"});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    Term t = parse_term(A->signature(), a.require("term"));
    std::vector<int> vals = parse_int_list(a.require("args"));
    std::vector<El> assignment(vals.begin(), vals.end());
    r.data["value"] = eval_term(*A, t, assignment);
    return r;
  }
  if (verb == "hom") {
    Args a(rest, {}, {"map"});
    AlgebraPtr A = load_algebra(a.pos(0, "domain"));
    AlgebraPtr B = load_algebra(a.pos(1, "codomain"));
    std::vector<El> f = load_map(a.require("map"));
    HomCheck check = is_homomorphism(*A, *B, f);
    r.data["homomorphism"] = check.ok;
    r.data["surjective"] = is_surjective(*B, f);
    if (!check.ok) {
      r.outcome = "refuted";
      r.exit_code = kRefuted;
      Json w;
      w["operation"] = A->signature().name(check.witness->op);
      w["args"] = check.witness->args;
      w["lhs"] = check.witness->lhs;
      w["rhs"] = check.witness->rhs;
      r.data["witness"] = w;
    }
    return r;
  }
  throw InputError("alg: unknown verb '" + verb + "'");
}

Report cmd_con(const Context& ctx, const std::vector<std::string>& args) {
  Report r;
  r.outcome = "verified";
  if (args.empty())
    throw InputError(
        "con: verbs: lattice <a.json> | cg <a.json> --pairs \"0,2;1,3\" | "
        "join <a.json> <c1.json> <c2.json> | meet ... | permute <a.json> <c1> <c2>");
  const std::string verb = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());

  if (verb == "lattice") {
    Args a(rest, {}, {});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    CongruenceLattice lat = con_lattice(*A, ctx.caps);
    r.data["count"] = static_cast<int>(lat.congruences.size());
    Json congs = Json::array();
    for (const Partition& p : lat.congruences) congs.push_back(partition_json(p));
    r.data["congruences"] = congs;
    Json hasse = Json::array();
    for (auto [lo, hi] : lat.hasse_edges) hasse.push_back({lo, hi});
    r.data["hasse"] = hasse;
    ModularityReport mod = is_modular(lat.lattice);
    r.data["modular"] = mod.modular;
    if (!mod.witness.has_value()) {
    } else {
      const PentagonWitness& w = *mod.witness;
      r.data["pentagon"] = {w.bottom, w.side, w.lower, w.upper, w.top};
    }
    r.bounds["max_congruences"] = ctx.caps.max_congruences;
    return r;
  }
  if (verb == "cg") {
    Args a(rest, {}, {"pairs"});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    std::vector<std::pair<El, El>> pairs;
    for (const auto& t : parse_tuple_list(a.require("pairs"))) {
      if (t.size() != 2) throw InputError("cg: pairs must have two entries");
      pairs.emplace_back(t[0], t[1]);
    }
    Partition p = cg(*A, pairs, nullptr, ctx.caps);
    r.data["congruence"] = partition_json(p);
    r.data["blocks"] = p.block_count();
    return r;
  }
  if (verb == "join" || verb == "meet") {
    Args a(rest, {}, {});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    Partition p = load_partition(a.pos(1, "first congruence"), A->size());
    Partition q = load_partition(a.pos(2, "second congruence"), A->size());
    Congruence cp(A, p), cq(A, q);  // validates compatibility
    Partition out = verb == "join" ? join(p, q) : meet(p, q);
    r.data[verb] = partition_json(out);
    return r;
  }
  if (verb == "permute") {
    Args a(rest, {}, {});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    Partition p = load_partition(a.pos(1, "first congruence"), A->size());
    Partition q = load_partition(a.pos(2, "second congruence"), A->size());
    bool ok = permute(p, q);
    r.data["permute"] = ok;
    if (!ok) {
      r.outcome = "refuted";
      r.exit_code = kRefuted;
    }
    return r;
  }
  throw InputError("con: unknown verb '" + verb + "'");
}

Report cmd_comm(const Context& ctx, const std::vector<std::string>& args) {
  Report r;
  r.outcome = "verified";
  if (args.empty())
    throw InputError(
        "comm: verbs: compute <a.json> --congs c1.json --congs c2.json [--congs c3.json] | "
        "class <a.json> [--max-k K] [--relative-to c.json] | properties <a.json> "
        "[--max-arity K] | oracle <a.json> --kind group|ring --congs ... | "
        "sdcom <sdp.json> [--congs ...| --arity k]");
  const std::string verb = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());

  if (verb == "compute") {
    Args a(rest, {}, {"congs"});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    std::vector<Partition> alphas;
    for (const std::string& f : a.all("congs"))
      alphas.push_back(load_partition(f, A->size()));
    for (const Partition& p : alphas) Congruence check(A, p);
    CommutatorEngine engine(A, ctx.caps);
    CommutatorResult res = engine.commutator_result(alphas);
    res.malcev = malcev_status(*A, ctx.caps);
    r.data["gamma"] = partition_json(res.gamma);
    r.data["blocks"] = res.gamma.block_count();
    r.data["rounds"] = res.rounds;
    r.data["m_size"] = res.m_size;
    r.data["interpretation"] = malcev_stamp(res.malcev);
    r.bounds["max_cube_arity"] = ctx.caps.max_cube_arity;
    r.bounds["max_cube_functions"] = ctx.caps.max_cube_functions;
    return r;
  }
  if (verb == "class") {
    Args a(rest, {}, {"max-k", "relative-to"});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    int max_k = static_cast<int>(a.int_value("max-k", 2));
    Partition rel = a.has("relative-to")
                        ? load_partition(a.value("relative-to"), A->size())
                        : Partition::one(A->size());
    Congruence check(A, rel);
    Caps caps = ctx.caps;
    caps.max_cube_arity = std::max(caps.max_cube_arity, max_k + 1);
    SupernilpotenceResult res = supernilpotence_class(A, rel, max_k, caps);
    r.data["chain_blocks"] = res.chain;
    r.bounds["max_k"] = max_k;
    if (res.cls.has_value()) {
      r.data["class"] = *res.cls;
    } else {
      r.data["class"] = "exceeds max_k";
      r.outcome = "inconclusive";
      r.data["bound_hit"] = "max_k";
      r.exit_code = kInconclusive;
    }
    return r;
  }
  if (verb == "properties") {
    Args a(rest, {}, {"max-arity", "max-instances"});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    PropertySuiteOptions opts;
    opts.max_arity = static_cast<int>(a.int_value("max-arity", 3));
    opts.max_instances = a.int_value("max-instances", opts.max_instances);
    PropertyReport rep = property_suite(A, opts, ctx.caps);
    Json checks = Json::array();
    for (const PropertyCheck& c : rep.checks) {
      Json e;
      e["property"] = c.property;
      e["instances"] = c.instances;
      e["passed"] = c.passed;
      if (!c.witness.empty()) e["witness"] = c.witness;
      checks.push_back(e);
    }
    r.data["checks"] = checks;
    r.data["all_passed"] = rep.all_passed;
    r.data["interpretation"] = malcev_stamp(malcev_status(*A, ctx.caps));
    if (!rep.all_passed) {
      r.outcome = "refuted";
      r.exit_code = kRefuted;
    }
    return r;
  }
  if (verb == "oracle") {
    Args a(rest, {}, {"kind", "congs"});
    AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
    std::vector<Partition> alphas;
    for (const std::string& f : a.all("congs"))
      alphas.push_back(load_partition(f, A->size()));
    std::string kind = a.require("kind");
    Partition out = kind == "group"   ? group_oracle(*A, alphas)
                    : kind == "ring"  ? ring_oracle(*A, alphas)
                                      : throw InputError("oracle: kind must be group or ring");
    r.data["gamma"] = partition_json(out);
    r.data["blocks"] = out.block_count();
    return r;
  }
  if (verb == "sdcom") {
    Args a(rest, {}, {"congs", "arity"});
    SubproductAlgebra C = load_subproduct_file(a.pos(0, "subproduct file"), ctx.caps);
    std::vector<Partition> gammas;
    if (a.has("congs")) {
      for (const std::string& f : a.all("congs"))
        gammas.push_back(load_partition(f, static_cast<int>(C.size())));
    } else {
      int k = static_cast<int>(a.int_value("arity", 2));
      gammas.assign(static_cast<size_t>(k), Partition::one(static_cast<int>(C.size())));
    }
    SdcomResult res = sdcom_check(C, gammas, ctx.caps);
    r.data["contained"] = res.contained;
    r.data["onto_left"] = res.onto_left;
    r.data["onto_right"] = res.onto_right;
    if (!res.ok()) {
      r.outcome = "refuted";
      r.exit_code = kRefuted;
    }
    return r;
  }
  throw InputError("comm: unknown verb '" + verb + "'");
}

Report cmd_malcev(const Context& ctx, const std::vector<std::string>& args) {
  Report r;
  Args a(args, {}, {"budget", "hint"});
  AlgebraPtr A = load_algebra(a.pos(0, "algebra file"));
  std::optional<Term> hint;
  if (a.has("hint")) hint = parse_term(A->signature(), a.value("hint"));
  std::int64_t budget = a.int_value("budget", ctx.caps.malcev_budget);
  MalcevOutcome out = find_malcev_term(*A, budget, hint, ctx.caps);
  r.bounds["budget"] = budget;
  r.data["explored"] = out.explored;
  switch (out.status) {
    case MalcevOutcome::Status::found:
      r.outcome = "verified";
      r.data["found"] = true;
      r.data["term"] = out.witness->term.to_string(A->signature());
      r.data["verified_pairs"] = static_cast<int>(out.witness->table.size());
      break;
    case MalcevOutcome::Status::none:
      r.outcome = "refuted";
      r.exit_code = kRefuted;
      r.data["found"] = false;
      r.data["definitive"] = true;
      break;
    case MalcevOutcome::Status::exhausted:
      r.outcome = "inconclusive";
      r.exit_code = kInconclusive;
      r.data["found"] = false;
      r.data["definitive"] = false;
      r.data["bound_hit"] = "budget";
      break;
  }
  return r;
}

}  // namespace sdw::cli
