#include <filesystem>

#include "args.hpp"
#include "cli_common.hpp"
#include "sdw/generation.hpp"
#include "sdw/io.hpp"

namespace sdw::cli {

namespace {

Json partition_json(const Partition& p) { return Json::parse(partition_to_json(p)); }

Json coords_json(const SubproductAlgebra& C, std::int64_t flat) {
  Json out = Json::array();
  for (El v : C.codec().decode(flat)) out.push_back(v);
  return out;
}

void save_subproduct(const SubproductAlgebra& C, const std::vector<std::string>& factor_paths,
                     const std::string& path) {
  Json j;
  j["factors"] = factor_paths;
  Json elems = Json::array();
  for (std::int64_t e : C.elements()) elems.push_back(coords_json(C, e));
  j["elements"] = elems;
  write_text_file(path, j.dump(2) + "\n");
}

}  // namespace

SubproductAlgebra load_subproduct_file(const std::string& path, const Caps& caps) {
  Json j = Json::parse(read_text_file(path));
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
    throw InputError(path + ": expected {\"factors\": [...], \"generators\"|\"elements\": [...]}");
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  std::vector<AlgebraPtr> factors;
  for (const auto& f : j["factors"]) {
    std::filesystem::path p(f.get<std::string>());
    if (p.is_relative()) p = base / p;
    factors.push_back(load_algebra(p.string()));
  }
  auto read_tuples = [&](const Json& arr) {
    std::vector<std::vector<El>> out;
    for (const auto& row : arr) {
      std::vector<El> tuple;
      for (const auto& v : row) tuple.push_back(v.get<El>());
      if (tuple.size() != factors.size())
        throw InputError(path + ": tuple arity does not match the factor count");
      out.push_back(std::move(tuple));
    }
    return out;
  };
  if (j.contains("generators"))
    return SubproductAlgebra::from_generators(factors, read_tuples(j["generators"]), caps);
  if (j.contains("elements")) {
    ProductCodec codec([&] {
      std::vector<int> sizes;
      for (const auto& f : factors) sizes.push_back(f->size());
      return sizes;
    }());
    std::vector<std::int64_t> flat;
    for (const auto& tuple : read_tuples(j["elements"])) flat.push_back(codec.encode(tuple));
    return SubproductAlgebra::from_elements(factors, std::move(flat), caps);
  }
  throw InputError(path + ": needs a \"generators\" or \"elements\" array");
}

Report cmd_sdp(const Context& ctx, const std::vector<std::string>& args) {
  Report r;
  r.outcome = "verified";
  if (args.empty())
    throw InputError(
        "sdp: verbs: check <c.json> | fiber --left A --right B --onto D --g G --h H "
        "[--out F] [--module-check] | kernels <c.json> | fleischer <c.json> | pairs <c.json> | "
        "project <c.json> --coords L [--out F] | union-classes <c.json> --congs f1 --congs f2 .. "
        "| lift <c.json> --gens-a L --gens-b L --lambda-pairs P [--malcev-term T] | "
        "thm41 <c.json> | certify <c.json> --gens TUPLES | gens <c.json>");
  const std::string verb = args[0];
  std::vector<std::string> rest(args.begin() + 1, args.end());

  if (verb == "check") {
    Args a(rest, {}, {});
    SubproductAlgebra C = load_subproduct_file(a.pos(0, "subproduct file"), ctx.caps);
    SubdirectCheck check = is_subdirect(C);
    r.data["size"] = C.size();
    r.data["subdirect"] = check.subdirect;
    if (!check.subdirect) {
      r.outcome = "refuted";
      r.exit_code = kRefuted;
      r.data["missing_coordinate"] = check.missing_coordinate;
      r.data["missing_value"] = check.missing_value;
    }
    return r;
  }
  if (verb == "fiber") {
    Args a(rest, {"module-check"}, {"left", "right", "onto", "g", "h", "out"});
    AlgebraPtr A = load_algebra(a.require("left"));
    AlgebraPtr B = load_algebra(a.require("right"));
    AlgebraPtr D = load_algebra(a.require("onto"));
    FiberProduct fp = fiber_product(A, B, D, load_map(a.require("g")), load_map(a.require("h")),
                                    ctx.caps);
    r.data["size"] = fp.C.size();
    r.data["subdirect"] = true;
    if (a.has("out")) {
      save_subproduct(fp.C, {a.require("left"), a.require("right")}, a.value("out"));
      r.data["written"] = a.value("out");
    }
    if (a.flag("module-check")) {
      ModuleQuotientCheck mc = module_fiber_quotient_check(fp, ctx.caps);
      r.data["module_quotient_ok"] = mc.ok;
      if (!mc.ok) {
        r.outcome = "refuted";
        r.exit_code = kRefuted;
        r.data["detail"] = mc.detail;
      }
    }
    return r;
  }
  if (verb == "kernels") {
    Args a(rest, {}, {});
    SubproductAlgebra C = load_subproduct_file(a.pos(0, "subproduct file"), ctx.caps);
    FactorKernels fk = factor_kernels(C, ctx.caps);
    r.data["lambda_left"] = partition_json(fk.lambda_left);
    r.data["lambda_right"] = partition_json(fk.lambda_right);
    r.data["quotient_size"] = fk.quotient_size;
    return r;
  }
  if (verb == "fleischer") {
    Args a(rest, {}, {});
    SubproductAlgebra C = load_subproduct_file(a.pos(0, "subproduct file"), ctx.caps);
    FleischerResult res = is_fiber_product(C, ctx.caps);
    r.data["fiber_product"] = res.fiber;
    if (res.fiber) {
      r.data["quotient_size"] = res.witness->quotient->size();
    } else {
      r.outcome = "refuted";
      r.exit_code = kRefuted;
      r.data["witness"] = "projection kernels do not permute";
    }
    return r;
  }
  if (verb == "pairs") {
    Args a(rest, {}, {});
    SubproductAlgebra C = load_subproduct_file(a.pos(0, "subproduct file"), ctx.caps);
    PairReport rep = pair_report(C, ctx.caps);
    Json entries = Json::array();
    bool all_surjective = true;
    for (const PairEntry& e : rep.entries) {
      Json row;
      row["i"] = e.i;
      row["j"] = e.j;
      row["surjective"] = e.surjective;
      row["quotient_size"] = e.quotient_size;
      row["lambda_ij"] = partition_json(e.lambda_ij);
      row["lambda_ji"] = partition_json(e.lambda_ji);
      entries.push_back(row);
      all_surjective = all_surjective && e.surjective;
    }
    r.data["pairs"] = entries;
    r.data["surjective_on_pairs"] = all_surjective;
    return r;
  }
  if (verb == "project") {
    Args a(rest, {}, {"coords", "out"});
    SubproductAlgebra C = load_subproduct_file(a.pos(0, "subproduct file"), ctx.caps);
    std::vector<int> I = parse_int_list(a.require("coords"));
    SubproductAlgebra P = project(C, I, ctx.caps);
    r.data["size"] = P.size();
    if (a.has("out")) {
      // Factor paths are not tracked through projection; emit elements only.
      Json j;
      Json elems = Json::array();
      for (std::int64_t e : P.elements()) elems.push_back(coords_json(P, e));
      j["elements"] = elems;
      write_text_file(a.value("out"), j.dump(2) + "\n");
      r.data["written"] = a.value("out");
    }
    return r;
  }
  if (verb == "union-classes") {
    Args a(rest, {}, {"congs"});
    SubproductAlgebra C = load_subproduct_file(a.pos(0, "subproduct file"), ctx.caps);
    std::vector<std::string> files = a.all("congs");
    if (static_cast<int>(files.size()) != C.num_factors())
      throw InputError("union-classes: need one --congs file per factor");
    std::vector<Partition> thetas;
    for (int i = 0; i < C.num_factors(); ++i)
      thetas.push_back(load_partition(files[static_cast<size_t>(i)], C.factor(i)->size()));
    UnionOfClassesResult res = union_of_classes(C, thetas);
    r.data["union_of_classes"] = res.is_union;
    if (!res.is_union) {
      r.outcome = "refuted";
      r.exit_code = kRefuted;
      r.data["member"] = res.member;
      r.data["escape"] = res.escape;
    }
    return r;
  }
  if (verb == "lift") {
    Args a(rest, {}, {"gens-a", "gens-b", "lambda-pairs", "malcev-term"});
    SubproductAlgebra C = load_subproduct_file(a.pos(0, "subproduct file"), ctx.caps);
    std::vector<int> xs = parse_int_list(a.require("gens-a"));
    std::vector<int> ys = parse_int_list(a.require("gens-b"));
    std::vector<std::pair<El, El>> U;
    if (a.has("lambda-pairs"))
      for (const auto& t : parse_tuple_list(a.value("lambda-pairs"))) {
        if (t.size() != 2) throw InputError("lift: lambda pairs must have two entries");
        U.emplace_back(t[0], t[1]);
      }
    std::string term_text = a.value("malcev-term", "mul(x0, mul(inv(x1), x2))");
    Term m = parse_term(C.factor(0)->signature(), term_text);
    GenerationCertificate cert = lift_generators(C, std::vector<El>(xs.begin(), xs.end()),
                                                 std::vector<El>(ys.begin(), ys.end()), U, m,
                                                 ctx.caps);
    Json gens = Json::array();
    for (std::int64_t g : cert.generators) gens.push_back(coords_json(C, g));
    r.data["generators"] = gens;
    r.data["closure_size"] = cert.closure_size;
    r.data["generates"] = cert.generates;
    if (!cert.generates) {
      r.outcome = "refuted";
      r.exit_code = kRefuted;
    }
    return r;
  }
  if (verb == "thm41") {
    Args a(rest, {}, {});
    SubproductAlgebra C = load_subproduct_file(a.pos(0, "subproduct file"), ctx.caps);
    ClassUnionCheck check = verify_class_union(C, ctx.caps);
    Json gammas = Json::array();
    for (const Partition& g : check.gammas.gammas) gammas.push_back(partition_json(g));
    r.data["gammas"] = gammas;
    r.data["union_of_classes"] = check.holds;
    bool surjective = true;
    for (const PairEntry& e : check.gammas.pairs.entries)
      surjective = surjective && e.surjective;
    r.data["surjective_on_pairs"] = surjective;
    if (!check.holds) {
      r.outcome = "refuted";
      r.exit_code = kRefuted;
      r.data["member"] = check.detail.member;
      r.data["escape"] = check.detail.escape;
    }
    return r;
  }
  if (verb == "certify") {
    Args a(rest, {}, {"gens"});
    SubproductAlgebra C = load_subproduct_file(a.pos(0, "subproduct file"), ctx.caps);
    std::vector<std::int64_t> X;
    for (const auto& t : parse_tuple_list(a.require("gens"))) {
      std::vector<El> coords(t.begin(), t.end());
      X.push_back(C.codec().encode(coords));
    }
    GenerationCertificate cert = fg_certificate(C, X, ctx.caps);
    r.data["closure_size"] = cert.closure_size;
    r.data["generates"] = cert.generates;
    Json evidence = Json::array();
    for (const std::string& e : cert.evidence) evidence.push_back(e);
    r.data["evidence"] = evidence;
    if (!cert.generates) {
      r.outcome = "refuted";
      r.exit_code = kRefuted;
      r.data["failed_clause"] = cert.failed_clause;
    }
    return r;
  }
  if (verb == "gens") {
    Args a(rest, {}, {});
    SubproductAlgebra C = load_subproduct_file(a.pos(0, "subproduct file"), ctx.caps);
    std::vector<std::int64_t> X = greedy_generating_set(C, ctx.caps);
    Json gens = Json::array();
    for (std::int64_t g : X) gens.push_back(coords_json(C, g));
    r.data["generators"] = gens;
    r.data["count"] = static_cast<int>(X.size());
    GenerationCertificate cert = fg_certificate(C, X, ctx.caps);
    r.data["certified"] = cert.generates;
    return r;
  }
  throw InputError("sdp: unknown verb '" + verb + "'");
}

}  // namespace sdw::cli
