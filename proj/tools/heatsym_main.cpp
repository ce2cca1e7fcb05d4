#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heatsym/acceptance.hpp"
#include "heatsym/expr_io.hpp"
#include "heatsym/json_io.hpp"

using namespace heatsym;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// @file reads a file, "-" reads standard input, anything else is literal
std::string payload(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot open file: " + arg.substr(1));
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  return arg;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

uint64_t env_seed() {
  const char* s = std::getenv("HEATSYM_SEED");
  if (!s) return 20240809ULL;
  return std::strtoull(s, nullptr, 10);
}

FullElement element_arg(const std::string& arg) {
  Json j = parse_json(payload(arg));
  return full_from_json(j);
}

void need(bool cond, const std::string& msg) {
  if (!cond) throw UsageError(msg);
}

int usage() {
  std::cerr <<
      "usage: heatsym <verb> [args]\n"
      "  compose <elem> <elem>             group composition (JSON elements)\n"
      "  inverse <elem>\n"
      "  apply-point <elem> <t> <x> <u>    exact action on a rational point\n"
      "  apply-solution <elem> <exprs>     transform a solution (string or JSON array)\n"
      "  exp <algelem> (--eps p/q | --quarter k | --scale q | --float x)\n"
      "  push <elem> <algelem>             pushforward Ad(elem)\n"
      "  bracket <algelem> <algelem>\n"
      "  ad <algelem>                      6x6 matrix of [X, .]\n"
      "  canonicalize <basis>              JSON array of algebra elements\n"
      "  classify-1d <algelem> <exprs>\n"
      "  gensym-mul <op> <op>\n"
      "  gensym-comm <k> <l> <k'> <l'>\n"
      "  gensym-apply <op> <expr>\n"
      "  hopf-cole <expr>\n"
      "  burgers-apply <elem> <expr>\n"
      "  verify heat|burgers|determining <payload>\n"
      "  selftest [--parallel N] [--seed S]\n"
      "JSON payloads accept @file and - (stdin). HEATSYM_SEED fixes sampling.\n";
  return 2;
}

int run(const std::vector<std::string>& args) {
  const std::string& verb = args[0];

  if (verb == "compose") {
    need(args.size() == 3, "compose needs two elements");
    emit(full_to_json(compose(element_arg(args[1]), element_arg(args[2]))));
    return 0;
  }
  if (verb == "inverse") {
    need(args.size() == 2, "inverse needs one element");
    emit(full_to_json(inverse(element_arg(args[1]))));
    return 0;
  }
  if (verb == "apply-point") {
    need(args.size() == 5, "apply-point needs an element and t x u");
    FullElement e = element_arg(args[1]);
    Rat t = parse_rat(args[2]), x = parse_rat(args[3]), u = parse_rat(args[4]);
    ApplyPointResult res = apply_point(e, t, x, u);
    Json j;
    j["t"] = scalar_to_json(res.t);
    j["x"] = scalar_to_json(res.x);
    if (res.u)
      j["u"] = scalar_to_json(*res.u);
    else
      j["u_certificate"] = res.u_certificate;
    emit(j);
    return 0;
  }
  if (verb == "apply-solution") {
    need(args.size() == 3, "apply-solution needs an element and a solution");
    FullElement e = element_arg(args[1]);
    std::string body = payload(args[2]);
    SolutionSum f;
    if (!body.empty() && (body[0] == '[' || body[0] == '"'))
      f = solution_from_json(parse_json(body));
    else
      f.add(parse_expr(body));
    emit(solution_to_json(apply_solution(e, f)));
    return 0;
  }
  if (verb == "exp") {
    need(args.size() == 4, "exp needs an algebra element and one mode flag with value");
    AlgElement X = alg_from_json(parse_json(payload(args[1])));
    const std::string& flag = args[2];
    if (flag == "--eps") {
      emit(ess_to_json(exp_ess_exact(X, ExpParam::rational(parse_rat(args[3])))));
    } else if (flag == "--quarter") {
      emit(ess_to_json(exp_ess_exact(X, ExpParam::quarter(std::stol(args[3])))));
    } else if (flag == "--scale") {
      emit(ess_to_json(exp_ess_exact(X, ExpParam::scale(parse_rat(args[3])))));
    } else if (flag == "--float") {
      EssF e = exp_ess_float(X, std::stod(args[3]));
      Json j;
      j["A"] = Json::array({Json::array({e.A.a, e.A.b}), Json::array({e.A.c, e.A.d})});
      j["lambda"] = Json::array({e.lambda.l1, e.lambda.l0});
      j["sigma"] = e.sigma;
      emit(j);
    } else {
      throw UsageError("unknown exp mode " + flag);
    }
    return 0;
  }
  if (verb == "push") {
    need(args.size() == 3, "push needs an element and an algebra element");
    FullElement e = element_arg(args[1]);
    AlgElement X = alg_from_json(parse_json(payload(args[2])));
    emit(alg_to_json(pushforward(e.ess, X)));
    return 0;
  }
  if (verb == "bracket") {
    need(args.size() == 3, "bracket needs two algebra elements");
    AlgElement X = alg_from_json(parse_json(payload(args[1])));
    AlgElement Y = alg_from_json(parse_json(payload(args[2])));
    emit(alg_to_json(bracket(X, Y)));
    return 0;
  }
  if (verb == "ad") {
    need(args.size() == 2, "ad needs one algebra element");
    Mat6 M = ad_matrix(alg_from_json(parse_json(payload(args[1]))));
    Json rows = Json::array();
    for (const auto& row : M) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(rat_to_json(v));
      rows.push_back(r);
    }
    emit(rows);
    return 0;
  }
  if (verb == "canonicalize") {
    need(args.size() == 2, "canonicalize needs a basis");
    Json j = parse_json(payload(args[1]));
    Subalgebra s;
    for (const auto& v : j) s.basis.push_back(alg_from_json(v));
    emit(canonical_to_json(canonicalize(s)));
    return 0;
  }
  if (verb == "classify-1d") {
    need(args.size() == 3, "classify-1d needs an algebra element and a solution");
    AlgElement X = alg_from_json(parse_json(payload(args[1])));
    std::string body = payload(args[2]);
    SolutionSum f;
    if (!body.empty() && (body[0] == '[' || body[0] == '"'))
      f = solution_from_json(parse_json(body));
    else if (body != "0")
      f.add(parse_expr(body));
    Classify1DResult res = classify_1d_full(X, f);
    Json j;
    switch (res.kind) {
      case Classify1DResult::EssentialCase:
        j["case"] = "essential";
        j["canonical"] = canonical_to_json(*res.essential);
        break;
      case Classify1DResult::CenterCase:
        j["case"] = "center";
        j["conjugating_shift"] = solution_to_json(*res.center_shift);
        break;
      case Classify1DResult::LinCase:
        j["case"] = "lin";
        break;
    }
    emit(j);
    return 0;
  }
  if (verb == "gensym-mul") {
    need(args.size() == 3, "gensym-mul needs two operators");
    GenSymOp P = gensym_from_json(parse_json(payload(args[1])));
    GenSymOp Q = gensym_from_json(parse_json(payload(args[2])));
    emit(gensym_to_json(product(P, Q)));
    return 0;
  }
  if (verb == "gensym-comm") {
    need(args.size() == 5, "gensym-comm needs k l k' l'");
    emit(gensym_to_json(commutator_closed(std::stoi(args[1]), std::stoi(args[2]),
                                          std::stoi(args[3]), std::stoi(args[4]))));
    return 0;
  }
  if (verb == "gensym-apply") {
    need(args.size() == 3, "gensym-apply needs an operator and an expression");
    GenSymOp P = gensym_from_json(parse_json(payload(args[1])));
    HeatExpr e = parse_expr(payload(args[2]));
    emit(solution_to_json(gensym_apply(P, e)));
    return 0;
  }
  if (verb == "hopf-cole") {
    need(args.size() == 2, "hopf-cole needs an expression");
    HeatExpr u = parse_expr(payload(args[1]));
    Json j;
    j["v"] = hopf_cole(u).str();
    emit(j);
    return 0;
  }
  if (verb == "burgers-apply") {
    need(args.size() == 3, "burgers-apply needs an element and an expression");
    BurgQ e = burgers_from_json(parse_json(payload(args[1])));
    RatFunc v = parse_ratfunc(payload(args[2]));
    Json j;
    j["v"] = apply_solution_b(e, v).str();
    emit(j);
    return 0;
  }
  if (verb == "verify") {
    need(args.size() >= 3, "verify needs a mode and a payload");
    const std::string& mode = args[1];
    Json j;
    if (mode == "heat") {
      HeatExpr e = parse_expr(payload(args[2]));
      RatFunc res = e.heat_residual();
      j["zero"] = res.is_zero();
      j["residual"] = res.str();
    } else if (mode == "burgers") {
      RatFunc v = parse_ratfunc(payload(args[2]));
      RatFunc res = burgers_residual(v);
      j["zero"] = res.is_zero();
      j["residual"] = res.str();
    } else if (mode == "determining") {
      Json in = parse_json(payload(args[2]));
      DeterminingData d;
      d.T = parse_ratfunc(in.at("T").get<std::string>());
      d.X = parse_ratfunc(in.at("X").get<std::string>());
      d.U1 = parse_expr(in.at("U1").get<std::string>());
      j["zero"] = verify_determining(d);
    } else {
      throw UsageError("unknown verify mode " + mode);
    }
    emit(j);
    return 0;
  }
  if (verb == "selftest") {
    int threads = 1;
    uint64_t seed = env_seed();
    for (size_t i = 1; i < args.size(); ++i) {
      if (args[i] == "--parallel" && i + 1 < args.size())
        threads = std::stoi(args[++i]);
      else if (args[i] == "--seed" && i + 1 < args.size())
        seed = std::strtoull(args[++i].c_str(), nullptr, 10);
      else
        throw UsageError("unknown selftest option " + args[i]);
    }
    AcceptanceReport rep = run_acceptance(seed, threads);
    std::cout << format_report(rep);
    return rep.all_passed ? 0 : 1;
  }
  throw UsageError("unknown verb: " + verb);
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) return usage();
  try {
    return run(args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
