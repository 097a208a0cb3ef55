// epa: command-line front end for the elliptic Poisson algebra library.
//
// Exit codes: 0 verified / success, 1 property violated (a witness is printed), 2 usage or parse error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "epa/epa.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

struct Common {
  std::string alpha = "2";
  std::string mode = "cyclotomic";
  std::uint64_t p = 7;
  bool json = false;
  std::string coords = "xyz";
  std::uint64_t seed = 1;
  int samples = 200;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--alpha", c.alpha, "alpha as a scalar expression, e.g. 2, -1/3, e")->capture_default_str();
  sub->add_option("--mode", c.mode, "coefficient field")->check(CLI::IsMember({"rational", "cyclotomic", "prime"}))->capture_default_str();
  sub->add_option("--p", c.p, "characteristic for --mode prime")->capture_default_str();
  sub->add_flag("--json", c.json, "emit JSON");
}

void add_coords(CLI::App* sub, Common& c) {
  sub->add_option("--coords", c.coords, "variable names for input and output")->check(CLI::IsMember({"xyz", "uvw"}))->capture_default_str();
}

void add_sampling(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
  sub->add_option("--samples", c.samples, "number of random samples")->capture_default_str();
}

template <class Fn>
int with_field(const Common& c, Fn&& fn) {
  if (c.mode == "rational") return fn(epa::RationalField{});
  if (c.mode == "prime") return fn(epa::PrimeField(c.p));
  return fn(epa::CyclotomicField{});
}

template <epa::CoefficientField F>
epa::PoissonStructure<F> structure(const Common& c, const F& field) {
  return {field, epa::parse_scalar(c.alpha, field)};
}

int emit(const Common& c, const json& j, const std::string& text, int code) {
  if (c.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return code;
}

/// Polynomials typed in u, v, w are translated to x, y, z for computation, and results back for printing.
template <epa::CoefficientField F>
class Presentation {
 public:
  Presentation(const Common& c, const epa::PoissonStructure<F>& P) {
    if (c.coords == "uvw") cc_.emplace(P);
  }

  const epa::VarNames& names() const { return cc_ ? epa::kUVW : epa::kXYZ; }
  epa::Poly<F> read(const std::string& text, const F& field) const {
    auto p = epa::parse_poly(text, field, names());
    return cc_ ? cc_->to_xyz(p) : p;
  }
  std::string show(const epa::Poly<F>& p) const { return cc_ ? cc_->to_uvw(p).to_string(epa::kUVW) : p.to_string(); }

 private:
  std::optional<epa::CoordinateChange<F>> cc_;
};

template <epa::CoefficientField F>
epa::AutWord<F> parse_word(const std::string& text, const F& field) {
  auto parts = epa::detail::split(text, ',');
  if (parts.size() != 3) throw epa::ParseError("word needs three entries gamma,i,j", 0);
  auto exponent = [](std::string_view s) {
    std::string t(s);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw epa::ParseError("expected an integer exponent, got '" + t + "'", 0);
    }
    if (used != t.size() && t.find_first_not_of(" \t", used) != std::string::npos)
      throw epa::ParseError("expected an integer exponent, got '" + t + "'", used);
    return epa::detail::mod3(v);
  };
  auto gamma = epa::parse_scalar(parts[0], field);
  if (gamma.is_zero()) throw epa::PreconditionError("gamma must be nonzero");
  return {gamma, exponent(parts[1]), exponent(parts[2])};
}

// ---------------------------------------------------------------------------------------------------------------

int cmd_bracket(const Common& c, const std::string& f_text, const std::string& g_text) {
  return with_field(c, [&](const auto& field) {
    auto P = structure(c, field);
    Presentation pres(c, P);
    auto r = P.bracket(pres.read(f_text, field), pres.read(g_text, field));
    return emit(c, {{"bracket", pres.show(r)}}, pres.show(r) + "\n", kOk);
  });
}

int cmd_casimir_check(const Common& c, const std::string& f_text) {
  return with_field(c, [&](const auto& field) {
    auto P = structure(c, field);
    Presentation pres(c, P);
    auto f = pres.read(f_text, field);
    for (epa::Var v : epa::kVars) {
      auto b = P.bracket(f, P.gen(v));
      if (!b.is_zero()) {
        std::string gen(1, "xyz"[static_cast<int>(v)]);
        return emit(c, {{"casimir", false}, {"generator", gen}, {"bracket", b.to_string()}},
                    "not a Casimir: {f," + gen + "} = " + b.to_string() + "\n", kViolated);
      }
    }
    return emit(c, {{"casimir", true}}, "Casimir\n", kOk);
  });
}

int cmd_casimir_space(const Common& c, unsigned degree) {
  return with_field(c, [&](const auto& field) {
    auto P = structure(c, field);
    Presentation pres(c, P);
    auto basis = epa::casimir_space(P, degree);
    json j{{"degree", degree}, {"dimension", basis.size()}, {"basis", json::array()}};
    std::string text = "dimension " + std::to_string(basis.size()) + "\n";
    for (const auto& b : basis) {
      j["basis"].push_back(pres.show(b));
      text += "  " + pres.show(b) + "\n";
    }
    return emit(c, j, text, kOk);
  });
}

int cmd_check_aut(const Common& c, const std::string& matrix) {
  return with_field(c, [&](const auto& field) {
    auto P = structure(c, field);
    auto B = epa::parse_matrix(matrix, field);
    json j{{"matrix", B.to_string()}, {"determinant", B.determinant().to_string()}};
    if (!B.invertible()) {
      j["automorphism"] = false;
      j["reason"] = "singular";
      return emit(c, j, "not an automorphism: determinant is 0\n", kViolated);
    }
    auto check = epa::is_poisson_morphism(P, B.to_endo());
    auto rel = epa::relations_9_10(P, B);
    j["automorphism"] = static_cast<bool>(check);
    j["violated_relations"] = json::array();
    for (const auto& r : rel.violated) j["violated_relations"].push_back({r.form, r.i, r.j});
    if (check) return emit(c, j, "automorphism\n", kOk);
    j["pair"] = check.violation->pair;
    j["difference"] = check.violation->difference.to_string();
    std::string text = "not an automorphism: " + check.violation->pair + " differs by " + check.violation->difference.to_string() + "\n";
    text += "violated relations:";
    for (const auto& r : rel.violated) text += " (" + std::to_string(r.form) + ":" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
    return emit(c, j, text + "\n", kViolated);
  });
}

int cmd_decompose(const Common& c, const std::string& matrix) {
  return with_field(c, [&](const auto& field) {
    auto P = structure(c, field);
    auto B = epa::parse_matrix(matrix, field);
    try {
      auto w = epa::decompose_normal_form(P, B);
      return emit(c, {{"gamma", w.gamma.to_string()}, {"i", w.i}, {"j", w.j}},
                  "phi_{" + w.gamma.to_string() + "} tau^" + std::to_string(w.i) + " sigma^" + std::to_string(w.j) + "\n", kOk);
    } catch (const epa::NotInGroup& e) {
      return emit(c, {{"in_group", false}, {"reason", e.what()}}, std::string("not in group: ") + e.what() + "\n", kViolated);
    } catch (const epa::NotInvertible&) {
      return emit(c, {{"in_group", false}, {"reason", "singular"}}, "not in group: determinant is 0\n", kViolated);
    }
  });
}

int cmd_word_mul(const Common& c, const std::string& w1_text, const std::string& w2_text) {
  return with_field(c, [&](const auto& field) {
    auto w1 = parse_word(w1_text, field), w2 = parse_word(w2_text, field);
    auto w = epa::word_multiply(field, w1, w2);
    auto composed = epa::compose(epa::word_to_matrix(field, w1), epa::word_to_matrix(field, w2));
    const bool agrees = epa::word_to_matrix(field, w) == composed;
    json j{{"gamma", w.gamma.to_string()}, {"i", w.i}, {"j", w.j}, {"matches_composition", agrees}};
    std::string text = w.to_string() + "\n";
    if (!agrees) text += "mismatch with matrix composition " + composed.to_string() + "\n";
    return emit(c, j, text, agrees ? kOk : kViolated);
  });
}

int cmd_degenerate(const Common& c) {
  return with_field(c, [&](const auto& field) {
    auto P = structure(c, field);
    const bool factors = epa::verify_factorization(P);
    auto br = epa::degenerate_brackets(P);
    auto stated = epa::expected_mu(P);
    const auto uvw = [](const auto& p) { return p.to_string(epa::kUVW); };
    json j{{"factorization", factors},     {"uv", uvw(br.uvw[0])},       {"vw", uvw(br.uvw[1])},
           {"wu", uvw(br.uvw[2])},         {"mu", br.mu.to_string()},     {"log_canonical", br.log_canonical},
           {"stated_mu", stated.to_string()}, {"mu_matches_stated", br.mu == stated}};
    std::string text = std::string("3C = u*v*w: ") + (factors ? "yes" : "no") + "\n";
    text += "{u,v} = " + uvw(br.uvw[0]) + "\n{v,w} = " + uvw(br.uvw[1]) + "\n{w,u} = " + uvw(br.uvw[2]) + "\n";
    text += "mu = " + br.mu.to_string() + " (3*alpha*(e^2-e) = " + stated.to_string() + ")\n";
    return emit(c, j, text, factors && br.log_canonical ? kOk : kViolated);
  });
}

int cmd_circulant(const Common& c, const std::string& k_text) {
  return with_field(c, [&](const auto& field) {
    auto P = structure(c, field);
    auto k = epa::parse_scalar_list(k_text, field);
    if (k.size() != 3) throw epa::ParseError("--k needs three scalars k1,k2,k3", 0);
    using F = std::decay_t<decltype(field)>;
    epa::CirculantMap<F> m(field, k[0], k[1], k[2]);
    const bool aut = epa::circulant_check(P, m);
    json j{{"matrix", m.matrix().to_string()}, {"determinant", m.matrix().determinant().to_string()}, {"automorphism", aut}};
    return emit(c, j, std::string(aut ? "automorphism" : "not an automorphism") + " (determinant " + m.matrix().determinant().to_string() + ")\n",
                aut ? kOk : kViolated);
  });
}

int cmd_derivation_space(const Common& c, unsigned degree, unsigned steps) {
  return with_field(c, [&](const auto& field) {
    auto P = structure(c, field);
    auto basis = epa::poisson_derivation_space(P, degree);
    json j{{"degree", degree}, {"dimension", basis.size()}, {"basis", json::array()}};
    std::string text = "dimension " + std::to_string(basis.size()) + "\n";
    bool ok = true;
    for (const auto& D : basis) {
      const bool center = epa::casimir_image_check(P, D);
      auto verdict = epa::nilpotency_probe(P, D, steps);
      ok = ok && center && verdict.kind != epa::NilpotencyVerdict::Kind::vanishes_by;
      j["basis"].push_back({{"derivation", D.to_string()}, {"casimir_image", center}, {"nilprobe", verdict.to_string()}});
      text += "  " + D.to_string() + "\n    D(C) in K[C]: " + (center ? "yes" : "no") + ", " + verdict.to_string() + "\n";
    }
    return emit(c, j, text, ok ? kOk : kViolated);
  });
}

struct NilprobeArgs {
  std::string dx, dy, dz, inner;
  bool euler = false;
  unsigned steps = 8;
};

int cmd_nilprobe(const Common& c, const NilprobeArgs& a) {
  return with_field(c, [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    auto P = structure(c, field);
    auto D = epa::Derivation<F>::zero(field);
    if (a.euler) {
      D = epa::Derivation<F>::euler(field);
    } else if (!a.inner.empty()) {
      D = epa::inner_derivation(P, epa::parse_poly(a.inner, field));
    } else {
      auto img = [&](const std::string& s) { return s.empty() ? epa::Poly<F>(field) : epa::parse_poly(s, field); };
      D = epa::Derivation<F>({img(a.dx), img(a.dy), img(a.dz)});
    }
    auto verdict = epa::nilpotency_probe(P, D, a.steps);
    json j{{"derivation", D.to_string()}, {"poisson", static_cast<bool>(epa::is_poisson_derivation(P, D))}, {"verdict", verdict.to_string()}};
    return emit(c, j, verdict.to_string() + "\n", kOk);
  });
}

int cmd_classify_fq(const Common& c, unsigned threads) {
  epa::PrimeField field(c.p);
  auto rep = epa::enumerate_fq(field, epa::parse_scalar(c.alpha, field), threads);
  std::string text = "GF(" + std::to_string(rep.p) + "), alpha = " + std::to_string(rep.alpha) + "\n";
  text += "enumerated: " + std::to_string(rep.enumerated_count) + "\n";
  text += "generated closure: " + std::to_string(rep.closure_count) + (rep.closure_subset ? " (contained)" : " (NOT contained)") + "\n";
  text += std::string("counts match: ") + (rep.match ? "yes" : "no") + "\n";
  return emit(c, epa::to_json(rep), text, rep.closure_subset ? kOk : kViolated);
}

int cmd_lemma4(const Common& c, int bound) {
  return with_field(c, [&](const auto& field) {
    auto P = structure(c, field);
    auto res = epa::lemma4_search(P, bound);
    json j{{"bound", bound}, {"vanishing_triples", res.vanishing_triples}, {"counterexamples", json::array()}};
    std::string text = "vanishing triples: " + std::to_string(res.vanishing_triples) + ", counterexamples: " + std::to_string(res.counterexamples.size()) + "\n";
    for (const auto& t : res.counterexamples) {
      j["counterexamples"].push_back({t[0].to_string(), t[1].to_string(), t[2].to_string()});
      text += "  (" + t[0].to_string() + ", " + t[1].to_string() + ", " + t[2].to_string() + ")\n";
    }
    return emit(c, j, text, res.counterexamples.empty() ? kOk : kViolated);
  });
}

int cmd_identities(const Common& c) {
  return with_field(c, [&](const auto& field) {
    auto P = structure(c, field);
    epa::sampling::Rng rng(c.seed);
    json j;
    std::string text;
    bool ok = true;
    auto record = [&](const std::string& name, bool holds) {
      j[name] = holds;
      text += name + ": " + (holds ? "ok" : "FAILED") + "\n";
      ok = ok && holds;
    };

    int jacobi_failures = 0, leibniz_failures = 0;
    for (int t = 0; t < c.samples; ++t) {
      auto f = epa::sampling::random_poly(field, rng), g = epa::sampling::random_poly(field, rng), h = epa::sampling::random_poly(field, rng);
      if (!epa::jacobi_defect(P, f, g, h).is_zero()) ++jacobi_failures;
      if (!epa::leibniz_defect(P, f, g, h).is_zero()) ++leibniz_failures;
    }
    record("jacobi", jacobi_failures == 0);
    record("leibniz", leibniz_failures == 0);
    record("casimir", epa::is_casimir(P, P.casimir()));

    if (field.primitive_cbrt_unity()) {
      auto s = epa::sigma(field), t = epa::tau(field), id = epa::LinearMap<std::decay_t<decltype(field)>>::identity(field);
      auto g1 = epa::sampling::random_nonzero_scalar(field, rng), g2 = epa::sampling::random_nonzero_scalar(field, rng);
      record("phi_g1 phi_g2 = phi_g1g2", epa::compose(epa::phi(field, g1), epa::phi(field, g2)) == epa::phi(field, g1 * g2));
      record("sigma^3 = id", epa::compose(s, epa::compose(s, s)) == id);
      record("tau^3 = id", epa::compose(t, epa::compose(t, t)) == id);
      record("sigma tau = phi_e tau sigma", epa::compose(s, t) == epa::compose(epa::phi(field, *field.primitive_cbrt_unity()), epa::compose(t, s)));
      record("phi central", epa::compose(s, epa::phi(field, g1)) == epa::compose(epa::phi(field, g1), s) &&
                                epa::compose(t, epa::phi(field, g1)) == epa::compose(epa::phi(field, g1), t));
    }
    return emit(c, j, text, ok ? kOk : kViolated);
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic Poisson algebra toolkit"};
  app.require_subcommand(1);

  Common common;
  std::string f_text, g_text, matrix, w1, w2, k_text = "1,0,0";
  unsigned degree = 3, threads = 1;
  int bound = 2;
  NilprobeArgs nil;
  Common circulant_common;
  circulant_common.mode = "rational";
  circulant_common.alpha = "1";
  Common fq_common;
  fq_common.alpha = "3";
  Common degenerate_common;
  degenerate_common.alpha = "1";

  auto* bracket = app.add_subcommand("bracket", "compute {f, g}");
  add_common(bracket, common);
  add_coords(bracket, common);
  bracket->add_option("f", f_text)->required();
  bracket->add_option("g", g_text)->required();

  auto* casimir_check = app.add_subcommand("casimir-check", "decide whether f is central");
  add_common(casimir_check, common);
  add_coords(casimir_check, common);
  casimir_check->add_option("f", f_text)->required();

  auto* casimir_space = app.add_subcommand("casimir-space", "basis of homogeneous Casimir elements of a degree");
  add_common(casimir_space, common);
  add_coords(casimir_space, common);
  casimir_space->add_option("--degree", degree)->capture_default_str();

  auto* check_aut = app.add_subcommand("check-aut", "is a linear map a Poisson automorphism");
  add_common(check_aut, common);
  check_aut->add_option("--matrix", matrix, "rows separated by ';', entries by ','")->required();

  auto* decompose = app.add_subcommand("decompose", "normal form phi_gamma tau^i sigma^j of a matrix");
  add_common(decompose, common);
  decompose->add_option("--matrix", matrix)->required();

  auto* word_mul = app.add_subcommand("word-mul", "product of two normal-form words gamma,i,j");
  add_common(word_mul, common);
  word_mul->add_option("w1", w1)->required();
  word_mul->add_option("w2", w2)->required();

  auto* degenerate = app.add_subcommand("degenerate", "factorization and (u,v,w) brackets when alpha^3 = 1");
  add_common(degenerate, degenerate_common);

  auto* circulant = app.add_subcommand("circulant", "circulant maps when alpha^3 = 1 over the rationals");
  add_common(circulant, circulant_common);
  circulant->add_option("--k", k_text, "k1,k2,k3")->capture_default_str();

  auto* derivation_space = app.add_subcommand("derivation-space", "Poisson derivations with homogeneous images of a degree");
  add_common(derivation_space, common);
  derivation_space->add_option("--degree", degree)->capture_default_str();
  derivation_space->add_option("--steps", nil.steps, "iterate bound for the nilpotency probe")->capture_default_str();

  auto* nilprobe = app.add_subcommand("nilprobe", "iterate a derivation on the generators");
  add_common(nilprobe, common);
  nilprobe->add_option("--dx", nil.dx);
  nilprobe->add_option("--dy", nil.dy);
  nilprobe->add_option("--dz", nil.dz);
  nilprobe->add_option("--inner", nil.inner, "use ad_f");
  nilprobe->add_flag("--euler", nil.euler, "use the Euler derivation");
  nilprobe->add_option("--steps", nil.steps)->capture_default_str();

  auto* classify_fq = app.add_subcommand("classify-fq", "enumerate bracket-preserving linear maps over GF(p)");
  classify_fq->add_option("--p", fq_common.p)->capture_default_str();
  classify_fq->add_option("--alpha", fq_common.alpha)->capture_default_str();
  classify_fq->add_flag("--json", fq_common.json);
  classify_fq->add_option("--threads", threads)->capture_default_str();

  auto* lemma4 = app.add_subcommand("lemma4", "search for non-proportional linear solutions of the Hesse cubic");
  add_common(lemma4, common);
  lemma4->add_option("--bound", bound)->capture_default_str();

  auto* identities = app.add_subcommand("identities", "spot-check the algebra axioms and group relations");
  add_common(identities, common);
  add_sampling(identities, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*bracket) return cmd_bracket(common, f_text, g_text);
    if (*casimir_check) return cmd_casimir_check(common, f_text);
    if (*casimir_space) return cmd_casimir_space(common, degree);
    if (*check_aut) return cmd_check_aut(common, matrix);
    if (*decompose) return cmd_decompose(common, matrix);
    if (*word_mul) return cmd_word_mul(common, w1, w2);
    if (*degenerate) return cmd_degenerate(degenerate_common);
    if (*circulant) return cmd_circulant(circulant_common, k_text);
    if (*derivation_space) return cmd_derivation_space(common, degree, nil.steps);
    if (*nilprobe) return cmd_nilprobe(common, nil);
    if (*classify_fq) return cmd_classify_fq(fq_common, threads);
    if (*lemma4) return cmd_lemma4(common, bound);
    if (*identities) return cmd_identities(common);
  } catch (const epa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
