#include "cpw/suites.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace cpw {

const std::vector<std::string> kSuiteNames = {"triquiv",   "commint", "simplicity",
                                              "primeness", "baire",   "algebra"};

SystemModel parse_config(const nlohmann::json& config) {
  if (!config.is_object()) fail(Errc::ConfigError, "$: expected a configuration object");
  if (!config.contains("model") || !config.at("model").is_string())
    fail(Errc::ConfigError, "model: expected a string");
  std::string model = config.at("model").get<std::string>();
  if (model == "finite") {
    if (!config.contains("permutation") || !config.at("permutation").is_array())
      fail(Errc::ConfigError, "permutation: expected an array of integers");
    std::vector<int> perm;
    for (const auto& v : config.at("permutation")) {
      if (!v.is_number_integer())
        fail(Errc::ConfigError, "permutation: entries must be integers");
      perm.push_back(v.get<int>());
    }
    try {
      return SystemModel::finite_permutation(std::move(perm));
    } catch (const Error& e) {
      fail(Errc::ConfigError, std::string("permutation: ") + e.what());
    }
  }
  if (model == "shift") return SystemModel::integer_shift();
  if (model == "circle") {
    if (!config.contains("q") || !config.at("q").is_string())
      fail(Errc::ConfigError, "q: expected a scalar string");
    try {
      return SystemModel::circle_rotation(parse_scalar(config.at("q").get<std::string>()));
    } catch (const Error& e) {
      fail(Errc::ConfigError, std::string("q: ") + e.what());
    }
  }
  fail(Errc::ConfigError, "model: unknown model '" + model + "'");
}

nlohmann::json config_echo(const SystemModel& s) {
  switch (s.kind()) {
    case ModelKind::FinitePermutation:
      return {{"model", "finite"}, {"permutation", s.permutation()}};
    case ModelKind::IntegerShift:
      return {{"model", "shift"}};
    case ModelKind::CircleRotation:
      return {{"model", "circle"}, {"q", format_scalar(s.rotation())}};
  }
  return {};
}

GaussianRational sample_scalar(std::mt19937_64& rng) {
  static const GaussianRational table[7] = {
      GaussianRational(1),
      GaussianRational(-1),
      GaussianRational::i(),
      -GaussianRational::i(),
      GaussianRational(make_rational(1, 2)),
      GaussianRational(make_rational(-1, 2)),
      GaussianRational(2)};
  return table[rng() % 7];
}

namespace {

long long sample_label(const SystemModel& s, std::mt19937_64& rng) {
  if (s.kind() == ModelKind::FinitePermutation)
    return static_cast<long long>(rng() % static_cast<std::uint64_t>(s.finite_size()));
  return -3 + static_cast<long long>(rng() % 7);
}

}  // namespace

CoeffFn sample_coefficient(const SystemModel& s, std::mt19937_64& rng) {
  CoeffFn acc = CoeffFn::zero(s);
  std::uint64_t atoms = 1 + rng() % 2;
  for (std::uint64_t i = 0; i < atoms; ++i)
    acc = coeff_add(s, acc,
                    coeff_scale(sample_scalar(rng), CoeffFn::basis(s, sample_label(s, rng))));
  return acc;
}

CrossedElement sample_element(const SystemModel& s, std::mt19937_64& rng, bool nonzero) {
  while (true) {
    CrossedElement acc(s);
    std::uint64_t terms = 1 + rng() % 4;
    for (std::uint64_t i = 0; i < terms; ++i) {
      long long degree = -3 + static_cast<long long>(rng() % 7);
      CoeffFn coeff = coeff_scale(sample_scalar(rng), CoeffFn::basis(s, sample_label(s, rng)));
      acc = x_add(acc, CrossedElement::monomial(s, coeff, degree));
    }
    if (!nonzero || !acc.is_zero()) return acc;
  }
}

ItemStatus CheckSuiteResult::status() const {
  bool any_unsupported = false;
  for (const CheckItem& item : items) {
    if (item.status == ItemStatus::Fail) return ItemStatus::Fail;
    if (item.status == ItemStatus::Unsupported) any_unsupported = true;
  }
  return any_unsupported ? ItemStatus::Unsupported : ItemStatus::Pass;
}

int CheckSuiteResult::exit_code() const {
  switch (status()) {
    case ItemStatus::Pass: return 0;
    case ItemStatus::Fail: return 2;
    case ItemStatus::Unsupported: return 3;
  }
  return 2;
}

namespace {

const char* status_name(ItemStatus status) {
  switch (status) {
    case ItemStatus::Pass: return "pass";
    case ItemStatus::Fail: return "fail";
    case ItemStatus::Unsupported: return "unsupported";
  }
  return "fail";
}

}  // namespace

nlohmann::json CheckSuiteResult::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["suite"] = suite;
  j["system"] = system;
  j["status"] = status_name(status());
  nlohmann::json item_list = nlohmann::json::array();
  for (const CheckItem& item : items)
    item_list.push_back(
        {{"name", item.name}, {"status", status_name(item.status)}, {"detail", item.detail}});
  j["items"] = item_list;
  return j;
}

std::string CheckSuiteResult::human_text() const {
  std::ostringstream out;
  out << "suite " << suite << " on " << system.dump() << "\n";
  for (const CheckItem& item : items) {
    out << "  [" << status_name(item.status) << "] " << item.name;
    out << " (" << item.elapsed_ms << " ms)";
    if (item.status != ItemStatus::Pass) out << "  " << item.detail.dump();
    out << "\n";
  }
  out << "overall: " << status_name(status()) << "\n";
  return out.str();
}

namespace {

class ItemRunner {
 public:
  explicit ItemRunner(std::vector<CheckItem>& items) : items_(items) {}

  template <typename Fn>
  void run(const std::string& name, Fn&& fn) {
    CheckItem item;
    item.name = name;
    auto start = std::chrono::steady_clock::now();
    try {
      fn(item);
    } catch (const Error& e) {
      switch (e.code()) {
        case Errc::Unsupported:
        case Errc::NotUnital:
        case Errc::NotRegularModel:
        case Errc::PreconditionFailed:
          item.status = ItemStatus::Unsupported;
          item.detail = {{"code", errc_name(e.code())}, {"reason", e.what()}};
          break;
        default:
          item.status = ItemStatus::Fail;
          item.detail = {{"code", errc_name(e.code())}, {"error", e.what()}};
          break;
      }
    }
    auto stop = std::chrono::steady_clock::now();
    item.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    items_.push_back(std::move(item));
  }

 private:
  std::vector<CheckItem>& items_;
};

nlohmann::json counterexample(std::initializer_list<std::pair<std::string, std::string>> kv) {
  nlohmann::json j;
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

void suite_algebra(const SystemModel& s, const CheckOptions& options, ItemRunner& runner) {
  runner.run("twisted-convolution-associativity", [&](CheckItem& item) {
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.samples; ++i) {
      CrossedElement f = sample_element(s, rng, false);
      CrossedElement g = sample_element(s, rng, false);
      CrossedElement h = sample_element(s, rng, false);
      if (!x_equal(x_mul(x_mul(f, g), h), x_mul(f, x_mul(g, h)))) {
        item.status = ItemStatus::Fail;
        item.detail = counterexample({{"f", format_element(f)},
                                      {"g", format_element(g)},
                                      {"h", format_element(h)}});
        return;
      }
    }
    item.detail = {{"samples", options.samples}};
  });
  runner.run("distributivity", [&](CheckItem& item) {
    std::mt19937_64 rng(options.seed + 1);
    for (int i = 0; i < options.samples; ++i) {
      CrossedElement f = sample_element(s, rng, false);
      CrossedElement g = sample_element(s, rng, false);
      CrossedElement h = sample_element(s, rng, false);
      bool left = x_equal(x_mul(x_add(f, g), h), x_add(x_mul(f, h), x_mul(g, h)));
      bool right = x_equal(x_mul(h, x_add(f, g)), x_add(x_mul(h, f), x_mul(h, g)));
      if (!left || !right) {
        item.status = ItemStatus::Fail;
        item.detail = counterexample({{"f", format_element(f)},
                                      {"g", format_element(g)},
                                      {"h", format_element(h)}});
        return;
      }
    }
    item.detail = {{"samples", options.samples}};
  });
  runner.run("scalar-compatibility", [&](CheckItem& item) {
    std::mt19937_64 rng(options.seed + 2);
    for (int i = 0; i < options.samples; ++i) {
      GaussianRational c = sample_scalar(rng);
      CrossedElement f = sample_element(s, rng, false);
      CrossedElement g = sample_element(s, rng, false);
      CrossedElement scaled = x_scale(c, x_mul(f, g));
      if (!x_equal(scaled, x_mul(x_scale(c, f), g)) ||
          !x_equal(scaled, x_mul(f, x_scale(c, g)))) {
        item.status = ItemStatus::Fail;
        item.detail = counterexample({{"c", format_scalar(c)},
                                      {"f", format_element(f)},
                                      {"g", format_element(g)}});
        return;
      }
    }
    item.detail = {{"samples", options.samples}};
  });
  runner.run("monomial-rule", [&](CheckItem& item) {
    std::mt19937_64 rng(options.seed + 3);
    for (int i = 0; i < options.samples; ++i) {
      CoeffFn a = sample_coefficient(s, rng);
      CoeffFn b = sample_coefficient(s, rng);
      long long n = -3 + static_cast<long long>(rng() % 7);
      long long m = -3 + static_cast<long long>(rng() % 7);
      CrossedElement lhs =
          x_mul(CrossedElement::monomial(s, a, n), CrossedElement::monomial(s, b, m));
      CrossedElement rhs =
          CrossedElement::monomial(s, coeff_mul(s, a, sigma_hat(s, b, n)), n + m);
      if (!x_equal(lhs, rhs)) {
        item.status = ItemStatus::Fail;
        item.detail = counterexample({{"lhs", format_element(lhs)}, {"rhs", format_element(rhs)}});
        return;
      }
    }
    item.detail = {{"samples", options.samples}};
  });
  runner.run("e-map-bimodule", [&](CheckItem& item) {
    std::mt19937_64 rng(options.seed + 4);
    for (int i = 0; i < options.samples; ++i) {
      CoeffFn a = sample_coefficient(s, rng);
      CoeffFn b = sample_coefficient(s, rng);
      CrossedElement f = sample_element(s, rng, false);
      CoeffFn lhs = e_map(x_mul(CrossedElement::monomial(s, a, 0),
                                x_mul(f, CrossedElement::monomial(s, b, 0))));
      CoeffFn rhs = coeff_mul(s, coeff_mul(s, a, e_map(f)), b);
      if (!coeff_equal(lhs, rhs)) {
        item.status = ItemStatus::Fail;
        item.detail = counterexample({{"f", format_element(f)}});
        return;
      }
    }
    item.detail = {{"samples", options.samples}};
  });
  runner.run("delta-inverse", [&](CheckItem& item) {
    for (long long n = 1; n <= 4; ++n) {
      if (!x_equal(x_mul(delta_power(s, n), delta_power(s, -n)), unit_element(s))) {
        item.status = ItemStatus::Fail;
        item.detail = {{"n", n}};
        return;
      }
    }
    item.detail = {{"checked", "d^n * d^-n = 1 for n = 1..4"}};
  });
}

void suite_triquiv(const SystemModel& s, const CheckOptions& options, ItemRunner& runner) {
  bool dense = aperiodic_points_dense(s);
  runner.run("commutant-membership-equivalence", [&](CheckItem& item) {
    std::mt19937_64 rng(options.seed);
    for (int i = 0; i < options.samples; ++i) {
      CrossedElement f = sample_element(s, rng, false);
      bool structural = in_commutant_structural(s, f).member;
      bool direct = in_commutant_direct(s, f, default_probe_radius(f));
      if (structural != direct) {
        item.status = ItemStatus::Fail;
        item.detail = counterexample({{"f", format_element(f)}});
        return;
      }
    }
    item.detail = {{"samples", options.samples}};
  });
  runner.run("maximal-abelian-matches-aperiodic-density", [&](CheckItem& item) {
    bool abelian = is_maximal_abelian(s);
    item.detail = {{"maximal_abelian", abelian}, {"aperiodic_dense", dense}};
    if (abelian != dense) item.status = ItemStatus::Fail;
  });
  if (dense) {
    runner.run("ideal-meets-coefficient-algebra", [&](CheckItem& item) {
      std::mt19937_64 rng(options.seed + 1);
      nlohmann::json sample_cert;
      for (int i = 0; i < options.samples; ++i) {
        CrossedElement f = sample_element(s, rng, true);
        WitnessInA wa = witness_in_A(s, f);
        bool ok = !wa.witness.is_zero() &&
                  x_equal(replay_chain(f, wa.cert),
                          CrossedElement::monomial(s, wa.witness, 0));
        if (!ok) {
          item.status = ItemStatus::Fail;
          item.detail = counterexample({{"f", format_element(f)}});
          return;
        }
        if (i == 0) sample_cert = certificate_to_json(wa.cert);
      }
      item.detail = {{"samples", options.samples}, {"certificate", sample_cert}};
    });
  } else {
    long long n = smallest_periodic_n(s).value();
    runner.run("zero-intersection-generator", [&](CheckItem& item) {
      ZeroIntersectionGenerator zig = zero_intersection_generator(s, n);
      item.detail = {{"n", n}, {"generator", format_element(zig.gen)}};
    });
    runner.run("paired-form-windows-3-4-5", [&](CheckItem& item) {
      ZeroIntersectionGenerator zig = zero_intersection_generator(s, n);
      for (int bound : {3, 4, 5}) {
        if (!verify_paired_form(s, n, zig.gen, Window{bound, bound})) {
          item.status = ItemStatus::Fail;
          item.detail = {{"window", bound}};
          return;
        }
      }
      item.detail = {{"windows", {3, 4, 5}}};
    });
    runner.run("coefficient-intersection-empty", [&](CheckItem& item) {
      ZeroIntersectionGenerator zig = zero_intersection_generator(s, n);
      IdealWindowSpan span =
          ideal_window_span(s, {zig.gen}, Window{options.degree, options.radius});
      std::vector<CoeffFn> meet = intersect_with_A_window(span);
      item.detail = {{"window_degree", options.degree}, {"intersection_dim", meet.size()}};
      if (!meet.empty()) item.status = ItemStatus::Fail;
    });
    runner.run("commutant-strictly-larger", [&](CheckItem& item) {
      ZeroIntersectionGenerator zig = zero_intersection_generator(s, n);
      CrossedElement beyond = CrossedElement::monomial(s, zig.f, n);
      bool member = in_commutant_structural(s, beyond).member &&
                    in_commutant_direct(s, beyond, default_probe_radius(beyond));
      item.detail = {{"element", format_element(beyond)}};
      if (!member) item.status = ItemStatus::Fail;
    });
  }
}

void suite_commint(const SystemModel& s, const CheckOptions& options, ItemRunner& runner) {
  runner.run("commutant-witness", [&](CheckItem& item) {
    std::mt19937_64 rng(options.seed);
    nlohmann::json sample_cert;
    for (int i = 0; i < options.samples; ++i) {
      CrossedElement f = sample_element(s, rng, true);
      WitnessInCommutant wc = witness_in_commutant(s, f);
      bool ok = !wc.witness.is_zero() && in_commutant_structural(s, wc.witness).member &&
                x_equal(replay_chain(f, wc.cert), wc.witness) &&
                wc.iterations <= static_cast<int>(f.terms().size());
      if (!ok) {
        item.status = ItemStatus::Fail;
        item.detail = counterexample({{"f", format_element(f)}});
        return;
      }
      if (i == 0) sample_cert = certificate_to_json(wc.cert);
    }
    item.detail = {{"samples", options.samples}, {"certificate", sample_cert}};
  });
}

void suite_simplicity(const SystemModel& s, const CheckOptions& options, ItemRunner& runner) {
  bool minimal = is_minimal(s);
  runner.run("minimality", [&](CheckItem& item) { item.detail = {{"minimal", minimal}}; });
  if (!minimal) {
    Point mu = s.kind() == ModelKind::FinitePermutation
                   ? finite_point(0)
                   : circle_point(GaussianRational(1));
    runner.run("proper-ideal-from-orbit", [&](CheckItem& item) {
      ProperIdealResult result = proper_ideal_from_nondense_orbit(s, mu, options.degree);
      std::vector<std::string> gens;
      for (const CrossedElement& g : result.gens) gens.push_back(format_element(g));
      item.detail = {{"point", format_point(mu)}, {"generators", gens}};
      if (!result.check) item.status = ItemStatus::Fail;
    });
    runner.run("unit-outside-ideal", [&](CheckItem& item) {
      ProperIdealResult result = proper_ideal_from_nondense_orbit(s, mu, options.degree);
      auto cert = contains_unit(s, result.gens, Window{options.degree, options.radius});
      item.detail = {{"window_degree", options.degree}};
      if (cert) item.status = ItemStatus::Fail;
    });
    return;
  }
  switch (s.kind()) {
    case ModelKind::FinitePermutation:
      runner.run("finite-minimal-observation", [&](CheckItem& item) {
        // A minimal finite system still has the proper ideal (1 - d^N):
        // the infinite-character-space hypothesis genuinely matters.
        long long n = s.finite_size();
        CrossedElement gen = x_sub(unit_element(s), delta_power(s, n));
        auto cert = contains_unit(s, {gen}, Window{5, 5});
        item.detail = {{"generator", format_element(gen)},
                       {"note", "unit not reachable; finite character space"}};
        if (cert) item.status = ItemStatus::Fail;
      });
      break;
    case ModelKind::IntegerShift:
      runner.run("indicator-in-ideal", [&](CheckItem& item) {
        std::mt19937_64 rng(options.seed + 2);
        int samples = std::min(options.samples, 50);
        for (int i = 0; i < samples; ++i) {
          CrossedElement f = sample_element(s, rng, true);
          long long n1 = f.support_degrees().front();
          long long x = f.coefficient(n1).entries().front().first;
          CrossedElement target = CrossedElement::monomial(s, CoeffFn::basis(s, x), 0);
          bool found = false;
          for (int w = 1; w <= 6 && !found; ++w) {
            IdealWindowSpan span = ideal_window_span(s, {f}, Window{w, w + 3});
            auto cert = membership(span, target);
            if (cert && x_equal(replay_lincomb(span, cert->coefficients), target)) found = true;
          }
          if (!found) {
            item.status = ItemStatus::Fail;
            item.detail = counterexample({{"f", format_element(f)}});
            return;
          }
        }
        item.detail = {{"samples", samples}};
      });
      break;
    case ModelKind::CircleRotation:
      runner.run("unit-certificate", [&](CheckItem& item) {
        CoeffFn t_minus_1 = coeff_add(s, CoeffFn::basis(s, 1), coeff_neg(CoeffFn::unit(s)));
        std::vector<CrossedElement> gens = {CrossedElement::monomial(s, t_minus_1, 0)};
        auto cert = contains_unit(s, gens, Window{1, 1});
        if (!cert) {
          item.status = ItemStatus::Fail;
          item.detail = {{"generator", "t-1"}};
          return;
        }
        IdealWindowSpan span = ideal_window_span(s, gens, Window{1, 1});
        bool ok = x_equal(replay_lincomb(span, cert->coefficients), unit_element(s));
        item.detail = {{"certificate", certificate_to_json(*cert)}};
        if (!ok) item.status = ItemStatus::Fail;
      });
      break;
  }
}

void suite_primeness(const SystemModel& s, const CheckOptions& options, ItemRunner& runner) {
  bool transitive = is_topologically_transitive(s);
  runner.run("transitivity", [&](CheckItem& item) { item.detail = {{"transitive", transitive}}; });
  if (!transitive) {
    runner.run("prime-refutation", [&](CheckItem& item) {
      PrimeRefutation result = prime_refutation(s, Window{options.degree, options.radius});
      std::vector<std::string> g1, g2;
      for (const CrossedElement& g : result.gens1) g1.push_back(format_element(g));
      for (const CrossedElement& g : result.gens2) g2.push_back(format_element(g));
      item.detail = {{"gens1", g1}, {"gens2", g2}};
      if (!result.verification) item.status = ItemStatus::Fail;
    });
    return;
  }
  runner.run("common-element-search", [&](CheckItem& item) {
    std::mt19937_64 rng(options.seed + 3);
    int samples = std::min(options.samples, 50);
    Window w = s.kind() == ModelKind::FinitePermutation ? Window{5, options.radius}
                                                        : Window{6, 6};
    nlohmann::json sample_cert;
    for (int i = 0; i < samples; ++i) {
      CrossedElement f = sample_element(s, rng, true);
      CrossedElement g = sample_element(s, rng, true);
      auto cert = prime_witness(s, f, g, w);
      if (!cert) {
        item.status = ItemStatus::Fail;
        item.detail = counterexample({{"f", format_element(f)}, {"g", format_element(g)}});
        return;
      }
      IdealWindowSpan span_f = ideal_window_span(s, {f}, w);
      IdealWindowSpan span_g = ideal_window_span(s, {g}, w);
      CrossedElement via_f = replay_lincomb(span_f, cert->coefficients);
      CrossedElement via_g = replay_lincomb(span_g, cert->coefficients_second);
      if (via_f.is_zero() || !x_equal(via_f, via_g)) {
        item.status = ItemStatus::Fail;
        item.detail = counterexample({{"f", format_element(f)}, {"g", format_element(g)}});
        return;
      }
      if (i == 0) sample_cert = certificate_to_json(*cert);
    }
    item.detail = {{"samples", samples}, {"certificate", sample_cert}};
  });
}

void suite_baire(const SystemModel& s, const CheckOptions& options, ItemRunner& runner) {
  runner.run("baire-criterion", [&](CheckItem& item) {
    int n_max = std::max(8, options.degree);
    item.detail = {{"n_max", n_max}};
    if (!check_baire_lemma(s, n_max)) item.status = ItemStatus::Fail;
  });
  runner.run("invariant-open-separation", [&](CheckItem& item) {
    auto sets = disjoint_invariant_open_sets(s);
    if (!sets) {
      item.detail = {{"note", "transitive system; no separation exists"}};
      return;
    }
    const PointSet& o1 = sets->first;
    const PointSet& o2 = sets->second;
    bool ok = !o1.is_empty() && !o2.is_empty() && intersect(s, o1, o2).is_empty();
    for (const PointSet* o : {&o1, &o2}) {
      std::vector<Point> image;
      for (const Point& p : o->points()) image.push_back(apply_sigma_tilde(s, p, 1));
      if (!(PointSet::finite(s, image) == *o)) ok = false;
    }
    int covered = static_cast<int>(o1.points().size() + o2.points().size());
    if (covered != s.finite_size()) ok = false;
    item.detail = {{"o1", format_point_set(o1)}, {"o2", format_point_set(o2)}};
    if (!ok) item.status = ItemStatus::Fail;
  });
  runner.run("full-period-transitivity", [&](CheckItem& item) {
    for (int n0 = 1; n0 <= 6; ++n0)
      if (!verify_toptraper(s, n0)) {
        item.status = ItemStatus::Fail;
        item.detail = {{"n0", n0}};
        return;
      }
    item.detail = {{"n0_max", 6}};
  });
  runner.run("separated-neighborhood", [&](CheckItem& item) {
    Point p = s.kind() == ModelKind::CircleRotation ? circle_point(GaussianRational(1))
                                                    : shift_point(0);
    int m = 3;
    int n = 3;
    if (s.kind() == ModelKind::FinitePermutation) {
      // Longest cycle gives the widest stretch of distinct iterates.
      int best_point = 0;
      int best_len = 0;
      for (int i = 0; i < s.finite_size(); ++i) {
        Orbit o = orbit(s, finite_point(i), s.finite_size());
        if (static_cast<int>(o.points.size()) > best_len) {
          best_len = static_cast<int>(o.points.size());
          best_point = i;
        }
      }
      p = finite_point(best_point);
      m = 0;
      n = best_len - 1;
    }
    PointSet u = separated_neighborhood(s, p, m, n);
    item.detail = {{"point", format_point(p)}, {"neighborhood", format_point_set(u)}};
    if (!(u.contains(p) && u.points().size() == 1)) item.status = ItemStatus::Fail;
  });
}

}  // namespace

CheckSuiteResult run_check_suite(const std::string& suite, const SystemModel& s,
                                 const nlohmann::json& system_echo,
                                 const CheckOptions& options) {
  if (options.degree < 1 || options.radius < 1 || options.samples < 1)
    fail(Errc::ConfigError, "options: degree, radius and samples must be positive");
  CheckSuiteResult result;
  result.suite = suite;
  result.system = system_echo;
  ItemRunner runner(result.items);
  if (suite == "algebra")
    suite_algebra(s, options, runner);
  else if (suite == "triquiv")
    suite_triquiv(s, options, runner);
  else if (suite == "commint")
    suite_commint(s, options, runner);
  else if (suite == "simplicity")
    suite_simplicity(s, options, runner);
  else if (suite == "primeness")
    suite_primeness(s, options, runner);
  else if (suite == "baire")
    suite_baire(s, options, runner);
  else
    fail(Errc::ConfigError, "suite: unknown suite '" + suite + "'");
  return result;
}

nlohmann::json analyze(const SystemModel& s, int per_bound) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["system"] = config_echo(s);
  bool dense = aperiodic_points_dense(s);
  bool abelian = is_maximal_abelian(s);
  j["properties"] = {{"aperiodic_dense", dense},
                     {"minimal", is_minimal(s)},
                     {"transitive", is_topologically_transitive(s)},
                     {"maximal_abelian", abelian}};
  j["consistency"] = {{"maximal_abelian_equals_aperiodic_dense", abelian == dense}};
  nlohmann::json table;
  for (long long n = -per_bound; n <= per_bound; ++n) {
    if (n == 0) continue;
    table[std::to_string(n)] = format_point_set(per_n(s, n));
  }
  j["per_n"] = table;
  return j;
}

nlohmann::json witness_report(const SystemModel& s, const std::string& mode,
                              const std::string& expr) {
  CrossedElement f = parse_element(s, expr);
  nlohmann::json j;
  j["schema_version"] = 1;
  j["mode"] = mode;
  j["input"] = format_element(f);
  if (mode == "in-a") {
    WitnessInA wa = witness_in_A(s, f);
    CrossedElement lifted = CrossedElement::monomial(s, wa.witness, 0);
    j["witness"] = format_element(lifted);
    j["certificate"] = certificate_to_json(wa.cert);
    j["replay_ok"] = x_equal(replay_chain(f, wa.cert), lifted);
    return j;
  }
  if (mode == "in-commutant") {
    WitnessInCommutant wc = witness_in_commutant(s, f);
    j["witness"] = format_element(wc.witness);
    j["iterations"] = wc.iterations;
    j["certificate"] = certificate_to_json(wc.cert);
    j["replay_ok"] = x_equal(replay_chain(f, wc.cert), wc.witness);
    return j;
  }
  fail(Errc::ConfigError, "mode: expected 'in-a' or 'in-commutant'");
}

}  // namespace cpw
