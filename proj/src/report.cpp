#include "orsolv/report.hpp"

#include <sstream>

#include "orsolv/errors.hpp"
#include "orsolv/magnus.hpp"

namespace orsolv {

namespace {

std::string gen_name(const std::vector<std::string>& names, int g) {
  if (g >= 0 && g < static_cast<int>(names.size())) return names[g];
  return "g" + std::to_string(g);
}

}  // namespace

std::string status_string(Status s) {
  switch (s) {
    case Status::CertifiedResiduallySolvable: return "certified";
    case Status::KnownNotResiduallySolvable: return "known_not_residually_solvable";
    case Status::Unknown: break;
  }
  return "unknown";
}

nlohmann::json witness_to_json(const OneRelatorPresentation& p, const Certificate& c) {
  const auto& names = p.generators;
  nlohmann::json j = nlohmann::json::object();
  std::visit(
      [&](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, FreeGroupWitness>) {
          // nothing to record
        } else if constexpr (std::is_same_v<T, PositiveRelatorWitness>) {
          j["positive_form"] = to_string(w.positive_form, names);
          j["inverted"] = w.inverted;
        } else if constexpr (std::is_same_v<T, PositiveQuotientWitness> ||
                             std::is_same_v<T, PositiveCommutatorWitness>) {
          j["u"] = to_string(w.u, names);
          j["w"] = to_string(w.w, names);
        } else if constexpr (std::is_same_v<T, MagnusWitness>) {
          j["eliminated"] = gen_name(names, w.verdict.eliminated);
          j["witness"] = gen_name(names, w.verdict.witness);
          j["mu"] = w.verdict.min_subscript;
          j["nu"] = w.verdict.max_subscript;
          j["span"] = w.verdict.span;
          if (w.verdict.claimed_rank) j["claimed_rank"] = *w.verdict.claimed_rank;
        } else if constexpr (std::is_same_v<T, PowerFamilyWitness>) {
          j["a"] = gen_name(names, w.gen_a);
          j["b"] = gen_name(names, w.gen_b);
          j["n"] = w.n;
        } else if constexpr (std::is_same_v<T, TowerWitness>) {
          j["x"] = gen_name(names, w.gen_x);
          j["y"] = gen_name(names, w.gen_y);
          j["k"] = w.k;
        } else if constexpr (std::is_same_v<T, SurfaceWitness>) {
          nlohmann::json gens = nlohmann::json::array();
          for (int g : w.gens) gens.push_back(gen_name(names, g));
          j["gens"] = std::move(gens);
          j["genus"] = w.genus;
        }
      },
      c.witness);
  return j;
}

AnalysisReport build_report(const OneRelatorPresentation& p, const Verdict& v,
                            double timing_ms) {
  AnalysisReport r;
  r.generators = p.generators;
  r.relator = p.relator.empty() && p.relator_expr ? to_string(*p.relator_expr, p.generators)
                                                  : to_string(p.relator, p.generators);
  r.status = status_string(v.status);
  for (const Certificate& c : v.certificates) {
    r.certificates.push_back({to_string(c.kind), witness_to_json(p, c), c.paper_ref});
  }
  if (v.counterexample) {
    r.counterexample = CounterexampleSection{v.counterexample->family,
                                             gen_name(p.generators, v.counterexample->gen_a),
                                             gen_name(p.generators, v.counterexample->gen_b)};
  }

  if (!p.relator_cyclic.empty()) {
    std::vector<MagnusVerdict> verdicts = lemma_check(p);
    if (!verdicts.empty()) {
      const MagnusVerdict* chosen = &verdicts.front();
      for (const MagnusVerdict& mv : verdicts) {
        if (mv.applicable) {
          chosen = &mv;
          break;
        }
      }
      MagnusSection m;
      m.eliminated = gen_name(p.generators, chosen->eliminated);
      m.r0 = to_string(magnus_rewrite(p, chosen->eliminated).word0, p.generators);
      m.mu = chosen->min_subscript;
      m.nu = chosen->max_subscript;
      m.span = chosen->span;
      m.applicable = chosen->applicable;
      r.magnus = std::move(m);
    }
  }

  r.timing_ms = timing_ms;
  return r;
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["schema"] = r.schema;
  j["presentation"]["generators"] = r.generators;
  j["presentation"]["relator"] = r.relator;
  j["status"] = r.status;
  nlohmann::json certs = nlohmann::json::array();
  for (const CertificateEntry& c : r.certificates) {
    certs.push_back({{"kind", c.kind}, {"witness", c.witness}, {"paper_ref", c.paper_ref}});
  }
  j["certificates"] = std::move(certs);
  if (r.counterexample) {
    j["counterexample"] = {{"family", r.counterexample->family},
                           {"a", r.counterexample->a},
                           {"b", r.counterexample->b}};
  }
  if (r.magnus) {
    j["magnus"] = {{"eliminated", r.magnus->eliminated},
                   {"r0", r.magnus->r0},
                   {"mu", r.magnus->mu},
                   {"nu", r.magnus->nu},
                   {"span", r.magnus->span},
                   {"applicable", r.magnus->applicable}};
  }
  if (r.oracle) {
    nlohmann::json o;
    o["word"] = r.oracle->word;
    o["separated"] = r.oracle->separated;
    if (r.oracle->separated) {
      o["group"] = r.oracle->group;
      o["images"] = r.oracle->images;
    }
    o["abelianization"] = r.oracle->abelianization;
    j["oracle"] = std::move(o);
  }
  j["timing_ms"] = r.timing_ms;
  return j;
}

AnalysisReport report_from_json(const nlohmann::json& j) {
  AnalysisReport r;
  r.schema = j.at("schema").get<std::string>();
  if (r.schema != "orsolv/1") throw Error("unsupported report schema " + r.schema);
  r.generators = j.at("presentation").at("generators").get<std::vector<std::string>>();
  r.relator = j.at("presentation").at("relator").get<std::string>();
  r.status = j.at("status").get<std::string>();
  for (const auto& c : j.at("certificates")) {
    r.certificates.push_back({c.at("kind").get<std::string>(), c.at("witness"),
                              c.at("paper_ref").get<std::string>()});
  }
  if (j.contains("counterexample")) {
    const auto& c = j.at("counterexample");
    r.counterexample = CounterexampleSection{c.at("family").get<std::string>(),
                                             c.at("a").get<std::string>(),
                                             c.at("b").get<std::string>()};
  }
  if (j.contains("magnus")) {
    const auto& m = j.at("magnus");
    r.magnus = MagnusSection{m.at("eliminated").get<std::string>(),
                             m.at("r0").get<std::string>(),
                             m.at("mu").get<long long>(),
                             m.at("nu").get<long long>(),
                             m.at("span").get<long long>(),
                             m.at("applicable").get<bool>()};
  }
  if (j.contains("oracle")) {
    const auto& o = j.at("oracle");
    OracleSection s;
    s.word = o.at("word").get<std::string>();
    s.separated = o.at("separated").get<bool>();
    if (s.separated) {
      s.group = o.at("group").get<std::string>();
      s.images = o.at("images").get<std::vector<int>>();
    }
    s.abelianization = o.at("abelianization").get<std::string>();
    r.oracle = std::move(s);
  }
  r.timing_ms = j.at("timing_ms").get<double>();
  return r;
}

std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "schema: " << r.schema << "\n";
  os << "presentation: < ";
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    if (i) os << ", ";
    os << r.generators[i];
  }
  os << " ; " << r.relator << " >\n";
  os << "status: " << r.status << "\n";
  if (r.certificates.empty()) {
    os << "certificates: none\n";
  } else {
    for (std::size_t i = 0; i < r.certificates.size(); ++i) {
      const CertificateEntry& c = r.certificates[i];
      os << "certificate" << (i == 0 ? " (primary): " : ": ") << c.kind << "\n";
      os << "  witness: " << c.witness.dump() << "\n";
      os << "  ref: " << c.paper_ref << "\n";
    }
  }
  if (r.counterexample) {
    os << "counterexample: family " << r.counterexample->family << " with a="
       << r.counterexample->a << ", b=" << r.counterexample->b << "\n";
  }
  if (r.magnus) {
    os << "magnus: eliminate " << r.magnus->eliminated << ", r0 = " << r.magnus->r0
       << ", mu=" << r.magnus->mu << ", nu=" << r.magnus->nu << ", span=" << r.magnus->span
       << ", " << (r.magnus->applicable ? "applicable" : "not applicable") << "\n";
  }
  if (r.oracle) {
    os << "oracle: word " << r.oracle->word << " ";
    if (r.oracle->separated) {
      os << "separated by " << r.oracle->group << " via images (";
      for (std::size_t i = 0; i < r.oracle->images.size(); ++i) {
        if (i) os << ", ";
        os << r.oracle->images[i];
      }
      os << ")";
    } else {
      os << "NOT SEPARATED within catalog";
    }
    os << "; abelianization " << r.oracle->abelianization << "\n";
  }
  os << "timing_ms: " << r.timing_ms << "\n";
  return os.str();
}

}  // namespace orsolv
