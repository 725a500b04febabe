#include "wlplab/wlp.hpp"

#include <algorithm>
#include <stdexcept>

#include "wlplab/algebra.hpp"
#include "wlplab/rank_kernels.hpp"

namespace wlplab {

std::string to_string(CertifyMode m) {
  switch (m) {
    case CertifyMode::Auto: return "auto";
    case CertifyMode::Exact: return "exact";
    case CertifyMode::Fast: return "fast";
  }
  return "auto";
}

CertifyMode parse_certify_mode(const std::string& text) {
  if (text == "auto") return CertifyMode::Auto;
  if (text == "exact") return CertifyMode::Exact;
  if (text == "fast") return CertifyMode::Fast;
  throw std::invalid_argument("unknown certify mode '" + text + "'");
}

std::string to_string(FailureSense s) { return s == FailureSense::Surjective ? "surjective" : "injective"; }

namespace {

RankMethod parse_method(const std::string& s) {
  if (s == "modular") return RankMethod::Modular;
  if (s == "exact-elimination") return RankMethod::ExactElimination;
  if (s == "kernel-certificate") return RankMethod::KernelCertificate;
  throw std::invalid_argument("unknown rank method '" + s + "'");
}

void validate(const WlpOptions& o) {
  if (o.characteristic != 0 && !kernels::is_prime(o.characteristic))
    throw std::invalid_argument("characteristic must be 0 or a prime, got " + std::to_string(o.characteristic));
}

DegreeRankRecord rank_record(const Graph& g, const DegreeBasis& src, const DegreeBasis& dst, const WlpOptions& o) {
  DegreeRankRecord rec;
  rec.k = src.k;
  rec.h_k = src.sets.size();
  rec.h_k1 = dst.sets.size();
  const std::size_t full = std::min(rec.h_k, rec.h_k1);
  if (full == 0) {
    rec.rank = 0;
  } else {
    const SparseMatrix m = lefschetz_matrix(g, src, dst);
    RankOptions ro;
    ro.seed = o.seed ^ (0x9e3779b97f4a7c15ull * (src.k + 1));
    ro.threads = o.threads;
    RankResult res;
    if (o.characteristic != 0) {
      res = rank_mod_p(m, o.characteristic, RankField::PrimeField, o.threads);
    } else if (o.certify == CertifyMode::Exact) {
      res = rank_exact(m);
    } else {
      std::mt19937_64 rng(ro.seed);
      res = rank_mod_p(m, random_prime(rng), RankField::Rational, o.threads);
      if (!res.certified && o.certify == CertifyMode::Auto) {
        if (std::max(rec.h_k, rec.h_k1) > o.max_basis && !o.override_budget) {
          rec.budget_exceeded = true;
        } else {
          res = rank_certified(m, ro);
        }
      }
    }
    rec.rank = res.rank;
    rec.certified = res.certified;
    rec.method = res.method;
  }
  rec.injective_fail = rec.rank < rec.h_k;
  rec.surjective_fail = rec.rank < rec.h_k1;
  return rec;
}

}  // namespace

std::vector<std::size_t> WlpVerdict::deficient_degrees() const {
  std::vector<std::size_t> out;
  for (const auto& r : records)
    if (!r.max_rank()) out.push_back(r.k);
  return out;
}

nlohmann::json WlpVerdict::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json e{{"k", r.k},
                     {"h_k", r.h_k},
                     {"h_k1", r.h_k1},
                     {"rank", r.rank},
                     {"injective_fail", r.injective_fail},
                     {"surjective_fail", r.surjective_fail},
                     {"method", to_string(r.method)}};
    if (!r.certified) e["certified"] = false;
    if (r.budget_exceeded) e["budget_exceeded"] = true;
    recs.push_back(std::move(e));
  }
  nlohmann::json j{{"spec", spec},
                   {"characteristic", characteristic},
                   {"has_wlp", has_wlp},
                   {"socle_degree", socle_degree},
                   {"records", std::move(recs)}};
  if (!complete) j["complete"] = false;
  return j;
}

WlpVerdict WlpVerdict::from_json(const nlohmann::json& j) {
  WlpVerdict v;
  v.spec = j.at("spec").get<std::string>();
  v.characteristic = j.at("characteristic").get<std::uint64_t>();
  v.has_wlp = j.at("has_wlp").get<bool>();
  v.socle_degree = j.at("socle_degree").get<std::size_t>();
  v.complete = j.value("complete", true);
  for (const auto& e : j.at("records")) {
    DegreeRankRecord r;
    r.k = e.at("k").get<std::size_t>();
    r.h_k = e.at("h_k").get<std::size_t>();
    r.h_k1 = e.at("h_k1").get<std::size_t>();
    r.rank = e.at("rank").get<std::size_t>();
    r.injective_fail = e.at("injective_fail").get<bool>();
    r.surjective_fail = e.at("surjective_fail").get<bool>();
    r.method = parse_method(e.at("method").get<std::string>());
    r.certified = e.value("certified", true);
    r.budget_exceeded = e.value("budget_exceeded", false);
    v.records.push_back(r);
  }
  return v;
}

DegreeRankRecord degree_rank(const Graph& g, std::size_t k, const WlpOptions& options) {
  validate(options);
  auto bases = all_degree_bases(g);
  const DegreeBasis empty_k{k, {}}, empty_k1{k + 1, {}};
  return rank_record(g, k < bases.size() ? bases[k] : empty_k, k + 1 < bases.size() ? bases[k + 1] : empty_k1,
                     options);
}

WlpVerdict wlp_check(const Graph& g, const WlpOptions& options, const std::string& spec) {
  validate(options);
  WlpVerdict v;
  v.spec = spec;
  v.characteristic = options.characteristic;
  auto bases = all_degree_bases(g);
  v.socle_degree = bases.size() - 1;
  bases.push_back(DegreeBasis{bases.size(), {}});

  v.records.resize(v.socle_degree + 1);
  for (std::size_t k = 0; k <= v.socle_degree; ++k) v.records[k] = rank_record(g, bases[k], bases[k + 1], options);

  v.has_wlp = true;
  for (const auto& r : v.records) {
    if (r.budget_exceeded) v.complete = false;
    if (!r.max_rank() || r.budget_exceeded) v.has_wlp = false;
  }

  std::vector<mpz_class> h;
  for (std::size_t k = 0; k <= v.socle_degree; ++k) h.emplace_back(static_cast<unsigned long>(bases[k].sets.size()));
  if (v.has_wlp && !unimodality_report(IntPolynomial(std::move(h))).is_unimodal)
    throw std::logic_error("rank computation reports WLP for a non-unimodal Hilbert series");
  return v;
}

IntPolynomial hilbert_quotient(const Graph& g, const WlpOptions& options) {
  auto v = wlp_check(g, options);
  std::vector<mpz_class> c;
  for (std::size_t k = 0; k <= v.socle_degree; ++k) {
    const std::size_t prev_rank = k == 0 ? 0 : v.records[k - 1].rank;
    c.emplace_back(static_cast<unsigned long>(v.records[k].h_k - prev_rank));
  }
  return IntPolynomial(std::move(c));
}

TensorWitness tensor_failure_witness(const Graph& g1, std::size_t i, const Graph& g2, std::size_t j,
                                     FailureSense sense, const WlpOptions& options) {
  auto fails = [&](const DegreeRankRecord& r) {
    return sense == FailureSense::Surjective ? r.surjective_fail : r.injective_fail;
  };
  TensorWitness w;
  w.hypothesis_holds = fails(degree_rank(g1, i, options)) && fails(degree_rank(g2, j, options));
  if (!w.hypothesis_holds) return w;
  const std::size_t target = sense == FailureSense::Surjective ? i + j + 1 : i + j;
  w.confirmed = fails(degree_rank(disjoint_union(g1, g2), target, options));
  return w;
}

}  // namespace wlplab
