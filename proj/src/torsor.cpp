#include "toric/torsor.hpp"

#include <algorithm>
#include <random>

#include "toric/errors.hpp"

namespace toric {

namespace {

PicardGroup nerve_group(const SimplicialComplex& k, std::size_t n, std::string provenance) {
  if (n == 0) throw InputError("picard_group: torus dimension must be positive");
  const Cover cover = open_star_cover(k);
  auto group =
      std::make_shared<const CohomologyGroup>(cover.nerve, Coefficients::integers_plus_reals(n), 2);
  return PicardGroup(std::move(group), std::move(provenance));
}

std::string complex_summary(const SimplicialComplex& k) {
  std::string out = "open-star nerve of a complex with f-vector (";
  for (int d = 0; d <= k.dimension(); ++d)
    out += (d ? "," : "") + std::to_string(k.simplices(static_cast<std::size_t>(d)).size());
  return out + ")";
}

class ClassSampler {
 public:
  ClassSampler(const PicardGroup& g, std::uint64_t seed) : group_(g), rng_(seed) {}

  PicClass next() {
    const auto& p = group_.presentation();
    std::uniform_int_distribution<long long> integer(-1000, 1000);
    std::uniform_int_distribution<long long> denominator(1, 64);
    LatticeVector free, torsion;
    RationalVector real;
    for (std::size_t i = 0; i < p.free_rank; ++i) free.push_back(integer(rng_));
    for (const auto& t : p.torsion) {
      std::uniform_int_distribution<long long> residue(0, static_cast<long long>(t) - 1);
      torsion.push_back(residue(rng_));
    }
    for (std::size_t i = 0; i < p.real_dim; ++i) {
      const long long num = integer(rng_);
      real.push_back(Rational(num, denominator(rng_)));
    }
    return group_.element(std::move(free), std::move(torsion), std::move(real));
  }

 private:
  const PicardGroup& group_;
  std::mt19937_64 rng_;
};

}  // namespace

PicardGroup::PicardGroup(std::shared_ptr<const CohomologyGroup> group, std::string provenance)
    : group_(std::move(group)), provenance_(std::move(provenance)) {}

PicClass PicardGroup::element(LatticeVector free, LatticeVector torsion, RationalVector real) const {
  return {make_class(group_->presentation_ptr(), std::move(free), std::move(torsion), std::move(real))};
}

std::vector<PicClass> PicardGroup::generators() const {
  std::vector<PicClass> out;
  for (auto& c : group_->generators()) out.push_back({std::move(c)});
  return out;
}

std::optional<std::vector<PicClass>> PicardGroup::elements(std::size_t limit) const {
  const auto& p = presentation();
  if (!p.is_finite() || p.order() > limit) return std::nullopt;
  std::vector<PicClass> out;
  LatticeVector digits(p.torsion.size(), Integer(0));
  for (;;) {
    out.push_back(element({}, digits, {}));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == p.torsion[i]) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

PicardGroup picard_group(const SimplicialComplex& k, std::size_t n) {
  return nerve_group(k, n, complex_summary(k));
}

PicardGroup picard_group(const PolyhedralDomain& w, std::size_t n) {
  const SimplicialComplex k = triangulate(w);
  return nerve_group(k, n,
                     "triangulated domain with " + std::to_string(w.cells().size()) + " cells; " +
                         complex_summary(k));
}

PicClass tensor(const PicClass& a, const PicClass& b) { return {class_add(a.value, b.value)}; }

StmClass act(const PicClass& p, const StmClass& m) { return {class_add(p.value, m.offset)}; }

PicClass difference(const StmClass& m2, const StmClass& m1) {
  return {class_sub(m2.offset, m1.offset)};
}

std::optional<Integer> StmTorsor::count() const {
  const auto& p = group_.presentation();
  if (!p.is_finite()) return std::nullopt;
  return p.order();
}

void AxiomCheck::record(bool ok) {
  ++witnesses;
  if (!ok) {
    ++failures;
    pass = false;
  }
}

bool TorsorReport::all_pass() const {
  return identity.pass && compatibility.pass && freeness.pass && transitivity.pass;
}

std::string TorsorReport::mode() const {
  return exhaustive ? "exhaustive" : "sampled(" + std::to_string(seed) + ")";
}

TorsorReport verify_torsor(const StmTorsor& t, std::uint64_t seed, std::size_t samples) {
  const PicardGroup& g = t.group();
  TorsorReport report;
  report.picard = g.presentation();
  report.stm_count = t.count();
  report.seed = seed;

  const PicClass zero = g.neutral();
  const StmClass base = t.base_point();
  auto check_identity = [&](const StmClass& m) { report.identity.record(act(zero, m) == m); };
  auto check_compatibility = [&](const PicClass& p, const PicClass& q, const StmClass& m) {
    report.compatibility.record(act(p, act(q, m)) == act(tensor(p, q), m));
  };
  // act(p, m) == m exactly when p is neutral.
  auto check_freeness = [&](const PicClass& p, const StmClass& m) {
    report.freeness.record((act(p, m) == m) == (p == zero));
  };
  auto check_transitivity = [&](const StmClass& m1, const StmClass& m2) {
    report.transitivity.record(act(difference(m2, m1), m1) == m2);
  };

  if (auto all = g.elements(kExhaustiveLimit)) {
    report.exhaustive = true;
    std::vector<StmClass> points;
    for (const auto& p : *all) points.push_back(act(p, base));
    for (const auto& m : points) check_identity(m);
    for (const auto& p : *all)
      for (const auto& q : *all)
        for (const auto& m : points) check_compatibility(p, q, m);
    for (const auto& p : *all)
      for (const auto& m : points) check_freeness(p, m);
    for (const auto& m1 : points)
      for (const auto& m2 : points) {
        // difference(m2, m1) works and is the only element that does.
        const auto solutions = std::count_if(all->begin(), all->end(),
                                             [&](const PicClass& p) { return act(p, m1) == m2; });
        report.transitivity.record(act(difference(m2, m1), m1) == m2 && solutions == 1);
      }
    return report;
  }

  report.samples = samples;
  ClassSampler sampler(g, seed);
  std::vector<PicClass> probes{zero};
  for (const auto& x : g.generators()) {
    probes.push_back(x);
    probes.push_back({class_neg(x.value)});
  }
  const std::size_t fixed = probes.size();
  for (std::size_t i = 0; i < samples; ++i) probes.push_back(sampler.next());
  std::vector<StmClass> points;
  for (std::size_t i = 0; i < probes.size(); ++i)
    points.push_back(act(probes[(i * 7 + 3) % probes.size()], base));

  const std::size_t count = probes.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& p = probes[i];
    const auto& q = probes[(i + 1) % count];
    const auto& m = points[(i + 2) % count];
    check_identity(points[i]);
    check_compatibility(p, q, m);
    check_freeness(p, points[i]);
    check_transitivity(points[i], points[(i + 1) % count]);
  }
  // Generators against each other and the base point.
  for (std::size_t i = 0; i < fixed; ++i)
    for (std::size_t j = 0; j < fixed; ++j) {
      check_compatibility(probes[i], probes[j], base);
      check_transitivity(act(probes[i], base), act(probes[j], base));
    }
  return report;
}

}  // namespace toric
