#include "fcoh/faithful.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "fcoh/error.hpp"
#include "fcoh/witness.hpp"

namespace fcoh {

std::string to_string(Verdict v) { return v == Verdict::Faithful ? "faithful" : "unfaithful"; }

std::string to_string(SearchMode m) {
  switch (m) {
    case SearchMode::Full: return "full";
    case SearchMode::Reduced: return "reduced";
    case SearchMode::Phase: return "phase";
  }
  return "full";
}

std::string to_string(Criterion c) { return c == Criterion::SingleSystem ? "single" : "bipartite"; }

SearchMode parse_search_mode(const std::string& s) {
  if (s == "full") return SearchMode::Full;
  if (s == "reduced") return SearchMode::Reduced;
  if (s == "phase") return SearchMode::Phase;
  throw InvalidInput("unknown search mode '" + s + "' (expected full, reduced or phase)");
}

namespace {

void check_enumerable(std::size_t d) {
  if (d < 2) throw InvalidInput("sign-vector search needs dimension >= 2, got " + std::to_string(d));
  if (d > kMaxEnumerationDim) {
    throw InvalidInput("dimension " + std::to_string(d) + " exceeds the exhaustive-search limit " +
                       std::to_string(kMaxEnumerationDim));
  }
}

void fill_pattern(std::size_t d, std::uint64_t mask, std::vector<int>& pattern) {
  pattern[0] = 1;
  for (std::size_t i = 0; i + 1 < d; ++i) pattern[i + 1] = ((mask >> (d - 2 - i)) & 1U) ? -1 : 1;
}

struct Best {
  double overlap = -1.0;
  std::uint64_t mask = 0;
};

// Strictly-greater keeps the first (smallest) mask on ties.
Best scan_masks(const DensityMatrix& rho, std::uint64_t begin, std::uint64_t end) {
  const std::size_t d = rho.dim();
  std::vector<int> pattern(d);
  Best best;
  for (std::uint64_t m = begin; m < end; ++m) {
    fill_pattern(d, m, pattern);
    const double v = sign_overlap(rho, pattern);
    if (v > best.overlap) best = {v, m};
  }
  return best;
}

Best scan_all(const DensityMatrix& rho) {
  const std::uint64_t total = std::uint64_t{1} << (rho.dim() - 1);
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, total >= (1U << 16) ? 64 : 1);
  if (workers == 1) return scan_masks(rho, 0, total);

  std::vector<Best> partial(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t b = std::min(total, w * chunk), e = std::min(total, b + chunk);
      pool.emplace_back([&, w, b, e] { partial[w] = scan_masks(rho, b, e); });
    }
  }
  Best best = partial.front();
  for (const auto& p : partial)
    if (p.overlap > best.overlap) best = p;
  return best;
}

void finish(FaithfulnessReport& r, double eps) {
  r.strictness = eps;
  r.margin = r.best_overlap - r.threshold;
  r.verdict = r.margin > eps ? Verdict::Faithful : Verdict::Unfaithful;
  r.marginal = std::abs(r.margin) <= eps;
}

void attach_qubit_reading(FaithfulnessReport& r, const DensityMatrix& rho) {
  if (rho.dim() != 2) return;
  const double s1 = 2.0 * rho(1, 0).real();
  r.literal_qubit_criterion = s1 > 0.0 && s1 < 1.0;
}

std::vector<std::vector<std::size_t>> first_combinations(std::size_t lo, std::size_t hi, std::size_t k,
                                                         std::size_t limit) {
  // k-subsets of {lo..hi} in lexicographic order, at most `limit` of them.
  std::vector<std::vector<std::size_t>> out;
  if (k == 0 || hi < lo || k > hi - lo + 1) return out;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = lo + i;
  while (out.size() < limit) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == hi - (k - i)) --i;
    if (i == 0) break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

double phase_overlap(const DensityMatrix& rho, const std::vector<double>& theta) {
  const std::size_t d = rho.dim();
  std::vector<Complex> phi(d);
  for (std::size_t j = 0; j < d; ++j) phi[j] = std::polar(1.0, theta[j]);
  return expectation(rho.matrix(), phi) / double(d);
}

PhaseSearch ascend(const DensityMatrix& rho, std::vector<double> theta) {
  const std::size_t d = rho.dim();
  PhaseSearch out;
  double current = phase_overlap(rho, theta);
  for (int sweep = 1; sweep <= kPhaseMaxSweeps; ++sweep) {
    for (std::size_t j = 0; j < d; ++j) {
      Complex field{};
      for (std::size_t k = 0; k < d; ++k)
        if (k != j) field += rho(j, k) * std::polar(1.0, theta[k]);
      if (std::abs(field) > 0.0) theta[j] = std::arg(field);
    }
    const double next = phase_overlap(rho, theta);
    out.sweeps = sweep;
    const double gain = next - current;
    current = std::max(current, next);
    if (gain < kPhaseTolerance) break;
  }
  const double ref = theta[0];
  for (auto& t : theta) {
    t = std::remainder(t - ref, 2.0 * std::numbers::pi);
    if (t <= -std::numbers::pi) t += 2.0 * std::numbers::pi;
  }
  out.phases = std::move(theta);
  out.overlap = phase_overlap(rho, out.phases);
  return out;
}

}  // namespace

std::vector<SignVector> enumerate_sign_vectors(std::size_t d) {
  check_enumerable(d);
  std::vector<SignVector> out;
  const std::uint64_t total = std::uint64_t{1} << (d - 1);
  out.reserve(total);
  for (std::uint64_t m = 0; m < total; ++m) out.push_back(SignVector::from_mask(d, m));
  return out;
}

FaithfulnessReport is_faithful(const DensityMatrix& rho, double eps) {
  const std::size_t d = rho.dim();
  check_enumerable(d);
  const Best best = scan_all(rho);
  FaithfulnessReport r;
  r.mode = SearchMode::Full;
  r.best_overlap = best.overlap;
  r.best_sign = SignVector::from_mask(d, best.mask);
  r.threshold = 1.0 / double(d);
  r.candidates = std::size_t{1} << (d - 1);
  finish(r, eps);
  attach_qubit_reading(r, rho);
  return r;
}

FaithfulnessReport qubit_faithful(const BlochVector& b, double eps) {
  if (!std::isfinite(b.norm()) || b.norm() > 1.0 + 1e-10) throw InvalidInput("qubit_faithful: |s| exceeds 1");
  FaithfulnessReport r;
  r.mode = SearchMode::Full;
  r.best_overlap = (1.0 + std::abs(b.s1)) / 2.0;
  r.best_sign = SignVector{b.s1 < 0.0 ? -1 : 1};
  r.threshold = 0.5;
  r.candidates = 2;
  finish(r, eps);
  r.literal_qubit_criterion = b.s1 > 0.0 && b.s1 < 1.0;
  return r;
}

std::vector<SignVector> reduced_family(std::size_t d) {
  if (d < 2) throw InvalidInput("reduced_family: dimension must be >= 2");
  std::vector<SignVector> out;
  out.reserve(d * (d - 1) / 2);
  for (std::size_t j = 2; j <= d; ++j) {
    const std::size_t pos[] = {j};
    out.push_back(SignVector::flips(d, pos));
  }
  for (std::size_t row = 2; row + 1 <= d; ++row) {
    for (auto& subset : first_combinations(3, d, row - 1, d - row)) {
      subset.insert(subset.begin(), 2);
      out.push_back(SignVector::flips(d, subset));
    }
  }
  return out;
}

FaithfulnessReport screen_reduced(const DensityMatrix& rho, double eps) {
  const std::size_t d = rho.dim();
  if (d < 2) throw InvalidInput("screen_reduced: dimension must be >= 2");
  auto family = reduced_family(d);
  family.insert(family.begin(), SignVector::identity(d));

  FaithfulnessReport r;
  r.mode = SearchMode::Reduced;
  r.best_overlap = -1.0;
  for (const auto& a : family) {
    const double v = sign_overlap(rho, a);
    if (v > r.best_overlap || (v == r.best_overlap && a < r.best_sign)) {
      r.best_overlap = v;
      r.best_sign = a;
    }
  }
  r.threshold = 1.0 / double(d);
  r.candidates = family.size();
  finish(r, eps);
  attach_qubit_reading(r, rho);
  return r;
}

FaithfulnessReport is_faithful_bipartite(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                                         double eps) {
  if (dim_a < 2 || dim_b < 2) throw InvalidInput("bipartite search needs local dimensions >= 2");
  if (dim_a * dim_b != rho.dim()) {
    throw DimensionMismatch("state dimension " + std::to_string(rho.dim()) + " is not " + std::to_string(dim_a) +
                            "x" + std::to_string(dim_b));
  }
  if (dim_a + dim_b - 1 > kMaxEnumerationDim) throw InvalidInput("bipartite search space too large");

  const std::uint64_t na = std::uint64_t{1} << (dim_a - 1);
  const std::uint64_t nb = std::uint64_t{1} << (dim_b - 1);
  std::vector<int> pa(dim_a), pb(dim_b), joint(rho.dim());
  Best best;
  std::uint64_t best_b = 0;
  for (std::uint64_t ma = 0; ma < na; ++ma) {
    fill_pattern(dim_a, ma, pa);
    for (std::uint64_t mb = 0; mb < nb; ++mb) {
      fill_pattern(dim_b, mb, pb);
      for (std::size_t i = 0; i < dim_a; ++i)
        for (std::size_t j = 0; j < dim_b; ++j) joint[i * dim_b + j] = pa[i] * pb[j];
      const double v = sign_overlap(rho, joint);
      if (v > best.overlap) {
        best = {v, ma};
        best_b = mb;
      }
    }
  }

  FaithfulnessReport r;
  r.mode = SearchMode::Full;
  r.criterion = Criterion::Bipartite;
  r.dim_a = dim_a;
  r.dim_b = dim_b;
  r.best_overlap = best.overlap;
  r.best_sign = SignVector::from_mask(dim_a, best.mask);
  r.best_sign_b = SignVector::from_mask(dim_b, best_b);
  r.threshold = 1.0 / double(rho.dim());
  r.literal_threshold = 1.0 / std::sqrt(double(rho.dim()));
  r.candidates = static_cast<std::size_t>(na * nb);
  finish(r, eps);
  return r;
}

PhaseSearch phase_ascent(const DensityMatrix& rho, std::vector<double> start) {
  const std::size_t d = rho.dim();
  if (d < 1) throw InvalidInput("phase_ascent: empty state");
  if (!start.empty()) {
    if (start.size() != d) throw DimensionMismatch("phase_ascent: start vector length mismatch");
    return ascend(rho, std::move(start));
  }

  // Two deterministic starts: the best sign vector, and the phases of the
  // leading eigenvector.
  std::vector<double> from_signs(d, 0.0);
  if (d >= 2 && d <= kMaxEnumerationDim) {
    const auto pattern = SignVector::from_mask(d, scan_all(rho).mask).pattern();
    for (std::size_t j = 0; j < d; ++j) from_signs[j] = pattern[j] < 0 ? std::numbers::pi : 0.0;
  }
  PhaseSearch best = ascend(rho, from_signs);

  const auto eig = hermitian_eig(rho.matrix());
  std::vector<double> from_eigvec(d);
  for (std::size_t j = 0; j < d; ++j) from_eigvec[j] = std::arg(eig.eigenvectors(j, d - 1));
  PhaseSearch alt = ascend(rho, from_eigvec);
  if (alt.overlap > best.overlap + kPhaseTolerance) best = std::move(alt);
  return best;
}

FaithfulnessReport phase_screen(const DensityMatrix& rho, double eps) {
  FaithfulnessReport r = is_faithful(rho, eps);
  r.mode = SearchMode::Phase;
  r.phase = phase_ascent(rho);
  r.phase_detectable = r.phase->overlap - r.threshold > eps;
  return r;
}

FaithfulnessReport check_faithfulness(const DensityMatrix& rho, SearchMode mode, double eps) {
  switch (mode) {
    case SearchMode::Full: return is_faithful(rho, eps);
    case SearchMode::Reduced: return screen_reduced(rho, eps);
    case SearchMode::Phase: return phase_screen(rho, eps);
  }
  return is_faithful(rho, eps);
}

}  // namespace fcoh
