#include "ccs/workbench/generators.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ccs/core/random.hpp"

namespace ccs {

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::RandomRealizable: return "RANDOM_REALIZABLE";
    case GeneratorKind::GridRealizable: return "GRID_REALIZABLE";
    case GeneratorKind::Mutated: return "MUTATED";
  }
  return "UNKNOWN";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view text) {
  std::string s(text);
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (s == "RANDOM_REALIZABLE" || s == "RANDOM") return GeneratorKind::RandomRealizable;
  if (s == "GRID_REALIZABLE" || s == "GRID") return GeneratorKind::GridRealizable;
  if (s == "MUTATED") return GeneratorKind::Mutated;
  return std::nullopt;
}

namespace {

bool fits_general_position(const std::vector<Point>& pts, const Point& p) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == p) return false;
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (orientation_sign(pts[i], pts[j], p) == 0) return false;
  }
  return true;
}

PseudoConfiguration random_points(int n, Rng& rng) {
  const std::int64_t hi = 4 * static_cast<std::int64_t>(n) * n * n;
  std::vector<Point> pts;
  int attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (++attempts > kGeneratorAttempts) throw Error(ErrorCode::ExhaustedAttempts, "point sampling budget exhausted");
    Point p{Rational(uniform_int(rng, 0, hi)), Rational(uniform_int(rng, 0, hi))};
    if (fits_general_position(pts, p)) pts.push_back(p);
  }
  return PseudoConfiguration::from_points(std::move(pts));
}

bool is_prime(std::int64_t v) {
  if (v < 2) return false;
  for (std::int64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

PseudoConfiguration grid_points(int n, Rng& rng) {
  std::int64_t p = 2 * static_cast<std::int64_t>(n);
  while (!is_prime(p)) ++p;
  const std::int64_t a = uniform_int(rng, 0, p - 1);
  const std::int64_t b = uniform_int(rng, 0, p - 1);
  std::vector<std::int64_t> xs(p);
  for (std::int64_t x = 0; x < p; ++x) xs[x] = x;
  shuffle(xs, rng);
  xs.resize(n);
  std::vector<Point> pts;
  for (std::int64_t x : xs) pts.push_back({Rational(x), Rational(((x * x + a * x + b) % p + p) % p)});
  return PseudoConfiguration::from_points(std::move(pts));
}

PseudoConfiguration mutated(const GeneratorSpec& spec, Rng& rng) {
  const PseudoConfiguration base = random_points(spec.n, rng);
  if (spec.flips <= 0) return PseudoConfiguration::unchecked(base.size(), {base.signs().begin(), base.signs().end()});
  const std::size_t count = triple_count(spec.n);
  for (int attempt = 0; attempt < kGeneratorAttempts; ++attempt) {
    std::vector<Sign> signs(base.signs().begin(), base.signs().end());
    for (int f = 0; f < spec.flips; ++f) {
      Sign& s = signs[uniform_below(rng, count)];
      s = -s;
    }
    auto candidate = PseudoConfiguration::unchecked(spec.n, std::move(signs));
    if (satisfies_axioms(candidate)) return candidate;
  }
  throw Error(ErrorCode::ExhaustedAttempts, "no valid mutant within the attempt budget");
}

}  // namespace

PseudoConfiguration generate(const GeneratorSpec& spec) {
  if (spec.n < 3) throw Error(ErrorCode::NTooSmall, "generators need n >= 3");
  if (spec.flips < 0) throw Error(ErrorCode::InvalidArgument, "flips must be >= 0");
  Rng rng(spec.seed);
  switch (spec.kind) {
    case GeneratorKind::RandomRealizable: return random_points(spec.n, rng);
    case GeneratorKind::GridRealizable: return grid_points(spec.n, rng);
    case GeneratorKind::Mutated: return mutated(spec, rng);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown generator kind");
}

PseudoConfiguration gen_realizable(const GeneratorSpec& spec) {
  if (spec.kind == GeneratorKind::Mutated) throw Error(ErrorCode::InvalidArgument, "MUTATED is not a realizable kind");
  return generate(spec);
}

PseudoConfiguration gen_spiked_square(int n, std::uint64_t seed) {
  if (n < 4) throw Error(ErrorCode::NTooSmall, "spiked square needs n >= 4");
  constexpr std::int64_t L = 4096;
  Rng rng(seed);
  std::vector<Point> pts{{0, 0}, {L, 0}, {L, L}, {0, L}};
  int attempts = 0;
  while (static_cast<int>(pts.size()) < n) {
    if (++attempts > kGeneratorAttempts) throw Error(ErrorCode::ExhaustedAttempts, "point sampling budget exhausted");
    // Bottom spike: 0 < u < L, -L <= -v < 0; the other spikes are rotations.
    const std::int64_t u = uniform_int(rng, 1, L - 1);
    const std::int64_t v = uniform_int(rng, 1, L);
    Point p;
    switch (uniform_below(rng, 4)) {
      case 0: p = {Rational(u), Rational(-v)}; break;
      case 1: p = {Rational(L + v), Rational(u)}; break;
      case 2: p = {Rational(L - u), Rational(L + v)}; break;
      default: p = {Rational(-v), Rational(L - u)}; break;
    }
    if (fits_general_position(pts, p)) pts.push_back(p);
  }
  return PseudoConfiguration::from_points(std::move(pts));
}

Mutation mutate(const PseudoConfiguration& cfg, std::span<const Triple> flips) {
  const int n = cfg.size();
  std::vector<Sign> signs(cfg.signs().begin(), cfg.signs().end());
  for (Triple t : flips) {
    check_distinct_labels(cfg, {t[0], t[1], t[2]});
    std::sort(t.begin(), t.end());
    Sign& s = signs[triple_index(n, t[0], t[1], t[2])];
    s = -s;
  }
  Mutation m{PseudoConfiguration::unchecked(n, std::move(signs)), {}};
  m.report = validate_axioms(m.candidate);
  return m;
}

}  // namespace ccs
